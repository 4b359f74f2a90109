"""Constructive colorers. Every public function returns a certified coloring."""

from .balanced import (Balanced, TwoColoringSpec, almost_majority_4, auxiliary_bipartite,
                       color_via_asymmetric_subgraph, combine_majority, eulerian_2coloring,
                       majority3_bipartite, majority3_symmetric_digraph, two_coloring_balanced)
from .digraph import color_symmetric_digraph
from .main import (color_2connected, color_connectivity1, color_k2n_graph, color_main,
                   color_symmetric_tree_attachment, enumerate_block_colorings)
from .special import (K5_COLORING, K6_COLORING, color_complete, color_K2n, color_traceable_mindeg4,
                      fixture_coloring, k2n_colors)
from .spheres import color_C0, lemma_H_coloring, regime_multisets

__all__ = [
    "Balanced", "TwoColoringSpec", "almost_majority_4", "auxiliary_bipartite",
    "color_via_asymmetric_subgraph", "combine_majority", "eulerian_2coloring",
    "majority3_bipartite", "majority3_symmetric_digraph", "two_coloring_balanced",
    "color_symmetric_digraph", "color_2connected", "color_connectivity1", "color_k2n_graph", "color_main",
    "color_symmetric_tree_attachment", "enumerate_block_colorings", "K5_COLORING", "K6_COLORING",
    "color_complete", "color_K2n", "color_traceable_mindeg4", "fixture_coloring", "k2n_colors",
    "color_C0", "lemma_H_coloring", "regime_multisets",
]
