"""Majority, distinguishing and majority distinguishing edge colorings.

Graphs and symmetric digraphs, exact brute-force indices, certified
constructions, and a command-line front end.
"""

from .coloring import ArcColoring, EdgeColoring, ZERO, ZERO_PRIME
from .errors import MajicolorError
from .graph import Digraph, Graph, symmetric_closure
from .verify import IndexKind, VerificationReport

__version__ = "0.1.0"

__all__ = ["ArcColoring", "EdgeColoring", "ZERO", "ZERO_PRIME", "MajicolorError", "Digraph", "Graph",
           "symmetric_closure", "IndexKind", "VerificationReport", "__version__"]
