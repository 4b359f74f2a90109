import math
import random
from collections import Counter

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import is_arc_majority, is_md, is_strict_majority, nx_arc_aut_count, nx_aut_count, tallies
from majicolor.automorphism import color_preserving_group, colorings_isomorphic, stabilizer
from majicolor.coloring import ZERO, ZERO_PRIME, EdgeColoring
from majicolor.construct import (TwoColoringSpec, almost_majority_4, auxiliary_bipartite, color_2connected,
                                 color_C0, color_complete, color_connectivity1, color_K2n, color_main,
                                 color_symmetric_digraph, color_symmetric_tree_attachment,
                                 color_traceable_mindeg4, color_via_asymmetric_subgraph, combine_majority,
                                 enumerate_block_colorings, eulerian_2coloring, k2n_colors, lemma_H_coloring,
                                 majority3_bipartite, majority3_symmetric_digraph, regime_multisets,
                                 two_coloring_balanced)
from majicolor.errors import (BadColors, CycleTooShort, EmptyGraph, HypothesisViolated, MinDegreeTooSmall,
                              NoAsymmetricSubgraphFound, NotBipartite, NotConnectivity1, NotEulerian,
                              NotSymmetric, NotTwoConnected, OddEdgeCount, PaletteOverlap, PaletteTooSmall,
                              PathNotSpanning, PendantEdgePresent, PreconditionError,
                              PreconditionGeodesicFailed)
from majicolor.exact import exact_index
from majicolor.families import (FamilySpec, family_circuit, generate, glue_at_vertex, random_bipartite_graph,
                                random_connected_graph, random_min_degree_graph)
from majicolor.graph import Digraph, Graph, complete_graph, cycle_graph, path_graph, symmetric_closure
from majicolor.verify import verify_majority


def ceil_sqrt(x):
    return math.isqrt(x - 1) + 1


def k(n):
    return generate(FamilySpec("complete_bipartite", [2, n]))


def friendship(t):
    edges = []
    for i in range(t):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return Graph(2 * t + 1, edges)


# balanced two-colorings ----------------------------------------------------------------

def check_balanced(g, res, spec=None):
    t = tallies(g, res.coloring.assignment)
    case_two = all(d % 2 == 0 for d in g.degrees()) and g.m % 2 == 1
    if not case_two:
        assert res.special == ()
        assert all(cnt <= -(-g.degree(v) // 2) for v in range(g.n) for cnt in t[v].values())
    else:
        (u,) = res.special
        for v in range(g.n):
            counts = sorted(t[v].values()) if t[v] else [0]
            if v == u:
                assert counts[-1] == g.degree(v) // 2 + 1
            else:
                assert all(c == g.degree(v) // 2 for c in t[v].values())
        if spec is not None and spec.special_vertex is not None:
            assert u == spec.special_vertex


def test_two_coloring_examples():
    c4 = cycle_graph(4)
    res = two_coloring_balanced(c4)
    assert all(cnt == 1 for t in tallies(c4, res.coloring.assignment) for cnt in t.values())
    spec = TwoColoringSpec(special_vertex=1)
    res = two_coloring_balanced(cycle_graph(3), spec)
    assert res.special == (1,)
    check_balanced(cycle_graph(3), res, spec)
    k4 = complete_graph(4)
    res = two_coloring_balanced(k4)
    check_balanced(k4, res)
    with pytest.raises(EmptyGraph):
        two_coloring_balanced(Graph(3, []))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 30), st.floats(0.05, 0.6), st.integers(0, 10 ** 6))
def test_two_coloring_property(n, p, seed):
    rng = random.Random(seed)
    g = random_connected_graph(n, p, rng)
    if g.m == 0:
        return
    spec = TwoColoringSpec(special_vertex=rng.randrange(n))
    check_balanced(g, two_coloring_balanced(g, spec, seed=seed), spec)


# almost majority ---------------------------------------------------------------------

def test_almost_majority_examples():
    c = almost_majority_4(cycle_graph(4))
    assert c.colors_used == 2 and verify_majority(cycle_graph(4), c, "strict").passed
    c = almost_majority_4(cycle_graph(5))
    assert c.colors_used <= 4 and verify_majority(cycle_graph(5), c, "almost").passed
    g = random_min_degree_graph(12, 0.3, random.Random(4))
    c = almost_majority_4(g)
    assert c.colors_used <= 4 and verify_majority(g, c, "almost").passed


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 30), st.floats(0.05, 0.6), st.integers(0, 10 ** 6))
def test_almost_majority_property(n, p, seed):
    g = random_connected_graph(n, p, random.Random(seed))
    if g.m == 0:
        return
    c = almost_majority_4(g, seed=seed)
    assert c.colors_used <= 4
    assert all(2 * cnt <= g.degree(v) for v, t in enumerate(tallies(g, c.assignment))
               if g.degree(v) > 1 for cnt in t.values())
    degs = g.degrees()
    if all(d % 2 == 0 or d == 1 for d in degs) and (g.m % 2 == 0 or 1 in degs):
        assert c.colors_used <= 2


def test_almost_majority_parity_exception():
    # all degrees even but an odd edge count: two colors would leave a d/2 + 1 surplus
    for g in (cycle_graph(3), cycle_graph(7)):
        c = almost_majority_4(g)
        assert c.colors_used == 3 and verify_majority(g, c, "almost").passed
    assert almost_majority_4(cycle_graph(6)).colors_used == 2


# combining -------------------------------------------------------------------------

def test_combine_examples():
    k4 = complete_graph(4)
    h = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    c_h = EdgeColoring({(0, 1): 1, (1, 2): 2, (2, 3): 1, (0, 3): 2})
    c_rest = EdgeColoring({(0, 2): 3, (1, 3): 3})
    out = combine_majority(k4, h, c_h, c_rest)
    assert is_strict_majority(k4, out.assignment)
    c5 = cycle_graph(5)
    c = EdgeColoring({(0, 1): 1, (1, 2): 2, (2, 3): 1, (3, 4): 2, (0, 4): 3})
    assert combine_majority(c5, c5, c, EdgeColoring({})).assignment == c.assignment
    # a monochromatic star puts 3 equal colors at a vertex of degree 3
    g = Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3), (0, 3)])
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    with pytest.raises(HypothesisViolated):
        combine_majority(g, star, EdgeColoring({(0, 1): 1, (0, 2): 1, (0, 3): 1}),
                         EdgeColoring({(1, 2): 2, (2, 3): 3}))
    with pytest.raises(PaletteOverlap):
        combine_majority(k4, h, c_h, EdgeColoring({(0, 2): 1, (1, 3): 3}))


# asymmetric subgraph route -------------------------------------------------------------

def test_asymmetric_route():
    c = color_via_asymmetric_subgraph(complete_graph(7))
    assert c.colors_used <= 7 and is_md(complete_graph(7), c.assignment)
    rng = random.Random(2)
    g = random_min_degree_graph(10, 0.0, rng, min_degree=4, max_degree=4)
    c = color_via_asymmetric_subgraph(g)
    assert c.colors_used <= 7 and is_md(g, c.assignment)
    with pytest.raises(NoAsymmetricSubgraphFound):
        color_via_asymmetric_subgraph(cycle_graph(5))


@settings(max_examples=20, deadline=None)
@given(st.integers(7, 16), st.integers(0, 10 ** 6))
def test_asymmetric_route_property(n, seed):
    g = random_min_degree_graph(n, 0.35, random.Random(seed))
    try:
        c = color_via_asymmetric_subgraph(g, seed=seed)
    except NoAsymmetricSubgraphFound:
        return
    assert c.colors_used <= 7 and is_md(g, c.assignment)


# complete graphs ---------------------------------------------------------------------

def test_complete_examples():
    c = color_complete(5)
    green = sorted(e for e, col in c.assignment.items() if col == 1)
    red = sorted(e for e, col in c.assignment.items() if col == 2)
    blue = sorted(e for e, col in c.assignment.items() if col == 3)
    assert green == [(0, 1), (1, 2), (2, 3), (3, 4)]
    assert red == [(0, 2), (0, 3), (1, 4)]
    assert blue == [(0, 4), (1, 3), (2, 4)]
    assert color_complete(4).colors_used == 5
    assert color_complete(3).colors_used == 3
    c = color_complete(9)
    assert c.colors_used == 3 and is_md(complete_graph(9), c.assignment)
    with pytest.raises(PreconditionError):
        color_complete(2)


@pytest.mark.parametrize("n", range(5, 16))
def test_complete_three_colors(n):
    c = color_complete(n)
    assert c.colors_used == 3 and is_md(complete_graph(n), c.assignment)


# traceable -----------------------------------------------------------------------------

def test_traceable_examples():
    k55 = generate(FamilySpec("complete_bipartite", [5, 5]))
    path = [0, 5, 1, 6, 2, 7, 3, 8, 4, 9]
    c = color_traceable_mindeg4(k55, path)
    assert c.colors_used == 3 and is_md(k55, c.assignment)
    c = color_traceable_mindeg4(complete_graph(6), list(range(6)))
    assert c.colors_used == 3 and is_md(complete_graph(6), c.assignment)
    with pytest.raises(MinDegreeTooSmall):
        color_traceable_mindeg4(generate(FamilySpec("petersen")))
    with pytest.raises(PathNotSpanning):
        color_traceable_mindeg4(complete_graph(6), [0, 1, 2])


# K_{2,n} ------------------------------------------------------------------------------

def test_k2n_examples():
    assert k2n_colors(3) == 3 and k2n_colors(11) == 4
    c = color_K2n(5)
    assert c.colors_used == 3 and is_md(k(5), c.assignment)
    assert exact_index(k(5), "md", k_max=3)[0] <= 3
    with pytest.raises(PreconditionError):
        color_K2n(2)


@pytest.mark.parametrize("n", range(3, 31))
def test_k2n_pair_codes(n):
    c = color_K2n(n)
    pairs = [(c.assignment[(0, y)], c.assignment[(1, y)]) for y in range(2, n + 2)]
    assert len(set(pairs)) == n
    assert (1, 2) not in pairs and (2, 1) in pairs
    assert all(a != b for a, b in pairs)
    assert c.colors_used == min(q for q in range(2, 40) if q * (q - 1) - 1 >= n)


# C0 pattern and the sphere engine ------------------------------------------------------------

def test_C0_patterns():
    c = color_C0(list(range(5)), 1, 2)
    assert [c.assignment[(min(i, (i + 1) % 5), max(i, (i + 1) % 5))] for i in range(5)] == \
        [1, ZERO, 2, ZERO_PRIME, ZERO]
    c = color_C0(list(range(6)), 1, 2)
    assert [c.assignment[(min(i, (i + 1) % 6), max(i, (i + 1) % 6))] for i in range(6)] == \
        [1, ZERO, 2, ZERO_PRIME, ZERO, ZERO_PRIME]
    with pytest.raises(BadColors):
        color_C0(list(range(5)), 1, 1)
    with pytest.raises(CycleTooShort):
        color_C0(list(range(4)), 1, 2)


@given(st.integers(5, 40))
def test_C0_no_equal_neighbors(L):
    c = color_C0(list(range(L)), 3, 4)
    seq = [c.assignment[(min(i, (i + 1) % L), max(i, (i + 1) % L))] for i in range(L)]
    assert all(seq[i] != seq[(i + 1) % L] for i in range(L))
    g = cycle_graph(L)
    assert color_preserving_group(g, c).order == 1


def test_regime_shapes():
    labels = [1, 2, 3, 4, 5]
    assert next(regime_multisets(labels, 1, 3)) == (1,)
    assert next(regime_multisets(labels, 3, 3)) == (1, 2, 3)
    assert next(regime_multisets(labels, 4, 3)) == (1, 1, 2, 2)
    first = next(regime_multisets(labels, 7, 3))
    counts = Counter(first)
    assert sorted(counts.values())[0] == 1 and all(v >= 2 for v in sorted(counts.values())[1:])
    # candidates are distinct
    allms = list(regime_multisets(labels, 3, 2))
    assert len(allms) == len(set(allms)) == math.comb(5 + 3 - 1, 3)


def test_lemma_H_examples():
    p5 = path_graph(5)
    c = lemma_H_coloring(p5, 0, 4)
    assert verify_majority(p5, c, "almost").passed
    c6 = cycle_graph(6)
    c = lemma_H_coloring(c6, 0, 3)
    assert verify_majority(c6, c, "almost").passed
    assert color_preserving_group(c6, c, fixed=[0, 3]).is_trivial()
    assert stabilizer(c6, [0, 3]).order == 2
    with pytest.raises(PreconditionGeodesicFailed):
        lemma_H_coloring(c6, 0, 1)
    with pytest.raises(PaletteTooSmall):
        lemma_H_coloring(c6, 0, 3, palette=[1, 2])


def test_lemma_H_K24_distinct_multisets():
    # a = 0, b = 1, middle vertices 2..5 each adjacent to both
    h = k(4)
    c = lemma_H_coloring(h, 0, 1)
    sets = [tuple(sorted((c.assignment[(0, y)], c.assignment[(1, y)]))) for y in range(2, 6)]
    assert len(set(sets)) == 4
    assert color_preserving_group(h, c, fixed=[0, 1]).is_trivial()


def geodesic_instance(rng):
    """Random union of shortest a-b paths: layered graph with edges between consecutive layers."""
    layers = [[0]]
    nxt = 1
    for _ in range(rng.randint(1, 4)):
        size = rng.randint(1, 4)
        layers.append(list(range(nxt, nxt + size)))
        nxt += size
    layers.append([nxt])
    edges = set()
    for lo, hi in zip(layers, layers[1:]):
        for v in hi:
            edges.add((rng.choice(lo), v))
        for u in lo:
            edges.add((u, rng.choice(hi)))
        for u in lo:
            for v in hi:
                if rng.random() < 0.3:
                    edges.add((u, v))
    return Graph(nxt + 1, edges), 0, nxt


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_lemma_H_property(seed):
    h, a, b = geodesic_instance(random.Random(seed))
    c = lemma_H_coloring(h, a, b)
    assert verify_majority(h, c, "almost").passed
    assert c.colors_used <= ceil_sqrt(max(h.max_degree, 1)) + 3
    assert color_preserving_group(h, c, fixed=[a, b]).is_trivial()


# general pipeline ----------------------------------------------------------------------

def bound(g):
    return ceil_sqrt(g.max_degree) + 5


def test_2connected_examples():
    pet = generate(FamilySpec("petersen"))
    c = color_2connected(pet)
    assert c.colors_used <= 5 and is_md(pet, c.assignment)
    assert c.colors_used == exact_index(pet, "chi-d", k_max=5)[0]
    c = color_2connected(complete_graph(5))
    assert c.colors_used <= 7 and is_md(complete_graph(5), c.assignment)
    c = color_2connected(k(6))
    assert c.colors_used == 4 and is_md(k(6), c.assignment)
    with pytest.raises(NotTwoConnected):
        color_2connected(friendship(2))


def test_zero_colors_only_on_seed_cycle():
    g = complete_graph(8)
    c = color_2connected(g)
    zero_edges = [e for e, col in c.assignment.items() if col in (ZERO, ZERO_PRIME)]
    h = nx.Graph(zero_edges)
    if zero_edges:
        # 0 and 0' sit on one cycle only, so they form a union of paths
        assert max(dict(h.degree).values()) <= 2 and nx.is_forest(h)
    assert is_md(g, c.assignment) and c.colors_used <= bound(g)


def test_connectivity1_examples():
    two_k5 = glue_at_vertex(complete_graph(5), complete_graph(5), 0, 0)
    c = color_connectivity1(two_k5)
    assert c.colors_used <= 7 and is_md(two_k5, c.assignment)
    f3 = friendship(3)
    c = color_connectivity1(f3)
    assert is_md(f3, c.assignment) and c.colors_used <= bound(f3)
    with pytest.raises(PendantEdgePresent):
        color_connectivity1(Graph(6, list(friendship(2).edges) + [(0, 5)]))
    with pytest.raises(NotConnectivity1):
        color_connectivity1(complete_graph(5))


def test_enumerate_block_colorings():
    c5 = cycle_graph(5)
    found = enumerate_block_colorings(c5, 0, delta=4)
    assert len(found) == 2
    grp = stabilizer(c5, [0])
    assert not colorings_isomorphic(c5, found[0], found[1], grp)
    for c in found:
        assert color_preserving_group(c5, c, fixed=[0]).is_trivial()
        assert not {ZERO, ZERO_PRIME} & set(c.assignment.values())
    two = friendship(2)
    found = enumerate_block_colorings(two, 0, delta=4)
    assert len(found) == 2
    for c in found:
        assert color_preserving_group(two, c, fixed=[0]).is_trivial()
    with pytest.raises(PreconditionError):
        enumerate_block_colorings(Graph(2, [(0, 1)]), 0, delta=4)


def triangles_on_tree(tree_edges, leaves, n):
    edges = list(tree_edges)
    nxt = n
    for leaf in leaves:
        edges += [(leaf, nxt), (leaf, nxt + 1), (nxt, nxt + 1)]
        nxt += 2
    return Graph(nxt, edges)


def test_tree_attachment_examples():
    star = triangles_on_tree([(0, 1), (0, 2), (0, 3)], [1, 2, 3], 4)
    c = color_symmetric_tree_attachment(star, 0)
    assert nx_aut_count(star, c.assignment) == 1
    p3 = triangles_on_tree([(0, 1), (0, 2)], [1, 2], 3)
    c = color_symmetric_tree_attachment(p3, 0)
    assert nx_aut_count(p3, c.assignment) == 1
    order2 = triangles_on_tree([(0, 1)], [1], 2)
    with pytest.raises(PreconditionError):
        color_symmetric_tree_attachment(order2, 0)


@settings(max_examples=30, deadline=None)
@given(st.integers(5, 30), st.floats(0.1, 0.5), st.integers(0, 10 ** 6))
def test_main_pipeline_property(n, p, seed):
    rng = random.Random(seed)
    g = random_min_degree_graph(n, p, rng, max_degree=16)
    if rng.random() < 0.4:
        h = random_min_degree_graph(rng.randint(3, 10), p, rng, max_degree=16)
        g = glue_at_vertex(g, h, rng.randrange(g.n), rng.randrange(h.n))
        if g.max_degree > 16:
            return
    c = color_main(g, seed=seed)
    assert c.colors_used <= bound(g)
    assert is_strict_majority(g, c.assignment)
    assert color_preserving_group(g, c).is_trivial()


# bipartite and digraphs ---------------------------------------------------------------

def test_bipartite_examples():
    c = majority3_bipartite(cycle_graph(6))
    assert c.colors_used <= 3 and is_strict_majority(cycle_graph(6), c.assignment)
    k44 = generate(FamilySpec("complete_bipartite", [4, 4]))
    c = majority3_bipartite(k44)
    assert c.colors_used <= 3
    assert all(cnt <= 2 for t in tallies(k44, c.assignment) for cnt in t.values())
    k33 = generate(FamilySpec("complete_bipartite", [3, 3]))
    c = majority3_bipartite(k33)
    assert all(cnt <= 1 for t in tallies(k33, c.assignment) for cnt in t.values())
    with pytest.raises(NotBipartite):
        majority3_bipartite(cycle_graph(5))
    with pytest.raises(MinDegreeTooSmall):
        majority3_bipartite(path_graph(4))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 15), st.integers(2, 15), st.floats(0.1, 0.8), st.integers(0, 10 ** 6))
def test_bipartite_property(a, b, p, seed):
    g = random_bipartite_graph(a, b, p, random.Random(seed))
    if g.min_degree < 2:
        return
    c = majority3_bipartite(g)
    assert c.colors_used <= 3 and is_strict_majority(g, c.assignment)


def test_symmetric_digraph_3_examples():
    for g in (cycle_graph(4), complete_graph(4)):
        d = symmetric_closure(g)
        c = majority3_symmetric_digraph(d)
        assert c.colors_used <= 3 and is_arc_majority(d, c.assignment)
    with pytest.raises(MinDegreeTooSmall):
        majority3_symmetric_digraph(symmetric_closure(path_graph(2)))
    with pytest.raises(NotSymmetric):
        majority3_symmetric_digraph(Digraph(3, [(0, 1), (1, 2), (2, 0)]))


def test_auxiliary_tally_preserved():
    d = symmetric_closure(random_min_degree_graph(10, 0.4, random.Random(1)))
    c = majority3_symmetric_digraph(d)
    gp, back = auxiliary_bipartite(d)
    cg = majority3_bipartite(gp)
    for v in range(d.n):
        out = Counter(col for (u, w), col in c.assignment.items() if u == v)
        assert sum(out.values()) == gp.degree(v) == d.out_degree(v)
    assert cg.colors_used <= 3


def test_color_symmetric_digraph_examples():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2), (0, 3)])
    d = symmetric_closure(g)
    c = color_symmetric_digraph(d)
    assert c.colors_used <= 6 and is_arc_majority(d, c.assignment)
    assert nx_arc_aut_count(d, c.assignment) == 1
    d = symmetric_closure(complete_graph(5))
    c = color_symmetric_digraph(d)
    assert c.colors_used <= 6 and is_arc_majority(d, c.assignment)
    assert nx_arc_aut_count(d, c.assignment) == 1
    asym = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 4), (4, 5), (1, 4), (0, 5), (3, 5)])
    d = symmetric_closure(asym)
    c = color_symmetric_digraph(d)
    assert is_arc_majority(d, c.assignment)
    with pytest.raises(NotSymmetric):
        color_symmetric_digraph(Digraph(3, [(0, 1), (1, 2), (2, 0)]))


# eulerian families --------------------------------------------------------------------

def test_eulerian_examples():
    c = eulerian_2coloring(cycle_graph(4))
    assert verify_majority(cycle_graph(4), c).passed
    assert nx_aut_count(cycle_graph(4), c.assignment) > 1
    spec = FamilySpec("glued_cycle_edge", [3, 5, 7])
    g = generate(spec)
    c = eulerian_2coloring(g, family_circuit(spec))
    assert is_strict_majority(g, c.assignment)
    assert nx_aut_count(g, c.assignment) == 1
    spec = FamilySpec("glued_cycle_vertex", [4, 6, 8])
    g = generate(spec)
    c = eulerian_2coloring(g, family_circuit(spec))
    assert is_md(g, c.assignment)
    with pytest.raises(OddEdgeCount):
        eulerian_2coloring(cycle_graph(5))
    with pytest.raises(NotEulerian):
        eulerian_2coloring(path_graph(3))


@pytest.mark.parametrize("lengths", [[3, 4, 4], [4, 6, 8], [4, 4, 6]])
def test_edge_glued_members_without_any_distinguishing_2_coloring(lengths):
    """Counterexamples: swapping the ends of the central edge survives every majority 2-coloring."""
    g = generate(FamilySpec("glued_cycle_edge", lengths))
    from majicolor.errors import InfeasibleUpToKMax
    with pytest.raises(InfeasibleUpToKMax):
        exact_index(g, "md", k_max=2)
    # independent check: every strict majority 2-coloring has a nontrivial symmetry
    edges = list(g.edges)
    for mask in range(1 << len(edges)):
        a = {e: 1 + (mask >> i & 1) for i, e in enumerate(edges)}
        if is_strict_majority(g, a):
            assert nx_aut_count(g, a) > 1


def test_single_cycle_vertex_family_not_distinguishing():
    spec = FamilySpec("glued_cycle_vertex", [6])
    g = generate(spec)
    c = eulerian_2coloring(g, family_circuit(spec))
    assert nx_aut_count(g, c.assignment) > 1
