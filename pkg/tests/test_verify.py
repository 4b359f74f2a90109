import random

from hypothesis import given, settings
from hypothesis import strategies as st

import pytest
from conftest import is_arc_majority, is_strict_majority, nx_aut_count, tallies
from majicolor.coloring import ArcColoring, EdgeColoring
from majicolor.construct import fixture_coloring
from majicolor.construct.special import K5_COLORING, K6_COLORING
from majicolor.errors import IncompleteColoring
from majicolor.graph import Graph, complete_graph, cycle_graph, symmetric_closure
from majicolor.verify import (verify_arc_majority, verify_distinguishing, verify_majority,
                              verify_majority_distinguishing)

ALT_C4 = EdgeColoring({(0, 1): 1, (1, 2): 2, (2, 3): 1, (0, 3): 2})


def test_majority_examples():
    assert verify_majority(cycle_graph(4), ALT_C4).passed
    c3 = EdgeColoring({(0, 1): 1, (1, 2): 1, (0, 2): 2})
    rep = verify_majority(cycle_graph(3), c3, "strict")
    assert not rep.passed
    assert [(v.vertex, v.color, v.count, v.threshold) for v in rep.violations] == [(1, 1, 2, 1)]
    # ceil(2/2) = 1, so two equal colors at a degree-2 vertex break the weak bound too
    assert not verify_majority(cycle_graph(3), c3, "weak").passed
    assert verify_majority(Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)]),
                           EdgeColoring({(0, 1): 1, (0, 2): 1, (0, 3): 2, (1, 2): 2}), "weak").passed
    k5 = fixture_coloring(K5_COLORING)
    assert verify_majority(complete_graph(5), k5).passed
    assert all(max(t.values()) <= 2 for t in tallies(complete_graph(5), k5.assignment))


def test_almost_exempts_leaves():
    g = Graph(3, [(0, 1), (1, 2)])
    c = EdgeColoring({(0, 1): 1, (1, 2): 2})
    assert not verify_majority(g, c, "strict").passed
    assert verify_majority(g, c, "almost").passed


def test_distinguishing_examples():
    assert verify_distinguishing(complete_graph(5), fixture_coloring(K5_COLORING)).passed
    c5 = cycle_graph(5)
    rep = verify_distinguishing(c5, EdgeColoring({e: 1 for e in c5.edges}))
    assert not rep.passed
    w = rep.witness
    assert not w.is_identity() and all(c5.has_edge(*w.map_edge(e)) for e in c5.edges)
    asym = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 4), (4, 5), (1, 4)])
    assert nx_aut_count(asym) == 1
    assert verify_distinguishing(asym, EdgeColoring({e: 1 for e in asym.edges})).passed


def test_arc_majority_examples():
    d = symmetric_closure(cycle_graph(4))
    # each opposite-arc pair gets (1, 2): 1 clockwise, 2 counter-clockwise
    assign = {}
    for i in range(4):
        u, v = i, (i + 1) % 4
        assign[(u, v)], assign[(v, u)] = 1, 2
    flipped = dict(assign)
    flipped[(0, 1)], flipped[(1, 0)] = 2, 1
    assert not is_arc_majority(d, flipped)
    assert not verify_arc_majority(d, ArcColoring(flipped)).passed
    assert is_arc_majority(d, assign)
    assert verify_arc_majority(d, ArcColoring(assign)).passed
    k3 = symmetric_closure(complete_graph(3))
    assert not verify_arc_majority(k3, ArcColoring({a: 1 for a in k3.arcs})).passed
    k2 = symmetric_closure(Graph(2, [(0, 1)]))
    assert not verify_arc_majority(k2, ArcColoring({(0, 1): 1, (1, 0): 2})).passed


def test_md_examples():
    assert verify_majority_distinguishing(complete_graph(6), fixture_coloring(K6_COLORING)).passed
    assert not verify_majority_distinguishing(cycle_graph(4), ALT_C4).passed
    k4 = complete_graph(4)
    for mask in range(3 ** 6):
        cols = [(mask // 3 ** i) % 3 for i in range(6)]
        c = EdgeColoring(dict(zip(k4.edges, cols)))
        assert not verify_majority_distinguishing(k4, c).passed


def test_incomplete_raises():
    with pytest.raises(IncompleteColoring):
        verify_majority(cycle_graph(4), EdgeColoring({(0, 1): 1}))
    with pytest.raises(IncompleteColoring):
        verify_arc_majority(symmetric_closure(cycle_graph(3)), ArcColoring({(0, 1): 1}))


def test_report_json_schema():
    rep = verify_majority_distinguishing(cycle_graph(4), ALT_C4).to_json()
    assert set(rep) >= {"verdict", "mode", "colors_used", "violations"}
    assert rep["verdict"] == "fail" and "witness_automorphism" in rep


@st.composite
def colored(draw):
    n = draw(st.integers(2, 9))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), min_size=1, unique=True))
    g = Graph(n, edges)
    k = draw(st.integers(1, 4))
    cols = draw(st.lists(st.integers(1, k), min_size=g.m, max_size=g.m))
    return g, EdgeColoring(dict(zip(g.edges, cols)))


@settings(max_examples=150, deadline=None)
@given(colored())
def test_tallies_and_mode_chain(gc):
    g, c = gc
    for v, t in enumerate(tallies(g, c.assignment)):
        assert sum(t.values()) == g.degree(v)
    strict = verify_majority(g, c, "strict").passed
    assert strict == is_strict_majority(g, c.assignment)
    weak = verify_majority(g, c, "weak").passed
    almost = verify_majority(g, c, "almost").passed
    assert not strict or (weak and almost)
    rep = verify_majority(g, c, "strict")
    expected = sorted((v, col) for v, t in enumerate(tallies(g, c.assignment))
                      for col, cnt in t.items() if 2 * cnt > g.degree(v))
    assert sorted((x.vertex, x.color) for x in rep.violations) == expected


@settings(max_examples=80, deadline=None)
@given(colored(), st.integers(0, 10 ** 6))
def test_distinguishing_invariant_under_color_bijection(gc, seed):
    g, c = gc
    labels = sorted(set(c.assignment.values()))
    image = labels[:]
    random.Random(seed).shuffle(image)
    renamed = EdgeColoring({e: "x" + str(image[labels.index(col)]) for e, col in c.assignment.items()})
    assert verify_distinguishing(g, c).passed == verify_distinguishing(g, renamed).passed
    assert verify_distinguishing(g, c).passed == (nx_aut_count(g, c.assignment) == 1)


@settings(max_examples=80, deadline=None)
@given(colored())
def test_closure_of_majority_coloring_is_arc_majority(gc):
    g, c = gc
    if not verify_majority(g, c, "strict").passed:
        return
    d = symmetric_closure(g)
    arcs = {(u, v): c.assignment[(min(u, v), max(u, v))] for u, v in d.arcs}
    assert verify_arc_majority(d, ArcColoring(arcs)).passed
