import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import is_arc_majority, is_md, is_strict_majority, nx_arc_aut_count, nx_aut_count
from majicolor.errors import BudgetExhausted, InfeasibleUpToKMax
from majicolor.exact import exact_arc_index, exact_index, probe_conjecture
from majicolor.families import FamilySpec, generate, random_connected_graph, random_min_degree_graph
from majicolor.graph import Graph, complete_graph, cycle_graph, symmetric_closure


def growth_strings(m, k):
    """Colorings of m items with at most k colors, one per color permutation class."""
    def rec(prefix, top):
        if len(prefix) == m:
            yield prefix
            return
        for c in range(min(top + 1, k)):
            yield from rec(prefix + [c], max(top, c + 1))
    return rec([], 0)


def brute_index(g, kind, k_max):
    edges = list(g.edges)
    for k in range(1, k_max + 1):
        for cols in growth_strings(len(edges), k):
            a = dict(zip(edges, cols))
            if kind in ("m", "md") and not is_strict_majority(g, a):
                continue
            if kind == "chi-d" and any(max(t.values()) > 1 for t in _tallies(g, a)):
                continue
            if kind != "m" and nx_aut_count(g, a) != 1:
                continue
            return k
    return None


def _tallies(g, a):
    from conftest import tallies
    return tallies(g, a)


def test_known_constants():
    assert exact_index(complete_graph(4), "md")[0] == 5
    assert exact_index(complete_graph(3), "md")[0] == 3
    assert exact_index(cycle_graph(4), "m")[0] == 2
    assert exact_index(cycle_graph(3), "m")[0] == 3
    assert exact_index(cycle_graph(5), "d")[0] == 3


def test_constants_match_brute_force():
    assert brute_index(complete_graph(4), "md", 6) == 5
    assert brute_index(complete_graph(3), "md", 4) == 3
    assert brute_index(cycle_graph(5), "d", 4) == 3
    assert brute_index(cycle_graph(3), "m", 4) == 3


def test_witnesses_are_valid():
    k, c = exact_index(complete_graph(4), "md")
    assert c.colors_used == k and is_md(complete_graph(4), c.assignment)


def test_infeasible_and_budget():
    with pytest.raises(InfeasibleUpToKMax):
        exact_index(complete_graph(4), "md", k_max=4)
    with pytest.raises(InfeasibleUpToKMax):
        exact_index(Graph(3, [(0, 1), (1, 2)]), "m", k_max=5)
    with pytest.raises(BudgetExhausted):
        exact_index(generate(FamilySpec("petersen")), "d", k_max=3, budget=3)


def test_arc_examples():
    k, c = exact_arc_index(symmetric_closure(cycle_graph(3)), "arc_majority")
    assert k == 2 and is_arc_majority(symmetric_closure(cycle_graph(3)), c.assignment)
    assert exact_arc_index(symmetric_closure(cycle_graph(4)), "arc_majority")[0] == 2
    with pytest.raises(InfeasibleUpToKMax):
        exact_arc_index(symmetric_closure(Graph(2, [(0, 1)])), "arc_majority", k_max=6)


def test_arc_brute_force_C3():
    d = symmetric_closure(cycle_graph(3))
    arcs = list(d.arcs)
    ok = [a for a in growth_strings(6, 2) if is_arc_majority(d, dict(zip(arcs, a)))]
    assert ok
    assert not [a for a in growth_strings(6, 1) if is_arc_majority(d, dict(zip(arcs, a)))]


def test_arc_md_against_networkx():
    d = symmetric_closure(cycle_graph(5))
    k, c = exact_arc_index(d, "arc_majority_distinguishing")
    assert nx_arc_aut_count(d, c.assignment) == 1 and is_arc_majority(d, c.assignment)
    arcs = list(d.arcs)
    for cols in growth_strings(len(arcs), k - 1):
        a = dict(zip(arcs, cols))
        assert not (is_arc_majority(d, a) and nx_arc_aut_count(d, a) == 1)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from(["m", "d", "md", "chi-d"]))
def test_exact_matches_brute_force(seed, kind):
    rng = random.Random(seed)
    n = rng.randint(3, 6)
    g = random_connected_graph(n, 0.4, rng)
    if g.m > 8 or (kind in ("m", "md") and g.min_degree < 2):
        return
    truth = brute_index(g, kind, 6)
    try:
        k = exact_index(g, kind, k_max=6)[0]
    except InfeasibleUpToKMax:
        k = None
    assert k == truth


def test_pruned_equals_unpruned():
    rng = random.Random(3)
    checked = 0
    while checked < 15:
        g = random_min_degree_graph(rng.randint(4, 7), 0.4, rng)
        if g.m > 12:
            continue
        checked += 1
        for kind in ("md", "d"):
            try:
                a = exact_index(g, kind, k_max=6, prune=True)[0]
            except InfeasibleUpToKMax:
                a = None
            try:
                b = exact_index(g, kind, k_max=6, prune=False)[0]
            except InfeasibleUpToKMax:
                b = None
            assert a == b


def test_monotone_in_kmax():
    g = cycle_graph(5)
    k = exact_index(g, "md", k_max=10)[0]
    for kmax in range(k, 10):
        assert exact_index(g, "md", k_max=kmax)[0] == k


def test_probe_examples():
    rep = probe_conjecture(complete_graph(7))
    assert rep["precondition"] and rep["k"] <= 3 and rep["consistent"]
    rep = probe_conjecture(complete_graph(4))
    # K_4 has a connected asymmetric spanning subgraph only if brute force finds one
    import itertools
    k4 = complete_graph(4)
    asym = any(nx_aut_count(Graph(4, sub)) == 1
               for r in range(3, 7) for sub in itertools.combinations(k4.edges, r)
               if _connected(Graph(4, sub)))
    assert rep["precondition"] == asym
    if asym:
        assert rep["k"] == 5
    rng = random.Random(8)
    rep = probe_conjecture(random_min_degree_graph(8, 0.4, rng))
    assert "precondition" in rep


def _connected(g):
    import networkx as nx

    from conftest import to_nx
    return nx.is_connected(to_nx(g))
