"""Exhaustive search for the smallest number of colors of each index kind.

These are the ground-truth oracles the constructive colorers are checked
against, so they favour plain correctness: colors are tried for edges in a
fixed order, per-vertex capacities prune infeasible branches, and
distinguishing is decided only on complete colorings. Two symmetry
reductions are applied unless ``prune=False``: color relabelling (colors
first appear in increasing order) and automorphisms of the graph (a branch
is cut once some fixed nontrivial automorphism is guaranteed to preserve
every completion).
"""

from __future__ import annotations

from dataclasses import dataclass

from .automorphism import (Permutation, automorphism_group, color_preserving_group,
                           digraph_automorphism_group)
from .coloring import ArcColoring, EdgeColoring
from .errors import BudgetExhausted, InfeasibleUpToKMax, PreconditionError
from .graph import Digraph, Graph, components
from .search import default_budget
from .verify import IndexKind, verify_kind

ELEMENT_LIMIT = 5000


@dataclass
class _Problem:
    items: list            # edges or arcs, in search order
    slots: list            # per item: the capacity slots it consumes
    caps: dict             # slot -> max uses of one color
    perms: list            # per automorphism: list of (position, image position) for moved items
    complete_group: bool   # perms list every nontrivial automorphism
    leaf_check: object     # callable(assignment dict) -> bool


def _twin_transpositions(g: Graph) -> list[Permutation]:
    out = []
    nb = [set(g.neighbors(v)) for v in range(g.n)]
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if nb[u] - {v} == nb[v] - {u}:
                images = list(range(g.n))
                images[u], images[v] = v, u
                out.append(Permutation(tuple(images)))
    return out


def _automorphisms(grp, extra=()) -> tuple[list[Permutation], bool]:
    if grp.order <= ELEMENT_LIMIT:
        return [p for p in grp.elements() if not p.is_identity()], True
    seen = {}
    for p in list(grp.generators) + list(extra):
        if not p.is_identity():
            seen[p.images] = p
    return list(seen.values()), False


def _perm_table(items, perms, mapper):
    pos = {it: i for i, it in enumerate(items)}
    table = []
    for p in perms:
        moved = []
        for i, it in enumerate(items):
            j = pos[mapper(p, it)]
            if j != i:
                moved.append((i, j))
        table.append(moved)
    return table


def _search(prob: _Problem, k: int, budget: list, prune: bool):
    items = prob.items
    m = len(items)
    colors = [-1] * m
    count = {s: [0] * k for s in prob.caps}
    remaining = {s: 0 for s in prob.caps}
    for sl in prob.slots:
        for s in sl:
            remaining[s] += 1
    # automorphism checks are triggered once their last moved item is colored
    trigger = [[] for _ in range(m)]
    if prune:
        for moved in prob.perms:
            if moved:
                last = max(max(i, j) for i, j in moved)
                trigger[last].append(moved)

    def fits(s):
        cap = prob.caps[s]
        if cap is None:
            return True
        room = sum(cap - x for x in count[s])
        return room >= remaining[s]

    def rec(depth, used):
        budget[0] -= 1
        if budget[0] < 0:
            raise BudgetExhausted("exact search budget exhausted")
        if depth == m:
            return prob.leaf_check({items[i]: colors[i] for i in range(m)})
        top = min(k, used + 1) if prune else k
        for col in range(top):
            ok = True
            for s in prob.slots[depth]:
                cap = prob.caps[s]
                if cap is not None and count[s][col] >= cap:
                    ok = False
                    break
            if not ok:
                continue
            colors[depth] = col
            for s in prob.slots[depth]:
                count[s][col] += 1
                remaining[s] -= 1
            good = all(fits(s) for s in prob.slots[depth])
            if good:
                for moved in trigger[depth]:
                    if all(colors[i] == colors[j] for i, j in moved):
                        good = False
                        break
            if good and rec(depth + 1, max(used, col + 1)):
                return True
            for s in prob.slots[depth]:
                count[s][col] -= 1
                remaining[s] += 1
            colors[depth] = -1
        return False

    if rec(0, 0):
        return {items[i]: colors[i] + 1 for i in range(m)}
    return None


def _check_connected(g: Graph):
    if g.n > 1 and len(components(g)) != 1:
        raise PreconditionError("graph must be connected")


def exact_index(g: Graph, kind: IndexKind | str, k_max: int | None = None,
                budget: int | None = None, prune: bool = True) -> tuple[int, EdgeColoring]:
    """Smallest k <= ``k_max`` with a coloring of the given kind, plus a witness."""
    kind = IndexKind(kind)
    if kind in (IndexKind.ARC_MAJORITY, IndexKind.ARC_MAJORITY_DISTINGUISHING):
        raise ValueError("use exact_arc_index for arc kinds")
    _check_connected(g)
    majority = kind in (IndexKind.MAJORITY, IndexKind.MAJORITY_DISTINGUISHING)
    distinguishing = kind is not IndexKind.MAJORITY
    if k_max is None:
        k_max = max(g.m, 1)
    if g.m == 0:
        return 0, EdgeColoring({})
    if majority and g.min_degree < 2:
        raise InfeasibleUpToKMax(f"a vertex of degree 1 admits no majority coloring (k_max={k_max})")
    if distinguishing and g.n == 2:
        raise InfeasibleUpToKMax("K_2 has no distinguishing edge coloring")
    items = sorted(g.edges, key=lambda e: (-(g.degree(e[0]) + g.degree(e[1])), e[1], e[0]))
    if kind is IndexKind.PROPER_DISTINGUISHING:
        caps = {v: 1 for v in range(g.n)}
    elif majority:
        caps = {v: g.degree(v) // 2 for v in range(g.n)}
    else:
        caps = {v: None for v in range(g.n)}
    if distinguishing:
        grp = automorphism_group(g)
        perms, complete = _automorphisms(grp, _twin_transpositions(g))
    else:
        perms, complete = [], True
    table = _perm_table(items, perms, lambda p, e: p.map_edge(e))

    def leaf(assign):
        if not distinguishing or (complete and prune):
            return True
        return color_preserving_group(g, assign).is_trivial()

    prob = _Problem(items, [(u, v) for u, v in items], caps, table, complete, leaf)
    left = [budget if budget is not None else default_budget()]
    for k in range(1, k_max + 1):
        found = _search(prob, k, left, prune)
        if found is not None:
            c = EdgeColoring(found, list(range(1, k + 1)))
            rep = verify_kind(g, c, kind)
            assert rep.passed, rep.to_json()
            return k, c
    raise InfeasibleUpToKMax(f"no {kind.value} coloring with at most {k_max} colors")


def exact_arc_index(d: Digraph, kind: IndexKind | str = IndexKind.ARC_MAJORITY,
                    k_max: int | None = None, budget: int | None = None,
                    prune: bool = True) -> tuple[int, ArcColoring]:
    kind = IndexKind(kind)
    if kind not in (IndexKind.ARC_MAJORITY, IndexKind.ARC_MAJORITY_DISTINGUISHING):
        raise ValueError(f"{kind.value} is not an arc kind")
    distinguishing = kind is IndexKind.ARC_MAJORITY_DISTINGUISHING
    if k_max is None:
        k_max = max(len(d.arcs), 1)
    if not d.arcs:
        return 0, ArcColoring({})
    if any(0 < d.out_degree(v) < 2 or 0 < d.in_degree(v) < 2 for v in range(d.n)):
        raise InfeasibleUpToKMax(f"a vertex with one in- or out-arc admits no majority coloring (k_max={k_max})")
    items = sorted(d.arcs, key=lambda a: (-(d.out_degree(a[0]) + d.in_degree(a[1])), a))
    caps = {}
    for v in range(d.n):
        caps[("out", v)] = d.out_degree(v) // 2
        caps[("in", v)] = d.in_degree(v) // 2
    slots = [(("out", u), ("in", v)) for u, v in items]
    if distinguishing:
        perms, complete = _automorphisms(digraph_automorphism_group(d))
    else:
        perms, complete = [], True
    table = _perm_table(items, perms, lambda p, a: (p(a[0]), p(a[1])))

    def leaf(assign):
        if not distinguishing or (complete and prune):
            return True
        return digraph_automorphism_group(d, assign).is_trivial()

    prob = _Problem(items, slots, caps, table, complete, leaf)
    left = [budget if budget is not None else default_budget()]
    for k in range(1, k_max + 1):
        found = _search(prob, k, left, prune)
        if found is not None:
            c = ArcColoring(found, list(range(1, k + 1)))
            assert verify_kind(d, c, kind).passed
            return k, c
    raise InfeasibleUpToKMax(f"no {kind.value} coloring with at most {k_max} colors")


def probe_conjecture(g: Graph, budget: int | None = None, seed: int = 0) -> dict:
    """Check whether five colors suffice for a majority distinguishing coloring.

    Only graphs with minimum degree >= 2 and a certified connected asymmetric
    spanning subgraph are probed; the report says which precondition failed
    otherwise. Nothing is concluded beyond the single instance.
    """
    from .automorphism import is_asymmetric
    from .errors import NotFoundWithinBudget
    from .search import find_asymmetric_spanning_subgraph

    report = {"n": g.n, "m": g.m, "min_degree": g.min_degree if g.n else 0}
    if g.n == 0 or g.min_degree < 2:
        report.update(precondition=False, reason="minimum degree below 2")
        return report
    try:
        h = find_asymmetric_spanning_subgraph(g, seed=seed)
    except NotFoundWithinBudget as exc:
        reason = ("no connected asymmetric spanning subgraph" if exc.exhaustive
                  else "no asymmetric spanning subgraph found within budget")
        report.update(precondition=False, reason=reason, proven=exc.exhaustive)
        return report
    assert is_asymmetric(h)
    report.update(precondition=True, asymmetric_subgraph=[list(e) for e in h.edges])
    try:
        k, witness = exact_index(g, IndexKind.MAJORITY_DISTINGUISHING, 5, budget)
    except InfeasibleUpToKMax:
        report.update(k=None, consistent=False)
        return report
    report.update(k=k, consistent=k <= 5, witness=witness.to_json())
    return report


__all__ = ["exact_index", "exact_arc_index", "probe_conjecture"]
