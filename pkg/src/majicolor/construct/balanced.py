"""Balanced 2-colorings along Euler circuits and the colorers built on them."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Sequence

from ..automorphism import is_asymmetric
from ..coloring import ArcColoring, EdgeColoring, color_sort_key
from ..errors import (EmptyGraph, HypothesisViolated, MinDegreeTooSmall, NoAsymmetricSubgraphFound,
                      NotBipartite, NotEulerian, NotFoundWithinBudget, NotSymmetric, OddEdgeCount,
                      PaletteOverlap, PreconditionError, VerifierRejected)
from ..graph import Digraph, Graph, bipartition, components, edge, graph_minus
from ..verify import (verify_arc_majority, verify_majority, verify_majority_distinguishing)
from .edgecolor import bipartite_edge_coloring, misra_gries, split_graph


@dataclass(frozen=True)
class TwoColoringSpec:
    special_vertex: int | None = None
    forbidden_special: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "forbidden_special", frozenset(self.forbidden_special))
        if self.special_vertex is not None and self.special_vertex in self.forbidden_special:
            raise PreconditionError("the requested special vertex is also forbidden")


class Balanced(NamedTuple):
    coloring: EdgeColoring
    special: tuple  # vertices carrying d/2 + 1 edges of one color


def euler_circuit(n: int, edges: Sequence[tuple[int, int]], start: int, rng=None) -> list[int]:
    """Edge indices of a closed trail from ``start`` using every edge once (Hierholzer)."""
    adj = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        adj[u].append((v, i))
        adj[v].append((u, i))
    if rng is not None:
        for lst in adj:
            rng.shuffle(lst)
    used = [False] * len(edges)
    ptr = [0] * n
    stack = [(start, None)]
    out = []
    while stack:
        v, via = stack[-1]
        while ptr[v] < len(adj[v]) and used[adj[v][ptr[v]][1]]:
            ptr[v] += 1
        if ptr[v] == len(adj[v]):
            stack.pop()
            if via is not None:
                out.append(via)
        else:
            w, i = adj[v][ptr[v]]
            used[i] = True
            stack.append((w, i))
    out.reverse()
    return out


def two_coloring_balanced(g: Graph, spec: TwoColoringSpec | None = None, colors=(1, 2),
                          seed: int = 0) -> Balanced:
    """Two colors, each on at most ceil(d/2) edges at every vertex.

    Components whose degrees are all even and whose edge count is odd cannot
    be perfectly balanced; there exactly one vertex gets d/2 + 1 edges of the
    first color. It is ``spec.special_vertex`` when that lies in the
    component, otherwise the first vertex of highest degree outside
    ``spec.forbidden_special`` (falling back to any vertex).
    """
    if g.m == 0:
        raise EmptyGraph("graph has no edges")
    spec = spec or TwoColoringSpec()
    rng = random.Random(seed)
    assign = {}
    special = []
    for comp in components(g, ignore_isolated=True):
        cset = set(comp)
        cedges = [e for e in g.edges if e[0] in cset]
        odd = [v for v in comp if g.degree(v) % 2]
        if odd:
            aux = g.n
            walk_edges = cedges + [(aux, v) for v in odd]
            start = aux
            nv = g.n + 1
        else:
            walk_edges = cedges
            nv = g.n
            if len(cedges) % 2:
                if spec.special_vertex in cset:
                    start = spec.special_vertex
                else:
                    allowed = [v for v in comp if v not in spec.forbidden_special] or comp
                    start = max(allowed, key=lambda v: (g.degree(v), -v))
                special.append(start)
            else:
                start = comp[0]
        for pos, i in enumerate(euler_circuit(nv, walk_edges, start, rng)):
            if i < len(cedges):
                assign[cedges[i]] = colors[pos % 2]
    return Balanced(EdgeColoring(assign, list(colors)), tuple(sorted(special)))


def _split_coloring(g: Graph, proper: Callable, prefer_three: bool) -> dict:
    """Majority coloring from a proper coloring of the vertex-split graph."""
    incident = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        incident[u].append(i)
        incident[v].append(i)
    parts, owner = split_graph(g.n, incident, prefer_three)
    split_edges = [(owner[(u, i)], owner[(v, i)]) for i, (u, v) in enumerate(g.edges)]
    cols = proper(parts, split_edges, owner)
    return {e: cols[i] + 1 for i, e in enumerate(g.edges)}


def almost_majority_4(g: Graph, seed: int = 0) -> EdgeColoring:
    """Almost majority coloring with at most 4 colors (2 when the parity allows).

    Every vertex is split into parts of 3 and 2 consecutive incident edges;
    the split graph has maximum degree 3, so a proper coloring with 4 colors
    exists, and a color then repeats at most once per part.
    """
    if g.m == 0:
        raise EmptyGraph("graph has no edges")
    if all(d % 2 == 0 or d == 1 for d in g.degrees()):
        two = two_coloring_balanced(g, seed=seed)
        if not two.special:
            return two.coloring

    def proper(parts, split_edges, owner):
        col = misra_gries(parts, split_edges)
        return [col[edge(*e)] for e in split_edges]

    c = EdgeColoring(_split_coloring(g, proper, True))
    rep = verify_majority(g, c, "almost")
    if not rep.passed or c.colors_used > 4:
        raise VerifierRejected("split coloring failed the almost-majority check", rep)
    return c


def combine_majority(g: Graph, h: Graph, c_h: EdgeColoring, c_rest: EdgeColoring) -> EdgeColoring:
    """Union of a coloring of ``h`` and a weak majority coloring of ``g - h``."""
    rest = graph_minus(g, h)
    overlap = set(c_h.assignment.values()) & set(c_rest.assignment.values())
    if overlap:
        raise PaletteOverlap(f"colors {sorted(map(str, overlap))} used on both parts")
    c_h.check_total(h)
    c_rest.check_total(rest)
    for v in range(g.n):
        tally = c_h.tally(v, h)
        for col in sorted(tally, key=color_sort_key):
            if 2 * tally[col] > g.degree(v):
                raise HypothesisViolated(v, col)
    weak = verify_majority(rest, c_rest, "weak")
    if not weak.passed:
        bad = weak.violations[0]
        raise HypothesisViolated(bad.vertex, bad.color)
    pal = list(c_h.palette) + [x for x in c_rest.palette if x not in c_h.palette]
    union = EdgeColoring({**c_h.assignment, **c_rest.assignment}, pal)
    rep = verify_majority(g, union, "strict")
    if not rep.passed:
        raise VerifierRejected("combined coloring is not a majority coloring", rep)
    return union


def color_via_asymmetric_subgraph(g: Graph, h: Graph | None = None, seed: int = 0,
                                  attempts: int = 200) -> EdgeColoring:
    """Majority distinguishing coloring from a connected asymmetric spanning subgraph.

    ``h`` gets an almost majority coloring (2 or 4 colors); the remaining
    edges get two further colors from balanced Euler alternation, with the
    surplus vertex of each all-even odd-size component put where ``h`` has
    degree >= 2. Only when that is impossible is one more color spent.
    """
    from ..search import find_asymmetric_spanning_subgraph

    if g.n == 0 or g.min_degree < 2:
        raise MinDegreeTooSmall("minimum degree must be at least 2")
    if h is None:
        try:
            h = find_asymmetric_spanning_subgraph(g, attempts=attempts, seed=seed)
        except NotFoundWithinBudget as exc:
            raise NoAsymmetricSubgraphFound(str(exc)) from None
    elif not is_asymmetric(h) or len(components(h)) != 1:
        raise PreconditionError("h must be a connected asymmetric spanning subgraph")
    c_h = almost_majority_4(h, seed=seed)
    a = max(c_h.assignment.values())
    rest = graph_minus(g, h)
    if rest.m == 0:
        out = c_h
    else:
        weak_spots = frozenset(v for v in range(g.n) if h.degree(v) < 2)
        two = two_coloring_balanced(rest, TwoColoringSpec(forbidden_special=weak_spots),
                                    colors=(a + 1, a + 2), seed=seed)
        assign = dict(two.coloring.assignment)
        for u in two.special:
            if h.degree(u) >= 2:
                continue
            # surplus at a leaf of h: move one surplus edge to a fresh color
            e = next(e for e in rest.incident(u) if assign[e] == a + 1)
            assign[e] = a + 3
        out = EdgeColoring({**c_h.assignment, **assign})
    rep = verify_majority_distinguishing(g, out)
    if not rep.passed:
        raise VerifierRejected("asymmetric-subgraph coloring failed certification", rep)
    return out


def eulerian_2coloring(g: Graph, order_rule=None, colors=(1, 2), seed: int = 0) -> EdgeColoring:
    """Alternate two colors along a closed trail through all edges.

    ``order_rule`` is either a closed trail (vertex sequence) or a callable
    returning one for ``g``; by default a Hierholzer circuit is used. The
    result is always a majority coloring; whether it is distinguishing
    depends on the graph and the trail and is left to the caller to check.
    """
    if g.m % 2:
        raise OddEdgeCount(f"{g.m} edges")
    if any(d % 2 for d in g.degrees()) or len(components(g, ignore_isolated=True)) != 1:
        raise NotEulerian("graph is not Eulerian")
    if order_rule is None:
        start = next(v for v in range(g.n) if g.degree(v))
        ids = euler_circuit(g.n, list(g.edges), start, random.Random(seed))
        trail_edges = [g.edges[i] for i in ids]
    else:
        trail = order_rule(g) if callable(order_rule) else list(order_rule)
        trail_edges = [edge(u, v) for u, v in zip(trail, trail[1:])]
        if trail[0] != trail[-1] or len(trail_edges) != g.m or set(trail_edges) != set(g.edges):
            raise PreconditionError("order rule must give a closed trail through every edge once")
    c = EdgeColoring({e: colors[i % 2] for i, e in enumerate(trail_edges)}, list(colors))
    rep = verify_majority(g, c, "strict")
    if not rep.passed:
        raise VerifierRejected("alternating coloring is not majority", rep)
    return c


def majority3_bipartite(g: Graph) -> EdgeColoring:
    """Majority coloring of a bipartite graph with 3 colors via vertex splitting."""
    parts = bipartition(g)
    if parts is None:
        raise NotBipartite("graph has an odd cycle")
    if g.n == 0 or g.min_degree < 2:
        raise MinDegreeTooSmall("minimum degree must be at least 2")
    left = set(parts[0])

    def proper(nparts, split_edges, owner):
        left_parts = {p for (v, _), p in owner.items() if v in left}
        return bipartite_edge_coloring(nparts, split_edges, left_parts)

    c = EdgeColoring(_split_coloring(g, proper, True))
    rep = verify_majority(g, c, "strict")
    if not rep.passed or c.colors_used > 3:
        raise VerifierRejected("bipartite split coloring failed certification", rep)
    return c


def auxiliary_bipartite(d: Digraph) -> tuple[Graph, dict]:
    """Out-copy/in-copy bipartite graph: arc (u, v) becomes edge u -- n+v."""
    mapping = {}
    for u, v in d.arcs:
        mapping[edge(u, d.n + v)] = (u, v)
    return Graph(2 * d.n, mapping), mapping


def majority3_symmetric_digraph(d: Digraph) -> ArcColoring:
    if not d.is_symmetric():
        raise NotSymmetric("digraph is not symmetric")
    if d.n == 0 or min(d.out_degree(v) for v in range(d.n)) < 2:
        raise MinDegreeTooSmall("underlying graph needs minimum degree at least 2")
    aux, mapping = auxiliary_bipartite(d)
    c = majority3_bipartite(aux)
    arcs = ArcColoring({mapping[e]: col for e, col in c.assignment.items()}, c.palette)
    rep = verify_arc_majority(d, arcs)
    if not rep.passed:
        raise VerifierRejected("arc coloring failed certification", rep)
    return arcs
