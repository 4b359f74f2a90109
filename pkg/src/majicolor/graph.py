"""Simple graphs, symmetric digraphs and the structural queries built on them.

Vertices are dense integers ``0..n-1``; an undirected edge is always stored as
the sorted pair ``(min, max)`` so it can key a coloring map directly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import MalformedInput, NotASubgraph, OutOfRangeVertex

Edge = tuple[int, int]
Arc = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable finite simple undirected graph."""

    __slots__ = ("n", "edges", "_adj", "_edge_set")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen = set()
        adj: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRangeVertex(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise MalformedInput(f"self-loop at vertex {u}")
            key = edge(u, v)
            if key in seen:
                raise MalformedInput(f"duplicate edge {key}")
            seen.add(key)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))
        self._edge_set = frozenset(seen)
        self._adj = tuple(tuple(sorted(a)) for a in adj)

    # basic queries -------------------------------------------------------
    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(a) for a in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self._edge_set

    def incident(self, v: int) -> list[Edge]:
        return [edge(v, w) for w in self._adj[v]]

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    # derived graphs ------------------------------------------------------
    def subgraph_edges(self, edges: Iterable[Edge]) -> "Graph":
        """Spanning subgraph with the given edges (vertex set unchanged)."""
        return Graph(self.n, edges)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..k-1``; returns it with the old labels."""
        verts = sorted(set(vertices))
        index = {v: i for i, v in enumerate(verts)}
        es = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(verts), es), verts

    def relabel_edges(self, edges: Iterable[Edge]) -> tuple["Graph", list[int]]:
        """Graph formed by an edge subset on its own vertices, relabelled densely."""
        edges = list(edges)
        verts = sorted({x for e in edges for x in e})
        index = {v: i for i, v in enumerate(verts)}
        return Graph(len(verts), [(index[u], index[v]) for u, v in edges]), verts


class Digraph:
    """Immutable digraph without loops; ``arcs`` are ordered pairs."""

    __slots__ = ("n", "arcs", "_out", "_in", "_arc_set")

    def __init__(self, n: int, arcs: Iterable[Sequence[int]] = ()):
        seen = set()
        out: list[set[int]] = [set() for _ in range(n)]
        inn: list[set[int]] = [set() for _ in range(n)]
        for a in arcs:
            u, v = int(a[0]), int(a[1])
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRangeVertex(f"arc ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise MalformedInput(f"loop at vertex {u}")
            if (u, v) in seen:
                raise MalformedInput(f"duplicate arc {(u, v)}")
            seen.add((u, v))
            out[u].add(v)
            inn[v].add(u)
        self.n = n
        self.arcs: tuple[Arc, ...] = tuple(sorted(seen))
        self._arc_set = frozenset(seen)
        self._out = tuple(tuple(sorted(s)) for s in out)
        self._in = tuple(tuple(sorted(s)) for s in inn)

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        return len(self._in[v])

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self._arc_set

    def is_symmetric(self) -> bool:
        return all((v, u) in self._arc_set for u, v in self.arcs)

    def underlying(self) -> Graph:
        return Graph(self.n, {edge(u, v) for u, v in self.arcs})

    def __eq__(self, other):
        return isinstance(other, Digraph) and self.n == other.n and self.arcs == other.arcs

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={len(self.arcs)})"


def symmetric_closure(g: Graph) -> Digraph:
    """Replace every edge uv by the two opposite arcs (u,v) and (v,u)."""
    return Digraph(g.n, [a for u, v in g.edges for a in ((u, v), (v, u))])


def graph_minus(g: Graph, h: Graph) -> Graph:
    """Same vertex set as ``g``, edges of ``g`` that are not edges of ``h``."""
    if h.n != g.n:
        raise NotASubgraph(f"vertex counts differ ({h.n} vs {g.n})")
    extra = [e for e in h.edges if not g.has_edge(*e)]
    if extra:
        raise NotASubgraph(f"edge {extra[0]} of h is not an edge of g")
    hs = set(h.edges)
    return Graph(g.n, [e for e in g.edges if e not in hs])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


# connectivity ---------------------------------------------------------------

def bfs_distances(g: Graph, source: int, allowed=None) -> list[int]:
    """Distances from ``source``; -1 for unreachable. ``allowed`` restricts vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if dist[w] < 0 and (allowed is None or w in allowed):
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def components(g: Graph, ignore_isolated: bool = False) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s] or (ignore_isolated and g.degree(s) == 0):
            continue
        seen[s] = True
        comp, stack = [s], [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def bipartition(g: Graph) -> tuple[list[int], list[int]] | None:
    """Two colour classes of a proper vertex 2-colouring, or None if not bipartite."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return [v for v in range(g.n) if side[v] == 0], [v for v in range(g.n) if side[v] == 1]


# spheres --------------------------------------------------------------------

@dataclass(frozen=True)
class SphereDecomposition:
    root: int
    layers: tuple[tuple[int, ...], ...]
    distances: tuple[int, ...]

    def layer_sizes(self) -> list[int]:
        return [len(layer) for layer in self.layers]


def spheres(g: Graph, a: int) -> SphereDecomposition:
    dist = bfs_distances(g, a)
    depth = max(dist)
    layers = [[] for _ in range(depth + 1)]
    for v, d in enumerate(dist):
        if d >= 0:
            layers[d].append(v)
    return SphereDecomposition(a, tuple(tuple(layer) for layer in layers), tuple(dist))


def geodesic_cover_check(g: Graph, a: int, b: int) -> bool:
    """True iff dist(a,v) + dist(v,b) == dist(a,b) for every vertex v."""
    da = bfs_distances(g, a)
    db = bfs_distances(g, b)
    total = da[b]
    if total < 0:
        return False
    return all(x >= 0 and y >= 0 and x + y == total for x, y in zip(da, db))


# blocks ---------------------------------------------------------------------

@dataclass(frozen=True)
class BlockTree:
    blocks: tuple[tuple[Edge, ...], ...]
    cut_vertices: frozenset[int]
    block_vertices: tuple[frozenset[int], ...] = field(repr=False)

    def blocks_at(self, v: int) -> list[int]:
        return [i for i, vs in enumerate(self.block_vertices) if v in vs]

    def incidence(self) -> list[tuple[int, int]]:
        """(block index, cut vertex) pairs of the block-cut tree."""
        return [(i, v) for i, vs in enumerate(self.block_vertices)
                for v in sorted(vs & self.cut_vertices)]


def block_decomposition(g: Graph) -> BlockTree:
    """Biconnected components via an iterative Hopcroft-Tarjan edge stack."""
    disc = [-1] * g.n
    low = [0] * g.n
    timer = 0
    blocks: list[list[Edge]] = []
    cuts: set[int] = set()
    for root in range(g.n):
        if disc[root] >= 0 or g.degree(root) == 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        estack: list[Edge] = []
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    estack.append(edge(u, w))
                    stack.append((w, u, iter(g.neighbors(w))))
                    if u == root:
                        root_children += 1
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    estack.append(edge(u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[u])
                if low[u] >= disc[parent]:
                    if parent != root:
                        cuts.add(parent)
                    target = edge(parent, u)
                    comp = []
                    while True:
                        e = estack.pop()
                        comp.append(e)
                        if e == target:
                            break
                    blocks.append(sorted(comp))
        if root_children > 1:
            cuts.add(root)
    blocks.sort()
    bverts = tuple(frozenset(x for e in b for x in e) for b in blocks)
    return BlockTree(tuple(tuple(b) for b in blocks), frozenset(cuts), bverts)


def is_two_connected(g: Graph) -> bool:
    if g.n < 3 or not is_connected(g):
        return False
    return len(block_decomposition(g).blocks) == 1
