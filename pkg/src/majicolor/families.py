"""Named graph families, including the glued-cycle families with 2-colorings.

Every generator returns a plain :class:`Graph`. The cycle-based families also
know a closed trail through all their edges in the prescribed order
(``family_circuit``), which is what the alternating 2-coloring walks along.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InvalidFamilyParameters
from .graph import Graph, complete_graph, cycle_graph, edge, is_connected, path_graph

KINDS = ("complete", "complete_bipartite", "cycle", "path", "glued_cycle_edge",
         "glued_cycle_vertex", "path_cycle", "chord_path_cycle", "petersen")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    parameters: tuple[int, ...]

    def __init__(self, kind: str, parameters=()):
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "parameters", tuple(int(p) for p in parameters))


def _need(cond, msg):
    if not cond:
        raise InvalidFamilyParameters(msg)


class _Builder:
    def __init__(self):
        self.n = 0
        self.edges = []

    def vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def path(self, u: int, v: int, length: int) -> list[int]:
        """Add a u-v path of ``length`` edges; returns its vertex sequence."""
        seq = [u] + [self.vertex() for _ in range(length - 1)] + [v]
        self.edges.extend(zip(seq, seq[1:]))
        return seq

    def graph(self) -> Graph:
        return Graph(self.n, self.edges)


def _glued_edge(lengths):
    """Cycles sharing one central edge; returns graph and the ordered closed trail."""
    _need(len(lengths) >= 3 and len(lengths) % 2 == 1,
          "glued_cycle_edge needs an odd number (>= 3) of cycles")
    _need(all(L >= 3 for L in lengths), "cycle lengths must be >= 3")
    b = _Builder()
    u, v = b.vertex(), b.vertex()
    odd = sum(1 for L in lengths if L % 2)
    order = sorted(range(len(lengths)), key=lambda i: (lengths[i], i))
    paths = {}
    for i in range(len(lengths)):
        paths[i] = b.path(u, v, lengths[i] - 1)
    # an odd number of odd cycles would leave an odd edge count: subdivide the central edge
    central = b.path(v, u, 2 if odd % 2 else 1)
    trail = [u]
    at_u = True
    for i in order:
        seq = paths[i] if at_u else paths[i][::-1]
        trail.extend(seq[1:])
        at_u = not at_u
    trail.extend(central[1:])
    return b.graph(), trail


def _glued_vertex(lengths):
    _need(len(lengths) >= 1, "glued_cycle_vertex needs at least one cycle")
    _need(all(L >= 4 and L % 2 == 0 for L in lengths), "cycle lengths must be even and >= 4")
    _need(len(set(lengths)) == len(lengths), "cycle lengths must be distinct")
    b = _Builder()
    w = b.vertex()
    trail = [w]
    for L in sorted(lengths):
        trail.extend(b.path(w, w, L)[1:])
    return b.graph(), trail


def _path_cycle(lengths, chords: bool):
    """Cycle C_2k plus paths; ``chords`` selects the v_2i -- v_2i+2 variant."""
    if chords:
        k = len(lengths)
        _need(k >= 2, "chord_path_cycle needs k >= 2 paths")
    else:
        _need(len(lengths) >= 4 and len(lengths) % 2 == 0, "path_cycle needs 2k path lengths, k >= 2")
        k = len(lengths) // 2
    _need(sum(lengths) % 2 == 0, "sum of path lengths must be even")
    b = _Builder()
    cyc = [b.vertex() for _ in range(2 * k)]
    for i in range(2 * k):
        b.edges.append((cyc[i], cyc[(i + 1) % (2 * k)]))
    start = 1 if chords else 0
    trail = cyc[start:] + cyc[:start + 1]
    if chords:
        ends = [(cyc[(2 * i + 1) % (2 * k)], cyc[(2 * i + 3) % (2 * k)]) for i in range(k)]
    else:
        ends = [(cyc[i], cyc[(i + 1) % (2 * k)]) for i in range(2 * k)]
    for (x, y), L in zip(ends, lengths):
        min_len = 1 if (chords and k >= 3) else 2
        _need(L >= min_len, f"path lengths must be >= {min_len} to keep the graph simple")
        trail.extend(b.path(x, y, L)[1:])
    g = b.graph()
    # local import: the automorphism engine is not needed by the plain families
    from .automorphism import is_asymmetric
    _need(is_asymmetric(g), "path lengths do not break the symmetry of the cycle")
    return g, trail


def _build(spec: FamilySpec):
    p = spec.parameters
    kind = spec.kind
    if kind == "complete":
        _need(len(p) == 1 and p[0] >= 1, "complete needs [n]")
        return complete_graph(p[0]), None
    if kind == "complete_bipartite":
        _need(len(p) == 2 and min(p) >= 1, "complete_bipartite needs [a, b]")
        a, bb = p
        return Graph(a + bb, [(x, a + y) for x in range(a) for y in range(bb)]), None
    if kind == "cycle":
        _need(len(p) == 1 and p[0] >= 3, "cycle needs [n >= 3]")
        return cycle_graph(p[0]), list(range(p[0])) + [0]
    if kind == "path":
        _need(len(p) == 1 and p[0] >= 1, "path needs [n]")
        return path_graph(p[0]), None
    if kind == "glued_cycle_edge":
        return _glued_edge(p)
    if kind == "glued_cycle_vertex":
        return _glued_vertex(p)
    if kind == "path_cycle":
        return _path_cycle(p, chords=False)
    if kind == "chord_path_cycle":
        return _path_cycle(p, chords=True)
    if kind == "petersen":
        _need(not p, "petersen takes no parameters")
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return Graph(10, outer + spokes + inner), None
    raise InvalidFamilyParameters(f"unknown family {kind!r}")


def generate(spec: FamilySpec) -> Graph:
    return _build(spec)[0]


def family_circuit(spec: FamilySpec) -> list[int]:
    """Closed trail through every edge, shortest cycle first for the glued families."""
    trail = _build(spec)[1]
    if trail is None:
        raise InvalidFamilyParameters(f"family {spec.kind!r} has no prescribed circuit")
    return trail


# random corpora ----------------------------------------------------------------

def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    """G(n, p) made connected by joining components along a random path."""
    edges = {edge(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p}
    order = list(range(n))
    rng.shuffle(order)
    g = Graph(n, edges)
    if not is_connected(g):
        from .graph import components
        comps = components(g)
        for a, b in zip(comps, comps[1:]):
            edges.add(edge(rng.choice(a), rng.choice(b)))
    return Graph(n, edges)


def random_min_degree_graph(n: int, p: float, rng: random.Random, min_degree: int = 2,
                            max_degree: int | None = None) -> Graph:
    """Connected graph with every degree >= ``min_degree`` (and <= ``max_degree`` if given)."""
    for _ in range(1000):
        g = random_connected_graph(n, p, rng)
        edges = set(g.edges)
        deg = g.degrees()
        if max_degree is not None:
            for e in sorted(edges, key=lambda _: rng.random()):
                u, v = e
                if (deg[u] > max_degree or deg[v] > max_degree) and deg[u] > min_degree \
                        and deg[v] > min_degree:
                    trial = Graph(n, edges - {e})
                    if is_connected(trial):
                        edges.discard(e)
                        deg[u] -= 1
                        deg[v] -= 1
        for v in range(n):
            cands = [w for w in range(n) if w != v and edge(v, w) not in edges
                     and (max_degree is None or deg[w] < max_degree)]
            rng.shuffle(cands)
            while deg[v] < min_degree and cands:
                w = cands.pop()
                edges.add(edge(v, w))
                deg[v] += 1
                deg[w] += 1
        g = Graph(n, edges)
        if g.min_degree >= min_degree and is_connected(g) and (
                max_degree is None or g.max_degree <= max_degree):
            return g
    raise RuntimeError("could not sample a graph with the requested degree bounds")


def glue_at_vertex(g: Graph, h: Graph, gv: int, hv: int) -> Graph:
    """Identify vertex ``hv`` of ``h`` with vertex ``gv`` of ``g``."""
    index = {}
    nxt = g.n
    for v in range(h.n):
        if v == hv:
            index[v] = gv
        else:
            index[v] = nxt
            nxt += 1
    return Graph(nxt, list(g.edges) + [(index[u], index[v]) for u, v in h.edges])


def random_traceable_graph(n: int, min_degree: int, rng: random.Random,
                           p: float = 0.0) -> tuple[Graph, list[int]]:
    """Graph containing a planted spanning path; returns the graph and the path."""
    path = list(range(n))
    rng.shuffle(path)
    edges = {edge(a, b) for a, b in zip(path, path[1:])}
    edges |= {edge(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p}
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    for v in range(n):
        cands = [w for w in range(n) if w != v and edge(v, w) not in edges]
        rng.shuffle(cands)
        while deg[v] < min_degree and cands:
            w = cands.pop()
            edges.add(edge(v, w))
            deg[v] += 1
            deg[w] += 1
    return Graph(n, edges), path


def random_bipartite_graph(a: int, b: int, p: float, rng: random.Random,
                           min_degree: int = 2) -> Graph:
    edges = {(x, a + y) for x in range(a) for y in range(b) if rng.random() < p}
    deg = [0] * (a + b)
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    for v in range(a + b):
        side = range(a, a + b) if v < a else range(a)
        cands = [w for w in side if edge(v, w) not in edges]
        rng.shuffle(cands)
        while deg[v] < min_degree and cands:
            w = cands.pop()
            edges.add(edge(v, w))
            deg[v] += 1
            deg[w] += 1
    return Graph(a + b, edges)
