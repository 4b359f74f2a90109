"""Automorphism groups of (edge-labelled) graphs and digraphs.

The search is the usual individualization/refinement scheme: vertices are
split into an equitable partition by iterated neighbour-signature refinement,
the first smallest non-singleton cell is individualized, and coset
representatives are found level by level along a fixed base path. The group
order is the product of the basic orbit lengths along that base.

Edge labels (colors, or "uncolored" markers for partial colorings) enter the
refinement through the signature multiset of ``(neighbour cell, label)``.
For digraphs the label of a vertex pair is the ordered pair of arc labels,
so in- and out-neighbourhoods are refined separately.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import IncompleteColoring
from .graph import Digraph, Graph, edge



@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __call__(self, v: int) -> int:
        return self.images[v]

    def __len__(self):
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def compose(self, other: "Permutation") -> "Permutation":
        """``self`` after ``other``."""
        return Permutation(tuple(self.images[i] for i in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation(tuple(inv))

    def support(self) -> list[int]:
        return [i for i, v in enumerate(self.images) if i != v]

    def map_edge(self, e):
        return edge(self.images[e[0]], self.images[e[1]])


@dataclass(frozen=True)
class AutGroup:
    """Subgroup of Aut(g) given by generators, with its exact order.

    Groups built by this module are always the full pointwise stabilizer of
    ``fixed`` inside the automorphisms preserving ``labels``; both are kept so
    isomorphism questions relative to the group can be answered by search.
    """

    n: int
    generators: tuple[Permutation, ...]
    order: int
    base: tuple[int, ...] = ()
    fixed: tuple[int, ...] = ()
    labels: Mapping | None = field(default=None, repr=False, compare=False)
    exact_stabilizer: bool = field(default=True, repr=False, compare=False)

    def is_trivial(self) -> bool:
        return self.order == 1

    def orbits(self) -> list[list[int]]:
        return _orbits(self.n, self.generators)

    def orbit(self, v: int) -> list[int]:
        return _orbit(v, self.generators)

    def nontrivial_element(self) -> Permutation | None:
        for p in self.generators:
            if not p.is_identity():
                return p
        return None

    def elements(self, limit: int = 100_000) -> list[Permutation]:
        """All group elements by closure; raises ValueError above ``limit``."""
        if self.order > limit:
            raise ValueError(f"group of order {self.order} exceeds enumeration limit {limit}")
        ident = Permutation.identity(self.n)
        seen = {ident.images: ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for p in frontier:
                for gen in self.generators:
                    q = gen.compose(p)
                    if q.images not in seen:
                        seen[q.images] = q
                        nxt.append(q)
            frontier = nxt
        return list(seen.values())

    def to_json(self) -> dict:
        return {"order": self.order, "generators": [list(p.images) for p in self.generators],
                "base": list(self.base), "fixed": list(self.fixed)}


def _orbit(v: int, gens: Sequence[Permutation]) -> list[int]:
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for p in gens:
            y = p.images[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return sorted(seen)


def _orbits(n: int, gens: Sequence[Permutation]) -> list[list[int]]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in gens:
        for i, j in enumerate(p.images):
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


# labelled structures ---------------------------------------------------------

class _Encoder:
    """Maps arbitrary hashable labels to small ints, shared between structures."""

    def __init__(self):
        self.codes: dict = {}

    def __call__(self, label) -> int:
        code = self.codes.get(label)
        if code is None:
            code = self.codes[label] = len(self.codes)
        return code


class _Structure:
    __slots__ = ("n", "nbrs", "lookup", "vcolors")

    def __init__(self, n, pair_labels: dict, vcolors=None):
        # pair_labels: (u, v) -> int label of the ordered pair, present for both orders
        nbrs = [[] for _ in range(n)]
        for (u, v), lab in pair_labels.items():
            nbrs[u].append((v, lab))
        self.n = n
        self.nbrs = [tuple(sorted(x)) for x in nbrs]
        self.lookup = [dict(x) for x in self.nbrs]
        self.vcolors = list(vcolors) if vcolors is not None else [0] * n


def _graph_structure(g: Graph, labels: Mapping | None, enc: _Encoder, vcolors=None) -> _Structure:
    pairs = {}
    for e in g.edges:
        lab = enc(labels.get(e) if labels is not None else None)
        pairs[e] = lab
        pairs[(e[1], e[0])] = lab
    return _Structure(g.n, pairs, vcolors)


def _digraph_structure(d: Digraph, labels: Mapping | None, enc: _Encoder, vcolors=None) -> _Structure:
    def arc_label(u, v):
        if not d.has_arc(u, v):
            return _ABSENT_KEY
        return ("arc", labels.get((u, v)) if labels is not None else None)

    pairs = {}
    for u, v in d.arcs:
        for x, y in ((u, v), (v, u)):
            if (x, y) not in pairs:
                pairs[(x, y)] = enc((arc_label(x, y), arc_label(y, x)))
    return _Structure(d.n, pairs, vcolors)


_ABSENT_KEY = ("absent",)


def _refine(st: _Structure, colors: list[int]) -> tuple[list[int], int]:
    """Coarsest equitable refinement of ``colors`` plus a hash of the refinement trace."""
    nbrs = st.nbrs
    n = st.n
    k = len(set(colors))
    trace = []
    while True:
        sigs = [(colors[v], tuple(sorted([(colors[w], lab) for w, lab in nbrs[v]])))
                for v in range(n)]
        uniq = sorted(set(sigs))
        rank = {s: i for i, s in enumerate(uniq)}
        colors = [rank[s] for s in sigs]
        trace.append(hash(tuple(uniq)))
        if len(uniq) == k:
            return colors, hash(tuple(trace))
        k = len(uniq)


def _individualize(colors: list[int], v: int) -> list[int]:
    out = list(colors)
    out[v] = max(colors) + 1
    return out


def _target_cell(colors: list[int]) -> list[int] | None:
    counts = Counter(colors)
    best = None
    for col, cnt in counts.items():
        if cnt > 1 and (best is None or (cnt, col) < best):
            best = (cnt, col)
    if best is None:
        return None
    return [v for v, c in enumerate(colors) if c == best[1]]


def _initial(st: _Structure, fixed: Sequence[int]) -> tuple[list[int], int]:
    colors = list(st.vcolors)
    for v in fixed:
        colors = _individualize(colors, v)
    return _refine(st, colors)


class _LeftPath:
    """A fixed root-to-leaf path (first vertex of each target cell)."""

    def __init__(self, st: _Structure, colors: list[int]):
        self.levels: list[tuple[list[int], list[int]]] = []
        self.traces: list[int] = []
        cur = colors
        while True:
            cell = _target_cell(cur)
            if cell is None:
                break
            self.levels.append((cur, cell))
            cur, tr = _refine(st, _individualize(cur, cell[0]))
            self.traces.append(tr)
        self.leaf = cur

    @property
    def base(self) -> list[int]:
        return [cell[0] for _, cell in self.levels]


def _leaf_map(stA: _Structure, leafA: list[int], stB: _Structure, leafB: list[int]):
    inv = [0] * stB.n
    for v, c in enumerate(leafB):
        inv[c] = v
    phi = [inv[leafA[v]] for v in range(stA.n)]
    lookB = stB.lookup
    for v in range(stA.n):
        pv = phi[v]
        if stA.vcolors[v] != stB.vcolors[pv] or len(stA.nbrs[v]) != len(stB.nbrs[pv]):
            return None
        row = lookB[pv]
        for w, lab in stA.nbrs[v]:
            if row.get(phi[w]) != lab:
                return None
    return phi


def _descend(stA, path: _LeftPath, stB, colorsB: list[int], depth: int):
    """Search below ``colorsB`` for a leaf matching ``path`` from ``depth`` down."""
    if depth == len(path.levels):
        return _leaf_map(stA, path.leaf, stB, colorsB)
    left_colors, left_cell = path.levels[depth]
    target = left_colors[left_cell[0]]
    for z in [v for v, c in enumerate(colorsB) if c == target]:
        nxt, tr = _refine(stB, _individualize(colorsB, z))
        if tr != path.traces[depth]:
            continue
        found = _descend(stA, path, stB, nxt, depth + 1)
        if found is not None:
            return found
    return None


def _group(st: _Structure, fixed: Sequence[int]) -> tuple[list[Permutation], int, list[int]]:
    colors, _ = _initial(st, fixed)
    path = _LeftPath(st, colors)
    gens: list[Permutation] = []
    order = 1
    for lvl in reversed(range(len(path.levels))):
        cur, cell = path.levels[lvl]
        x = cell[0]
        orbit = set(_orbit(x, gens))
        for y in cell[1:]:
            if y in orbit:
                continue
            start, tr = _refine(st, _individualize(cur, y))
            if tr != path.traces[lvl]:
                continue
            phi = _descend(st, path, st, start, lvl + 1)
            if phi is not None:
                gens.append(Permutation(tuple(phi)))
                orbit = set(_orbit(x, gens))
        order *= len(orbit)
    return gens, order, path.base


# public API -----------------------------------------------------------------

def _labelled_group(g: Graph, labels: Mapping | None, fixed: Iterable[int] = ()) -> AutGroup:
    fixed = tuple(fixed)
    st = _graph_structure(g, labels, _Encoder())
    gens, order, base = _group(st, fixed)
    return AutGroup(g.n, tuple(gens), order, tuple(base), fixed,
                    dict(labels) if labels is not None else None)


def automorphism_group(g: Graph) -> AutGroup:
    return _labelled_group(g, None)


def stabilizer(g: Graph, fixed: Iterable[int]) -> AutGroup:
    """Automorphisms of ``g`` fixing every listed vertex."""
    return _labelled_group(g, None, fixed)


def is_asymmetric(g: Graph) -> bool:
    return automorphism_group(g).order == 1


def color_preserving_group(g: Graph, c, fixed: Iterable[int] = (), partial: bool = False) -> AutGroup:
    """Automorphisms of ``g`` preserving the edge coloring ``c``.

    ``c`` is an EdgeColoring or a plain mapping edge -> color. With
    ``partial=True`` uncolored edges are allowed and act as one extra color.
    """
    assignment = getattr(c, "assignment", c)
    if not partial:
        missing = [e for e in g.edges if e not in assignment]
        if missing:
            raise IncompleteColoring(f"{len(missing)} edges uncolored, e.g. {missing[0]}")
    labels = {e: ("c", assignment[e]) if e in assignment else ("uncolored",) for e in g.edges}
    return _labelled_group(g, labels, fixed)


def digraph_automorphism_group(d: Digraph, c=None, fixed: Iterable[int] = (), partial: bool = False) -> AutGroup:
    """Automorphisms of a digraph, optionally preserving an arc coloring."""
    fixed = tuple(fixed)
    labels = None
    if c is not None:
        assignment = getattr(c, "assignment", c)
        if not partial:
            missing = [a for a in d.arcs if a not in assignment]
            if missing:
                raise IncompleteColoring(f"{len(missing)} arcs uncolored, e.g. {missing[0]}")
        labels = {a: assignment.get(a, ("uncolored",)) for a in d.arcs}
    st = _digraph_structure(d, labels, _Encoder())
    gens, order, base = _group(st, fixed)
    return AutGroup(d.n, tuple(gens), order, tuple(base), fixed, labels)


def find_isomorphism(gA: Graph, gB: Graph, labelsA: Mapping | None = None,
                     labelsB: Mapping | None = None,
                     pairs: Sequence[tuple[int, int]] = ()) -> Permutation | None:
    """A label-preserving isomorphism gA -> gB sending each ``a`` to ``b`` in ``pairs``."""
    if gA.n != gB.n or gA.m != gB.m:
        return None
    enc = _Encoder()
    stA = _graph_structure(gA, labelsA, enc)
    stB = _graph_structure(gB, labelsB, enc)
    colorsA, trA = _initial(stA, [a for a, _ in pairs])
    colorsB, trB = _initial(stB, [b for _, b in pairs])
    if trA != trB:
        return None
    phi = _descend(stA, _LeftPath(stA, colorsA), stB, colorsB, 0)
    return Permutation(tuple(phi)) if phi is not None else None


def colorings_isomorphic(g: Graph, c1, c2, group: AutGroup | None = None) -> bool:
    """True iff some element of ``group`` (default Aut(g)) carries ``c1`` onto ``c2``."""
    a1 = getattr(c1, "assignment", c1)
    a2 = getattr(c2, "assignment", c2)
    for a in (a1, a2):
        missing = [e for e in g.edges if e not in a]
        if missing:
            raise IncompleteColoring(f"{len(missing)} edges uncolored, e.g. {missing[0]}")
    if group is not None and not group.exact_stabilizer:
        return any(all(a1[e] == a2[p.map_edge(e)] for e in g.edges) for p in group.elements())
    base = group.labels if group is not None else None
    fixed = group.fixed if group is not None else ()
    la = {e: (base.get(e) if base else None, a1[e]) for e in g.edges}
    lb = {e: (base.get(e) if base else None, a2[e]) for e in g.edges}
    return find_isomorphism(g, g, la, lb, [(v, v) for v in fixed]) is not None


# brute-force oracle -----------------------------------------------------------

def naive_automorphisms(g: Graph, labels: Mapping | None = None,
                        fixed: Iterable[int] = ()) -> Iterator[Permutation]:
    """Every automorphism by plain extension of partial vertex maps.

    Independent of the refinement engine; meant for small ``n``.
    """
    n = g.n
    fixed = set(fixed)
    deg = g.degrees()
    lab = labels if labels is not None else {}
    phi = [-1] * n
    used = [False] * n

    def consistent(v, x):
        if deg[v] != deg[x]:
            return False
        for u in range(v):
            y = phi[u]
            e, f = g.has_edge(u, v), g.has_edge(y, x)
            if e != f:
                return False
            if e and lab.get(edge(u, v)) != lab.get(edge(y, x)):
                return False
        return True

    def extend(v):
        if v == n:
            yield Permutation(tuple(phi))
            return
        choices = [v] if v in fixed else range(n)
        for x in choices:
            if not used[x] and consistent(v, x):
                phi[v] = x
                used[x] = True
                yield from extend(v + 1)
                used[x] = False
        phi[v] = -1

    yield from extend(0)


def naive_group_order(g: Graph, labels: Mapping | None = None, fixed: Iterable[int] = ()) -> int:
    return sum(1 for _ in naive_automorphisms(g, labels, fixed))
