"""Partial colorings with per-vertex caps, greedy completion and symmetry repair.

Caps are taken from the final degrees in the host graph: a color may appear
at most ``d // 2`` times at a vertex of degree ``d >= 2`` (degree-1 vertices
are exempt). Filling every edge while respecting the caps therefore yields a
strict majority coloring, whatever order the edges are colored in.
"""

from __future__ import annotations

from collections import Counter

from ..automorphism import color_preserving_group, digraph_automorphism_group
from ..coloring import ArcColoring, EdgeColoring
from ..errors import VerifierRejected
from ..graph import Digraph, Graph, edge, symmetric_closure


def majority_cap(d: int) -> int:
    return d // 2 if d >= 2 else d


class EdgeState:
    """Undirected partial coloring of ``g``; labels are single colors."""

    def __init__(self, g: Graph, caps=None):
        self.g = g
        self.assign: dict = {}
        self.count = [Counter() for _ in range(g.n)]
        self.cap = list(caps) if caps is not None else [majority_cap(d) for d in g.degrees()]

    # single edges
    def room(self, v, c) -> int:
        return self.cap[v] - self.count[v][c]

    def allowed(self, e, c) -> bool:
        u, v = e
        return self.room(u, c) > 0 and self.room(v, c) > 0

    def put(self, e, c):
        e = edge(*e)
        old = self.assign.get(e)
        if old is not None:
            self.count[e[0]][old] -= 1
            self.count[e[1]][old] -= 1
        self.assign[e] = c
        self.count[e[0]][c] += 1
        self.count[e[1]][c] += 1

    def drop(self, e):
        e = edge(*e)
        c = self.assign.pop(e)
        self.count[e[0]][c] -= 1
        self.count[e[1]][c] -= 1

    def get(self, e):
        return self.assign.get(edge(*e))

    # engine protocol: an oriented pair (v, w) carries one label
    def label_keys(self, lab, end):
        return (lab,)

    def label_allowed(self, v, w, lab) -> bool:
        return self.allowed((v, w), lab)

    def put_label(self, v, w, lab):
        self.put((v, w), lab)

    def room_key(self, v, key) -> int:
        return self.room(v, key)

    def pair_label(self, v, w):
        return self.assign.get(edge(v, w))

    def partial_group(self, hg: Graph, local: list[int], fixed):
        labels = {}
        for x, y in hg.edges:
            c = self.assign.get(edge(local[x], local[y]))
            if c is not None:
                labels[(x, y)] = c
        return color_preserving_group(hg, labels, fixed, partial=True)

    # repair protocol
    def items(self):
        return list(self.g.edges)

    def image(self, phi, it):
        return phi.map_edge(it)

    def group(self, fixed=()):
        return color_preserving_group(self.g, self.assign, fixed)

    def can_recolor(self, it, c) -> bool:
        old = self.assign[it]
        if old == c:
            return False
        u, v = it
        return self.room(u, c) > 0 and self.room(v, c) > 0

    def coloring(self, palette) -> EdgeColoring:
        return EdgeColoring(self.assign, palette)


class ArcState:
    """Partial arc coloring of a symmetric digraph.

    A label on an oriented vertex pair ``(v, w)`` is a pair of colors
    ``(x, y)``: arc v->w gets ``x`` and arc w->v gets ``y``.
    """

    def __init__(self, d: Digraph):
        self.d = d
        self.assign: dict = {}
        self.out = [Counter() for _ in range(d.n)]
        self.inn = [Counter() for _ in range(d.n)]
        self.out_cap = [majority_cap(d.out_degree(v)) for v in range(d.n)]
        self.in_cap = [majority_cap(d.in_degree(v)) for v in range(d.n)]

    def arc_allowed(self, a, c) -> bool:
        u, v = a
        return self.out[u][c] < self.out_cap[u] and self.inn[v][c] < self.in_cap[v]

    def put(self, a, c):
        a = tuple(a)
        old = self.assign.get(a)
        if old is not None:
            self.out[a[0]][old] -= 1
            self.inn[a[1]][old] -= 1
        self.assign[a] = c
        self.out[a[0]][c] += 1
        self.inn[a[1]][c] += 1

    def get(self, a):
        return self.assign.get(tuple(a))

    def label_keys(self, lab, end):
        x, y = lab
        return (("out", x), ("in", y)) if end == 0 else (("in", x), ("out", y))

    def room_key(self, v, key) -> int:
        side, c = key
        if side == "out":
            return self.out_cap[v] - self.out[v][c]
        return self.in_cap[v] - self.inn[v][c]

    def label_allowed(self, v, w, lab) -> bool:
        x, y = lab
        return self.arc_allowed((v, w), x) and self.arc_allowed((w, v), y)

    def put_label(self, v, w, lab):
        self.put((v, w), lab[0])
        self.put((w, v), lab[1])

    def pair_label(self, v, w):
        x, y = self.assign.get((v, w)), self.assign.get((w, v))
        return None if x is None and y is None else (x, y)

    def partial_group(self, hg: Graph, local: list[int], fixed):
        dh = symmetric_closure(hg)
        labels = {}
        for x, y in dh.arcs:
            c = self.assign.get((local[x], local[y]))
            if c is not None:
                labels[(x, y)] = c
        return digraph_automorphism_group(dh, labels, fixed, partial=True)

    def items(self):
        return list(self.d.arcs)

    def image(self, phi, it):
        return (phi(it[0]), phi(it[1]))

    def group(self, fixed=()):
        return digraph_automorphism_group(self.d, self.assign, fixed)

    def can_recolor(self, it, c) -> bool:
        old = self.assign[it]
        if old == c:
            return False
        return self.arc_allowed(it, c)

    def coloring(self, palette) -> ArcColoring:
        return ArcColoring(self.assign, palette)


def greedy_fill(state: EdgeState, edges, palette, prefer=None):
    """Color each uncolored edge with the first palette color allowed at both ends.

    ``prefer`` may reorder the palette per edge (callable edge -> list).
    """
    for e in edges:
        if state.get(e) is not None:
            continue
        order = prefer(e) if prefer is not None else palette
        for c in order:
            if state.allowed(e, c):
                state.put(e, c)
                break
        else:
            raise VerifierRejected(f"no color fits edge {e} under the majority caps")


def greedy_fill_arcs(state: ArcState, arcs, palette):
    for a in arcs:
        if state.get(a) is not None:
            continue
        for c in palette:
            if state.arc_allowed(a, c):
                state.put(a, c)
                break
        else:
            raise VerifierRejected(f"no color fits arc {a} under the majority caps")


def repair(state, palette, fixed=(), protected=frozenset(), max_rounds: int | None = None):
    """Recolor single edges (arcs) until no nontrivial automorphism preserves the coloring.

    Each accepted move breaks a witness automorphism and strictly lowers the
    order of the color-preserving group, so the loop terminates. Moves keep
    the majority caps and never touch ``protected`` items.
    """
    grp = state.group(fixed)
    rounds = 0
    limit = max_rounds if max_rounds is not None else 4 * len(state.items()) + 10
    while not grp.is_trivial():
        rounds += 1
        if rounds > limit:
            raise VerifierRejected(f"symmetry repair did not converge (group order {grp.order})")
        best = None
        for phi in [p for p in grp.generators if not p.is_identity()]:
            for it in state.items():
                if it in protected:
                    continue
                img = state.image(phi, it)
                if img == it:
                    continue
                old = state.get(it)
                for c in palette:
                    if c == state.get(img) or not state.can_recolor(it, c):
                        continue
                    state.put(it, c)
                    trial = state.group(fixed)
                    if trial.order < grp.order:
                        best = trial
                        break
                    state.put(it, old)
                if best is not None:
                    break
            if best is not None:
                break
        if best is None:
            raise VerifierRejected(f"no single recoloring reduces the symmetry (group order {grp.order})")
        grp = best
    return state
