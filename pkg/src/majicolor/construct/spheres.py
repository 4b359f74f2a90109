"""Sphere-by-sphere symmetry breaking between two fixed vertices, and the C0 cycle pattern.

The engine colors a subgraph H layer by layer from a root ``a``. Before each
layer the vertices of the current sphere are grouped into orbits of the
automorphisms of H that fix ``a`` (and ``b``) and preserve the colors so far;
vertices in one orbit get pairwise different label multisets on their edges
to the next sphere, so once the next sphere is fixed this one is too. The
engine is generic over the label type: single colors for graphs, ordered
color pairs for symmetric digraphs.
"""

from __future__ import annotations

import itertools
import math

from ..coloring import EdgeColoring, ZERO, ZERO_PRIME
from ..errors import BadColors, CycleTooShort, PaletteTooSmall, PreconditionGeodesicFailed
from ..graph import Graph, bfs_distances, edge, geodesic_cover_check
from ._state import EdgeState, greedy_fill, repair

MAX_CANDIDATES = 3000


def ceil_sqrt(x: int) -> int:
    return math.isqrt(x - 1) + 1 if x > 0 else 0


def ceil_fourth_root(x: int) -> int:
    r = 0
    while r ** 4 < x:
        r += 1
    return r


def color_C0(cycle, alpha, beta, start: int = 0) -> EdgeColoring:
    """alpha, 0, beta on three consecutive cycle edges, then 0', 0, 0', ... around."""
    cycle = list(cycle)
    if len(cycle) < 5:
        raise CycleTooShort(f"cycle of length {len(cycle)} is shorter than 5")
    if alpha == beta or {alpha, beta} & {ZERO, ZERO_PRIME}:
        raise BadColors("alpha and beta must be distinct colors other than 0 and 0'")
    L = len(cycle)
    pattern = [alpha, ZERO, beta] + [ZERO_PRIME if j % 2 == 0 else ZERO for j in range(L - 3)]
    assign = {}
    for j in range(L):
        i = (start + j) % L
        assign[edge(cycle[i], cycle[(i + 1) % L])] = pattern[j]
    return EdgeColoring(assign, [ZERO, ZERO_PRIME] + sorted({alpha, beta}, key=str))


# multisets ----------------------------------------------------------------------

def _each_at_least_twice(labels, total, cap):
    def rec(i, left):
        if left == 0:
            yield ()
            return
        if i == len(labels):
            return
        for mult in range(min(cap, left), 1, -1):
            for rest in rec(i + 1, left - mult):
                yield (labels[i],) * mult + rest
        yield from rec(i + 1, left)
    return rec(0, total)


def regime_multisets(labels, k: int, s: int):
    """Candidate label multisets for k edges, preferred shapes first.

    k = 1: single labels; 2 <= k <= s: k distinct labels; k = 4 above s:
    two labels used twice each; otherwise one label once and the rest each
    at least twice. Every other multiset follows, so a choice always exists.
    """
    labels = list(labels)
    seen = set()

    def fresh(ms):
        if ms not in seen:
            seen.add(ms)
            return True
        return False

    if k == 1:
        shaped = ((x,) for x in labels)
    elif k <= s:
        shaped = itertools.combinations(labels, k)
    elif k == 4:
        shaped = ((x, x, y, y) for x, y in itertools.combinations(labels, 2))
    else:
        shaped = ((x,) + rest for x in labels
                  for rest in _each_at_least_twice([y for y in labels if y != x], k - 1, k // 2))
    for ms in shaped:
        ms = tuple(sorted(ms, key=labels.index))
        if fresh(ms):
            yield ms
    for ms in itertools.combinations_with_replacement(labels, k):
        if fresh(ms):
            yield ms


def _match(state, v, targets, ms):
    """Assign the labels of ``ms`` to the edges v-w (w in targets); None if impossible."""
    options = [[j for j, w in enumerate(targets) if state.label_allowed(v, w, lab)] for lab in ms]
    owner = [-1] * len(targets)

    def augment(i, seen):
        for j in options[i]:
            if j in seen:
                continue
            seen.add(j)
            if owner[j] < 0 or augment(owner[j], seen):
                owner[j] = i
                return True
        return False

    for i in range(len(ms)):
        if not augment(i, set()):
            return None
    return {targets[j]: ms[i] for j, i in enumerate(owner)}


def _fits(state, v, ms) -> bool:
    need = {}
    for lab in ms:
        for key in state.label_keys(lab, 0):
            need[key] = need.get(key, 0) + 1
    return all(state.room_key(v, key) >= cnt for key, cnt in need.items())


def _signature(state, v, nbrs, ms=()):
    keys = []
    for w in nbrs:
        lab = state.pair_label(v, w)
        if lab is not None:
            keys.extend(state.label_keys(lab, 0))
    for lab in ms:
        keys.extend(state.label_keys(lab, 0))
    return tuple(sorted(map(repr, keys)))


def sphere_engine(state, h_edges, a: int, b: int | None, s: int, labels, shift: int = 0):
    """Color the edges ``h_edges`` (global vertex ids) of H into ``state``.

    ``b=None`` gives the open-ended variant (no far endpoint). Edges already
    colored in ``state`` are left alone.
    """
    labels = list(labels)
    if shift:
        shift %= len(labels)
        labels = labels[shift:] + labels[:shift]
    hg, local = _relabel(h_edges)
    index = {x: i for i, x in enumerate(local)}
    la = index[a]
    dist = bfs_distances(hg, la)
    fixed = [la] + ([index[b]] if b is not None else [])
    top = max(d for d in dist if d >= 0)

    def down(x):
        return [local[y] for y in hg.neighbors(x) if dist[y] == dist[x] + 1]

    # root: equal colors on groups of at most s edges, never more than half of d(a)
    root_edges = [w for w in down(la) if state.pair_label(a, w) is None]
    k = len(root_edges)
    if k:
        size = max(1, min(s, k // 2)) if k >= 2 else 1
        groups = [root_edges[i:i + size] for i in range(0, k, size)]
        taken = []
        for grp in groups:
            pick = None
            for reuse in (False, True):
                for lab in labels:
                    if not reuse and lab in taken:
                        continue
                    if _fits(state, a, (lab,) * len(grp)) and all(
                            state.label_allowed(a, w, lab) for w in grp):
                        pick = lab
                        break
                if pick is not None:
                    break
            if pick is None:
                continue  # left to the greedy pass
            taken.append(pick)
            for w in grp:
                state.put_label(a, w, pick)

    for r in range(1, top):
        grp = state.partial_group(hg, local, fixed)
        orbits = [o for o in grp.orbits() if dist[o[0]] == r]
        layer_sigs = set()
        for orb in sorted(orbits):
            used = set()
            for x in orb:
                v = local[x]
                targets = [w for w in down(x) if state.pair_label(v, w) is None]
                if not targets:
                    continue
                nbrs = [local[y] for y in hg.neighbors(x)]
                chosen = None
                for strict in (True, False):
                    for tries, ms in enumerate(regime_multisets(labels, len(targets), s)):
                        if tries > MAX_CANDIDATES:
                            break
                        if len(orb) > 1 and ms in used:
                            continue
                        if strict and _signature(state, v, nbrs, ms) in layer_sigs:
                            continue
                        if not _fits(state, v, ms):
                            continue
                        match = _match(state, v, targets, ms)
                        if match is not None:
                            chosen = (ms, match)
                            break
                    if chosen is not None:
                        break
                if chosen is None:
                    continue  # left to the greedy pass
                ms, match = chosen
                used.add(ms)
                for w, lab in match.items():
                    state.put_label(v, w, lab)
                layer_sigs.add(_signature(state, v, nbrs))

    # edges inside spheres and anything the layered pass could not place
    for x, y in hg.edges:
        u, w = local[x], local[y]
        if state.pair_label(u, w) is not None:
            continue
        for lab in labels:
            if state.label_allowed(u, w, lab):
                state.put_label(u, w, lab)
                break


def _relabel(edges):
    verts = sorted({v for e in edges for v in e})
    index = {v: i for i, v in enumerate(verts)}
    return Graph(len(verts), [(index[u], index[v]) for u, v in edges]), verts


def lemma_H_coloring(h: Graph, a: int, b: int, delta: int | None = None, palette=None,
                     seed: int = 0) -> EdgeColoring:
    """Almost majority coloring of ``h`` breaking every automorphism that fixes a and b.

    Requires every vertex of ``h`` to lie on a shortest a-b path. The layered
    pass does the work; any symmetry it leaves (it can, when caps collide) is
    removed by single-edge recoloring, and the output is certified.
    """
    if not geodesic_cover_check(h, a, b):
        raise PreconditionGeodesicFailed("some vertex is not on a shortest a-b path")
    s = ceil_sqrt(delta if delta is not None else max(h.max_degree, 1))
    if palette is None:
        palette = list(range(1, s + 4))
    if len(palette) < s + 3:
        raise PaletteTooSmall(f"need {s + 3} colors, got {len(palette)}")
    state = EdgeState(h)
    if h.m:
        sphere_engine(state, list(h.edges), a, b, s, palette, shift=seed)
        greedy_fill(state, h.edges, palette)
        repair(state, palette, fixed=(a, b))
    return state.coloring(palette)
