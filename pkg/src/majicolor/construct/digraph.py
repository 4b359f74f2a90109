"""Majority distinguishing arc colorings of symmetric digraphs with ceil(Delta^(1/4)) + 4 colors."""

from __future__ import annotations

import itertools

from ..coloring import ArcColoring
from ..errors import (BudgetExhausted, MinDegreeTooSmall, NoCycleExists, NotSymmetric, PreconditionError,
                      VerifierRejected)
from ..graph import Digraph, is_connected
from ..verify import verify_arc_majority_distinguishing
from ._state import ArcState, greedy_fill_arcs, repair
from .main import RESTARTS, grow
from .spheres import ceil_fourth_root, ceil_sqrt

ALPHA, BETA = 1, 2


def _seed_cycle(g, seed: int):
    from ..search import find_cycle
    try:
        return find_cycle(g, min_len=3, longest=g.n <= 20, seed=seed)
    except (NoCycleExists, BudgetExhausted):
        return None


def color_symmetric_digraph(d: Digraph, seed: int = 0) -> ArcColoring:
    """Arc coloring over {0, 1, ..., q+3}, q = ceil(Delta^(1/4)).

    A cycle gets 0 on all arcs of one direction and, in the other direction,
    alpha on one arc and beta on the rest, so its vertices are fixed. Ear
    regions are then colored sphere by sphere, each vertex pair receiving an
    ordered color pair for its two arcs; q + 3 colors per position give far
    more than ceil(sqrt(Delta)) distinct pairs.
    """
    if not d.is_symmetric():
        raise NotSymmetric("digraph is not symmetric")
    g = d.underlying()
    if not is_connected(g):
        raise PreconditionError("digraph must be connected")
    if g.n == 0 or g.min_degree < 2:
        raise MinDegreeTooSmall("underlying graph needs minimum degree at least 2")
    delta = g.max_degree
    q = ceil_fourth_root(delta)
    colors = list(range(1, q + 4))
    palette = [0] + colors
    pairs = list(itertools.product(colors, repeat=2))
    s = ceil_sqrt(delta)
    last = None
    for attempt in range(RESTARTS):
        state = ArcState(d)
        cyc = _seed_cycle(g, seed + attempt)
        protected = set()
        covered = {0}
        if cyc is not None:
            L = len(cyc)
            start = (seed + attempt) % L
            cyc = cyc[start:] + cyc[:start]
            for i in range(L):
                u, v = cyc[i], cyc[(i + 1) % L]
                state.put((u, v), 0)
                state.put((v, u), ALPHA if i == 0 else BETA)
                protected |= {(u, v), (v, u)}
            covered = set(cyc)
        try:
            grow(state, g, covered, s, pairs, seed + attempt)
            greedy_fill_arcs(state, d.arcs, colors)
            repair(state, colors, protected=frozenset(protected))
            c = state.coloring(palette)
            rep = verify_arc_majority_distinguishing(d, c)
            if not rep.passed:
                raise VerifierRejected("arc coloring failed certification", rep)
            if c.colors_used > q + 4:
                raise VerifierRejected(f"used {c.colors_used} colors, bound is {q + 4}")
            return c
        except VerifierRejected as exc:
            last = exc
    raise last
