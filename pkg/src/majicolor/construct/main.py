"""Majority distinguishing colorings with ceil(sqrt(Delta)) + 5 colors.

Two-connected graphs: a long cycle gets the 0/0' pattern with one alpha and
one beta edge, which pins every cycle vertex; chords get two further colors;
the rest of the graph is absorbed ear by ear, each ear region colored sphere
by sphere from one endpoint. Graphs with cut vertices are handled from the
center of the block-cut tree outwards: once a cut vertex is fixed, the
branches hanging from it are colored so that isomorphic siblings receive
non-isomorphic colorings.

Every stage works on one shared capped state, so the union is a majority
coloring by construction; whatever symmetry the layered passes leave is
removed by single-edge recoloring, and the result is certified.
"""

from __future__ import annotations

from collections import deque

from ..automorphism import color_preserving_group, colorings_isomorphic, find_isomorphism, stabilizer
from ..coloring import EdgeColoring, ZERO, ZERO_PRIME
from ..errors import (BudgetExhausted, EnumerationExhausted, NoCycleExists, NotConnectivity1,
                      NotTwoConnected, PendantEdgePresent, PreconditionError, VerifierRejected)
from ..graph import Graph, block_decomposition, components, edge, is_connected, is_two_connected
from ..verify import verify_majority, verify_majority_distinguishing
from ._state import EdgeState, greedy_fill, repair
from .balanced import two_coloring_balanced
from .edgecolor import misra_gries
from .spheres import ceil_sqrt, color_C0, sphere_engine, _relabel
from .special import color_K2n

ALPHA, BETA, GAMMA, DELTA = 1, 2, 3, 4
BRANCH_ATTEMPTS = 12
RESTARTS = 4


def palette_for(delta: int, zeros: bool = True) -> list:
    s = ceil_sqrt(max(delta, 1))
    return ([ZERO, ZERO_PRIME] if zeros else []) + list(range(1, s + 4))


class _View:
    """A subgraph's edges seen through a shared state, for symmetry repair."""

    def __init__(self, state: EdgeState, edges):
        self.state = state
        self.hg, self.local = _relabel(list(edges))
        self.index = {v: i for i, v in enumerate(self.local)}
        self._items = [edge(self.local[x], self.local[y]) for x, y in self.hg.edges]

    def items(self):
        return self._items

    def image(self, phi, it):
        return edge(self.local[phi(self.index[it[0]])], self.local[phi(self.index[it[1]])])

    def labels(self):
        return {(x, y): self.state.assign[edge(self.local[x], self.local[y])] for x, y in self.hg.edges}

    def group(self, fixed=()):
        return color_preserving_group(self.hg, self.labels(), [self.index[v] for v in fixed])

    def get(self, it):
        return self.state.get(it)

    def put(self, it, c):
        self.state.put(it, c)

    def can_recolor(self, it, c) -> bool:
        return self.state.can_recolor(it, c)


# ears --------------------------------------------------------------------------

def _shortest_ear(g: Graph, covered: set):
    """(a, b, edges of all shortest a-b paths through uncovered vertices), or None."""
    best = None
    for a in sorted(covered):
        dist = {a: 0}
        queue = deque([a])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y in covered or y in dist:
                    continue
                dist[y] = dist[x] + 1
                queue.append(y)
        for x, dx in dist.items():
            if x == a:
                continue
            for b in g.neighbors(x):
                if b in covered and b != a:
                    cand = (dx + 1, a, b)
                    if best is None or cand < best:
                        best = cand
    if best is None:
        return None
    _, a, b = best
    allowed = {v for v in range(g.n) if v not in covered} | {a, b}
    sub = [e for e in g.edges if e[0] in allowed and e[1] in allowed and e != edge(a, b)]
    da, db = _dists(sub, a), _dists(sub, b)
    total = da[b]
    keep = [(x, y) for x, y in sub if x in da and y in db and y in da and x in db
            and (da[x] + 1 + db[y] == total or da[y] + 1 + db[x] == total)]
    return a, b, keep


def _open_region(g: Graph, covered: set):
    """A covered vertex with uncovered neighbours and the BFS layers it reaches."""
    a = next(v for v in sorted(covered) if any(w not in covered for w in g.neighbors(v)))
    allowed = {v for v in range(g.n) if v not in covered} | {a}
    sub = [e for e in g.edges if e[0] in allowed and e[1] in allowed]
    da = _dists(sub, a)
    return a, [(x, y) for x, y in sub if x in da and y in da and abs(da[x] - da[y]) == 1]


def _dists(edges, src) -> dict:
    adj = {}
    for x, y in edges:
        adj.setdefault(x, []).append(y)
        adj.setdefault(y, []).append(x)
    dist = {src: 0}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for y in adj.get(x, ()):
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def grow(state, g: Graph, covered: set, s: int, labels, seed: int = 0):
    """Absorb uncovered vertices ear by ear (open regions when no ear exists)."""
    covered = set(covered)
    targets = {v for e in g.edges for v in e}
    step = 0
    while not targets <= covered:
        ear = _shortest_ear(g, covered)
        if ear is not None:
            a, b, h_edges = ear
        else:
            a, h_edges = _open_region(g, covered)
            b = None
        sphere_engine(state, h_edges, a, b, s, labels, shift=seed + step)
        covered |= {v for e in h_edges for v in e}
        step += 1
    return covered


# blocks ------------------------------------------------------------------------

def _seed_cycle(bg: Graph, seed: int):
    from ..search import find_cycle
    try:
        return find_cycle(bg, min_len=5, longest=True, seed=seed)
    except (NoCycleExists, BudgetExhausted):
        return None


def _color_block(state: EdgeState, block_edges, root, s: int, labels, seed: int, zeros: bool):
    """Color one block into ``state``; returns the protected (0/0') edges."""
    bg, local = _relabel(list(block_edges))
    host = Graph(state.g.n, block_edges)
    protected = set()
    covered = {root} if root is not None else {local[0]}
    cyc = _seed_cycle(bg, seed) if zeros else None
    if cyc is not None:
        cyc = [local[v] for v in cyc]
        shift = seed % len(cyc)
        seedcol = color_C0(cyc, ALPHA, BETA, start=shift)
        for e, c in seedcol.assignment.items():
            state.put(e, c)
        protected = set(seedcol.assignment)
        on_cycle = set(cyc)
        chords = [e for e in block_edges if e[0] in on_cycle and e[1] in on_cycle and e not in protected]
        if chords:
            two = two_coloring_balanced(Graph(state.g.n, chords), colors=(GAMMA, DELTA), seed=seed)
            for e, c in two.coloring.assignment.items():
                state.put(e, c)
        covered = on_cycle
    grow(state, host, covered, s, labels, seed)
    greedy_fill(state, host.edges, labels)
    if len(block_edges) == 1:
        # a central bridge may still flip; the sides settle that, and the final pass checks it
        return protected
    view = _View(state, block_edges)
    repair(view, labels, fixed=(root,) if root is not None else (), protected=frozenset(protected))
    return protected


# 2-connected -------------------------------------------------------------------

def _k2n_shape(g: Graph):
    ys = [v for v in range(g.n) if g.degree(v) == 2]
    xs = [v for v in range(g.n) if g.degree(v) != 2]
    if len(xs) != 2 or len(ys) < 3:
        return None
    x1, x2 = xs
    if not all(g.has_edge(x1, y) and g.has_edge(x2, y) for y in ys):
        return None
    return x1, x2, ys, g.has_edge(x1, x2)


def _color_k2n_like(g: Graph, shape) -> EdgeColoring:
    x1, x2, ys, extra = shape
    base = color_K2n(len(ys))
    to_g = {0: x1, 1: x2, **{i + 2: y for i, y in enumerate(ys)}}
    assign = {edge(to_g[u], to_g[v]): c for (u, v), c in base.assignment.items()}
    k = max(base.palette)
    if not extra:
        return EdgeColoring(assign, base.palette)
    for c in range(1, k + 2):
        trial = EdgeColoring({**assign, edge(x1, x2): c}, list(range(1, max(k, c) + 1)))
        if verify_majority_distinguishing(g, trial).passed:
            return trial
    raise VerifierRejected("no color for the extra edge of K_2,n + e")


def color_k2n_graph(g: Graph) -> EdgeColoring:
    """K_{2,n} (or K_{2,n} plus the edge between its two hubs) given as an arbitrary labelling."""
    shape = _k2n_shape(g)
    if shape is None:
        raise PreconditionError("graph is not K_2,n or K_2,n + e with n >= 3")
    c = _color_k2n_like(g, shape)
    return _certify(g, c, max(c.palette), "K_2,n coloring")


def _proper_distinguishing(g: Graph, seed: int) -> EdgeColoring:
    """Proper distinguishing coloring for Delta <= 3 (exact when small)."""
    if g.m <= 15:
        from ..exact import exact_index
        try:
            return exact_index(g, "chi-d", budget=300_000)[1]
        except BudgetExhausted:
            pass
    state = EdgeState(g, caps=[1] * g.n)
    for e, c in misra_gries(g.n, g.edges).items():
        state.put(e, c + 1)
    pal = list(range(1, g.max_degree + 3))
    repair(state, pal)
    return state.coloring(pal)


def _certify(g: Graph, c: EdgeColoring, limit: int, what: str) -> EdgeColoring:
    rep = verify_majority_distinguishing(g, c)
    if not rep.passed:
        raise VerifierRejected(f"{what} failed certification", rep)
    if c.colors_used > limit:
        raise VerifierRejected(f"{what} used {c.colors_used} colors, bound is {limit}")
    return c


def color_2connected(g: Graph, seed: int = 0) -> EdgeColoring:
    if not is_two_connected(g):
        raise NotTwoConnected("graph is not 2-connected")
    delta = g.max_degree
    limit = ceil_sqrt(delta) + 5
    if delta <= 3:
        return _certify(g, _proper_distinguishing(g, seed), limit, "subcubic coloring")
    shape = _k2n_shape(g)
    if shape is not None:
        return _certify(g, _color_k2n_like(g, shape), limit, "K_2,n coloring")
    pal = palette_for(delta)
    labels = pal[2:]
    s = ceil_sqrt(delta)
    last = None
    for attempt in range(RESTARTS):
        state = EdgeState(g)
        try:
            _color_block(state, g.edges, None, s, labels, seed + 7 * attempt, zeros=True)
            return _certify(g, state.coloring(pal), limit, "2-connected coloring")
        except VerifierRejected as exc:
            last = exc
    raise last


# connectivity 1 ----------------------------------------------------------------

def _tree_center(bt) -> tuple:
    nodes = {("b", i) for i in range(len(bt.blocks))} | {("c", v) for v in bt.cut_vertices}
    adj = {x: set() for x in nodes}
    for i, v in bt.incidence():
        adj[("b", i)].add(("c", v))
        adj[("c", v)].add(("b", i))
    alive = set(nodes)
    while len(alive) > 2:
        leaves = [x for x in alive if len(adj[x] & alive) <= 1]
        alive -= set(leaves)
    return min(alive, key=lambda x: (x[0] != "c", x))  # a lone edge cannot occur: leaves are blocks


class _Brancher:
    """Colors the branches hanging from fixed cut vertices."""

    def __init__(self, g: Graph, state: EdgeState, s: int, labels, seed: int):
        self.g, self.state, self.s, self.labels, self.seed = g, state, s, labels, seed
        self.bt = block_decomposition(g)

    def branches(self, w, avoid=None) -> list[list[int]]:
        rest = [v for v in range(self.g.n) if v != w]
        sub, verts = self.g.induced(rest)
        comps = [[verts[x] for x in comp] for comp in components(sub)]
        return [sorted(c) for c in comps if avoid is None or avoid not in c]

    def _edges(self, w, comp):
        vs = set(comp) | {w}
        return [e for e in self.g.edges if e[0] in vs and e[1] in vs]

    def _rooted(self, w, comp, colored: bool):
        es = self._edges(w, comp)
        hg, local = _relabel(es)
        labels = None
        if colored:
            labels = {(x, y): self.state.assign[edge(local[x], local[y])] for x, y in hg.edges}
        return hg, local.index(w), labels

    def same_shape(self, w, c1, c2) -> bool:
        a, ra, _ = self._rooted(w, c1, False)
        b, rb, _ = self._rooted(w, c2, False)
        return find_isomorphism(a, b, pairs=[(ra, rb)]) is not None

    def same_coloring(self, w, c1, c2) -> bool:
        a, ra, la = self._rooted(w, c1, True)
        b, rb, lb = self._rooted(w, c2, True)
        return find_isomorphism(a, b, la, lb, pairs=[(ra, rb)]) is not None

    def color_all(self, w, avoid=None, depth=0):
        comps = self.branches(w, avoid)
        classes: list[list[list[int]]] = []
        for comp in comps:
            for cls in classes:
                if self.same_shape(w, cls[0], comp):
                    cls.append(comp)
                    break
            else:
                classes.append([comp])
        for cls in classes:
            done = []
            for j, comp in enumerate(cls):
                base = None
                for attempt in range(BRANCH_ATTEMPTS):
                    seed = self.seed + 31 * depth + 5 * j + attempt
                    self.clear(w, comp)
                    try:
                        self.color_branch(w, comp, seed, depth)
                    except VerifierRejected:
                        continue
                    base = seed
                    if not any(self.same_coloring(w, prev, comp) for prev in done):
                        break
                else:
                    if base is None or not self._perturb(w, comp, done, base, depth):
                        raise EnumerationExhausted(
                            f"no coloring of branch {j + 1} at vertex {w} distinct from its siblings")
                done.append(comp)

    def _rigid(self, w, comp) -> bool:
        hg, root, labels = self._rooted(w, comp, True)
        return color_preserving_group(hg, labels, [root]).is_trivial()

    def _perturb(self, w, comp, done, seed, depth) -> bool:
        """Single-edge recolorings of a rigid branch until it differs from every sibling."""
        self.clear(w, comp)
        self.color_branch(w, comp, seed, depth)
        for e in self._edges(w, comp):
            old = self.state.get(e)
            for c in self.labels:
                if not self.state.can_recolor(e, c):
                    continue
                self.state.put(e, c)
                if self._rigid(w, comp) and not any(self.same_coloring(w, prev, comp) for prev in done):
                    return True
                self.state.put(e, old)
        return False

    def clear(self, w, comp):
        for e in self._edges(w, comp):
            if self.state.get(e) is not None:
                self.state.drop(e)

    def color_branch(self, w, comp, seed, depth):
        vs = set(comp) | {w}
        bi = next(i for i, bv in enumerate(self.bt.block_vertices) if w in bv and bv <= vs)
        block = self.bt.blocks[bi]
        _color_block(self.state, block, w, self.s, self.labels, seed, zeros=False)
        for u in sorted(self.bt.block_vertices[bi] & self.bt.cut_vertices):
            if u != w:
                self.color_all(u, avoid=w, depth=depth + 1)


def color_connectivity1(g: Graph, seed: int = 0) -> EdgeColoring:
    if g.n and g.min_degree == 1:
        raise PendantEdgePresent("graph has a vertex of degree 1")
    if not is_connected(g) or g.n < 3 or is_two_connected(g):
        raise NotConnectivity1("graph must be connected with a cut vertex")
    if g.min_degree < 2:
        raise PreconditionError("minimum degree must be at least 2")
    delta = g.max_degree
    limit = ceil_sqrt(delta) + 5
    pal = palette_for(delta)
    labels = pal[2:]
    s = ceil_sqrt(delta)
    last = None
    for attempt in range(RESTARTS):
        state = EdgeState(g)
        br = _Brancher(g, state, s, labels, seed + 101 * attempt)
        try:
            kind, x = _tree_center(br.bt)
            protected = set()
            if kind == "b":
                block = br.bt.blocks[x]
                protected = _color_block(state, block, None, s, labels, seed + attempt, zeros=True)
                inner = sorted(br.bt.block_vertices[x])
                for u in inner:
                    if u in br.bt.cut_vertices:
                        br.color_all(u, avoid=next(v for v in inner if v != u), depth=1)
            else:
                br.color_all(x)
            greedy_fill(state, g.edges, labels)
            repair(state, labels, protected=frozenset(protected))
            return _certify(g, state.coloring(pal), limit, "connectivity-1 coloring")
        except (VerifierRejected, EnumerationExhausted) as exc:
            last = exc
    raise last


def color_main(g: Graph, seed: int = 0) -> EdgeColoring:
    """Dispatch to the 2-connected or the connectivity-1 route."""
    if is_two_connected(g):
        return color_2connected(g, seed)
    return color_connectivity1(g, seed)


# block enumeration -------------------------------------------------------------

def _check_block_shape(h0: Graph, u0: int) -> bool:
    """True for copies of one block sharing u0, False for a single 2-connected block."""
    if is_two_connected(h0):
        return False
    if not is_connected(h0) or h0.n < 3:
        raise NotTwoConnected("h0 is neither 2-connected nor copies of a block at u0")
    bt = block_decomposition(h0)
    if bt.cut_vertices != frozenset({u0}) or len(bt.blocks) < 2:
        raise NotTwoConnected("h0 must be copies of one block sharing only u0")
    f0, l0 = _relabel(list(bt.blocks[0]))
    for blk in bt.blocks:
        if len(blk) < 2:
            raise NotTwoConnected("a block of h0 is a single edge")
        bg, local = _relabel(list(blk))
        if find_isomorphism(f0, bg, pairs=[(l0.index(u0), local.index(u0))]) is None:
            raise PreconditionError("blocks at u0 are not copies of one block")
    return True


def enumerate_block_colorings(h0: Graph, u0: int, delta: int | None = None, count: int | None = None,
                              seed: int = 0, max_attempts: int | None = None) -> list[EdgeColoring]:
    """Pairwise non-isomorphic colorings of h0 that break every automorphism fixing u0.

    Colors come from 1..ceil(sqrt(delta))+3, so 0 and 0' never occur.
    """
    copies = _check_block_shape(h0, u0)
    delta = delta if delta is not None else h0.max_degree
    if delta < 4:
        raise PreconditionError("maximum degree bound must be at least 4")
    if h0.max_degree > delta:
        raise PreconditionError("h0 has a vertex of degree above delta")
    s = ceil_sqrt(delta)
    count = count if count is not None else s
    labels = list(range(1, s + 4))
    grp = stabilizer(h0, [u0])
    found: list[EdgeColoring] = []
    limit = max_attempts if max_attempts is not None else 40 * count + 40
    for attempt in range(limit):
        if len(found) >= count:
            break
        state = EdgeState(h0)
        try:
            if copies:
                br = _Brancher(h0, state, s, labels, seed + attempt)
                br.color_all(u0)
                greedy_fill(state, h0.edges, labels)
                repair(state, labels, fixed=(u0,))
            else:
                _color_block(state, h0.edges, u0, s, labels, seed + attempt, zeros=False)
        except (VerifierRejected, EnumerationExhausted):
            continue
        c = state.coloring(labels)
        if not verify_majority(h0, c, "almost").passed:
            continue
        if not color_preserving_group(h0, c, fixed=[u0]).is_trivial():
            continue
        if any(colorings_isomorphic(h0, c, prev, grp) for prev in found):
            continue
        found.append(c)
    if len(found) < count:
        raise EnumerationExhausted(f"found {len(found)} of {count} distinct symmetry-breaking colorings")
    return found


def color_symmetric_tree_attachment(h: Graph, center: int, delta: int | None = None,
                                    seed: int = 0) -> EdgeColoring:
    """Distinguishing majority coloring of a tree with equal blocks hung from its leaves.

    ``center`` must be a cut vertex at the center of the block-cut tree, so
    every automorphism fixes it; sibling branches get non-isomorphic colorings.
    """
    if not is_connected(h) or center not in range(h.n):
        raise PreconditionError("h must be connected and contain the center")
    bt = block_decomposition(h)
    if center not in bt.cut_vertices:
        raise PreconditionError("the center must be a cut vertex (tree of order at least 3)")
    if _tree_center(bt) != ("c", center):
        raise PreconditionError("the given vertex is not the center of the block-cut tree")
    delta = delta if delta is not None else h.max_degree
    s = ceil_sqrt(max(delta, 2))
    labels = list(range(1, s + 4))
    last = None
    for attempt in range(RESTARTS):
        state = EdgeState(h)
        try:
            _Brancher(h, state, s, labels, seed + 101 * attempt).color_all(center)
            greedy_fill(state, h.edges, labels)
            repair(state, labels)
            c = state.coloring(labels)
            rep = verify_majority_distinguishing(h, c) if h.min_degree >= 2 else verify_majority(h, c, "almost")
            if not rep.passed or not color_preserving_group(h, c).is_trivial():
                raise VerifierRejected("tree attachment coloring failed certification", rep)
            return c
        except (VerifierRejected, EnumerationExhausted) as exc:
            last = exc
    raise last
