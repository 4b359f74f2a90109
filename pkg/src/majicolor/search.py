"""Budgeted searches for long cycles, spanning paths and asymmetric spanning subgraphs.

All three problems are hard in general. Below a size threshold the searches
are exhaustive, so "not found" is a proof; above it they are randomized and
report ``BudgetExhausted`` instead of guessing.
"""

from __future__ import annotations

import itertools
import os
import random

from .automorphism import is_asymmetric
from .errors import BudgetExhausted, NoCycleExists, NotFoundWithinBudget, PreconditionError
from .graph import Graph, edge, is_connected

CYCLE_EXACT_LIMIT = 20
PATH_EXACT_LIMIT = 18


def default_budget(base: int = 2_000_000) -> int:
    env = os.environ.get("MAJICOLOR_BUDGET")
    return int(env) if env else base


class _Budget:
    def __init__(self, limit):
        self.left = limit

    def spend(self):
        self.left -= 1
        if self.left < 0:
            raise BudgetExhausted("search budget exhausted")


# cycles ---------------------------------------------------------------------

def _dfs_cycles(g: Graph, rng: random.Random, allowed=None):
    """Cycles closed by back edges of one randomized DFS forest."""
    verts = [v for v in range(g.n) if allowed is None or v in allowed]
    rng.shuffle(verts)
    depth = {}
    parent = {}
    found = []
    for root in verts:
        if root in depth:
            continue
        depth[root] = 0
        parent[root] = -1
        stack = [(root, iter(sorted(g.neighbors(root), key=lambda _: rng.random())))]
        while stack:
            u, it = stack[-1]
            for w in it:
                if allowed is not None and w not in allowed:
                    continue
                if w not in depth:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    stack.append((w, iter(sorted(g.neighbors(w), key=lambda _: rng.random()))))
                    break
                if w != parent[u] and depth[w] < depth[u]:
                    cyc = [u]
                    x = u
                    while x != w:
                        x = parent[x]
                        cyc.append(x)
                    found.append(cyc)
            else:
                stack.pop()
    return found


def _extend_cycle(g: Graph, cyc: list[int], allowed=None) -> list[int]:
    """Greedy insertion of outside vertices (1 or 2 at a time) between cycle neighbours."""
    improved = True
    while improved:
        improved = False
        on = set(cyc)
        L = len(cyc)
        for i in range(L):
            x, y = cyc[i], cyc[(i + 1) % L]
            for z in g.neighbors(x):
                if z in on or (allowed is not None and z not in allowed):
                    continue
                if g.has_edge(z, y):
                    cyc = cyc[:i + 1] + [z] + cyc[i + 1:]
                    improved = True
                    break
                for z2 in g.neighbors(z):
                    if z2 not in on and z2 != z and g.has_edge(z2, y) and (
                            allowed is None or z2 in allowed):
                        cyc = cyc[:i + 1] + [z, z2] + cyc[i + 1:]
                        improved = True
                        break
                if improved:
                    break
            if improved:
                break
    return cyc


def _exhaustive_cycles(g: Graph, min_len: int, longest: bool, budget: _Budget, allowed=None):
    verts = [v for v in range(g.n) if allowed is None or v in allowed]
    best: list[int] | None = None
    cap = len(verts)
    for s in verts:
        later = [v for v in verts if v > s]
        if len(later) + 1 < max(min_len, 3) or (best is not None and len(later) + 1 <= len(best)):
            continue
        later_set = set(later)
        path = [s]
        on = {s}
        stack = [iter(g.neighbors(s))]
        while stack:
            budget.spend()
            advanced = False
            for w in stack[-1]:
                if w == s and len(path) >= 3 and len(path) >= min_len:
                    if best is None or len(path) > len(best):
                        best = list(path)
                        if not longest or len(best) == cap:
                            return best
                if w in later_set and w not in on:
                    if longest and best is not None and len(path) + len(later_set - on) + 1 <= len(best):
                        continue
                    path.append(w)
                    on.add(w)
                    stack.append(iter(g.neighbors(w)))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                on.discard(path.pop())
    return best


def find_cycle(g: Graph, min_len: int = 3, budget: int | None = None, longest: bool = False,
               seed: int = 0, allowed=None) -> list[int]:
    """A cycle (vertex sequence) of length >= ``min_len``.

    With ``longest=True`` the longest cycle is returned; this is exact when the
    searched vertex set has at most ``CYCLE_EXACT_LIMIT`` vertices and a
    randomized best effort otherwise. ``allowed`` restricts the vertex set.
    Raises ``NoCycleExists`` only after an exhaustive search.
    """
    if min_len < 3:
        raise PreconditionError("min_len must be >= 3")
    budget = _Budget(budget if budget is not None else default_budget())
    size = g.n if allowed is None else len(allowed)
    rng = random.Random(seed)
    if longest and size <= CYCLE_EXACT_LIMIT:
        best = _exhaustive_cycles(g, min_len, True, budget, allowed)
        if best is None:
            raise NoCycleExists(f"no cycle of length >= {min_len}")
        return best
    candidates = []
    for _ in range(8 if longest else 2):
        for cyc in _dfs_cycles(g, rng, allowed):
            candidates.append(_extend_cycle(g, cyc, allowed))
        best = max(candidates, key=len, default=None)
        if best is not None and len(best) >= min_len and not longest:
            return best
    best = max(candidates, key=len, default=None)
    if best is not None and len(best) >= min_len:
        return best
    try:
        found = _exhaustive_cycles(g, min_len, False, budget, allowed)
    except BudgetExhausted:
        raise BudgetExhausted(f"no cycle of length >= {min_len} found within budget") from None
    if found is None:
        raise NoCycleExists(f"no cycle of length >= {min_len}")
    return found


# spanning paths ---------------------------------------------------------------

def _remaining_connected(g: Graph, visited: set, start: int) -> bool:
    """Unvisited vertices plus ``start`` form a connected subgraph."""
    todo = [v for v in range(g.n) if v not in visited]
    if not todo:
        return True
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w not in visited and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) - 1 == len(todo)


def _exhaustive_path(g: Graph, budget: _Budget) -> list[int] | None:
    n = g.n
    if n == 0:
        return []
    ends = [v for v in range(n) if g.degree(v) <= 1]
    if len(ends) > 2:
        return None
    starts = ends if ends else sorted(range(n), key=g.degree)
    for s in starts:
        path = [s]
        visited = {s}

        def rec():
            budget.spend()
            if len(path) == n:
                return True
            u = path[-1]
            if not _remaining_connected(g, visited, u):
                return False
            nxt = [w for w in g.neighbors(u) if w not in visited]
            nxt.sort(key=lambda w: sum(1 for x in g.neighbors(w) if x not in visited))
            for w in nxt:
                path.append(w)
                visited.add(w)
                if rec():
                    return True
                visited.discard(path.pop())
            return False

        if rec():
            return path
    return None


def _rotation_path(g: Graph, rng: random.Random, budget: _Budget) -> list[int] | None:
    """Randomized greedy path growth with Posa rotations."""
    n = g.n
    path = [rng.randrange(n)]
    on = {path[0]}
    stall = 0
    while len(path) < n and stall < 50 * n:
        budget.spend()
        end = path[-1]
        free = [w for w in g.neighbors(end) if w not in on]
        if free:
            w = min(free, key=lambda x: (sum(1 for y in g.neighbors(x) if y not in on), rng.random()))
            path.append(w)
            on.add(w)
            stall = 0
            continue
        pivots = [i for i, x in enumerate(path[:-2]) if g.has_edge(x, end)]
        if not pivots:
            path.reverse()
            stall += 1
            continue
        i = rng.choice(pivots)
        path = path[:i + 1] + path[i + 1:][::-1]
        stall += 1
    return path if len(path) == n else None


def find_hamiltonian_path(g: Graph, budget: int | None = None, seed: int = 0) -> list[int] | None:
    """A spanning path, or None when exhaustive search proves none exists."""
    limit = _Budget(budget if budget is not None else default_budget())
    if g.n > 1 and not is_connected(g):
        return None
    if g.n > PATH_EXACT_LIMIT:
        rng = random.Random(seed)
        for _ in range(20):
            p = _rotation_path(g, rng, limit)
            if p is not None:
                return p
    return _exhaustive_path(g, limit)


# asymmetric spanning subgraphs -----------------------------------------------------

def random_spanning_tree(g: Graph, rng: random.Random) -> list[tuple[int, int]]:
    """Uniform spanning tree by Wilson's loop-erased random walks."""
    in_tree = [False] * g.n
    nxt = [-1] * g.n
    root = rng.randrange(g.n)
    in_tree[root] = True
    for start in range(g.n):
        u = start
        while not in_tree[u]:
            nxt[u] = rng.choice(g.neighbors(u))
            u = nxt[u]
        u = start
        while not in_tree[u]:
            in_tree[u] = True
            u = nxt[u]
    return [edge(v, nxt[v]) for v in range(g.n) if v != root]


def random_dfs_tree(g: Graph, rng: random.Random) -> list[tuple[int, int]]:
    root = rng.randrange(g.n)
    seen = {root}
    edges = []
    stack = [root]
    while stack:
        u = stack[-1]
        free = [w for w in g.neighbors(u) if w not in seen]
        if not free:
            stack.pop()
            continue
        w = rng.choice(free)
        seen.add(w)
        edges.append(edge(u, w))
        stack.append(w)
    return edges


def _exhaustive_asymmetric(g: Graph) -> Graph | None:
    for size in range(g.n - 1, g.m + 1):
        for subset in itertools.combinations(g.edges, size):
            h = Graph(g.n, subset)
            if is_connected(h) and is_asymmetric(h):
                return h
    return None


def find_asymmetric_spanning_subgraph(g: Graph, attempts: int = 200, seed: int = 0,
                                      exhaustive_edges: int = 12) -> Graph:
    """A connected spanning subgraph with trivial automorphism group.

    Graphs with at most ``exhaustive_edges`` edges are searched exhaustively.
    Otherwise random spanning trees (uniform and depth-first, the latter
    giving long uneven branches) are tried first, then the same trees with
    random extra edges, and finally ``g`` itself. Every candidate is certified
    by the automorphism engine.
    """
    if not is_connected(g):
        raise PreconditionError("graph must be connected")
    if g.n == 1:
        return g
    if g.m <= exhaustive_edges:
        h = _exhaustive_asymmetric(g)
        if h is None:
            raise NotFoundWithinBudget("no connected asymmetric spanning subgraph exists",
                                       exhaustive=True)
        return h
    rng = random.Random(seed)
    for attempt in range(attempts):
        tree = random_dfs_tree(g, rng) if attempt % 2 else random_spanning_tree(g, rng)
        h = Graph(g.n, tree)
        if is_asymmetric(h):
            return h
        if attempt % 4 == 3:
            extra = [e for e in g.edges if not h.has_edge(*e)]
            rng.shuffle(extra)
            chosen = list(tree)
            for e in extra[: 2 * g.n]:
                chosen.append(e)
                h = Graph(g.n, chosen)
                if is_asymmetric(h):
                    return h
    if is_asymmetric(g):
        return g
    raise NotFoundWithinBudget(f"no asymmetric spanning subgraph found in {attempts} attempts")
