"""Colorers for complete graphs, traceable graphs and K_{2,n}."""

from __future__ import annotations

from ..automorphism import Permutation
from ..coloring import EdgeColoring
from ..errors import MinDegreeTooSmall, PathNotSpanning, PreconditionError, VerifierRejected
from ..graph import Graph, complete_graph, edge, graph_minus
from ..verify import verify_majority_distinguishing
from .balanced import TwoColoringSpec, two_coloring_balanced

GREEN, RED, BLUE = 1, 2, 3

# hand colorings of K5 and K6 along the path x1..xn (vertex i is x_{i+1})
K5_COLORING = {
    GREEN: [(1, 2), (2, 3), (3, 4), (4, 5)],
    RED: [(1, 3), (1, 4), (2, 5)],
    BLUE: [(1, 5), (2, 4), (3, 5)],
}
K6_COLORING = {
    GREEN: [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)],
    RED: [(1, 3), (1, 4), (2, 5), (2, 6), (3, 6)],
    BLUE: [(1, 6), (1, 5), (2, 4), (3, 5), (4, 6)],
}


def fixture_coloring(table: dict) -> EdgeColoring:
    return EdgeColoring({(u - 1, v - 1): c for c, pairs in table.items() for u, v in pairs},
                        [GREEN, RED, BLUE])


def _certified(g: Graph, c: EdgeColoring, what: str) -> EdgeColoring:
    rep = verify_majority_distinguishing(g, c)
    if not rep.passed:
        raise VerifierRejected(f"{what} failed certification", rep)
    return c


def spider(legs) -> Graph:
    """Tree made of paths of the given lengths glued at vertex 0."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


def color_complete(n: int, seed: int = 0) -> EdgeColoring:
    """Majority distinguishing coloring of K_n: 3 colors for n >= 5, optimal for n = 3, 4."""
    if n < 3:
        raise PreconditionError("n must be at least 3")
    g = complete_graph(n)
    if n in (3, 4):
        from ..exact import exact_index
        _, c = exact_index(g, "chi-d")
        return _certified(g, c, f"K_{n} coloring")
    if n == 5:
        return _certified(g, fixture_coloring(K5_COLORING), "K_5 fixture")
    if n == 6:
        return _certified(g, fixture_coloring(K6_COLORING), "K_6 fixture")
    # asymmetric spanning tree of maximum degree 3: legs of lengths 1, 2, n - 4
    tree = spider([1, 2, n - 4])
    rest = graph_minus(g, tree)
    leaves = frozenset(v for v in range(n) if tree.degree(v) < 2)
    two = two_coloring_balanced(rest, TwoColoringSpec(forbidden_special=leaves), (RED, BLUE), seed)
    c = EdgeColoring({**{e: GREEN for e in tree.edges}, **two.coloring.assignment},
                     [GREEN, RED, BLUE])
    return _certified(g, c, f"K_{n} coloring")


def _check_path(g: Graph, path) -> list[int]:
    path = list(path)
    if sorted(path) != list(range(g.n)):
        raise PathNotSpanning("path must visit every vertex exactly once")
    for u, v in zip(path, path[1:]):
        if not g.has_edge(u, v):
            raise PathNotSpanning(f"{u}-{v} is not an edge")
    return path


def reversal_is_automorphism(g: Graph, path) -> bool:
    n = len(path)
    images = [0] * n
    for i, v in enumerate(path):
        images[v] = path[n - 1 - i]
    rho = Permutation(tuple(images))
    return all(g.has_edge(*rho.map_edge(e)) for e in g.edges)


def color_traceable_mindeg4(g: Graph, path=None, seed: int = 0) -> EdgeColoring:
    """Three colors for a traceable graph with minimum degree >= 4.

    The spanning path is green. If reversing the path is an automorphism of
    ``g``, one chord at each end is colored so that the ends look different
    (two chords per end when the end degree is odd, to keep the end balanced).
    Everything else is a balanced red/blue coloring whose surplus vertices
    avoid the path ends and the pre-colored chords.
    """
    if g.n == 0 or g.min_degree < 4:
        raise MinDegreeTooSmall("minimum degree must be at least 4")
    if path is None:
        from ..search import find_hamiltonian_path
        path = find_hamiltonian_path(g, seed=seed)
        if path is None:
            raise PathNotSpanning("graph has no spanning path")
    path = _check_path(g, path)
    n = g.n
    x = path  # x[0] .. x[n-1]
    assign = {edge(u, v): GREEN for u, v in zip(x, x[1:])}
    touched = {x[0], x[-1]}
    if reversal_is_automorphism(g, x):
        def mirror(i):
            return n - 1 - i
        i = next(i for i in range(2, n - 1) if g.has_edge(x[0], x[i]))
        assign[edge(x[0], x[i])] = RED
        assign[edge(x[mirror(i)], x[-1])] = BLUE
        touched |= {x[i], x[mirror(i)]}
        if g.degree(x[0]) % 2:
            j = next(j for j in range(2, n - 1)
                     if j not in (i, mirror(i)) and g.has_edge(x[0], x[j]))
            assign[edge(x[0], x[j])] = BLUE
            assign[edge(x[mirror(j)], x[-1])] = RED
            touched |= {x[j], x[mirror(j)]}
    rest = Graph(n, [e for e in g.edges if e not in assign])
    if rest.m:
        two = two_coloring_balanced(rest, TwoColoringSpec(forbidden_special=frozenset(touched)),
                                    (RED, BLUE), seed)
        assign.update(two.coloring.assignment)
    return _certified(g, EdgeColoring(assign, [GREEN, RED, BLUE]), "traceable coloring")


def k2n_colors(n: int) -> int:
    k = 1
    while k * (k - 1) - 1 < n:
        k += 1
    return k


def choose_pair_codes(n: int, k: int) -> list[tuple[int, int]]:
    """``n`` distinct ordered color pairs, never (1, 2), always (2, 1), every color used,
    and no color more than n // 2 times in either position."""
    cap = n // 2
    pool = [(a, b) for a in range(1, k + 1) for b in range(1, k + 1) if a != b and (a, b) != (1, 2)]

    def counts(chosen):
        first = [0] * (k + 1)
        second = [0] * (k + 1)
        for a, b in chosen:
            first[a] += 1
            second[b] += 1
        return first, second

    chosen = [(2, 1)]
    while len(chosen) < n:
        first, second = counts(chosen)
        unseen = set(range(1, k + 1)) - {c for p in chosen for c in p}
        cands = [p for p in pool if p not in chosen and first[p[0]] < cap and second[p[1]] < cap]
        if not cands:
            break
        chosen.append(min(cands, key=lambda p: (-(len(unseen & set(p))),
                                                max(first[p[0]], second[p[1]]), p)))
    used = {c for p in chosen for c in p}
    if len(chosen) == n and len(used) == k:
        return chosen
    # depth-first fallback
    rest = [p for p in pool if p != (2, 1)]
    best = []

    def dfs(start, chosen, first, second):
        if len(chosen) == n:
            if len({c for p in chosen for c in p}) == k:
                best.extend(chosen)
                return True
            return False
        for idx in range(start, len(rest)):
            a, b = rest[idx]
            if first[a] < cap and second[b] < cap:
                first[a] += 1
                second[b] += 1
                chosen.append((a, b))
                if dfs(idx + 1, chosen, first, second):
                    return True
                chosen.pop()
                first[a] -= 1
                second[b] -= 1
        return False

    first = [0] * (k + 1)
    second = [0] * (k + 1)
    first[2] += 1
    second[1] += 1
    if not dfs(0, [(2, 1)], first, second):
        raise VerifierRejected(f"no balanced pair selection for K_2,{n} with {k} colors")
    return best


def color_K2n(n: int) -> EdgeColoring:
    """Coloring of K_{2,n} (X = {0, 1}, Y = {2, ..., n+1}) with min{k : k(k-1)-1 >= n} colors."""
    if n < 3:
        raise PreconditionError("n must be at least 3")
    k = k2n_colors(n)
    pairs = choose_pair_codes(n, k)
    assign = {}
    for y, (c0, c1) in enumerate(pairs, start=2):
        assign[(0, y)] = c0
        assign[(1, y)] = c1
    g = Graph(n + 2, list(assign))
    c = EdgeColoring(assign, list(range(1, k + 1)))
    if c.colors_used != k:
        raise VerifierRejected(f"expected {k} colors, used {c.colors_used}")
    return _certified(g, c, f"K_2,{n} coloring")
