"""Proper edge colorings: Misra-Gries (Delta+1 colors) and the bipartite
alternating-path method (Delta colors), plus the vertex-splitting step that
turns a proper coloring of a low-degree graph into a majority coloring."""

from __future__ import annotations


def _free(at: dict, limit: int) -> int:
    c = 0
    while c in at:
        c += 1
    assert c < limit
    return c


def misra_gries(n: int, edges) -> dict:
    """Proper coloring of a simple graph with at most Delta+1 colors (0-based)."""
    edges = [tuple(e) for e in edges]
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    k = max(deg, default=0) + 1
    at = [dict() for _ in range(n)]  # color -> neighbour
    color = {}

    def set_color(u, v, c):
        color[(min(u, v), max(u, v))] = c
        at[u][c] = v
        at[v][c] = u

    def clear(u, v):
        c = color.pop((min(u, v), max(u, v)))
        del at[u][c]
        del at[v][c]

    def get(u, v):
        return color.get((min(u, v), max(u, v)))

    for u, v in edges:
        fan = [v]
        seen = {v}
        while True:
            c = _free(at[fan[-1]], k)
            w = at[u].get(c)
            if w is None or w in seen:
                break
            fan.append(w)
            seen.add(w)
        c = _free(at[u], k)
        d = _free(at[fan[-1]], k)
        if c != d:
            # invert the d/c alternating path leaving u along d
            path = []
            x, want = u, d
            while want in at[x]:
                y = at[x][want]
                path.append((x, y, want))
                x, want = y, (c if want == d else d)
            for x, y, col in path:
                clear(x, y)
            for x, y, col in path:
                set_color(x, y, c if col == d else d)
        # longest valid fan prefix ending at a vertex where d is free
        idx = None
        for i, w in enumerate(fan):
            if i > 0:
                prev = get(u, w)
                if prev is None or prev in at[fan[i - 1]]:
                    break
            if d not in at[w]:
                idx = i
                break
        assert idx is not None, "Misra-Gries invariant broken"
        for i in range(idx):
            col = get(u, fan[i + 1])
            clear(u, fan[i + 1])
            set_color(u, fan[i], col)
        set_color(u, fan[idx], d)
    return color


def bipartite_edge_coloring(n: int, edges, left: set) -> list[int]:
    """Proper Delta-coloring of a bipartite multigraph; ``edges[i] = (x, y)``.

    Returns a color per edge index. Conflicts are resolved by swapping the
    two colors along an alternating path, which in a bipartite graph never
    returns to the edge's other endpoint.
    """
    deg = [0] * n
    for x, y in edges:
        deg[x] += 1
        deg[y] += 1
    k = max(deg, default=0)
    at = [dict() for _ in range(n)]  # color -> edge index
    col = [None] * len(edges)

    def other(i, v):
        x, y = edges[i]
        return y if v == x else x

    for i, (x, y) in enumerate(edges):
        if x not in left:
            x, y = y, x
        a = _free(at[x], k)
        b = _free(at[y], k)
        if a in at[y] and b not in at[x]:
            a = b
        elif a in at[y]:
            path = []
            v, want = y, a
            while want in at[v]:
                j = at[v][want]
                path.append(j)
                v = other(j, v)
                want = b if want == a else a
            for j in path:
                c = col[j]
                for end in edges[j]:
                    del at[end][c]
            for j in path:
                col[j] = b if col[j] == a else a
                for end in edges[j]:
                    at[end][col[j]] = j
        col[i] = a
        at[x][a] = i
        at[y][a] = i
    return col


def split_parts(d: int, prefer_three: bool = True) -> list[int]:
    """Sizes (2 or 3) of the parts a degree-``d`` vertex is split into; d <= 1 stays whole."""
    if d <= 1:
        return [d] if d else []
    if not prefer_three:
        return [2] * (d // 2 - 1) + ([3] if d % 2 else [2])
    threes, rest = divmod(d, 3)
    if rest == 0:
        return [3] * threes
    if rest == 1:
        return [3] * (threes - 1) + [2, 2]
    return [3] * threes + [2]


def split_graph(n: int, incident: list[list], prefer_three: bool = True):
    """Split each vertex into parts; returns (part count, part of each (vertex, slot)).

    ``incident[v]`` lists the edge ids at v in a fixed order; consecutive
    runs of that list form the parts.
    """
    owner = {}
    parts = 0
    for v in range(n):
        pos = 0
        for size in split_parts(len(incident[v]), prefer_three):
            for eid in incident[v][pos:pos + size]:
                owner[(v, eid)] = parts
            parts += 1
            pos += size
    return parts, owner
