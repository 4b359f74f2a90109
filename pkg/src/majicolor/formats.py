"""Text encodings of graphs: graph6, whitespace edge lists and DIMACS."""

from __future__ import annotations

from .errors import MalformedInput, OutOfRangeVertex
from .graph import Graph

FORMATS = ("graph6", "edge_list", "dimacs")
_G6_HEADER = b">>graph6<<"


# graph6 ---------------------------------------------------------------------

def _g6_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return b"~" + bytes(((n >> s) & 63) + 63 for s in (12, 6, 0))
    if n <= 68719476735:
        return b"~~" + bytes(((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def encode_graph6(g: Graph) -> bytes:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + sum(bit << (5 - k) for k, bit in enumerate(bits[p:p + 6]))
        for p in range(0, len(bits), 6)
    )
    return _g6_size(g.n) + body


def decode_graph6(data: bytes) -> Graph:
    data = data.strip()
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    for i, ch in enumerate(data):
        if not 63 <= ch <= 126:
            raise MalformedInput(f"byte {ch!r} outside graph6 range 63..126", i)
    if not data:
        raise MalformedInput("empty graph6 string", 0)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise MalformedInput("truncated graph6 size field", len(data))
        n = 0
        for ch in data[2:8]:
            n = (n << 6) | (ch - 63)
        pos = 8
    else:
        if len(data) < 4:
            raise MalformedInput("truncated graph6 size field", len(data))
        n = 0
        for ch in data[1:4]:
            n = (n << 6) | (ch - 63)
        pos = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise MalformedInput(f"graph6 body has {len(body)} bytes, expected {need}", pos)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise MalformedInput("nonzero graph6 padding bits", pos + need - 1)
    return Graph(n, edges)


# edge list / DIMACS -----------------------------------------------------------

def _lines_with_offsets(text: bytes):
    offset = 0
    for raw in text.split(b"\n"):
        yield offset, raw.decode("ascii", errors="replace").strip()
        offset += len(raw) + 1


def _ints(tokens, offset):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise MalformedInput(f"expected integers, got {' '.join(tokens)!r}", offset) from None


def decode_edge_list(text: bytes, n: int | None = None) -> Graph:
    """``n m`` header followed by one ``u v`` pair per line (0-indexed).

    When ``n`` is given the header is omitted and every line is an edge.
    """
    rows = [(off, line) for off, line in _lines_with_offsets(text)
            if line and not line.startswith("#")]
    m_declared = None
    if n is None:
        if not rows:
            raise MalformedInput("missing 'n m' header", 0)
        off, line = rows.pop(0)
        header = _ints(line.split(), off)
        if len(header) != 2:
            raise MalformedInput("header must be 'n m'", off)
        n, m_declared = header
    edges = []
    for off, line in rows:
        pair = _ints(line.split(), off)
        if len(pair) != 2:
            raise MalformedInput("edge line must be 'u v'", off)
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRangeVertex(f"vertex out of range in edge {u} {v} (n={n})", off)
        edges.append((u, v))
    if m_declared is not None and m_declared != len(edges):
        raise MalformedInput(f"header declares {m_declared} edges, found {len(edges)}", 0)
    try:
        return Graph(n, edges)
    except MalformedInput as exc:
        raise MalformedInput(str(exc), 0) from None


def encode_edge_list(g: Graph) -> bytes:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return ("\n".join(lines) + "\n").encode()


def decode_dimacs(text: bytes) -> Graph:
    n = m_declared = None
    edges = []
    for off, line in _lines_with_offsets(text):
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise MalformedInput("problem line must be 'p edge n m'", off)
            n, m_declared = _ints(tokens[2:], off)
        elif tokens[0] == "e":
            if n is None:
                raise MalformedInput("edge line before problem line", off)
            if len(tokens) != 3:
                raise MalformedInput("edge line must be 'e u v'", off)
            u, v = _ints(tokens[1:], off)
            if not (1 <= u <= n and 1 <= v <= n):
                raise OutOfRangeVertex(f"vertex out of range in 'e {u} {v}' (n={n})", off)
            edges.append((u - 1, v - 1))
        else:
            raise MalformedInput(f"unknown DIMACS line type {tokens[0]!r}", off)
    if n is None:
        raise MalformedInput("missing 'p edge n m' line", 0)
    if m_declared != len(edges):
        raise MalformedInput(f"problem line declares {m_declared} edges, found {len(edges)}", 0)
    try:
        return Graph(n, edges)
    except MalformedInput as exc:
        raise MalformedInput(str(exc), 0) from None


def encode_dimacs(g: Graph) -> bytes:
    lines = [f"p edge {g.n} {g.m}"] + [f"e {u + 1} {v + 1}" for u, v in g.edges]
    return ("\n".join(lines) + "\n").encode()


# dispatch -------------------------------------------------------------------

def detect_format(text: bytes) -> str:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MalformedInput("empty input", 0)
    if any(ln.startswith(b"p ") for ln in lines) or lines[0].startswith(b"c"):
        return "dimacs"
    if all(len(ln.split()) == 1 and all(63 <= ch <= 126 for ch in ln.replace(_G6_HEADER, b""))
           for ln in lines):
        return "graph6"
    return "edge_list"


def parse_graph(text: bytes | str, format: str = "auto", n: int | None = None) -> Graph:
    if isinstance(text, str):
        text = text.encode()
    if format == "auto":
        format = detect_format(text)
    if format == "graph6":
        return decode_graph6(text)
    if format == "edge_list":
        return decode_edge_list(text, n)
    if format == "dimacs":
        return decode_dimacs(text)
    raise ValueError(f"unknown format {format!r}")


def parse_graph_stream(text: bytes, format: str = "auto") -> list[Graph]:
    """Several graphs: graph6 is read one graph per line, other formats hold one graph."""
    if format == "auto":
        format = detect_format(text)
    if format == "graph6":
        return [decode_graph6(ln) for ln in text.splitlines() if ln.strip()]
    return [parse_graph(text, format)]


def serialize_graph(g: Graph, format: str = "graph6") -> bytes:
    if format == "graph6":
        return encode_graph6(g) + b"\n"
    if format == "edge_list":
        return encode_edge_list(g)
    if format == "dimacs":
        return encode_dimacs(g)
    raise ValueError(f"unknown format {format!r}")


# DOT ------------------------------------------------------------------------

DOT_PALETTE = ("green", "red", "blue", "orange", "purple",
               "brown", "magenta", "cyan", "gold", "gray")


def to_dot(g: Graph, coloring=None, directed: bool = False) -> str:
    """DOT text; colored edges carry both a palette ``color`` and an integer ``label``."""
    out = ["digraph G {" if directed else "graph G {"]
    out.extend(f"  {v};" for v in range(g.n))
    if coloring is None:
        out.extend(f"  {u} -- {v};" for u, v in g.edges)
    else:
        index = {c: i for i, c in enumerate(coloring.palette)}
        sep = "->" if directed else "--"
        for key, c in sorted(coloring.assignment.items()):
            i = index[c]
            out.append(f'  {key[0]} {sep} {key[1]} [color="{DOT_PALETTE[i % len(DOT_PALETTE)]}", '
                       f'label="{i}"];')
    out.append("}")
    return "\n".join(out) + "\n"
