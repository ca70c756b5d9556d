"""graph6 and plain edge-list serialization."""

from __future__ import annotations

from pathlib import Path

from .graph import Graph, GraphError, make_graph


class FormatError(GraphError):
    """Malformed serialized graph; ``offset`` is the 0-based byte position."""

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message if offset is None else f"{message} (byte offset {offset})")
        self.offset = offset


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise FormatError(f"graph6 cannot encode {n} vertices")


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no header, no trailing newline)."""
    out = bytearray(_encode_n(g.n))
    chunk, filled = 0, 0
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            chunk = chunk << 1 | (row >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chunk + 63)
                chunk, filled = 0, 0
    if filled:
        out.append((chunk << (6 - filled)) + 63)
    return out.decode("ascii")


def from_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 record. An optional ``>>graph6<<`` header is accepted."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    start = 0
    if data.startswith(b">>graph6<<"):
        start = len(b">>graph6<<")
    for pos in range(start, len(data)):
        if not 63 <= data[pos] <= 126:
            raise FormatError(f"invalid graph6 byte {data[pos]!r}", pos)
    if start >= len(data):
        raise FormatError("empty graph6 record", start)
    pos = start
    if data[pos] != 126:
        n, pos = data[pos] - 63, pos + 1
    else:
        width = 6 if len(data) > pos + 1 and data[pos + 1] == 126 else 3
        skip = 2 if width == 6 else 1
        head = data[pos + skip: pos + skip + width]
        if len(head) < width:
            raise FormatError("truncated graph6 vertex count", len(data))
        n = 0
        for b in head:
            n = n << 6 | (b - 63)
        pos += skip + width
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise FormatError(f"graph6 body too short: expected {need} bytes for n={n}", len(data))
    if len(body) > need:
        raise FormatError(f"unexpected trailing data after graph6 record for n={n}", pos + need)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if k % 6 and (body[-1] - 63) & ((1 << (6 - k % 6)) - 1):
        raise FormatError("nonzero padding bits in final graph6 byte", pos + need - 1)
    return make_graph(n, edges)


def to_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    lines = [ln for ln in (raw.split("#", 1)[0].strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise FormatError("empty edge-list input")
    try:
        n, m = (int(tok) for tok in lines[0].split())
        edges = [tuple(int(tok) for tok in ln.split()) for ln in lines[1:]]
    except ValueError as exc:
        raise FormatError(f"malformed edge-list: {exc}") from None
    if len(edges) != m:
        raise FormatError(f"edge-list header announces {m} edges, found {len(edges)}")
    for e in edges:
        if len(e) != 2:
            raise FormatError(f"edge line must hold two ids, got {e}")
    return make_graph(n, edges)


def parse_graph(raw: bytes, suffix: str = "") -> Graph:
    """Parse graph6 (``.g6`` suffix or a single token) or edge-list bytes."""
    body = raw.strip()
    text = body.decode("ascii", errors="replace")
    if suffix == ".g6" or len(text.split()) == 1:
        return from_graph6(body.splitlines()[0] if body else body)
    return from_edge_list(text)


def read_graph(path: str | Path) -> Graph:
    path = Path(path)
    return parse_graph(path.read_bytes(), path.suffix)


def read_graph6_lines(path: str | Path) -> list[Graph]:
    """All graph6 records of a multi-line file (one graph per line)."""
    graphs = []
    for line in Path(path).read_bytes().splitlines():
        if line.strip():
            graphs.append(from_graph6(line))
    return graphs
