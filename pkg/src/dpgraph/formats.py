"""graph6, edge-list and DOT serialisation."""

from __future__ import annotations

import re
from pathlib import Path
from typing import Optional

from .graph import Graph, GraphError, VertexLike, from_edge_list


class Graph6Error(GraphError):
    pass


_HEADER = ">>graph6<<"


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise Graph6Error(f"order {n} too large for graph6")


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return ``(n, header_length)``."""
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated long-form size header")
        n = 0
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated size header")
    n = 0
    for c in data[1:4]:
        n = (n << 6) | (c - 63)
    if n <= 62:
        raise Graph6Error(f"non-canonical size header for n={n}")
    return n, 4


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no header, no newline)."""
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [_encode_size(g.n)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError:
        raise Graph6Error("graph6 must be ASCII") from None
    for c in data:
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {chr(c)!r} outside graph6 range 63..126")
    n, off = _decode_size(data)
    nbits = n * (n - 1) // 2
    body = data[off:]
    need = -(-nbits // 6)
    if len(body) != need:
        raise Graph6Error(f"expected {need} data characters for n={n}, got {len(body)}")
    value = 0
    for c in body:
        value = (value << 6) | (c - 63)
    pad = need * 6 - nbits
    if value & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    value >>= pad
    adj = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(n, adj)


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` starts a comment."""
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise GraphError("edge list is empty")
    try:
        head = [int(x) for x in rows[0]]
        edges = [tuple(int(x) for x in r) for r in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"edge list: {exc}") from None
    if len(head) != 2:
        raise GraphError("edge list header must be 'n m'")
    n, m = head
    if len(edges) != m:
        raise GraphError(f"header declares {m} edges, found {len(edges)}")
    for e in edges:
        if len(e) != 2:
            raise GraphError(f"malformed edge line {e}")
    return from_edge_list(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, highlight: Optional[VertexLike] = None, name: str = "G") -> str:
    hl = g.vertex_mask(highlight) if highlight is not None else 0
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        if hl >> v & 1:
            lines.append(f'  {v} [style=filled, fillcolor="#f4a261"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_EDGE_HEADER = re.compile(r"^\s*\d+\s+\d+\s*$")


def read_graph(source: str) -> Graph:
    """Load a graph from a file path or an inline graph6 string.

    Files whose first non-comment line is ``n m`` are read as edge lists,
    otherwise the first non-empty line is taken as graph6.
    """
    path = Path(source)
    try:
        is_file = path.is_file()
    except OSError:
        is_file = False
    if not is_file:
        return parse_graph6(source)
    text = path.read_text(encoding="utf-8")
    for line in text.splitlines():
        content = line.split("#", 1)[0] if not line.startswith(_HEADER) else line
        if not content.strip():
            continue
        if _EDGE_HEADER.match(content):
            return parse_edge_list(text)
        return parse_graph6(content)
    raise GraphError(f"{source}: no graph found")


__all__ = [
    "Graph6Error", "to_graph6", "parse_graph6", "parse_edge_list", "to_edge_list",
    "to_dot", "read_graph",
]
