"""Edge-list text and graph6 encodings.

Edge-list: first line ``n m``, then ``m`` lines ``u v`` (0-based), LF-terminated.
graph6 follows the nauty format definition: size header ``N(n)`` followed by
the upper triangle of the adjacency matrix in column order
(``x(0,1) x(0,2) x(1,2) x(0,3) ...``), packed six bits per byte, each byte
offset by 63.
"""

from __future__ import annotations

from .graph import Graph, GraphError, from_edge_list


class FormatError(ValueError):
    pass


def write_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    while lines and not lines[-1]:
        lines.pop()
    if not lines:
        raise FormatError("empty edge list")
    try:
        n, m = (int(tok) for tok in lines[0].split())
    except ValueError:
        raise FormatError(f"bad header line {lines[0]!r}, expected 'n m'") from None
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} edges, found {len(body)} lines")
    edges = []
    for lineno, ln in enumerate(body, start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex in {ln!r}") from None
    try:
        return from_edge_list(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def _size_header(n: int) -> bytes:
    if n < 0:
        raise FormatError("negative order")
    if n <= 62:
        return bytes([63 + n])
    if n <= 258047:
        return bytes([126] + [63 + ((n >> s) & 63) for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [63 + ((n >> s) & 63) for s in (30, 24, 18, 12, 6, 0)])
    raise FormatError("order too large for graph6")


def to_graph6(g: Graph) -> str:
    out = bytearray(_size_header(g.n))
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc = nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return out.decode("ascii")


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = s.encode("ascii")
    if not data:
        raise FormatError("empty graph6 string")
    if any(b < 63 or b > 126 for b in data):
        raise FormatError("graph6 byte outside 63..126")
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) > 1 and data[1] == 126:
        if len(data) < 8:
            raise FormatError("truncated graph6 size header")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        pos = 8
    else:
        if len(data) < 4:
            raise FormatError("truncated graph6 size header")
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        pos = 4
    nbits = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (nbits + 5) // 6:
        raise FormatError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}")
    bits = []
    for b in body:
        x = b - 63
        bits.extend((x >> s) & 1 for s in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return from_edge_list(n, edges)


def read_graph(text: str, fmt: str = "edges") -> Graph:
    if fmt == "edges":
        return read_edge_list(text)
    if fmt == "g6":
        return from_graph6(text)
    raise FormatError(f"unknown format {fmt!r}")


def write_graph(g: Graph, fmt: str = "edges") -> str:
    if fmt == "edges":
        return write_edge_list(g)
    if fmt == "g6":
        return to_graph6(g) + "\n"
    raise FormatError(f"unknown format {fmt!r}")
