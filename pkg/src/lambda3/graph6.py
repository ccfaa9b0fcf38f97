"""graph6 short-form reader and writer (n < 63 only, no header)."""
from __future__ import annotations

from .graph import Graph, _from_rows

MAX_G6_N = 62


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def write_graph6(g: Graph) -> str:
    bits = []
    # upper triangle, column-major: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    line = text.rstrip("\r\n")
    if not line:
        raise Graph6Error("empty graph6 line", 0)
    for off, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside 63..126", off)
    n = ord(line[0]) - 63
    if n > MAX_G6_N:
        raise Graph6Error(f"vertex count {n} (long form) not supported", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = line[1:]
    if len(body) < need:
        raise Graph6Error(f"truncated bit stream: need {need} data bytes, got {len(body)}", len(line))
    if len(body) > need:
        raise Graph6Error("trailing bytes after bit stream", 1 + need)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return _from_rows(n, rows)
