"""Encoder/decoder for the standard graph6 text format (single-byte sizes).

The layout is the usual one: a size byte (n + 63), then the upper triangle
of the adjacency matrix read column by column, packed into 6-bit groups,
each group offset by 63. Decoding is strict: bad characters and non-zero
padding bits raise with the byte offset.
"""

from __future__ import annotations

from .errors import Graph6ParseError, ScaleError
from .graphs import MAX_VERTICES, Graph

_HEADER = ">>graph6<<"


def encode_rows(n: int, rows) -> str:
    """graph6 encoding straight from adjacency bitmask rows."""
    bits = []
    for j in range(1, n):
        col = rows[j]
        bits.extend((col >> i) & 1 for i in range(j))
    out = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        group = bits[k : k + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = val << 1 | b
        out.append(chr(63 + val))
    return "".join(out)


def graph6_encode(g: Graph) -> str:
    return encode_rows(g.n, g.adj)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER) :].strip()
    if not s:
        raise Graph6ParseError("empty graph6 string", 0)
    head = ord(s[0])
    if head == 126:
        raise ScaleError(
            f"multi-byte graph6 sizes exceed the {MAX_VERTICES}-vertex limit"
        )
    if not 63 <= head <= 125:
        raise Graph6ParseError(f"invalid size character {s[0]!r}", 0)
    n = head - 63
    if n > MAX_VERTICES:
        raise ScaleError(f"graph6 order {n} exceeds the {MAX_VERTICES}-vertex limit")
    if n == 0:
        raise Graph6ParseError("graph6 order 0 not representable", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - 1 != nbytes:
        raise Graph6ParseError(
            f"expected {nbytes} data characters for n={n}, got {len(s) - 1}",
            min(len(s), 1 + nbytes),
        )
    bits = []
    for k, ch in enumerate(s[1:], start=1):
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise Graph6ParseError(f"invalid data character {ch!r}", k)
        bits.extend((val >> (5 - t)) & 1 for t in range(6))
    for k in range(nbits, len(bits)):
        if bits[k]:
            raise Graph6ParseError("non-zero padding bits", 1 + k // 6)
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(rows))
