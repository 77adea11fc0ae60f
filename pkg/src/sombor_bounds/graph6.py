"""graph6 reader and writer.

Short form (``n <= 62``, one header byte) and the 4-byte form
(``63 <= n <= 258047``) are both supported. The 8-byte form is not.
"""

from __future__ import annotations

from typing import Iterable, Iterator, List

from .graph import Graph, GraphError

SHORT_MAX = 62
LONG_MAX = 258047
_HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    """Malformed graph6 record."""


def _encode_order(n: int) -> List[int]:
    if n < 0:
        raise Graph6Error("negative order")
    if n <= SHORT_MAX:
        return [n + 63]
    if n <= LONG_MAX:
        return [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    raise Graph6Error(f"order {n} exceeds the supported graph6 range (<= {LONG_MAX})")


def write_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 record (no header, no trailing newline)."""
    n = g.n
    out = _encode_order(n)
    bits = [
        1 if g.adjacent(i, j) else 0
        for j in range(1, n)
        for i in range(j)
    ]
    bits.extend([0] * (-len(bits) % 6))
    for k in range(0, len(bits), 6):
        chunk = bits[k:k + 6]
        val = 0
        for b in chunk:
            val = (val << 1) | b
        out.append(val + 63)
    return bytes(out).decode("ascii")


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 record. Surrounding whitespace and an optional
    ``>>graph6<<`` header are ignored."""
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 record")
    data = [ord(c) for c in s]
    for pos, c in enumerate(data):
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c!r} at position {pos} outside printable range 63..126")

    if data[0] < 126:
        n, payload = data[0] - 63, data[1:]
    else:
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte order field")
        if data[1] == 126:
            raise Graph6Error("8-byte order field is not supported")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        if n <= SHORT_MAX:
            raise Graph6Error(f"order {n} must use the 1-byte order field")
        payload = data[4:]

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(payload) != need:
        raise Graph6Error(
            f"payload for n={n} must be {need} byte(s), got {len(payload)}"
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = payload[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if need:
        pad = 6 * need - nbits
        if (payload[-1] - 63) & ((1 << pad) - 1):
            raise Graph6Error("nonzero padding bits")
    return Graph(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse one record per non-blank line. Errors carry the 1-based line number."""
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            yield parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from exc
