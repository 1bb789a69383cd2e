"""graph6 encoding, short form only (orders 0..62).

A graph6 string is one byte N(n) = n + 63 followed by the upper triangle of
the adjacency matrix, read column by column (x(0,1), x(0,2), x(1,2), ...),
packed six bits per byte with 63 added to each byte.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import GraphTooLarge, MalformedGraph6
from .graph import MAX_ORDER, Graph

HEADER = ">>graph6<<"


def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    codes = [ord(ch) - 63 for ch in s]
    if any(c < 0 or c > 63 for c in codes):
        bad = next(ch for ch in s if not 63 <= ord(ch) <= 126)
        raise MalformedGraph6(f"byte {bad!r} outside the printable range 63..126")
    n = codes[0]
    if n == 63:
        raise GraphTooLarge("long-form graph6 (order > 62) is not supported")
    nbits = n * (n - 1) // 2
    body = codes[1:]
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(
            f"order {n} needs {(nbits + 5) // 6} data bytes, got {len(body)}"
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    pad = len(body) * 6 - nbits
    if pad and body and body[-1] & ((1 << pad) - 1):
        raise MalformedGraph6("nonzero padding bits")
    return Graph(n, edges)


def emit_graph6(G: Graph) -> str:
    n = G.n
    if n > MAX_ORDER:
        raise GraphTooLarge(f"order {n} cannot be written in short-form graph6")
    out = [chr(n + 63)]
    acc = nacc = 0
    for j in range(1, n):
        col = G.adj[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield (1-based line number, graph) for each non-blank line.

    Errors raised here carry the offending line number in their message.
    """
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield lineno, parse_graph6(line)
        except (MalformedGraph6, GraphTooLarge) as exc:
            raise type(exc)(f"line {lineno}: {exc}") from None


def read_graph6_file(fh: TextIO) -> list[Graph]:
    return [g for _, g in iter_graph6_lines(fh)]
