"""graph6 and edge-list readers/writers.

graph6 layout: an order header N(n) followed by the upper triangle of the
adjacency matrix in column-major order ((0,1), (0,2), (1,2), (0,3), ...),
packed six bits per byte, most significant bit first, each byte offset
by 63, padded with zero bits.  N(n) is one byte for n <= 62, ``~`` plus three
bytes for n <= 258047, and ``~~`` plus six bytes beyond that.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO, Union

from .errors import GraphTooLarge, ParseError
from .graph import MAX_ORDER, Graph

GRAPH6_HEADER = ">>graph6<<"


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    n = g.n
    out = [_encode_order(n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def _sixbits(text: str, pos: int) -> int:
    c = ord(text[pos])
    if not 63 <= c <= 126:
        raise ParseError(f"byte {c!r} outside the graph6 range 63..126", offset=pos)
    return c - 63


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (an optional ``>>graph6<<`` prefix and a
    trailing newline are tolerated)."""
    start = 0
    if text.startswith(GRAPH6_HEADER):
        start = len(GRAPH6_HEADER)
    end = len(text)
    while end > start and text[end - 1] in "\r\n":
        end -= 1
    if end == start:
        raise ParseError("empty graph6 string", offset=start)
    pos = start
    if text[pos] == "~":
        if end > pos + 1 and text[pos + 1] == "~":
            width, pos = 6, pos + 2
        else:
            width, pos = 3, pos + 1
        if end - pos < width:
            raise ParseError("truncated graph6 order header", offset=end)
        n = 0
        for i in range(width):
            n = (n << 6) | _sixbits(text, pos + i)
        pos += width
    else:
        n = _sixbits(text, pos)
        pos += 1
    if n == 0:
        raise ParseError("graph6 order 0 is not supported", offset=start)
    if n > MAX_ORDER:
        raise GraphTooLarge(f"graph6 order {n} exceeds the supported maximum of {MAX_ORDER}")

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if end - pos < nbytes:
        raise ParseError(f"expected {nbytes} data bytes, found {end - pos}", offset=end)
    if end - pos > nbytes:
        raise ParseError("trailing garbage after graph6 data", offset=pos + nbytes)

    adj = [0] * n
    i, j = 0, 1
    k = 0
    for b in range(nbytes):
        val = _sixbits(text, pos + b)
        for s in range(5, -1, -1):
            if k == nbits:
                if val >> s & 1:
                    raise ParseError("nonzero graph6 padding bit", offset=pos + b)
                continue
            if val >> s & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph.from_adjacency(adj)


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines of ``u v`` (0-indexed).

    Blank lines are ignored.  Errors carry the 1-based line number.
    """
    lines = [(no, ln.split()) for no, ln in enumerate(text.splitlines(), start=1)]
    lines = [(no, parts) for no, parts in lines if parts]
    if not lines:
        raise ParseError("empty edge list", line=1)
    no, header = lines[0]
    if len(header) != 2:
        raise ParseError("header must be 'n m'", line=no)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError("header must contain two integers", line=no) from None
    if n < 1:
        raise ParseError("order must be at least 1", line=no)
    if n > MAX_ORDER:
        raise GraphTooLarge(f"order {n} exceeds the supported maximum of {MAX_ORDER}")
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else no)
        raise ParseError(f"header announces {m} edges, found {len(body)}", line=where)
    seen = set()
    edges = []
    for no, parts in body:
        if len(parts) != 2:
            raise ParseError("edge line must be 'u v'", line=no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("edge endpoints must be integers", line=no) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range 0..{n - 1}", line=no)
        if u == v:
            raise ParseError(f"loop at vertex {u}", line=no)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", line=no)
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_graph6_lines(source: Union[str, TextIO, Iterable[str]]) -> Iterator[Graph]:
    """Yield graphs from graph6 lines; blank lines are skipped.

    ``source`` may be a path, an open text file or any iterable of lines.
    Parse errors are re-raised with the 1-based line number.
    """
    if isinstance(source, str):
        with open(source, encoding="ascii", errors="replace") as fh:
            yield from read_graph6_lines(fh)
        return
    for no, line in enumerate(source, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            yield parse_graph6(line)
        except ParseError as exc:
            raise ParseError(f"graph6 stream: {exc}", line=no) from exc
