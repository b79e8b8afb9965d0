"""graph6 line format (the one nauty's ``geng`` and ``showg`` speak).

Layout: a size header ``N(n)`` followed by the upper triangle of the adjacency
matrix read column by column (``(0,1), (0,2), (1,2), (0,3), ...``), packed
six bits per character, each character offset by 63.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import MAX_ORDER, Graph, GraphError

HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    """Base class for graph6 decode failures."""

    def __init__(self, message: str, line_number: int | None = None) -> None:
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class Graph6HeaderError(Graph6Error):
    pass


class Graph6OrderError(Graph6Error):
    pass


class Graph6CharacterError(Graph6Error):
    pass


class Graph6LengthError(Graph6Error):
    """Payload is truncated or carries trailing garbage."""


def _size_header(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 0x3F) + 63) for shift in (12, 6, 0))


def encode(g: Graph) -> str:
    n = g.n
    rows = g.rows
    out = [_size_header(n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        rj = rows[j]
        for i in range(j):
            acc = (acc << 1) | (rj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode(line: str) -> Graph:
    s = line.strip("\r\n")
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6HeaderError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6CharacterError(f"invalid character {ch!r} (code {ord(ch)})")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise Graph6OrderError("8-byte size header implies n > 258047")
        if len(s) < 4:
            raise Graph6HeaderError("truncated 4-byte size header")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        if n <= 62:
            raise Graph6HeaderError(f"non-minimal size header for n = {n}")
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if not 1 <= n <= MAX_ORDER:
        raise Graph6OrderError(f"order {n} outside supported range 1..{MAX_ORDER}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise Graph6LengthError(f"payload has {len(body)} characters, expected {need}")
    if len(body) > need:
        raise Graph6LengthError(f"trailing garbage after {need} payload characters")
    bits = 0
    for ch in body:
        bits = (bits << 6) | (ord(ch) - 63)
    pad = need * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise Graph6LengthError("non-zero padding bits")
    bits >>= pad
    rows = [0] * n
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph.trusted(tuple(rows))


def read_lines(stream: TextIO | Iterable[str], strict: bool = True) -> Iterator[tuple[int, Graph | Graph6Error]]:
    """Yield ``(line_number, graph)`` per non-blank line.

    With ``strict`` a malformed line raises a ``Graph6Error`` carrying its line
    number; otherwise the error object is yielded in place of the graph.
    """
    for number, line in enumerate(stream, start=1):
        if not line.strip():
            continue
        try:
            yield number, decode(line.strip())
        except Graph6Error as exc:
            err = type(exc)(str(exc), number)
            if strict:
                raise err from None
            yield number, err


def write_lines(graphs: Iterable[Graph], stream: TextIO) -> None:
    for g in graphs:
        stream.write(encode(g))
        stream.write("\n")
