"""graph6 interchange format (short form, n <= 62).

One graph per line.  The first byte encodes n as chr(n + 63); the upper
triangle of the adjacency matrix follows in column order (pairs (0,1), (0,2),
(1,2), (0,3), ...), packed big-endian into 6-bit groups, each group + 63.
"""

from __future__ import annotations

import os
from typing import Iterable, Union

from .errors import FormatError, SizeLimitError
from .graphs import Graph

__all__ = ["parse_graph6", "encode_graph6", "read_graph6_file", "write_graph6_file"]

_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a Graph."""
    line = text.strip()
    if line.startswith(_HEADER):
        line = line[len(_HEADER):]
    if not line:
        raise FormatError("empty graph6 line")
    for off, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"non-printable graph6 byte {ch!r} at offset {off}")
    first = ord(line[0]) - 63
    if first == 63:
        raise SizeLimitError("long-form graph6 (n > 62) is not supported")
    n = first
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = line[1:]
    if len(body) < need:
        raise FormatError(
            f"truncated bit vector: need {need} bytes after header, got {len(body)}"
        )
    if len(body) > need:
        raise FormatError(f"trailing bytes at offset {1 + need}")
    bits = 0
    for ch in body:
        bits = bits << 6 | (ord(ch) - 63)
    pad = 6 * need - nbits
    if bits & ((1 << pad) - 1):
        raise FormatError("nonzero padding bits at end of vector")
    bits >>= pad
    edges = []
    idx = nbits
    for j in range(1, n):
        for i in range(j):
            idx -= 1
            if bits >> idx & 1:
                edges.append((i, j))
    return Graph(n, edges)


def encode_graph6(g: Graph) -> str:
    """Encode a Graph as one graph6 line (short form only)."""
    if g.n > 62:
        raise SizeLimitError("short-form graph6 supports at most 62 vertices")
    bits = 0
    nbits = g.n * (g.n - 1) // 2
    idx = nbits
    for j in range(1, g.n):
        for i in range(j):
            idx -= 1
            if g.has_edge(i, j):
                bits |= 1 << idx
    need = (nbits + 5) // 6
    bits <<= 6 * need - nbits
    chars = [chr(g.n + 63)]
    for k in range(need - 1, -1, -1):
        chars.append(chr((bits >> (6 * k) & 63) + 63))
    return "".join(chars)


def read_graph6_file(path: Union[str, os.PathLike]) -> list[Graph]:
    """Read a graph6 corpus file; '#'-prefixed comment lines and blanks are ignored."""
    graphs = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                graphs.append(parse_graph6(line))
            except (FormatError, SizeLimitError) as exc:
                raise FormatError(f"{path}:{lineno}: {exc}") from exc
    return graphs


def write_graph6_file(
    path: Union[str, os.PathLike], graphs: Iterable[Graph], comment: str = ""
) -> None:
    with open(path, "w", encoding="ascii") as fh:
        if comment:
            fh.write(f"# {comment}\n")
        for g in graphs:
            fh.write(encode_graph6(g) + "\n")
