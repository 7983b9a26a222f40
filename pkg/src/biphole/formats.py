"""Graph interchange: graph6 (bit-exact), plain edge lists, and DOT export.

graph6 is the interchange format for exhaustive small-graph corpora, so the
codec here is strict: exact length, printable byte range 63..126, zero
padding bits, and write(parse(s)) == s.  The edge-list format is a loose
"n m" header followed by m "u v" lines.  DOT output is one-way.
"""
from __future__ import annotations

from typing import Iterable, Iterator

from .errors import GraphError, ParseError
from .graph import MAX_VERTICES, Graph

_HEADER = ">>graph6<<"


def _pair_bits(n: int) -> list[tuple[int, int]]:
    # Upper triangle in column-major order: (0,1), (0,2), (1,2), (0,3), ...
    return [(i, j) for j in range(1, n) for i in range(j)]


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (optional >>graph6<< header allowed)."""
    line = text.rstrip("\r\n")
    if line.startswith(_HEADER):
        line = line[len(_HEADER) :]
    if not line:
        raise ParseError("empty graph6 string", offset=0)
    data = []
    for i, ch in enumerate(line):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise ParseError(f"byte {code} outside graph6 range 63..126", offset=i)
        data.append(code - 63)

    if data[0] < 63:
        n = data[0]
        body = data[1:]
        body_offset = 1
    else:
        if len(data) >= 2 and data[1] == 63:
            raise ParseError("graph6 size class above 258047 not supported", offset=1)
        if len(data) < 4:
            raise ParseError("truncated graph6 size field", offset=len(line))
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
        body_offset = 4
    if n > MAX_VERTICES:
        raise ParseError(f"order {n} exceeds supported maximum {MAX_VERTICES}", offset=0)

    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(body) < expect:
        raise ParseError(
            f"graph6 body too short: {len(body)} groups, expected {expect}",
            offset=len(line),
        )
    if len(body) > expect:
        raise ParseError("trailing garbage after graph6 body", offset=body_offset + expect)

    adj = [0] * n
    pairs = _pair_bits(n)
    for k in range(len(body) * 6):
        bit = (body[k // 6] >> (5 - k % 6)) & 1
        if k < nbits:
            if bit:
                i, j = pairs[k]
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        elif bit:
            raise ParseError("nonzero padding bits", offset=body_offset + k // 6)
    return Graph._from_adj(n, adj)


def write_graph6(g: Graph) -> str:
    """Canonical graph6 encoding; parse_graph6 round-trips it exactly."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + chr((n >> 12) + 63) + chr(((n >> 6) & 63) + 63) + chr((n & 63) + 63)
    else:
        raise GraphError(f"order {n} exceeds the implemented graph6 size classes")
    bits = 0
    out = [head]
    group = 0
    filled = 0
    for i, j in _pair_bits(n):
        group = (group << 1) | (g.adj_mask(i) >> j & 1)
        filled += 1
        if filled == 6:
            out.append(chr(group + 63))
            group = 0
            filled = 0
        bits += 1
    if filled:
        out.append(chr((group << (6 - filled)) + 63))
    return "".join(out)


def iter_graph6(text: str) -> Iterator[Graph]:
    """Parse every nonempty line of a graph6 document."""
    for raw in text.splitlines():
        line = raw.strip()
        if line:
            yield parse_graph6(line)


def parse_edge_list(text: str, one_based: bool = False) -> Graph:
    """Parse "n m" header plus m lines "u v"; errors carry line numbers."""
    lines = text.splitlines()
    idx = 0

    def next_line():
        nonlocal idx
        while idx < len(lines):
            stripped = lines[idx].strip()
            idx += 1
            if stripped:
                return stripped, idx
        return None, idx

    header, lineno = next_line()
    if header is None:
        raise ParseError("missing header line", line=1)
    parts = header.split()
    if len(parts) != 2:
        raise ParseError('header must be "n m"', line=lineno)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError("header fields must be integers", line=lineno) from None
    if n < 0 or m < 0:
        raise ParseError("header fields must be nonnegative", line=lineno)

    shift = 1 if one_based else 0
    edges = []
    for _ in range(m):
        pair, lineno = next_line()
        if pair is None:
            raise ParseError(
                f"expected {m} edge lines, file ended early", line=idx + 1
            )
        parts = pair.split()
        if len(parts) != 2:
            raise ParseError('edge line must be "u v"', line=lineno)
        try:
            u, v = int(parts[0]) - shift, int(parts[1]) - shift
        except ValueError:
            raise ParseError("edge endpoints must be integers", line=lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"endpoint outside 0..{n - 1}", line=lineno)
        if u == v:
            raise ParseError("self-loop not allowed", line=lineno)
        edges.append((u, v))
    extra, lineno = next_line()
    if extra is not None:
        raise ParseError("trailing content after declared edges", line=lineno)
    return Graph(n, edges)


def write_edge_list(g: Graph) -> str:
    """Stable textual form: header then sorted edges, LF line endings."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def write_dot(
    g: Graph,
    highlight_vertices: Iterable[int] = (),
    highlight_edges: Iterable[tuple[int, int]] = (),
) -> str:
    """Graphviz source; highlighted items get distinct attributes."""
    hv = set(highlight_vertices)
    he = {frozenset(e) for e in highlight_edges}
    lines = ["graph G {"]
    for v in range(g.n):
        attr = " [style=filled, fillcolor=lightblue]" if v in hv else ""
        lines.append(f"  {v}{attr};")
    for u, v in g.edges():
        attr = " [color=red, penwidth=2.0]" if frozenset((u, v)) in he else ""
        lines.append(f"  {u} -- {v}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
