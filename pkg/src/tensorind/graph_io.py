"""graph6 and edge-list readers/writers.

graph6 layout: a size header N(n) followed by the upper triangle of the
adjacency matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...),
packed six bits per byte, each byte offset by 63, zero-padded at the end.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .errors import EdgeListError, Graph6Error
from .graph import Graph, _trusted

GRAPH6_HEADER = ">>graph6<<"


def _encode_size(n: int) -> str:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"graph6 cannot encode n={n}")


def emit_graph6(g: Graph) -> str:
    out = [_encode_size(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip("\r\n")
    base = 0
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)!r} outside printable graph6 range 63..126", base + i)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise Graph6Error("truncated 8-byte size header", base + len(vals))
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        pos = 8
    else:
        if len(vals) < 4:
            raise Graph6Error("truncated 4-byte size header", base + len(vals))
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        pos = 4
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = vals[pos:]
    if len(payload) < nbytes:
        raise Graph6Error(f"truncated payload: need {nbytes} bytes, have {len(payload)}", base + len(vals))
    if len(payload) > nbytes:
        raise Graph6Error("trailing bytes after payload", base + pos + nbytes)
    pad = nbytes * 6 - nbits
    if pad and payload[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", base + pos + nbytes - 1)
    adj = [0] * n
    k = 0
    j, i = 1, 0
    for v in payload:
        for shift in range(5, -1, -1):
            if k == nbits:
                break
            if v >> shift & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                j += 1
                i = 0
    return _trusted(n, adj)


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines (0-based, ``#`` comments).

    A line holding a single integer declares the vertex count, which allows
    isolated vertices; otherwise n is one more than the largest index seen.
    """
    edges = []
    declared = None
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise EdgeListError(f"expected integers, got {line!r}", lineno) from None
        if len(nums) == 1:
            if declared is not None or edges:
                raise EdgeListError("vertex count must come first and only once", lineno)
            if nums[0] < 0:
                raise EdgeListError("negative vertex count", lineno)
            declared = nums[0]
            continue
        if len(nums) != 2:
            raise EdgeListError(f"expected 'u v', got {line!r}", lineno)
        u, v = nums
        if u < 0 or v < 0:
            raise EdgeListError("negative vertex index", lineno)
        if u == v:
            raise EdgeListError(f"self-loop at {u}", lineno)
        if declared is not None and max(u, v) >= declared:
            raise EdgeListError(f"vertex {max(u, v)} outside declared range 0..{declared - 1}", lineno)
        top = max(top, u, v)
        edges.append((u, v))
    n = declared if declared is not None else top + 1
    return Graph.from_edges(n, edges)


def emit_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def _looks_like_graph6(line: str) -> bool:
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    return bool(line) and all(63 <= ord(ch) <= 126 for ch in line)


def read_graphs(text: str) -> list[Graph]:
    """Read a graph6 corpus (one graph per line) or a single edge list."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if lines and all(_looks_like_graph6(ln) for ln in lines):
        return [parse_graph6(ln) for ln in lines]
    return [parse_edge_list(text)]


def read_graph_file(path: str | Path) -> list[Graph]:
    return read_graphs(Path(path).read_text())


def iter_graph6_lines(graphs: Iterable[Graph]) -> Iterator[str]:
    for g in graphs:
        yield emit_graph6(g)
