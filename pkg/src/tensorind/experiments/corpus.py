"""Built-in corpus of small connected graphs, one per isomorphism class."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

import numpy as np

from ..errors import ParameterError
from ..graph import Graph, canonical_form, is_connected

MAX_BUILTIN_N = 6


def decode_canonical(n: int, code: int) -> Graph:
    """Inverse of the upper-triangle encoding used by ``canonical_form``."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    edges = [p for k, p in enumerate(pairs) if code >> (len(pairs) - 1 - k) & 1]
    return Graph.from_edges(n, edges)


@lru_cache(maxsize=None)
def _all_codes(n: int) -> tuple[int, ...]:
    """Canonical codes of all graphs on n vertices, by one-vertex extension."""
    if n == 1:
        return (0,)
    seen = set()
    for code in _all_codes(n - 1):
        base = decode_canonical(n - 1, code)
        for nbrs in range(1 << (n - 1)):
            adj = list(base.adj) + [nbrs]
            for v in range(n - 1):
                if nbrs >> v & 1:
                    adj[v] |= 1 << (n - 1)
            seen.add(canonical_form(Graph(n, tuple(adj)))[1])
    return tuple(sorted(seen))


def all_graphs(n: int) -> list[Graph]:
    if not 1 <= n <= MAX_BUILTIN_N:
        raise ParameterError(f"built-in enumeration covers 1 <= n <= {MAX_BUILTIN_N}")
    return [decode_canonical(n, c) for c in _all_codes(n)]


def corpus_connected_graphs(max_n: int) -> Iterator[Graph]:
    """Connected graphs on 1..max_n vertices, each isomorphism class once, by (n, code)."""
    if max_n > MAX_BUILTIN_N:
        raise ParameterError(
            f"built-in corpus stops at n={MAX_BUILTIN_N}; supply larger corpora as a graph6 file via --input")
    for n in range(1, max_n + 1):
        for g in all_graphs(n):
            if is_connected(g):
                yield g


def random_graphs(count: int, max_n: int, seed: int, min_n: int = 2, p: float = 0.5) -> list[Graph]:
    """Seeded G(n, p) samples with n uniform in [min_n, max_n]."""
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    out = []
    for _ in range(count):
        n = int(rng.integers(min_n, max_n + 1))
        coins = rng.random(n * (n - 1) // 2) < p
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        out.append(Graph.from_edges(n, [e for e, c in zip(pairs, coins) if c]))
    return out
