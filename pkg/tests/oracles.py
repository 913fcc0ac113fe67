"""Brute-force reference computations used as test oracles.

Nothing here imports the search code: graphs are plain lists of neighbour
sets and every quantity is computed the slow, obvious way.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def adj_from_edges(n: int, edges) -> list[set[int]]:
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def adj_of(g) -> list[set[int]]:
    return adj_from_edges(g.n, g.edges())


def product_adj(a: list[set[int]], b: list[set[int]]) -> list[set[int]]:
    nb = len(b)
    return [{x * nb + y for x in a[u] for y in b[v]} for u in range(len(a)) for v in range(nb)]


def power_adj(a: list[set[int]], k: int) -> list[set[int]]:
    out = a
    for _ in range(k - 1):
        out = product_adj(out, a)
    return out


def is_independent(adj: list[set[int]], s) -> bool:
    s = set(s)
    return all(not (adj[v] & s) for v in s)


def alpha(adj: list[set[int]]) -> int:
    """Maximum independent set size by the textbook recursion on a max-degree vertex."""

    def rec(alive: frozenset) -> int:
        if not alive:
            return 0
        best_v, best_d = None, -1
        for v in alive:
            d = len(adj[v] & alive)
            if d <= 1:
                # a vertex of degree <= 1 is in some maximum independent set
                return 1 + rec(alive - {v} - adj[v])
            if d > best_d:
                best_v, best_d = v, d
        v = best_v
        return max(rec(alive - {v}), 1 + rec(alive - {v} - adj[v]))

    return rec(frozenset(range(len(adj))))


def independent_sets(adj: list[set[int]]):
    """Every nonempty independent set, by extending with larger-indexed vertices only."""
    n = len(adj)

    def rec(current: list[int], allowed: set[int]):
        for v in sorted(allowed):
            nxt = current + [v]
            yield nxt
            yield from rec(nxt, {u for u in allowed if u > v and u not in adj[v]})

    yield from rec([], set(range(n)))


def expansion_ratio(adj: list[set[int]]) -> Fraction:
    best = Fraction(0)
    for s in independent_sets(adj):
        nb = set().union(*(adj[v] for v in s))
        best = max(best, Fraction(len(s), len(s) + len(nb)))
    return best


def has_cycle_edge_factor(adj: list[set[int]]) -> bool:
    """A permutation sending every vertex to a neighbour exists (nonzero permanent).

    Its cycles of length 2 are edges and longer cycles are graph cycles, so
    this is the same as a fractional perfect matching with weights 0, 1/2, 1.
    """
    n = len(adj)
    used = [False] * n

    def rec(v: int) -> bool:
        if v == n:
            return True
        for u in adj[v]:
            if not used[u]:
                used[u] = True
                if rec(v + 1):
                    return True
                used[u] = False
        return False

    return rec(0)


def all_maximum_independent_sets(adj: list[set[int]]) -> list[frozenset]:
    best, out = 0, []
    for s in independent_sets(adj):
        if len(s) > best:
            best, out = len(s), [frozenset(s)]
        elif len(s) == best:
            out.append(frozenset(s))
    return out


def edge_key(n: int, adj: list[set[int]], perm) -> tuple:
    return tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u in range(n) for v in adj[u] if u < v))


def isomorphic(a: list[set[int]], b: list[set[int]]) -> bool:
    n = len(a)
    if n != len(b) or sorted(map(len, a)) != sorted(map(len, b)):
        return False
    target = edge_key(n, b, list(range(n)))
    return any(edge_key(n, a, p) == target for p in itertools.permutations(range(n)))


def canonical_key(n: int, adj: list[set[int]]) -> tuple:
    return min(edge_key(n, adj, p) for p in itertools.permutations(range(n)))


def is_connected(adj: list[set[int]]) -> bool:
    n = len(adj)
    if n == 0:
        return True
    seen, stack = {0}, [0]
    while stack:
        for u in adj[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == n
