"""Exact independence number, expansion ratio a(G), a*(G), clique and chromatic numbers.

All searches branch on the lowest-index candidate vertex, include-branch
first, so independent sets are visited in lexicographic order of their
sorted member tuples.  Recording only strict improvements therefore yields
the lexicographically smallest optimal set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, SizeGuardError
from .graph import Graph, VertexSet, complement, is_independent_bits, iter_bits, neighborhood_bits

DEFAULT_BB_GUARD = 64
DEFAULT_CHROMATIC_GUARD = 32
HALF = Fraction(1, 2)


def _guard(g: Graph, guard: int | None, default: int, what: str) -> None:
    limit = default if guard is None else guard
    if g.n > limit:
        raise SizeGuardError(what, g.n, limit)


def clique_cover_bound(adj, p: int) -> int:
    """Number of cliques in a greedy clique cover of ``p``; bounds alpha(G[p])."""
    count = 0
    while p:
        low = p & -p
        p ^= low
        common = p & adj[low.bit_length() - 1]
        while common:
            w = common & -common
            p ^= w
            common &= adj[w.bit_length() - 1]
        count += 1
    return count


@lru_cache(maxsize=4096)
def _mis(adj: tuple[int, ...]) -> tuple[int, int]:
    best = 0
    best_bits = 0

    def search(cur: int, size: int, p: int) -> None:
        nonlocal best, best_bits
        if size > best:
            best, best_bits = size, cur
        while p:
            if size + p.bit_count() <= best or size + clique_cover_bound(adj, p) <= best:
                return
            low = p & -p
            v = low.bit_length() - 1
            nv = adj[v] & p
            search(cur | low, size + 1, p & ~low & ~nv)
            if not nv:
                # v is free: every set avoiding v extends by v
                return
            p ^= low

    search(0, 0, (1 << len(adj)) - 1)
    return best, best_bits


def max_independent_set(g: Graph, guard: int | None = None) -> tuple[int, VertexSet]:
    """Return ``(alpha, witness)``; the witness is the lexicographically smallest maximum set."""
    _guard(g, guard, DEFAULT_BB_GUARD, "max independent set")
    size, bits = _mis(g.adj)
    return size, VertexSet(bits, g.n)


def independence_number(g: Graph, guard: int | None = None) -> int:
    return max_independent_set(g, guard)[0]


def independence_ratio(g: Graph, guard: int | None = None) -> Fraction:
    if g.n == 0:
        raise DomainError("independence ratio of the empty graph")
    return Fraction(independence_number(g, guard), g.n)


def maximum_independent_sets(g: Graph, cap: int = 100_000, guard: int | None = None) -> tuple[list[VertexSet], bool]:
    """All maximum independent sets in lexicographic order.

    Returns ``(sets, complete)``; ``complete`` is False when ``cap`` stopped
    the enumeration early.
    """
    _guard(g, guard, DEFAULT_BB_GUARD, "maximum independent set enumeration")
    adj = g.adj
    alpha = _mis(adj)[0]
    found: list[int] = []

    class _Cap(Exception):
        pass

    def search(cur: int, size: int, p: int) -> None:
        if not p:
            if size == alpha:
                if len(found) == cap:
                    raise _Cap
                found.append(cur)
            return
        if size + p.bit_count() < alpha or size + clique_cover_bound(adj, p) < alpha:
            return
        low = p & -p
        v = low.bit_length() - 1
        nv = adj[v] & p
        search(cur | low, size + 1, p & ~low & ~nv)
        if nv:
            search(cur, size, p ^ low)

    complete = True
    try:
        search(0, 0, (1 << g.n) - 1)
    except _Cap:
        complete = False
    return [VertexSet(b, g.n) for b in found], complete


@dataclass(frozen=True)
class ExpansionWitness:
    """An independent set I, its neighbourhood N(I) and |I| / (|I| + |N(I)|)."""

    independent_set: VertexSet
    boundary: VertexSet
    ratio: Fraction

    def verify(self, g: Graph) -> bool:
        i = self.independent_set.bits
        nb = neighborhood_bits(g.adj, i)
        size = i.bit_count()
        return (
            size > 0
            and is_independent_bits(g.adj, i)
            and nb == self.boundary.bits
            and not nb & i
            and self.ratio == Fraction(size, size + nb.bit_count())
        )


@lru_cache(maxsize=4096)
def _expansion(adj: tuple[int, ...]) -> tuple[int, int, int]:
    """Return (best_bits, |I|, |N(I)|) maximising |I| / (|I| + |N(I)|)."""
    best_num, best_den = 0, 1
    best_bits = 0

    def search(cur: int, size: int, nb: int, nbc: int, p: int, fresh: bool) -> None:
        nonlocal best_num, best_den, best_bits
        if fresh and size and size * best_den > best_num * (size + nbc):
            best_num, best_den, best_bits = size, size + nbc, cur
        if not p:
            return
        # completions add an independent J within p: |J| <= cover(p), and N grows by
        # at least the smallest count of new neighbours of any candidate
        cover = clique_cover_bound(adj, p)
        grow = min((adj[v] & ~nb).bit_count() for v in iter_bits(p))
        x = size + cover
        if x * best_den <= best_num * (x + nbc + grow):
            return
        low = p & -p
        v = low.bit_length() - 1
        nb2 = nb | adj[v]
        search(cur | low, size + 1, nb2, nb2.bit_count(), p & ~low & ~adj[v], True)
        search(cur, size, nb, nbc, p ^ low, False)

    search(0, 0, 0, 0, (1 << len(adj)) - 1, False)
    return best_bits, best_num, best_den - best_num


def expansion_max(g: Graph, guard: int | None = None) -> ExpansionWitness:
    """Nonempty independent set maximising |I| / (|I| + |N(I)|), lexicographically smallest on ties."""
    if g.n < 1:
        raise DomainError("expansion ratio needs at least one vertex")
    _guard(g, guard, DEFAULT_BB_GUARD, "expansion ratio search")
    bits, size, nbc = _expansion(g.adj)
    nb = neighborhood_bits(g.adj, bits)
    return ExpansionWitness(VertexSet(bits, g.n), VertexSet(nb, g.n), Fraction(size, size + nbc))


def expansion_ratio(g: Graph, guard: int | None = None) -> Fraction:
    """a(G)."""
    return expansion_max(g, guard).ratio


def a_star(g: Graph, guard: int | None = None) -> Fraction:
    """a*(G): a(G) when at most 1/2, otherwise 1."""
    a = expansion_ratio(g, guard)
    return a if a <= HALF else Fraction(1)


def clique_number(g: Graph, guard: int | None = None) -> int:
    _guard(g, guard, DEFAULT_BB_GUARD, "clique number")
    if g.n == 0:
        return 0
    return _mis(complement(g).adj)[0]


def _greedy_colouring(g: Graph) -> int:
    colour = [-1] * g.n
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    for v in order:
        taken = {colour[u] for u in iter_bits(g.adj[v])}
        c = 0
        while c in taken:
            c += 1
        colour[v] = c
    return max(colour) + 1


def _colourable(g: Graph, k: int) -> bool:
    n = g.n
    adj = g.adj
    colour = [-1] * n
    # forbidden[v] is a bitmask of colours used by v's neighbours
    forbidden = [0] * n

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if colour[v] < 0:
                cand = (forbidden[v].bit_count(), g.degree(v))
                if key is None or cand > key:
                    best, key = v, cand
        return best

    def solve(coloured: int, used: int) -> bool:
        if coloured == n:
            return True
        v = pick()
        # symmetry: a fresh colour is only ever the next unused one
        for c in range(min(k, used + 1)):
            if forbidden[v] >> c & 1:
                continue
            colour[v] = c
            touched = [u for u in iter_bits(adj[v]) if colour[u] < 0 and not forbidden[u] >> c & 1]
            for u in touched:
                forbidden[u] |= 1 << c
            if solve(coloured + 1, max(used, c + 1)):
                return True
            for u in touched:
                forbidden[u] &= ~(1 << c)
            colour[v] = -1
        return False

    return solve(0, 0)


def chromatic_number(g: Graph, guard: int | None = None) -> int:
    """Exact chi(G) by clique lower bound, greedy upper bound and backtracking in between."""
    _guard(g, guard, DEFAULT_CHROMATIC_GUARD, "chromatic number")
    if g.n == 0:
        return 0
    lower = clique_number(g)
    upper = _greedy_colouring(g)
    for k in range(lower, upper):
        if _colourable(g, k):
            return k
    return upper
