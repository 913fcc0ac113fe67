"""Certified independent sets in tensor powers and the disjoint-union power identity."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import DomainError, InvariantViolation, SizeGuardError
from .graph import (
    DEFAULT_VERTEX_GUARD,
    Graph,
    VertexSet,
    disjoint_union,
    is_independent_bits,
    multi_product,
    neighborhood_bits,
    tensor_power,
)
from .independence import independence_number

# power graphs up to this order are built explicitly for the independence check
_EXPLICIT_BASE = 4096


@dataclass(frozen=True)
class PowerWitness:
    """An independent set of ``base``^k given by a construction.

    ``explicit_set`` is present when the power was small enough to
    materialise; ``verified`` then records the runtime independence check.
    Otherwise the witness is analytic: counted, not constructed.
    """

    base: Graph = field(repr=False)
    k: int
    description: str
    set_size: int
    ratio: Fraction
    explicit_set: VertexSet | None = field(default=None, repr=False)
    verified: bool = False

    @property
    def analytic(self) -> bool:
        return self.explicit_set is None


def first_coordinate_count(n: int, s: int, i: int, k: int) -> int:
    """|{v in V^k : some coordinate in S, and the first such lies in I}| with |V|=n, |S|=s, |I|=i."""
    return sum((n - s) ** (j - 1) * i * n ** (k - j) for j in range(1, k + 1))


def majority_count(n: int, i: int, k: int) -> int:
    """Tuples of V^k with strictly more than k/2 coordinates in I."""
    return sum(comb(k, j) * i ** j * (n - i) ** (k - j) for j in range(k // 2 + 1, k + 1))


def _cross_free(g: Graph, base_adj, base_size: int, a: int, b: int, level: int) -> bool:
    """No vertex of ``a`` is adjacent to a vertex of ``b`` in g^level (bitsets over V^level)."""
    if not a or not b:
        return True
    if g.n ** level == base_size:
        return not neighborhood_bits(base_adj, a) & b
    width = g.n ** (level - 1)
    mask = (1 << width) - 1
    a_slices = [a >> (x * width) & mask for x in range(g.n)]
    b_slices = [b >> (x * width) & mask for x in range(g.n)]
    for x in range(g.n):
        if not a_slices[x]:
            continue
        for y in g.neighbors(x):
            if b_slices[y] and not _cross_free(g, base_adj, base_size, a_slices[x], b_slices[y], level - 1):
                return False
    return True


def is_independent_in_power(g: Graph, k: int, bits: int) -> bool:
    """Independence of a vertex set of g^k without building g^k when it is large."""
    base_level = 1
    while base_level < k and g.n ** (base_level + 1) <= _EXPLICIT_BASE:
        base_level += 1
    base = tensor_power(g, base_level)
    if base_level == k:
        return is_independent_bits(base.adj, bits)
    return _cross_free(g, base.adj, base.n, bits, bits, k)


def _materialise(g: Graph, k: int, member) -> int:
    bits = 0
    for idx, coords in enumerate(itertools.product(range(g.n), repeat=k)):
        if member(coords):
            bits |= 1 << idx
    return bits


def _require_independent(g: Graph, i: VertexSet) -> None:
    if i.n != g.n:
        raise DomainError("independent set does not belong to this graph")
    if not i:
        raise DomainError("construction needs a nonempty independent set")
    if not is_independent_bits(g.adj, i.bits):
        raise DomainError("the given set is not independent")


def _finish(g: Graph, k: int, description: str, count: int, member, guard: int | None) -> PowerWitness:
    total = g.n ** k
    limit = DEFAULT_VERTEX_GUARD if guard is None else guard
    ratio = Fraction(count, total)
    if total > limit:
        return PowerWitness(g, k, description, count, ratio)
    bits = _materialise(g, k, member)
    if bits.bit_count() != count:
        raise InvariantViolation(
            f"{description}: closed-form count {count} differs from materialised {bits.bit_count()}")
    ok = is_independent_in_power(g, k, bits)
    if not ok:
        raise InvariantViolation(f"{description}: materialised set is not independent in G^{k}")
    return PowerWitness(g, k, description, count, ratio, VertexSet(bits, total), True)


def witness_first_coordinate(g: Graph, i: VertexSet, k: int, guard: int | None = None) -> PowerWitness:
    """Tuples touching S = I + N(I) whose first coordinate in S lies in I."""
    _require_independent(g, i)
    if k < 1:
        raise DomainError(f"power must be >= 1, got {k}")
    s_bits = i.bits | neighborhood_bits(g.adj, i.bits)
    count = first_coordinate_count(g.n, s_bits.bit_count(), len(i), k)

    def member(coords) -> bool:
        for c in coords:
            if s_bits >> c & 1:
                return bool(i.bits >> c & 1)
        return False

    return _finish(g, k, "first-coordinate", count, member, guard)


def witness_majority(g: Graph, i: VertexSet, k: int, guard: int | None = None) -> PowerWitness:
    """Tuples with strictly more than k/2 coordinates in I."""
    _require_independent(g, i)
    if k < 1:
        raise DomainError(f"power must be >= 1, got {k}")
    count = majority_count(g.n, len(i), k)

    def member(coords) -> bool:
        return 2 * sum(i.bits >> c & 1 for c in coords) > k

    return _finish(g, k, "majority", count, member, guard)


def first_coordinate_ratio(n: int, s: int, i: int, k: int) -> Fraction:
    """Closed form (|I|/s) * (1 - ((n - s)/n)^k)."""
    return Fraction(i, s) * (1 - Fraction(n - s, n) ** k)


@dataclass(frozen=True)
class UnionPowerReport:
    """Both sides of alpha((G+H)^n) = sum_k C(n,k) alpha(G^k H^(n-k))."""

    n: int
    lhs: int
    terms: list[tuple[int, int, int]]  # (k, C(n, k), alpha(G^k x H^(n-k)))
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def union_power_decomposition(g: Graph, h: Graph, n: int, guard: int | None = None,
                              bb_guard: int | None = None) -> UnionPowerReport:
    if n < 1:
        raise DomainError(f"power must be >= 1, got {n}")
    union = disjoint_union(g, h)
    lhs = independence_number(tensor_power(union, n, guard), bb_guard)
    terms = []
    for k in range(n + 1):
        factors = [g] * k + [h] * (n - k)
        alpha = independence_number(multi_product(factors, guard), bb_guard)
        terms.append((k, comb(n, k), alpha))
    rhs = sum(c * a for _, c, a in terms)
    return UnionPowerReport(n, lhs, terms, rhs)


@dataclass(frozen=True)
class PowerScan:
    ratios: list[tuple[int, Fraction]]
    cutoff: int | None  # first power that exceeded a guard, if any


def power_ratio_scan(g: Graph, k_max: int, guard: int | None = None, bb_guard: int | None = None) -> PowerScan:
    """Exact i(g^k) for k = 1..k_max, stopping at the first power past a guard."""
    ratios: list[tuple[int, Fraction]] = []
    cutoff = None
    for k in range(1, k_max + 1):
        try:
            gk = tensor_power(g, k, guard)
            r = Fraction(independence_number(gk, bb_guard), gk.n)
        except SizeGuardError:
            cutoff = k
            break
        if ratios and r < ratios[-1][1]:
            raise InvariantViolation(f"i(G^{k}) = {r} dropped below i(G^{k - 1}) = {ratios[-1][1]}")
        ratios.append((k, r))
    return PowerScan(ratios, cutoff)
