"""Fractional perfect matchings via the bipartite double cover G x K2.

G has a fractional perfect matching iff G x K2 has a perfect matching.  A
perfect matching of the double cover is read as a successor map v -> w on
V(G) with vw in E(G); its orbits are the cycles and edges of a {1/2, 1}
weighted spanning factor.  When no perfect matching exists, alternating-path
reachability from the unmatched vertices yields a set S with |N(S)| < |S|, which
the Tutte reduction turns into an independent Hall violator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .errors import DomainError
from .graph import Graph, VertexSet, complete, is_independent_bits, iter_bits, neighborhood_bits, tensor_product


def bipartite_double(g: Graph) -> Graph:
    """G x K2; vertex (v, s) has index 2v + s, so the sides are even and odd indices."""
    return tensor_product(g, complete(2))


class _Matcher:
    """Augmenting-path (Kuhn) matching from left ids into right ids."""

    def __init__(self, n_left: int, n_right: int, nbrs: Callable[[int], int]):
        self.nbrs = nbrs
        self.left_to_right = [-1] * n_left
        self.right_to_left = [-1] * n_right

    def _augment(self, v: int, visited: list[bool]) -> bool:
        for w in iter_bits(self.nbrs(v)):
            if visited[w]:
                continue
            visited[w] = True
            u = self.right_to_left[w]
            if u < 0 or self._augment(u, visited):
                self.left_to_right[v] = w
                self.right_to_left[w] = v
                return True
        return False

    def grow(self) -> int:
        """Augment from every free left vertex in index order until none succeeds."""
        progress = True
        while progress:
            progress = False
            for v, w in enumerate(self.left_to_right):
                if w < 0 and self._augment(v, [False] * len(self.right_to_left)):
                    progress = True
        return self.size

    @property
    def size(self) -> int:
        return sum(1 for w in self.left_to_right if w >= 0)

    def deficient_set(self) -> tuple[int, int]:
        """Left/right sets reachable by alternating paths from the free left vertices."""
        frontier = [v for v, w in enumerate(self.left_to_right) if w < 0]
        left = sum(1 << v for v in frontier)
        right = 0
        while frontier:
            nxt = []
            for v in frontier:
                for w in iter_bits(self.nbrs(v) & ~right):
                    right |= 1 << w
                    u = self.right_to_left[w]
                    if u >= 0 and not left >> u & 1:
                        left |= 1 << u
                        nxt.append(u)
            frontier = nxt
        return left, right


def _double_cover_matcher(adj: Sequence[int]) -> _Matcher:
    m = _Matcher(len(adj), len(adj), adj.__getitem__)
    m.grow()
    return m


def max_bipartite_matching(g: Graph, left: VertexSet) -> list[tuple[int, int]]:
    """Maximum matching of a bipartite graph as (left, right) pairs sorted by left vertex."""
    if left.n != g.n:
        raise DomainError("left side does not belong to this graph")
    right_bits = ((1 << g.n) - 1) & ~left.bits
    if not is_independent_bits(g.adj, left.bits) or not is_independent_bits(g.adj, right_bits):
        raise DomainError("graph is not bipartite with the given left side")
    lefts = left.to_list()
    matcher = _Matcher(len(lefts), g.n, lambda i: g.adj[lefts[i]])
    matcher.grow()
    return [(lefts[i], w) for i, w in enumerate(matcher.left_to_right) if w >= 0]


def has_fpm(g: Graph) -> bool:
    """True iff g has a fractional perfect matching (the empty graph trivially does)."""
    return _double_cover_matcher(g.adj).size == g.n


@dataclass(frozen=True)
class HallViolator:
    """Independent I with |N(I)| < |I|."""

    independent_set: VertexSet
    boundary: VertexSet

    def verify(self, g: Graph) -> bool:
        i = self.independent_set.bits
        nb = neighborhood_bits(g.adj, i)
        return i != 0 and is_independent_bits(g.adj, i) and nb == self.boundary.bits and nb.bit_count() < i.bit_count()


@dataclass(frozen=True)
class FpmCertificate:
    """Spanning factor of weight-1 edges and weight-1/2 cycles."""

    edges_weight_1: list[tuple[int, int]]
    cycles_weight_half: list[list[int]]
    covered: VertexSet = field(compare=False)

    def total_weight(self) -> Fraction:
        return len(self.edges_weight_1) + sum(Fraction(len(c), 2) for c in self.cycles_weight_half)

    def verify(self, g: Graph) -> bool:
        seen = 0
        for u, v in self.edges_weight_1:
            if not g.has_edge(u, v) or seen >> u & 1 or seen >> v & 1:
                return False
            seen |= 1 << u | 1 << v
        for cyc in self.cycles_weight_half:
            if len(cyc) < 3:
                return False
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if not g.has_edge(a, b):
                    return False
            for v in cyc:
                if seen >> v & 1:
                    return False
                seen |= 1 << v
        full = (1 << g.n) - 1
        return seen == full and self.covered.bits == full and self.total_weight() == Fraction(g.n, 2)

    def weights(self) -> dict[tuple[int, int], Fraction]:
        """Edge weights keyed by (min, max) endpoint pairs."""
        w: dict[tuple[int, int], Fraction] = {}
        for u, v in self.edges_weight_1:
            w[min(u, v), max(u, v)] = Fraction(1)
        for cyc in self.cycles_weight_half:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                w[min(a, b), max(a, b)] = Fraction(1, 2)
        return w


def tutte_independent_violator(g: Graph, s: VertexSet) -> HallViolator:
    """Drop from S every vertex with a neighbour in S; what remains still violates Hall."""
    if s.n != g.n:
        raise DomainError("vertex set does not belong to this graph")
    nbs = neighborhood_bits(g.adj, s.bits)
    if nbs.bit_count() >= s.bits.bit_count():
        raise DomainError("set satisfies |N(S)| >= |S|; no violator to extract")
    inner = s.bits & nbs
    i = s.bits & ~inner
    return HallViolator(VertexSet(i, g.n), VertexSet(neighborhood_bits(g.adj, i), g.n))


def _orbits_to_certificate(g: Graph, successor: list[int]) -> FpmCertificate:
    edges: list[tuple[int, int]] = []
    cycles: list[list[int]] = []
    visited = 0
    for start in range(g.n):
        if visited >> start & 1:
            continue
        orbit = [start]
        visited |= 1 << start
        v = successor[start]
        while v != start:
            orbit.append(v)
            visited |= 1 << v
            v = successor[v]
        if len(orbit) == 2:
            edges.append((orbit[0], orbit[1]))
        else:
            cycles.append(orbit)
    return FpmCertificate(edges, cycles, VertexSet.full(g.n))


def fpm_certificate(g: Graph) -> FpmCertificate | HallViolator:
    """A {1/2, 1} cycle-and-edge factor when one exists, otherwise an independent Hall violator."""
    matcher = _double_cover_matcher(g.adj)
    if matcher.size == g.n:
        return _orbits_to_certificate(g, matcher.left_to_right)
    s_bits, _ = matcher.deficient_set()
    return tutte_independent_violator(g, VertexSet(s_bits, g.n))


@dataclass(frozen=True)
class AOneVerdict:
    """Outcome of deciding A(G) = 1 versus A(G) <= 1/2, with its certificate."""

    a_equals_1: bool
    certificate: FpmCertificate | HallViolator

    @property
    def label(self) -> str:
        return "A_equals_1" if self.a_equals_1 else "A_at_most_half"

    def verify(self, g: Graph) -> bool:
        expected = HallViolator if self.a_equals_1 else FpmCertificate
        return isinstance(self.certificate, expected) and self.certificate.verify(g)


def decide_A_one(g: Graph) -> AOneVerdict:
    cert = fpm_certificate(g)
    return AOneVerdict(isinstance(cert, HallViolator), cert)


class IncrementalFpm:
    """Double-cover matching maintained under edge insertions (graph processes)."""

    def __init__(self, n: int):
        self.n = n
        self.adj = [0] * n
        self._matcher = _Matcher(n, n, self.adj.__getitem__)

    def add_edge(self, u: int, v: int) -> None:
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u

    def has_fpm(self) -> bool:
        # a maximum matching stays valid after insertions; only augmentation is needed
        return self._matcher.grow() == self.n
