"""Spectral bound, fractional chromatic number of vertex-transitive graphs, and the A(G) classifier."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from .errors import DomainError, InvariantViolation, SizeGuardError
from .graph import (
    DEFAULT_VERTEX_GUARD,
    Graph,
    components,
    disjoint_union,
    induced_subgraph,
    is_vertex_transitive,
    multi_product,
    tensor_product,
)
from .independence import (
    DEFAULT_BB_GUARD,
    HALF,
    ExpansionWitness,
    a_star,
    expansion_max,
    independence_ratio,
    max_independent_set,
)
from .matching import HallViolator, fpm_certificate
from .powers import witness_first_coordinate, witness_majority

DEFAULT_SPECTRAL_GUARD = 2000
LAMBDA_TOLERANCE = 1e-8
DEFAULT_WITNESS_POWER = 4


@dataclass(frozen=True)
class SpectralBound:
    lambda_max: float
    lambda_min: float
    value: float
    tolerance: float = LAMBDA_TOLERANCE


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    return a


def spectral_lambda(g: Graph, guard: int = DEFAULT_SPECTRAL_GUARD) -> SpectralBound:
    """-lambda_min / (lambda_max - lambda_min) for a regular graph with at least one edge."""
    if g.n > guard:
        raise SizeGuardError("spectral bound", g.n, guard)
    if g.m == 0 or not g.is_regular():
        raise DomainError("spectral bound is defined here only for regular graphs with an edge")
    eigs = np.linalg.eigvalsh(adjacency_matrix(g))
    lo, hi = float(eigs[0]), float(eigs[-1])
    d = g.degree(0)
    if abs(hi - d) > LAMBDA_TOLERANCE:
        raise InvariantViolation(f"largest eigenvalue {hi} of a {d}-regular graph differs from {d}")
    return SpectralBound(hi, lo, -lo / (hi - lo))


def _require_transitive(g: Graph) -> None:
    if is_vertex_transitive(g) is not True:
        raise DomainError("vertex-transitivity could not be established for this graph")


def chi_f_vertex_transitive(g: Graph, guard: int | None = None) -> Fraction:
    """|V| / alpha, valid because the graph is vertex-transitive."""
    _require_transitive(g)
    alpha, _ = max_independent_set(g, guard)
    return Fraction(g.n, alpha)


@dataclass
class AClassification:
    """A(G) as an exact value or a certified interval.

    ``certificates`` maps each provenance tag to the object backing it
    (violator, factor, witness set, spectral data).
    """

    lower: Fraction
    upper: Fraction
    exact: bool
    provenance: list[str]
    certificates: dict[str, Any] = field(default_factory=dict)

    @property
    def value(self) -> Fraction | None:
        return self.lower if self.exact else None


def union_parts(g: Graph) -> list[Graph]:
    """Split a graph into the parts of its union tag, or else its connected components."""
    tag = g.family_tag
    if tag is not None and tag[0] == "union":
        n_left = tag[1]
        left = induced_subgraph(g, range(n_left), tag[2])
        right = induced_subgraph(g, range(n_left, g.n), tag[3])
        return union_parts(left) + union_parts(right)
    comps = components(g)
    if len(comps) == 1:
        return [g]
    return [induced_subgraph(g, c) for c in comps]


def _spectral_upper(g: Graph, spectral_guard: int) -> tuple[Fraction, SpectralBound] | None:
    if g.m == 0 or not g.is_regular() or g.n > spectral_guard:
        return None
    sb = spectral_lambda(g, spectral_guard)
    # round up past the eigensolver tolerance so the rational stays a valid bound
    scale = 10 ** 9
    return Fraction(math.ceil((sb.value + sb.tolerance) * scale), scale), sb


def classify_A(
    g: Graph,
    witness_power: int = DEFAULT_WITNESS_POWER,
    guard: int | None = None,
    bb_guard: int | None = None,
    spectral_guard: int = DEFAULT_SPECTRAL_GUARD,
) -> AClassification:
    """Decide A(G) exactly where a proven route applies, otherwise bracket it."""
    if g.n == 0:
        raise DomainError("A(G) is undefined for the empty graph")
    bb_limit = DEFAULT_BB_GUARD if bb_guard is None else bb_guard

    cert = fpm_certificate(g)
    if isinstance(cert, HallViolator):
        one = Fraction(1)
        provenance = ["hall-violator"]
        # edgeless transitive graphs (K1 and its unions) reach 1 by both routes
        if is_vertex_transitive(g) is True:
            provenance.insert(0, "vertex-transitive")
        return AClassification(one, one, True, provenance, {"hall-violator": cert})
    certs: dict[str, Any] = {"fpm-certificate": cert}

    if is_vertex_transitive(g) is True and g.n <= bb_limit:
        alpha, witness = max_independent_set(g, bb_limit)
        i = Fraction(alpha, g.n)
        certs["vertex-transitive"] = witness
        return AClassification(i, i, True, ["vertex-transitive", "fpm-certificate"], certs)

    parts = union_parts(g)
    if len(parts) > 1 and all(is_vertex_transitive(p) is True for p in parts):
        size = 1
        for p in parts:
            size *= p.n
        limit = DEFAULT_VERTEX_GUARD if guard is None else guard
        if size <= min(limit, bb_limit):
            product = multi_product(parts, guard)
            alpha, witness = max_independent_set(product, bb_limit)
            i = Fraction(alpha, product.n)
            certs["vt-union-product"] = {"parts": [p.n for p in parts], "witness": witness}
            return AClassification(i, i, True, ["vt-union-product", "fpm-certificate"], certs)

    provenance = ["fpm-certificate"]
    if g.n <= bb_limit:
        exp = expansion_max(g, bb_limit)
        lower = exp.ratio if exp.ratio <= HALF else Fraction(1)
        certs["a-star"] = exp
        provenance.insert(0, "a-star")
        best_tag = None
        _, mis = max_independent_set(g, bb_limit)
        for k in range(1, witness_power + 1):
            for w in (witness_first_coordinate(g, exp.independent_set, k, guard),
                      witness_majority(g, mis, k, guard)):
                if w.ratio > lower:
                    lower, best_tag = w.ratio, f"power-witness k={k}"
                    certs[best_tag] = w
        if best_tag:
            provenance.append(best_tag)
    else:
        v = min(range(g.n), key=g.degree)
        lower = Fraction(1, 1 + g.degree(v))
        certs["a-star"] = ExpansionWitness(g.vertex_set([v]), g.vertex_set(g.neighbors(v)), lower)
        provenance.insert(0, "a-star")

    upper = HALF
    spectral = _spectral_upper(g, spectral_guard)
    if spectral is not None and spectral[0] < upper:
        upper = spectral[0]
        certs["spectral"] = spectral[1]
        provenance.append("spectral")
    if lower > upper:
        raise InvariantViolation(f"lower bound {lower} exceeds upper bound {upper}")
    return AClassification(lower, upper, lower == upper, provenance, certs)


@dataclass(frozen=True)
class Theorem3Report:
    """Truth of the four equivalent statements for a pair of vertex-transitive graphs."""

    i_product: Fraction
    a_star_product: Fraction
    a_star_parts: tuple[Fraction, Fraction]
    chi_f_product: Fraction
    chi_f_parts: tuple[Fraction, Fraction]
    A_union: Fraction
    A_parts: tuple[Fraction, Fraction]
    statements: dict[str, bool]
    a_product_route: str  # "search" or "vertex-transitive"

    @property
    def consistent(self) -> bool:
        return len(set(self.statements.values())) == 1


def theorem3_equivalence_check(
    g1: Graph, g2: Graph, guard: int | None = None, bb_guard: int | None = None, expansion_guard: int = 40
) -> Theorem3Report:
    for g in (g1, g2):
        _require_transitive(g)
        if g.m == 0:
            raise DomainError("both graphs need at least one edge")
    product = tensor_product(g1, g2, guard)
    i_p = independence_ratio(product, bb_guard)
    a1, a2 = a_star(g1, bb_guard), a_star(g2, bb_guard)
    if product.n <= expansion_guard:
        a_p = a_star(product, bb_guard)
        route = "search"
    else:
        # the product of vertex-transitive graphs is vertex-transitive, where a = i
        a_p = i_p if i_p <= HALF else Fraction(1)
        route = "vertex-transitive"
    chi1, chi2 = chi_f_vertex_transitive(g1, bb_guard), chi_f_vertex_transitive(g2, bb_guard)
    chi_p = Fraction(product.n, i_p * product.n)
    A_union = classify_A(disjoint_union(g1, g2), guard=guard, bb_guard=bb_guard)
    A1 = classify_A(g1, guard=guard, bb_guard=bb_guard)
    A2 = classify_A(g2, guard=guard, bb_guard=bb_guard)
    if not (A_union.exact and A1.exact and A2.exact):
        raise DomainError("A could not be determined exactly for the union or its parts")
    top = max(a1, a2)
    statements = {
        "i_product_le_max_a_star": i_p <= top,
        "a_star_product_le_max_a_star": a_p <= top,
        "chi_f_product_eq_min": chi_p == min(chi1, chi2),
        "A_union_eq_max": A_union.lower == max(A1.lower, A2.lower),
    }
    report = Theorem3Report(i_p, a_p, (a1, a2), chi_p, (chi1, chi2), A_union.lower, (A1.lower, A2.lower),
                            statements, route)
    if not report.consistent:
        raise InvariantViolation(f"equivalent statements disagree: {statements}")
    return report


def tardif_quarter_check(g1: Graph, g2: Graph, guard: int | None = None, bb_guard: int | None = None) -> bool:
    """chi_f(G x H) >= min(chi_f(G), chi_f(H)) / 4, exactly, for vertex-transitive inputs."""
    _require_transitive(g1)
    _require_transitive(g2)
    product = tensor_product(g1, g2, guard)
    alpha, _ = max_independent_set(product, bb_guard)
    chi_p = Fraction(product.n, alpha)
    return chi_p >= Fraction(1, 4) * min(chi_f_vertex_transitive(g1, bb_guard), chi_f_vertex_transitive(g2, bb_guard))
