from fractions import Fraction

import numpy as np
import pytest
from conftest import graphs
from hypothesis import given
from hypothesis import strategies as st

from tensorind.bounds import (
    chi_f_vertex_transitive,
    classify_A,
    spectral_lambda,
    tardif_quarter_check,
    theorem3_equivalence_check,
    union_parts,
)
from tensorind.errors import DomainError
from tensorind.experiments.processes import random_regular_graph
from tensorind.graph import (
    Graph,
    circular,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    kneser,
    path,
    petersen,
    star,
    tensor_power,
    tensor_product,
)
from tensorind.independence import HALF, a_star, independence_ratio
from tensorind.matching import has_fpm

TOL = 1e-8


@pytest.mark.parametrize("g, value", [
    (complete(4), 0.25), (cycle(4), 0.5), (petersen(), 0.4), (complete(2), 0.5), (complete_bipartite(3, 3), 0.5),
])
def test_spectral_closed_forms(g, value):
    assert abs(spectral_lambda(g).value - value) < TOL


def test_spectral_cycle5():
    # eigenvalues 2 and 2cos(4pi/5)
    lo = 2 * np.cos(4 * np.pi / 5)
    assert abs(spectral_lambda(cycle(5)).value - (-lo / (2 - lo))) < TOL


def test_spectral_domain():
    with pytest.raises(DomainError):
        spectral_lambda(path(3))
    with pytest.raises(DomainError):
        spectral_lambda(Graph(3, (0, 0, 0)))


REGULAR = [cycle(3), cycle(4), cycle(5), cycle(6), complete(4), petersen(), circular(7, 2), complete_bipartite(2, 2)]


@given(st.sampled_from(REGULAR), st.sampled_from(REGULAR))
def test_spectral_of_product_is_max(g, h):
    p = tensor_product(g, h)
    assert abs(spectral_lambda(p).value - max(spectral_lambda(g).value, spectral_lambda(h).value)) < TOL


@given(st.integers(0, 2 ** 32 - 1))
def test_independence_ratio_below_spectral_on_random_regular(seed):
    rng = np.random.Generator(np.random.PCG64(seed))
    n = int(rng.integers(4, 13))
    d = int(rng.integers(1, n))
    if n * d % 2:
        d -= 1
    if d == 0:
        return
    g = random_regular_graph(n, d, rng)
    assert float(independence_ratio(g)) <= spectral_lambda(g).value + 1e-9


def test_chi_f():
    assert chi_f_vertex_transitive(cycle(5)) == Fraction(5, 2)
    assert chi_f_vertex_transitive(petersen()) == Fraction(5, 2)
    assert chi_f_vertex_transitive(kneser(6, 2)) == Fraction(3)
    with pytest.raises(DomainError):
        chi_f_vertex_transitive(path(3))


@pytest.mark.parametrize("g, value, route", [
    (cycle(5), Fraction(2, 5), "vertex-transitive"),
    (petersen(), Fraction(2, 5), "vertex-transitive"),
    (kneser(5, 2), Fraction(2, 5), "vertex-transitive"),
    (cycle(6), HALF, "vertex-transitive"),
    (complete(6), Fraction(1, 6), "vertex-transitive"),
    (star(3), Fraction(1), "hall-violator"),
    (path(3), Fraction(1), "hall-violator"),
    (disjoint_union(cycle(5), complete(3)), Fraction(2, 5), "vt-union-product"),
    (disjoint_union(complete(3), complete(4)), Fraction(1, 3), "vt-union-product"),
])
def test_classify_exact(g, value, route):
    c = classify_A(g)
    assert c.exact and c.value == value
    assert c.provenance[0] == route


def test_classify_hall_certificate():
    c = classify_A(star(3))
    assert c.certificates["hall-violator"].independent_set.to_list() == [1, 2, 3]


def test_classify_path4_interval_closes():
    c = classify_A(path(4))
    assert c.exact and c.value == HALF
    assert "a-star" in c.provenance


def test_classify_interval_when_unresolved():
    # triangle with a pendant path: has a cycle-edge factor, not regular, not transitive
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
    c = classify_A(g)
    assert c.lower <= c.upper <= HALF
    assert c.lower >= a_star(g)


@given(graphs(max_n=6))
def test_classification_brackets_powers(g):
    c = classify_A(g)
    assert c.lower <= c.upper
    assert (c.lower == 1) == (not has_fpm(g))
    # A is the limit of the nondecreasing sequence i(G^k)
    assert independence_ratio(g) <= c.upper
    assert independence_ratio(tensor_power(g, 2)) <= c.upper
    if c.exact and c.lower < 1:
        assert c.lower <= HALF


def test_union_parts():
    u = disjoint_union(cycle(5), disjoint_union(complete(3), complete(2)))
    assert [p.n for p in union_parts(u)] == [5, 3, 2]
    untagged = Graph(u.n, u.adj)
    assert [p.n for p in union_parts(untagged)] == [5, 3, 2]


@pytest.mark.parametrize("g, h", [(cycle(5), complete(3)), (complete(2), complete(2)), (petersen(), complete(3)),
                                  (cycle(5), cycle(7)), (complete(3), complete(4))])
def test_vt_equivalence_statements_agree(g, h):
    r = theorem3_equivalence_check(g, h)
    assert r.consistent
    assert tardif_quarter_check(g, h)


def test_vt_equivalence_values_c5_k3():
    r = theorem3_equivalence_check(cycle(5), complete(3))
    assert r.i_product == Fraction(2, 5)
    assert r.chi_f_product == Fraction(5, 2)
    assert r.A_union == Fraction(2, 5)
    assert all(r.statements.values())


def test_vt_equivalence_needs_transitive():
    with pytest.raises(DomainError):
        theorem3_equivalence_check(path(4), cycle(5))
