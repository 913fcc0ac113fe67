from fractions import Fraction

import pytest
from conftest import graphs
from hypothesis import given
from hypothesis import strategies as st

import oracles
from tensorind.errors import DomainError
from tensorind.graph import Graph, VertexSet, complete, complete_bipartite, cycle, neighborhood, path, petersen, star
from tensorind.independence import HALF, expansion_ratio
from tensorind.matching import (
    FpmCertificate,
    HallViolator,
    IncrementalFpm,
    bipartite_double,
    decide_A_one,
    fpm_certificate,
    has_fpm,
    max_bipartite_matching,
    tutte_independent_violator,
)


def test_double_cover_of_odd_cycle_is_even_cycle():
    d = bipartite_double(cycle(5))
    assert d.n == 10 and d.is_regular() and d.degree(0) == 2
    assert all((u + v) % 2 == 1 for u, v in d.edges())


@pytest.mark.parametrize("g, expected", [
    (cycle(5), True), (cycle(4), True), (complete(3), True), (petersen(), True), (path(4), True),
    (path(3), False), (star(3), False), (complete_bipartite(2, 3), False), (Graph(1, (0,)), False),
])
def test_has_fpm_named(g, expected):
    assert has_fpm(g) is expected


def test_star_violator_is_the_leaves():
    cert = fpm_certificate(star(3))
    assert isinstance(cert, HallViolator)
    assert cert.independent_set.to_list() == [1, 2, 3]
    assert cert.boundary.to_list() == [0]
    assert cert.verify(star(3))


def test_odd_cycle_certificate_is_half_cycle():
    cert = fpm_certificate(cycle(5))
    assert isinstance(cert, FpmCertificate)
    assert cert.verify(cycle(5))
    assert cert.total_weight() == Fraction(5, 2)
    assert set(cert.weights().values()) <= {Fraction(1), HALF}


@given(graphs(max_n=9))
def test_fpm_agrees_with_cycle_edge_factor_oracle(g):
    assert has_fpm(g) == oracles.has_cycle_edge_factor(oracles.adj_of(g))


@given(graphs(max_n=10))
def test_certificates_are_sound(g):
    verdict = decide_A_one(g)
    assert verdict.verify(g)
    # weights: every vertex carries total weight exactly one
    if not verdict.a_equals_1:
        load = [Fraction(0)] * g.n
        for (u, v), w in verdict.certificate.weights().items():
            load[u] += w
            load[v] += w
        assert all(x == 1 for x in load)


@given(graphs(max_n=9))
def test_fpm_iff_a_at_most_half(g):
    assert has_fpm(g) == (expansion_ratio(g) <= HALF)


def test_verifiers_reject_bad_certificates():
    g = cycle(5)
    assert not HallViolator(VertexSet.of(5, [0, 2]), VertexSet.of(5, [1, 3, 4])).verify(g)
    bad = FpmCertificate([(0, 1)], [[2, 3, 4]], VertexSet.full(5))
    assert not bad.verify(g)  # 2-3-4 is not a cycle of C5


def test_tutte_reduction():
    # star with four leaves plus the edge 1-2: the leaves violate Hall but are not independent
    g = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)])
    v = tutte_independent_violator(g, VertexSet.of(5, [1, 2, 3, 4]))
    assert v.independent_set.to_list() == [3, 4]
    assert v.verify(g)
    with pytest.raises(DomainError):
        tutte_independent_violator(cycle(5), VertexSet.full(5))


@given(graphs(max_n=9), st.data())
def test_tutte_reduction_property(g, data):
    s = VertexSet.of(g.n, data.draw(st.sets(st.integers(0, g.n - 1))))
    if len(neighborhood(g, s)) < len(s):
        assert tutte_independent_violator(g, s).verify(g)


def test_bipartite_matching():
    g = complete_bipartite(2, 3)
    m = max_bipartite_matching(g, g.vertex_set([0, 1]))
    assert len(m) == 2 and all(g.has_edge(u, v) for u, v in m)
    with pytest.raises(DomainError):
        max_bipartite_matching(cycle(5), cycle(5).vertex_set([0, 2]))


@given(graphs(min_n=2, max_n=9), st.randoms(use_true_random=False))
def test_incremental_matches_batch(g, rnd):
    edges = g.edges()
    rnd.shuffle(edges)
    inc = IncrementalFpm(g.n)
    seen = []
    for u, v in edges:
        inc.add_edge(u, v)
        seen.append((u, v))
        assert inc.has_fpm() == has_fpm(Graph.from_edges(g.n, seen))
