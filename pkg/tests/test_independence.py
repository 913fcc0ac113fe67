import itertools
from fractions import Fraction

import pytest
from conftest import graphs
from hypothesis import given

import oracles
from tensorind.errors import SizeGuardError
from tensorind.graph import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    path,
    petersen,
    star,
    tensor_power,
    tensor_product,
)
from tensorind.independence import (
    a_star,
    chromatic_number,
    clique_cover_bound,
    clique_number,
    expansion_max,
    expansion_ratio,
    independence_number,
    independence_ratio,
    max_independent_set,
    maximum_independent_sets,
)


def brute_chromatic(g: Graph) -> int:
    edges = g.edges()
    for k in range(1, g.n + 1):
        for col in itertools.product(range(k), repeat=g.n):
            if all(col[u] != col[v] for u, v in edges):
                return k
    return 0


@pytest.mark.parametrize("g, alpha", [
    (cycle(5), 2), (cycle(6), 3), (complete(5), 1), (petersen(), 4), (star(3), 3), (path(4), 2),
    (complete_bipartite(2, 3), 3),
])
def test_alpha_named(g, alpha):
    size, witness = max_independent_set(g)
    assert size == alpha == len(witness)
    assert oracles.is_independent(oracles.adj_of(g), witness)


@given(graphs(max_n=10))
def test_alpha_matches_oracle(g):
    size, witness = max_independent_set(g)
    adj = oracles.adj_of(g)
    assert size == oracles.alpha(adj)
    assert oracles.is_independent(adj, witness)


def test_witness_is_lexicographically_smallest():
    _, w = max_independent_set(cycle(6))
    assert w.to_list() == [0, 2, 4]
    _, w = max_independent_set(path(4))
    assert w.to_list() == [0, 2]


@given(graphs(max_n=7))
def test_enumeration_matches_oracle(g):
    sets, complete_ = maximum_independent_sets(g)
    assert complete_
    assert {frozenset(s) for s in sets} == set(oracles.all_maximum_independent_sets(oracles.adj_of(g)))


def test_enumeration_cap():
    three_k2 = Graph.from_edges(6, [(0, 1), (2, 3), (4, 5)])
    sets, complete_ = maximum_independent_sets(three_k2)
    assert len(sets) == 8 and complete_
    sets, complete_ = maximum_independent_sets(three_k2, cap=3)
    assert len(sets) == 3 and not complete_
    assert maximum_independent_sets(three_k2, cap=8)[1]


@given(graphs(max_n=9))
def test_clique_cover_bounds_alpha(g):
    assert clique_cover_bound(g.adj, (1 << g.n) - 1) >= independence_number(g)


@pytest.mark.parametrize("g, a", [
    (cycle(5), Fraction(2, 5)), (star(3), Fraction(3, 4)), (path(4), Fraction(1, 2)),
    (complete(4), Fraction(1, 4)), (petersen(), Fraction(2, 5)), (path(3), Fraction(2, 3)),
])
def test_expansion_named(g, a):
    w = expansion_max(g)
    assert w.ratio == a
    assert w.verify(g)


@given(graphs(max_n=10))
def test_expansion_matches_oracle(g):
    w = expansion_max(g)
    assert w.verify(g)
    assert w.ratio == oracles.expansion_ratio(oracles.adj_of(g))


@given(graphs(max_n=9))
def test_i_at_most_a(g):
    assert independence_ratio(g) <= expansion_ratio(g)


@given(graphs(max_n=5))
def test_square_does_not_lower_a(g):
    assert expansion_ratio(tensor_power(g, 2)) >= expansion_ratio(g)


@given(graphs(max_n=4), graphs(max_n=4))
def test_product_i_lower_bound(g, h):
    assert independence_ratio(tensor_product(g, h)) >= max(independence_ratio(g), independence_ratio(h))


def test_a_star():
    assert a_star(star(3)) == 1
    assert a_star(cycle(5)) == Fraction(2, 5)
    assert a_star(path(4)) == Fraction(1, 2)


def test_clique_and_chromatic_named():
    assert clique_number(petersen()) == 2
    assert chromatic_number(petersen()) == 3
    assert chromatic_number(cycle(5)) == 3
    assert chromatic_number(cycle(6)) == 2
    assert chromatic_number(complete(5)) == 5
    assert chromatic_number(disjoint_union(complete(3), cycle(5))) == 3


@given(graphs(max_n=6))
def test_chromatic_matches_brute_force(g):
    assert chromatic_number(g) == brute_chromatic(g)


def test_guards():
    with pytest.raises(SizeGuardError):
        max_independent_set(cycle(10), guard=9)
    with pytest.raises(SizeGuardError):
        expansion_max(cycle(70))
