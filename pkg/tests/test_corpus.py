import itertools
from collections import Counter

import pytest

import oracles
from tensorind.errors import ParameterError
from tensorind.experiments.corpus import all_graphs, corpus_connected_graphs, random_graphs
from tensorind.graph import complete, is_isomorphic, path
from tensorind.graph_io import emit_graph6


def brute_classes(n: int) -> tuple[int, int]:
    """(all, connected) isomorphism classes on n vertices by minimum encoding over n! relabellings."""
    pairs = list(itertools.combinations(range(n), 2))
    keys, connected = set(), set()
    for mask in range(1 << len(pairs)):
        adj = oracles.adj_from_edges(n, [p for k, p in enumerate(pairs) if mask >> k & 1])
        key = oracles.canonical_key(n, adj)
        keys.add(key)
        if oracles.is_connected(adj):
            connected.add(key)
    return len(keys), len(connected)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_counts_match_brute_force(n):
    total, conn = brute_classes(n)
    gs = all_graphs(n)
    assert len(gs) == total
    assert sum(1 for g in corpus_connected_graphs(n) if g.n == n) == conn


def test_census_through_six():
    assert [len(all_graphs(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]
    by_n = Counter(g.n for g in corpus_connected_graphs(6))
    assert [by_n[n] for n in range(1, 7)] == [1, 1, 2, 6, 21, 112]


def test_three_vertices_are_p3_and_k3():
    three = [g for g in corpus_connected_graphs(3) if g.n == 3]
    assert len(three) == 2
    assert sorted(g.m for g in three) == [2, 3]
    assert any(is_isomorphic(g, path(3)) for g in three)
    assert any(is_isomorphic(g, complete(3)) for g in three)
    assert len(list(corpus_connected_graphs(1))) == 1


def test_no_duplicates_and_deterministic():
    a = [emit_graph6(g) for g in corpus_connected_graphs(6)]
    b = [emit_graph6(g) for g in corpus_connected_graphs(6)]
    assert a == b
    for n in range(1, 7):
        same_n = [g for g in all_graphs(n)]
        for g, h in itertools.combinations(same_n, 2):
            if g.m == h.m and sorted(g.degrees()) == sorted(h.degrees()):
                assert not is_isomorphic(g, h)


def test_refuses_beyond_builtin():
    with pytest.raises(ParameterError, match="--input"):
        list(corpus_connected_graphs(7))


def test_random_graphs_seeded():
    a = [emit_graph6(g) for g in random_graphs(20, 7, seed=3)]
    b = [emit_graph6(g) for g in random_graphs(20, 7, seed=3)]
    c = [emit_graph6(g) for g in random_graphs(20, 7, seed=4)]
    assert a == b and a != c
    assert all(2 <= g.n <= 7 for g in random_graphs(50, 7, seed=1))
