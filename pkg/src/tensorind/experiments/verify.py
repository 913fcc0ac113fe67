"""Re-verification of serialised records from their data alone.

Deliberately independent of the search code: adjacency is rebuilt from the
graph6 string with plain Python sets and products are formed coordinate by
coordinate.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from ..graph_io import parse_graph6


def adjacency_sets(graph6: str) -> list[set[int]]:
    g = parse_graph6(graph6)
    return [set(g.neighbors(v)) for v in range(g.n)]


def product_sets(a: list[set[int]], b: list[set[int]]) -> list[set[int]]:
    nb = len(b)
    out = []
    for u, v in itertools.product(range(len(a)), range(nb)):
        out.append({x * nb + y for x in a[u] for y in b[v]})
    return out


def check_expansion(adj: list[set[int]], members: list[int], boundary: list[int], ratio: str) -> bool:
    s = set(members)
    if not s:
        return False
    if any(adj[v] & s for v in s):
        return False
    nb = set().union(*(adj[v] for v in s))
    if nb != set(boundary) or nb & s:
        return False
    return Fraction(len(s), len(s) + len(nb)) == Fraction(ratio)


def check_independent(adj: list[set[int]], members: list[int]) -> bool:
    s = set(members)
    return not any(adj[v] & s for v in s)


def verify_q1_record(rec: dict) -> bool:
    """A search-q1 record: witnesses for a(G) and a(G^2) re-check, and the verdict matches them."""
    g = adjacency_sets(rec["graph"])
    w = rec["witness"]
    if not check_expansion(g, w["independent_set"], w["boundary"], rec["a"]):
        return False
    if "a_square" not in rec:
        return True
    g2 = product_sets(g, g)
    w2 = rec["witness_square"]
    if not check_expansion(g2, w2["independent_set"], w2["boundary"], rec["a_square"]):
        return False
    return rec["counterexample"] == (Fraction(rec["a_square"]) > Fraction(rec["a"]))


def verify_q2_record(rec: dict) -> bool:
    """A sweep-q2 record: the product independent set re-checks and has the reported size."""
    g = adjacency_sets(rec["graph"])
    h = adjacency_sets(rec["other"])
    p = product_sets(g, h)
    mis = rec["product_witness"]
    if not check_independent(p, mis) or Fraction(len(mis), len(p)) != Fraction(rec["i_product"]):
        return False
    for key, adj in (("witness_g", g), ("witness_h", h)):
        w = rec[key]
        if not check_expansion(adj, w["independent_set"], w["boundary"], w["ratio"]):
            return False
    return True


def verify_full_copy(graph6_g: str, graph6_h: str, members: list[int]) -> bool:
    """An independent set of G x H contains some fibre {(v, w) : w in V(H)}."""
    g = adjacency_sets(graph6_g)
    h = adjacency_sets(graph6_h)
    p = product_sets(g, h)
    if not check_independent(p, members):
        return False
    s = set(members)
    nh = len(h)
    return any(all(v * nh + w in s for w in range(nh)) for v in range(len(g)))
