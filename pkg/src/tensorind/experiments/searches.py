"""Falsification searches and closed-form oracle sweeps over small graphs.

Open questions are falsification targets: a violation becomes a
counterexample record.  Proven statements are oracles: a violation raises
InvariantViolation, because it can only mean a bug.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Iterable, Sequence, TypeVar

from ..errors import InvariantViolation, SizeGuardError
from ..graph import Graph, VertexSet, tensor_power, tensor_product
from ..graph_io import emit_graph6
from ..independence import HALF, expansion_max, independence_ratio, max_independent_set, maximum_independent_sets
from ..matching import has_fpm
from .report import ExperimentReport, rat, to_jsonable

T = TypeVar("T")
R = TypeVar("R")

DEFAULT_Q1_GUARD = 64
DEFAULT_AUDIT_CAP = 100_000


def parallel_map(fn: Callable[[T], R], items: Sequence[T], jobs: int = 1) -> list[R]:
    """Map in input order; results do not depend on ``jobs``."""
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def _elapsed_ms(start: float) -> int:
    return int((time.perf_counter() - start) * 1000)


# --------------------------------------------------------------------------
# a*(G^2) = a*(G)?
# --------------------------------------------------------------------------

def q1_record(g: Graph, guard: int = DEFAULT_Q1_GUARD) -> dict:
    rec: dict = {"graph": emit_graph6(g), "n": g.n}
    if g.n > guard:
        rec["status"] = "skipped: too large"
        return rec
    w = expansion_max(g, guard)
    rec["a"] = rat(w.ratio)
    rec["witness"] = to_jsonable(w)
    if w.ratio > HALF:
        # a* = 1 on both sides, nothing to test
        rec["status"] = "skipped: a > 1/2"
        return rec
    if g.n ** 2 > guard:
        rec["status"] = "skipped: too large"
        return rec
    w2 = expansion_max(tensor_power(g, 2), guard)
    if w2.ratio < w.ratio:
        raise InvariantViolation(f"a(G^2) = {w2.ratio} < a(G) = {w.ratio} for {rec['graph']}")
    rec["a_square"] = rat(w2.ratio)
    rec["witness_square"] = to_jsonable(w2)
    rec["counterexample"] = w2.ratio > w.ratio
    rec["status"] = "checked"
    return rec


def search_question_1prime(graphs: Iterable[Graph], jobs: int = 1, guard: int = DEFAULT_Q1_GUARD) -> ExperimentReport:
    start = time.perf_counter()
    graphs = list(graphs)
    records = parallel_map(_q1_worker, [(g, guard) for g in graphs], jobs)
    report = ExperimentReport("search-q1", params={"graphs": len(graphs), "guard": guard})
    report.results = records
    report.counterexamples = [r for r in records if r.get("counterexample")]
    statuses: dict[str, int] = {}
    for r in records:
        statuses[r["status"]] = statuses.get(r["status"], 0) + 1
    report.summary = {"checked": statuses.get("checked", 0), **{k: v for k, v in sorted(statuses.items())},
                      "counterexamples": len(report.counterexamples)}
    report.runtime_ms = _elapsed_ms(start)
    return report


def _q1_worker(args) -> dict:
    return q1_record(*args)


# --------------------------------------------------------------------------
# i(G x H) <= max{a*(G), a*(H)}?
# --------------------------------------------------------------------------

def _oracle_kind(g: Graph, h: Graph, a_g: Fraction, a_h: Fraction) -> str | None:
    """Which proven statement covers the pair, if any."""
    for x in (h, g):
        tag = x.family_tag
        if tag is not None and tag[0] == "cycle":
            return "cycle"
        if tag is not None and tag[0] == "complete":
            return "complete"
    if a_g == HALF or a_h == HALF:
        return "a=1/2"
    return None


def q2_record(g: Graph, h: Graph, guard: int | None = None, bb_guard: int | None = None) -> dict:
    p = tensor_product(g, h, guard)
    alpha, mis = max_independent_set(p, bb_guard)
    i_p = Fraction(alpha, p.n)
    wg, wh = expansion_max(g, bb_guard), expansion_max(h, bb_guard)
    a_g, a_h = wg.ratio, wh.ratio
    as_g = a_g if a_g <= HALF else Fraction(1)
    as_h = a_h if a_h <= HALF else Fraction(1)
    i_g, i_h = independence_ratio(g, bb_guard), independence_ratio(h, bb_guard)
    oracle = _oracle_kind(g, h, a_g, a_h)
    rec = {
        "graph": emit_graph6(g),
        "other": emit_graph6(h),
        "other_family": ":".join(map(str, h.family_tag)) if h.family_tag else None,
        "i_product": rat(i_p),
        "a_g": rat(a_g), "a_h": rat(a_h), "a_star_g": rat(as_g), "a_star_h": rat(as_h),
        "q2_holds": i_p <= max(as_g, as_h),
        "oracle": oracle,
        "product_witness": mis.to_list(),
        "witness_g": to_jsonable(wg),
        "witness_h": to_jsonable(wh),
    }
    if i_p < max(i_g, i_h):
        raise InvariantViolation(f"i(GxH) = {i_p} below max(i(G), i(H)) for {rec['graph']} x {rec['other']}")
    if oracle is not None and i_p > max(a_g, a_h):
        raise InvariantViolation(
            f"proven bound i(GxH) <= max(a(G), a(H)) failed ({oracle}): i = {i_p}, "
            f"a(G) = {a_g}, a(H) = {a_h}, G = {rec['graph']}, H = {rec['other']}, witness = {mis.to_list()}")
    return rec


def _q2_worker(args) -> dict:
    return q2_record(*args)


def sweep_question_2(pairs: Sequence[tuple[Graph, Graph]], jobs: int = 1, guard: int | None = None,
                     bb_guard: int | None = None) -> ExperimentReport:
    start = time.perf_counter()
    records = parallel_map(_q2_worker, [(g, h, guard, bb_guard) for g, h in pairs], jobs)
    report = ExperimentReport("sweep-q2", params={"pairs": len(pairs)})
    report.results = records
    report.counterexamples = [r for r in records if not r["q2_holds"]]
    report.summary = {"pairs": len(records), "oracle_pairs": sum(1 for r in records if r["oracle"]),
                      "violations": len(report.counterexamples)}
    report.runtime_ms = _elapsed_ms(start)
    return report


# --------------------------------------------------------------------------
# Full copies in maximum independent sets of G x H
# --------------------------------------------------------------------------

def strictly_expanding(h: Graph, guard: int = 20) -> bool:
    """Every nonempty proper S of V(H) has |N(S)| > |S| (exhaustive over subsets)."""
    if h.n > guard:
        raise SizeGuardError("strict expansion check", h.n, guard)
    adj = h.adj
    full = (1 << h.n) - 1
    nb = [0] * (1 << h.n)
    for s in range(1, full):
        low = s & -s
        nb[s] = nb[s ^ low] | adj[low.bit_length() - 1]
        if nb[s].bit_count() <= s.bit_count():
            return False
    return True


def full_copy_hypothesis(g: Graph, h: Graph, bb_guard: int | None = None) -> str | None:
    """Name of the satisfied hypothesis ("strict" or "fpm"), or None."""
    a_g = expansion_max(g, bb_guard).ratio
    if a_g >= HALF and h.n >= 1 and strictly_expanding(h):
        return "strict"
    # |N(S)| >= |S| for all S  <=>  a(H) <= 1/2  <=>  H has a fractional perfect matching
    if a_g > HALF and has_fpm(h):
        return "fpm"
    return None


def full_copy_audit(g: Graph, h: Graph, cap: int = DEFAULT_AUDIT_CAP, guard: int | None = None,
                    bb_guard: int | None = None) -> ExperimentReport:
    start = time.perf_counter()
    report = ExperimentReport("full-copy-audit", params={"graph": emit_graph6(g), "other": emit_graph6(h),
                                                         "cap": cap})
    hyp = full_copy_hypothesis(g, h, bb_guard)
    if hyp is None:
        report.summary = {"status": "hypothesis not satisfied, audit skipped"}
        report.runtime_ms = _elapsed_ms(start)
        return report
    p = tensor_product(g, h, guard)
    sets, complete = maximum_independent_sets(p, cap, bb_guard)
    for s in sets:
        copies = full_copies(s, g, h)
        report.results.append({"size": len(s), "copies": len(copies), "independent_set": s.to_list(),
                               "full_copies": copies})
        if not copies:
            raise InvariantViolation(
                f"maximum independent set {s.to_list()} of G x H has no full H-copy "
                f"(G = {emit_graph6(g)}, H = {emit_graph6(h)}, hypothesis {hyp})")
    report.summary = {"status": "passed" if complete else "partial: enumeration cap reached",
                      "hypothesis": hyp, "alpha": len(sets[0]) if sets else 0,
                      "maximum_sets": len(sets), "complete": complete}
    report.runtime_ms = _elapsed_ms(start)
    return report


def full_copies(s: VertexSet, g: Graph, h: Graph) -> list[int]:
    fibre = (1 << h.n) - 1
    return [v for v in range(g.n) if (s.bits >> (v * h.n)) & fibre == fibre]
