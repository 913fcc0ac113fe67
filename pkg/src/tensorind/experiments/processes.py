"""Random graph process and random regular graph experiments.

Every trial draws from its own child of ``SeedSequence(seed)``, so results
are identical whatever the number of worker processes.
"""

from __future__ import annotations

import time
from fractions import Fraction
from typing import Sequence

import numpy as np

from ..bounds import spectral_lambda
from ..errors import InvariantViolation, ParameterError, SamplingError
from ..graph import Graph, complement
from ..graph_io import emit_graph6
from ..independence import expansion_ratio, independence_ratio
from ..matching import IncrementalFpm
from .report import RNG_ALGORITHM, ExperimentReport, rat
from .searches import parallel_map

DEFAULT_A_CHECK_N = 12
DEFAULT_REGULAR_I_N = 40
DEFAULT_REGULAR_A_N = 24
DEFAULT_ATTEMPT_CAP = 200_000


def trial_rngs(seed: int, trials: int) -> list[np.random.SeedSequence]:
    return np.random.SeedSequence(seed).spawn(trials)


def _generator(ss: np.random.SeedSequence) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(ss))


# --------------------------------------------------------------------------
# Graph process: hitting times of min degree >= 1 and of a fractional perfect matching
# --------------------------------------------------------------------------

def hitting_times(n: int, order: Sequence[tuple[int, int]]) -> tuple[int | None, int | None, list[int]]:
    """Insert edges in ``order``; return (tau_delta, tau_fpm, adjacency at tau_fpm).

    The matching is checked after every insertion, independently of the
    degree condition, so tau_fpm >= tau_delta is a real check.
    """
    deg = [0] * n
    isolated = n
    fpm = IncrementalFpm(n)
    tau_delta = tau_fpm = None
    for t, (u, v) in enumerate(order, start=1):
        for x in (u, v):
            if deg[x] == 0:
                isolated -= 1
            deg[x] += 1
        fpm.add_edge(u, v)
        if tau_delta is None and isolated == 0:
            tau_delta = t
        if fpm.has_fpm():
            tau_fpm = t
            return tau_delta, tau_fpm, list(fpm.adj)
    return tau_delta, tau_fpm, list(fpm.adj)


def _hitting_trial(args) -> dict:
    n, ss, a_check_n = args
    rng = _generator(ss)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    order = [pairs[k] for k in rng.permutation(len(pairs))]
    tau_delta, tau_fpm, adj = hitting_times(n, order)
    if tau_fpm is None or tau_delta is None or tau_fpm < tau_delta:
        raise InvariantViolation(f"graph process with tau_fpm={tau_fpm} before tau_delta={tau_delta}")
    g = Graph(n, tuple(adj))
    rec = {"tau_delta": tau_delta, "tau_fpm": tau_fpm, "coincide": tau_delta == tau_fpm,
           "min_degree": min(g.degrees()), "a_at_tau_fpm": None}
    if n <= a_check_n:
        rec["a_at_tau_fpm"] = rat(expansion_ratio(g))
    return rec


def process_hitting_time(n: int, trials: int, seed: int, jobs: int = 1,
                         a_check_n: int = DEFAULT_A_CHECK_N) -> ExperimentReport:
    if n < 2:
        raise ParameterError(f"graph process needs n >= 2, got {n}")
    start = time.perf_counter()
    seeds = trial_rngs(seed, trials)
    records = parallel_map(_hitting_trial, [(n, ss, a_check_n) for ss in seeds], jobs)
    for k, rec in enumerate(records):
        rec["trial"] = k
    coincide = sum(1 for r in records if r["coincide"])
    checked_a = [r for r in records if r["a_at_tau_fpm"] is not None]
    report = ExperimentReport("process-hitting", params={"n": n, "trials": trials}, seed=seed, rng=RNG_ALGORITHM)
    report.results = records
    report.summary = {
        "trials": trials,
        "tau_fpm_ge_tau_delta": trials,
        "coincidences": coincide,
        "coincidence_frequency": rat(Fraction(coincide, trials)) if trials else None,
        "a_checked": len(checked_a),
        "a_half_at_tau_fpm": sum(1 for r in checked_a if Fraction(r["a_at_tau_fpm"]) == Fraction(1, 2)),
    }
    report.runtime_ms = int((time.perf_counter() - start) * 1000)
    return report


# --------------------------------------------------------------------------
# Random regular graphs (pairing model)
# --------------------------------------------------------------------------

def random_regular_graph(n: int, d: int, rng: np.random.Generator, attempt_cap: int = DEFAULT_ATTEMPT_CAP) -> Graph:
    """Uniform d-regular graph by pairing points and rejecting loops and multi-edges.

    Acceptance decays like exp(-d^2/4), so above d = (n-1)/2 the sparser
    complement is sampled instead; complementing is a bijection, so the
    result is still uniform.
    """
    if (n * d) % 2 or not 0 <= d < n:
        raise ParameterError(f"need n*d even and 0 <= d < n, got n={n}, d={d}")
    if 2 * d > n - 1:
        g = complement(_pairing_sample(n, n - 1 - d, rng, attempt_cap))
    else:
        g = _pairing_sample(n, d, rng, attempt_cap)
    if any(deg != d for deg in g.degrees()):
        raise InvariantViolation("pairing model produced a non-regular graph")
    return Graph(g.n, g.adj)


def _pairing_sample(n: int, d: int, rng: np.random.Generator, attempt_cap: int) -> Graph:
    points = np.repeat(np.arange(n), d)
    for _ in range(attempt_cap):
        perm = points[rng.permutation(len(points))]
        adj = [0] * n
        ok = True
        for k in range(0, len(perm), 2):
            u, v = int(perm[k]), int(perm[k + 1])
            if u == v or adj[u] >> v & 1:
                ok = False
                break
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if ok:
            return Graph(n, tuple(adj))
    raise SamplingError(f"no simple {d}-regular graph on {n} vertices after {attempt_cap} pairings")


def _regular_trial(args) -> dict:
    n, d, ss, i_n, a_n, attempt_cap = args
    g = random_regular_graph(n, d, _generator(ss), attempt_cap)
    rec: dict = {"graph": emit_graph6(g), "i": None, "a": None}
    sb = spectral_lambda(g) if d > 0 else None
    rec["lambda"] = sb.value if sb else None
    if n <= i_n:
        i = independence_ratio(g, max(i_n, n))
        rec["i"] = rat(i)
        if sb is not None and float(i) > sb.value + 1e-9:
            raise InvariantViolation(f"i(G) = {i} exceeds spectral bound {sb.value} for {rec['graph']}")
    if n <= a_n:
        rec["a"] = rat(expansion_ratio(g, max(a_n, n)))
    return rec


def _rational_stats(values: list[Fraction]) -> dict:
    if not values:
        return {}
    return {"mean": rat(sum(values, Fraction(0)) / len(values)), "min": rat(min(values)), "max": rat(max(values))}


def random_regular_experiment(n: int, d: int, trials: int, seed: int, jobs: int = 1,
                              i_max_n: int = DEFAULT_REGULAR_I_N, a_max_n: int = DEFAULT_REGULAR_A_N,
                              attempt_cap: int = DEFAULT_ATTEMPT_CAP) -> ExperimentReport:
    if (n * d) % 2 or not 0 <= d < n:
        raise ParameterError(f"need n*d even and 0 <= d < n, got n={n}, d={d}")
    start = time.perf_counter()
    seeds = trial_rngs(seed, trials)
    records = parallel_map(_regular_trial, [(n, d, ss, i_max_n, a_max_n, attempt_cap) for ss in seeds], jobs)
    for k, rec in enumerate(records):
        rec["trial"] = k
    lambdas = [r["lambda"] for r in records if r["lambda"] is not None]
    report = ExperimentReport("random-regular", params={"n": n, "d": d, "trials": trials}, seed=seed,
                              rng=RNG_ALGORITHM)
    report.results = records
    report.summary = {
        "lambda": {"mean": sum(lambdas) / len(lambdas), "min": min(lambdas), "max": max(lambdas)} if lambdas else {},
        "i": _rational_stats([Fraction(r["i"]) for r in records if r["i"] is not None]),
        "a": _rational_stats([Fraction(r["a"]) for r in records if r["a"] is not None]),
    }
    report.runtime_ms = int((time.perf_counter() - start) * 1000)
    return report
