"""Command-line interface: ``tensorind <subcommand> [options]``.

Exit codes: 0 completed with no violation, 1 counterexample or violated
invariant, 2 usage, parse, parameter or guard error.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from ..bounds import classify_A, spectral_lambda, tardif_quarter_check, theorem3_equivalence_check
from ..errors import InvariantViolation, SizeGuardError, TensorIndError
from ..graph import Graph, generate, is_vertex_transitive, tensor_product
from ..graph_io import emit_graph6, read_graph_file
from ..independence import (
    DEFAULT_BB_GUARD,
    DEFAULT_CHROMATIC_GUARD,
    HALF,
    chromatic_number,
    clique_number,
    expansion_max,
    max_independent_set,
)
from ..matching import decide_A_one
from ..powers import union_power_decomposition, witness_first_coordinate, witness_majority
from .corpus import corpus_connected_graphs, random_graphs
from .processes import process_hitting_time, random_regular_experiment
from .report import RNG_ALGORITHM, ExperimentReport, rat, to_jsonable
from .searches import full_copy_audit, search_question_1prime, sweep_question_2

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2

DEFAULT_SWEEP_AGAINST = ["cycle:3", "cycle:4", "cycle:5", "complete:2", "complete:3"]


class _Source(argparse.Action):
    """--input and --family share one ordered list of graph sources."""

    def __call__(self, parser, namespace, values, option_string=None):
        kind = "input" if option_string == "--input" else "family"
        sources = list(getattr(namespace, self.dest) or [])
        sources.append((kind, values))
        setattr(namespace, self.dest, sources)


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--input", dest="sources", action=_Source, metavar="PATH",
                   help="graph6 corpus or edge-list file (auto-detected); repeatable")
    p.add_argument("--family", dest="sources", action=_Source, metavar="SPEC",
                   help="named graph such as cycle:5, kneser:5:2, circular:5:2, petersen; repeatable")
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--guard-vertices", type=int, metavar="N",
                   help="size limit for constructed graphs and exact searches")
    p.add_argument("--timing", action="store_true", help="include runtime_ms (reports are then not reproducible)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="tensorind",
                                     description="Independence ratios of tensor graph products.")
    sub = parser.add_subparsers(dest="command", metavar="SUBCOMMAND", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=help_text, description=help_text)

    add("invariants", "alpha, i, a, a*, clique and chromatic numbers, matching verdict")
    add("classify", "A(G) exactly or as a certified interval")
    add("product", "invariants of the tensor product of the first two graphs")
    p = add("power-witness", "certified independent sets in G^k")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--construction", choices=("first-coordinate", "majority", "both"), default="both")
    p = add("union-power", "alpha((G+H)^n) against its binomial decomposition")
    p.add_argument("--n", type=int, default=2)
    p = add("search-q1", "look for a graph with a(G^2) > a(G) <= 1/2")
    p.add_argument("--max-n", type=int, default=5, help="built-in corpus of connected graphs (at most 6)")
    p.add_argument("--random", type=int, metavar="COUNT", help="seeded random graphs instead of the corpus")
    p = add("sweep-q2", "check i(GxH) <= max(a*(G), a*(H)) over pairs")
    p.add_argument("--against", action="append", metavar="SPEC",
                   help=f"second factor family; repeatable (default {' '.join(DEFAULT_SWEEP_AGAINST)})")
    p.add_argument("--random", type=int, metavar="COUNT", help="seeded random first factors")
    p.add_argument("--max-n", type=int, default=7, help="largest random first factor")
    p = add("process-hitting", "random graph process: tau_delta against tau_fpm")
    p.add_argument("--n", type=int, default=30)
    p = add("random-regular", "random d-regular graphs: spectral bound, i and a")
    p.add_argument("--n", type=int, default=20)
    p.add_argument("--d", type=int, default=3)
    p = add("full-copy-audit", "every maximum independent set of GxH contains a full H copy")
    p.add_argument("--cap", type=int, default=100_000)
    add("theorem3-check", "four equivalent statements for two vertex-transitive graphs")
    return parser


# --------------------------------------------------------------------------
# Inputs
# --------------------------------------------------------------------------

def load_graphs(sources) -> list[tuple[str, Graph]]:
    named: list[tuple[str, Graph]] = []
    for kind, value in sources or []:
        if kind == "family":
            named.append((value, generate(value)))
        else:
            for idx, g in enumerate(read_graph_file(value), start=1):
                named.append((f"{value}:{idx}", g))
    return named


def _need(named, count: int, command: str) -> None:
    if len(named) < count:
        raise argparse.ArgumentTypeError(
            f"{command} needs {count} graph(s) from --input/--family, got {len(named)}")


def _bb(args) -> int:
    return args.guard_vertices if args.guard_vertices is not None else DEFAULT_BB_GUARD


# --------------------------------------------------------------------------
# Subcommands
# --------------------------------------------------------------------------

def cmd_invariants(args) -> ExperimentReport:
    named = load_graphs(args.sources)
    _need(named, 1, "invariants")
    bb = _bb(args)
    chi_guard = max(bb, DEFAULT_CHROMATIC_GUARD)
    report = ExperimentReport("invariants", params={"graphs": [name for name, _ in named]})
    for name, g in named:
        alpha, mis = max_independent_set(g, bb)
        w = expansion_max(g, bb)
        verdict = decide_A_one(g)
        rec = {
            "id": name, "graph": emit_graph6(g), "n": g.n, "m": g.m,
            "alpha": rat(alpha), "i": rat(Fraction(alpha, g.n)),
            "a": rat(w.ratio), "a_star": rat(w.ratio if w.ratio <= HALF else 1),
            "omega": rat(clique_number(g, bb)),
            "chi": rat(chromatic_number(g, chi_guard)) if g.n <= chi_guard else None,
            "has_fpm": not verdict.a_equals_1,
            "A_verdict": verdict.label,
            "vertex_transitive": is_vertex_transitive(g),
            "lambda": spectral_lambda(g).value if g.m and g.is_regular() else None,
            "independent_set": mis,
            "expansion_witness": w,
            "matching_certificate": verdict.certificate,
        }
        report.results.append(rec)
    return report


def cmd_classify(args) -> ExperimentReport:
    named = load_graphs(args.sources)
    _need(named, 1, "classify")
    report = ExperimentReport("classify", params={"graphs": [name for name, _ in named]})
    for name, g in named:
        c = classify_A(g, guard=args.guard_vertices, bb_guard=_bb(args))
        rec = {"id": name, "graph": emit_graph6(g), "exact": c.exact,
               "A": rat(c.lower) if c.exact else None, "lower": rat(c.lower), "upper": rat(c.upper),
               "provenance": ",".join(c.provenance),
               "certificates": {k: to_jsonable(v) for k, v in c.certificates.items()}}
        report.results.append(rec)
    return report


def cmd_product(args) -> ExperimentReport:
    named = load_graphs(args.sources)
    _need(named, 2, "product")
    (ng, g), (nh, h) = named[:2]
    bb = _bb(args)
    p = tensor_product(g, h, args.guard_vertices)
    alpha, mis = max_independent_set(p, bb)
    alpha_g, _ = max_independent_set(g, bb)
    alpha_h, _ = max_independent_set(h, bb)
    i_p = Fraction(alpha, p.n)
    report = ExperimentReport("product", params={"graph": ng, "other": nh})
    report.results.append({
        "id": f"{ng} x {nh}", "graph": emit_graph6(p), "n": p.n, "m": p.m,
        "alpha": rat(alpha), "i": rat(i_p),
        "i_g": rat(Fraction(alpha_g, g.n)), "i_h": rat(Fraction(alpha_h, h.n)),
        "independent_set": mis,
    })
    if i_p < max(Fraction(alpha_g, g.n), Fraction(alpha_h, h.n)):
        raise InvariantViolation(f"i(GxH) = {i_p} is below max(i(G), i(H))")
    return report


def cmd_power_witness(args) -> ExperimentReport:
    named = load_graphs(args.sources)
    _need(named, 1, "power-witness")
    bb = _bb(args)
    report = ExperimentReport("power-witness", params={"k": args.k, "construction": args.construction})
    for name, g in named:
        if args.construction in ("first-coordinate", "both"):
            w = witness_first_coordinate(g, expansion_max(g, bb).independent_set, args.k, args.guard_vertices)
            report.results.append({"id": name, "graph": emit_graph6(g), **to_jsonable(w)})
        if args.construction in ("majority", "both"):
            _, mis = max_independent_set(g, bb)
            w = witness_majority(g, mis, args.k, args.guard_vertices)
            report.results.append({"id": name, "graph": emit_graph6(g), **to_jsonable(w)})
    return report


def cmd_union_power(args) -> ExperimentReport:
    named = load_graphs(args.sources)
    _need(named, 2, "union-power")
    (ng, g), (nh, h) = named[:2]
    r = union_power_decomposition(g, h, args.n, args.guard_vertices, _bb(args))
    report = ExperimentReport("union-power", params={"graph": ng, "other": nh, "n": args.n})
    for k, c, alpha in r.terms:
        report.results.append({"id": f"k={k}", "k": k, "binomial": str(c), "alpha": str(alpha)})
    report.summary = {"lhs": str(r.lhs), "rhs": str(r.rhs), "equal": r.equal}
    if not r.equal:
        raise InvariantViolation(f"alpha((G+H)^{args.n}) = {r.lhs} but the decomposition sums to {r.rhs}")
    return report


def cmd_search_q1(args) -> ExperimentReport:
    named = load_graphs(args.sources)
    seed = None
    if named:
        graphs = [g for _, g in named]
    elif args.random is not None:
        graphs = random_graphs(args.random, args.max_n, args.seed)
        seed = args.seed
    else:
        graphs = list(corpus_connected_graphs(args.max_n))
    guard = args.guard_vertices if args.guard_vertices is not None else 64
    report = search_question_1prime(graphs, jobs=args.jobs, guard=guard)
    if seed is not None:
        report.seed, report.rng = seed, RNG_ALGORITHM
    report.params["source"] = "files/families" if named else ("random" if seed is not None else f"corpus n<={args.max_n}")
    return report


def cmd_sweep_q2(args) -> ExperimentReport:
    named = load_graphs(args.sources)
    seed = None
    if args.random is not None:
        firsts = random_graphs(args.random, args.max_n, args.seed)
        seed = args.seed
    else:
        firsts = [g for _, g in named]
    if not firsts:
        raise argparse.ArgumentTypeError("sweep-q2 needs --input/--family graphs or --random COUNT")
    against = [generate(spec) for spec in (args.against or DEFAULT_SWEEP_AGAINST)]
    pairs = [(g, h) for g in firsts for h in against]
    report = sweep_question_2(pairs, jobs=args.jobs, guard=args.guard_vertices, bb_guard=_bb(args))
    report.params["against"] = args.against or DEFAULT_SWEEP_AGAINST
    if seed is not None:
        report.seed, report.rng = seed, RNG_ALGORITHM
        report.params["random"] = args.random
    return report


def cmd_process_hitting(args) -> ExperimentReport:
    trials = 200 if args.trials is None else args.trials
    return process_hitting_time(args.n, trials, args.seed, jobs=args.jobs)


def cmd_random_regular(args) -> ExperimentReport:
    trials = 20 if args.trials is None else args.trials
    return random_regular_experiment(args.n, args.d, trials, args.seed, jobs=args.jobs)


def cmd_full_copy_audit(args) -> ExperimentReport:
    named = load_graphs(args.sources)
    _need(named, 2, "full-copy-audit")
    (_, g), (_, h) = named[:2]
    return full_copy_audit(g, h, cap=args.cap, guard=args.guard_vertices, bb_guard=_bb(args))


def cmd_theorem3_check(args) -> ExperimentReport:
    named = load_graphs(args.sources)
    _need(named, 2, "theorem3-check")
    (ng, g), (nh, h) = named[:2]
    bb = _bb(args)
    r = theorem3_equivalence_check(g, h, args.guard_vertices, bb)
    report = ExperimentReport("theorem3-check", params={"graph": ng, "other": nh})
    report.results.append({
        "id": f"{ng} x {nh}", "i_product": rat(r.i_product), "a_star_product": rat(r.a_star_product),
        "a_star_g": rat(r.a_star_parts[0]), "a_star_h": rat(r.a_star_parts[1]),
        "chi_f_product": rat(r.chi_f_product), "chi_f_g": rat(r.chi_f_parts[0]), "chi_f_h": rat(r.chi_f_parts[1]),
        "A_union": rat(r.A_union), "A_g": rat(r.A_parts[0]), "A_h": rat(r.A_parts[1]),
        "a_product_route": r.a_product_route, "statements": r.statements,
    })
    quarter = tardif_quarter_check(g, h, args.guard_vertices, bb)
    report.summary = {"consistent": r.consistent, "all_true": all(r.statements.values()),
                      "chi_f_quarter_bound": quarter}
    if not quarter:
        raise InvariantViolation("chi_f(GxH) fell below min(chi_f(G), chi_f(H)) / 4")
    return report


COMMANDS = {
    "invariants": cmd_invariants,
    "classify": cmd_classify,
    "product": cmd_product,
    "power-witness": cmd_power_witness,
    "union-power": cmd_union_power,
    "search-q1": cmd_search_q1,
    "sweep-q2": cmd_sweep_q2,
    "process-hitting": cmd_process_hitting,
    "random-regular": cmd_random_regular,
    "full-copy-audit": cmd_full_copy_audit,
    "theorem3-check": cmd_theorem3_check,
}


def _emit(report: ExperimentReport, args, elapsed_ms: int) -> None:
    report.runtime_ms = elapsed_ms if args.timing else None
    text = report.render(args.format)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    start = time.perf_counter()
    try:
        report = COMMANDS[args.command](args)
    except InvariantViolation as exc:
        print(f"tensorind: invariant violated: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except argparse.ArgumentTypeError as exc:
        parser.print_usage(sys.stderr)
        print(f"tensorind: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (TensorIndError, OSError) as exc:
        kind = "guard exceeded" if isinstance(exc, SizeGuardError) else "error"
        print(f"tensorind: {kind}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        _emit(report, args, int((time.perf_counter() - start) * 1000))
    except OSError as exc:
        print(f"tensorind: cannot write report: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if report.counterexamples:
        print(f"tensorind: {len(report.counterexamples)} counterexample(s) found", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


run_cli = main
