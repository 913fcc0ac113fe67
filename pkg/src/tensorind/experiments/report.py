"""Experiment reports and their JSON / CSV / text renderings.

Exact rationals are always written as strings ("2/5", "3"), never floats.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from ..bounds import AClassification, SpectralBound
from ..graph import Graph, VertexSet
from ..graph_io import emit_graph6
from ..independence import ExpansionWitness
from ..matching import AOneVerdict, FpmCertificate, HallViolator
from ..powers import PowerWitness

RNG_ALGORITHM = "numpy.random.PCG64 seeded via SeedSequence(seed).spawn(trials)"


def rat(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rat(s: str) -> Fraction:
    return Fraction(s)


def to_jsonable(obj: Any) -> Any:
    """Convert library values (rationals, vertex sets, certificates) into JSON-ready data."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, int)):
        return obj
    if isinstance(obj, float):
        return obj
    if isinstance(obj, Fraction):
        return rat(obj)
    if isinstance(obj, VertexSet):
        return obj.to_list()
    if isinstance(obj, Graph):
        return emit_graph6(obj)
    if isinstance(obj, ExpansionWitness):
        return {"independent_set": obj.independent_set.to_list(), "boundary": obj.boundary.to_list(),
                "ratio": rat(obj.ratio)}
    if isinstance(obj, HallViolator):
        return {"kind": "hall-violator", "independent_set": obj.independent_set.to_list(),
                "boundary": obj.boundary.to_list()}
    if isinstance(obj, FpmCertificate):
        return {"kind": "fpm-certificate", "edges_weight_1": [list(e) for e in obj.edges_weight_1],
                "cycles_weight_half": [list(c) for c in obj.cycles_weight_half],
                "total_weight": rat(obj.total_weight())}
    if isinstance(obj, AOneVerdict):
        return {"verdict": obj.label, "certificate": to_jsonable(obj.certificate)}
    if isinstance(obj, PowerWitness):
        return {"construction": obj.description, "k": obj.k, "set_size": str(obj.set_size),
                "ratio": rat(obj.ratio), "verified": obj.verified, "analytic": obj.analytic}
    if isinstance(obj, SpectralBound):
        return {"lambda_max": obj.lambda_max, "lambda_min": obj.lambda_min, "value": obj.value,
                "tolerance": obj.tolerance}
    if isinstance(obj, AClassification):
        out = {"lower": rat(obj.lower), "upper": rat(obj.upper), "exact": obj.exact,
               "provenance": list(obj.provenance),
               "certificates": {k: to_jsonable(v) for k, v in obj.certificates.items()}}
        if obj.exact:
            out["A"] = rat(obj.lower)
        return out
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


@dataclass
class ExperimentReport:
    command: str
    params: dict[str, Any] = field(default_factory=dict)
    seed: int | None = None
    rng: str | None = None
    results: list[dict[str, Any]] = field(default_factory=list)
    counterexamples: list[dict[str, Any]] = field(default_factory=list)
    summary: dict[str, Any] = field(default_factory=dict)
    runtime_ms: int | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "params": to_jsonable(self.params),
            "seed": self.seed,
            "rng": self.rng,
            "results": to_jsonable(self.results),
            "counterexamples": to_jsonable(self.counterexamples),
            "summary": to_jsonable(self.summary),
            "runtime_ms": self.runtime_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_csv(self) -> str:
        """One row per (record, scalar field)."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["section", "graph_id", "invariant", "value"])
        data = self.to_dict()
        for section in ("results", "counterexamples"):
            for idx, rec in enumerate(data[section]):
                gid = rec.get("graph", rec.get("id", idx))
                for key, value in rec.items():
                    if key == "graph" or isinstance(value, (dict, list)):
                        continue
                    w.writerow([section, gid, key, "" if value is None else value])
        for key, value in data["summary"].items():
            if not isinstance(value, (dict, list)):
                w.writerow(["summary", "", key, "" if value is None else value])
        return buf.getvalue()

    def to_text(self) -> str:
        data = self.to_dict()
        lines = [f"command: {self.command}"]
        if data["params"]:
            lines.append("params: " + ", ".join(f"{k}={v}" for k, v in data["params"].items()))
        if self.seed is not None:
            lines.append(f"seed: {self.seed} ({self.rng})")
        for rec in data["results"]:
            scalars = [f"{k}={v}" for k, v in rec.items() if not isinstance(v, (dict, list))]
            lines.append("  " + " ".join(scalars))
        for key, value in data["summary"].items():
            if not isinstance(value, (dict, list)):
                lines.append(f"{key}: {value}")
        lines.append(f"counterexamples: {len(self.counterexamples)}")
        for rec in data["counterexamples"]:
            lines.append("  ! " + json.dumps(rec, sort_keys=True))
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text()
        raise ValueError(f"unknown format {fmt!r}")
