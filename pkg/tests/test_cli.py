import json
import subprocess
import sys

import pytest

from tensorind.errors import InvariantViolation
from tensorind.experiments import cli
from tensorind.experiments.report import ExperimentReport


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_petersen(capsys):
    code, out, _ = run(["classify", "--family", "petersen", "--format", "json"], capsys)
    rec = json.loads(out)["results"][0]
    assert code == 0
    assert rec["exact"] and rec["A"] == "2/5"
    assert rec["provenance"].split(",")[0] == "vertex-transitive"


def test_invariants_c5_json(capsys):
    code, out, _ = run(["invariants", "--family", "cycle:5", "--format", "json"], capsys)
    rec = json.loads(out)["results"][0]
    assert code == 0
    assert {k: rec[k] for k in ("alpha", "i", "a", "a_star")} == {"alpha": "2", "i": "2/5", "a": "2/5", "a_star": "2/5"}
    assert rec["chi"] == "3" and rec["has_fpm"] is True


def test_classify_star_hall_violator(capsys):
    code, out, _ = run(["classify", "--family", "star:3", "--format", "json"], capsys)
    rec = json.loads(out)["results"][0]
    assert rec["A"] == "1"
    assert rec["certificates"]["hall-violator"]["independent_set"] == [1, 2, 3]


def test_input_file_and_order(tmp_path, capsys):
    f = tmp_path / "g.g6"
    f.write_text("A_\nDhc\n")
    code, out, _ = run(["invariants", "--family", "complete:3", "--input", str(f), "--format", "json"], capsys)
    ids = [r["id"] for r in json.loads(out)["results"]]
    assert code == 0 and ids == ["complete:3", f"{f}:1", f"{f}:2"]


def test_edge_list_input(tmp_path, capsys):
    f = tmp_path / "p4.txt"
    f.write_text("0 1\n1 2\n2 3\n")
    code, out, _ = run(["classify", "--input", str(f), "--format", "json"], capsys)
    assert code == 0 and json.loads(out)["results"][0]["A"] == "1/2"


def test_csv_and_text(capsys):
    code, out, _ = run(["classify", "--family", "cycle:5", "--format", "csv"], capsys)
    assert out.splitlines()[0] == "section,graph_id,invariant,value"
    assert "results,Dhc,A,2/5" in out.splitlines()
    code, out, _ = run(["classify", "--family", "cycle:5"], capsys)
    assert "A=2/5" in out


def test_out_file(tmp_path, capsys):
    target = tmp_path / "r.json"
    code, out, _ = run(["union-power", "--family", "complete:2", "--family", "complete:3", "--format", "json",
                        "--out", str(target)], capsys)
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["summary"] == {"lhs": "11", "rhs": "11", "equal": True}


@pytest.mark.parametrize("argv", [
    ["power-witness", "--family", "star:3", "--k", "3", "--construction", "majority"],
    ["product", "--family", "cycle:5", "--family", "cycle:5"],
    ["theorem3-check", "--family", "cycle:5", "--family", "complete:3"],
    ["full-copy-audit", "--family", "star:3", "--family", "cycle:4"],
    ["sweep-q2", "--random", "3", "--seed", "2"],
    ["search-q1", "--max-n", "3"],
    ["process-hitting", "--n", "8", "--trials", "5"],
    ["random-regular", "--n", "10", "--d", "3", "--trials", "3"],
])
def test_subcommands_succeed(argv, capsys):
    code, out, err = run(argv + ["--format", "json"], capsys)
    assert code == 0, err
    assert json.loads(out)["runtime_ms"] is None


def test_timing_flag(capsys):
    _, out, _ = run(["classify", "--family", "cycle:5", "--format", "json", "--timing"], capsys)
    assert isinstance(json.loads(out)["runtime_ms"], int)


@pytest.mark.parametrize("argv", [
    ["nosuch"],
    ["classify", "--bogus"],
    ["classify"],                                        # no graph given
    ["classify", "--family", "nosuch:3"],                # unknown family
    ["classify", "--input", "/nonexistent/file.g6"],     # unreadable
    ["product", "--family", "cycle:9", "--family", "cycle:9", "--guard-vertices", "50"],
    ["search-q1", "--max-n", "7"],
    [],
])
def test_usage_and_guard_errors_exit_2(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2
    assert err


def test_bad_graph6_exit_2(tmp_path, capsys):
    f = tmp_path / "bad.g6"
    f.write_text("A_?\n")
    code, _, err = run(["classify", "--input", str(f)], capsys)
    assert code == 2 and "byte" in err


def test_counterexample_exit_1(monkeypatch, capsys):
    def fake(graphs, jobs=1, guard=64):
        r = ExperimentReport("search-q1")
        r.counterexamples = [{"graph": "A_"}]
        return r

    monkeypatch.setattr(cli, "search_question_1prime", fake)
    code, out, err = run(["search-q1", "--max-n", "2"], capsys)
    assert code == 1 and "counterexample" in err and out


def test_invariant_violation_exit_1(monkeypatch, capsys):
    def broken(*args, **kwargs):
        raise InvariantViolation("proven bound failed")

    monkeypatch.setattr(cli, "sweep_question_2", broken)
    code, _, err = run(["sweep-q2", "--family", "cycle:5"], capsys)
    assert code == 1 and "proven bound failed" in err


def test_reports_identical_across_jobs(tmp_path, capsys):
    outs = []
    for jobs in ("1", "2", "1"):
        target = tmp_path / f"r{len(outs)}.json"
        code, _, _ = run(["process-hitting", "--n", "14", "--trials", "20", "--seed", "9", "--jobs", jobs,
                          "--format", "json", "--out", str(target)], capsys)
        assert code == 0
        outs.append(target.read_bytes())
    assert outs[0] == outs[1] == outs[2]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tensorind", "classify", "--family", "complete:4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "A=1/4" in proc.stdout
