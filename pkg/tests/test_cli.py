from __future__ import annotations

import csv
import io
import json
import shlex

import pytest

from distough.cli import EXIT_FAIL, EXIT_INCOMPLETE, EXIT_OK, EXIT_USAGE, main
from distough.extremal import join_of_cliques
from distough.graph import complete_graph, format_graph6, parse_graph6


@pytest.fixture
def graph_file(tmp_path):
    def make(*lines):
        p = tmp_path / "in.g6"
        p.write_text("".join(line + "\n" for line in lines))
        return str(p)

    return make


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_metrics_csv_round_trip(capsys, graph_file):
    code, out, _ = run(capsys, "metrics", "--input", graph_file("Bw", "Bg"))
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["graph6"] for r in rows] == ["Bw", "Bg"]
    assert float(rows[0]["lambda1"]) == pytest.approx(2.0)
    assert rows[1]["tau"] == "1" and rows[0]["tau"] == ""


def test_metrics_jsonl_round_trip(capsys, graph_file):
    code, out, _ = run(capsys, "--format", "jsonl", "metrics", "--input", graph_file("Bw", "Bg"))
    assert code == EXIT_OK
    recs = [json.loads(line) for line in out.splitlines()]
    assert [r["verdict"] for r in recs] == ["pass", "pass"]
    assert recs[1]["witness"] == "1"


def test_metrics_error_line_sets_exit_code(capsys, graph_file):
    code, out, _ = run(capsys, "metrics", "--format", "jsonl", "--input", graph_file("Bw", "~~"))
    assert code == EXIT_FAIL
    assert json.loads(out.splitlines()[1])["verdict"] == "error"


def test_empty_input_is_success(capsys, graph_file):
    code, out, _ = run(capsys, "metrics", "--input", graph_file())
    assert code == EXIT_OK and out == ""


def test_output_is_deterministic(capsys):
    args = ("search", "3", "--tau-den", "2", "--samples", "30", "--seed", "7")
    a = run(capsys, *args)
    b = run(capsys, *args)
    assert a == b and a[0] == EXIT_OK
    summary = json.loads(a[2])
    assert summary["sampled"] == 30 and summary["violations"] == 0


def test_check_theorem_sweep(capsys):
    code, out, _ = run(capsys, "check-theorem", "3", "--tau-den", "2", "--format", "jsonl")
    assert code == EXIT_OK
    recs = [json.loads(line) for line in out.splitlines()]
    assert recs[0]["detail"].startswith("exceptional")
    assert all(r["verdict"] == "pass" for r in recs)


def test_check_theorem_stream_not_applicable(capsys, graph_file):
    code, out, _ = run(capsys, "check-theorem", "1", "--input", graph_file("Bg"))
    assert code == EXIT_OK
    assert next(csv.DictReader(io.StringIO(out)))["verdict"] == "not-applicable"


def test_check_theorem_failure_halts(capsys, graph_file):
    # a large tolerance makes the premise true, so the non-tough graph is reported and the run stops
    bad = format_graph6(join_of_cliques(2, (12, 1, 1, 1, 1)))
    tail = format_graph6(complete_graph(18))
    code, out, err = run(capsys, "check-theorem", "1", "--tolerance", "1000", "--format", "jsonl", "--input", graph_file(bad, tail))
    assert code == EXIT_FAIL
    lines = out.splitlines()
    assert len(lines) == 1 and json.loads(lines[0])["verdict"] == "fail"
    repro = err.split("counterexample: ", 1)[1].strip()
    assert repro == f"echo {shlex.quote(bad)} | distough check-theorem 1 --tolerance 1000.0 --input -"


def test_theorem2_parameter_required_and_checked(capsys, graph_file):
    code, _, err = run(capsys, "check-theorem", "2", "--input", graph_file("Bw"))
    assert code == EXIT_USAGE and "needs an explicit tau" in err
    code, _, err = run(capsys, "search", "2", "--n", "19", "--tau", "2")
    assert code == EXIT_USAGE and "hypothesis" in err


def test_check_lemma_budget_incomplete(capsys):
    code, out, _ = run(capsys, "check-lemma", "le2", "--budget", "5")
    assert code == EXIT_INCOMPLETE
    assert next(csv.DictReader(io.StringIO(out)))["incomplete"] == "True"
    code, _, _ = run(capsys, "check-lemma", "le2", "--budget", "5", "--warn-incomplete")
    assert code == EXIT_OK


def test_check_lemma_le1_from_file(capsys, graph_file):
    code, out, _ = run(capsys, "check-lemma", "le1", "--input", graph_file("Dhc", "Bw"), "--format", "jsonl")
    rec = json.loads(out)
    assert code == EXIT_OK and rec["checked"] == 5 + 3


def test_inequalities_known_violation_exits_nonzero(capsys):
    code, out, _ = run(capsys, "inequalities", "2", "--param-max", "2", "--n-max", "40")
    assert code == EXIT_FAIL
    rows = {r["claim"]: r for r in csv.DictReader(io.StringIO(out))}
    assert json.loads(rows["profile_at_two_over_n_at_least_n_plus_3"]["first_violation"]) == {"t": 2, "n": 27}


def test_inequalities_grid_rejected(capsys):
    code, _, err = run(capsys, "inequalities", "1", "--param-min", "1")
    assert code == EXIT_USAGE and "delta >= 2" in err


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "thm3-star", "--n", "13", "--tau-den", "2", "--format", "jsonl")
    rec = json.loads(out)
    assert code == EXIT_OK and rec["n"] == 13 and rec["min_degree"] == 1
    g = parse_graph6(rec["graph6"])
    assert g.degrees().count(1) == 3


def test_construct_bad_parameters(capsys):
    code, _, err = run(capsys, "construct", "thm1-star", "--n", "5", "--delta", "2")
    assert code == EXIT_USAGE and "2*delta + 2" in err


def test_usage_error_from_argparse():
    with pytest.raises(SystemExit) as exc:
        main(["check-lemma", "le9"])
    assert exc.value.code == 2


def test_check_theorem_bad_line_is_an_error_not_a_halt(capsys, graph_file):
    code, out, err = run(capsys, "check-theorem", "3", "--tau-den", "2", "--format", "jsonl", "--input", graph_file("x", "Bg"))
    verdicts = [json.loads(line)["verdict"] for line in out.splitlines()]
    assert code == EXIT_FAIL and verdicts == ["error", "not-applicable"]
    assert "counterexample" not in err
