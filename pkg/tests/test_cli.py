import json
import subprocess
import sys

import pytest

from kcut import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def report(capsys, *argv):
    code, out = run(capsys, *argv)
    data = json.loads(out)
    assert data["exit_code"] == code
    return code, data


def test_lambda_family(capsys):
    code, data = report(capsys, "lambda", "--family", "cycle:6", "--k", "3", "--no-timing")
    assert code == 0
    assert data["results"]["value"] == 3
    assert data["input_graph6"] == "EhEG"
    assert data["timing_secs"] is None
    assert data["budget"]["timeout_secs"] == 300


def test_lambda_both_methods(capsys):
    code, data = report(capsys, "lambda", "--family", "complete:5", "--k", "3", "--method", "both")
    assert code == 0
    methods = data["results"]["methods"]
    assert methods["bb"]["value"] == methods["enumerate"]["value"] == 7
    assert methods["bb"]["certificate"] == methods["enumerate"]["certificate"]


def test_lambda_graph6_and_edges(capsys, tmp_path):
    code, data = report(capsys, "lambda", "--graph6", "D?{", "--k", "3")
    assert code == 0 and data["results"]["value"] == 2
    f = tmp_path / "g.txt"
    f.write_text("4 4\n0 1\n1 2\n2 3\n3 0\n")
    code, data = report(capsys, "lambda", "--edges", str(f), "--k", "4")
    assert code == 0 and data["results"]["value"] == 4


def test_k_equals_n(capsys):
    code, data = report(capsys, "lambda", "--family", "petersen", "--k", "10")
    assert data["results"]["value"] == 15


def test_parse_errors_exit_2(capsys, tmp_path):
    code, data = report(capsys, "lambda", "--graph6", "D?", "--k", "2")
    assert code == 2 and "byte" in data["error"]
    f = tmp_path / "bad.txt"
    f.write_text("3 2\n0 1\n1 1\n")
    code, data = report(capsys, "lambda", "--edges", str(f), "--k", "2")
    assert code == 2 and "line 3" in data["error"]
    code, data = report(capsys, "lambda", "--family", "hypercube:3", "--k", "2")
    assert code == 2
    code, data = report(capsys, "lambda", "--graph6", "Bo", "--k", "5")
    assert code == 2
    code, data = report(capsys, "lambda", "--graph6", "CG", "--k", "2")  # disconnected
    assert code == 2


def test_budget_exit_3(capsys):
    code, data = report(capsys, "lambda", "--family", "petersen", "--k", "4", "--method", "enumerate",
                        "--max-partitions", "10")
    assert code == 3 and "budget" in data["error"]


def test_bounds_command(capsys):
    code, data = report(capsys, "bounds", "--family", "cycle:8", "--k", "3")
    assert code == 0
    assert data["results"]["tight"] == ["greedy_degree", "line_graph"]
    code, data = report(capsys, "bounds", "--family", "cycle:5", "--k", "5")
    assert code == 1 and data["results"]["violations"]
    code, data = report(capsys, "bounds", "--family", "wheel:6", "--k", "3", "--bounds", "trivial,clique")
    assert code == 0 and set(data["results"]["lower_bounds"]) == {"trivial"}


def test_greedy_command(capsys):
    code, data = report(capsys, "greedy", "--family", "cycle:9", "--k", "4")
    assert code == 0
    assert data["results"]["total_removed"] == 4
    assert data["results"]["bound"] == 4


def test_ftable_csv_and_write(capsys, tmp_path):
    code, out = run(capsys, "ftable", "--n", "4", "--k", "3", "--csv")
    assert code == 0
    assert out.splitlines()[0] == "t,f,witness_graph6,lower_tight,upper_tight"
    prefix = tmp_path / "f43"
    code, data = report(capsys, "ftable", "--n", "4", "--k", "3", "--write", str(prefix))
    assert (tmp_path / "f43.csv").read_text().startswith("t,f")
    assert json.loads((tmp_path / "f43.json").read_text())["rows"] == data["results"]["rows"]


def test_ftable_violation_exit_1(capsys):
    code, data = report(capsys, "ftable", "--n", "4", "--k", "2")
    assert code == 1
    assert any(f["kind"] == "violation" for f in data["results"]["findings"])


def test_ftable_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("KCUT_THREADS", "2")
    code, data = report(capsys, "ftable", "--n", "5", "--k", "4")
    assert code == 0


def test_verify_command(capsys):
    code, data = report(capsys, "verify", "--suite", "obs", "--nmax", "5")
    assert code == 0 and data["results"]["violation_count"] == 0
    code, data = report(capsys, "verify", "--suite", "extremal", "--nmax", "4")
    assert code == 1
    assert data["results"]["violations_by_rule"] == {"extremal-characterization": 1}


def test_verify_labeled(capsys):
    code, data = report(capsys, "verify", "--suite", "obs", "--nmax", "4", "--labeled")
    assert code == 0 and data["results"]["graphs"] == 1 + 4 + 38


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["lambda", "--k", "3"])
    assert info.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "kcut", "lambda", "--family", "wheel:7", "--k", "4", "--no-timing"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["value"] == 7


def test_method_mismatch_exit_4(capsys, monkeypatch):
    real = cli.lambda_k_bb

    def off_by_one(g, k, **kw):
        v, cert = real(g, k, **kw)
        return v + 1, cert

    monkeypatch.setattr(cli, "lambda_k_bb", off_by_one)
    code, data = report(capsys, "lambda", "--family", "cycle:5", "--k", "3", "--method", "both")
    assert code == 4 and "disagree" in data["error"]
