import csv
import json
import subprocess
import sys

import pytest

from paper_profiles import DATA
from rankyank.cli import main
from rankyank.prefmaps import RationalMatrix
from rankyank.report import REPORT_KEYS


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr()


def test_analyze_example1(capsys):
    code, out = run(capsys, "analyze", DATA / "example1.txt")
    assert code == 0
    doc = json.loads(out.out)
    assert tuple(doc) == REPORT_KEYS
    assert doc["sum_matrix"] == [["7/4", "3/4", "3/4", "7/4"]] + [["13/12", "17/12", "17/12", "13/12"]] * 3
    assert doc["outcome_class"] == "AllIndifferent"
    assert doc["none_whipped"] is True
    assert doc["mean_ranks"] == ["5/2"] * 4
    assert doc["majority_relation"][0] == [None, "=", "=", "="]


def test_analyze_remark(capsys):
    code, out = run(capsys, "analyze", "--json", DATA / "remark.txt")
    doc = json.loads(out.out)
    assert code == 0
    assert doc["outcome_class"] == "PureCycle"
    assert doc["condition_report"]["dual_relation"] is False
    assert doc["condition_report"]["witnesses"]["dual_relation"] == {
        "alternative": "x2",
        "positions": [1, 3],
        "values": ["2/1", "1/1"],
    }
    assert doc["election_matrix"] == [[0, 3, 2], [2, 0, 4], [3, 1, 0]]
    assert doc["majority_relation"][0] == [None, ">", "<"]


def test_analyze_separable_exit_code(capsys):
    code, out = run(capsys, "analyze", DATA / "unanimous.txt")
    assert code == 1
    doc = json.loads(out.out)
    assert doc["strata"] == [["a"], ["b"], ["c"]]


def test_analyze_inconsistent_roster(capsys):
    code, out = run(capsys, "analyze", DATA / "mismatch.txt")
    assert code == 2
    assert "line 2" in out.err


def test_analyze_missing_file(capsys, tmp_path):
    code, _ = run(capsys, "analyze", tmp_path / "nope.txt")
    assert code == 2


def test_analyze_pretty(capsys):
    code, out = run(capsys, "analyze", "--pretty", DATA / "example2.txt")
    assert code == 0
    assert "outcome: MixedConnected" in out.out
    assert "verdict: none whipped" in out.out


def test_report_round_trips_rationals(capsys):
    _, out = run(capsys, "analyze", DATA / "example1.txt")
    doc = json.loads(out.out)
    mat = RationalMatrix.from_strings(doc["mean_matrix"])
    assert RationalMatrix.from_strings(mat.to_strings()) == mat
    assert mat.to_strings() == doc["mean_matrix"]


def test_report_deterministic(capsys):
    _, first = run(capsys, "analyze", DATA / "example2.txt")
    _, second = run(capsys, "analyze", DATA / "example2.txt")
    assert first.out == second.out


def test_check_example2(capsys):
    code, out = run(capsys, "check", DATA / "example2.txt")
    doc = json.loads(out.out)
    assert code == 0
    assert doc["dual_relation"] is True
    assert doc["election_symmetric"] is False


def test_check_remark(capsys):
    code, out = run(capsys, "check", DATA / "remark.txt")
    doc = json.loads(out.out)
    assert code == 3
    assert not (doc["election_symmetric"] or doc["mean_uniform"] or doc["dual_relation"])
    assert doc["witnesses"]["election_symmetric"] == {"pair": ["x1", "x2"], "counts": [3, 2]}


def test_check_mirror(capsys):
    code, out = run(capsys, "check", DATA / "mirror.txt")
    assert code == 0
    assert json.loads(out.out)["election_symmetric"] is True


def test_enumerate(capsys):
    code, out = run(capsys, "enumerate", "--m", 3, "--n", 2)
    doc = json.loads(out.out)
    assert code == 0
    assert doc["profiles"] == 169 and doc["ok"]
    assert doc["none_whipped"] == 49


def test_enumerate_pool(capsys):
    code, out = run(capsys, "enumerate", "--m", 3, "--n", 5, "--pool", DATA / "remark.txt")
    doc = json.loads(out.out)
    assert code == 0
    assert doc["profiles"] == 3**5


def test_enumerate_scope_too_large(capsys):
    code, _ = run(capsys, "enumerate", "--m", 6, "--n", 1)
    assert code == 2


def test_simulate(capsys, tmp_path):
    target = tmp_path / "est.csv"
    argv = ["simulate", "--m", 3, "--n", 2, "--trials", 2000, "--seed", 5, "--culture", "weak", "--exhaustive"]
    code, out = run(capsys, *argv, "--csv", target)
    assert code == 0
    doc = json.loads(out.out)
    assert doc["exhaustive"] == "49/169"
    assert doc["trials"] == 2000 and "PCG64" in doc["rng"]
    run(capsys, *argv, "--csv", target)
    rows = list(csv.DictReader(target.open()))
    assert len(rows) == 2 and rows[0] == rows[1]
    assert rows[0]["hits"] == str(doc["hits"])


def test_simulate_bad_args(capsys):
    code, _ = run(capsys, "simulate", "--m", 3, "--n", 2, "--trials", 0, "--seed", 1)
    assert code == 2
    with pytest.raises(SystemExit):
        main(["simulate", "--m", "3", "--n", "2", "--trials", "5", "--seed", "1", "--culture", "bogus"])


def test_console_module_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "rankyank.cli", "check", str(DATA / "remark.txt")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 3
    assert json.loads(proc.stdout)["dual_relation"] is False
