import csv
import json

import pytest
from click.testing import CliRunner

from choix.cli import main

RUNNING = {
    "dimension": 2,
    "pairs": [
        {"chosen": [[5, -3], [3, -2]], "rejected": [[1, -1], [-2, 1]]},
        {"chosen": [[-4, 8]], "rejected": [[3, 1]]},
    ],
}
INCONSISTENT = {
    "dimension": 2,
    "pairs": [{"chosen": [[0, 0]], "rejected": [[1, 1]]}],
}
A3 = {"options": [[-3, 4], [0, 1], [4, -3]]}


@pytest.fixture
def runner():
    return CliRunner()


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_check_consistent(runner, tmp_path):
    path = write(tmp_path, "a.json", RUNNING)
    result = runner.invoke(main, ["check", "--assessment", path])
    assert result.exit_code == 0
    assert json.loads(result.output) == {"consistent": True}


def test_check_inconsistent_exit_code(runner, tmp_path):
    path = write(tmp_path, "a.json", INCONSISTENT)
    result = runner.invoke(main, ["check", "--assessment", path])
    assert result.exit_code == 1
    assert json.loads(result.output) == {"consistent": False}


@pytest.mark.parametrize("method", ["naive", "conj", "full"])
def test_choose_running_example(runner, tmp_path, method):
    a = write(tmp_path, "a.json", RUNNING)
    o = write(tmp_path, "o.json", A3)
    result = runner.invoke(
        main, ["choose", "--assessment", a, "--options", o, "--method", method]
    )
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["chosen"] == [[-3.0, 4.0]]
    assert doc["rejected"] == [[0.0, 1.0], [4.0, -3.0]]
    assert doc["consistent"] is True
    # Canonical output: keys sorted.
    assert list(doc) == sorted(doc)


def test_simplify_running_example(runner, tmp_path):
    a = write(tmp_path, "a.json", RUNNING)
    result = runner.invoke(main, ["simplify", "--assessment", a])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["conjunctive"] == [[[4.0, -2.0]], [[7.0, -4.0]], [[-7.0, 7.0]]]
    assert doc["disjunctive"] == [[[7.0, -4.0], [-7.0, 7.0]]]
    assert doc["sizes"] == {
        "h_naive": 3,
        "h_simplified": 3,
        "g_naive": "4",
        "g_full": 1,
    }


def test_malformed_json_exits_2(runner, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    result = runner.invoke(main, ["check", "--assessment", str(bad)])
    assert result.exit_code == 2
    assert "error" in result.output


def test_dimension_mismatch_exits_2(runner, tmp_path):
    a = write(tmp_path, "a.json", RUNNING)
    o = write(tmp_path, "o.json", {"options": [[1, 2, 3]]})
    result = runner.invoke(main, ["choose", "--assessment", a, "--options", o])
    assert result.exit_code == 2


def test_missing_file_exits_2(runner):
    result = runner.invoke(main, ["check", "--assessment", "/no/such/file.json"])
    assert result.exit_code == 2


def test_env_var_overrides_lp_tol(runner, tmp_path, monkeypatch):
    a = write(tmp_path, "a.json", RUNNING)
    monkeypatch.setenv("CHOIX_LP_TOL", "1e-7")
    result = runner.invoke(main, ["check", "--assessment", a])
    assert result.exit_code == 0
    monkeypatch.setenv("CHOIX_LP_TOL", "banana")
    result = runner.invoke(main, ["check", "--assessment", a])
    assert result.exit_code == 2


def test_experiment_subcommand(runner, tmp_path):
    cfg = write(
        tmp_path,
        "cfg.json",
        {"seed": 3, "L": 2, "reps": 1, "model": "lin", "dim": 3},
    )
    out = tmp_path / "rows.csv"
    result = runner.invoke(
        main, ["experiment", "size", "--config", cfg, "--out", str(out)]
    )
    assert result.exit_code == 0
    with open(out, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 2
    assert set(rows[0]) == {"l", "g_naive", "g_conj", "g_full"}
