import csv
import io
import json

import pytest

from altenum import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def values(text):
    return [(r["n"], r["value"]) for r in json.loads(text)["rows"]]


def test_table_dis(capsys):
    code, out, _ = run(capsys, "table", "dis", "--q", "2", "--n-max", "4")
    assert code == 0
    assert [v for n, v in values(out) if n >= 2] == ["1", "8", "2389"]


def test_table_connected(capsys):
    code, out, _ = run(capsys, "table", "connected", "--n-max", "4")
    assert code == 0
    assert [v for _, v in values(out)] == ["1", "1", "4", "38"]


def test_table_nds_at_q1(capsys):
    code, out, _ = run(capsys, "table", "nds", "--q", "1", "--n-max", "3")
    assert [v for _, v in values(out)] == ["1", "0", "1", "4"]


def test_values_are_decimal_strings(capsys):
    _, out, _ = run(capsys, "table", "spaces", "--q", "3", "--n-max", "9")
    rows = json.loads(out)["rows"]
    assert all(isinstance(r["value"], str) for r in rows)
    assert int(rows[-1]["value"]) > 2**64


@pytest.mark.parametrize("argv", [
    ["table", "bogus", "--n-max", "3"],
    ["table", "dis", "--n-max", "3"],
    ["table", "read", "--n-max", "3"],
    ["verify", "--scope", "nds", "--n-max", "3"],
    ["verify", "--scope", "nope", "--q", "2", "--n-max", "3"],
    ["series", "--q", "2"],
    ["series", "--q", "2", "--order", "0"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and "error" in err


def test_over_budget_exit_2(capsys):
    code, _, err = run(capsys, "verify", "--scope", "nds", "--q", "3", "--n-max", "5", "--jobs", "1")
    assert code == 2 and "budget" in err


def test_verify_nds(capsys):
    code, out, _ = run(capsys, "verify", "--scope", "nds", "--q", "2", "--n-max", "4", "--jobs", "1")
    rows = json.loads(out)["rows"]
    assert code == 0 and len(rows) == 5 and all(r["match"] for r in rows)


def test_verify_read_q(capsys):
    code, out, _ = run(capsys, "verify", "--scope", "read-q", "--q", "2", "--n-max", "3", "--c", "2", "--jobs", "1")
    assert code == 0 and all(r["match"] for r in json.loads(out)["rows"])


def test_perturbed_formula_exit_1(capsys, monkeypatch):
    sc = cli.SCOPES["nds"]
    bad = cli.Scope(lambda n, q, c: sc.formula(n, q, c) + (n == 3), sc.oracle, sc.n_min)
    monkeypatch.setitem(cli.SCOPES, "nds", bad)
    code, out, _ = run(capsys, "verify", "--scope", "nds", "--q", "2", "--n-max", "3", "--jobs", "1")
    rows = json.loads(out)["rows"]
    assert code == 1
    assert [r["n"] for r in rows if not r["match"]] == [3]


def test_literal_rooted_recursion_is_reported_as_mismatch(capsys):
    code, out, _ = run(capsys, "verify", "--scope", "dis-rooted", "--q", "2", "--n-max", "4", "--jobs", "1")
    rows = {r["n"]: r for r in json.loads(out)["rows"]}
    assert code == 1
    assert rows[3]["match"] and not rows[4]["match"]


def test_json_round_trip(capsys):
    _, out, _ = run(capsys, "verify", "--scope", "nds,connected", "--q", "2", "--n-max", "3", "--jobs", "1")
    assert json.dumps(json.loads(out), indent=2) + "\n" == out


def test_rows_sorted(capsys):
    _, out, _ = run(capsys, "verify", "--scope", "read,connected", "--n-max", "3", "--jobs", "1")
    rows = json.loads(out)["rows"]
    keys = [(r["formula"], r["n"], r.get("c") or 0) for r in rows]
    assert keys == sorted(keys)


def test_csv_columns(capsys):
    code, out, _ = run(capsys, "verify", "--scope", "read-q", "--q", "2", "--n-max", "2", "--format", "csv",
                       "--jobs", "1")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0] == ["formula", "n", "c", "q", "value", "oracle", "match"]
    assert len(rows) > 1


def test_timings_opt_in(capsys):
    _, plain, _ = run(capsys, "table", "graphs", "--n-max", "2")
    _, timed, _ = run(capsys, "table", "graphs", "--n-max", "2", "--timings")
    assert "seconds" not in plain and "seconds" in timed


def test_jobs_do_not_change_report(capsys):
    argv = ["verify", "--scope", "nds,read-q,ortho-q", "--q", "2", "--n-max", "3"]
    _, one, _ = run(capsys, *argv, "--jobs", "1")
    _, four, _ = run(capsys, *argv, "--jobs", "4")
    assert one == four


def test_out_writes_file(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "table", "graphs", "--n-max", "3", "--out", str(path))
    assert code == 0 and out == ""
    assert values(path.read_text()) == [(0, "1"), (1, "1"), (2, "2"), (3, "8")]


@pytest.mark.parametrize("q,order", [(1, 10), (2, 6), (3, 1)])
def test_series(capsys, q, order):
    code, out, _ = run(capsys, "series", "--q", str(q), "--order", str(order))
    rows = json.loads(out)["rows"]
    assert code == 0 and rows and all(r["match"] for r in rows)


def test_module_entry_point():
    import subprocess
    import sys

    r = subprocess.run([sys.executable, "-m", "altenum", "table", "graphs", "--n-max", "1"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["command"] == "table"
