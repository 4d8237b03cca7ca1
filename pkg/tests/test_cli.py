import json

import pytest

from quiverks import cli
from quiverks.poly import IntegrityError


def run(capsys, *args):
    code = cli.main(list(args))
    out = capsys.readouterr().out
    return code, out


def test_ks_all_methods_agree(capsys):
    code, out = run(capsys, "ks", "--r", "2", "--mu", "2,1", "--eta", "2,2", "--i1", "1", "--method", "all")
    data = json.loads(out)
    assert code == 0
    assert data["rows"] and all(r["agree"] for r in data["rows"])
    row = next(r for r in data["rows"] if r["lams"] == [[], [3, 3]])
    assert row["reduced"] == {"coeffs": [0, 0, 1]}
    assert row["operators"] == {"terms": [{"arrows": {"0,1": 2, "1,0": 2}, "coeff": 1}]}


def test_ks_kostka_foulkes_column(capsys):
    code, out = run(capsys, "ks", "--r", "1", "--mu", "1,1,1", "--eta", "1,1,1", "--i1", "0")
    rows = {tuple(r["lams"][0]): r["reduced"]["coeffs"] for r in json.loads(out)["rows"]}
    assert code == 0
    assert rows == {(3,): [0, 0, 0, 1], (2, 1): [0, 1, 1], (1, 1, 1): [1]}


@pytest.mark.parametrize("method", ["tableau", "recurrence", "operators"])
def test_ks_methods_give_the_same_rows(capsys, method):
    _, base = run(capsys, "ks", "--r", "2", "--mu", "1,1", "--eta", "1,2")
    _, out = run(capsys, "ks", "--r", "2", "--mu", "1,1", "--eta", "1,2", "--method", method)
    strip = lambda s: [{k: v for k, v in r.items()} for r in json.loads(s)["rows"]]
    assert strip(out) == strip(base)


def test_ks_empty_mu(capsys):
    code, out = run(capsys, "ks", "--r", "3", "--mu", "")
    rows = json.loads(out)["rows"]
    assert code == 0 and len(rows) == 1
    assert rows[0]["lams"] == [[], [], []] and rows[0]["reduced"] == {"coeffs": [1]}


def test_output_is_stable_across_jobs(capsys):
    _, a = run(capsys, "--jobs", "1", "ks", "--r", "2", "--mu", "2,1", "--eta", "1,1")
    _, b = run(capsys, "--jobs", "3", "ks", "--r", "2", "--mu", "2,1", "--eta", "1,1")
    assert a == b


def test_charge_example(capsys):
    code, out = run(capsys, "charge", "--mu", "2,1", "--eta", "2,2", "--word", "4,2,1,3,2,1")
    assert code == 0 and json.loads(out)["charge"] == 0


def test_usage_errors(capsys):
    assert run(capsys, "ks", "--r", "2", "--mu", "1,2")[0] == 1
    assert run(capsys, "verify", "no-such-suite")[0] == 1
    assert run(capsys, "charge", "--mu", "1,1", "--word", "1,1")[0] == 1
    assert run(capsys, "ks", "--r", "2", "--mu", "x")[0] == 1
    assert run(capsys, "tableaux", "--r", "2", "--bogus", "1")[0] == 1


def test_tableaux_listing(capsys):
    code, out = run(capsys, "tableaux", "--r", "2", "--mu", "2,1", "--eta", "2,2", "--i1", "1",
                    "--shape-0", "1,1", "--shape-1", "2,2")
    rows = json.loads(out)["rows"]
    assert code == 0 and len(rows) == 1 and rows[0]["charge"] == 0
    code, out = run(capsys, "tableaux", "--r", "2", "--mu", "2,1", "--eta", "2,2", "--i1", "1",
                    "--shape-0", "", "--shape-1", "2,1")
    assert code == 0 and json.loads(out)["rows"] == []


def test_tableaux_catabolizable(capsys):
    code, out = run(capsys, "tableaux", "--r", "2", "--shape-0", "2", "--shape-1", "1",
                    "--mu-0", "1", "--mu-1", "1,1")
    rows = json.loads(out)["rows"]
    assert code == 0 and len(rows) == 2


def test_rotate_orbit(capsys):
    code, out = run(capsys, "rotate", "--mu", "2,1", "--eta", "2,2", "--word", "2,4,2,1,3,1", "--times", "1")
    rows = json.loads(out)["rows"]
    assert code == 0 and rows[1]["word"] == [4, 2, 1, 3, 2, 1]


def test_catabolize_example(capsys):
    code, out = run(capsys, "catabolize", "--r", "2", "--tableau-0", "1,1,2,2,3,3/2,2,4,4/4,4",
                    "--tableau-1", "1,1,1/2,3/3", "--d", "0,5")
    data = json.loads(out)
    assert code == 0 and data["admitted"]
    assert data["result"] == [[[2, 2, 3, 4, 4, 4, 4], [3, 3]], [[2, 2, 2], [3]]]


def test_wreath_commands(capsys):
    code, out = run(capsys, "wreath", "frob-ind", "--n", "2", "--r", "2", "--module", "regular")
    assert code == 0 and json.loads(out)["equal"]
    code, out = run(capsys, "wreath", "rmu", "--mu", "2,1", "--r", "2")
    data = json.loads(out)
    assert code == 0 and not data["equal"] and data["equal_after_node_reversal"]


def test_verify_runs_a_suite(capsys):
    code, out = run(capsys, "verify", "theorem-main", "--max-n", "3", "--max-r", "2")
    assert code == 0 and json.loads(out)["ok"]


def test_verify_failure_exit_code(capsys, monkeypatch):
    from quiverks import verify
    bad = verify.SuiteResult("shoji", 1, ["forced"])
    monkeypatch.setitem(verify.SUITES, "shoji", lambda **kw: bad)
    assert run(capsys, "verify", "shoji")[0] == 2


def test_integrity_exit_code(capsys, monkeypatch):
    from quiverks import poly

    def broken(self, prefactor):
        raise IntegrityError("forced")
    monkeypatch.setattr(poly.ArrowLaurent, "reduce", broken)
    assert run(capsys, "ks", "--r", "2", "--mu", "1", "--eta", "1")[0] == 3
    assert run(capsys, "verify", "positivity", "--max-n", "2", "--max-r", "1")[0] == 3


def test_csv_and_pretty(capsys):
    code, out = run(capsys, "--out", "csv", "ks", "--r", "1", "--mu", "1,1")
    assert code == 0 and out.splitlines()[0] == "lams,reduced,arrows"
    code, out = run(capsys, "ks", "--r", "1", "--mu", "1,1", "--out", "pretty")
    assert code == 0 and "t" in out
