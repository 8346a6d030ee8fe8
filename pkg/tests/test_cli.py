import json
import subprocess
import sys

import pytest

from padic_dedekind.cli import parse_q, run
from padic_dedekind.errors import PreconditionError


def cli(*args):
    return subprocess.run([sys.executable, "-m", "padic_dedekind", *args], capture_output=True, text=True)


def test_dedekind(capsys):
    assert run(["dedekind", "1", "3"]) == 0
    assert json.loads(capsys.readouterr().out)["value"] == "1/18"


def test_hardy_hypothesis_violation(capsys):
    assert run(["hardy", "S2", "2", "3"]) == 1
    assert "If h is odd and k is even" in capsys.readouterr().err


def test_bad_arguments_exit_1():
    r = cli("dedekind", "x", "3")
    assert r.returncode == 1


def test_precision_exit_2(capsys):
    code = run(["integrate", "q", "--poly", "0,1", "--p", "5", "--q", "digits:1,1,0", "--N", "2", "--precision", "10"])
    assert code == 2


def test_verify_suite(capsys):
    assert run(["verify", "--suite", "exact-laws"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert rows and all(r["passed"] for r in rows)


def test_integrate_outputs(capsys):
    run(["integrate", "fermionic", "--table", "0,-1/6,1/6", "--p", "5"])
    out = json.loads(capsys.readouterr().out)
    assert out["branches"] == {"1": "0/1", "5": "1/6"}
    run(["integrate", "volkenborn", "--poly", "0,0,1"])
    assert json.loads(capsys.readouterr().out)["value"] == "1/6"
    run(["integrate", "sine", "--T", "7"])
    assert json.loads(capsys.readouterr().out)["equal"] is True


def test_twisted_commands(capsys):
    assert run(["twisted-bernoulli", "5", "2", "0", "1"]) == 0
    assert "value" in json.loads(capsys.readouterr().out)
    assert run(["twisted-dedekind", "1", "3", "1", "3", "2", "1"]) == 0
    assert json.loads(capsys.readouterr().out)["value"]["level"] == 1
    assert run(["twisted-dedekind", "1", "4", "1", "3", "2", "1"]) == 1


def test_out_file_and_csv(tmp_path):
    out = tmp_path / "a.csv"
    assert run(["audit", "--grid", "4", "3,5", "--format", "csv", "--out", str(out)]) == 0
    assert out.read_text().startswith("identity,")


def test_parse_q():
    assert parse_q("1+p^2", 5, 10).residue(10) == 26
    assert parse_q("1+5^2", 5, 10).residue(10) == 26
    assert parse_q("digits:1,1", 5, 10).residue(2) == 6
    with pytest.raises(PreconditionError):
        parse_q("1+3^2", 5, 10)


def test_byte_identical_runs():
    a = cli("audit", "--grid", "6", "{3,5,7}")
    b = cli("audit", "--grid", "6", "{3,5,7}")
    assert a.returncode == 0 and a.stdout == b.stdout
