import io
import json

import pytest

from tiltgrowth.cli import main

import tables


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), stdout=buf)
    return code, buf.getvalue()


def test_seq_csv():
    code, out = run("seq", "b", "--p", "3", "--n", "10")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,value" and len(lines) == 12
    assert [int(x.split(",")[1]) for x in lines[1:]] == tables.B[3][:11]


def test_seq_json_big_values():
    code, out = run("seq", "l", "--p", "2", "--n", "80", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == 1 and doc["kind"] == "l"
    assert isinstance(doc["values"][80], str) and isinstance(doc["values"][3], int)


def test_seq_inf_and_cantor():
    code, out = run("seq", "b", "--p", "inf", "--n", "4", "--format", "json")
    assert json.loads(out)["values"] == [1, 1, 2, 3, 6]
    code, out = run("seq", "cantor", "--p", "3", "--n", "4")
    assert code == 0 and out.splitlines()[-1] == "4,0"


@pytest.mark.parametrize("argv", [
    ("seq", "b", "--p", "4", "--n", "5"),
    ("seq", "b", "--p", "3", "--n", "-1"),
    ("seq", "b", "--p", "x", "--n", "5"),
    ("genfun", "--p", "2", "--w", "1.5"),
    ("bogus",),
    ("asympt", "--p", "3", "--quadruple"),
    ("--precision", "5", "seq", "b", "--p", "3", "--n", "3"),
])
def test_usage_errors(argv, capsys):
    assert run(*argv)[0] == 2


def test_resource_limit():
    assert run("fourier", "--p", "2", "--N", "20")[0] == 3


def test_verify(capsys):
    for p in ("2", "5"):
        code, out = run("verify", "--p", p, "--n", "100", "--oracle", "20")
        assert code == 0 and "FAIL" not in out and out.count("PASS") >= 7
    assert run("verify", "--p", "3", "--n", "50")[1] == run("verify", "--p", "3", "--n", "50")[1]


def test_asympt(capsys):
    code, out = run("asympt", "--p", "2", "--n", "60", "--gap")
    assert code == 0 and out.splitlines()[0] == "n,ratio,d_n"
    assert "envelope" in capsys.readouterr().err
    code, out = run("asympt", "--p", "2", "--n", "20", "--quadruple")
    assert code == 0 and out.splitlines()[1].startswith("1,0.453125")


def test_genfun():
    code, out = run("genfun", "--p", "2", "--w", "0.1,0.5", "--digits", "10")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "w,F,residual,F0" and lines[1].split(",")[1].startswith("0.110109")


def test_fourier_nu_both():
    code, out = run("fourier", "--p", "2", "--n", "0,1", "--N", "4", "--nu", "both", "--ratio")
    header = out.splitlines()[0].split(",")
    assert code == 0
    assert header == ["n", "re_L", "im_L", "abs_L", "S", "re_h_nu4", "im_h_nu4", "re_h_nu2", "im_h_nu2", "S_over_3N"]
    assert len(out.splitlines()) == 3


def test_sierpinski_and_staircase(capsys):
    code, out = run("sierpinski", "--p", "3", "--rows", "3")
    assert code == 0 and out.splitlines()[1:4] == ["0,0,1", "1,0,1", "1,1,1"]
    assert "tau = 1.63" in capsys.readouterr().err
    code, out = run("staircase", "--n", "9", "--digits", "5")
    assert code == 0 and out.splitlines()[1].startswith("1,1.0000")
    assert run("staircase", "--p", "2")[0] == 2
