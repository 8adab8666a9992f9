import json
import subprocess
import sys
from pathlib import Path

import pytest

from frobcok.cli import run

FANS = Path(__file__).resolve().parents[1] / "fans"


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, out


def payload(capsys, *argv):
    code, out = call(capsys, *argv)
    doc = json.loads(out)
    assert set(doc) == {"subcommand", "params", "result", "diagnostics"}
    return code, doc


def test_trunc(capsys):
    code, doc = payload(capsys, "trunc", "--c", "2", "--p", "3", "--l", "4")
    assert code == 0 and doc["result"] == {"dim": 1} and doc["diagnostics"] == []


def test_trunc_basis_and_filtration(capsys):
    _, doc = payload(capsys, "trunc", "--c", "2", "--p", "3", "--l", "3", "--basis")
    assert doc["result"]["basis"] == [[1, 2], [2, 1]]
    _, doc = payload(capsys, "trunc", "--c", "2", "--p", "2", "--filtration", "--n", "3")
    assert doc["result"]["graded_ranks"] == [2, 1] and doc["result"]["pushforward_rank"] == 6


def test_cartier(capsys):
    code, doc = payload(capsys, "cartier", "--n", "1", "--p", "2")
    assert code == 0
    assert doc["result"]["rows"][1]["rank_B"] == 1
    assert doc["result"]["consistent"] is True


def test_toric_file(capsys):
    code, doc = payload(capsys, "toric", "--fan", str(FANS / "p2.json"), "--p", "2", "--op", "bx-dual-ample")
    assert code == 0 and doc["result"]["verdict"] == "Ample"


@pytest.mark.parametrize("op", ["validate", "pushforward", "cokernel", "bx-dual-ample", "bx-ample"])
def test_toric_ops(capsys, op):
    code, doc = payload(capsys, "toric", "--fan", "f1", "--p", "3", "--op", op)
    assert code == 0 and doc["result"] is not None


def test_toric_divisor(capsys):
    _, doc = payload(capsys, "toric", "--fan", "p1", "--p", "3", "--divisor", "-1,0", "--op", "pushforward")
    assert doc["result"]["rank"] == 3
    _, doc = payload(capsys, "toric", "--fan", "p2", "--divisor", "0,0,1", "--op", "positivity")
    assert doc["result"]["positivity"] == "Ample"


def test_toric_invalid_fan(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"dim": 2, "rays": [[1, 0], [1, 2]], "cones": [[0, 1]]}))
    code, doc = payload(capsys, "toric", "--fan", str(bad), "--op", "validate")
    assert code == 0 and doc["result"]["valid"] is False
    code, doc = payload(capsys, "toric", "--fan", str(bad), "--p", "2", "--op", "cokernel")
    assert code == 1 and "non-smooth" in doc["diagnostics"][0]["message"]
    code, doc = payload(capsys, "toric", "--fan", str(tmp_path / "missing.json"), "--op", "validate")
    assert code == 1


def test_pn(capsys):
    _, doc = payload(capsys, "pn", "--n", "1", "--p", "2", "--d", "1")
    assert doc["result"]["summands"] == {"0": 2} and doc["result"]["positivity"] == "NefNotAmple"
    _, doc = payload(capsys, "pn", "--n", "2", "--p", "5", "--scan", "-5..30")
    assert doc["result"]["min_nef_d"] == 8 and doc["result"]["min_ample_d"] == 13
    code, doc = payload(capsys, "pn", "--n", "2", "--p", "5", "--scan", "10..30")
    assert code == 1


def test_bott(capsys):
    _, doc = payload(capsys, "bott", "--n", "2", "--k", "1", "--j", "2", "--i", "0")
    assert doc["result"] == {"h": 3}
    _, doc = payload(capsys, "bott", "--regularity", "--n", "5", "--k", "3")
    assert doc["result"]["regular"] is True
    _, doc = payload(capsys, "bott", "--wedge-range", "hypersurface", "--n", "4", "--d", "2")
    assert doc["result"]["ample"] == [2, 3]
    _, doc = payload(capsys, "bott", "--wedge-range", "index", "--dim-x", "3", "--a", "4")
    assert doc["result"]["ample"] == [1, 3]


def test_obstruct(capsys):
    _, doc = payload(capsys, "obstruct", "--curve-deg", "2", "--subspace", "2,4", "--ci", "3:3:2", "--fano3", "Other:5")
    r = doc["result"]
    assert r["curve"]["verdict"] == "NotAmple"
    assert r["subspace"]["verdict"] == "Unknown"
    assert r["ci"]["verdict"] == "NotAmple" and r["ci"]["lines"]["exists"] is True
    assert r["fano3"]["verdict"] == "NotAmple"


@pytest.mark.parametrize(
    "argv",
    [
        ["trunc", "--c", "2", "--p", "4", "--l", "1"],
        ["trunc", "--c", "x", "--p", "3"],
        ["trunc", "--c", "2", "--p", "3"],
        ["cartier", "--n", "0", "--p", "2"],
        ["obstruct"],
        ["obstruct", "--ci", "3:3"],
        ["obstruct", "--fano3", "Cubic:3"],
        ["bott", "--n", "2"],
    ],
)
def test_invalid_parameters_exit_1(capsys, argv):
    code, doc = payload(capsys, *argv)
    assert code == 1
    assert doc["result"] is None and doc["diagnostics"][0]["level"] == "error"


def test_unknown_subcommand_exit_2(capsys):
    assert run(["frobnicate"]) == 2
    assert run([]) == 2
    assert "usage" in capsys.readouterr().err


def test_human(capsys):
    code, out = call(capsys, "trunc", "--c", "2", "--p", "3", "--l", "4", "--human")
    assert code == 0 and "dim" in out
    with pytest.raises(json.JSONDecodeError):
        json.loads(out)


def test_byte_stable(capsys):
    argv = ["toric", "--fan", "blowup_p2", "--p", "3", "--op", "cokernel"]
    _, first = call(capsys, *argv)
    _, second = call(capsys, *argv)
    assert first == second


def test_selftest(capsys):
    code, doc = payload(capsys, "selftest")
    assert code == 0 and doc["result"]["passed"] is True
    assert len(doc["result"]["checks"]) == 8


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "frobcok", "cartier", "--n", "3", "--p", "3"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["result"]["rows"][1]["rank_B"] == 26
