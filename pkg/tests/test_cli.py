import json

from qwalk.cli import main

TAG23 = "(-1,0),(0,1),(1,0),(1,-1),(0,-1)"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "--steps", TAG23, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"]["conclusion"] == "NotDFinite"
    assert data["rho"]["decimal"] == "4.729031538"


def test_classify_text(capsys):
    code, out, _ = run(capsys, "classify", "--steps", TAG23, "--max-n", "8", "--precision", "128")
    assert code == 0
    assert "NotDFinite" in out and "738" in out


def test_exit_codes(capsys):
    assert run(capsys, "classify", "--steps", "(-1,1),(1,1),(1,-1)")[0] == 2
    assert run(capsys, "classify", "--steps", "(0,0)")[0] == 4
    assert run(capsys, "classify", "--steps", "(1,0")[0] == 4
    assert run(capsys, "classify", "--steps", "(-1,0),(0,1),(1,0),(0,-1)")[0] == 0
    assert run(capsys, "classify", "--steps", TAG23, "--precision", "100000")[0] == 4
    assert run(capsys, "bogus")[0] == 4


def test_precision_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("QWALK_PRECISION_CAP", "128")
    assert run(capsys, "classify", "--steps", TAG23, "--precision", "256")[0] == 4


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--steps", TAG23, "--max-n", "8")
    assert code == 0
    assert out.split() == ["1", "0", "2", "1", "10", "14", "75", "178", "738"]
    code, out, _ = run(capsys, "enumerate", "--steps", TAG23, "--max-n", "8", "--format", "json")
    assert json.loads(out)["terms"] == [1, 0, 2, 1, 10, 14, 75, 178, 738]
    code, out, _ = run(capsys, "enumerate", "--steps", TAG23, "--max-n", "20", "--float", "--format", "json")
    assert json.loads(out)["mode"] == "float"
    assert run(capsys, "enumerate", "--steps", TAG23, "--max-n", "100000")[0] == 4


def test_eliminants(capsys):
    code, out, _ = run(capsys, "eliminants", "--steps", TAG23, "--target", "rho")
    assert code == 0 and out.strip() == "t^4+2*t^3-17*t^2-61*t-43"
    code, out, _ = run(capsys, "eliminants", "--steps", "(-1,0),(0,1),(1,0),(0,-1)", "--target", "c")
    assert out.strip() == "t"


def test_check_tables(capsys):
    code, out, _ = run(capsys, "check-tables", "--table", "2", "--tags", "30", "(40,42)")
    assert code == 0
    assert "table 2: 3/3 pass" in out
    assert run(capsys, "check-tables", "--tags", "999")[0] == 4
