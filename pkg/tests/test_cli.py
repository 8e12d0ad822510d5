import json
import subprocess
import sys

import pytest

from smirnov_trees.cli import run


def call(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_phi_from_file(tmp_path, capsys):
    path = tmp_path / "triple.json"
    path.write_text(json.dumps({"T": {"label": 1, "left": None, "right": None},
                                "S": "D", "b": 2}))
    code, out, _ = call(["phi", "--in", str(path)], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["text"] == "1(_,2(_,_))"
    assert data["case"] == "1a"
    assert data["weight"]["edge"] == [{"e": [1, 0, 0, 0], "c": "1"}]
    code, out, _ = call(["phi", "--in", str(path), "--format", "text"], capsys)
    assert out == "1(_,2(_,_))\nra * x1*x2\n"


def test_phi_inverse_and_psi(capsys, monkeypatch):
    code, out, _ = call(["phi-inverse", "--tree", "1(_,2(1,_))"], capsys)
    assert code == 0
    assert json.loads(out)["S"] == {"label": 1, "left": None, "right": None}
    ws = json.dumps({"w": [1, 2], "steps": ["D"]})
    code, out, _ = call(["psi"], capsys, stdin=ws, monkeypatch=monkeypatch)
    assert json.loads(out)["text"] == "1(_,2(_,_))"
    code, out, _ = call(["psi-inverse", "--tree", "1(_,2)"], capsys)
    assert json.loads(out) == {"w": [1, 2], "steps": ["D"]}


def test_weight(capsys):
    code, out, _ = call(["weight", "--tree", "3(3(2(_,3),4(_,1(3,3))),1(4,1(3(_,2),_)))",
                         "--format", "text"], capsys)
    assert out.strip() == "ra^4*rd^3*la^2*ld^3 * x1^3*x2^2*x3^6*x4^2"


def test_enumerate(capsys):
    code, out, _ = call(["enumerate", "words", "--n", "2", "--k", "2", "--format", "text"],
                        capsys)
    assert out == "12\n21\n"
    code, out, _ = call(["enumerate", "trees", "--n", "3", "--k", "2", "--count"], capsys)
    assert json.loads(out) == {"count": 12}
    code, out, _ = call(["enumerate", "bleeding", "--pi", "3,2,1", "--count"], capsys)
    assert json.loads(out) == {"count": 12}
    code, out, _ = call(["enumerate", "standard", "--n", "3", "--count"], capsys)
    assert json.loads(out) == {"count": 30}


def test_e_expansion(capsys):
    code, out, _ = call(["e-expansion", "--pi", "2"], capsys)
    assert code == 0
    assert len(json.loads(out)[0]["coeff"]) == 4
    code, out, _ = call(["e-expansion", "--max-degree", "4", "--method", "both"], capsys)
    assert code == 0
    assert all(row["agree"] for row in json.loads(out))


def test_char_table(capsys):
    code, out, _ = call(["char-table", "--n", "5", "--format", "csv"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 1 + 8
    assert lines[7].endswith(",288,94,36,27,13,8,3")
    code, _, _ = call(["char-table", "--n", "6"], capsys)
    assert code == 2


def test_verify_bijection(capsys):
    code, out, _ = call(["verify", "bijection", "--max-nodes", "3", "--max-label", "3"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["ok"] and len(report["cases"]) == 15


def test_usage_errors(capsys, monkeypatch):
    assert call(["no-such-command"], capsys)[0] == 2
    assert call(["phi"], capsys, stdin="not json", monkeypatch=monkeypatch)[0] == 2
    assert call(["phi-inverse", "--tree", "1(1,_)"], capsys)[0] == 2
    assert call(["phi-inverse", "--tree", "4"], capsys)[0] == 2
    assert call(["enumerate", "bleeding", "--pi", "x"], capsys)[0] == 2
    bad_triple = json.dumps({"T": {"label": 2, "left": None, "right": None}, "S": "D", "b": 2})
    assert call(["phi"], capsys, stdin=bad_triple, monkeypatch=monkeypatch)[0] == 2


def test_large_sweep_needs_confirmation(capsys):
    code, _, err = call(["verify", "bijection", "--max-nodes", "7", "--max-label", "5"], capsys)
    assert code == 2
    assert "--yes" in err


def test_deterministic_output(capsys):
    first = call(["char-table", "--n", "4", "--format", "json"], capsys)[1]
    second = call(["char-table", "--n", "4", "--format", "json"], capsys)[1]
    assert first == second


@pytest.mark.parametrize("args", [["identities", "--n-max", "3"]])
def test_module_entry_point(args):
    proc = subprocess.run([sys.executable, "-m", "smirnov_trees", *args],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["ok"]


def test_failed_check_exits_one(capsys, monkeypatch):
    from smirnov_trees import checks
    monkeypatch.setattr(checks, "verify_sw", lambda max_n=5: {"suite": "sw", "ok": False})
    code, out, _ = call(["verify", "sw"], capsys)
    assert code == 1
    assert json.loads(out)["ok"] is False
