import json
import subprocess
import sys

import pytest

from powcert.cli import main

COUNTER = {"coefficients": ["1", "2", "1"], "roots": [["0", "0", "1"], ["0", "1"], ["1"]]}
BASIC = {"coefficients": ["1", "1"], "roots": [["0", "0", "1"], ["1", "1"]]}


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, obj in {
        "counter": COUNTER,
        "basic": BASIC,
        "degenerate": {"coefficients": ["1", "1"], "roots": [["0", "1"], ["0", "2"]]},
        "square": ["1", "0", "2", "0", "1"],
        "odd": ["1", "0", "0", "1"],
    }.items():
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(obj))
        out[name] = str(path)
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    out["bad"] = str(bad)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate(files, capsys):
    code, out, _ = run(capsys, "validate", files["counter"], "--theorem", "2")
    assert code == 0 and json.loads(out)["violations"] == []
    code, out, _ = run(capsys, "validate", files["counter"], "--theorem", "1")
    assert code == 1
    code, out, _ = run(capsys, "validate", files["degenerate"], "--theorem", "1")
    assert code == 1 and "non-degenerate" in out


def test_term(files, capsys):
    code, out, _ = run(capsys, "term", files["counter"], "-n", "3")
    assert code == 0
    assert json.loads(out)["coefficients"] == ["1", "0", "0", "2", "0", "0", "1"]


def test_bound(files, capsys):
    code, out, _ = run(capsys, "bound", files["basic"])
    assert code == 0 and json.loads(out)["index_bound"] == 80
    code, out, _ = run(capsys, "bound", files["counter"])
    assert json.loads(out)["exponent_threshold"] == 2
    code, _, err = run(capsys, "bound", files["degenerate"])
    assert code == 1 and "hypothesis violation" in err


def test_root(files, capsys):
    code, out, _ = run(capsys, "root", files["square"], "-m", "2")
    assert code == 0 and json.loads(out)["monic_root"] == ["1", "0", "1"]
    code, out, _ = run(capsys, "root", files["square"], "-m", "3")
    assert json.loads(out)["monic_root"] is None


def test_search(files, capsys):
    code, out, _ = run(capsys, "search", files["counter"], "--from", "0", "--to", "5", "--workers", "2")
    assert code == 0 and [w["n"] for w in json.loads(out)] == [2, 3, 4, 5]
    code, _, _ = run(capsys, "search", files["counter"], "--from", "5", "--to", "3")
    assert code == 1


def test_certify_to_file(files, capsys, tmp_path):
    target = tmp_path / "cert.json"
    code, out, _ = run(capsys, "certify", files["basic"], "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["bound"]["index_bound"] == 80
    code, out, _ = run(capsys, "certify", files["counter"], "--format", "text")
    assert "theorem applied: 2" in out


def test_expand(files, capsys):
    code, out, _ = run(capsys, "expand", files["square"], "-m", "2", "-K", "3")
    doc = json.loads(out)
    assert code == 0 and doc["terminates"] and doc["tail_valuation"] is None
    code, _, err = run(capsys, "expand", files["odd"], "-m", "2", "-K", "3")
    assert code == 1 and "does not divide" in err


def test_demo(capsys):
    code, out, _ = run(capsys, "demo", "counterexample")
    assert code == 0 and json.loads(out)["bound"]["index_bound"] == 36
    code, _, err = run(capsys, "demo", "nope")
    assert code == 2 and "available" in err


def test_parse_errors_exit_2(files, capsys):
    code, _, err = run(capsys, "certify", files["bad"])
    assert code == 2 and "line 1" in err
    code, _, _ = run(capsys, "certify", files["bad"] + ".missing")
    assert code == 2


def test_invariant_failure_exit_3(files, capsys, monkeypatch):
    import powcert.cli as cli
    from powcert.errors import InvariantFailure

    def broken(*a, **k):
        raise InvariantFailure("forced")

    monkeypatch.setattr(cli, "certify", broken)
    code, _, err = run(capsys, "certify", files["basic"])
    assert code == 3 and "forced" in err


def test_console_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "powcert", "demo", "binary-basic", "--format", "text"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert "index bound C: 80" in proc.stdout
