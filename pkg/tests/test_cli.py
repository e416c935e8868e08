import json
from importlib.resources import files

import pytest

from gadgetsynth.cli import main
from gadgetsynth.io import load_qasm

EXAMPLE = str(files("gadgetsynth") / "data" / "worked_example.json")


def test_compile_writes_outputs(tmp_path, capsys):
    qasm, stats = tmp_path / "c.qasm", tmp_path / "s.json"
    assert main(["compile", "--input", EXAMPLE, "--out", str(qasm), "--stats", str(stats), "--verify"]) == 0
    data = json.loads(stats.read_text())
    assert data["verified"] is True
    assert load_qasm(qasm).cx_count == data["cx_count"] <= 24
    assert "verify: pass" in capsys.readouterr().out


def test_compile_naive(capsys):
    assert main(["compile", "--input", EXAMPLE, "--strategy", "naive"]) == 0
    assert "cx_count=34 cx_depth=34" in capsys.readouterr().out


def test_missing_input(tmp_path, capsys):
    assert main(["compile", "--input", str(tmp_path / "nope.json")]) == 2
    assert "no such file" in capsys.readouterr().err


def test_malformed_input(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"n_qubits": 2, "terms": [{"paulis": "ZZZ", "coefficient": 1}]}')
    assert main(["compile", "--input", str(p)]) == 2
    assert "bad.json:1" in capsys.readouterr().err


def test_verify_too_large(tmp_path):
    p = tmp_path / "big.json"
    p.write_text(json.dumps({"n_qubits": 11, "terms": [{"paulis": "Z" * 11, "coefficient": 0.1}]}))
    assert main(["compile", "--input", str(p), "--verify"]) == 2


def test_bad_strategy():
    with pytest.raises(SystemExit) as exc:
        main(["compile", "--input", EXAMPLE, "--strategy", "magic"])
    assert exc.value.code == 2


def test_bench(tmp_path, capsys):
    main(["make-suite", "--dir", str(tmp_path / "ops"), "--files", "2"])
    out = tmp_path / "r.csv"
    assert main(["bench", "--dir", str(tmp_path / "ops"), "--out", str(out)]) == 0
    assert "2 files" in capsys.readouterr().out
    assert len(out.read_text().splitlines()) == 5


def test_bench_empty_dir(tmp_path):
    assert main(["bench", "--dir", str(tmp_path), "--out", str(tmp_path / "r.csv")]) == 2


def test_check_commands(capsys):
    assert main(["check", "corollary54"]) == 0
    assert main(["check", "corollary55", "--sample", "50"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "violations exist" in out
