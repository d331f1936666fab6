import json
import subprocess
import sys

import pytest

from globalweyl.algebra import dump_algebra, trunc_poly
from globalweyl.cli import run_cli
from globalweyl.envelope import u_from_json, gen
from globalweyl.sln import H
from globalweyl.symtensor import Tensor, tensor_from_json


def run(capsys, *argv):
    code = run_cli(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dim(capsys):
    code, out, _ = run(capsys, "dim", "--n", "2", "--m", "2", "--algebra", "trunc:2")
    assert code == 0 and json.loads(out) == 10
    code, out, _ = run(capsys, "dim", "--n", "2", "--m", "2", "--algebra", "trunc:2", "--format", "text")
    assert out.strip() == "10"


def test_tuples(capsys):
    code, out, _ = run(capsys, "tuples", "--n", "2", "--m", "1", "--algebra", "trunc:2")
    assert code == 0
    assert sorted(json.loads(out)) == sorted(["1:1;-", "t:1;-", "-;1:1", "-;t:1"])


def test_qelem(capsys):
    code, out, _ = run(capsys, "qelem", "--n", "2", "--i", "1", "--phi", "-", "--chi", "1:1",
                       "--algebra", "trunc:2")
    assert code == 0
    A2 = trunc_poly(2)
    assert u_from_json(json.loads(out)) == -gen(H(1), A2.unit())
    code, out, _ = run(capsys, "qelem", "--n", "2", "--tuple", "1:1;-", "--algebra", "trunc:2")
    assert code == 0 and u_from_json(json.loads(out)) == -gen(H(1), A2.unit())


def test_image(capsys):
    code, out, _ = run(capsys, "image", "--n", "2", "--tuple", "-;t:1", "--algebra", "trunc:2")
    assert code == 0
    assert tensor_from_json(json.loads(out)) == -Tensor.pure([(2, 1)])


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2", "--m", "1", "--algebra", "trunc:2",
                       "--suite", "basis")
    assert code == 0 and json.loads(out)["pass"] is True
    code, out, err = run(capsys, "verify", "--n", "2", "--algebra", "trunc:2", "--suite", "qivi",
                         "--bound", "2")
    assert code == 1 and "qivi:" in err


def test_verify_all_includes_qivi(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2", "--m", "1", "--algebra", "trunc:2",
                       "--suite", "all", "--bound", "3")
    report = json.loads(out)
    status = {s["suite"]: s["pass"] for s in report["suites"]}
    assert status == {"action_zero": True, "qivi": False, "delta": True, "basis": True}
    assert code == 1


def test_verify_replay(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--n", "2", "--algebra", "trunc:1", "--suite", "qivi",
                       "--bound", "2")
    case = next(c for c in json.loads(out)["suites"][0]["cases"] if not c["pass"])
    path = tmp_path / "cx.json"
    path.write_text(json.dumps(case["counterexample"]))
    code, out, _ = run(capsys, "verify", "--n", "2", "--replay", str(path))
    assert code == 1 and json.loads(out)["pass"] is False


def test_determinism(capsys):
    argv = ["verify", "--n", "2", "--m", "2", "--algebra", "trunc:2", "--suite", "basis"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b


def test_file_algebra(capsys, tmp_path):
    path = tmp_path / "a.json"
    path.write_text(json.dumps(dump_algebra(trunc_poly(2))))
    code, out, _ = run(capsys, "dim", "--n", "2", "--m", "2", "--algebra", f"file:{path}")
    assert code == 0 and json.loads(out) == 10


@pytest.mark.parametrize("argv", [
    ["dim", "--n", "1", "--m", "1"],
    ["dim", "--n", "2", "--m", "1", "--algebra", "poly:3"],
    ["qelem", "--n", "2", "--i", "1", "--phi", "q:1", "--chi", "-"],
    ["qelem", "--n", "2", "--i", "2", "--phi", "-", "--chi", "-"],
    ["qelem", "--n", "2"],
    ["image", "--n", "3", "--tuple", "-;1:1"],
    ["verify", "--n", "4", "--m", "4", "--algebra", "trunc:3", "--suite", "basis"],
    ["dim", "--n", "2", "--m", "1", "--algebra", "file:/nonexistent.json"],
    ["bogus"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "globalweyl", "dim", "--n", "3", "--m", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "6"
