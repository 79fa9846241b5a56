import io
import subprocess
import sys

import pytest

from efslift import efs
from efslift.cli import GENERATE_KINDS, run
from efslift.fincat import compose_functors, identity_nat
from efslift.textformat import parse
from efslift.twocat import compose_two_nat


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def summary(out):
    return out.strip().splitlines()[-1]


def generated(capsys, tmp_path, kind, seed=0, *extra):
    path = tmp_path / f"{kind}-{seed}.txt"
    code, out, _ = call(capsys, "generate", "--kind", kind, "--seed", str(seed), "--out", str(path), *extra)
    assert code == 0
    assert summary(out) == f"RESULT generate pass=1 fail=0 seed={seed}"
    return path


@pytest.mark.parametrize("kind", GENERATE_KINDS)
def test_generate_then_validate(capsys, tmp_path, kind):
    path = generated(capsys, tmp_path, kind, 3)
    code, out, _ = call(capsys, "validate", str(path))
    assert code == 0
    doc = parse(path.read_text())
    assert out.count("# ok ") == len(doc.names())
    assert summary(out).startswith(f"RESULT validate pass={len(doc.names())} fail=0")


def test_stdout_output_parses_back(capsys):
    code, out, _ = call(capsys, "generate", "--kind", "2cat", "--seed", "5")
    assert code == 0
    assert parse(out).names() == ["K"]


def test_validate_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("cat one\nob x\nend\n"))
    code, out, _ = call(capsys, "validate", "-")
    assert code == 0 and "# ok cat one" in out


def test_factor(capsys, tmp_path):
    path = generated(capsys, tmp_path, "fun", 4)
    code, out, _ = call(capsys, "factor", str(path))
    assert code == 0
    doc = parse(out)
    assert compose_functors(doc["M"], doc["B"]) == doc["F"]


def test_diagonal_fill_in_cat(capsys, tmp_path):
    path = generated(capsys, tmp_path, "square", 6)
    code, out, _ = call(capsys, "diagonal-fill", str(path))
    assert code == 0
    doc, given = parse(out), parse(path.read_text())
    assert compose_functors(doc["delta"], given["eps"]) == given["alpha"]


@pytest.mark.parametrize("shape", ["terminal", "walking-arrow", "walking-2cell"])
def test_diagonal_fill_lifted(capsys, tmp_path, shape):
    path = generated(capsys, tmp_path, "fill", 2, "--shape", shape)
    code, out, err = call(capsys, "diagonal-fill", str(path))
    assert code == 0, err
    doc, given = parse(out), parse(path.read_text())
    assert compose_two_nat(doc["delta"], given["eps"]) == given["alpha"]


def test_lift(capsys, tmp_path):
    path = generated(capsys, tmp_path, "2nat", 1)
    code, out, _ = call(capsys, "lift", str(path))
    assert code == 0
    doc, given = parse(out), parse(path.read_text())
    assert compose_two_nat(doc["mu"], doc["eps"]) == given["alpha"]


def test_check_axioms(capsys):
    code, out, _ = call(capsys, "check-axioms", "--shape", "walking-2cell", "--cases", "6", "--seed", "3")
    assert code == 0
    assert "# check-axioms shape=walking-2cell pass 6/6" in out
    assert summary(out) == "RESULT check-axioms pass=6 fail=0 seed=3"


def test_check_axioms_failure_writes_counterexample(capsys, tmp_path, monkeypatch):
    real = efs.diagonal_fill
    monkeypatch.setattr(efs, "diagonal_fill", lambda sq: efs.FillResult(real(sq).delta, identity_nat(sq.alpha_prime)))
    path = tmp_path / "cex.txt"
    code, out, err = call(capsys, "check-axioms", "--shape", "walking-arrow", "--cases", "8", "--out", str(path))
    assert code == 3
    assert "diagonal-fill: InternalError" in err
    assert {"eps", "mu", "alpha", "alpha_prime", "psi"} <= set(parse(path.read_text()).names())


@pytest.mark.parametrize("text, code", [
    ("cat a\nob x\nend\ncat a\nob y\nend\n", 2),
    ("cat a\nob x x\nend\n", 2),
    ("cat Z\nob *\nmor g : * -> *\nend\n", 1),
])
def test_bad_documents(capsys, tmp_path, text, code):
    path = tmp_path / "bad.txt"
    path.write_text(text)
    got, out, _ = call(capsys, "validate", str(path))
    assert got == code
    assert summary(out).startswith("RESULT validate")


def test_usage_errors(capsys, tmp_path):
    assert call(capsys, "validate", "--bogus", "x")[0] == 4
    assert call(capsys, "validate", str(tmp_path / "missing.txt"))[0] == 4
    assert call(capsys, "frobnicate")[0] == 4
    assert call(capsys, "check-axioms", "--cases", "-1")[0] == 4
    path = generated(capsys, tmp_path, "fun", 0)
    assert call(capsys, "factor", "--functor", "nope", str(path))[0] == 4
    assert call(capsys, "lift", str(path))[0] == 4


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "efslift", "check-axioms", "--shape", "terminal", "--cases", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip().endswith("RESULT check-axioms pass=2 fail=0 seed=0")
