import shutil
import subprocess
import sys
from fractions import Fraction

import pytest

from involat.catalog import catalog_get
from involat.cli import main
from involat.io import emit
from involat.spectral import emit_effect, from_eigen


@pytest.fixture
def files(tmp_path):
    out = {}
    for name in ("B8", "B", "K3", "B6", "FH", "Diamond"):
        path = tmp_path / f"{name}.ilat"
        path.write_text(emit(catalog_get(name)))
        out[name] = str(path)
    A = from_eigen(2, [(0, [[1, -1]]), (Fraction(1, 3), [[1, 1]])])
    B = from_eigen(2, [(1, [[1, 0]]), (Fraction(1, 4), [[0, 1]])])
    (tmp_path / "a.eff").write_text(emit_effect(A))
    (tmp_path / "b.eff").write_text(emit_effect(B))
    out["a"], out["b"] = str(tmp_path / "a.eff"), str(tmp_path / "b.eff")
    return out


def run(capsys, *args):
    code = main(list(args))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_check_b8_spo_fails_with_witness(capsys, files):
    code, out, _ = run(capsys, "check", files["B8"], "--class", "spo")
    assert code == 1 and "witness (" in out


@pytest.mark.parametrize("cls, want", [("pkl", 0), ("pom", 0), ("sp1", 1), ("tame", 1),
                                       ("modular", 1), ("paraorthomodular", 0), ("MPKL", 1)])
def test_check_classes_on_b8(capsys, files, cls, want):
    assert run(capsys, "check", files["B8"], "--class", cls)[0] == want


def test_check_full_report(capsys, files):
    code, out, _ = run(capsys, "check", files["K3"])
    assert code == 0 and "KL\tyes" in out and "OL\tno" in out


def test_tame_and_blocks(capsys, files):
    assert run(capsys, "tame", files["B"])[0] == 0
    code, out, _ = run(capsys, "blocks", "@B6")
    assert code == 0 and len(out.splitlines()) == 2


def test_forbidden(capsys, files):
    code, out, _ = run(capsys, "forbidden", files["B6"])
    assert code == 1 and out.startswith("B6 in subalgebra")
    code, out, _ = run(capsys, "forbidden", "@F11")
    assert code == 1 and "QuotB10" in out and "classes:" in out
    assert run(capsys, "forbidden", files["B"])[0] == 0


def test_commute(capsys, files):
    assert run(capsys, "commute", files["FH"], "a", "b")[0] == 0
    code, out, _ = run(capsys, "commute", files["Diamond"], "a", "b")
    assert code == 1 and "c2\tno" in out
    assert run(capsys, "commute", files["FH"], "a", "nope")[0] == 2


def test_construct(capsys, files):
    code, out, _ = run(capsys, "construct", "product", files["K3"], "@B2")
    assert code == 0 and out.startswith("ilat 6")
    code, out, _ = run(capsys, "construct", "moisil", "@B4")
    assert code == 0 and out.startswith("ilat 9")
    assert run(capsys, "construct", "residual", "@K3")[0] == 0
    assert run(capsys, "construct", "residual", "@B6")[0] == 1
    assert run(capsys, "construct", "sum", files["K3"])[1].startswith("ilat 5")
    assert run(capsys, "construct", "localizer", "@K3", "h", "h")[1].startswith("ilat 1")
    assert run(capsys, "construct", "sh", "@B")[0] == 0
    assert run(capsys, "construct", "product", "@K3")[0] == 2


def test_spectral_commands(capsys, files):
    assert run(capsys, "spectral", "leq", files["a"], files["b"])[0] == 1
    assert run(capsys, "spectral", "canonical-leq", files["a"], files["b"])[0] == 0
    code, out, _ = run(capsys, "spectral", "join", files["a"], files["b"])
    assert code == 0 and out.startswith("effect 2")
    assert run(capsys, "spectral", "neg", files["a"])[0] == 0
    assert run(capsys, "spectral", "sharp", files["a"])[0] == 1
    assert run(capsys, "spectral", "meet", files["a"])[0] == 2


def test_spectral_verify_is_seeded(capsys):
    first = run(capsys, "spectral", "verify", "--samples", "40", "--dim", "2", "--seed", "7")
    second = run(capsys, "spectral", "verify", "--samples", "40", "--dim", "2", "--seed", "7")
    assert first == second
    assert "involution\tok" in first[1]


def test_spectral_verify_reports_order_counterexample(capsys):
    code, out, _ = run(capsys, "spectral", "verify", "--samples", "1000", "--dim", "2", "--seed", "7")
    bad = [ln for ln in out.splitlines() if ln.endswith("counterexample")]
    assert code == 1 and bad == ["canonical_implies_spectral\tcounterexample"]


def test_refmat_commands(capsys, files):
    code, out, _ = run(capsys, "refmat", "build", files["K3"])
    assert code == 0 and "h\tF1=1/2 F2=1/2" in out
    assert run(capsys, "refmat", "represent", files["B"])[0] == 0
    code, out, _ = run(capsys, "refmat", "represent", files["B8"])
    assert "converse\tno" in out
    assert run(capsys, "refmat", "entail", "@two-state", "-p", "x", "or(or(x,neg(x)),y)")[0] == 0
    code, out, _ = run(capsys, "refmat", "entail", "@two-state", "-p", "x", "or(or(x,neg(x)),or(u,v))")
    assert code == 1 and "x=I" in out
    assert run(capsys, "refmat", "entail", "@K3", "or(x")[0] == 2


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "6", "--class", "SPO", "--theorems")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("name\tsize\tUOP")
    assert all(ln.split("\t")[12] == "1" for ln in lines[1:])
    assert run(capsys, "enumerate", "9")[0] == 2


def test_catalog_and_dot(capsys, files):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and out.splitlines()[0].startswith("B2\t2")
    code, out, _ = run(capsys, "catalog", "emit", "B8")
    assert out == emit(catalog_get("B8"))
    assert run(capsys, "catalog", "emit", "nope")[0] == 2
    assert run(capsys, "catalog", "emit")[0] == 2
    code, out, _ = run(capsys, "dot", files["K3"])
    assert code == 0 and out.startswith('digraph "K3"')


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.ilat"
    bad.write_text("ilat 2\ncovers\n0 1\nbottom 0\ntop 1\n")
    code, _, err = run(capsys, "check", str(bad))
    assert code == 2 and "missing 'inv'" in err
    assert run(capsys, "check", str(tmp_path / "none.ilat"))[0] == 2
    assert run(capsys, "check", "@nope")[0] == 2
    assert run(capsys, "check", "@K3", "--class", "nope")[0] == 2


def test_repeated_runs_identical(capsys, files):
    assert run(capsys, "check", files["B8"]) == run(capsys, "check", files["B8"])


@pytest.mark.skipif(shutil.which("involat") is None, reason="console script not installed")
def test_console_script(files):
    r = subprocess.run(["involat", "check", files["B8"], "--class", "spo"], capture_output=True, text=True)
    assert r.returncode == 1
    r = subprocess.run([sys.executable, "-m", "involat.cli", "tame", files["B"]], capture_output=True, text=True)
    assert r.returncode == 0
