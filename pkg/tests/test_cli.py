import json
import subprocess
import sys

from gentlekit import data
from gentlekit.cli import main, run
from gentlekit.presentation import from_text

P = str(data.path("prototype"))

def test_check_prototype(capsys):
    assert main(["check", P]) == 0
    assert capsys.readouterr().out == "gentle: yes; strict: yes\n"

def test_check_bad(tmp_path, capsys):
    bad = tmp_path / "bad.gq"
    bad.write_text("vertex 1 2\narrow a : 1 -> 2\narrow b : 1 -> 2\narrow c : 1 -> 1\n")
    assert main(["check", str(bad)]) == 1
    assert "(Ge1)" in capsys.readouterr().err

def test_check_non_strict(capsys):
    assert main(["check", str(data.path("qstar"))]) == 1
    out = capsys.readouterr()
    assert out.out == "gentle: yes; strict: no\n"
    assert "y" in out.err

def test_syntax_and_io_errors(tmp_path, capsys):
    syn = tmp_path / "s.gq"
    syn.write_text("vertex 1\narrow a : 1 => 1\n")
    assert main(["check", str(syn)]) == 2
    assert "2:13" in capsys.readouterr().err
    assert main(["check", str(tmp_path / "missing.gq")]) == 2
    assert main(["frobnicate", P]) == 2
    assert main(["sing", str(data.path("qstar"))]) == 1

def test_sing_json(capsys):
    assert main(["sing", P, "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["invariant"] == [3, 1]
    assert out["orbits"] == [["a4", "a6", "a10"], ["a5"]]

def test_fibre_json(capsys):
    assert main(["fibre", P, "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["rank"] == 85 and out["generic"] == [9, 2]
    assert len(out["special_relations"]) == 8 + 7

def test_koszul_reparses():
    code, text = run(["koszul", P])
    assert code == 0
    dual = from_text(text)
    assert len(dual.relations) == 11

def test_ar_dot():
    code, text = run(["ar-quiver", P, "--dot"])
    assert code == 0 and text.startswith("digraph")

def test_omega_verify():
    code, text = run(["omega-verify", str(data.path("two_cycle")), "--trunc", "3"])
    assert code == 0
    assert "overall: pass" in text
    code, text = run(["omega-verify", P, "--json", "--flip-signs"])
    assert code == 0 and json.loads(text)["ok"]

def test_compare():
    code, text = run(["compare", str(data.path("two_loop")), str(data.path("two_loop_dual"))])
    assert code == 0 and text.startswith("incompatible")

def test_analyze_deterministic_and_round_trips():
    c1, t1 = run(["analyze", P, "--json"])
    c2, t2 = run(["analyze", P, "--json"])
    assert c1 == c2 == 0 and t1 == t2
    rep = json.loads(t1)
    assert json.dumps(rep, sort_keys=True, indent=2) + "\n" == t1
    assert rep["injective_dimension"] == 3
    assert rep["ar_quiver"]["non_projective"] == 8

def test_analyze_sign_flip_keeps_invariants():
    _, a = run(["analyze", P, "--json"])
    _, b = run(["analyze", P, "--json", "--flip-signs"])
    a, b = json.loads(a), json.loads(b)
    assert a["signs"] != b["signs"]
    for key in ("ar_quiver", "singularity", "injective_dimension", "fibres"):
        assert a[key] == b[key]

def test_out_and_figures(tmp_path):
    out = tmp_path / "r.json"
    figs = tmp_path / "figs"
    code, text = run(["analyze", P, "--json", "--out", str(out), "--figures", str(figs)])
    assert code == 0 and text == ""
    assert json.loads(out.read_text())["singularity"]["invariant"] == [3, 1]
    assert sorted(p.name for p in figs.iterdir()) == ["prototype_ar.png", "prototype_quiver.png"]

def test_bad_trunc():
    assert run(["omega-verify", P, "--trunc", "1"])[0] == 2

def test_console_script():
    r = subprocess.run([sys.executable, "-m", "gentlekit.cli", "check", P], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "gentle: yes; strict: yes"
