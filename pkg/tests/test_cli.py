import io
import json
import subprocess
import sys

import pytest
from conftest import DATA

from cycop.cli import run


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize(
    "name, reason", [("loop.tree", "Loop"), ("multi_edge.tree", "MultiEdge"), ("cycle.tree", "Cycle")]
)
def test_validate_rejects_non_trees(name, reason):
    code, out, _ = cli("validate", DATA / name)
    assert code == 2
    assert reason in out


def test_validate_accepts_the_tree():
    code, out, _ = cli("--json", "validate", DATA / "tree.tree")
    assert code == 0
    rec = json.loads(out)
    assert rec["kind"] == "ordinary"
    assert sorted(rec["free_vars"]) == sorted("xyzuadpr")


def test_validate_types_mu_commands():
    code, out, _ = cli("validate", DATA / "star.mu")
    assert code == 0 and "command" in out


def test_equiv_on_two_normal_forms():
    assert cli("equiv", DATA / "nf1.mu", DATA / "nf4.mu")[0] == 0
    assert cli("equiv", DATA / "star_tree.tree", DATA / "nf5.mu")[0] == 0


def test_inequivalent_objects(tmp_path):
    other = tmp_path / "other.mu"
    other.write_text((DATA / "nf1.mu").read_text().replace("mu p. h{p,q}, z, u", "mu p. h{p,q}, u, z"))
    code, out, _ = cli("equiv", DATA / "nf1.mu", other)
    assert code == 1 and "inequivalent" in out
    fewer = tmp_path / "fewer.mu"
    fewer.write_text("h : {p, q}\nh{p, q}\n")
    assert cli("equiv", DATA / "nf1.mu", fewer)[0] == 1


def test_mu_nf_prints_the_first_normal_form():
    code, out, _ = cli("mu-nf", DATA / "star.mu")
    assert code == 0
    assert out.strip().splitlines()[-1] == "f{mu a. g{a, b, c, d}, mu p. h{p, q}, z, u}"


def test_unit_command_is_flagged(tmp_path):
    f = tmp_path / "unit.mu"
    f.write_text("<mu a. <a | x> | y>\n")
    code, out, _ = cli("--json", "mu-nf", f)
    assert code == 0 and json.loads(out)["unit_command"] is True


def test_nf_trace(tmp_path):
    f = tmp_path / "ext.tree"
    f.write_text("f : {x, y}\n{ f(a,b), (c,d), (e,g) ; (b~c)(d~e) }\n")
    code, out, _ = cli("nf", "--trace", f)
    assert code == 0
    assert out.count("step ") == 2
    assert out.strip().endswith("{ f(a,g) }")


def test_alpha_canon_is_idempotent(tmp_path):
    code, out, _ = cli("alpha-canon", DATA / "star_tree.tree")
    assert code == 0
    again = tmp_path / "canon.tree"
    again.write_text(out)
    assert cli("alpha-canon", again)[1] == out


def test_compose_and_translate(tmp_path):
    f = tmp_path / "c.comb"
    f.write_text("f : {x, y}\nlet F = act[p->x, q->y](f);\n(F q*x f)\n")
    code, out, _ = cli("compose", f)
    assert code == 0 and "{ f(b#1,y), f(p,b#0) ; (b#0~b#1) }" in out
    code, mu_text, _ = cli("translate", f, "--from", "comb", "--to", "mu")
    assert code == 0
    g = tmp_path / "c.mu"
    g.write_text(mu_text)
    assert cli("equiv", f, g)[0] == 0
    code, comb_text, _ = cli("translate", DATA / "star.mu", "--from", "mu", "--to", "comb")
    h = tmp_path / "star.comb"
    h.write_text(comb_text)
    assert cli("equiv", h, DATA / "star_tree.tree")[0] == 0


def test_flatten_multiply(tmp_path):
    f = tmp_path / "two.tree"
    f.write_text("f : {x, y}\n{ { f(x,y) }(a,b), { (x,y) }(c,d) ; (b~c) }\n")
    code, out, _ = cli("--json", "flatten", "--multiply", f)
    assert code == 0
    assert json.loads(out)["multiplied"] == "{ f(a,d) }"


def test_decompose_and_command_of():
    code, out, _ = cli("--json", "decompose", DATA / "star_tree.tree", "--at", 0)
    rec = json.loads(out)
    assert code == 0 and rec["head"] == "{ f(x,y,z,u) }"
    assert [p["along"] for p in rec["plucked"]] == ["x", "y"]
    code, out, _ = cli("command-of", DATA / "star_tree.tree", "--at", 2)
    assert code == 0 and out.strip().splitlines()[-1] == "h{mu y. f{mu a. g{a, b, c, d}, y, z, u}, q}"
    assert cli("command-of", DATA / "star_tree.tree", "--at", 3)[0] == 2


def test_dot_export(tmp_path):
    out_file = tmp_path / "t.dot"
    code, _, _ = cli("dot", DATA / "star_tree.tree", "-o", out_file)
    text = out_file.read_text()
    assert code == 0
    assert text.startswith('graph "tree" {')
    assert text.count(" -- ") == 2 + 6
    assert 'label="a~x"' in text
    # graphs that are not trees can still be drawn
    assert cli("dot", DATA / "loop.tree", "-o", out_file)[0] == 0
    assert "c1 -- c1" in out_file.read_text()


def test_errors_exit_2_with_location(tmp_path):
    f = tmp_path / "broken.mu"
    f.write_text("h : {p, q}\nh{p q}\n")
    code, _, err = cli("mu-nf", f)
    assert code == 2 and "broken.mu:2:5" in err
    assert cli("validate", tmp_path / "missing.tree")[0] == 2
    ill_typed = tmp_path / "bad.comb"
    ill_typed.write_text("f : {x}\n(f x*y f)\n")
    code, _, err = cli("compose", ill_typed)
    assert code == 2 and "bad.comb: " in err and "'y'" in err
    assert cli("laws", "--suite", "nope")[0] == 2


def test_laws_all_at_bound_4_seed_7():
    code, out, _ = cli("laws", "--suite", "all", "--bound", 4, "--seed", 7)
    assert code == 0
    assert out.strip().endswith("result: PASS")


def test_laws_are_reproducible_and_read_the_bound_from_the_environment(monkeypatch):
    monkeypatch.setenv("CYCOP_LAWS_BOUND", "2")
    a = cli("--json", "laws", "--suite", "rewrite", "--seed", 3)[1]
    b = cli("--json", "laws", "--suite", "rewrite", "--seed", 3)[1]
    assert a == b
    assert json.loads(a)["bound"] == 2
    assert json.loads(a)["ok"] is True


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cycop", "validate", str(DATA / "loop.tree")], capture_output=True, text=True
    )
    assert proc.returncode == 2
    assert "Loop" in proc.stdout
