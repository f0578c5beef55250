import io
import json
import pathlib
import subprocess
import sys

import jsonschema
import pytest

from lpaspec.cli import main, run_command
from lpaspec.families import figure4, line, single_loop
from lpaspec.graph import parse_graph, serialize_graph

SCHEMA = json.loads((pathlib.Path(__file__).parents[1] / "docs" / "report.schema.json").read_text())


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def graph_file(tmp_path):
    def make(g, name="g.txt"):
        p = tmp_path / name
        p.write_text(serialize_graph(g))
        return str(p)
    return make


def test_generate_then_analyze_loop(tmp_path):
    target = tmp_path / "loop.txt"
    assert run("generate", "loop", "-o", str(target))[0] == 0
    code, out, _ = run("analyze", str(target), "--field", "q")
    assert code == 0
    rep = json.loads(out)
    (stratum,) = rep["strata"]
    assert stratum["shape"] == "LaurentLine"
    assert stratum["graded_prime"]["flags"] == {"primitive": False, "locally_closed": False, "rational": False}


def test_analyze_figure4(graph_file):
    code, out, _ = run("analyze", graph_file(figure4()))
    rep = json.loads(out)
    assert code == 0
    assert rep["summary"]["hereditary_saturated_sets"] == 6 and rep["summary"]["maximal_tails"] == 4
    assert rep["summary"]["points"] == 2 and rep["summary"]["laurent_lines"] == 2
    assert rep["summary"]["dixmier_moeglin_agree"] is True


@pytest.mark.parametrize("g, extra", [
    (figure4(), ()),
    (figure4(), ("--field", "fp:2", "--instantiate-degree", "2")),
    (single_loop(), ("--generator", "x - 3")),
    (line(3), ("--field", "fp:7")),
])
def test_report_validates_against_schema(graph_file, g, extra):
    code, out, _ = run("analyze", graph_file(g), *extra)
    assert code == 0
    jsonschema.validate(json.loads(out), SCHEMA)


def test_output_is_byte_stable(graph_file):
    path = graph_file(figure4())
    outs = {run("analyze", path, "--field", "fp:3", "--instantiate-degree", "2")[1] for _ in range(3)}
    assert len(outs) == 1
    assert outs.pop() == json.dumps(json.loads(run("analyze", path, "--field", "fp:3",
                                                   "--instantiate-degree", "2")[1]), sort_keys=True, indent=2) + "\n"


def test_eval_forms(graph_file):
    path = graph_file(single_loop())
    assert run("eval", path, "--field", "q", "x*.x") == (0, "1*v (deg 0)\n", "")
    assert run("eval", path, "x.x* - v")[1] == "0\n"
    assert run("eval", path, "--field", "fp:3", "--poly", "x^2 + 2", "--cycle", "x")[1] == "2*v (deg 0) + 1*x.x (deg 2)\n"


def test_eval_errors(graph_file):
    path = graph_file(single_loop())
    code, _, err = run("eval", path, "y")
    assert code == 1 and "y" in err
    assert run("eval", path)[0] == 1
    assert run("eval", path, "x", "--poly", "x")[0] == 1


def test_member(graph_file):
    path = graph_file(figure4())
    code, out, _ = run("member", path, "v2", "--gen", "v3")
    assert code == 0 and json.loads(out)["status"] == "member"
    out = json.loads(run("member", path, "v1", "--gen", "v3", "--length-bound", "4")[1])
    assert out["status"] == "bounded-negative" and out["length_bound"] == 4
    assert run("member", path, "v4", "--gen", "f4 - v4", "--length-bound", "8", "--max-products", "10")[0] == 2


def test_poset(graph_file):
    code, out, _ = run("poset", graph_file(figure4()), "--dot")
    assert code == 0 and out.startswith("digraph spectrum {")
    assert run("poset", graph_file(figure4()))[0] == 1


def test_generate_stdout_roundtrip():
    code, out, _ = run("generate", "E", "3", "1,3")
    assert code == 0 and out.startswith("# E 3 1,3\n")
    assert len(parse_graph(out).edges) == 2 + 3 + 2


def test_exit_codes(graph_file, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("vertices: a\nedge e: a -> b\n")
    code, _, err = run("analyze", str(bad))
    assert code == 1 and "line 2, column 14" in err
    assert run("analyze", str(tmp_path / "missing.txt"))[0] == 1
    assert run("analyze", graph_file(line(25)))[0] == 2
    assert run("analyze", graph_file(single_loop()), "--generator", "x^4 + 1")[0] == 3
    assert run("analyze", graph_file(line(2)), "--field", "fp:4")[0] == 1
    assert run("generate", "cube")[0] == 1
    assert main(["analyze"]) == 1
    assert main(["frobnicate"]) == 1


def test_selftest(monkeypatch):
    code, out, _ = run("selftest")
    assert code == 0 and out.count("PASS") == 7 and "FAIL" not in out
    import lpaspec.selftest as st
    monkeypatch.setattr(st, "CHECKS", st.CHECKS + (("broken", lambda: (False, "forced")),))
    code, out, _ = run("selftest")
    assert code == 4 and "FAIL broken: forced" in out


def test_console_script_and_stdin():
    text = serialize_graph(single_loop())
    proc = subprocess.run([sys.executable, "-m", "lpaspec", "analyze", "-"], input=text,
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["summary"]["laurent_lines"] == 1
    gen = subprocess.run([sys.executable, "-m", "lpaspec", "generate", "loop"], capture_output=True, text=True)
    assert gen.stdout == serialize_graph(single_loop(), comment="loop")
