import json
import subprocess
import sys

import pytest

from localduality.cli import main, parse_session, parse_vector
from localduality.groebner import Submodule, ideal
from localduality.ring import ParseError

SESSION = """
ring Q[x,y];
ideal J = x^2, x*y;
ideal P = x, y;
module M = [[x,0],[y,0],[0,x]];
matrix A = [[1,0],[1,1]];
"""

SESSION4 = """
ring Fp(32003)[x,y,z,w];
ideal J = x*z, x*w, y*z, y*w;
ideal Z = z^2, z*w, w^2;
ideal C = x*z, y*w;
"""


def run(capsys, *argv, text=SESSION):
    code = main(list(argv) + ["-e", text])
    out = capsys.readouterr().out
    return code, out


def test_parse_session_objects():
    s = parse_session(SESSION)
    assert s.ring.variables == ("x", "y")
    assert s.kinds == {"J": "ideal", "P": "ideal", "M": "module", "A": "matrix"}
    assert s.objects["M"].shape == (2, 3)
    assert s.objects["A"].rows[1] == (s.ring.one, s.ring.one)


def test_parse_artinian_example():
    s = parse_session("ring Q[z,w]; ideal J = z^2, z*w, w^2;")
    assert [str(f) for f in s.objects["J"].row(0)] == ["z^2", "z*w", "w^2"]


def test_parse_errors():
    with pytest.raises(ParseError) as e:
        parse_session("ideal J = x;")
    assert "no ring declared" in str(e.value)
    with pytest.raises(ParseError) as e:
        parse_session("ring Q[x];\nideal J = x y;")
    assert (e.value.line, e.value.column) == (2, 13)
    with pytest.raises(ParseError):
        parse_session("ring Q[x]; ideal J = t;")
    with pytest.raises(ParseError):
        parse_session("ring Q[x]; ring Q[y];")
    with pytest.raises(ParseError):
        parse_session("ring Q[x]; ideal J = x; ideal J = x^2;")
    with pytest.raises(ParseError):
        parse_session("ring Q[x]; ideal J = x")


def test_hull_command(capsys):
    code, out = run(capsys, "hull", "J", "1")
    rep = json.loads(out)
    assert code == 0
    assert rep["result"]["hull"] == ["x"] and rep["certified"] is True
    assert set(rep) == {"command", "ring", "inputs", "seed", "certified", "result",
                        "witnesses", "verdicts", "timings_ms"}


def test_kernel_command_artinian(capsys):
    code, out = run(capsys, "kernel", "Z", "2", text=SESSION4)
    rep = json.loads(out)
    assert code == 0 and rep["verdicts"]["nondegenerate_left"]
    assert sorted(rep["result"]["kernel"]) == sorted(["z^2", "z*w", "w^2"])
    assert sorted(map(sorted, rep["result"]["components"])) == [["w", "z^2"], ["w^2", "z"]]


def test_s2_command_reports_failure(capsys):
    code, out = run(capsys, "s2", "J", "2", text=SESSION4)
    rep = json.loads(out)
    assert code == 0
    assert rep["result"]["passed"] is False and rep["result"]["failure"] == 3
    assert rep["result"]["codim_table"]["3"] == 4


@pytest.mark.parametrize("argv", [
    ["resolve", "J", "--min"], ["ext", "J", "1"], ["pair", "J", "1", "--g", "y"],
    ["kernel", "J", "1"], ["inject", "J", "1"], ["s2", "J", "1"], ["purity", "J", "1"],
    ["roos", "J", "1"], ["transform", "P", "A"], ["check", "J", "1"], ["hull", "M", "1"],
])
def test_commands_succeed(capsys, argv):
    code, out = run(capsys, *argv)
    rep = json.loads(out)
    assert code == 0, rep
    assert all(rep["verdicts"].values())


def test_fine_ci_flag(capsys):
    code, out = run(capsys, "kernel", "J", "2", "--fine-ci", "C", text=SESSION4)
    rep = json.loads(out)
    assert code == 0 and rep["result"]["ci"] == ["x*z", "y*w"]


def test_precondition_error_exit_code(capsys):
    code, out = run(capsys, "hull", "J", "2")
    rep = json.loads(out)
    assert code == 2 and "codimension" in rep["error"]


def test_unknown_object_exit_code(capsys):
    code, out = run(capsys, "hull", "Q", "1")
    assert code == 2


def test_text_output(capsys):
    code, out = run(capsys, "hull", "J", "1", "--text")
    assert code == 0 and 'hull: ["x"]' in out


def test_report_roundtrip(capsys):
    code, out = run(capsys, "hull", "M", "1")
    rep = json.loads(out)
    s = parse_session(SESSION)
    cols = rep["result"]["hull"]
    ring = s.ring
    text = "ring Q[x,y]; module H = [" + ",".join("[" + ",".join(c) + "]" for c in cols) + "];"
    H = parse_session(text).objects["H"]
    assert Submodule(ring, H).equals(Submodule(ring, [(1, 0), (0, ring.gens[0])]))


def test_parse_vector():
    s = parse_session(SESSION)
    assert parse_vector("[x, y^2]", s.ring) == (s.ring.gens[0], s.ring.gens[1] ** 2)


def test_module_entry_point(tmp_path):
    f = tmp_path / "s.txt"
    f.write_text(SESSION)
    proc = subprocess.run([sys.executable, "-m", "localduality", "hull", "J", "1", "-i", str(f)],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["hull"] == ["x"]
