import json
import os
import subprocess
import sys

import pytest

from unavoidable.bodies import serialize_body
from unavoidable.cli import main
from unavoidable.geometry import polygon, scale


@pytest.fixture
def body_file(tmp_path):
    def make(P, name="body.json", **kw):
        path = tmp_path / name
        path.write_text(serialize_body(P, **kw), encoding="utf-8")
        return str(path)

    return make


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_descend_basic_triangle(body_file, basic_triangle, capsys):
    code, out, _ = run(["descend", "--input", body_file(basic_triangle)], capsys)
    assert code == 0
    assert "steps: 0" in out and "terminal area: 3/2" in out


def test_descend_structured(body_file, worked_triangle, capsys):
    code, out, _ = run(["descend", "--input", body_file(worked_triangle), "--format", "structured"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["steps"][0]["T"] == "1/14"
    assert data["terminal_area"] == "3/2"


def test_descend_all_paths(body_file, worked_triangle, capsys):
    code, out, _ = run(["descend", "--input", body_file(worked_triangle), "--strategy", "all-paths",
                        "--format", "structured"], capsys)
    assert code == 0 and isinstance(json.loads(out), list)


def test_step_budget_is_a_failed_check(body_file, worked_triangle, capsys):
    code, _, err = run(["descend", "--input", body_file(worked_triangle), "--step-budget", "1"], capsys)
    assert code == 1 and "exceeded" in err


def test_check_unavoidable_shrunk_triangle(body_file, basic_triangle, capsys):
    from fractions import Fraction

    code, out, _ = run(["check-unavoidable", "--input", body_file(scale(basic_triangle, Fraction(9, 10)))], capsys)
    assert code == 0
    assert out.startswith("avoidable") and "1x + 1y = 1" in out


def test_dual(body_file, basic_triangle, capsys):
    code, out, _ = run(["dual", "--input", body_file(basic_triangle), "--format", "structured"], capsys)
    assert code == 0
    assert sorted(map(tuple, json.loads(out)["dual"])) == [("-2", "1"), ("1", "-2"), ("1", "1")]


def test_invariants(body_file, basic_triangle, capsys):
    code, out, _ = run(["invariants", "--input", body_file(basic_triangle), "--exact-only"], capsys)
    assert code == 0 and "mahler: 27/4" in out and "(equality)" in out


def test_critical_lattice(body_file, square, capsys):
    code, out, _ = run(["critical-lattice", "--input", body_file(square), "--tol", "1/1000000"], capsys)
    assert code == 0 and "admissible (exact): True" in out


def test_torus_commands(body_file, square, capsys):
    path = body_file(square)
    assert run(["torus", "systole", "--input", path], capsys)[1].strip() == "systole: 1"
    assert "(2)/pi" in run(["torus", "ht-area", "--input", path], capsys)[1]
    assert "(1/4)*pi" in run(["torus", "bh-area", "--input", path], capsys)[1]
    assert run(["torus", "zoll", "--input", path], capsys)[1].strip() == "zoll: True"
    code, out, _ = run(["torus", "check", "--input", path], capsys)
    assert code == 0 and "(equality)" in out


def test_torus_bh_area_needs_symmetry(body_file, basic_triangle, capsys):
    assert run(["torus", "bh-area", "--input", body_file(basic_triangle)], capsys)[0] == 2


def test_reduce_and_minkowski(body_file, square, capsys):
    code, out, _ = run(["reduce", "--input", body_file(square)], capsys)
    assert code == 0 and "lambda1 * lambda2 * area = 4" in out
    code, out, _ = run(["minkowski", "--input", body_file(square)], capsys)
    assert code == 0 and "witness: (" in out


def test_simplex_commands(capsys):
    code, out, _ = run(["simplex", "basic", "--dim", "3"], capsys)
    assert code == 0 and json.loads(out)["dim"] == 3
    code, out, _ = run(["simplex", "dual", "--dim", "2", "--format", "structured"], capsys)
    assert code == 0
    code, out, _ = run(["simplex", "verify", "--dim", "4"], capsys)
    assert code == 0 and "unavoidable: True" in out and "volume: 5/24" in out


def test_random_is_deterministic(capsys):
    first = run(["random", "--seed", "5", "--constraint", "unavoidable"], capsys)
    second = run(["random", "--seed", "5", "--constraint", "unavoidable"], capsys)
    assert first == second and first[0] == 0


def test_render(body_file, basic_triangle, tmp_path, capsys):
    out_path = tmp_path / "fig.svg"
    code, _, _ = run(["render", "--input", body_file(basic_triangle), "--output", str(out_path)], capsys)
    assert code == 0 and out_path.read_text().startswith("<?xml")
    code, out, _ = run(["render", "--input", body_file(basic_triangle), "--trace"], capsys)
    assert code == 0 and 'id="frame-0"' in out


def test_battery(capsys):
    code, out, _ = run(["battery", "--count", "5", "--seed", "7"], capsys)
    assert code == 0 and "all checks passed" in out
    again = run(["battery", "--count", "5", "--seed", "7"], capsys)
    assert again[1] == out


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["dual"],
        ["dual", "--input", "/nonexistent/file.json"],
        ["simplex", "basic"],
        ["critical-lattice", "--input", "{body}", "--tol", "tiny"],
    ],
)
def test_usage_errors(argv, body_file, square, capsys):
    path = body_file(square)
    argv = [a.replace("{body}", path) for a in argv]
    assert run(argv, capsys)[0] == 2


def test_parse_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 2, "vertices": [[0.5, "0"]]}')
    code, _, err = run(["dual", "--input", str(bad)], capsys)
    assert code == 2 and "vertices[0][0]" in err
    bad.write_text("{not json")
    assert run(["dual", "--input", str(bad)], capsys)[0] == 2


def test_geometry_errors(body_file, basic_triangle, capsys):
    from fractions import Fraction

    assert run(["descend", "--input", body_file(scale(basic_triangle, Fraction(1, 2)))], capsys)[0] == 2
    assert run(["critical-lattice", "--input", body_file(basic_triangle)], capsys)[0] == 2
    off = polygon([(1, 0), (2, 0), (2, 1)])
    assert run(["dual", "--input", body_file(off)], capsys)[0] == 2


def test_module_entry_point(body_file, basic_triangle):
    env = dict(os.environ)
    proc = subprocess.run([sys.executable, "-m", "unavoidable", "check-unavoidable", "--input", body_file(basic_triangle)],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 0 and proc.stdout.strip() == "unavoidable"
