import os
import re
import xml.etree.ElementTree as ET

import pytest

from unavoidable.descent import descend
from unavoidable.svg import Scene, auto_bounds, render_svg, render_svg_string

NS = "{http://www.w3.org/2000/svg}"


def read(golden_dir, name):
    with open(os.path.join(golden_dir, name), encoding="utf-8") as fh:
        return fh.read()


def test_integer_lines_golden(golden_dir, basic_triangle):
    text = render_svg_string(Scene(body=basic_triangle, max_coeff=4, bounds=(-3, 3, -3, 3)))
    assert text == read(golden_dir, "basic_triangle_lines.svg")


def test_integer_lines_content(basic_triangle):
    root = ET.fromstring(render_svg_string(Scene(body=basic_triangle, max_coeff=4)))
    assert root.get("version") == "1.1"
    lines = [e for e in root.iter(NS + "line") if e.get("class") == "integer-line"]
    coeffs = {(int(e.get("data-m")), int(e.get("data-n"))) for e in lines}
    assert all(max(abs(m), abs(n)) <= 4 for m, n in coeffs)
    # every line with |m|, |n| <= 4 crosses the [-3, 3] box
    assert len(coeffs) == 80
    assert len([e for e in root.iter(NS + "polygon") if e.get("class") == "body"]) == 1


def test_descent_trace_golden(golden_dir, worked_triangle):
    cert = descend(worked_triangle)
    polys = [cert.start] + [s.end for s in cert.steps]
    text = render_svg_string(Scene(trace=cert, bounds=auto_bounds(polys)))
    assert text == read(golden_dir, "worked_descent.svg")
    frames = re.findall(r'id="frame-(\d+)"', text)
    assert frames == [str(k) for k in range(len(cert.steps) + 1)]
    assert text.count('class="slide"') == len(cert.steps)


def test_body_only_plot(golden_dir, basic_triangle):
    text = render_svg_string(Scene(body=basic_triangle))
    assert 'class="integer-line"' not in text
    assert text == read(golden_dir, "basic_triangle_body.svg")


def test_render_writes_file(tmp_path, basic_triangle):
    path = tmp_path / "out.svg"
    text = render_svg(Scene(body=basic_triangle), str(path))
    assert path.read_text(encoding="utf-8") == text


def test_render_is_deterministic(basic_triangle):
    scene = Scene(body=basic_triangle, max_coeff=3)
    assert render_svg_string(scene) == render_svg_string(scene)


def test_bad_bounds(basic_triangle):
    with pytest.raises(ValueError):
        render_svg_string(Scene(body=basic_triangle, bounds=(1, 1, 0, 2)))


def test_unwritable_path(basic_triangle, tmp_path):
    with pytest.raises(OSError):
        render_svg(Scene(body=basic_triangle), str(tmp_path / "missing" / "out.svg"))
