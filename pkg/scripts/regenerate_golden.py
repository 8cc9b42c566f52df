"""Rewrite the golden files under tests/golden.

Run only after an intentional change to an output format, then review the
diff by hand before committing.
"""

import os
from fractions import Fraction

from unavoidable.bodies import RandomBodySpec, random_body, serialize_body
from unavoidable.descent import descend
from unavoidable.geometry import polygon
from unavoidable.svg import Scene, auto_bounds, render_svg

HERE = os.path.dirname(os.path.abspath(__file__))
GOLDEN = os.path.join(HERE, "..", "tests", "golden")

BASIC = polygon([(1, 0), (0, 1), (-1, -1)])
WORKED = polygon([(Fraction(3, 2), 0), (0, 1), (-1, -1)])


def write(name, text):
    with open(os.path.join(GOLDEN, name), "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    print("wrote", name)


def main():
    os.makedirs(GOLDEN, exist_ok=True)
    write("basic_triangle.json", serialize_body(BASIC))
    write("worked_triangle.json", serialize_body(WORKED))
    write("random_seed1_symmetric.json", serialize_body(random_body(RandomBodySpec(seed=1, constraint="symmetric"))))
    write("basic_triangle_lines.svg", render_svg(Scene(body=BASIC, max_coeff=4, bounds=(-3, 3, -3, 3))))
    cert = descend(WORKED)
    polys = [cert.start] + [s.end for s in cert.steps]
    write("worked_descent.svg", render_svg(Scene(trace=cert, bounds=auto_bounds(polys))))
    write("basic_triangle_body.svg", render_svg(Scene(body=BASIC)))


if __name__ == "__main__":
    main()
