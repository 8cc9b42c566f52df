"""Draw the basic triangle with every integer line of coefficients up to M.

    python scripts/integer_lines_figure.py --max-coeff 4 --output lines.svg
"""

import argparse

from unavoidable.geometry import polygon
from unavoidable.svg import Scene, render_svg

BASIC = polygon([(1, 0), (0, 1), (-1, -1)])


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-coeff", type=int, default=4)
    ap.add_argument("--output", default="integer_lines.svg")
    args = ap.parse_args(argv)
    render_svg(Scene(body=BASIC, max_coeff=args.max_coeff, bounds=(-3, 3, -3, 3)), args.output)
    print("wrote", args.output)


if __name__ == "__main__":
    main()
