#!/usr/bin/env python3
"""The exact upper/lower bound curves and where they meet.

Writes bound_curves.csv and bound_curves.svg next to this script and
prints a small table of exact values. All arithmetic is rational; the
decimals below are only for display.
"""

import pathlib
from fractions import Fraction as F

from tightcomp import (
    best_tc_lower,
    emit_curve_csv,
    emit_curve_svg,
    f3_lower,
    f3_upper,
    q_value,
    r_sequence,
    step_value,
)


def main():
    print("Steps of the upper bound (first eight admissible r):")
    for r in r_sequence(8):
        print(f"  r={r:>2}: step height {str(step_value(r)):>6} on x in "
              f"(..., {q_value(r)}]  (~{float(q_value(r)):.4f})")

    print()
    print("Exact values on a few rationals:")
    print(f"  {'x':>8} {'lower':>8} {'upper':>8}")
    for x in (F(2, 5), F(1, 3), F(8, 27), F(5, 18), F(1, 4), F(5, 21), F(1, 5), F(1, 8)):
        print(f"  {str(x):>8} {str(f3_lower(x)):>8} {str(f3_upper(x)):>8}")

    print()
    print("The curves coincide at x = 5/21 and on [8/27, 1]:")
    for x in (F(5, 21), F(8, 27), F(3, 10), F(1, 3)):
        lo, hi = f3_lower(x), f3_upper(x)
        mark = "EQUAL" if lo == hi else "strict"
        print(f"  x={str(x):>5}: lower={lo} upper={hi}  ({mark})")

    print()
    print("Component guarantee as codegree grows (n = 1260):")
    n = 1260
    for delta in (126, 252, 280, 315, 350, 420):
        print(f"  delta2={delta:>4} ({F(delta, n)} n): tc >= {best_tc_lower(n, delta)}")

    here = pathlib.Path(__file__).resolve().parent
    csv_path = here / "bound_curves.csv"
    svg_path = here / "bound_curves.svg"
    csv_path.write_text(emit_curve_csv(F(1, 50), F(1, 3), 600))
    svg_path.write_text(emit_curve_svg(F(1, 50), F(1, 3), 600))
    print()
    print(f"Wrote {csv_path.name} and {svg_path.name} (range [1/50, 1/3], 600 samples)")


if __name__ == "__main__":
    main()
