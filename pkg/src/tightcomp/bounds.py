"""Exact-rational bound curves relating codegree fraction to tight-component size.

Everything here is computed in exact rational arithmetic; floating point
only appears when rendering CSV or SVG text. `Rational` is the stdlib
Fraction, which already provides the reduced numerator/denominator pair.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .geometry import is_admissible_order

Rational = Fraction


def r_sequence(count: int) -> list[int]:
    """First `count` integers r >= 2 for which a plane of order r-2 exists
    (order 0, 1, or a prime power): 2, 3, 4, 5, 6, 7, 9, 10, 11, 13, 15, ...
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    out = []
    r = 2
    while len(out) < count:
        if is_admissible_order(r - 2):
            out.append(r)
        r += 1
    return out


def q_value(r: int) -> Fraction:
    """Codegree fraction (r - 3 + 2/(r-1)) / (r^2 - 3r + 3) of the step at r."""
    if not isinstance(r, int) or r < 2:
        raise ValueError(f"r must be an integer >= 2, got {r!r}")
    return Fraction((r - 3) * (r - 1) + 2, (r - 1) * (r * r - 3 * r + 3))


def step_value(r: int) -> Fraction:
    """Height (r - 1) / (r^2 - 3r + 3) of the upper-bound step at r."""
    if not isinstance(r, int) or r < 2:
        raise ValueError(f"r must be an integer >= 2, got {r!r}")
    return Fraction(r - 1, r * r - 3 * r + 3)


# Growing cache of the admissible r's and their q values, q strictly
# decreasing. Guarded by a lock so concurrent sweeps stay consistent.
_rq_lock = threading.Lock()
_r_cache: list[int] = [2]
_q_cache: list[Fraction] = [q_value(2)]


def _extend_rq_below(x: Fraction) -> None:
    with _rq_lock:
        r = _r_cache[-1]
        while _q_cache[-1] >= x:
            r += 1
            while not is_admissible_order(r - 2):
                r += 1
            _r_cache.append(r)
            _q_cache.append(q_value(r))


def f3_upper(x) -> Fraction:
    """Upper bound for the largest guaranteed tight-component fraction.

    Steps down at the q values: on (q_{i+1}, q_i] the bound is
    (r_i - 1) / (r_i^2 - 3 r_i + 3), with intervals closed on the right.
    """
    x = Fraction(x)
    if not 0 < x <= 1:
        raise ValueError(f"x must satisfy 0 < x <= 1, got {x}")
    _extend_rq_below(x)
    # rightmost index with q_i >= x (q_0 = 1 >= x always)
    lo, hi = 0, len(_q_cache) - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if _q_cache[mid] >= x:
            lo = mid
        else:
            hi = mid - 1
    return step_value(_r_cache[lo])


def _lower_candidates(x: Fraction) -> Iterable[Fraction]:
    if x > Fraction(1, 3):
        yield Fraction(1)
    if Fraction(8, 27) <= x <= Fraction(1, 3):
        yield Fraction(2, 3)
    if Fraction(5, 18) <= x <= Fraction(8, 27):
        yield 9 * x - 2
    # the two r-indexed cases only apply for r within one of 1/x
    r0 = int(Fraction(1) / x)  # floor(1/x)
    for r in range(max(3, r0 - 2), r0 + 3):
        seam = Fraction(3 * r - 4, (3 * r - 3) * r)
        if Fraction(1, r + 1) <= x <= seam:
            yield Fraction(1, r - 1)
        if r >= 4 and seam <= x <= Fraction(1, r):
            yield Fraction(3 * r * x - 2, r - 2)


def f3_lower(x) -> Fraction:
    """Lower bound for the largest guaranteed tight-component fraction.

    Maximum over all applicable cases of the five-case piecewise formula;
    overlapping cases agree at shared endpoints, so the maximum is safe.
    """
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise ValueError(f"x must satisfy 0 <= x <= 1, got {x}")
    if x == 0:
        return Fraction(0)
    best = max(_lower_candidates(x), default=None)
    assert best is not None, f"piecewise cases failed to cover x={x}"
    return best


def f2(x) -> Fraction:
    """Largest guaranteed component fraction for graphs: 1 / floor(1/x)."""
    x = Fraction(x)
    if not 0 < x <= 1:
        raise ValueError(f"x must satisfy 0 < x <= 1, got {x}")
    return Fraction(1, int(Fraction(1) / x))


def tc_lower_bound(n: int, r: int, eps) -> Fraction:
    """Guaranteed largest-tight-component size for codegree >= (1-eps) n / r.

    r = 3 gives min(1 - 3 eps, 2/3) n; r >= 4 gives (1 - 3 eps) n / (r - 2).
    Requires 0 <= eps < 1/(r+1).
    """
    if not isinstance(r, int) or r < 3:
        raise ValueError(f"r must be an integer >= 3, got {r!r}")
    eps = Fraction(eps)
    if not 0 <= eps < Fraction(1, r + 1):
        raise ValueError(f"eps must lie in [0, 1/{r + 1}), got {eps}")
    if r == 3:
        return min(1 - 3 * eps, Fraction(2, 3)) * n
    return (1 - 3 * eps) * Fraction(n, r - 2)


def best_tc_lower(n: int, delta2: int) -> Fraction:
    """Best tight-component guarantee for an n-vertex 3-graph with the
    given minimum codegree, maximizing the r-parametrized bound over r.

    For each r the slack is eps_r = max(0, 1 - r delta2 / n) (a codegree
    above n/r just means zero slack), valid while eps_r < 1/(r+1). Larger
    r beyond the first zero-slack value only weakens the bound, so only a
    small window near n/delta2 matters. Returns 0 when no r applies.
    """
    if delta2 <= 0:
        return Fraction(0)
    ratio = Fraction(n, delta2)
    r_lo = max(3, int(ratio) - 1)
    r_hi = int(ratio) + 2
    best = Fraction(0)
    for r in range(r_lo, r_hi + 1):
        eps = max(Fraction(0), 1 - Fraction(r * delta2, n))
        if eps < Fraction(1, r + 1):
            best = max(best, tc_lower_bound(n, r, eps))
    return best


# -- piecewise curve objects (used for plotting and seam checks) -------------


@dataclass(frozen=True)
class Segment:
    """Affine piece value = slope * x + intercept on [lo, hi]."""

    lo: Fraction
    hi: Fraction
    slope: Fraction
    intercept: Fraction

    def value_at(self, x: Fraction) -> Fraction:
        return self.slope * x + self.intercept


@dataclass(frozen=True)
class PiecewiseBound:
    """Contiguous nondecreasing piecewise-affine curve."""

    segments: tuple[Segment, ...]

    def value(self, x) -> Fraction:
        x = Fraction(x)
        for seg in self.segments:
            if seg.lo <= x <= seg.hi:
                return seg.value_at(x)
        raise ValueError(f"x={x} outside curve domain")


def f3_upper_curve(xmin, xmax=Fraction(1)) -> PiecewiseBound:
    """The upper bound as explicit constant steps covering [xmin, xmax]."""
    xmin, xmax = Fraction(xmin), Fraction(xmax)
    if not 0 < xmin < xmax <= 1:
        raise ValueError("need 0 < xmin < xmax <= 1")
    _extend_rq_below(xmin)
    with _rq_lock:
        rs, qs = list(_r_cache), list(_q_cache)
    segs = []
    for i, r in enumerate(rs):
        hi = qs[i]
        lo = qs[i + 1] if i + 1 < len(qs) else Fraction(0)
        if hi < xmin:
            break
        clip_lo, clip_hi = max(lo, xmin), min(hi, xmax)
        if clip_lo <= clip_hi:
            segs.append(Segment(clip_lo, clip_hi, Fraction(0), step_value(r)))
    # (lo, hi) order puts a zero-width stub at a breakpoint before the
    # wider segment sharing its lo, preserving right-closed lookups
    segs.sort(key=lambda s: (s.lo, s.hi))
    return PiecewiseBound(tuple(segs))


def f3_lower_curve(xmin, xmax=Fraction(1)) -> PiecewiseBound:
    """The lower bound as explicit affine pieces covering [xmin, xmax]."""
    xmin, xmax = Fraction(xmin), Fraction(xmax)
    if not 0 < xmin < xmax <= 1:
        raise ValueError("need 0 < xmin < xmax <= 1")
    # the first piece is open on the left (the curve jumps at 1/3), so a
    # clip that degenerates it to the bare point 1/3 drops it entirely
    jump = Segment(Fraction(1, 3), Fraction(1), Fraction(0), Fraction(1))
    pieces = [
        Segment(Fraction(8, 27), Fraction(1, 3), Fraction(0), Fraction(2, 3)),
        Segment(Fraction(5, 18), Fraction(8, 27), Fraction(9), Fraction(-2)),
    ]
    r = 3
    while True:
        seam = Fraction(3 * r - 4, (3 * r - 3) * r)
        pieces.append(Segment(Fraction(1, r + 1), seam, Fraction(0), Fraction(1, r - 1)))
        if r >= 4:
            pieces.append(
                Segment(seam, Fraction(1, r), Fraction(3 * r, r - 2), Fraction(-2, r - 2))
            )
        if Fraction(1, r + 1) <= xmin:
            break
        r += 1
    segs = []
    if jump.lo < xmax:
        segs.append(Segment(max(jump.lo, xmin), min(jump.hi, xmax), jump.slope, jump.intercept))
    for seg in pieces:
        lo, hi = max(seg.lo, xmin), min(seg.hi, xmax)
        if lo < hi or (lo == hi and (lo == xmin or hi == xmax)):
            segs.append(Segment(lo, hi, seg.slope, seg.intercept))
    segs.sort(key=lambda s: (s.lo, s.hi))
    return PiecewiseBound(tuple(segs))


# -- CSV / SVG emission -------------------------------------------------------


def _dec12(value: Fraction) -> str:
    """Decimal string with 12 significant digits."""
    return f"{float(value):.12g}"


def _sample_points(xmin: Fraction, xmax: Fraction, samples: int) -> list[Fraction]:
    step = Fraction(xmax - xmin, samples - 1)
    return [xmin + step * j for j in range(samples)]


def _validate_range(xmin, xmax, samples) -> tuple[Fraction, Fraction, int]:
    xmin, xmax = Fraction(xmin), Fraction(xmax)
    if not 0 < xmin < xmax <= 1:
        raise ValueError(f"need 0 < xmin < xmax <= 1, got [{xmin}, {xmax}]")
    if not isinstance(samples, int) or samples < 2:
        raise ValueError(f"samples must be an integer >= 2, got {samples!r}")
    return xmin, xmax, samples


def emit_curve_csv(xmin, xmax, samples: int) -> str:
    """CSV rows "x,lower,upper" at evenly spaced exact sample points."""
    xmin, xmax, samples = _validate_range(xmin, xmax, samples)
    rows = ["x,lower,upper"]
    for x in _sample_points(xmin, xmax, samples):
        rows.append(f"{_dec12(x)},{_dec12(f3_lower(x))},{_dec12(f3_upper(x))}")
    return "\n".join(rows) + "\n"


_SVG_W, _SVG_H = 800, 600
_ML, _MR, _MT, _MB = 70, 30, 40, 50


def emit_curve_svg(xmin, xmax, samples: int) -> str:
    """An 800x600 plot: red lower polyline, blue right-closed upper steps."""
    xmin, xmax, samples = _validate_range(xmin, xmax, samples)

    def px(x: Fraction) -> float:
        t = float((x - xmin) / (xmax - xmin))
        return _ML + t * (_SVG_W - _ML - _MR)

    def py(y: Fraction) -> float:
        return _SVG_H - _MB - float(y) * (_SVG_H - _MT - _MB)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SVG_W}" height="{_SVG_H}" '
        f'viewBox="0 0 {_SVG_W} {_SVG_H}">',
        f"<!-- tight-component bound curves: xmin={xmin} xmax={xmax} samples={samples} -->",
        "<!-- red: lower bound (polyline); blue: upper bound (right-closed steps) -->",
        f'<rect width="{_SVG_W}" height="{_SVG_H}" fill="white"/>',
        f'<line x1="{_ML}" y1="{py(Fraction(0))}" x2="{_SVG_W - _MR}" '
        f'y2="{py(Fraction(0))}" stroke="black"/>',
        f'<line x1="{_ML}" y1="{py(Fraction(0))}" x2="{_ML}" y2="{_MT}" stroke="black"/>',
    ]
    for i in range(6):
        xt = xmin + Fraction(i, 5) * (xmax - xmin)
        parts.append(
            f'<line x1="{px(xt):.1f}" y1="{py(Fraction(0)):.1f}" '
            f'x2="{px(xt):.1f}" y2="{py(Fraction(0)) + 5:.1f}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{px(xt):.1f}" y="{py(Fraction(0)) + 20:.1f}" font-size="12" '
            f'text-anchor="middle">{float(xt):.4g}</text>'
        )
        yt = Fraction(i, 5)
        parts.append(
            f'<line x1="{_ML - 5}" y1="{py(yt):.1f}" x2="{_ML}" y2="{py(yt):.1f}" '
            f'stroke="black"/>'
        )
        parts.append(
            f'<text x="{_ML - 10}" y="{py(yt) + 4:.1f}" font-size="12" '
            f'text-anchor="end">{float(yt):.2g}</text>'
        )

    pts = " ".join(
        f"{px(x):.2f},{py(f3_lower(x)):.2f}"
        for x in _sample_points(xmin, xmax, samples)
    )
    parts.append(
        f'<polyline points="{pts}" fill="none" stroke="red" stroke-width="2"/>'
    )

    steps = f3_upper_curve(xmin, xmax).segments
    path = []
    for i, seg in enumerate(steps):
        y = seg.intercept
        if i == 0:
            path.append(f"M {px(seg.lo):.2f} {py(y):.2f}")
        else:
            path.append(f"L {px(seg.lo):.2f} {py(y):.2f}")  # vertical jump
        path.append(f"L {px(seg.hi):.2f} {py(y):.2f}")
    parts.append(
        f'<path d="{" ".join(path)}" fill="none" stroke="blue" stroke-width="2"/>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
