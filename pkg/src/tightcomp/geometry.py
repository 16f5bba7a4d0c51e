"""Small finite fields GF(p^d) and projective planes PG(2, s).

Field elements are encoded as integers 0..q-1, read as base-p digit
vectors of polynomial coefficients (digit i = coefficient of x^i).
Orders are capped at 32, which covers every plane the construction
generators can use at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .hypergraph import Hypergraph

FIELD_ORDER_CAP = 32


def factor_prime_power(q: int):
    """Return (p, d) with q = p^d for prime p, or None if q is not a prime power."""
    if q < 2:
        return None
    p = None
    for cand in range(2, q + 1):
        if cand * cand > q:
            break
        if q % cand == 0:
            p = cand
            break
    if p is None:
        return (q, 1)  # q itself is prime
    d = 0
    rest = q
    while rest % p == 0:
        rest //= p
        d += 1
    return (p, d) if rest == 1 else None


def is_prime_power(q: int) -> bool:
    return factor_prime_power(q) is not None


def is_admissible_order(m: int) -> bool:
    """Whether a plane of order m is constructible here: m in {0, 1} or a prime power.

    Order 1 is the degenerate triangle plane; orders like 6 or 10 are
    rejected (10 in particular is known not to exist).
    """
    return m == 0 or m == 1 or is_prime_power(m)


# -- polynomial arithmetic over GF(p), integer-encoded ----------------------


def _poly_digits(a: int, p: int) -> list[int]:
    out = []
    while a:
        a, r = divmod(a, p)
        out.append(r)
    return out


def _poly_from_digits(digits: Sequence[int], p: int) -> int:
    val = 0
    for c in reversed(digits):
        val = val * p + c
    return val


def _poly_mul(a: int, b: int, p: int) -> int:
    da, db = _poly_digits(a, p), _poly_digits(b, p)
    if not da or not db:
        return 0
    out = [0] * (len(da) + len(db) - 1)
    for i, ca in enumerate(da):
        if ca:
            for j, cb in enumerate(db):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _poly_from_digits(out, p)


def _poly_mod(a: int, mod: int, p: int) -> int:
    dm = _poly_digits(mod, p)
    deg_m = len(dm) - 1
    lead_inv = pow(dm[-1], -1, p)
    da = _poly_digits(a, p)
    while len(da) - 1 >= deg_m and any(da):
        deg_a = len(da) - 1
        coef = (da[-1] * lead_inv) % p
        shift = deg_a - deg_m
        for i, cm in enumerate(dm):
            da[shift + i] = (da[shift + i] - coef * cm) % p
        while da and da[-1] == 0:
            da.pop()
    return _poly_from_digits(da, p)


def _is_irreducible(f: int, d: int, p: int) -> bool:
    # trial division by every monic polynomial of degree 1..d//2
    for deg in range(1, d // 2 + 1):
        for low in range(p**deg):
            g = p**deg + low
            if _poly_mod(f, g, p) == 0:
                return False
    return True


class FiniteField:
    """GF(p^d) backed by full addition/multiplication tables.

    For d > 1 the modulus is the least monic irreducible of degree d
    (ordered by integer encoding), so the tables are deterministic.
    """

    def __init__(self, q: int):
        fact = factor_prime_power(q)
        if fact is None:
            raise ValueError(f"{q} is not a prime power")
        if q > FIELD_ORDER_CAP:
            raise ValueError(f"field order {q} exceeds cap {FIELD_ORDER_CAP}")
        p, d = fact
        self.order = q
        self.p = p
        self.degree = d
        if d == 1:
            self.irreducible = None
            self._add = tuple(tuple((a + b) % p for b in range(q)) for a in range(q))
            self._mul = tuple(tuple((a * b) % p for b in range(q)) for a in range(q))
        else:
            irr = None
            for low in range(p**d):
                cand = p**d + low
                if _is_irreducible(cand, d, p):
                    irr = cand
                    break
            assert irr is not None
            self.irreducible = irr
            self._add = tuple(
                tuple(self._add_digits(a, b) for b in range(q)) for a in range(q)
            )
            self._mul = tuple(
                tuple(_poly_mod(_poly_mul(a, b, p), irr, p) for b in range(q))
                for a in range(q)
            )
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    inv[a] = b
                    break
        self._inv = tuple(inv)

    def _add_digits(self, a: int, b: int) -> int:
        p = self.p
        da, db = _poly_digits(a, p), _poly_digits(b, p)
        size = max(len(da), len(db))
        da += [0] * (size - len(da))
        db += [0] * (size - len(db))
        return _poly_from_digits([(x + y) % p for x, y in zip(da, db)], p)

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        for b in range(self.order):
            if self._add[a][b] == 0:
                return b
        raise AssertionError("no additive inverse")

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self.neg(b)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self._inv[a]

    def multiplicative_generator(self) -> int:
        """Smallest element generating the (cyclic) group of nonzero elements."""
        target = self.order - 1
        for g in range(1, self.order):
            seen = set()
            x = 1
            for _ in range(target):
                x = self._mul[x][g]
                seen.add(x)
            if len(seen) == target:
                return g
        raise AssertionError("no generator found; field tables are broken")

    def __repr__(self):
        return f"<GF({self.order})>"


@lru_cache(maxsize=None)
def gf(q: int) -> FiniteField:
    """Finite field of prime-power order q (q <= 32)."""
    return FiniteField(q)


# -- projective planes -------------------------------------------------------


@dataclass(frozen=True)
class ProjectivePlane:
    """Points 0..(s^2+s+1)-1 and lines as sorted point tuples."""

    order: int
    num_points: int
    lines: tuple[tuple[int, ...], ...]
    lines_through: tuple[tuple[int, ...], ...]

    def to_hypergraph(self) -> Hypergraph:
        """The plane as an (s+1)-uniform hypergraph (lines as edges)."""
        return Hypergraph(self.order + 1, self.num_points, self.lines)

    def line_through(self, a: int, b: int) -> int:
        """Index of the unique line containing both points."""
        common = set(self.lines_through[a]) & set(self.lines_through[b])
        if len(common) != 1:
            raise ValueError(f"points {a},{b} lie on {len(common)} common lines")
        return common.pop()


def projective_plane(s: int) -> ProjectivePlane:
    """PG(2, s) for prime-power s, or the degenerate triangle plane for s = 1.

    Projective points are the nonzero coordinate triples over GF(s)
    normalized so the first nonzero coordinate is 1, ordered
    lexicographically; a point lies on a line when their dot product
    vanishes. The labeling is therefore deterministic.
    """
    if s == 1:
        lines = ((0, 1), (0, 2), (1, 2))
        through = ((0, 1), (0, 2), (1, 2))
        return ProjectivePlane(1, 3, lines, through)
    if s < 1 or not is_prime_power(s):
        raise ValueError(
            f"no projective plane of order {s} is supported "
            f"(order must be 1 or a prime power <= {FIELD_ORDER_CAP})"
        )
    field = gf(s)
    reps: list[tuple[int, int, int]] = []
    for a in range(s):
        for b in range(s):
            for c in range(s):
                if (a, b, c) == (0, 0, 0):
                    continue
                first = a if a else (b if b else c)
                if first == 1:
                    reps.append((a, b, c))
    reps.sort()
    index = {t: i for i, t in enumerate(reps)}
    assert len(reps) == s * s + s + 1

    def dot(u, v):
        total = 0
        for x, y in zip(u, v):
            total = field.add(total, field.mul(x, y))
        return total

    lines = []
    for coeffs in reps:
        pts = tuple(sorted(index[pt] for pt in reps if dot(coeffs, pt) == 0))
        lines.append(pts)
    through: list[list[int]] = [[] for _ in reps]
    for li, pts in enumerate(lines):
        for pt in pts:
            through[pt].append(li)
    return ProjectivePlane(
        s, len(reps), tuple(lines), tuple(tuple(sorted(t)) for t in through)
    )


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    passed: bool
    detail: str | None = None


@dataclass(frozen=True)
class PlaneAxiomReport:
    order: int | None
    num_points: int
    num_lines: int
    checks: tuple[AxiomCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "num_points": self.num_points,
            "num_lines": self.num_lines,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }


def verify_plane_axioms(structure) -> PlaneAxiomReport:
    """Check the four projective-plane axioms on an incidence structure.

    Accepts a Hypergraph, a ProjectivePlane, or an iterable of lines
    (each an iterable of point labels). Points are the support of the
    lines. Checks line sizes, point degrees, unique line per point pair,
    and unique point per line pair, reporting the first counterexample
    of each failing axiom.
    """
    if isinstance(structure, ProjectivePlane):
        lines = [tuple(l) for l in structure.lines]
    elif isinstance(structure, Hypergraph):
        lines = [tuple(e) for e in structure.edges]
    else:
        lines = [tuple(sorted(set(l))) for l in structure]
    points = sorted({p for l in lines for p in l})
    checks = []

    if lines:
        width = len(lines[0])
        bad = next((l for l in lines if len(l) != width), None)
        sizes_ok = bad is None and width >= 2
        detail = None
        if bad is not None:
            detail = f"line {bad} has {len(bad)} points, expected {width}"
        elif width < 2:
            detail = "lines must have at least 2 points"
        order = width - 1 if sizes_ok else None
    else:
        sizes_ok, order, detail = False, None, "no lines"
    checks.append(AxiomCheck("line sizes", sizes_ok, detail))

    degree = {p: 0 for p in points}
    for l in lines:
        for p in l:
            degree[p] += 1
    if order is not None:
        bad_p = next((p for p in points if degree[p] != order + 1), None)
        checks.append(
            AxiomCheck(
                "point degrees",
                bad_p is None,
                None
                if bad_p is None
                else f"point {bad_p} lies on {degree[bad_p]} lines, expected {order + 1}",
            )
        )
    else:
        checks.append(AxiomCheck("point degrees", False, "line sizes not uniform"))

    pair_count: dict[tuple[int, int], int] = {}
    for l in lines:
        for a, b in combinations(l, 2):
            key = (a, b) if a < b else (b, a)
            pair_count[key] = pair_count.get(key, 0) + 1
    pair_bad = None
    for a, b in combinations(points, 2):
        c = pair_count.get((a, b), 0)
        if c != 1:
            pair_bad = f"points {a},{b} lie on {c} common lines"
            break
    checks.append(AxiomCheck("point pairs", pair_bad is None, pair_bad))

    line_bad = None
    sets = [set(l) for l in lines]
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            meet = len(sets[i] & sets[j])
            if meet != 1:
                line_bad = f"lines {i},{j} meet in {meet} points"
                break
        if line_bad:
            break
    checks.append(AxiomCheck("line pairs", line_bad is None, line_bad))

    return PlaneAxiomReport(order, len(points), len(lines), tuple(checks))
