"""Matching numbers, exact fractional matchings, and intersecting-family checks.

The fractional matching number is computed by a primal simplex over
exact rationals with Bland's rule, so optima and witnesses are exact.
Instance sizes here are desk scale (tens of edges), where termination
matters more than speed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .geometry import is_admissible_order, verify_plane_axioms
from .hypergraph import Hypergraph


@dataclass(frozen=True)
class FractionalMatching:
    """Edge weights in [0,1] with per-vertex load at most 1."""

    weights: dict[int, Fraction]  # edge index -> weight
    value: Fraction


def _edge_masks(h: Hypergraph) -> list[int]:
    return [sum(1 << v for v in e) for e in h.edges]


def matching_number(h: Hypergraph) -> int:
    """Maximum number of pairwise disjoint edges, by branch and bound."""
    masks = _edge_masks(h)
    m = len(masks)
    best = 0

    def grow(i: int, used: int, count: int) -> None:
        nonlocal best
        if count > best:
            best = count
        if i == m:
            return
        free = h.n - used.bit_count()
        if count + min(m - i, free // h.k) <= best:
            return
        if not masks[i] & used:
            grow(i + 1, used | masks[i], count + 1)
        grow(i + 1, used, count)

    grow(0, 0, 0)
    return best


def fractional_matching_number(h: Hypergraph) -> tuple[Fraction, FractionalMatching]:
    """Exact optimum of max sum(w_e) s.t. per-vertex load <= 1, w >= 0.

    Primal simplex with Bland's anti-cycling rule over Fractions; the
    returned witness is verified to satisfy every constraint exactly.
    """
    m, n = h.num_edges, h.n
    if m == 0:
        return Fraction(0), FractionalMatching({}, Fraction(0))

    total = m + n  # edge variables then slack variables
    rows = []
    for v in range(n):
        row = [Fraction(1) if v in h.edges[j] else Fraction(0) for j in range(m)]
        row.extend(Fraction(1) if i == v else Fraction(0) for i in range(n))
        row.append(Fraction(1))  # rhs
        rows.append(row)
    cost = [Fraction(1)] * m + [Fraction(0)] * n + [Fraction(0)]
    basis = list(range(m, m + n))

    while True:
        enter = next((j for j in range(total) if cost[j] > 0), None)
        if enter is None:
            break
        pivot_row = None
        best_key = None
        for i in range(n):
            a = rows[i][enter]
            if a > 0:
                key = (rows[i][-1] / a, basis[i])
                if best_key is None or key < best_key:
                    best_key, pivot_row = key, i
        if pivot_row is None:
            raise ArithmeticError("LP unbounded; load constraints are missing")
        piv = rows[pivot_row][enter]
        rows[pivot_row] = [x / piv for x in rows[pivot_row]]
        for i in range(n):
            if i != pivot_row and rows[i][enter]:
                f = rows[i][enter]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[pivot_row])]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, rows[pivot_row])]
        basis[pivot_row] = enter

    weights = {j: Fraction(0) for j in range(m)}
    for i, var in enumerate(basis):
        if var < m:
            weights[var] = rows[i][-1]
    value = sum(weights.values(), Fraction(0))

    # exact feasibility of the witness
    for w in weights.values():
        assert 0 <= w <= 1
    for v in range(n):
        load = sum(weights[j] for j in range(m) if v in h.edges[j])
        assert load <= 1, f"vertex {v} overloaded: {load}"
    # optimality certificate: the dual (a fractional vertex cover) read
    # off the slack reduced costs must be feasible and match the value
    cover = [-cost[m + v] for v in range(n)]
    assert all(y >= 0 for y in cover)
    for e in h.edges:
        assert sum(cover[v] for v in e) >= 1, f"dual infeasible on {e}"
    assert sum(cover, Fraction(0)) == value, "duality gap; simplex is broken"
    return value, FractionalMatching(weights, value)


def is_intersecting(h: Hypergraph) -> bool:
    """Whether every two (distinct) edges share a vertex."""
    masks = _edge_masks(h)
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if not masks[i] & masks[j]:
                return False
    return True


def max_degree(h: Hypergraph) -> int:
    """Maximum vertex degree, counting edge multiplicity."""
    deg = [0] * h.n
    for e, c in zip(h.edges, h.multiplicity):
        for v in e:
            deg[v] += c
    return max(deg, default=0)


def check_intersecting_corollary(h: Hypergraph) -> dict:
    """Verify the degree bound for intersecting k-uniform multi-hypergraphs.

    Checks max degree >= e(H) / (k - 1 + p/k) with p = 1 when a plane of
    order k-1 exists and 0 otherwise. When k >= 3 and the degree falls
    below e(H)/(k-1), the underlying simple hypergraph must itself be a
    projective plane, which is verified axiom by axiom.
    """
    if not is_intersecting(h):
        raise ValueError("hypergraph is not intersecting")
    k = h.k
    e = h.total_multiplicity
    d1 = max_degree(h)
    p = 1 if is_admissible_order(k - 1) else 0
    warning = None
    if p == 0:
        warning = (
            f"no projective plane of order {k - 1} is constructible here; "
            "using the weaker p=0 bound"
        )
    bound = Fraction(e * k, k * (k - 1) + p)
    passed = d1 >= bound
    plane_check: dict = {"ran": False}
    if k >= 3 and e > 0 and d1 < Fraction(e, k - 1):
        report = verify_plane_axioms(h)
        plane_check = {
            "ran": True,
            "passed": report.passed,
            "order": report.order,
            "num_points": report.num_points,
            "num_lines": report.num_lines,
        }
        passed = passed and report.passed
    out = {
        "k": k,
        "e": e,
        "delta1": d1,
        "p": p,
        "bound": bound,
        "passed": passed,
        "plane_check": plane_check,
    }
    if warning:
        out["warning"] = warning
    return out


def random_maximal_intersecting_family(
    n: int, k: int = 3, rng: random.Random | None = None, seed: int | None = None
) -> Hypergraph:
    """Greedy maximal intersecting family over a shuffled list of all k-sets."""
    if rng is None:
        rng = random.Random(seed)
    candidates = list(combinations(range(n), k))
    rng.shuffle(candidates)
    chosen: list[tuple[int, ...]] = []
    masks: list[int] = []
    for e in candidates:
        mask = sum(1 << v for v in e)
        if all(mask & other for other in masks):
            chosen.append(e)
            masks.append(mask)
    return Hypergraph(k, n, chosen)
