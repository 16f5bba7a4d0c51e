"""Generators for the extremal hypergraph families.

Every generator is a pure function of its arguments with deterministic
output: class/part boundaries are contiguous index ranges with the
remainder handed to the lowest-index parts, and matchings are assigned
to colors in a fixed cyclic order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .geometry import ProjectivePlane, is_admissible_order, projective_plane
from .hypergraph import Hypergraph


def _balanced_parts(n: int, count: int) -> list[range]:
    """Split 0..n-1 into `count` contiguous parts, larger parts first."""
    base, rem = divmod(n, count)
    parts = []
    start = 0
    for i in range(count):
        size = base + (1 if i < rem else 0)
        parts.append(range(start, start + size))
        start += size
    return parts


def three_part(n: int) -> Hypergraph:
    """Three near-equal parts V0, V1, V2; edges are the triples inside a
    part plus those with two vertices in V_i and one in V_{i+1} (cyclically).

    For n >= 6 this has minimum codegree floor(n/3) - 1 while no tight
    component meets more than ceil(2n/3) vertices.
    """
    if n < 3:
        raise ValueError(f"three_part needs n >= 3, got {n}")
    parts = _balanced_parts(n, 3)
    edges = []
    for i in range(3):
        edges.extend(combinations(parts[i], 3))
        nxt = parts[(i + 1) % 3]
        for pair in combinations(parts[i], 2):
            for v in nxt:
                edges.append((*pair, v))
    return Hypergraph(3, n, edges)


def split_w(n: int, k: int) -> Hypergraph:
    """All k-sets meeting W = {0, ..., floor((n-k)/2)} in any size except 1.

    Attains minimum codegree floor((n-k)/2) without being hypergraph
    connected: no (k-1)-set meeting W connects to one avoiding W.
    """
    if k < 2:
        raise ValueError(f"split_w needs k >= 2, got {k}")
    if n < k:
        raise ValueError(f"split_w needs n >= k, got n={n}, k={k}")
    w = set(range((n - k) // 2 + 1))
    edges = [e for e in combinations(range(n), k) if len(w.intersection(e)) != 1]
    return Hypergraph(k, n, edges)


def f2_extremal(n: int, m: int) -> Hypergraph:
    """Disjoint cliques on m near-equal parts (the k = 2 extremal example)."""
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    edges = []
    for part in _balanced_parts(n, m):
        edges.extend(combinations(part, 2))
    return Hypergraph(2, n, edges)


def near_one_factorization(m: int) -> list[list[tuple[int, int]]]:
    """Round-robin (circle method) matching decomposition of K_m.

    Even m: m-1 perfect matchings. Odd m: m matchings of size (m-1)/2,
    vertex i sitting out round i. The matchings are pairwise
    edge-disjoint and cover K_m exactly.
    """
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    rounds = []
    if m % 2 == 0:
        c = m - 1
        for i in range(c):
            matching = [tuple(sorted((m - 1, i)))]
            for j in range(1, m // 2):
                matching.append(tuple(sorted(((i + j) % c, (i - j) % c))))
            rounds.append(matching)
    else:
        for i in range(m):
            matching = []
            for j in range(1, (m + 1) // 2):
                matching.append(tuple(sorted(((i + j) % m, (i - j) % m))))
            rounds.append(matching)
    return rounds


@dataclass(frozen=True)
class ColoredCompleteGraph:
    """Edge coloring of K_n by the lines of a projective plane.

    Vertices are divided into one class per plane point; a cross-class
    pair is colored by the unique line through the two class points, and
    pairs inside a class are colored by whole matchings assigned
    cyclically to the lines through the class point.
    """

    n: int
    r: int
    plane: ProjectivePlane
    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    line_of_class_pair: tuple[tuple[int, ...], ...]
    within_color: dict[tuple[int, int], int]

    @property
    def num_colors(self) -> int:
        return len(self.plane.lines)

    def color_of(self, u: int, v: int) -> int:
        if u == v:
            raise ValueError("pair must consist of two distinct vertices")
        if u > v:
            u, v = v, u
        cu, cv = self.class_of[u], self.class_of[v]
        if cu != cv:
            return self.line_of_class_pair[cu][cv]
        return self.within_color[(u, v)]

    def pair_colors(self):
        """Yield (u, v, color) over all vertex pairs."""
        for u, v in combinations(range(self.n), 2):
            yield u, v, self.color_of(u, v)

    def to_csv(self) -> str:
        rows = ["u,v,color"]
        rows.extend(f"{u},{v},{c}" for u, v, c in self.pair_colors())
        return "\n".join(rows) + "\n"


def projective_construction(n: int, r: int) -> tuple[Hypergraph, ColoredCompleteGraph]:
    """The plane-based coloring construction and its monochromatic-triangle 3-graph.

    Needs r >= 3 with a plane of order r-2 available and
    n >= r^2 - 3r + 3 (one vertex per class at minimum). The edges of the
    returned hypergraph are exactly the monochromatic triangles of the
    coloring, so every tight component is monochromatic and spans at most
    the r-1 classes of its color's line.
    """
    if not isinstance(r, int) or r < 3:
        raise ValueError(f"r must be an integer >= 3, got {r!r}")
    s = r - 2
    if not is_admissible_order(s):
        raise ValueError(f"r={r} is inadmissible: no projective plane of order {s}")
    ncls = r * r - 3 * r + 3
    if n < ncls:
        raise ValueError(f"need n >= {ncls} for r={r}, got n={n}")
    plane = projective_plane(s)
    assert plane.num_points == ncls

    classes = tuple(tuple(p) for p in _balanced_parts(n, ncls))
    class_of = [0] * n
    for ci, members in enumerate(classes):
        for v in members:
            class_of[v] = ci

    line_of = [[-1] * ncls for _ in range(ncls)]
    for li, pts in enumerate(plane.lines):
        for a, b in combinations(pts, 2):
            line_of[a][b] = line_of[b][a] = li

    edges: list[tuple[int, int, int]] = []

    # triangles across three distinct collinear classes
    for pts in plane.lines:
        for ca, cb, cc in combinations(pts, 3):
            edges.extend(product(classes[ca], classes[cb], classes[cc]))

    # within-class pair colorings, plus the triangles they create
    within_color: dict[tuple[int, int], int] = {}
    for ci, members in enumerate(classes):
        if len(members) < 2:
            continue
        lines_here = plane.lines_through[ci]
        local: list[tuple[int, int, int]] = []
        adj_by_line: dict[int, dict[int, set[int]]] = {}
        for t, matching in enumerate(near_one_factorization(len(members))):
            line = lines_here[t % (r - 1)]
            adj = adj_by_line.setdefault(line, {})
            for a, b in matching:
                u, v = members[a], members[b]
                if u > v:
                    u, v = v, u
                within_color[(u, v)] = line
                local.append((u, v, line))
                adj.setdefault(u, set()).add(v)
                adj.setdefault(v, set()).add(u)
        # a within-class pair of color c completes a triangle with every
        # vertex of the other classes on line c
        for u, v, line in local:
            for cj in plane.lines[line]:
                if cj != ci:
                    for z in classes[cj]:
                        edges.append((u, v, z))
        # monochromatic triangles inside the class
        for line, adj in adj_by_line.items():
            for u in adj:
                for v in adj[u]:
                    if v <= u:
                        continue
                    for w in adj[u] & adj[v]:
                        if w > v:
                            edges.append((u, v, w))

    h = Hypergraph(3, n, edges)
    coloring = ColoredCompleteGraph(
        n=n,
        r=r,
        plane=plane,
        class_of=tuple(class_of),
        classes=classes,
        line_of_class_pair=tuple(tuple(row) for row in line_of),
        within_color=within_color,
    )
    return h, coloring


def max_within_class_discrepancy(coloring: ColoredCompleteGraph) -> int:
    """Largest per-vertex difference between two color counts inside a class.

    The matching-based assignment keeps this at most 2.
    """
    worst = 0
    counts: dict[int, Counter] = {}
    for (u, v), line in coloring.within_color.items():
        counts.setdefault(u, Counter())[line] += 1
        counts.setdefault(v, Counter())[line] += 1
    for ci, members in enumerate(coloring.classes):
        if len(members) < 2:
            continue
        lines_here = coloring.plane.lines_through[ci]
        for x in members:
            per_line = [counts.get(x, Counter()).get(l, 0) for l in lines_here]
            worst = max(worst, max(per_line) - min(per_line))
    return worst


def verify_construction(n: int, r: int) -> dict:
    """Build the projective construction and measure it against its targets.

    Returns a report of the measured minimum codegree, tc, component
    structure, and coloring discrepancy, with exactness checks applied
    whenever their stated preconditions hold.
    """
    h, coloring = projective_construction(n, r)
    ncls = r * r - 3 * r + 3
    decomp = h.tight_components()

    per_color = [0] * ncls
    monochromatic = True
    span_ok = True
    class_counts = []
    for comp in decomp.components:
        e0 = h.edges[comp.edge_indices[0]]
        color = coloring.color_of(e0[0], e0[1])
        per_color[color] += 1
        for idx in comp.edge_indices:
            a, b, c = h.edges[idx]
            if not (
                coloring.color_of(a, b)
                == coloring.color_of(a, c)
                == coloring.color_of(b, c)
                == color
            ):
                monochromatic = False
        touched = {coloring.class_of[v] for v in comp.vertex_set}
        class_counts.append(len(touched))
        if not touched.issubset(coloring.plane.lines[color]):
            span_ok = False

    delta2 = h.min_codegree()
    cod_coeff = Fraction((r - 3) * (r - 1) + 2, (r - 1) * ncls)
    target = cod_coeff * n
    expected_tc = Fraction(r - 1, ncls) * n
    exactness_applies = n % ncls == 0 and all(c == 1 for c in per_color)
    tc = h.tc()

    report = {
        "n": n,
        "r": r,
        "num_classes": ncls,
        "class_sizes": [len(c) for c in coloring.classes],
        "num_edges": h.num_edges,
        "delta2": delta2,
        "codegree_target": target,
        "codegree_deficit": target - delta2,
        "tc": tc,
        "expected_tc": expected_tc,
        "tc_exactness_applies": exactness_applies,
        "tc_matches_formula": (tc == expected_tc) if exactness_applies else None,
        "num_components": len(decomp),
        "per_color_components": per_color,
        "components_monochromatic": monochromatic,
        "component_class_counts": class_counts,
        "components_within_color_classes": span_ok,
        "max_within_discrepancy": max_within_class_discrepancy(coloring),
    }
    report["passed"] = bool(
        monochromatic
        and span_ok
        and report["max_within_discrepancy"] <= 2
        and report["codegree_deficit"] >= 0
        and (report["tc_matches_formula"] is not False)
    )
    return report
