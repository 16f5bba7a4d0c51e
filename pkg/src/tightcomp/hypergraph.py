"""k-uniform hypergraphs with codegree and tight-component analysis.

Two edges are tightly adjacent when they share k-1 vertices; tight
components are the connected classes of edges under that relation, and
tc(H) is the vertex count of the largest one.

All objects are immutable after construction and safe for concurrent
reads.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence


class FormatError(ValueError):
    """Malformed hypergraph text; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class TightComponent:
    edge_indices: tuple[int, ...]
    vertex_set: tuple[int, ...]
    vertex_count: int


@dataclass(frozen=True)
class TightDecomposition:
    """Partition of the edge list into tight components.

    Component ids run 0..c-1 in order of each component's smallest edge
    index (edges themselves are canonically sorted, so ids are stable).
    """

    component_of: tuple[int, ...]
    components: tuple[TightComponent, ...]

    def __len__(self) -> int:
        return len(self.components)


class _UnionFind:
    """Union-find with path compression and union by size."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size

    def find(self, a: int) -> int:
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]


class Hypergraph:
    """Immutable k-uniform (multi-)hypergraph on vertices 0..n-1.

    Edges are stored canonically: each edge sorted, the edge list sorted
    lexicographically, so serialization is deterministic. Without a
    `multiplicity` argument the hypergraph is simple and duplicate edges
    are rejected; with one, duplicates merge by summing counts.
    """

    def __init__(
        self,
        k: int,
        n: int,
        edges: Iterable[Sequence[int]],
        multiplicity: Sequence[int] | None = None,
    ):
        if not isinstance(k, int) or k < 2:
            raise ValueError(f"uniformity k must be an integer >= 2, got {k!r}")
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"vertex count n must be a nonnegative integer, got {n!r}")
        canon = []
        for raw in edges:
            e = tuple(sorted(raw))
            if len(e) != k:
                raise ValueError(f"edge {tuple(raw)} has {len(e)} vertices, expected {k}")
            if len(set(e)) != k:
                raise ValueError(f"edge {tuple(raw)} has a repeated vertex")
            if e[0] < 0 or e[-1] >= n:
                raise ValueError(f"edge {e} not within vertex range [0, {n})")
            canon.append(e)

        if multiplicity is None:
            self.simple = True
            seen = set()
            for e in canon:
                if e in seen:
                    raise ValueError(f"duplicate edge {e} in simple hypergraph")
                seen.add(e)
            canon.sort()
            self.edges: tuple[tuple[int, ...], ...] = tuple(canon)
            self.multiplicity: tuple[int, ...] = (1,) * len(canon)
        else:
            mults = list(multiplicity)
            if len(mults) != len(canon):
                raise ValueError("multiplicity list must match the edge list in length")
            self.simple = False
            counts: dict[tuple[int, ...], int] = {}
            for e, c in zip(canon, mults):
                if not isinstance(c, int) or c < 1:
                    raise ValueError(f"multiplicity must be a positive integer, got {c!r}")
                counts[e] = counts.get(e, 0) + c
            items = sorted(counts.items())
            self.edges = tuple(e for e, _ in items)
            self.multiplicity = tuple(c for _, c in items)

        self.k = k
        self.n = n
        self._decomposition: TightDecomposition | None = None

    # -- basic views -------------------------------------------------------

    @property
    def num_edges(self) -> int:
        """Number of distinct edges."""
        return len(self.edges)

    @property
    def total_multiplicity(self) -> int:
        """Edge count with multiplicity, e(H)."""
        return sum(self.multiplicity)

    def __repr__(self) -> str:
        kind = "Hypergraph" if self.simple else "MultiHypergraph"
        return f"<{kind} k={self.k} n={self.n} m={self.num_edges}>"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.k, self.n, self.edges, self.multiplicity) == (
            other.k,
            other.n,
            other.edges,
            other.multiplicity,
        )

    def __hash__(self):
        return hash((self.k, self.n, self.edges, self.multiplicity))

    # -- codegree ----------------------------------------------------------

    def codegree(self, subset: Iterable[int]) -> int:
        """Number of vertices extending the given (k-1)-set into an edge.

        Multiplicity is ignored: an extension counts once however many
        copies of the edge exist.
        """
        s = tuple(sorted(subset))
        if len(s) != self.k - 1 or len(set(s)) != self.k - 1:
            raise ValueError(f"expected {self.k - 1} distinct vertices, got {s}")
        for v in s:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} out of range [0, {self.n})")
        sset = set(s)
        return sum(1 for e in self.edges if sset.issubset(e))

    def min_codegree(self) -> int:
        """Minimum codegree over ALL (k-1)-subsets, uncovered ones counting 0."""
        if self.n < self.k:
            raise ValueError(f"min_codegree needs n >= k, got n={self.n}, k={self.k}")
        cod: Counter = Counter()
        for e in self.edges:
            for s in combinations(e, self.k - 1):
                cod[s] += 1
        if len(cod) < math.comb(self.n, self.k - 1):
            return 0
        return min(cod.values())

    # -- tight components --------------------------------------------------

    def tight_components(self) -> TightDecomposition:
        """Decompose the edge set into tight components.

        Edges are bucketed under each of their (k-1)-subsets and all edges
        in a bucket are unioned, which is exactly tight-walk reachability.
        """
        if self._decomposition is None:
            self._decomposition = self._decompose()
        return self._decomposition

    def _decompose(self) -> TightDecomposition:
        m = len(self.edges)
        uf = _UnionFind(m)
        first_with: dict[tuple[int, ...], int] = {}
        for i, e in enumerate(self.edges):
            for s in combinations(e, self.k - 1):
                j = first_with.setdefault(s, i)
                if j != i:
                    uf.union(i, j)
        comp_of_root: dict[int, int] = {}
        component_of = [0] * m
        members: list[list[int]] = []
        for i in range(m):
            root = uf.find(i)
            cid = comp_of_root.setdefault(root, len(comp_of_root))
            component_of[i] = cid
            if cid == len(members):
                members.append([])
            members[cid].append(i)
        components = []
        for idxs in members:
            verts: set[int] = set()
            for i in idxs:
                verts.update(self.edges[i])
            components.append(
                TightComponent(tuple(idxs), tuple(sorted(verts)), len(verts))
            )
        return TightDecomposition(tuple(component_of), tuple(components))

    def tc(self) -> int:
        """Vertex count of the largest tight component (0 if edgeless)."""
        comps = self.tight_components().components
        return max((c.vertex_count for c in comps), default=0)

    def is_hypergraph_connected(self) -> bool:
        """Whether every two (k-1)-sets are joined by a tight walk.

        Equivalent to: every (k-1)-set is covered by some edge and there
        is exactly one tight component.
        """
        if self.n < self.k:
            raise ValueError(f"connectivity needs n >= k, got n={self.n}, k={self.k}")
        return self.min_codegree() >= 1 and len(self.tight_components()) == 1

    # -- link --------------------------------------------------------------

    def link(self, v: int) -> "Hypergraph":
        """(k-1)-graph of the sets forming an edge with v, relabeled 0..n-2."""
        if self.k == 2:
            raise ValueError("link is only defined for k >= 3")
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range [0, {self.n})")
        edges = []
        mults = []
        for e, c in zip(self.edges, self.multiplicity):
            if v in e:
                edges.append(tuple(u if u < v else u - 1 for u in e if u != v))
                mults.append(c)
        return Hypergraph(
            self.k - 1, self.n - 1, edges, None if self.simple else mults
        )

    # -- text format ---------------------------------------------------------

    def serialize(self) -> str:
        """Canonical text form: header "k n m", then one edge per line."""
        lines = [f"{self.k} {self.n} {len(self.edges)}"]
        for e, c in zip(self.edges, self.multiplicity):
            row = " ".join(str(v) for v in e)
            if c > 1:
                row += f":{c}"
            lines.append(row)
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "Hypergraph":
        """Parse the text format; see `serialize`. '#' lines are comments."""
        header: tuple[int, int, int] | None = None
        edges: list[tuple[int, ...]] = []
        mults: list[int] = []
        any_mult = False
        dup: tuple[int, tuple[int, ...]] | None = None
        seen: set[tuple[int, ...]] = set()
        last_line = 0
        for lineno, raw in enumerate(text.splitlines(), 1):
            last_line = lineno
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if header is None:
                parts = line.split()
                if len(parts) != 3:
                    raise FormatError("header must be 'k n m'", lineno)
                try:
                    k, n, m = (int(p) for p in parts)
                except ValueError:
                    raise FormatError("header fields must be integers", lineno) from None
                if k < 2:
                    raise FormatError(f"uniformity k must be >= 2, got {k}", lineno)
                if n < 0 or m < 0:
                    raise FormatError("n and m must be nonnegative", lineno)
                header = (k, n, m)
                continue
            k, n, m = header
            if len(edges) >= m:
                raise FormatError(f"more than the declared {m} edges", lineno)
            body, colon, tail = line.partition(":")
            c = 1
            if colon:
                try:
                    c = int(tail.strip())
                except ValueError:
                    raise FormatError(f"bad multiplicity {tail.strip()!r}", lineno) from None
                if c < 1:
                    raise FormatError(f"multiplicity must be >= 1, got {c}", lineno)
                any_mult = True
            parts = body.split()
            if len(parts) != k:
                raise FormatError(f"expected {k} vertices, got {len(parts)}", lineno)
            try:
                vs = tuple(int(p) for p in parts)
            except ValueError:
                raise FormatError("vertex indices must be integers", lineno) from None
            for u in vs:
                if not 0 <= u < n:
                    raise FormatError(f"vertex {u} out of range", lineno)
            if len(set(vs)) != k:
                raise FormatError("repeated vertex in edge", lineno)
            key = tuple(sorted(vs))
            if key in seen and dup is None:
                dup = (lineno, key)
            seen.add(key)
            edges.append(key)
            mults.append(c)
        if header is None:
            raise FormatError("missing header", max(last_line, 1))
        k, n, m = header
        if len(edges) != m:
            raise FormatError(
                f"expected {m} edges, found {len(edges)}", max(last_line, 1)
            )
        if not any_mult and dup is not None:
            lineno, key = dup
            raise FormatError(f"duplicate edge {' '.join(map(str, key))}", lineno)
        return cls(k, n, edges, mults if any_mult else None)


def parse(text: str) -> Hypergraph:
    """Module-level alias for Hypergraph.parse."""
    return Hypergraph.parse(text)


def serialize(h: Hypergraph) -> str:
    """Module-level alias for Hypergraph.serialize."""
    return h.serialize()


def complete_hypergraph(k: int, n: int) -> Hypergraph:
    """All k-subsets of 0..n-1."""
    return Hypergraph(k, n, combinations(range(n), k))
