"""Shared fixtures and independent oracles for the test suite.

The oracles deliberately avoid the library's own algorithms: component
structure is recomputed by breadth-first search over the edge-adjacency
graph, and codegrees by direct membership counting, so the fast paths
are checked against something that cannot share their bugs.
"""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from tightcomp import Hypergraph


def bfs_tight_components(h: Hypergraph) -> list[dict]:
    """Components of the edge-adjacency relation |e & f| = k-1, via BFS."""
    edges = [set(e) for e in h.edges]
    m = len(edges)
    seen = [False] * m
    comps = []
    for start in range(m):
        if seen[start]:
            continue
        queue = [start]
        seen[start] = True
        members = []
        while queue:
            cur = queue.pop()
            members.append(cur)
            for other in range(m):
                if not seen[other] and len(edges[cur] & edges[other]) == h.k - 1:
                    seen[other] = True
                    queue.append(other)
        verts = set()
        for i in members:
            verts |= edges[i]
        comps.append({"edges": sorted(members), "vertices": verts})
    return comps


def brute_codegree(h: Hypergraph, subset) -> int:
    """Count extensions by scanning every vertex against the edge set."""
    edge_set = set(h.edges)
    s = set(subset)
    count = 0
    for v in range(h.n):
        if v not in s and tuple(sorted(s | {v})) in edge_set:
            count += 1
    return count


def random_hypergraph(rng: random.Random, n: int, k: int, max_edges: int) -> Hypergraph:
    pool = list(combinations(range(n), k))
    m = rng.randint(0, min(max_edges, len(pool)))
    return Hypergraph(k, n, rng.sample(pool, m))


@pytest.fixture
def rng():
    return random.Random(0xC0DE6)
