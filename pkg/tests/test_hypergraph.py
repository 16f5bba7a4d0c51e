"""Core hypergraph operations against brute-force oracles."""

import random
from itertools import combinations

import pytest

from tightcomp import (
    FormatError,
    Hypergraph,
    complete_hypergraph,
    parse,
    serialize,
    three_part,
)

from conftest import bfs_tight_components, brute_codegree, random_hypergraph


# -- codegree ---------------------------------------------------------------


def test_codegree_complete():
    h = complete_hypergraph(3, 5)
    assert h.codegree((0, 1)) == 3


def test_codegree_two_edges():
    h = Hypergraph(3, 4, [(0, 1, 2), (0, 1, 3)])
    assert h.codegree((0, 1)) == 2
    assert h.codegree((2, 3)) == 0


def test_codegree_three_part_in_part_pair():
    # any pair inside one part of three_part(9) extends 4 ways:
    # one in-part completion plus the three next-part vertices
    h = three_part(9)
    for pair in [(0, 1), (1, 2), (3, 5), (6, 8)]:
        assert h.codegree(pair) == 4
        assert brute_codegree(h, pair) == 4


def test_codegree_errors():
    h = complete_hypergraph(3, 5)
    with pytest.raises(ValueError):
        h.codegree((0,))
    with pytest.raises(ValueError):
        h.codegree((0, 1, 2))
    with pytest.raises(ValueError):
        h.codegree((0, 7))
    with pytest.raises(ValueError):
        h.codegree((2, 2))


def test_min_codegree():
    assert complete_hypergraph(3, 6).min_codegree() == 4
    assert three_part(9).min_codegree() == 2
    assert Hypergraph(3, 4, [(0, 1, 2)]).min_codegree() == 0  # pair {0,3} uncovered


def test_min_codegree_requires_enough_vertices():
    with pytest.raises(ValueError):
        Hypergraph(3, 2, []).min_codegree()


def test_min_codegree_matches_oracle(rng):
    for _ in range(100):
        h = random_hypergraph(rng, 6, 3, 10)
        expected = min(brute_codegree(h, s) for s in combinations(range(6), 2))
        assert h.min_codegree() == expected


# -- tight components ---------------------------------------------------------


def test_components_shared_pair():
    h = Hypergraph(3, 6, [(0, 1, 2), (1, 2, 3), (3, 4, 5)])
    decomp = h.tight_components()
    assert len(decomp) == 2
    assert decomp.components[0].edge_indices == (0, 1)
    assert decomp.components[0].vertex_set == (0, 1, 2, 3)
    assert decomp.components[1].edge_indices == (2,)
    assert decomp.component_of == (0, 0, 1)


def test_components_complete_k4():
    h = complete_hypergraph(3, 4)
    decomp = h.tight_components()
    assert len(decomp) == 1
    assert decomp.components[0].vertex_count == 4
    assert len(decomp.components[0].edge_indices) == 4


def test_components_three_part_nine():
    decomp = three_part(9).tight_components()
    assert len(decomp) == 3
    assert [c.vertex_count for c in decomp.components] == [6, 6, 6]


def test_component_invariants(rng):
    for _ in range(50):
        h = random_hypergraph(rng, 7, 3, 12)
        decomp = h.tight_components()
        seen = set()
        for cid, comp in enumerate(decomp.components):
            for i in comp.edge_indices:
                assert decomp.component_of[i] == cid
                assert i not in seen
                seen.add(i)
            union = set()
            for i in comp.edge_indices:
                union.update(h.edges[i])
            assert comp.vertex_set == tuple(sorted(union))
        assert len(seen) == h.num_edges
        # ids ordered by smallest edge index
        firsts = [c.edge_indices[0] for c in decomp.components]
        assert firsts == sorted(firsts)


def test_components_match_bfs_oracle_bulk():
    # randomized equivalence against the explicit edge-adjacency BFS;
    # >= 10^4 instances over all simple 3-graphs with n <= 6, <= 8 edges
    rng = random.Random(20250808)
    for trial in range(10_000):
        n = rng.randint(3, 6)
        h = random_hypergraph(rng, n, 3, 8)
        decomp = h.tight_components()
        oracle = bfs_tight_components(h)
        got = sorted(tuple(c.edge_indices) for c in decomp.components)
        want = sorted(tuple(c["edges"]) for c in oracle)
        assert got == want, f"trial {trial}: {h.edges}"


def test_tc_values():
    assert Hypergraph(3, 10, []).tc() == 0
    assert three_part(9).tc() == 6


def test_monotonicity_under_edge_addition(rng):
    # tc never decreases when an edge is added; the component count can
    # grow only when the new edge is tightly isolated, and then by one
    for _ in range(300):
        n = rng.randint(4, 7)
        h = random_hypergraph(rng, n, 3, 10)
        pool = [t for t in combinations(range(n), 3) if t not in set(h.edges)]
        if not pool:
            continue
        extra = rng.choice(pool)
        bigger = Hypergraph(3, n, list(h.edges) + [extra])
        assert bigger.tc() >= h.tc()
        before, after = len(h.tight_components()), len(bigger.tight_components())
        if any(len(set(extra) & set(e)) == 2 for e in h.edges):
            assert after <= before
        else:
            assert after == before + 1


# -- connectivity --------------------------------------------------------------


def test_connected_complete():
    assert complete_hypergraph(3, 5).is_hypergraph_connected()


def test_connected_requires_n_at_least_k():
    with pytest.raises(ValueError):
        Hypergraph(3, 2, []).is_hypergraph_connected()


def test_edgeless_not_connected():
    assert not Hypergraph(3, 5, []).is_hypergraph_connected()


# -- link ----------------------------------------------------------------------


def test_link_of_complete():
    link = complete_hypergraph(3, 5).link(0)
    assert link.k == 2
    assert link.n == 4
    assert link.num_edges == 6  # complete graph on the other four


def test_link_relabels():
    h = Hypergraph(3, 4, [(0, 1, 2), (0, 1, 3)])
    link = h.link(0)
    assert link.edges == ((0, 1), (0, 2))


def test_link_three_part_nine():
    # vertex 0 sits in 10 edges of three_part(9): its in-part triple, six
    # 2-in-part extensions into the next part, and three edges where its
    # part receives the single vertex
    link = three_part(9).link(0)
    assert link.n == 8
    assert link.num_edges == 10


def test_link_requires_k_three():
    with pytest.raises(ValueError):
        Hypergraph(2, 3, [(0, 1)]).link(0)
    with pytest.raises(ValueError):
        complete_hypergraph(3, 4).link(7)


def test_link_codegree_inherited(rng):
    # removing an apex cannot lower the minimum codegree of the link below
    # the original minimum codegree
    for _ in range(60):
        h = random_hypergraph(rng, 6, 3, 14)
        d = h.min_codegree()
        for v in range(h.n):
            link = h.link(v)
            if link.n >= link.k:
                assert link.min_codegree() >= d


def test_link_components_map_into_parent_components(rng):
    for _ in range(100):
        h = random_hypergraph(rng, 7, 3, 12)
        for v in range(h.n):
            link = h.link(v)
            if link.num_edges == 0:
                continue
            back = lambda u: u if u < v else u + 1
            parent = h.tight_components()
            for comp in link.tight_components().components:
                mapped = {back(u) for u in comp.vertex_set} | {v}
                assert any(
                    mapped <= set(pc.vertex_set) for pc in parent.components
                )
            assert h.tc() >= link.tc() + 1


# -- parse / serialize ----------------------------------------------------------


def test_parse_basic():
    h = parse("3 4 1\n0 1 2\n")
    assert (h.k, h.n, h.edges) == (3, 4, ((0, 1, 2),))


def test_round_trip_is_canonical():
    messy = "# comment\n3 5 3\n2 1 0\n0 1 3:1\n\n4 3 2\n"
    assert serialize(parse(messy)) == "3 5 3\n0 1 2\n0 1 3\n2 3 4\n"


def test_serialize_parse_identity(rng):
    for _ in range(50):
        h = random_hypergraph(rng, 7, 3, 15)
        assert parse(serialize(h)) == h


def test_multiplicity_round_trip():
    h = Hypergraph(3, 4, [(0, 1, 2), (0, 1, 3)], [2, 1])
    text = h.serialize()
    assert "0 1 2:2" in text
    again = parse(text)
    assert again.total_multiplicity == 3


def test_parse_out_of_range_vertex():
    with pytest.raises(FormatError) as err:
        parse("3 4 1\n0 1 5\n")
    assert "vertex 5 out of range" in str(err.value)
    assert err.value.line == 2


def test_parse_errors():
    with pytest.raises(FormatError, match="header"):
        parse("3 4\n")
    with pytest.raises(FormatError, match="duplicate edge"):
        parse("3 4 2\n0 1 2\n2 1 0\n")
    with pytest.raises(FormatError, match="expected 3 vertices"):
        parse("3 4 1\n0 1\n")
    with pytest.raises(FormatError, match="expected 2 edges"):
        parse("3 4 2\n0 1 2\n")
    with pytest.raises(FormatError, match="multiplicity"):
        parse("3 4 1\n0 1 2:0\n")
    with pytest.raises(FormatError, match="repeated vertex"):
        parse("3 4 1\n0 1 1\n")


def test_duplicate_edges_merge_in_multigraph():
    h = parse("3 4 2\n0 1 2:2\n0 1 2:3\n")
    assert h.num_edges == 1
    assert h.multiplicity == (5,)


def test_constructor_validation():
    with pytest.raises(ValueError):
        Hypergraph(1, 3, [])
    with pytest.raises(ValueError):
        Hypergraph(3, 3, [(0, 1)])
    with pytest.raises(ValueError):
        Hypergraph(3, 3, [(0, 1, 3)])
    with pytest.raises(ValueError):
        Hypergraph(3, 4, [(0, 1, 2), (2, 1, 0)])
