"""Brute-force oracles: exhaustive search, Mycroft check, connectivity sampling."""

import math

import pytest

from tightcomp import (
    complete_hypergraph,
    hypergraph_from_mask,
    max_codegree_with_tc_below,
    merge_search_outcomes,
    search_max_codegree_with_tc_below,
    verify_connectivity_prop,
    verify_mycroft,
)


def test_search_n5_t1_forces_edgeless():
    value, witness = max_codegree_with_tc_below(5, 1)
    assert value == 0
    assert witness.num_edges == 0


def test_search_n6_values():
    v6, w6 = max_codegree_with_tc_below(6, 6)
    assert v6 == 1
    assert w6.min_codegree() == 1
    assert w6.tc() < 6
    v5, w5 = max_codegree_with_tc_below(6, 5)
    assert v5 <= v6  # monotone in t
    assert v5 == 1
    assert w5.tc() < 5


def test_search_witness_reanalysis():
    outcome = search_max_codegree_with_tc_below(5, 4)
    w = outcome.witness()
    assert w.min_codegree() == outcome.value
    assert w.tc() < 4


def test_shard_merge_equals_full_run():
    full = search_max_codegree_with_tc_below(5, 5)
    for shards in (2, 4, 8):
        parts = [
            search_max_codegree_with_tc_below(5, 5, shards=shards, shard=s)
            for s in range(shards)
        ]
        merged = merge_search_outcomes(parts)
        assert (merged.value, merged.witness_mask) == (full.value, full.witness_mask)
        assert merged.checked == full.checked


def test_search_is_deterministic():
    a = search_max_codegree_with_tc_below(5, 3)
    b = search_max_codegree_with_tc_below(5, 3)
    assert (a.value, a.witness_mask) == (b.value, b.witness_mask)


def test_search_value_nondecreasing_in_t():
    values = [max_codegree_with_tc_below(5, t)[0] for t in range(1, 6)]
    assert values == sorted(values)


def test_search_cap(monkeypatch):
    with pytest.raises(ValueError, match="cap"):
        max_codegree_with_tc_below(9, 5)
    monkeypatch.setenv("TIGHTCOMP_MAX_N", "5")
    with pytest.raises(ValueError, match="cap"):
        max_codegree_with_tc_below(6, 6)
    monkeypatch.setenv("TIGHTCOMP_MAX_N", "banana")
    with pytest.raises(ValueError, match="TIGHTCOMP_MAX_N"):
        max_codegree_with_tc_below(6, 6)


def test_search_validation():
    with pytest.raises(ValueError):
        search_max_codegree_with_tc_below(5, 0)
    with pytest.raises(ValueError):
        search_max_codegree_with_tc_below(2, 1)
    with pytest.raises(ValueError, match="power of two"):
        search_max_codegree_with_tc_below(5, 5, shards=3)
    with pytest.raises(ValueError, match="shard index"):
        search_max_codegree_with_tc_below(5, 5, shards=2, shard=5)
    with pytest.raises(ValueError, match="samples"):
        search_max_codegree_with_tc_below(5, 5, mode="random")


def test_random_mode_bounded_by_exhaustive():
    exact = search_max_codegree_with_tc_below(5, 4)
    sampled = search_max_codegree_with_tc_below(
        5, 4, mode="random", samples=400, seed=11
    )
    assert sampled.value <= exact.value
    assert sampled.task.seed == 11
    again = search_max_codegree_with_tc_below(5, 4, mode="random", samples=400, seed=11)
    assert sampled.value == again.value
    assert sampled.witness_mask == again.witness_mask


def test_hypergraph_from_mask_round_trip():
    h = hypergraph_from_mask(5, 0b1011)
    assert h.num_edges == 3
    assert h.edges[0] == (0, 1, 2)


@pytest.mark.parametrize("n", [4, 5])
def test_mycroft_small(n):
    rep = verify_mycroft(n)
    assert rep["passed"]
    assert rep["violations"] == 0
    assert rep["graphs_enumerated"] == 2 ** math.comb(n, 3)


def test_mycroft_sharded_agrees():
    full = verify_mycroft(5)
    sharded = [verify_mycroft(5, shards=4, shard=s) for s in range(4)]
    assert sum(r["graphs_enumerated"] for r in sharded) == full["graphs_enumerated"]
    assert sum(r["graphs_meeting_codegree"] for r in sharded) == full["graphs_meeting_codegree"]
    assert all(r["passed"] for r in sharded)


def test_connectivity_proposition_sampled():
    rep = verify_connectivity_prop(8, 3, 50, seed=42)
    assert rep["passed"]
    assert rep["all_connected"]
    assert rep["split_w"] == {"expected_delta": 2, "delta": 2, "connected": False}
    assert rep["seed"] == 42


def test_connectivity_proposition_k4():
    rep = verify_connectivity_prop(8, 4, 20, seed=42)
    assert rep["passed"]
    assert rep["split_w"]["delta"] == 2
    assert not rep["split_w"]["connected"]


def test_connectivity_complete_graph_trivial():
    assert complete_hypergraph(3, 7).is_hypergraph_connected()


def test_connectivity_validation():
    with pytest.raises(ValueError):
        verify_connectivity_prop(2, 3, 5)
    with pytest.raises(ValueError):
        verify_connectivity_prop(8, 3, 0)
