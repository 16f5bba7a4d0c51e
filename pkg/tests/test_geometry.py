"""Finite fields and projective planes: exhaustive axiom checks."""

import pytest

from tightcomp import (
    Hypergraph,
    gf,
    is_admissible_order,
    is_prime_power,
    parse,
    projective_plane,
    verify_plane_axioms,
)

PRIME_POWERS_TO_CAP = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]


def test_gf5_is_integers_mod_5():
    f = gf(5)
    assert f.p == 5 and f.degree == 1
    for a in range(5):
        for b in range(5):
            assert f.add(a, b) == (a + b) % 5
            assert f.mul(a, b) == (a * b) % 5


def test_gf4_nonzero_elements_cube_to_one():
    f = gf(4)
    for a in range(1, 4):
        assert f.mul(f.mul(a, a), a) == 1


def test_gf_rejects_non_prime_powers():
    with pytest.raises(ValueError, match="not a prime power"):
        gf(6)
    with pytest.raises(ValueError, match="cap"):
        gf(64)


@pytest.mark.parametrize("q", PRIME_POWERS_TO_CAP)
def test_field_axioms_exhaustive(q):
    f = gf(q)
    elems = range(q)
    for a in elems:
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        assert f.mul(a, 0) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
        for b in elems:
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
    for a in elems:
        for b in elems:
            for c in elems:
                assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


@pytest.mark.parametrize("q", PRIME_POWERS_TO_CAP)
def test_multiplicative_group_cyclic(q):
    f = gf(q)
    g = f.multiplicative_generator()
    seen = set()
    x = 1
    for _ in range(q - 1):
        x = f.mul(x, g)
        seen.add(x)
    assert len(seen) == q - 1


def test_degenerate_plane():
    p = projective_plane(1)
    assert p.num_points == 3
    assert p.lines == ((0, 1), (0, 2), (1, 2))
    assert verify_plane_axioms(p).passed


def test_fano_plane():
    p = projective_plane(2)
    assert p.num_points == 7
    assert len(p.lines) == 7
    assert all(len(l) == 3 for l in p.lines)
    assert all(len(t) == 3 for t in p.lines_through)
    assert verify_plane_axioms(p).passed


def test_order_three_plane():
    p = projective_plane(3)
    assert p.num_points == 13
    assert len(p.lines) == 13
    assert all(len(l) == 4 for l in p.lines)
    assert verify_plane_axioms(p).passed


@pytest.mark.parametrize("s", [1, 2, 3, 4, 5, 7, 8, 9, 11])
def test_all_supported_planes_pass_axioms(s):
    assert verify_plane_axioms(projective_plane(s)).passed


@pytest.mark.parametrize("s", [1, 2, 3, 4])
def test_plane_duality(s):
    p = projective_plane(s)
    dual_lines = [tuple(p.lines_through[pt]) for pt in range(p.num_points)]
    assert verify_plane_axioms(dual_lines).passed


def test_line_through_pair_unique():
    p = projective_plane(3)
    for a in range(p.num_points):
        for b in range(a + 1, p.num_points):
            li = p.line_through(a, b)
            assert a in p.lines[li] and b in p.lines[li]


def test_unsupported_orders_rejected():
    for s in (0, 6, 10, -1):
        with pytest.raises(ValueError):
            projective_plane(s)


def test_axioms_fail_on_broken_structures():
    fano = projective_plane(2)
    missing = verify_plane_axioms(list(fano.lines)[:-1])
    assert not missing.passed
    names = {c.name: c.passed for c in missing.checks}
    assert not names["point pairs"] or not names["point degrees"]

    from itertools import combinations

    all_triples = list(combinations(range(7), 3))
    crowded = verify_plane_axioms(all_triples)
    assert not crowded.passed
    assert not [c for c in crowded.checks if c.name == "point pairs"][0].passed


def test_admissible_orders():
    assert is_admissible_order(0)
    assert is_admissible_order(1)
    assert is_admissible_order(8)
    assert not is_admissible_order(6)
    assert not is_admissible_order(10)
    assert not is_admissible_order(-3)
    assert is_prime_power(27)
    assert not is_prime_power(1)


def test_admissible_orders_uncapped():
    # the admissibility test is mathematical, independent of the field cap
    assert is_admissible_order(1024)
    assert is_admissible_order(29791)  # 31^3
    assert not is_admissible_order(1000)  # 2^3 * 5^3


def test_plane_serialization_round_trip():
    p = projective_plane(2)
    h = p.to_hypergraph()
    assert h.k == 3  # lines as edges, k = s + 1
    again = parse(h.serialize())
    assert again == h
    assert verify_plane_axioms(again).passed


def test_plane_axioms_accept_hypergraph_input():
    h = Hypergraph(3, 7, projective_plane(2).lines)
    assert verify_plane_axioms(h).passed
