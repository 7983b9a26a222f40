"""Hole search and the hole-number, anchored to the naive double enumeration."""
import pytest
from hypothesis import given, settings

from biphole import (
    HoleWitness,
    SizeGuardError,
    bipartite_hole_number,
    complete,
    cycle,
    empty,
    find_hole,
    has_hole,
    hole_number,
    independence_number,
    min_closed_neighborhood,
    naive_hole_number,
    naive_hole_oracle,
    path,
    petersen,
    validate_certificate,
)

from conftest import graphs, seeded_graphs


def test_min_closed_neighborhood():
    value, argmin = min_closed_neighborhood(cycle(5), 2)
    assert value == 4 and argmin == {0, 1}
    assert min_closed_neighborhood(complete(4), 1) == (4, frozenset({0}))
    assert min_closed_neighborhood(empty(5), 2) == (2, frozenset({0, 1}))
    with pytest.raises(ValueError):
        min_closed_neighborhood(empty(5), 0)


def test_find_hole_examples():
    w = find_hole(cycle(5), 1, 2)
    assert w == HoleWitness(frozenset({0}), frozenset({2, 3}))
    assert w.is_valid(cycle(5))
    assert find_hole(complete(4), 1, 1) is None
    assert find_hole(cycle(5), 2, 2) is None


def test_find_hole_swapped_sides():
    w = find_hole(cycle(5), 2, 1)
    assert w is not None and w.sizes == (2, 1)
    assert w.is_valid(cycle(5))


def test_hole_number_spot_values():
    # Each value double-checked by the naive oracle before being pinned.
    for g, expected in [
        (complete(4), 1),
        (path(3), 2),
        (cycle(5), 3),
        (petersen(), 5),
        (empty(3), 3),
        (empty(1), 1),
    ]:
        assert naive_hole_number(g) == expected
        assert hole_number(g) == expected


def test_certificates():
    for g in [complete(4), path(3), cycle(5), empty(4), petersen()]:
        cert = bipartite_hole_number(g)
        assert validate_certificate(g, cert)
        assert cert.value == hole_number(g)
        s, t = cert.hole_free_pair
        assert 1 <= s <= t and s + t == cert.value + 1
        assert len(cert.level_witnesses) == cert.value - 1


def test_certificate_smallest_s_first():
    assert bipartite_hole_number(cycle(5)).hole_free_pair == (1, 3)
    assert bipartite_hole_number(complete(4)).hole_free_pair == (1, 1)


def test_naive_oracle_examples():
    assert naive_hole_oracle(complete(4), 1, 1) is None
    w = naive_hole_oracle(empty(4), 2, 2)
    assert w == HoleWitness(frozenset({0, 1}), frozenset({2, 3}))


def test_naive_oracle_size_guard():
    with pytest.raises(SizeGuardError):
        naive_hole_oracle(empty(15), 1, 1)
    assert naive_hole_oracle(empty(15), 1, 1, max_n=15) is not None


@given(graphs(min_n=1, max_n=7))
@settings(max_examples=120, deadline=None)
def test_find_hole_agrees_with_naive(g):
    for s in range(1, g.n + 1):
        for t in range(1, g.n - s + 1):
            fast = find_hole(g, s, t)
            slow = naive_hole_oracle(g, s, t)
            assert (fast is None) == (slow is None)
            if fast is not None:
                assert fast.is_valid(g) and fast.sizes == (s, t)


@given(graphs(min_n=1, max_n=8))
@settings(max_examples=100, deadline=None)
def test_symmetry(g):
    for s in range(1, g.n + 1):
        for t in range(s, g.n - s + 1):
            assert has_hole(g, s, t) == has_hole(g, t, s)


@given(graphs(min_n=1, max_n=8))
@settings(max_examples=100, deadline=None)
def test_characterization_by_min_closed_neighborhood(g):
    for s in range(1, g.n):
        for t in range(1, g.n - s + 1):
            expected = min_closed_neighborhood(g, s)[0] <= g.n - t
            assert has_hole(g, s, t) == expected


@given(graphs(min_n=2, max_n=8))
@settings(max_examples=100, deadline=None)
def test_monotone_under_edge_addition(g):
    base = hole_number(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v):
                assert hole_number(g.add_edge(u, v)) <= base
                break
        else:
            continue
        break


@given(graphs(min_n=1, max_n=8))
@settings(max_examples=100, deadline=None)
def test_range_and_independence_bound(g):
    value = hole_number(g)
    assert 1 <= value <= g.n
    assert value >= independence_number(g)
    if g.n >= 2:
        assert (value == 1) == g.is_complete()


def test_random_agreement_with_naive():
    for g in seeded_graphs(60, 9, seed=5):
        assert hole_number(g) == naive_hole_number(g)
