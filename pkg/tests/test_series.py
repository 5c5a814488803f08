"""Unit tests for bounded series and lattice enumeration."""

from itertools import islice
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from triple_lattice.classify import brute_force_triples
from triple_lattice.core import (
    LatticeIndex,
    Triple,
    is_perfect_square,
    triple_from_lattice,
)
from triple_lattice.series import (
    diagonal_multiples,
    even_series,
    extended_enumerate,
    extended_enumerate_indexed,
    lattice_enumerate,
    lattice_enumerate_indexed,
    odd_series,
    platonic_family,
    pythagorean_family,
)


def as_tuples(stream):
    return [(t.a, t.b, t.c) for t in stream]


# ----------------------------------------------------------------- odd and even


def test_odd_series_golden():
    assert as_tuples(odd_series(1, 30)) == [(3, 4, 5), (5, 12, 13), (7, 24, 25)]
    assert as_tuples(odd_series(2, 50)) == [(15, 8, 17), (21, 20, 29), (27, 36, 45)]
    assert as_tuples(odd_series(1, 4)) == []


def test_even_series_golden():
    assert as_tuples(even_series(1, 40)) == [(3, 4, 5), (15, 8, 17), (35, 12, 37)]
    assert as_tuples(even_series(2, 60)) == [(5, 12, 13), (21, 20, 29), (45, 28, 53)]
    assert as_tuples(even_series(1, 4)) == []


def test_series_validate_arguments():
    with pytest.raises(ValueError):
        odd_series(0, 10)
    with pytest.raises(ValueError):
        even_series(1, 0)


@given(m=st.integers(1, 40), c_max=st.integers(1, 2000))
def test_odd_series_membership(m, c_max):
    for t in odd_series(m, c_max):
        assert t.c <= c_max
        assert t.c - t.b == (2 * m - 1) ** 2


@given(n=st.integers(1, 40), c_max=st.integers(1, 2000))
def test_even_series_membership(n, c_max):
    for t in even_series(n, c_max):
        assert t.c <= c_max
        assert t.c - t.a == 2 * n * n


# ------------------------------------------------------------- full lattice slice


def test_lattice_enumerate_golden():
    assert as_tuples(lattice_enumerate(17)) == [(3, 4, 5), (5, 12, 13), (15, 8, 17)]
    assert as_tuples(lattice_enumerate(5)) == [(3, 4, 5)]
    assert as_tuples(lattice_enumerate(30)) == [
        (3, 4, 5),
        (5, 12, 13),
        (15, 8, 17),
        (7, 24, 25),
        (21, 20, 29),
    ]
    assert as_tuples(lattice_enumerate(4)) == []


def test_lattice_enumerate_breaks_hypotenuse_ties_by_a():
    listing = as_tuples(lattice_enumerate(65))
    at_65 = [t for t in listing if t[2] == 65]
    assert at_65 == [(33, 56, 65), (63, 16, 65)]


def test_lattice_enumerate_indexed_pairs_match():
    for idx, t in lattice_enumerate_indexed(200):
        assert triple_from_lattice(idx) == t


@given(c_max=st.integers(1, 500))
def test_lattice_enumerate_ordering_and_uniqueness(c_max):
    listing = list(lattice_enumerate(c_max))
    keys = [(t.c, t.a) for t in listing]
    assert keys == sorted(keys)
    assert len(set(listing)) == len(listing)


def test_lattice_enumerate_matches_oracle_to_5000():
    # Independent route: exhaustive leg search filtered to one odd leg,
    # odd hypotenuse, and square hypotenuse-minus-even-leg.
    oracle = {
        t
        for t in brute_force_triples(5000)
        if t.a % 2 == 1 and t.b % 2 == 0 and t.c % 2 == 1
        and is_perfect_square(t.c - t.b)
    }
    assert set(lattice_enumerate(5000)) == oracle


def test_series_disjointness_small():
    sets = [set(odd_series(m, 1500)) for m in range(1, 9)]
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            assert not sets[i] & sets[j]


def test_odd_even_series_single_intersection():
    for m in range(1, 7):
        for n in range(1, 7):
            expected = triple_from_lattice(LatticeIndex(m, n))
            bound = expected.c + 100
            common = set(odd_series(m, bound)) & set(even_series(n, bound))
            assert common == {expected}


# ------------------------------------------------------------- extended lattice


def test_extended_enumerate_golden():
    assert as_tuples(extended_enumerate(13)) == [(3, 4, 5), (8, 6, 10), (5, 12, 13)]
    assert as_tuples(extended_enumerate(5)) == [(3, 4, 5)]
    assert as_tuples(extended_enumerate(20)) == [
        (3, 4, 5),
        (8, 6, 10),
        (5, 12, 13),
        (15, 8, 17),
        (12, 16, 20),
    ]


def test_extended_enumerate_matches_pair_search():
    expected = set()
    u = 2
    while u * u + 1 <= 300:
        for v in range(1, u):
            a, b, c = u * u - v * v, 2 * u * v, u * u + v * v
            if c <= 300:
                expected.add(Triple(a, b, c))
        u += 1
    assert set(extended_enumerate(300)) == expected


@given(c_max=st.integers(1, 400))
def test_extended_enumerate_ordering_and_uniqueness(c_max):
    listing = list(extended_enumerate(c_max))
    keys = [(t.c, t.a) for t in listing]
    assert keys == sorted(keys)
    assert len(set(listing)) == len(listing)


def test_extended_enumerate_indexed_carries_mu():
    seen = {(idx.mu, idx.n): t for idx, t in extended_enumerate_indexed(50)}
    assert (2, 1) in seen and seen[(2, 1)] == Triple(8, 6, 10)


# -------------------------------------------------------------------- families


@pytest.mark.parametrize("n,expected", [(1, (3, 4, 5)), (2, (5, 12, 13)), (3, (7, 24, 25))])
def test_pythagorean_family_golden(n, expected):
    t = pythagorean_family(n)
    assert (t.a, t.b, t.c) == expected


@pytest.mark.parametrize("m,expected", [(1, (3, 4, 5)), (2, (15, 8, 17)), (3, (35, 12, 37))])
def test_platonic_family_golden(m, expected):
    t = platonic_family(m)
    assert (t.a, t.b, t.c) == expected


@given(k=st.integers(1, 300))
def test_families_sit_on_lattice_edges(k):
    assert pythagorean_family(k) == triple_from_lattice(LatticeIndex(1, k))
    assert platonic_family(k) == triple_from_lattice(LatticeIndex(k, 1))


def test_family_overflow():
    with pytest.raises(OverflowError):
        pythagorean_family(2**32)


# -------------------------------------------------------------------- diagonal


def test_diagonal_multiples_golden():
    assert as_tuples(diagonal_multiples(50)) == [(3, 4, 5), (27, 36, 45)]
    assert as_tuples(diagonal_multiples(125)) == [
        (3, 4, 5),
        (27, 36, 45),
        (75, 100, 125),
    ]
    assert as_tuples(diagonal_multiples(4)) == []


def test_diagonal_multiples_are_square_scalings():
    for k, t in enumerate(islice(diagonal_multiples(10**6), 20), 1):
        p = 2 * k - 1
        assert (t.a, t.b, t.c) == (3 * p * p, 4 * p * p, 5 * p * p)
        assert gcd(gcd(t.a, t.b), t.c) == p * p
