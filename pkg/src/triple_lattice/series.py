"""Bounded, ordered streaming of triple series and whole lattice slices.

Streams are plain single-consumer iterators.  The canonical order for
merged slices is hypotenuse ascending, ties broken by the odd leg
ascending; per-column streams are already c-ascending, so slices come out
of a lazy k-way merge.
"""

from __future__ import annotations

import heapq
from collections.abc import Iterator
from math import isqrt

from .core import (
    ExtendedIndex,
    LatticeIndex,
    Triple,
    extended_triple,
    triple_from_lattice,
)

__all__ = [
    "MIN_HYPOTENUSE",
    "odd_series",
    "even_series",
    "lattice_enumerate",
    "lattice_enumerate_indexed",
    "extended_enumerate",
    "extended_enumerate_indexed",
    "pythagorean_family",
    "platonic_family",
    "diagonal_multiples",
]

#: Hypotenuse of the smallest triple; bounds below it yield empty streams.
MIN_HYPOTENUSE = 5


def _require_positive(name: str, value: int) -> None:
    if not isinstance(value, int):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if value < 1:
        raise ValueError(f"{name} must be >= 1, got {value}")


def _column(m: int, c_max: int) -> Iterator[tuple[LatticeIndex, Triple]]:
    n = 1
    while True:
        idx = LatticeIndex(m, n)
        t = triple_from_lattice(idx)
        if t.c > c_max:
            return
        yield idx, t
        n += 1


def _row(n: int, c_max: int) -> Iterator[tuple[LatticeIndex, Triple]]:
    m = 1
    while True:
        idx = LatticeIndex(m, n)
        t = triple_from_lattice(idx)
        if t.c > c_max:
            return
        yield idx, t
        m += 1


def _extended_column(mu: int, c_max: int) -> Iterator[tuple[ExtendedIndex, Triple]]:
    n = 1
    while True:
        idx = ExtendedIndex(mu, n)
        t = extended_triple(idx)
        if t.c > c_max:
            return
        yield idx, t
        n += 1


def odd_series(m: int, c_max: int) -> Iterator[Triple]:
    """Stream the triples with c - b = (2m-1)^2 and c <= c_max, c ascending."""
    _require_positive("m", m)
    _require_positive("c_max", c_max)
    return (t for _, t in _column(m, c_max))


def even_series(n: int, c_max: int) -> Iterator[Triple]:
    """Stream the triples with c - a = 2n^2 and c <= c_max, c ascending."""
    _require_positive("n", n)
    _require_positive("c_max", c_max)
    return (t for _, t in _row(n, c_max))


def lattice_enumerate_indexed(c_max: int) -> Iterator[tuple[LatticeIndex, Triple]]:
    """Stream every lattice triple with c <= c_max along with its (m, n).

    Order: c ascending, then a ascending.  Column m joins the merge iff its
    head triple at n = 1 fits, i.e. 4m^2 + 1 <= c_max.
    """
    _require_positive("c_max", c_max)
    m_top = isqrt((c_max - 1) // 4)
    columns = (_column(m, c_max) for m in range(1, m_top + 1))
    return heapq.merge(*columns, key=lambda pair: (pair[1].c, pair[1].a))


def lattice_enumerate(c_max: int) -> Iterator[Triple]:
    """Stream every lattice triple with c <= c_max, c ascending then a."""
    return (t for _, t in lattice_enumerate_indexed(c_max))


def extended_enumerate_indexed(c_max: int) -> Iterator[tuple[ExtendedIndex, Triple]]:
    """Stream every Euclid-form triple with c <= c_max along with its (mu, n).

    Same ordering rule as lattice_enumerate_indexed; column mu joins iff its
    head at n = 1 fits, i.e. mu^2 + 2mu + 2 <= c_max.
    """
    _require_positive("c_max", c_max)
    mu_top = isqrt(c_max - 1) - 1
    columns = (_extended_column(mu, c_max) for mu in range(1, mu_top + 1))
    return heapq.merge(*columns, key=lambda pair: (pair[1].c, pair[1].a))


def extended_enumerate(c_max: int) -> Iterator[Triple]:
    """Stream every Euclid-form triple with c <= c_max, c ascending then a."""
    return (t for _, t in extended_enumerate_indexed(c_max))


def pythagorean_family(n: int) -> Triple:
    """The m = 1 column member (2n+1, 2n^2+2n, 2n^2+2n+1)."""
    _require_positive("n", n)
    return Triple(2 * n + 1, 2 * n * n + 2 * n, 2 * n * n + 2 * n + 1)


def platonic_family(m: int) -> Triple:
    """The n = 1 row member (4m^2-1, 4m, 4m^2+1)."""
    _require_positive("m", m)
    return Triple(4 * m * m - 1, 4 * m, 4 * m * m + 1)


def diagonal_multiples(c_max: int) -> Iterator[Triple]:
    """Stream the n = 2m-1 diagonal: the k-th element is (2k-1)^2 * (3, 4, 5)."""
    _require_positive("c_max", c_max)

    def gen() -> Iterator[Triple]:
        m = 1
        while True:
            t = triple_from_lattice(LatticeIndex(m, 2 * m - 1))
            if t.c > c_max:
                return
            yield t
            m += 1

    return gen()
