"""Membership classification against the chain P > E > C > P0.

P is the set of all Pythagorean triples, E those of the Euclid form
(u^2-v^2, 2uv, u^2+v^2), C the Euclid triples with one odd leg and odd
hypotenuse (the lattice domain), and P0 the primitive triples.  Each
inclusion is strict.

brute_force_triples is the independent ground truth used by verify_chain
and by the acceptance tests: a plain double loop over legs with an exact
square lookup for the hypotenuse, no lattice machinery involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .core import (
    EuclidParams,
    LatticeIndex,
    Triple,
    canonicalize,
    euclid_params_from_triple,
    is_primitive_lattice,
    lattice_from_triple,
)
from .series import MIN_HYPOTENUSE, extended_enumerate, lattice_enumerate_indexed

__all__ = [
    "DEFAULT_ORACLE_CEILING",
    "BoundTooLarge",
    "ClassReport",
    "ChainReport",
    "classify",
    "brute_force_triples",
    "verify_chain",
]

#: Largest hypotenuse bound the O(c_max^2) oracle will accept by default.
DEFAULT_ORACLE_CEILING = 10_000


class BoundTooLarge(ValueError):
    """Requested bound exceeds the configured oracle ceiling."""


@dataclass(frozen=True)
class ClassReport:
    """Membership flags for one candidate triple, plus recovered parameters.

    The flags always satisfy in_P0 => in_C => in_E => in_P.  lattice is
    present iff in_C, euclid iff in_E, and triple/scale iff in_P; triple is
    the canonically oriented input and scale its gcd (1 for primitives).
    """

    in_P: bool
    in_E: bool
    in_C: bool
    in_P0: bool
    lattice: LatticeIndex | None = None
    euclid: EuclidParams | None = None
    scale: int | None = None
    triple: Triple | None = None


def classify(x: int, y: int, z: int) -> ClassReport:
    """Classify three positive integers, in any order, against the chain.

    The largest value is taken as the candidate hypotenuse and both leg
    orientations are tried where orientation matters.  A non-Pythagorean
    candidate yields a report with every flag false, never an exception.
    """
    for name, value in (("x", x), ("y", y), ("z", z)):
        if not isinstance(value, int):
            raise TypeError(f"{name} must be an int, got {type(value).__name__}")
        if value < 1:
            raise ValueError(f"{name} must be >= 1, got {value}")
    lo, mid, hi = sorted((x, y, z))
    if lo * lo + mid * mid != hi * hi:
        return ClassReport(in_P=False, in_E=False, in_C=False, in_P0=False)
    t = canonicalize(Triple(lo, mid, hi))
    scale = gcd(gcd(t.a, t.b), t.c)
    params = euclid_params_from_triple(t)
    in_e = params is not None
    in_c = in_e and (t.a + t.b) % 2 == 1 and t.c % 2 == 1
    return ClassReport(
        in_P=True,
        in_E=in_e,
        in_C=in_c,
        in_P0=scale == 1,
        lattice=lattice_from_triple(t) if in_c else None,
        euclid=params,
        scale=scale,
        triple=t,
    )


def brute_force_triples(
    c_max: int, oracle_ceiling: int = DEFAULT_ORACLE_CEILING
) -> set[Triple]:
    """Every Pythagorean triple with c <= c_max, by exhaustive leg search.

    Triples are stored canonically: odd leg in position a when the leg
    parities differ, legs ascending otherwise.  Raises BoundTooLarge when
    c_max exceeds oracle_ceiling.
    """
    if not isinstance(c_max, int) or c_max < 1:
        raise ValueError(f"c_max must be a positive integer, got {c_max!r}")
    if c_max > oracle_ceiling:
        raise BoundTooLarge(
            f"c_max = {c_max} exceeds the oracle ceiling {oracle_ceiling}"
        )
    squares = {c * c: c for c in range(1, c_max + 1)}
    limit = c_max * c_max
    found: set[Triple] = set()
    for x in range(1, c_max):
        xx = x * x
        if xx + xx > limit:
            break
        for y in range(x, c_max):
            s = xx + y * y
            if s > limit:
                break
            c = squares.get(s)
            if c is not None:
                found.add(canonicalize(Triple(x, y, c)))
    return found


@dataclass(frozen=True)
class ChainReport:
    """Outcome of one chain verification run.

    Witnesses are the (c, a)-smallest member of each strict-inclusion gap,
    or None when the bound is too small for the gap to be populated; the
    E-minus-C witness keeps the Euclid formula orientation.  An empty
    discrepancies tuple means every cross-route check agreed.
    """

    c_max: int
    count_P: int
    count_E: int
    count_C: int
    count_P0: int
    witness_P_not_E: Triple | None
    witness_E_not_C: Triple | None
    witness_C_not_P0: Triple | None
    discrepancies: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.discrepancies


def _smallest(triples) -> Triple | None:
    return min(triples, key=lambda t: (t.c, t.a), default=None)


def verify_chain(
    c_max: int, oracle_ceiling: int = DEFAULT_ORACLE_CEILING
) -> ChainReport:
    """Rebuild the four sets up to c_max by independent routes and compare.

    P and P0 come from the brute-force oracle, E from the extended
    enumeration, C from the lattice enumeration.  Any inclusion failure or
    cross-route disagreement lands in the discrepancy list rather than
    raising; only bound errors raise.
    """
    if not isinstance(c_max, int) or c_max < MIN_HYPOTENUSE:
        raise ValueError(f"c_max must be an integer >= {MIN_HYPOTENUSE}, got {c_max!r}")
    p_set = brute_force_triples(c_max, oracle_ceiling)
    p0_set = {t for t in p_set if gcd(gcd(t.a, t.b), t.c) == 1}
    e_formula = list(extended_enumerate(c_max))
    e_set = {canonicalize(t) for t in e_formula}
    c_pairs = list(lattice_enumerate_indexed(c_max))
    c_set = {t for _, t in c_pairs}

    discrepancies: list[str] = []

    def leak(kind: str, extras: set[Triple]) -> None:
        if extras:
            sample = _smallest(extras)
            discrepancies.append(
                f"{len(extras)} {kind}, e.g. ({sample.a}, {sample.b}, {sample.c})"
            )

    leak("Euclid triples missing from the brute-force set", e_set - p_set)
    leak("lattice triples missing from the Euclid set", c_set - e_set)
    leak("primitive triples missing from the lattice set", p0_set - c_set)
    # The lattice set must be exactly the Euclid set minus its all-even
    # members (an all-even member keeps both legs even after canonicalizing).
    not_all_even = {t for t in e_set if t.a % 2 or t.b % 2}
    leak("lattice triples outside Euclid-minus-all-even", c_set - not_all_even)
    leak("Euclid-minus-all-even triples missing from the lattice", not_all_even - c_set)
    for idx, t in c_pairs:
        if is_primitive_lattice(idx) != (t in p0_set):
            discrepancies.append(
                f"primitivity mismatch at (m={idx.m}, n={idx.n}): "
                f"({t.a}, {t.b}, {t.c})"
            )
            break

    return ChainReport(
        c_max=c_max,
        count_P=len(p_set),
        count_E=len(e_set),
        count_C=len(c_set),
        count_P0=len(p0_set),
        witness_P_not_E=_smallest(p_set - e_set),
        witness_E_not_C=_smallest(
            [t for t in e_formula if canonicalize(t) not in c_set]
        ),
        witness_C_not_P0=_smallest(c_set - p0_set),
        discrepancies=tuple(discrepancies),
    )
