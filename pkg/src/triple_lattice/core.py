"""Exact integer arithmetic for Pythagorean triples on an (m, n) lattice.

A triple (a, b, c) with a odd, b even and c odd sits at exactly one lattice
point: c - b is an odd perfect square (2m-1)^2 and c - a is twice a perfect
square 2n^2.  This module holds the forward map, its exact inverse, the
classic two-parameter (u, v) form, the primitivity test, and the side
decomposition (e, f, d) = (c-a, a+b-c, c-b).

Everything is pure integer arithmetic: square roots come from math.isqrt
with an exact r*r == x verification, never floating point.  Components are
range-checked against a 64-bit bound so oversized results surface as
OverflowError instead of silently growing (Python integers never wrap;
the check keeps behaviour aligned with fixed-width ports).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

__all__ = [
    "U64_MAX",
    "Triple",
    "LatticeIndex",
    "ExtendedIndex",
    "EuclidParams",
    "Decomposition",
    "NotInClassC",
    "InvalidDecomposition",
    "gcd",
    "is_perfect_square",
    "canonicalize",
    "triple_from_lattice",
    "lattice_from_triple",
    "is_primitive_lattice",
    "extended_triple",
    "euclid_triple",
    "euclid_params_from_triple",
    "decompose",
    "compose_def",
]

#: Largest value any triple component may take.
U64_MAX = 2**64 - 1


class NotInClassC(ValueError):
    """The triple is not in the lattice class (a odd, b even, c odd, c - b square)."""


class InvalidDecomposition(ValueError):
    """The (e, f, d) values do not describe any lattice triple."""


def is_perfect_square(x: int) -> bool:
    """True iff x is k*k for some integer k >= 0.  Exact, no floating point."""
    if x < 0:
        return False
    r = isqrt(x)
    return r * r == x


def _require_positive_int(name: str, value: int) -> None:
    if not isinstance(value, int):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if value < 1:
        raise ValueError(f"{name} must be >= 1, got {value}")


def _check_width(*values: int) -> None:
    for v in values:
        if v > U64_MAX:
            raise OverflowError(f"component {v} exceeds the checked 64-bit width")


@dataclass(frozen=True)
class Triple:
    """An ordered Pythagorean triple: a*a + b*b == c*c, all components >= 1.

    Construction of a non-Pythagorean triple raises ValueError; components
    above U64_MAX raise OverflowError.  c > a and c > b follow from the
    identity.  Instances are immutable and hashable.
    """

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        _require_positive_int("a", self.a)
        _require_positive_int("b", self.b)
        _require_positive_int("c", self.c)
        _check_width(self.a, self.b, self.c)
        if self.a * self.a + self.b * self.b != self.c * self.c:
            raise ValueError(
                f"not a Pythagorean triple: {self.a}^2 + {self.b}^2 != {self.c}^2"
            )


@dataclass(frozen=True)
class LatticeIndex:
    """Lattice point (m, n), m >= 1, n >= 1, addressing one triple."""

    m: int
    n: int

    def __post_init__(self) -> None:
        _require_positive_int("m", self.m)
        _require_positive_int("n", self.n)


@dataclass(frozen=True)
class ExtendedIndex:
    """Extended lattice point (mu, n) where mu replaces the odd value 2m-1.

    mu ranges over all positive integers: odd mu lands back on the (m, n)
    lattice, even mu produces triples whose components are all even.
    """

    mu: int
    n: int

    def __post_init__(self) -> None:
        _require_positive_int("mu", self.mu)
        _require_positive_int("n", self.n)


@dataclass(frozen=True)
class EuclidParams:
    """Parameters (u, v), u > v >= 1, of the form (u^2-v^2, 2uv, u^2+v^2)."""

    u: int
    v: int

    def __post_init__(self) -> None:
        _require_positive_int("u", self.u)
        _require_positive_int("v", self.v)
        if self.u <= self.v:
            raise ValueError(f"u must exceed v, got u={self.u}, v={self.v}")


@dataclass(frozen=True)
class Decomposition:
    """Side differences (e, f, d) = (c - a, a + b - c, c - b) of a triple.

    For a lattice triple, e = 2n^2 and d = (2m-1)^2 and f = 2n(2m-1); the
    type itself only pins the parities: e positive even, f positive,
    d positive odd.
    """

    e: int
    f: int
    d: int

    def __post_init__(self) -> None:
        _require_positive_int("e", self.e)
        _require_positive_int("f", self.f)
        _require_positive_int("d", self.d)
        if self.e % 2:
            raise ValueError(f"e must be even, got {self.e}")
        if self.d % 2 == 0:
            raise ValueError(f"d must be odd, got {self.d}")


def canonicalize(t: Triple) -> Triple:
    """Return t with the odd leg in position a when leg parities differ.

    When both legs share a parity (necessarily both even) the legs are
    ordered ascending instead.
    """
    if (t.a + t.b) % 2:
        if t.a % 2:
            return t
        return Triple(t.b, t.a, t.c)
    if t.a <= t.b:
        return t
    return Triple(t.b, t.a, t.c)


def triple_from_lattice(idx: LatticeIndex) -> Triple:
    """Map lattice point (m, n) to its triple.

    a = 4m^2 + 4nm - 4m - 2n + 1
    b = 2n^2 + 4nm - 2n
    c = a + 2n^2

    The result always has a odd, b even, c odd, with c - b = (2m-1)^2 and
    c - a = 2n^2.  Raises OverflowError past the 64-bit width.
    """
    m, n = idx.m, idx.n
    a = 4 * m * m + 4 * n * m - 4 * m - 2 * n + 1
    b = 2 * n * n + 4 * n * m - 2 * n
    c = a + 2 * n * n
    return Triple(a, b, c)


def lattice_from_triple(t: Triple) -> LatticeIndex:
    """Recover the unique (m, n) with triple_from_lattice(m, n) == t.

    m = (1 + sqrt(c - b)) / 2 and n = (a + b - c) / (2 sqrt(c - b)), both
    forced to be positive integers when t belongs to the lattice class.
    Raises NotInClassC naming the first failed membership condition
    otherwise.
    """
    if t.a % 2 == 0:
        raise NotInClassC(f"a = {t.a} is even; lattice triples have a odd")
    if t.b % 2:
        raise NotInClassC(f"b = {t.b} is odd; lattice triples have b even")
    d = t.c - t.b
    r = isqrt(d)
    if r * r != d:
        raise NotInClassC(f"c - b = {d} is not a perfect square")
    f = t.a + t.b - t.c
    if f % (2 * r):
        raise NotInClassC(
            f"a + b - c = {f} is not divisible by 2*sqrt(c - b) = {2 * r}"
        )
    idx = LatticeIndex((1 + r) // 2, f // (2 * r))
    if triple_from_lattice(idx) != t:
        raise NotInClassC("no lattice point generates this triple")
    return idx


def is_primitive_lattice(idx: LatticeIndex) -> bool:
    """True iff the triple at (m, n) is primitive: gcd(n, 2m-1) == 1.

    2m-1 is odd, so even factors of n can never defeat the test; no
    special-casing is needed for even n.
    """
    return gcd(idx.n, 2 * idx.m - 1) == 1


def extended_triple(idx: ExtendedIndex) -> Triple:
    """Map extended point (mu, n) to its triple.

    a = mu(2n + mu), b = 2n(n + mu), c = 2n^2 + mu(2n + mu); identical to
    euclid_triple(u=n+mu, v=n).
    """
    mu, n = idx.mu, idx.n
    a = mu * (2 * n + mu)
    b = 2 * n * (n + mu)
    c = 2 * n * n + a
    return Triple(a, b, c)


def euclid_triple(p: EuclidParams) -> Triple:
    """The triple (u^2 - v^2, 2uv, u^2 + v^2)."""
    u, v = p.u, p.v
    return Triple(u * u - v * v, 2 * u * v, u * u + v * v)


def euclid_params_from_triple(t: Triple) -> EuclidParams | None:
    """Recover (u, v) with euclid_triple(u, v) matching t's leg set, if any.

    Tries both leg orientations, solving u^2 = (c + x) / 2 and
    v^2 = (c - x) / 2 for the leg x placed in position a.  Returns None
    when no orientation works (the triple is outside the Euclid form).
    """
    for x in (t.a, t.b):
        if (t.c + x) % 2:
            continue
        us, vs = (t.c + x) // 2, (t.c - x) // 2
        u, v = isqrt(us), isqrt(vs)
        # 2uv automatically equals the other leg once both halves are
        # squares, since (2uv)^2 = c^2 - x^2.
        if u * u == us and v * v == vs:
            return EuclidParams(u, v)
    return None


def decompose(t: Triple) -> Decomposition:
    """Split a lattice-oriented triple into (e, f, d) = (c-a, a+b-c, c-b).

    Requires a odd and b even (raises NotInClassC otherwise); inverse of
    compose_def.
    """
    if t.a % 2 == 0:
        raise NotInClassC(f"a = {t.a} is even; decompose needs a odd")
    if t.b % 2:
        raise NotInClassC(f"b = {t.b} is odd; decompose needs b even")
    return Decomposition(e=t.c - t.a, f=t.a + t.b - t.c, d=t.c - t.b)


def compose_def(e: int, f: int, d: int) -> Triple:
    """Rebuild the triple (f+d, e+f, e+d+f) from a verified decomposition.

    Accepts only e = 2n^2, d = (2m-1)^2 and f = 2n(2m-1) for some positive
    integers m, n; anything else raises InvalidDecomposition.
    """
    if e < 2 or e % 2:
        raise InvalidDecomposition(f"e = {e} is not twice a positive perfect square")
    n = isqrt(e // 2)
    if 2 * n * n != e:
        raise InvalidDecomposition(f"e = {e} is not twice a positive perfect square")
    if d < 1:
        raise InvalidDecomposition(f"d = {d} is not an odd perfect square")
    r = isqrt(d)
    if r * r != d or r % 2 == 0:
        raise InvalidDecomposition(f"d = {d} is not an odd perfect square")
    if f != 2 * n * r:
        raise InvalidDecomposition(
            f"f = {f} does not equal 2*sqrt(e/2)*sqrt(d) = {2 * n * r}"
        )
    return Triple(f + d, e + f, e + d + f)
