"""
Homeomorphism-level bookkeeping for simply connected closed oriented
4-manifolds.

A simply connected closed oriented smoothable 4-manifold is pinned down up
to homeomorphism by three pieces of data: the ranks b2+ and b2- of the
positive and negative parts of its intersection form, and the form's parity
(even = spin, odd = non-spin).  Everything here is exact integer arithmetic
on that triple and on two derived coordinate systems:

* characteristic numbers (e, sigma): topological Euler characteristic and
  signature, with e = 2 + b2+ + b2- and sigma = b2+ - b2-;
* complex-surface coordinates (c1^2, chi): the first Chern number and the
  holomorphic Euler characteristic, related by c1^2 = 2e + 3*sigma and
  chi = (e + sigma)/4.

Even types are admitted only when the signature is divisible by 16
(Rokhlin); the Kirby-Siebenmann invariant is taken to vanish throughout,
i.e. every type is assumed smoothable, and simple connectivity is a
contract of the caller rather than a stored field.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import FourfoldError, InvalidTypeError, NonIntegralChiError


class Parity(Enum):
    """Parity of the intersection form: EVEN is spin, ODD is non-spin."""

    EVEN = "even"
    ODD = "odd"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class TopologicalType:
    """Homeomorphism data of a simply connected closed oriented smoothable
    4-manifold.

    Indefinite unimodular forms are classified by rank, signature and
    parity, and the definite forms that occur smoothly are the diagonal
    ones (Donaldson), so this triple determines the oriented homeomorphism
    type outright.  Even types must satisfy Rokhlin's constraint
    sigma = 0 (mod 16); violations are rejected at construction.
    """

    b2_plus: int
    b2_minus: int
    parity: Parity

    def __post_init__(self) -> None:
        if not isinstance(self.parity, Parity):
            raise InvalidTypeError(f"parity must be a Parity member, got {self.parity!r}")
        if self.b2_plus < 0 or self.b2_minus < 0:
            raise InvalidTypeError(
                f"Betti ranks must be non-negative, got b2+ = {self.b2_plus}, b2- = {self.b2_minus}"
            )
        if self.parity is Parity.EVEN and (self.b2_plus - self.b2_minus) % 16 != 0:
            raise InvalidTypeError(
                f"even (spin) type with signature {self.b2_plus - self.b2_minus}: a smoothable "
                "spin 4-manifold has signature divisible by 16 (Rokhlin)"
            )

    @property
    def b2(self) -> int:
        return self.b2_plus + self.b2_minus

    @property
    def euler_characteristic(self) -> int:
        return 2 + self.b2

    @property
    def signature(self) -> int:
        return self.b2_plus - self.b2_minus


@dataclass(frozen=True)
class CharNumbers:
    """The pair (e, sigma).

    This is a bare coordinate point: whether it is realized by a simply
    connected closed type is a separate question (answered by
    `type_from_char`).  On realizable pairs e and sigma share parity,
    since e = 2 + b2 and sigma = b2 (mod 2).
    """

    e: int
    sigma: int


@dataclass(frozen=True)
class ChernNumbers:
    """The pair (c1^2, chi) of a complex-surface candidate."""

    c1sq: int
    chi: int


def char_numbers(t: TopologicalType) -> CharNumbers:
    """Euler characteristic and signature of a type."""
    return CharNumbers(t.euler_characteristic, t.signature)


def chern_to_char(c: ChernNumbers) -> CharNumbers:
    """Invert the relations c1^2 = 2e + 3*sigma, chi = (e + sigma)/4.

    Total on integer pairs: e = 12*chi - c1^2 and sigma = c1^2 - 8*chi.
    """
    return CharNumbers(12 * c.chi - c.c1sq, c.c1sq - 8 * c.chi)


def char_to_chern(c: CharNumbers) -> ChernNumbers:
    """Pass to complex-surface coordinates; requires (e + sigma) = 0 (mod 4)."""
    if (c.e + c.sigma) % 4 != 0:
        raise NonIntegralChiError(
            f"(e + sigma) = {c.e + c.sigma} is not divisible by 4: chi = (e + sigma)/4 is not "
            "an integer, so no compact complex surface has these characteristic numbers"
        )
    return ChernNumbers(2 * c.e + 3 * c.sigma, (c.e + c.sigma) // 4)


def type_from_char(c: CharNumbers, parity: Parity) -> TopologicalType:
    """Rebuild the Betti data from (e, sigma) and a parity.

    Fails when no simply connected closed type fits: e < 2, |sigma| too
    large, mismatched parities of e and sigma, or a Rokhlin violation.
    """
    b2 = c.e - 2
    if b2 < 0:
        raise InvalidTypeError(f"e = {c.e} < 2: a simply connected closed 4-manifold has e >= 2")
    if (b2 + c.sigma) % 2 != 0:
        raise InvalidTypeError(
            f"e = {c.e} and sigma = {c.sigma} have incompatible parity: b2 + sigma must be even"
        )
    b2_plus = (b2 + c.sigma) // 2
    b2_minus = (b2 - c.sigma) // 2
    if b2_plus < 0 or b2_minus < 0:
        raise InvalidTypeError(f"|sigma| = {abs(c.sigma)} exceeds b2 = {b2}")
    return TopologicalType(b2_plus, b2_minus, parity)


def connected_sum(t1: TopologicalType, t2: TopologicalType) -> TopologicalType:
    """Connected sum: Betti ranks add, parity is even only if both are.

    e adds minus 2 and sigma adds (Novikov additivity); the identity is
    the 4-sphere type (0, 0, even).
    """
    if t1.parity is Parity.EVEN and t2.parity is Parity.EVEN:
        parity = Parity.EVEN
    else:
        parity = Parity.ODD
    return TopologicalType(t1.b2_plus + t2.b2_plus, t1.b2_minus + t2.b2_minus, parity)


def blowup(t: TopologicalType, k: int) -> TopologicalType:
    """Connected sum with k copies of the reversed projective plane.

    b2- grows by k and the result is odd for k >= 1.  On complex-surface
    coordinates c1^2 drops by k while chi is unchanged.
    """
    if k < 0:
        raise FourfoldError(f"blowup count must be non-negative, got {k}")
    if k == 0:
        return t
    return TopologicalType(t.b2_plus, t.b2_minus + k, Parity.ODD)


def freedman_homeomorphic(t1: TopologicalType, t2: TopologicalType) -> bool:
    """Homeomorphism test for simply connected closed smoothable types.

    By Freedman's classification this is coincidence of (b2+, b2-, parity),
    equivalently of (e, sigma, parity).
    """
    return (
        t1.b2_plus == t2.b2_plus
        and t1.b2_minus == t2.b2_minus
        and t1.parity is t2.parity
    )


def hitchin_thorpe(c: CharNumbers, strict: bool = False) -> bool:
    """The Hitchin-Thorpe inequality 2e >= 3|sigma| (strict: 2e > 3|sigma|).

    A necessary sign condition for Einstein metrics, checked as a pure
    integer comparison; invariant under orientation reversal.
    """
    lhs = 2 * c.e
    rhs = 3 * abs(c.sigma)
    return lhs > rhs if strict else lhs >= rhs


def hitchin_thorpe_equality(c: CharNumbers) -> bool:
    """True on the borderline 2e = 3|sigma|, where an Einstein metric is
    forced to be flat or a quotient of the K3 metric (Hitchin)."""
    return 2 * c.e == 3 * abs(c.sigma)


def orientation_reverse(t: TopologicalType) -> TopologicalType:
    """Swap b2+ and b2-; e and parity persist, sigma negates."""
    return TopologicalType(t.b2_minus, t.b2_plus, t.parity)


S4 = TopologicalType(0, 0, Parity.EVEN)
CP2 = TopologicalType(1, 0, Parity.ODD)
CP2_BAR = TopologicalType(0, 1, Parity.ODD)
K3 = TopologicalType(3, 19, Parity.EVEN)
