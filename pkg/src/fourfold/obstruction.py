"""
Seiberg-Witten blowup bookkeeping and the Einstein non-existence
certificate.

Blowing up k times replaces a basic class c by the 2^k classes
c +- E_1 +- ... +- E_k, one for each sign choice on the exceptional
spheres.  For a 4-manifold Y with b2+ > 1 carrying a non-zero
Seiberg-Witten invariant, and X = Y blown up k times, running the
curvature estimates over all those classes gives, for every metric g on X,

    (1/32 pi^2) * integral(s_g^2)  >=  2e(X) + 3 sigma(X) + k,

while the Gauss-Bonnet and signature integrands of an Einstein metric
force

    2e(X) + 3 sigma(X)  >=  (1/3) * (2e(X) + 3 sigma(X) + k).

Since 2e(X) + 3 sigma(X) = 2e(Y) + 3 sigma(Y) - k, the two statements are
incompatible exactly when k > (2/3)(2e(Y) + 3 sigma(Y))  (LeBrun's blowup
obstruction).  `einstein_obstructed` decides that threshold in exact
integer arithmetic and returns a certificate transcribing each step of the
chain with exact rational values; nothing here ever touches a float.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import (
    B2PlusTooSmallError,
    FourfoldError,
    MissingSWHypothesisError,
    NegativeC1SquareWarning,
)
from .topology import CharNumbers, TopologicalType, char_numbers, hitchin_thorpe_equality

OBSTRUCTED = "obstructed"
NOT_OBSTRUCTED = "not_obstructed"


@dataclass(frozen=True)
class SWManifold:
    """A topological type together with the axiom that some Spin^c
    structure on it has a non-zero Seiberg-Witten invariant.

    The flag is an input hypothesis, not something this library computes;
    `provenance` should say where it comes from (e.g. a minimal surface of
    general type, by Witten's theorem).
    """

    topo: TopologicalType
    has_nonzero_sw: bool
    provenance: str = ""


@dataclass(frozen=True)
class FormalClass:
    """A characteristic class written as c + sum of signed exceptional
    generators: `base_coeff` is a formal label for c and `exceptional`
    holds one +-1 per blowup, in blowup order."""

    base_coeff: int
    exceptional: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "exceptional", tuple(self.exceptional))
        for entry in self.exceptional:
            if entry not in (1, -1):
                raise FourfoldError(f"exceptional coefficients must be +-1, got {entry}")


def blowup_classes(classes: Iterable[FormalClass], k: int) -> frozenset[FormalClass]:
    """All sign choices on k new exceptional generators.

    Each input class contributes 2^k outputs, its exceptional tuple
    extended by every vector in {+1, -1}^k; staging the blowups and doing
    them in one shot enumerate the same set.
    """
    if k < 0:
        raise FourfoldError(f"blowup count must be non-negative, got {k}")
    out = []
    for c in classes:
        for signs in itertools.product((1, -1), repeat=k):
            out.append(FormalClass(c.base_coeff, c.exceptional + signs))
    return frozenset(out)


def moduli_dim_nonneg(c1sq: int, c: CharNumbers) -> bool:
    """Non-negativity of the Seiberg-Witten moduli dimension for a class of
    square c1sq: requires c1sq >= 2e + 3*sigma."""
    return c1sq >= 2 * c.e + 3 * c.sigma


@dataclass(frozen=True)
class CertificateStep:
    """One line of the certificate: a labeled relation with both sides
    evaluated exactly, plus whether the relation holds as stated."""

    label: str
    statement: str
    lhs: Fraction
    relation: str
    rhs: Fraction
    holds: bool


@dataclass(frozen=True)
class ObstructionCertificate:
    """Exact transcript of the blowup obstruction decision for (Y, k).

    `lhs_bound` is the scalar-curvature lower bound 2e(X)+3sigma(X)+k and
    `einstein_bound` is one third of it, the quantity an Einstein metric
    would have to dominate.  `conclusion` is "obstructed" exactly when
    3k > 2*(2e(Y)+3sigma(Y)); the borderline of equality is reported as
    not obstructed, with a note.  All values are exact rationals.
    """

    y_char: CharNumbers
    k: int
    x_char: CharNumbers
    lhs_bound: Fraction
    einstein_bound: Fraction
    conclusion: str
    steps: tuple[CertificateStep, ...]
    hitchin_thorpe_equality: bool
    notes: tuple[str, ...]

    @property
    def obstructed(self) -> bool:
        return self.conclusion == OBSTRUCTED

    @property
    def threshold_margin(self) -> int:
        """3k - 2*(2e(Y)+3sigma(Y)): positive exactly when obstructed."""
        return 3 * self.k - 2 * (2 * self.y_char.e + 3 * self.y_char.sigma)


def einstein_obstructed(y: SWManifold, k: int) -> ObstructionCertificate:
    """Decide whether the k-fold blowup of Y admits no Einstein metric.

    Preconditions: Y asserts a non-zero Seiberg-Witten invariant and has
    b2+ > 1.  When 2e(Y)+3sigma(Y) < 0 the threshold is negative, every
    k >= 0 is obstructed, and a warning is emitted (no minimal complex
    surface of general type has such numbers); the decision itself is
    still the exact comparison 3k > 2*(2e(Y)+3sigma(Y)).
    """
    if k < 0:
        raise FourfoldError(f"blowup count must be non-negative, got {k}")
    if not y.has_nonzero_sw:
        raise MissingSWHypothesisError(
            "the obstruction needs a non-zero Seiberg-Witten invariant on the pre-blowup "
            "manifold; the input does not assert one"
        )
    if y.topo.b2_plus <= 1:
        raise B2PlusTooSmallError(
            f"b2+ = {y.topo.b2_plus}: the obstruction is modeled only for b2+ > 1"
        )

    y_char = char_numbers(y.topo)
    m = 2 * y_char.e + 3 * y_char.sigma
    x_char = CharNumbers(y_char.e + k, y_char.sigma - k)
    mx = 2 * x_char.e + 3 * x_char.sigma  # = m - k

    notes: list[str] = []
    if m < 0:
        message = (
            f"2e(Y) + 3sigma(Y) = {m} < 0: the threshold is negative, so every blowup "
            "count k >= 0 is obstructed; no minimal complex surface of general type has "
            "c1^2 < 0"
        )
        warnings.warn(message, NegativeC1SquareWarning, stacklevel=2)
        notes.append(message)
    if 3 * k == 2 * m:
        notes.append(
            "k sits exactly on the threshold (2/3)(2e(Y)+3sigma(Y)): the strict "
            "obstruction does not apply, and the borderline refinement available for "
            "complex or symplectic structures is not modeled here"
        )
    ht_equality = hitchin_thorpe_equality(x_char)
    if ht_equality:
        notes.append(
            "the blowup sits on the borderline 2e = 3|sigma|, where an Einstein metric "
            "would have to be flat or a quotient of the K3 metric (Hitchin)"
        )

    steps = (
        CertificateStep(
            label="blowup-characteristic-numbers",
            statement="2e(X) + 3sigma(X) = 2e(Y) + 3sigma(Y) - k",
            lhs=Fraction(mx),
            relation="=",
            rhs=Fraction(m - k),
            holds=mx == m - k,
        ),
        CertificateStep(
            label="monopole-scalar-curvature-bound",
            statement=(
                "every metric g on X satisfies (1/32 pi^2) * integral(s_g^2) >= "
                "2e(X) + 3sigma(X) + k = 2e(Y) + 3sigma(Y)"
            ),
            lhs=Fraction(mx + k),
            relation="=",
            rhs=Fraction(m),
            holds=mx + k == m,
        ),
        CertificateStep(
            label="einstein-chern-weil-bound",
            statement=(
                "an Einstein metric on X would force 2e(X) + 3sigma(X) >= "
                "(1/3)(2e(X) + 3sigma(X) + k)"
            ),
            lhs=Fraction(mx),
            relation=">=",
            rhs=Fraction(m, 3),
            holds=3 * mx >= m,
        ),
        CertificateStep(
            label="blowup-threshold",
            statement="an Einstein metric on X requires k <= (2/3)(2e(Y) + 3sigma(Y))",
            lhs=Fraction(k),
            relation="<=",
            rhs=Fraction(2 * m, 3),
            holds=3 * k <= 2 * m,
        ),
    )

    return ObstructionCertificate(
        y_char=y_char,
        k=k,
        x_char=x_char,
        lhs_bound=Fraction(m),
        einstein_bound=Fraction(m, 3),
        conclusion=OBSTRUCTED if 3 * k > 2 * m else NOT_OBSTRUCTED,
        steps=steps,
        hitchin_thorpe_equality=ht_equality,
        notes=tuple(notes),
    )
