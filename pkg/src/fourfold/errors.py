"""Exception and warning types shared across the library."""

from __future__ import annotations


class FourfoldError(ValueError):
    """Base class for domain errors raised by this library."""


class InvalidTypeError(FourfoldError):
    """A topological type that cannot exist: negative Betti ranks, a Rokhlin
    violation, or characteristic numbers with no underlying type."""


class NonIntegralChiError(FourfoldError):
    """(e + sigma) is not divisible by 4, so the holomorphic Euler
    characteristic chi = (e + sigma)/4 would not be an integer; the type
    cannot underlie a compact complex surface."""


class BaseMismatchError(FourfoldError):
    """Divisor classes living on different ruled surfaces were combined."""


class OddBranchClassError(FourfoldError):
    """A double-cover branch class must be divisible by 2 in the divisor
    class group of the base."""


class MissingSWHypothesisError(FourfoldError):
    """The Einstein obstruction needs a manifold asserted to carry a
    non-zero Seiberg-Witten invariant; the input did not assert one."""


class B2PlusTooSmallError(FourfoldError):
    """The obstruction is modeled only for b2+ > 1; the b2+ = 1 chamber
    (where the invariant depends on the chamber structure) is out of scope."""


class UsageError(FourfoldError):
    """Command-line arguments do not form a valid request."""


class NegativeC1SquareWarning(UserWarning):
    """2e + 3*sigma < 0 on the pre-blowup manifold: the obstruction
    threshold is negative, so every blowup count k >= 0 is obstructed.
    No minimal complex surface of general type has such numbers."""
