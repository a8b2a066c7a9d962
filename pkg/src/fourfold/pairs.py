"""
Homeomorphic pairs where one side carries an Einstein metric and the other
provably cannot.

The production line: pick a non-spin simply connected minimal surface Z
with ample canonical bundle in the sector 2chi - 6 <= c1^2 < 3chi (ample
but, below c1^2 = 3chi - 10, necessarily not very ample); pick a minimal
surface Y with the same chi and c1^2(Y) = c1^2(Z) + k for a blowup count k
beyond the threshold 3k > 2 c1^2(Y); then X = k-fold blowup of Y has the
same (e, sigma) as Z and both are odd, so X and Z are homeomorphic by
Freedman's classification, Z is Kahler-Einstein by Aubin-Yau, and X admits
no Einstein metric by the Seiberg-Witten blowup obstruction.  Both sides
satisfy the strict Hitchin-Thorpe inequality, so the obstruction is
invisible to it.

`theorem_pair` instantiates this with the Horikawa surfaces
(c1^2, chi) = (2i+4, i+5) as Z and companions (6i+13, i+5) as Y, where the
blowup count k = 4i+9 clears the threshold by exactly one;
`general_search` sweeps a chi range over the whole sector.  Existence of
the companion surfaces inside the configured region of the (c1^2, chi)
plane is an imported geography fact (a Persson-style existence region),
not something this library re-proves, and each emitted pair carries
provenance strings separating what was verified from what was assumed.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable

from .errors import FourfoldError
from .hirzebruch import SurfaceRecord, branch_ampleness_discrepancy, horikawa
from .obstruction import ObstructionCertificate, SWManifold, einstein_obstructed
from .topology import (
    CP2,
    ChernNumbers,
    Parity,
    TopologicalType,
    blowup,
    char_numbers,
    chern_to_char,
    freedman_homeomorphic,
    hitchin_thorpe,
    type_from_char,
)

Predicate = Callable[[int, int], bool]


def noether_bound(c1sq: int, chi: int) -> bool:
    """Noether's inequality for minimal general type: c1^2 >= 2chi - 6."""
    return c1sq >= 2 * chi - 6


def in_ample_sector(c1sq: int, chi: int) -> bool:
    """The strip 2chi - 6 <= c1^2 < 3chi of Z-side candidates."""
    return 2 * chi - 6 <= c1sq < 3 * chi


def castelnuovo_bound(c1sq: int, chi: int) -> bool:
    """Castelnuovo's bound for a very ample canonical bundle:
    c1^2 >= 3chi - 10.  Below it, ample canonical implies not very ample."""
    return c1sq >= 3 * chi - 10


def miyaoka_yau_bound(c1sq: int, chi: int) -> bool:
    """The Miyaoka-Yau bound c1^2 <= 9chi."""
    return c1sq <= 9 * chi


def persson_noether_my(c1sq: int, chi: int) -> bool:
    """Existence region preset: the full Noether/Miyaoka-Yau strip
    2chi - 6 <= c1^2 <= 9chi with chi >= 1."""
    return chi >= 1 and 2 * chi - 6 <= c1sq <= 9 * chi


def persson_noether_8chi(c1sq: int, chi: int) -> bool:
    """Conservative existence region preset capped at c1^2 <= 8chi."""
    return chi >= 1 and 2 * chi - 6 <= c1sq <= 8 * chi


PERSSON_PRESETS: dict[str, Predicate] = {
    "noether-my": persson_noether_my,
    "noether-8chi": persson_noether_8chi,
}
DEFAULT_PERSSON_PRESET = "noether-my"
PERSSON_REGION_ENV = "FOURFOLD_PERSSON_REGION"


@dataclass(frozen=True)
class GeographyPredicateSet:
    """The (c1^2, chi) plane predicates the pair pipeline consults.

    `persson_region` encodes which Chern pairs are accepted as realized by
    simply connected minimal surfaces of general type; swap in a preset or
    any callable to tighten or loosen the imported existence assumption.
    """

    noether: Predicate = noether_bound
    ample_sector: Predicate = in_ample_sector
    castelnuovo_very_ample: Predicate = castelnuovo_bound
    miyaoka_yau: Predicate = miyaoka_yau_bound
    persson_region: Predicate = persson_noether_my

    @classmethod
    def from_preset(cls, name: str) -> GeographyPredicateSet:
        try:
            region = PERSSON_PRESETS[name]
        except KeyError:
            raise FourfoldError(
                f"unknown existence-region preset {name!r}; known presets: "
                f"{', '.join(sorted(PERSSON_PRESETS))}"
            ) from None
        return cls(persson_region=region)

    @classmethod
    def from_environment(cls) -> GeographyPredicateSet:
        """Honor the FOURFOLD_PERSSON_REGION environment variable."""
        return cls.from_preset(os.environ.get(PERSSON_REGION_ENV, DEFAULT_PERSSON_PRESET))


@dataclass(frozen=True)
class PairChecks:
    """The four boolean verdicts recorded on every pair."""

    homeomorphic: bool
    strict_hitchin_thorpe: bool
    z_in_ample_sector: bool
    y_in_persson_region: bool

    @property
    def all_true(self) -> bool:
        return (
            self.homeomorphic
            and self.strict_hitchin_thorpe
            and self.z_in_ample_sector
            and self.y_in_persson_region
        )


@dataclass(frozen=True)
class EinsteinPair:
    """One Einstein / no-Einstein pair: the Einstein side Z, the minimal
    surface Y whose k-fold blowup is the obstructed side X, the exact
    obstruction certificate, and the recorded verdicts."""

    z: SurfaceRecord
    y_chern: ChernNumbers
    k: int
    x_topo: TopologicalType
    certificate: ObstructionCertificate
    checks: PairChecks
    below_very_ample_bound: bool
    provenance: tuple[str, ...]

    @property
    def verified(self) -> bool:
        return self.checks.all_true and self.certificate.obstructed

    @property
    def ht_margin(self) -> int:
        """2e - 3|sigma| on the shared homeomorphism type."""
        c = char_numbers(self.x_topo)
        return 2 * c.e - 3 * abs(c.sigma)

    @property
    def obstruction_margin(self) -> int:
        """3k - 2*(2e(Y)+3sigma(Y)): how far past the threshold k sits."""
        return self.certificate.threshold_margin


@dataclass(frozen=True)
class OppositeSignPair:
    """A homeomorphic pair where both sides admit Kahler-Einstein metrics,
    of opposite scalar-curvature sign.  The metric facts are labels
    (imported), only the homeomorphism and Hitchin-Thorpe lines are
    computed."""

    x_topo: TopologicalType
    x_label: str
    y_topo: TopologicalType
    y_chern: ChernNumbers
    y_label: str
    homeomorphic: bool
    strict_hitchin_thorpe: bool
    provenance: tuple[str, ...]


def _assemble_pair(
    z: SurfaceRecord,
    y_chern: ChernNumbers,
    k: int,
    predicates: GeographyPredicateSet,
    provenance: list[str],
) -> EinsteinPair:
    y_char = chern_to_char(y_chern)
    # Blowups are never spin, so only (e, sigma, b2+) of Y matter downstream;
    # Y itself is recorded with an odd form.
    y_topo = type_from_char(y_char, Parity.ODD)
    sw = SWManifold(
        y_topo,
        has_nonzero_sw=True,
        provenance="minimal surface of general type: non-zero Seiberg-Witten invariant (Witten)",
    )
    certificate = einstein_obstructed(sw, k)
    x_topo = blowup(y_topo, k)
    z_topo = type_from_char(
        chern_to_char(z.chern), Parity.EVEN if z.spin else Parity.ODD
    )
    checks = PairChecks(
        homeomorphic=freedman_homeomorphic(x_topo, z_topo),
        strict_hitchin_thorpe=hitchin_thorpe(char_numbers(x_topo), strict=True),
        z_in_ample_sector=predicates.ample_sector(z.chern.c1sq, z.chern.chi),
        y_in_persson_region=predicates.persson_region(y_chern.c1sq, y_chern.chi),
    )
    return EinsteinPair(
        z=z,
        y_chern=y_chern,
        k=k,
        x_topo=x_topo,
        certificate=certificate,
        checks=checks,
        below_very_ample_bound=not predicates.castelnuovo_very_ample(
            z.chern.c1sq, z.chern.chi
        ),
        provenance=tuple(provenance),
    )


def theorem_pair(
    i: int,
    predicates: GeographyPredicateSet | None = None,
    i_min: int = 0,
) -> EinsteinPair:
    """The Horikawa-based family: Z = horikawa(i), Y with Chern numbers
    (6i+13, i+5), and k = 4i+9 blowups.

    The obstruction margin 3k - 2*(2e(Y)+3sigma(Y)) equals 1 for every i:
    the family sits one integer above the threshold.  The construction is
    usually stated for all sufficiently large i; every check here is
    mechanical and passes from i = 0 on, so the default cutoff `i_min`
    is 0.  Raise it to stay inside a more cautious reading.
    """
    if predicates is None:
        predicates = GeographyPredicateSet()
    if i < i_min:
        raise FourfoldError(f"family index {i} is below the configured minimum {i_min}")
    z = horikawa(i)
    y_chern = ChernNumbers(6 * i + 13, i + 5)
    k = 4 * i + 9
    provenance = [
        f"constructed: Z is the double cover of the index-{i} Hirzebruch surface, "
        "Chern numbers by exact divisor arithmetic",
        f"assumed: a simply connected minimal surface of general type with "
        f"(c1^2, chi) = ({y_chern.c1sq}, {y_chern.chi}) exists (Persson-style "
        "existence region; not re-proved here)",
        "assumed: Z carries a Kahler-Einstein metric (Aubin-Yau, ample canonical bundle)",
        "verified: homeomorphism, strict Hitchin-Thorpe, sector membership and the "
        "blowup obstruction are exact integer checks",
    ]
    discrepancy = branch_ampleness_discrepancy(i)
    if discrepancy is not None:
        provenance.append("caveat: " + discrepancy)
    return _assemble_pair(z, y_chern, k, predicates, provenance)


def positive_negative_pair() -> OppositeSignPair:
    """The opposite-sign pair: the 8-fold blowup of the projective plane
    against a simply connected numerical Godeaux surface.

    Both sides have (e, sigma) = (11, -7) and odd intersection form, hence
    are homeomorphic; the blowup side carries a positive scalar curvature
    Kahler-Einstein metric (Tian-Yau), the Godeaux side a negative one
    (Aubin-Yau).  The Godeaux Chern numbers (1, 1) are derived from the
    homeomorphism, and the metric statements are imported labels.
    """
    x_topo = blowup(CP2, 8)
    y_chern = ChernNumbers(1, 1)
    y_topo = type_from_char(chern_to_char(y_chern), Parity.ODD)
    return OppositeSignPair(
        x_topo=x_topo,
        x_label=(
            "8-fold blowup of the projective plane: positive scalar curvature "
            "Kahler-Einstein metric (Tian-Yau)"
        ),
        y_topo=y_topo,
        y_chern=y_chern,
        y_label=(
            "simply connected numerical Godeaux surface (Craighero-Gattazzo): negative "
            "scalar curvature Kahler-Einstein metric (Aubin-Yau)"
        ),
        homeomorphic=freedman_homeomorphic(x_topo, y_topo),
        strict_hitchin_thorpe=hitchin_thorpe(char_numbers(x_topo), strict=True),
        provenance=(
            "verified: both sides have (e, sigma) = (11, -7) and odd intersection "
            "form, hence are homeomorphic (Freedman)",
            "derived: the Godeaux Chern numbers c1^2 = 1, chi = 1 are forced by the "
            "homeomorphism with the 8-fold blowup",
            "assumed: both Kahler-Einstein metrics and the smooth distinctness of the "
            "two structures are imported facts, not computed here",
        ),
    )


def _minimal_companion(c1sq_z: int, chi: int, region: Predicate) -> int | None:
    # Smallest c1^2(Y) with 3k > 2 c1^2(Y) for k = c1^2(Y) - c1^2(Z),
    # equivalently c1^2(Y) > 3 c1^2(Z); the sweep is capped at 10chi - 1,
    # beyond which b2- of Y would go negative and no type exists.
    for c1sq_y in range(3 * c1sq_z + 1, 10 * chi):
        if region(c1sq_y, chi):
            return c1sq_y
    return None


def general_search(
    chi_min: int,
    chi_max: int,
    predicates: GeographyPredicateSet | None = None,
) -> list[EinsteinPair]:
    """Sweep chi_min..chi_max and emit a verified pair for every ample-sector
    lattice point that admits a companion.

    For each chi, the Z-side candidates are the integers c1^2 in the sector
    2chi - 6 <= c1^2 < 3chi, further restricted to c1^2 >= 1 because an
    ample canonical bundle forces K^2 > 0; for each, the companion Y gets
    the minimal c1^2(Y) > 3 c1^2(Z) inside the configured existence region,
    and k = c1^2(Y) - c1^2(Z).  Rows with chi = 1 never appear: there
    b2+(Y) = 2chi - 1 = 1 and the obstruction is not modeled.  Existence of
    the surfaces at the selected lattice points is assumed, not proved.

    Output is deterministic, sorted by (chi, c1^2(Z)); an empty list is a
    valid result, and chi_max < chi_min yields one.
    """
    if chi_min < 1:
        raise FourfoldError(f"chi_min must be >= 1, got {chi_min}")
    if predicates is None:
        predicates = GeographyPredicateSet()
    pairs: list[EinsteinPair] = []
    for chi in range(chi_min, chi_max + 1):
        if 2 * chi - 1 <= 1:  # b2+(Y) = 2chi - 1: the obstruction needs b2+ > 1
            continue
        for c1sq_z in range(max(2 * chi - 6, 1), 3 * chi):
            c1sq_y = _minimal_companion(c1sq_z, chi, predicates.persson_region)
            if c1sq_y is None:
                continue
            k = c1sq_y - c1sq_z
            z = SurfaceRecord(
                chern=ChernNumbers(c1sq_z, chi),
                spin=False,
                ample_canonical=True,
                simply_connected=True,
                construction="ample-sector lattice point",
            )
            provenance = [
                f"assumed: a non-spin simply connected minimal surface with ample "
                f"canonical bundle exists at (c1^2, chi) = ({c1sq_z}, {chi})",
                f"assumed: a simply connected minimal surface of general type exists at "
                f"(c1^2, chi) = ({c1sq_y}, {chi}) inside the configured existence region",
                "assumed: the Einstein metric on the Z side is Kahler-Einstein (Aubin-Yau)",
                "verified: homeomorphism, strict Hitchin-Thorpe, sector membership and "
                "the blowup obstruction are exact integer checks",
            ]
            pair = _assemble_pair(z, ChernNumbers(c1sq_y, chi), k, predicates, provenance)
            if pair.verified:
                pairs.append(pair)
    pairs.sort(key=lambda p: (p.z.chern.chi, p.z.chern.c1sq))
    return pairs


__all__ = [
    "Predicate",
    "noether_bound",
    "in_ample_sector",
    "castelnuovo_bound",
    "miyaoka_yau_bound",
    "persson_noether_my",
    "persson_noether_8chi",
    "PERSSON_PRESETS",
    "DEFAULT_PERSSON_PRESET",
    "PERSSON_REGION_ENV",
    "GeographyPredicateSet",
    "PairChecks",
    "EinsteinPair",
    "OppositeSignPair",
    "theorem_pair",
    "positive_negative_pair",
    "general_search",
]
