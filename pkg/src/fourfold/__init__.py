"""Exact-integer invariants of simply connected 4-manifolds, Seiberg-Witten
blowup obstructions to Einstein metrics, and homeomorphic-pair search."""

from .errors import (
    B2PlusTooSmallError,
    BaseMismatchError,
    FourfoldError,
    InvalidTypeError,
    MissingSWHypothesisError,
    NegativeC1SquareWarning,
    NonIntegralChiError,
    OddBranchClassError,
    UsageError,
)
from .hirzebruch import (
    DivisorClass,
    HirzebruchSurface,
    SurfaceRecord,
    branch_ampleness_discrepancy,
    canonical_class,
    double_cover_invariants,
    horikawa,
    horikawa_branch_class,
    intersect,
    is_ample,
)
from .obstruction import (
    NOT_OBSTRUCTED,
    OBSTRUCTED,
    CertificateStep,
    FormalClass,
    ObstructionCertificate,
    SWManifold,
    blowup_classes,
    einstein_obstructed,
    moduli_dim_nonneg,
)
from .pairs import (
    DEFAULT_PERSSON_PRESET,
    PERSSON_PRESETS,
    PERSSON_REGION_ENV,
    EinsteinPair,
    GeographyPredicateSet,
    OppositeSignPair,
    PairChecks,
    castelnuovo_bound,
    general_search,
    in_ample_sector,
    miyaoka_yau_bound,
    noether_bound,
    persson_noether_8chi,
    persson_noether_my,
    positive_negative_pair,
    theorem_pair,
)
from .topology import (
    CP2,
    CP2_BAR,
    K3,
    S4,
    CharNumbers,
    ChernNumbers,
    Parity,
    TopologicalType,
    blowup,
    char_numbers,
    char_to_chern,
    chern_to_char,
    connected_sum,
    freedman_homeomorphic,
    hitchin_thorpe,
    hitchin_thorpe_equality,
    orientation_reverse,
    type_from_char,
)

__version__ = "0.1.0"

__all__ = [
    "B2PlusTooSmallError",
    "BaseMismatchError",
    "FourfoldError",
    "InvalidTypeError",
    "MissingSWHypothesisError",
    "NegativeC1SquareWarning",
    "NonIntegralChiError",
    "OddBranchClassError",
    "UsageError",
    "DivisorClass",
    "HirzebruchSurface",
    "SurfaceRecord",
    "branch_ampleness_discrepancy",
    "canonical_class",
    "double_cover_invariants",
    "horikawa",
    "horikawa_branch_class",
    "intersect",
    "is_ample",
    "NOT_OBSTRUCTED",
    "OBSTRUCTED",
    "CertificateStep",
    "FormalClass",
    "ObstructionCertificate",
    "SWManifold",
    "blowup_classes",
    "einstein_obstructed",
    "moduli_dim_nonneg",
    "DEFAULT_PERSSON_PRESET",
    "PERSSON_PRESETS",
    "PERSSON_REGION_ENV",
    "EinsteinPair",
    "GeographyPredicateSet",
    "OppositeSignPair",
    "PairChecks",
    "castelnuovo_bound",
    "general_search",
    "in_ample_sector",
    "miyaoka_yau_bound",
    "noether_bound",
    "persson_noether_8chi",
    "persson_noether_my",
    "positive_negative_pair",
    "theorem_pair",
    "CP2",
    "CP2_BAR",
    "K3",
    "S4",
    "CharNumbers",
    "ChernNumbers",
    "Parity",
    "TopologicalType",
    "blowup",
    "char_numbers",
    "char_to_chern",
    "chern_to_char",
    "connected_sum",
    "freedman_homeomorphic",
    "hitchin_thorpe",
    "hitchin_thorpe_equality",
    "orientation_reverse",
    "type_from_char",
    "__version__",
]
