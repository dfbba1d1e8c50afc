"""Branched covers of the line as monodromy data, and the ramified
trigonal construction: degree-six towers with a block pairing on one
side, tetragonal covers with marked nodes on the other, with the
sections curve and its involution mediating between them."""

from .covers import (
    BranchedCover,
    Component,
    CoverPoint,
    NodalCoverModel,
    are_isomorphic,
    arithmetic_genus,
    components,
    fiber_points,
    genus,
    label_cycles,
    nodal_isomorphism,
    ramification_profile,
)
from .permutation import Permutation, compose, conjugate, orbits, product
from .towers import (
    ETALE,
    GENERAL,
    SPECIAL,
    BlockSystem,
    Tower,
    TowerValidationError,
    block_action,
    double_cover_genus,
    flip_points,
    validate_tower,
)
from .forward import (
    ForwardResult,
    NodeMarkers,
    Transversal,
    component_tetragonal,
    construct,
    sections_action,
    transversals,
    verify_predictions,
)
from .inverse import (
    PAIRS,
    STRATUM_M0,
    STRATUM_M1,
    STRATUM_M2,
    STRATUM_OTHER,
    GluedTower,
    InverseResult,
    TetragonalCover,
    classify_fiber,
    complement_involution,
    glue_special,
    invert,
    match_glued,
    pairs_action,
    partition_action,
    roundtrip_etale,
    roundtrip_special,
)
from .coefficients import (
    ChainRow,
    chain_report,
    chain_with_power_factor,
    coefficient_chain,
    gen_binomial,
    reduced_identity,
)
from .report import CheckReport, CheckResult
from .sampling import SampleConfig, SplitMix64, derive_seed, sample_tetragonal, sample_tower
from .batch import BatchReport, InstanceResult, SUITES, run_batch, spread_configs

__all__ = [
    "BranchedCover",
    "Component",
    "CoverPoint",
    "NodalCoverModel",
    "are_isomorphic",
    "arithmetic_genus",
    "components",
    "fiber_points",
    "genus",
    "label_cycles",
    "nodal_isomorphism",
    "ramification_profile",
    "Permutation",
    "compose",
    "conjugate",
    "orbits",
    "product",
    "ETALE",
    "GENERAL",
    "SPECIAL",
    "BlockSystem",
    "Tower",
    "TowerValidationError",
    "block_action",
    "double_cover_genus",
    "flip_points",
    "validate_tower",
    "ForwardResult",
    "NodeMarkers",
    "Transversal",
    "component_tetragonal",
    "construct",
    "sections_action",
    "transversals",
    "verify_predictions",
    "PAIRS",
    "STRATUM_M0",
    "STRATUM_M1",
    "STRATUM_M2",
    "STRATUM_OTHER",
    "GluedTower",
    "InverseResult",
    "TetragonalCover",
    "classify_fiber",
    "complement_involution",
    "glue_special",
    "invert",
    "match_glued",
    "pairs_action",
    "partition_action",
    "roundtrip_etale",
    "roundtrip_special",
    "ChainRow",
    "chain_report",
    "chain_with_power_factor",
    "coefficient_chain",
    "gen_binomial",
    "reduced_identity",
    "CheckReport",
    "CheckResult",
    "SampleConfig",
    "SplitMix64",
    "derive_seed",
    "sample_tetragonal",
    "sample_tower",
    "BatchReport",
    "InstanceResult",
    "SUITES",
    "run_batch",
    "spread_configs",
]
