"""Symplectic spectra and exact 1xK logarithmic negativity for symmetric
multimode Gaussian states.

Covariance matrices use (x1, p1, ..., xN, pN) ordering with vacuum
variance 1; entanglement values are in nats.
"""

from ._backend import backend_name
from .core import (
    TOL_PHYSICAL,
    TOL_SYMMETRY,
    CovarianceMatrix,
    ModePartition,
    PhysicalityReport,
    SymplecticSpectrum,
    log_negativity_numeric,
    partial_transpose,
    purity,
    reduce,
    seralian,
    symplectic_form,
    symplectic_spectrum_numeric,
    validate,
)
from .entanglement import (
    NegativityResult,
    TwoModeEquivalent,
    entanglement_hierarchy,
    entropy_of_entanglement,
    equivalent_two_mode,
    negativity_from_equivalent,
    one_by_k_negativity,
)
from .exceptions import (
    InvalidInvariantsError,
    NotPositiveDefiniteError,
    SymGaussError,
    UnphysicalStateError,
)
from .ghz import (
    DEFAULT_B_GRID,
    GhzSpec,
    ScalingRow,
    build_ghz,
    ghz_block,
    ghz_covariances,
    ghz_hierarchy,
    ghz_limit,
    scaling_table,
    sweep_records,
)
from .symmetric import (
    OnePlusNInvariants,
    OnePlusNState,
    SymmetricBlock,
    SymmetricBlockParams,
    as_block,
    build_fully_symmetric,
    build_one_plus_n,
    extract_symmetric_block,
    fs_spectrum,
    fs_two_mode_pair,
    global_purity_fs,
    nu_plus_of_N,
    one_plus_n_invariants,
    one_plus_n_spectrum,
    two_mode_nus,
)
from .verify import (
    CrossValidationReport,
    EigenpairCheck,
    check_seralian_identity,
    cross_validate,
    degenerate_eigenvectors,
    stacked_rank,
)

__version__ = "0.1.0"

__all__ = [
    "TOL_PHYSICAL",
    "TOL_SYMMETRY",
    "CovarianceMatrix",
    "ModePartition",
    "PhysicalityReport",
    "SymplecticSpectrum",
    "log_negativity_numeric",
    "partial_transpose",
    "purity",
    "reduce",
    "seralian",
    "symplectic_form",
    "symplectic_spectrum_numeric",
    "validate",
    "NegativityResult",
    "TwoModeEquivalent",
    "entanglement_hierarchy",
    "entropy_of_entanglement",
    "equivalent_two_mode",
    "negativity_from_equivalent",
    "one_by_k_negativity",
    "InvalidInvariantsError",
    "NotPositiveDefiniteError",
    "SymGaussError",
    "UnphysicalStateError",
    "DEFAULT_B_GRID",
    "GhzSpec",
    "ScalingRow",
    "build_ghz",
    "ghz_block",
    "ghz_covariances",
    "ghz_hierarchy",
    "ghz_limit",
    "scaling_table",
    "sweep_records",
    "OnePlusNInvariants",
    "OnePlusNState",
    "SymmetricBlock",
    "SymmetricBlockParams",
    "as_block",
    "build_fully_symmetric",
    "build_one_plus_n",
    "extract_symmetric_block",
    "fs_spectrum",
    "fs_two_mode_pair",
    "global_purity_fs",
    "nu_plus_of_N",
    "one_plus_n_invariants",
    "one_plus_n_spectrum",
    "two_mode_nus",
    "CrossValidationReport",
    "EigenpairCheck",
    "check_seralian_identity",
    "cross_validate",
    "degenerate_eigenvectors",
    "stacked_rank",
    "backend_name",
    "__version__",
]
