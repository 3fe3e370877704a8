"""Numeric witnesses for the closed-form results, plus corpus cross-validation.

The degenerate branch of a symmetric block's spectrum has an explicit
eigenvector construction (antisymmetric support on a mode pair); this
module builds those vectors and measures their residuals, checks the
invariant identity behind the 1 + N spectrum, and runs a seeded random
corpus comparing every closed form against the numeric oracle.
"""

import json
from dataclasses import dataclass, field

import numpy as np

from .core import (
    CovarianceMatrix,
    log_negativity_numeric,
    seralian,
    symplectic_spectrum_numeric,
)
from .entanglement import equivalent_two_mode, negativity_from_equivalent
from .exceptions import UnphysicalStateError
from .sampling import random_block_params, random_one_plus_n
from .symmetric import (
    SymmetricBlockParams,
    build_fully_symmetric,
    fs_spectrum,
    fs_two_mode_pair,
    nu_plus_of_N,
    one_plus_n_invariants,
    one_plus_n_spectrum,
)

DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class EigenpairCheck:
    """A candidate eigenpair of i Omega sigma with its verification residual."""

    vector: np.ndarray
    eigenvalue: float
    residual: float

    @property
    def norm(self):
        """Max-norm of the vector (the residual's reference scale)."""
        return float(np.max(np.abs(self.vector)))

    def passes(self, tol=DEFAULT_TOLERANCE):
        return self.residual < tol * self.norm

    def interleaved(self):
        """Vector as a flat list of (real, imag) pairs, for serialization."""
        out = []
        for z in self.vector:
            out.extend((float(z.real), float(z.imag)))
        return out


def _check_eigenpair(sigma, vector, eigenvalue):
    """Max-norm residual of (i Omega sigma) v - nu v, one complex matvec."""
    image = sigma @ vector
    rotated = np.empty_like(image)
    rotated[0::2] = image[1::2]
    rotated[1::2] = -image[0::2]
    return float(np.max(np.abs(1j * rotated - eigenvalue * vector)))


def degenerate_eigenvectors(params):
    """Explicit eigenvectors for the degenerate branch of a symmetric block.

    For each mode pair (0, j), j = 1 .. N-1, the vector carrying
    (-1, +i (b - e1) / nu) on mode 0, the opposite on mode j and zeros
    elsewhere satisfies (i Omega sigma) v = nu v with
    nu = sqrt((b - e1)(b - e2)).  The N - 1 vectors are linearly
    independent, which pins the eigenvalue's multiplicity.
    """
    if not isinstance(params, SymmetricBlockParams):
        raise TypeError("standard-form block parameters are required")
    n = params.n_modes
    if n < 2:
        raise ValueError(f"need at least 2 modes, got {n}")
    nu_sq = (params.b - params.e1) * (params.b - params.e2)
    if nu_sq <= 0.0:
        raise UnphysicalStateError(
            f"degenerate eigenvalue squared = {nu_sq:.6g} <= 0"
        )
    nu = float(np.sqrt(nu_sq))
    ratio = (params.b - params.e1) / nu
    sigma = build_fully_symmetric(params).entries

    checks = []
    for j in range(1, n):
        vec = np.zeros(2 * n, dtype=complex)
        vec[0] = -1.0
        vec[1] = 1j * ratio
        vec[2 * j] = 1.0
        vec[2 * j + 1] = -1j * ratio
        vec.setflags(write=False)
        checks.append(
            EigenpairCheck(
                vector=vec,
                eigenvalue=nu,
                residual=_check_eigenpair(sigma, vec, nu),
            )
        )
    return checks


def stacked_rank(checks, strong=1e-6):
    """Numeric rank of the stacked eigenvectors (singular value threshold)."""
    stack = np.array([c.vector for c in checks])
    svals = np.linalg.svd(stack, compute_uv=False)
    if svals.size == 0 or svals[0] == 0.0:
        return 0
    return int(np.count_nonzero(svals > strong * svals[0]))


def check_seralian_identity(state):
    """Absolute residual of the invariant identity behind the 1 + N spectrum.

    |Delta_sigma - delta_ag - (N-1) nu_deg**2 - nu_top**2| with
    Delta_sigma summed numerically from the assembled matrix blocks.
    """
    inv = one_plus_n_invariants(state)
    deg_sq, top_sq = fs_two_mode_pair(state.block)
    n = state.n_block_modes
    numeric = seralian(CovarianceMatrix(state.matrix()))
    analytic = inv.delta_ag + (n - 1) * deg_sq + top_sq
    return abs(numeric - analytic)


_IDENTITIES = (
    "fs_spectrum_vs_oracle",
    "one_plus_n_spectrum_vs_oracle",
    "negativity_equivalence",
    "nu_top_two_routes",
    "seralian_identity",
    "appendix_eigenpairs",
    "appendix_rank",
)


@dataclass
class CrossValidationReport:
    """Per-identity worst residuals over a seeded corpus."""

    corpus_size: int
    seed: int
    tolerance: float
    max_residuals: dict
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def to_dict(self):
        return {
            "corpus_size": self.corpus_size,
            "seed": self.seed,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "max_residuals": self.max_residuals,
            "n_failures": len(self.failures),
        }

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent)


def _rel_residual(analytic, oracle):
    analytic = np.atleast_1d(np.asarray(analytic, dtype=float))
    oracle = np.atleast_1d(np.asarray(oracle, dtype=float))
    return float(np.max(np.abs(analytic - oracle) / np.maximum(1.0, np.abs(oracle))))


def cross_validate(
    corpus_size=1000,
    seed=7,
    tolerance=DEFAULT_TOLERANCE,
    max_block_modes=20,
    replay_path=None,
):
    """Check every closed form against the numeric oracle on a random corpus.

    Deterministic given (corpus_size, seed).  Each corpus item contributes
    one standard-form symmetric block and one 1 + N state; residuals are
    folded into per-identity maxima.  Items exceeding ``tolerance`` are
    recorded (and serialized to ``replay_path`` as JSON lines when given).
    """
    rng = np.random.default_rng(seed)
    report = CrossValidationReport(
        corpus_size=int(corpus_size),
        seed=int(seed),
        tolerance=float(tolerance),
        max_residuals={name: 0.0 for name in _IDENTITIES},
    )

    def record(identity, residual, payload):
        report.max_residuals[identity] = max(
            report.max_residuals[identity], residual
        )
        if residual > tolerance:
            report.failures.append(
                {"identity": identity, "residual": residual, **payload}
            )

    for index in range(int(corpus_size)):
        params = random_block_params(rng, max_modes=max_block_modes)
        block_payload = {"index": index, "params": params.to_dict()}

        analytic = fs_spectrum(params).as_array()
        oracle = symplectic_spectrum_numeric(build_fully_symmetric(params)).as_array()
        record("fs_spectrum_vs_oracle", _rel_residual(analytic, oracle), block_payload)

        deg_sq, top_sq = fs_two_mode_pair(params)
        pair2_deg, pair2_top = fs_two_mode_pair(
            SymmetricBlockParams(params.b, params.e1, params.e2, 2)
        )
        via_invariants = nu_plus_of_N(
            mu_beta=1.0 / params.b,
            nu_plus=np.sqrt(pair2_top),
            nu_minus=np.sqrt(pair2_deg),
            n_modes=params.n_modes,
        )
        record(
            "nu_top_two_routes",
            _rel_residual(via_invariants, np.sqrt(top_sq)),
            block_payload,
        )

        if params.n_modes >= 2:
            checks = degenerate_eigenvectors(params)
            worst = max(c.residual / c.norm for c in checks)
            record("appendix_eigenpairs", worst, block_payload)
            rank_gap = abs(stacked_rank(checks) - (params.n_modes - 1))
            record("appendix_rank", float(rank_gap), block_payload)

        state = random_one_plus_n(rng, max_block_modes=max_block_modes)
        state_payload = {"index": index, "state": state.to_dict()}
        cm = CovarianceMatrix(state.matrix())

        analytic = one_plus_n_spectrum(state).as_array()
        oracle = symplectic_spectrum_numeric(cm).as_array()
        record(
            "one_plus_n_spectrum_vs_oracle",
            _rel_residual(analytic, oracle),
            state_payload,
        )

        closed_form = negativity_from_equivalent(equivalent_two_mode(state)).value
        numeric = log_negativity_numeric(cm, [0])
        record(
            "negativity_equivalence",
            _rel_residual(closed_form, numeric),
            state_payload,
        )

        record("seralian_identity", check_seralian_identity(state), state_payload)

    if report.failures and replay_path is not None:
        with open(replay_path, "w", encoding="utf-8") as fh:
            for failure in report.failures:
                fh.write(json.dumps(failure))
                fh.write("\n")
    return report
