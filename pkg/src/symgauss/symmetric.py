"""Fully symmetric N-mode blocks and single-mode-plus-block states.

A fully symmetric state has the 2x2 block structure ``beta`` on the
diagonal and ``eps`` everywhere off the diagonal; its symplectic spectrum
is closed-form.  A "1 + N" state couples one extra mode (``alpha``) to
every mode of such a block through the same 2x2 matrix ``gamma``; its
spectrum is closed-form too, given a handful of symplectic invariants.
"""

from dataclasses import dataclass

import numpy as np

from .core import (
    TOL_PHYSICAL,
    CovarianceMatrix,
    SymplecticSpectrum,
    validate,
)
from .exceptions import InvalidInvariantsError, UnphysicalStateError


def _as_2x2(mat, name, symmetric=True):
    arr = np.array(mat, dtype=float)
    if arr.shape != (2, 2):
        raise ValueError(f"{name} must be 2x2, got shape {arr.shape}")
    if symmetric:
        if abs(arr[0, 1] - arr[1, 0]) > 1e-12 * max(1.0, np.max(np.abs(arr))):
            raise ValueError(f"{name} must be symmetric")
        arr = 0.5 * (arr + arr.T)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class SymmetricBlockParams:
    """Standard-form parameters of a fully symmetric block.

    ``beta = diag(b, b)`` on the diagonal, ``eps = diag(e1, e2)`` off it;
    ``b`` is the inverse single-mode purity.
    """

    b: float
    e1: float
    e2: float
    n_modes: int

    def __post_init__(self):
        if self.n_modes < 1:
            raise ValueError("n_modes must be >= 1")

    @property
    def beta(self):
        return np.diag([self.b, self.b])

    @property
    def eps(self):
        return np.diag([self.e1, self.e2])

    def as_block(self):
        return SymmetricBlock(self.beta, self.eps, self.n_modes)

    def to_dict(self):
        return {"b": self.b, "e1": self.e1, "e2": self.e2, "n": self.n_modes}

    @classmethod
    def from_dict(cls, data):
        return cls(
            b=float(data["b"]),
            e1=float(data["e1"]),
            e2=float(data["e2"]),
            n_modes=int(data["n"]),
        )


@dataclass(frozen=True, eq=False)
class SymmetricBlock:
    """General-form fully symmetric block: symmetric 2x2 ``beta`` and ``eps``.

    Every quantity computed downstream depends on the blocks only through
    determinants (det beta, det eps, det(beta -+ eps), ...), so no
    reduction to standard form is ever needed.
    """

    beta: np.ndarray
    eps: np.ndarray
    n_modes: int

    def __post_init__(self):
        object.__setattr__(self, "beta", _as_2x2(self.beta, "beta"))
        object.__setattr__(self, "eps", _as_2x2(self.eps, "eps"))
        if self.n_modes < 1:
            raise ValueError("n_modes must be >= 1")

    @property
    def det_beta(self):
        return float(np.linalg.det(self.beta))

    @property
    def det_eps(self):
        return float(np.linalg.det(self.eps))

    def to_dict(self):
        return {
            "beta": self.beta.tolist(),
            "eps": self.eps.tolist(),
            "n": self.n_modes,
        }


def as_block(block):
    """Coerce SymmetricBlockParams | SymmetricBlock to SymmetricBlock."""
    if isinstance(block, SymmetricBlock):
        return block
    if isinstance(block, SymmetricBlockParams):
        return block.as_block()
    raise TypeError(f"expected a symmetric block, got {type(block).__name__}")


def _combo_det(block, coeff):
    """det(beta + coeff * eps) and its trace, the two-by-two invariants."""
    mat = block.beta + coeff * block.eps
    return float(np.linalg.det(mat)), float(np.trace(mat))


def fs_two_mode_pair(block):
    """The two distinct squared eigenvalue radicands of a symmetric block.

    Returns ``(nu_deg_sq, nu_top_sq)`` where ``nu_deg_sq = det(beta - eps)``
    is the (N-1)-fold degenerate branch and
    ``nu_top_sq = det(beta + (N-1) eps)`` the remaining one.  Note the
    degenerate branch is identified structurally, not by magnitude: it may
    be the larger of the two.
    """
    block = as_block(block)
    deg_sq, _ = _combo_det(block, -1.0)
    top_sq, _ = _combo_det(block, block.n_modes - 1.0)
    return deg_sq, top_sq


def fs_spectrum(block):
    """Closed-form symplectic spectrum of a fully symmetric block, ascending.

    ``nu_deg = sqrt(det(beta - eps))`` with multiplicity N - 1 and
    ``nu_top = sqrt(det(beta + (N-1) eps))`` once.
    """
    block = as_block(block)
    deg_sq, top_sq = fs_two_mode_pair(block)
    if top_sq < 0.0 or (block.n_modes > 1 and deg_sq < 0.0):
        raise UnphysicalStateError(
            f"negative eigenvalue radicand: det(beta - eps) = {deg_sq:.6g}, "
            f"det(beta + (N-1) eps) = {top_sq:.6g}"
        )
    values = [np.sqrt(deg_sq)] * (block.n_modes - 1) + [np.sqrt(top_sq)]
    return SymplecticSpectrum(sorted(values))


def _check_block_physical(block, tol=TOL_PHYSICAL):
    block = as_block(block)
    deg_sq, deg_tr = _combo_det(block, -1.0)
    top_sq, top_tr = _combo_det(block, block.n_modes - 1.0)
    checks = [(top_sq, top_tr, "beta + (N-1) eps")]
    if block.n_modes > 1:
        checks.append((deg_sq, deg_tr, "beta - eps"))
    for det, tr, label in checks:
        if det < 1.0 - tol or tr <= 0.0:
            raise UnphysicalStateError(
                f"unphysical block parameters: det({label}) = {det:.6g} "
                f"(need >= 1), trace = {tr:.6g} (need > 0)",
                min_nu=np.sqrt(det) if det >= 0 else float("nan"),
            )
    return block


def build_fully_symmetric(block):
    """Assemble the 2N x 2N covariance matrix of a fully symmetric state.

    Raises ``UnphysicalStateError`` for parameters violating the
    uncertainty relation (closed-form eigenvalue check).
    """
    block = _check_block_physical(as_block(block))
    n = block.n_modes
    out = np.tile(block.eps, (n, n))
    for i in range(n):
        out[2 * i : 2 * i + 2, 2 * i : 2 * i + 2] = block.beta
    return CovarianceMatrix(out)


def two_mode_nus(mu2, delta2):
    """Two-mode symplectic pair from the invariants (purity, seralian).

    Solves 2 nu**2 = delta -+ sqrt(delta**2 - 4 / mu**2); returned as
    ``(nu_minus, nu_plus)``, ascending.  The smaller root is evaluated
    through the product identity nu_minus**2 * nu_plus**2 = 1 / mu**2,
    which is exact and avoids cancellation.
    """
    if mu2 <= 0.0:
        raise InvalidInvariantsError(f"purity must be positive, got {mu2}")
    det = 1.0 / (mu2 * mu2)
    disc = delta2 * delta2 - 4.0 * det
    if disc < 0.0:
        if disc < -1e-12 * max(delta2 * delta2, 4.0 * det):
            raise InvalidInvariantsError(
                f"no real two-mode spectrum for purity {mu2}, seralian "
                f"{delta2} (discriminant {disc:.3e})"
            )
        disc = 0.0
    nu_plus_sq = 0.5 * (delta2 + np.sqrt(disc))
    if nu_plus_sq <= 0.0:
        raise InvalidInvariantsError(
            f"invalid invariant pair (purity {mu2}, seralian {delta2})"
        )
    nu_minus_sq = det / nu_plus_sq
    return float(np.sqrt(nu_minus_sq)), float(np.sqrt(nu_plus_sq))


def nu_plus_of_N(mu_beta, nu_plus, nu_minus, n_modes):
    """Non-degenerate eigenvalue of an N-mode symmetric block from one- and
    two-mode data alone.

    ``nu_plus`` and ``nu_minus`` are the two-mode-block pair in structural
    labelling (``nu_minus`` the degenerate branch); ``mu_beta`` the
    single-mode purity.  Must agree with the direct block determinant.
    """
    n = int(n_modes)
    if n < 1:
        raise ValueError("n_modes must be >= 1")
    val_sq = -n * (n - 2) / mu_beta**2 + 0.5 * (n - 1) * (
        n * nu_plus**2 + (n - 2) * nu_minus**2
    )
    if val_sq < 0.0:
        if val_sq < -1e-12 * max(1.0, nu_plus**2):
            raise InvalidInvariantsError(
                f"inconsistent inputs: squared eigenvalue {val_sq:.6g} < 0"
            )
        val_sq = 0.0
    return float(np.sqrt(val_sq))


def global_purity_fs(block):
    """Global purity of a fully symmetric state: 1 / (nu_deg**(N-1) nu_top)."""
    block = as_block(block)
    deg_sq, top_sq = fs_two_mode_pair(block)
    if top_sq <= 0.0 or (block.n_modes > 1 and deg_sq <= 0.0):
        raise UnphysicalStateError("block has no real spectrum")
    power = deg_sq ** (0.5 * (block.n_modes - 1)) if block.n_modes > 1 else 1.0
    return float(1.0 / (power * np.sqrt(top_sq)))


@dataclass(frozen=True, eq=False)
class OnePlusNState:
    """One arbitrary mode coupled identically to every mode of a symmetric block.

    ``alpha`` is the single-mode covariance block, ``gamma`` the 2x2
    coupling repeated across the block row, and ``block`` the fully
    symmetric N-mode part.  Mode 0 of the assembled matrix is the alpha
    mode.
    """

    alpha: np.ndarray
    gamma: np.ndarray
    block: SymmetricBlock

    def __post_init__(self):
        object.__setattr__(self, "alpha", _as_2x2(self.alpha, "alpha"))
        object.__setattr__(
            self, "gamma", _as_2x2(self.gamma, "gamma", symmetric=False)
        )
        object.__setattr__(self, "block", as_block(self.block))

    @property
    def n_block_modes(self):
        return self.block.n_modes

    @property
    def total_modes(self):
        return self.block.n_modes + 1

    def matrix(self):
        """Assembled (2N+2) x (2N+2) array, without any physicality check."""
        n = self.block.n_modes
        out = np.zeros((2 * n + 2, 2 * n + 2))
        out[:2, :2] = self.alpha
        for j in range(1, n + 1):
            out[:2, 2 * j : 2 * j + 2] = self.gamma
            out[2 * j : 2 * j + 2, :2] = self.gamma.T
        sub = np.tile(self.block.eps, (n, n))
        for i in range(n):
            sub[2 * i : 2 * i + 2, 2 * i : 2 * i + 2] = self.block.beta
        out[2:, 2:] = sub
        return out

    def to_dict(self):
        return {
            "alpha": self.alpha.tolist(),
            "gamma": self.gamma.tolist(),
            "block": self.block.to_dict(),
        }

    @classmethod
    def from_dict(cls, data):
        blk = data["block"]
        if "b" in blk:
            block = SymmetricBlockParams.from_dict(blk).as_block()
        else:
            block = SymmetricBlock(blk["beta"], blk["eps"], int(blk["n"]))
        return cls(alpha=data["alpha"], gamma=data["gamma"], block=block)


@dataclass(frozen=True)
class OnePlusNInvariants:
    """Symplectic invariants of a 1 + N state.

    ``delta_ag = det alpha + 2N det gamma`` is the only quantity partial
    transposition touches; it maps to ``delta_ag_tilde``, and the two sum
    to 2 / mu_alpha**2 identically.
    """

    delta_ag: float
    delta_bN: float
    delta_ag_tilde: float
    mu_alpha: float
    mu_betaN: float
    mu_sigma: float


def build_one_plus_n(state, tol=TOL_PHYSICAL):
    """Assemble and validate the covariance matrix of a 1 + N state.

    Raises ``UnphysicalStateError`` (with the offending minimum symplectic
    eigenvalue attached) when the assembly violates the uncertainty
    relation.
    """
    mat = state.matrix()
    report = validate(mat, tol=tol)
    if not report.is_physical:
        raise UnphysicalStateError(
            f"assembled state is unphysical (min nu = {report.min_nu})",
            min_nu=report.min_nu,
        )
    return CovarianceMatrix(mat)


def one_plus_n_invariants(state):
    """All invariants needed for the closed-form spectrum and negativity."""
    n = state.n_block_modes
    det_alpha = float(np.linalg.det(state.alpha))
    det_gamma = float(np.linalg.det(state.gamma))
    if det_alpha <= 0.0:
        raise UnphysicalStateError(f"det(alpha) = {det_alpha:.6g} <= 0")
    sign, logdet = np.linalg.slogdet(state.matrix())
    if sign <= 0.0:
        raise UnphysicalStateError("assembled matrix has non-positive determinant")
    block = state.block
    return OnePlusNInvariants(
        delta_ag=det_alpha + 2.0 * n * det_gamma,
        delta_bN=n * (block.det_beta + (n - 1) * block.det_eps),
        delta_ag_tilde=det_alpha - 2.0 * n * det_gamma,
        mu_alpha=det_alpha**-0.5,
        mu_betaN=global_purity_fs(block),
        mu_sigma=float(np.exp(-0.5 * logdet)),
    )


def _nu_deg_and_pow(block):
    """Degenerate block eigenvalue and its (N-1)-th power (1.0 when N = 1)."""
    if block.n_modes == 1:
        return 1.0, 1.0
    deg_sq, _ = _combo_det(block, -1.0)
    if deg_sq <= 0.0:
        raise UnphysicalStateError(
            f"det(beta - eps) = {deg_sq:.6g} <= 0; block is unphysical"
        )
    nu_deg = float(np.sqrt(deg_sq))
    return nu_deg, nu_deg ** (block.n_modes - 1)


def one_plus_n_spectrum(state):
    """Closed-form symplectic spectrum of a 1 + N state, ascending.

    The block's degenerate eigenvalue survives the coupling with
    multiplicity N - 1; the remaining pair comes from the invariant pair
    (nu_deg**(N-1) mu_sigma, delta_ag + nu_top**2).
    """
    inv = one_plus_n_invariants(state)
    block = state.block
    nu_deg, nu_pow = _nu_deg_and_pow(block)
    nu_top = 1.0 / (nu_pow * inv.mu_betaN)
    lo, hi = two_mode_nus(nu_pow * inv.mu_sigma, inv.delta_ag + nu_top**2)
    values = [nu_deg] * (block.n_modes - 1) + [lo, hi]
    return SymplecticSpectrum(sorted(values))


def extract_symmetric_block(cm):
    """Recover (beta, eps, N) from a fully symmetric covariance matrix.

    Rejects matrices that are not invariant under mode exchange (any
    diagonal block differing from beta or off-diagonal block from eps
    beyond 1e-10 of the matrix scale).
    """
    if not isinstance(cm, CovarianceMatrix):
        cm = CovarianceMatrix(cm)
    beta = cm.block(0, 0)
    if cm.n_modes == 1:
        return SymmetricBlock(beta, np.zeros((2, 2)), 1)
    eps = cm.block(0, 1)
    tol = 1e-10 * max(1.0, float(np.max(np.abs(cm.entries))))
    for i in range(cm.n_modes):
        if np.max(np.abs(cm.block(i, i) - beta)) > tol:
            raise ValueError("matrix is not fully symmetric (diagonal blocks differ)")
        for j in range(i + 1, cm.n_modes):
            if np.max(np.abs(cm.block(i, j) - eps)) > tol:
                raise ValueError(
                    "matrix is not fully symmetric (off-diagonal blocks differ)"
                )
    return SymmetricBlock(beta, eps, cm.n_modes)
