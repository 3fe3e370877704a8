"""Covariance-matrix algebra for multimode Gaussian states.

Conventions, fixed throughout the package:

* quadrature ordering (x1, p1, ..., xN, pN);
* one-mode symplectic form [[0, 1], [-1, 0]];
* vacuum covariance matrix = identity, so physical states have every
  symplectic eigenvalue >= 1;
* natural logarithms everywhere.
"""

import json
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .exceptions import NotPositiveDefiniteError, UnphysicalStateError

#: absolute tolerance on the smallest symplectic eigenvalue for physicality
TOL_PHYSICAL = 1e-9
#: readers reject matrices whose asymmetry exceeds this
TOL_SYMMETRY = 1e-12


class CovarianceMatrix:
    """A 2N x 2N real symmetric covariance matrix.

    The stored array is symmetrized exactly on construction and marked
    read-only; treat instances as immutable values.

    Parameters
    ----------
    entries : array_like
        Square matrix of even dimension; asymmetry beyond 1e-12
        (relative to the largest entry) is rejected.
    """

    __slots__ = ("entries", "n_modes")

    def __init__(self, entries):
        arr = np.array(entries, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {arr.shape}")
        if arr.shape[0] % 2 != 0 or arr.shape[0] == 0:
            raise ValueError(
                f"covariance matrices have even dimension 2N, got {arr.shape[0]}"
            )
        scale = max(1.0, float(np.max(np.abs(arr))))
        asym = float(np.max(np.abs(arr - arr.T)))
        if asym > TOL_SYMMETRY * scale:
            raise ValueError(
                f"matrix is not symmetric (max |a - a.T| = {asym:.3e})"
            )
        arr = 0.5 * (arr + arr.T)
        arr.setflags(write=False)
        self.entries = arr
        self.n_modes = arr.shape[0] // 2

    def block(self, i, j):
        """The 2x2 sub-block coupling modes ``i`` and ``j``."""
        return self.entries[2 * i : 2 * i + 2, 2 * j : 2 * j + 2]

    def to_dict(self):
        return {"n_modes": self.n_modes, "entries": self.entries.tolist()}

    @classmethod
    def from_dict(cls, data):
        cm = cls(data["entries"])
        if "n_modes" in data and int(data["n_modes"]) != cm.n_modes:
            raise ValueError(
                f"n_modes field ({data['n_modes']}) does not match a "
                f"{cm.entries.shape[0]}x{cm.entries.shape[0]} matrix"
            )
        return cm

    def to_json(self, indent=None):
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def save(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_json(indent=2))
            fh.write("\n")

    @classmethod
    def load(cls, path):
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_json(fh.read())

    def __repr__(self):
        return f"CovarianceMatrix(n_modes={self.n_modes})"


@dataclass(frozen=True)
class SymplecticSpectrum:
    """Ordered symplectic eigenvalues of a covariance matrix."""

    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))

    @property
    def n_modes(self):
        return len(self.values)

    @property
    def min(self):
        return self.values[0]

    def as_array(self):
        return np.array(self.values)

    def product_of_squares(self):
        """Equals det(sigma) for the source matrix."""
        return float(np.prod(np.square(self.values)))

    def sum_of_squares(self):
        """Equals the seralian invariant of the source matrix."""
        return float(np.sum(np.square(self.values)))


@dataclass(frozen=True)
class ModePartition:
    """Mode index sets for partial transposition and reductions."""

    transposed_modes: tuple = ()
    kept_modes: tuple = ()


@dataclass(frozen=True)
class PhysicalityReport:
    is_physical: bool
    min_nu: float
    positive_definite: bool

    def to_dict(self):
        return {
            "is_physical": self.is_physical,
            "min_nu": self.min_nu,
            "positive_definite": self.positive_definite,
        }


def _as_cm(cm):
    return cm if isinstance(cm, CovarianceMatrix) else CovarianceMatrix(cm)


def _mode_indices(spec, n_modes, what, attr):
    if isinstance(spec, ModePartition):
        spec = getattr(spec, attr)
    modes = [int(m) for m in spec]
    if not modes:
        raise ValueError(f"{what} requires a nonempty set of mode indices")
    if len(set(modes)) != len(modes):
        raise ValueError(f"duplicate mode indices in {what}: {modes}")
    for m in modes:
        if not 0 <= m < n_modes:
            raise ValueError(
                f"mode index {m} out of range for {n_modes} modes"
            )
    return modes


def symplectic_form(n_modes):
    """The 2N x 2N symplectic form: direct sum of [[0, 1], [-1, 0]] blocks."""
    if n_modes < 1:
        raise ValueError("n_modes must be >= 1")
    one = np.array([[0.0, 1.0], [-1.0, 0.0]])
    return np.kron(np.eye(n_modes), one)


def symplectic_spectrum_numeric(cm):
    """Symplectic eigenvalues of a covariance matrix, ascending.

    This is the package's numeric oracle: a symmetric eigendecomposition
    followed by an SVD, with no closed-form shortcuts.

    Raises
    ------
    NotPositiveDefiniteError
        If the matrix is not positive definite.
    """
    cm = _as_cm(cm)
    return SymplecticSpectrum(kernels.symplectic_eigenvalues(cm.entries))


def validate(cm, tol=TOL_PHYSICAL):
    """Check the uncertainty relation: positive definite and min nu >= 1 - tol."""
    cm = _as_cm(cm)
    try:
        spectrum = symplectic_spectrum_numeric(cm)
    except NotPositiveDefiniteError:
        return PhysicalityReport(
            is_physical=False, min_nu=float("nan"), positive_definite=False
        )
    return PhysicalityReport(
        is_physical=bool(spectrum.min >= 1.0 - tol),
        min_nu=spectrum.min,
        positive_definite=True,
    )


def purity(cm, tol=TOL_PHYSICAL):
    """Purity det(sigma) ** -0.5, in (0, 1] for physical states."""
    cm = _as_cm(cm)
    sign, logdet = np.linalg.slogdet(cm.entries)
    if sign <= 0 or np.exp(logdet) < 1.0 - tol:
        raise UnphysicalStateError(
            f"det(sigma) = {sign * np.exp(logdet):.6e} < 1; purity undefined"
        )
    return float(np.exp(-0.5 * logdet))


def seralian(cm):
    """Sum of the determinants of all per-mode 2x2 sub-blocks.

    A global symplectic invariant equal to the sum of squared symplectic
    eigenvalues: sum_i det(b_ii) + 2 sum_{i<j} det(b_ij).
    """
    cm = _as_cm(cm)
    total = 0.0
    for i in range(cm.n_modes):
        total += float(np.linalg.det(cm.block(i, i)))
        for j in range(i + 1, cm.n_modes):
            total += 2.0 * float(np.linalg.det(cm.block(i, j)))
    return total


def partial_transpose(cm, transposed_modes):
    """Mirror-reflect the p quadrature of the given modes: sigma -> P sigma P.

    An involution that preserves det(sigma); the result fails ``validate``
    exactly when the state is entangled across a 1 x N split of the
    transposed modes versus the rest.
    """
    cm = _as_cm(cm)
    modes = _mode_indices(
        transposed_modes, cm.n_modes, "partial transposition", "transposed_modes"
    )
    signs = np.ones(2 * cm.n_modes)
    for m in modes:
        signs[2 * m + 1] = -1.0
    return CovarianceMatrix(cm.entries * np.outer(signs, signs))


def reduce(cm, kept_modes):
    """Covariance matrix of the reduced state on ``kept_modes`` (mode tracing)."""
    cm = _as_cm(cm)
    modes = _mode_indices(kept_modes, cm.n_modes, "reduction", "kept_modes")
    idx = np.array([2 * m + k for m in modes for k in (0, 1)])
    return CovarianceMatrix(cm.entries[np.ix_(idx, idx)])


def log_negativity_numeric(cm, transposed_modes):
    """Logarithmic negativity across the given bipartition, in nats.

    Partial-transposes the listed modes, computes the symplectic spectrum
    of the result and returns -sum(ln nu) over eigenvalues below 1 (zero if
    none are).  For 1 x N partitions a zero value certifies separability.
    """
    cm = _as_cm(cm)
    transposed = partial_transpose(cm, transposed_modes)
    values = symplectic_spectrum_numeric(transposed).as_array()
    below = values[values < 1.0]
    if below.size == 0:
        return 0.0
    return float(-np.sum(np.log(below)))
