"""Seeded random generators for physical states and symplectic maps.

Rejection sampling against the exact physicality tests keeps the
distributions unbiased; every function is deterministic given its
Generator, so corpora are reproducible bit for bit.
"""

import numpy as np

from .core import CovarianceMatrix, validate
from .symmetric import OnePlusNState, SymmetricBlockParams


def random_block_params(rng, n_modes=None, b_range=(1.0, 5.0), max_modes=20):
    """A physical standard-form symmetric block, by rejection.

    Draws b uniformly, e_i uniformly in [-b, b], and keeps the first draw
    whose closed-form eigenvalues satisfy the uncertainty relation with a
    little margin.
    """
    while True:
        n = int(n_modes) if n_modes is not None else int(rng.integers(1, max_modes + 1))
        b = float(rng.uniform(*b_range))
        e1, e2 = (float(e) for e in rng.uniform(-b, b, size=2))
        if (b - e1) * (b - e2) < 1.0 or (b + (n - 1) * e1) * (b + (n - 1) * e2) < 1.0:
            continue
        if b - 0.5 * (e1 + e2) <= 0.0 or b + 0.5 * (n - 1) * (e1 + e2) <= 0.0:
            continue
        return SymmetricBlockParams(b=b, e1=e1, e2=e2, n_modes=n)


def random_one_plus_n(rng, n_block_modes=None, max_block_modes=20, gamma_scale=0.4):
    """A physical 1 + N state, by rejection on the exact numeric test.

    alpha is a squeezed thermal form diag(a s, a / s); gamma a small
    diagonal coupling.  Assemblies failing ``validate`` are redrawn.
    """
    while True:
        block = random_block_params(rng, n_modes=n_block_modes, max_modes=max_block_modes)
        a = float(rng.uniform(1.0, 3.0))
        s = float(rng.uniform(0.6, 1.7))
        alpha = np.diag([a * s, a / s])
        gamma = np.diag(rng.uniform(-gamma_scale, gamma_scale, size=2))
        state = OnePlusNState(alpha=alpha, gamma=gamma, block=block.as_block())
        if validate(state.matrix()).is_physical:
            return state


def random_single_mode_symplectic(rng, max_squeeze=0.8):
    """Random rotation * squeezer * rotation, a generic one-mode symplectic."""
    def rot(theta):
        c, s = np.cos(theta), np.sin(theta)
        return np.array([[c, s], [-s, c]])

    r = float(rng.uniform(-max_squeeze, max_squeeze))
    squeeze = np.diag([np.exp(r), np.exp(-r)])
    return rot(rng.uniform(0, 2 * np.pi)) @ squeeze @ rot(rng.uniform(0, 2 * np.pi))


def random_local_symplectic(rng, n_modes, max_squeeze=0.8):
    """Direct sum of independent single-mode symplectics."""
    out = np.zeros((2 * n_modes, 2 * n_modes))
    for i in range(n_modes):
        out[2 * i : 2 * i + 2, 2 * i : 2 * i + 2] = random_single_mode_symplectic(
            rng, max_squeeze
        )
    return out


def _beamsplitter(n_modes, i, j, theta):
    out = np.eye(2 * n_modes)
    c, s = np.cos(theta), np.sin(theta)
    for k in (0, 1):
        out[2 * i + k, 2 * i + k] = c
        out[2 * j + k, 2 * j + k] = c
        out[2 * i + k, 2 * j + k] = s
        out[2 * j + k, 2 * i + k] = -s
    return out


def random_symplectic(rng, n_modes, layers=3, max_squeeze=0.6):
    """Random multimode symplectic: alternating local layers and mode mixers."""
    total = random_local_symplectic(rng, n_modes, max_squeeze)
    for _ in range(layers):
        if n_modes > 1:
            i, j = rng.choice(n_modes, size=2, replace=False)
            total = _beamsplitter(n_modes, int(i), int(j), rng.uniform(0, 2 * np.pi)) @ total
        total = random_local_symplectic(rng, n_modes, max_squeeze) @ total
    return total


def random_physical_cm(rng, n_modes, max_thermal=3.0, layers=3):
    """Random physical covariance matrix: S @ diag(nu) @ S.T with nu >= 1."""
    nus = rng.uniform(1.0, max_thermal, size=n_modes)
    diag = np.repeat(nus, 2)
    s = random_symplectic(rng, n_modes, layers=layers)
    return CovarianceMatrix(s @ np.diag(diag) @ s.T)
