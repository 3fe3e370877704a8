"""Pure NumPy implementation of the dense numeric kernels.

The compiled twin (``_kernels_cy``) exposes the same functions; whichever
is active is chosen in ``_backend``.  Quadrature ordering is
(x1, p1, ..., xN, pN) with the one-mode form [[0, 1], [-1, 0]].
"""

import numpy as np

from .exceptions import NotPositiveDefiniteError

BACKEND_NAME = "python"


def apply_form(mat):
    """Left-multiply a 2N x 2N matrix by the symplectic form (no matrix build)."""
    out = np.empty_like(mat)
    out[0::2] = mat[1::2]
    out[1::2] = -mat[0::2]
    return out


def symplectic_eigenvalues(sigma):
    """Symplectic spectrum of a symmetric positive definite matrix, ascending.

    Computes the symmetric square root G of ``sigma`` by eigendecomposition,
    then the singular values of the antisymmetric product G @ Omega @ G.
    Those occur in equal pairs, one pair per mode; pair averages are returned.

    Raises
    ------
    NotPositiveDefiniteError
        If ``sigma`` has a non-positive eigenvalue.
    """
    sigma = np.asarray(sigma, dtype=float)
    w, v = np.linalg.eigh(sigma)
    if w[0] <= 0.0:
        raise NotPositiveDefiniteError(
            f"matrix is not positive definite (smallest eigenvalue {w[0]:.3e})"
        )
    root = (v * np.sqrt(w)) @ v.T
    root = 0.5 * (root + root.T)
    prod = root @ apply_form(root)
    singular = np.linalg.svd(prod, compute_uv=False)
    # descending, doubly degenerate: average each pair
    return np.sort(0.5 * (singular[0::2] + singular[1::2]))
