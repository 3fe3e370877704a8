# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled dense kernels: cyclic Jacobi eigendecomposition pipeline.

Mirrors ``_kernels_py`` (same function names and contracts); the backend
module picks whichever is importable.  Everything here is plain C loops on
typed memoryviews, so the extension builds without the NumPy C API.
"""

import numpy as np

from libc.math cimport atan2, cos, fabs, sin, sqrt

from .exceptions import NotPositiveDefiniteError

BACKEND_NAME = "compiled"


cdef double _offdiag_norm(double[:, ::1] a, Py_ssize_t n) noexcept:
    cdef double acc = 0.0
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(i + 1, n):
            acc += a[i, j] * a[i, j]
    return sqrt(2.0 * acc)


cdef void _rotate(double[:, ::1] a, double[:, ::1] v, Py_ssize_t n,
                  Py_ssize_t p, Py_ssize_t q, bint with_vectors) noexcept:
    # One Jacobi rotation zeroing a[p, q]; updates the full symmetric matrix.
    cdef double app = a[p, p]
    cdef double aqq = a[q, q]
    cdef double apq = a[p, q]
    cdef double phi = 0.5 * atan2(2.0 * apq, aqq - app)
    cdef double c = cos(phi)
    cdef double s = sin(phi)
    cdef double aip, aiq, vip, viq
    cdef Py_ssize_t i

    a[p, p] = c * c * app - 2.0 * s * c * apq + s * s * aqq
    a[q, q] = s * s * app + 2.0 * s * c * apq + c * c * aqq
    a[p, q] = 0.0
    a[q, p] = 0.0
    for i in range(n):
        if i == p or i == q:
            continue
        aip = a[i, p]
        aiq = a[i, q]
        a[i, p] = c * aip - s * aiq
        a[p, i] = a[i, p]
        a[i, q] = s * aip + c * aiq
        a[q, i] = a[i, q]
    if with_vectors:
        for i in range(n):
            vip = v[i, p]
            viq = v[i, q]
            v[i, p] = c * vip - s * viq
            v[i, q] = s * vip + c * viq


cdef void _jacobi(double[:, ::1] a, double[:, ::1] v, Py_ssize_t n,
                  bint with_vectors) noexcept:
    cdef Py_ssize_t i, j, p, q, sweep
    cdef double fro = 0.0
    cdef double thresh

    if with_vectors:
        for i in range(n):
            for j in range(n):
                v[i, j] = 1.0 if i == j else 0.0
    for i in range(n):
        for j in range(n):
            fro += a[i, j] * a[i, j]
    fro = sqrt(fro)
    if fro == 0.0:
        return
    thresh = 1e-15 * fro
    for sweep in range(60):
        if _offdiag_norm(a, n) <= thresh:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if fabs(a[p, q]) > 0.0:
                    _rotate(a, v, n, p, q, with_vectors)


def jacobi_eigh(mat):
    """Eigenvalues (ascending) and eigenvectors of a symmetric matrix."""
    a = np.array(mat, dtype=np.float64, order="C")
    cdef Py_ssize_t n = a.shape[0]
    v = np.empty((n, n), dtype=np.float64)
    _jacobi(a, v, n, True)
    w = np.diagonal(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], np.asarray(v)[:, order]


def symplectic_eigenvalues(sigma):
    """Symplectic spectrum of a symmetric positive definite matrix, ascending.

    Same pipeline as the NumPy twin: symmetric square root G, then the
    (pairwise degenerate) singular values of G @ Omega @ G, obtained here
    as eigenvalue square roots of the Gram matrix of that product.
    """
    a = np.array(sigma, dtype=np.float64, order="C")
    cdef Py_ssize_t n2 = a.shape[0]
    cdef Py_ssize_t i, j, k
    v = np.empty((n2, n2), dtype=np.float64)
    cdef double[:, ::1] av = a
    cdef double[:, ::1] vv = v
    _jacobi(av, vv, n2, True)

    w = np.diagonal(a).copy()
    cdef double wmin = w.min()
    if wmin <= 0.0:
        raise NotPositiveDefiniteError(
            f"matrix is not positive definite (smallest eigenvalue {wmin:.3e})"
        )

    # root = V diag(sqrt(w)) V.T, assembled symmetrically
    root = np.empty((n2, n2), dtype=np.float64)
    scaled = np.asarray(v) * np.sqrt(w)[np.newaxis, :]
    cdef double[:, ::1] rv = root
    cdef double[:, ::1] sv = scaled
    cdef double acc
    for i in range(n2):
        for j in range(i, n2):
            acc = 0.0
            for k in range(n2):
                acc += sv[i, k] * vv[j, k]
            rv[i, j] = acc
            rv[j, i] = acc

    # rotated = Omega @ root, built by row swaps with signs
    rotated = np.empty((n2, n2), dtype=np.float64)
    cdef double[:, ::1] ov = rotated
    for i in range(0, n2, 2):
        for j in range(n2):
            ov[i, j] = rv[i + 1, j]
            ov[i + 1, j] = -rv[i, j]

    prod = np.empty((n2, n2), dtype=np.float64)
    cdef double[:, ::1] pv = prod
    for i in range(n2):
        for j in range(n2):
            acc = 0.0
            for k in range(n2):
                acc += rv[i, k] * ov[k, j]
            pv[i, j] = acc

    # Gram matrix of the antisymmetric product; eigenvalues are nu_i**2, twice
    gram = np.empty((n2, n2), dtype=np.float64)
    cdef double[:, ::1] gv = gram
    for i in range(n2):
        for j in range(i, n2):
            acc = 0.0
            for k in range(n2):
                acc += pv[i, k] * pv[j, k]
            gv[i, j] = acc
            gv[j, i] = acc

    _jacobi(gv, vv, n2, False)
    sq = np.sort(np.sqrt(np.clip(np.diagonal(gram), 0.0, None)))
    return 0.5 * (sq[0::2] + sq[1::2])
