"""Small dense Hermitian linear algebra.

Eigenvalues come from a cyclic Jacobi solver that runs on whole batches of
matrices at once, so the Monte Carlo drivers can push millions of 4x4
candidates through the same code path as single-matrix calls.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import DimensionTooLarge, NonHermitianInput, NotPSD, NotUnitDiagonal

HERMITIAN_TOL = 1e-12
PSD_TOL = 1e-9
RANK_TOL = 1e-9
MAX_DIM = 16
MAX_MINOR_DIM = 6

_JACOBI_RTOL = 1e-14
_MAX_SWEEPS = 60


@dataclass(frozen=True)
class EigenResult:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray | None = None

    @property
    def min_eigenvalue(self) -> float:
        return float(self.eigenvalues[0])


def as_hermitian(m, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Validate ``m`` as a square Hermitian matrix and return it as an array.

    Matrices whose imaginary parts are all below ``tol`` come back as real
    arrays so that downstream factorizations stay real.
    """
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise NonHermitianInput(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] > MAX_DIM:
        raise DimensionTooLarge(f"dimension {a.shape[0]} exceeds {MAX_DIM}")
    if not np.all(np.isfinite(a)):
        raise NonHermitianInput("matrix has non-finite entries")
    scale = max(1.0, float(np.max(np.abs(a))))
    if np.max(np.abs(a - a.conj().T)) > tol * scale:
        raise NonHermitianInput("matrix is not Hermitian within tolerance")
    if np.iscomplexobj(a):
        if np.max(np.abs(a.imag)) < tol:
            return np.ascontiguousarray(a.real, dtype=float)
        return a.astype(complex)
    return a.astype(float)


def _rotation_angles(app, aqq, b):
    # t = tan(theta) of the Jacobi rotation annihilating a real off-diagonal b >= 0
    t = np.zeros_like(b)
    nz = b > 0
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        tau = (aqq[nz] - app[nz]) / (2.0 * b[nz])
        sgn = np.where(tau >= 0, 1.0, -1.0)
        tn = sgn / (np.abs(tau) + np.sqrt(1.0 + tau * tau))
    t[nz] = np.where(np.isfinite(tau), tn, 0.0)
    c = 1.0 / np.sqrt(1.0 + t * t)
    return c, t * c


def jacobi_eigh(batch, want_vectors: bool = True):
    """Batched cyclic Jacobi eigensolver for Hermitian matrices.

    ``batch`` has shape (N, n, n). Returns eigenvalues of shape (N, n) in
    ascending order and, if requested, eigenvectors as columns (N, n, n).
    Input validation is the caller's job.
    """
    a = np.array(batch, copy=True)
    complex_path = np.iscomplexobj(a)
    a = a.astype(complex if complex_path else float)
    count, n = a.shape[0], a.shape[-1]
    v = np.broadcast_to(np.eye(n, dtype=a.dtype), a.shape).copy() if want_vectors else None

    frob = np.sqrt(np.sum(np.abs(a) ** 2, axis=(1, 2)))
    offmask = ~np.eye(n, dtype=bool)
    pairs = list(combinations(range(n), 2))
    idx = np.arange(count)
    for _ in range(_MAX_SWEEPS):
        sub = a[idx]
        off = np.sqrt(np.sum(np.abs(sub[:, offmask]) ** 2, axis=1))
        keep = off >= _JACOBI_RTOL * frob[idx]
        idx = idx[keep]
        if idx.size == 0:
            break
        sub = sub[keep]
        vs = v[idx] if want_vectors else None
        for p, q in pairs:
            apq = sub[:, p, q]
            b = np.abs(apq)
            if complex_path:
                phase = np.where(b > 0, apq / np.where(b > 0, b, 1.0), 1.0)
            else:
                phase = np.where(apq < 0, -1.0, 1.0)
            c, s = _rotation_angles(sub[:, p, p].real, sub[:, q, q].real, b)
            cph = phase.conj()
            u = np.empty((idx.size, 2, 2), dtype=sub.dtype)
            u[:, 0, 0] = c
            u[:, 0, 1] = s
            u[:, 1, 0] = -s * cph
            u[:, 1, 1] = c * cph
            cols = [p, q]
            sub[:, :, cols] = sub[:, :, cols] @ u
            sub[:, cols, :] = np.swapaxes(u.conj(), 1, 2) @ sub[:, cols, :]
            sub[:, p, q] = 0.0
            sub[:, q, p] = 0.0
            if want_vectors:
                vs[:, :, cols] = vs[:, :, cols] @ u
        a[idx] = sub
        if want_vectors:
            v[idx] = vs

    w = np.real(np.diagonal(a, axis1=1, axis2=2)).copy()
    order = np.argsort(w, axis=1, kind="stable")
    w = np.take_along_axis(w, order, axis=1)
    if not want_vectors:
        return w, None
    v = np.take_along_axis(v, order[:, None, :], axis=2)
    return w, v


def min_eigenvalues(batch) -> np.ndarray:
    """Smallest eigenvalue of each matrix in a (N, n, n) Hermitian batch."""
    w, _ = jacobi_eigh(batch, want_vectors=False)
    return w[:, 0]


def hermitian_eigenvalues(m) -> EigenResult:
    a = as_hermitian(m)
    w, _ = jacobi_eigh(a[None], want_vectors=False)
    return EigenResult(w[0])


def hermitian_eigh(m) -> EigenResult:
    """Eigenvalues and orthonormal eigenvectors (columns); real input gives real vectors."""
    a = as_hermitian(m)
    w, v = jacobi_eigh(a[None], want_vectors=True)
    return EigenResult(w[0], v[0])


def _psd_threshold(a: np.ndarray, tol: float) -> float:
    return -tol * max(1.0, float(np.max(np.real(np.diagonal(a)))))


def is_psd(m, tol: float = PSD_TOL) -> bool:
    if tol < 0:
        raise ValueError("tol must be non-negative")
    a = as_hermitian(m)
    return hermitian_eigenvalues(a).min_eigenvalue >= _psd_threshold(a, tol)


def principal_minors(m) -> np.ndarray:
    """Determinants of every nonempty principal submatrix.

    Entry ``k`` of the result belongs to the index subset encoded by the
    bitmask ``k + 1`` (bit i set means row/column i is kept).
    """
    a = as_hermitian(m)
    n = a.shape[0]
    if n > MAX_MINOR_DIM:
        raise DimensionTooLarge(f"minor enumeration is capped at dimension {MAX_MINOR_DIM}")
    out = np.empty(2**n - 1)
    for mask in range(1, 2**n):
        keep = [i for i in range(n) if mask >> i & 1]
        out[mask - 1] = np.linalg.det(a[np.ix_(keep, keep)]).real
    return out


def factor_states(m, tol: float = PSD_TOL, rank_tol: float = RANK_TOL) -> np.ndarray:
    """Vectors whose Gram matrix is ``m``.

    Returns an (n, r) array whose rows are unit vectors v_i with
    <v_i|v_j> = m[i, j]; r is the numerical rank of ``m``. Real ``m`` yields
    real rows.
    """
    a = as_hermitian(m)
    diag = np.real(np.diagonal(a))
    if np.max(np.abs(diag - 1.0)) > tol:
        raise NotUnitDiagonal("diagonal entries must equal 1")
    res = hermitian_eigh(a)
    w, u = res.eigenvalues, res.eigenvectors
    if w[0] < _psd_threshold(a, tol):
        raise NotPSD(f"minimum eigenvalue {w[0]:.3e} is negative")
    keep = w > rank_tol
    vecs = np.sqrt(w[keep]) * u[:, keep].conj()
    vecs /= np.linalg.norm(vecs, axis=1, keepdims=True)
    return vecs
