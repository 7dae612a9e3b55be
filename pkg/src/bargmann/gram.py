"""Candidate Gram matrices built from invariant values, and realizability.

A unit-diagonal Hermitian candidate is the Gram matrix of some tuple of
pure states exactly when it is positive semidefinite; the constructors
here place overlaps and phases the way the realizability tests need them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import NotPSD, NotRealizable, OutOfRange
from .linalg import PSD_TOL, as_hermitian, factor_states, is_psd

TWO_PI = 2 * np.pi
OVERLAP_TOL = 1e-12

# row-major upper triangle of a 4x4 matrix: 12, 13, 14, 23, 24, 34
PAIRS4 = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
PAIRS3 = ((0, 1), (0, 2), (1, 2))


def wrap_phase(phi: float) -> float:
    w = float(np.mod(phi, TWO_PI))
    return 0.0 if w >= TWO_PI else w


def check_overlaps(values, count: int) -> tuple[float, ...]:
    vals = tuple(float(v) for v in values)
    if len(vals) != count:
        raise OutOfRange(f"expected {count} overlaps, got {len(vals)}")
    for v in vals:
        if not np.isfinite(v) or v < -OVERLAP_TOL or v > 1 + OVERLAP_TOL:
            raise OutOfRange(f"overlap {v!r} outside [0, 1]")
    return tuple(min(max(v, 0.0), 1.0) for v in vals)


@dataclass(frozen=True)
class Candidate3:
    overlaps: tuple[float, float, float]
    phi: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "overlaps", check_overlaps(self.overlaps, 3))
        object.__setattr__(self, "phi", wrap_phase(self.phi))


@dataclass(frozen=True)
class Candidate4:
    overlaps: tuple[float, ...]
    phi123: float = 0.0
    phi124: float = 0.0
    phi134: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "overlaps", check_overlaps(self.overlaps, 6))
        for name in ("phi123", "phi124", "phi134"):
            object.__setattr__(self, name, wrap_phase(getattr(self, name)))


@dataclass(frozen=True)
class CirculantCandidate4:
    alpha: complex
    delta: float

    def __post_init__(self):
        alpha = complex(self.alpha)
        if not np.isfinite(alpha) or abs(alpha) > 1 + 1e-12:
            raise OutOfRange(f"|alpha| = {abs(alpha)} exceeds 1")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "delta", check_overlaps([self.delta], 1)[0])


def _fill(n: int, pairs, values) -> np.ndarray:
    values = list(values)
    dtype = complex if any(isinstance(v, complex) for v in values) else float
    m = np.eye(n, dtype=dtype)
    for (i, j), v in zip(pairs, values):
        m[i, j] = v
        m[j, i] = np.conj(v)
    return m


def build_candidate3(c: Candidate3) -> np.ndarray:
    """[[1, r12, r13], [r12, 1, r23 e^{i phi}], [r13, r23 e^{-i phi}, 1]] with r = sqrt(overlap)."""
    r12, r13, r23 = np.sqrt(c.overlaps)
    e23 = r23 * np.exp(1j * c.phi) if c.phi else r23
    return _fill(3, PAIRS3, [r12, r13, e23])


def build_candidate4(c: Candidate4) -> np.ndarray:
    r = np.sqrt(c.overlaps)
    ph = (c.phi123, c.phi124, c.phi134)
    tail = [r[3 + k] * np.exp(1j * p) if p else r[3 + k] for k, p in enumerate(ph)]
    return _fill(4, PAIRS4, [r[0], r[1], r[2], *tail])


def build_circulant4(c: CirculantCandidate4) -> np.ndarray:
    """Circulant Hermitian matrix with first row (1, alpha, sqrt(delta), conj(alpha))."""
    row = np.array([1.0, c.alpha, np.sqrt(c.delta), np.conj(c.alpha)], dtype=complex)
    return np.array([np.roll(row, k) for k in range(4)])


def circulant_eigenvalues(c: CirculantCandidate4) -> np.ndarray:
    """Closed form 1 + sqrt(delta) +- 2 Re(alpha), 1 - sqrt(delta) +- 2 Im(alpha), ascending."""
    s = np.sqrt(c.delta)
    re, im = c.alpha.real, c.alpha.imag
    return np.sort([1 + s + 2 * re, 1 + s - 2 * re, 1 - s + 2 * im, 1 - s - 2 * im])


def is_realizable(m, tol: float = PSD_TOL) -> bool:
    a = as_hermitian(m)
    if np.max(np.abs(np.real(np.diagonal(a)) - 1.0)) > tol:
        return False
    return is_psd(a, tol)


def zero_bound(overlaps) -> float:
    """det of the phi = 0 three-state candidate: 1 - sum + 2 sqrt(product)."""
    d12, d13, d23 = check_overlaps(overlaps, 3)
    return 1.0 - d12 - d13 - d23 + 2.0 * np.sqrt(d12 * d13 * d23)


def triple_determinant(overlaps, phi: float) -> float:
    d12, d13, d23 = check_overlaps(overlaps, 3)
    return 1.0 - d12 - d13 - d23 + 2.0 * np.sqrt(d12 * d13 * d23) * np.cos(phi)


def _zero_overlap_triple(o) -> np.ndarray:
    # some pair is orthogonal: put it on |0>, |1> and place the third state by hand
    k = int(np.argmin(o))
    i, j = PAIRS3[k]
    third = 3 - i - j
    a = o[PAIRS3.index(tuple(sorted((i, third))))]
    b = o[PAIRS3.index(tuple(sorted((j, third))))]
    rest = 1.0 - a - b
    out = np.zeros((3, 3))
    out[i, 0] = 1.0
    out[j, 1] = 1.0
    out[third] = [np.sqrt(a), np.sqrt(b), np.sqrt(max(rest, 0.0))]
    out[third] /= np.linalg.norm(out[third])
    return out


def real_realization_triple(overlaps, tol: float = PSD_TOL) -> np.ndarray:
    """Three real unit vectors (rows) with the given pairwise overlaps."""
    o = check_overlaps(overlaps, 3)
    if zero_bound(o) < -tol:
        raise NotRealizable(f"overlaps {o} violate 1 - sum + 2 sqrt(product) >= 0")
    if min(o) == 0.0:
        vecs = _zero_overlap_triple(o)
    else:
        try:
            vecs = factor_states(build_candidate3(Candidate3(o, 0.0)), tol)
        except NotPSD as exc:
            raise NotRealizable(str(exc)) from exc
    return np.real(vecs).astype(float)


class Invariants3(NamedTuple):
    overlaps: tuple[float, float, float]
    phi: float
    zero_cycle: bool


def extract_invariants3(m) -> Invariants3:
    """Overlaps and third-order phase of a 3x3 unit-diagonal Gram matrix.

    ``phi`` is arg(m12 m23 m31) in [0, 2pi); when an off-diagonal entry
    vanishes the phase is undefined, reported as 0 with ``zero_cycle`` set.
    """
    a = as_hermitian(m)
    if a.shape != (3, 3):
        raise OutOfRange(f"expected a 3x3 matrix, got {a.shape}")
    if np.max(np.abs(np.real(np.diagonal(a)) - 1.0)) > PSD_TOL:
        raise OutOfRange("expected unit diagonal")
    ovs = tuple(float(abs(a[i, j]) ** 2) for i, j in PAIRS3)
    cycle = a[0, 1] * a[1, 2] * a[2, 0]
    if min(abs(a[i, j]) for i, j in PAIRS3) == 0.0:
        return Invariants3(ovs, 0.0, True)
    return Invariants3(ovs, wrap_phase(np.angle(cycle)), False)
