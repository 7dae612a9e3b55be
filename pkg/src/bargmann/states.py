"""Pure-state tuples, overlaps, Bargmann invariants and Haar sampling.

A state is a 1-D complex array; a tuple of n states in C^d is an (n, d)
array whose rows are the states. Batched helpers take (N, n, d) arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, LengthMismatch, NotNormalized, OutOfRange
from .linalg import PSD_TOL, as_hermitian, hermitian_eigenvalues

NORM_TOL = 1e-12
MAX_TUPLE = 16

_S2 = 1.0 / np.sqrt(2.0)
KET = {
    "0": np.array([1.0, 0.0], dtype=complex),
    "1": np.array([0.0, 1.0], dtype=complex),
    "+": np.array([_S2, _S2], dtype=complex),
    "-": np.array([_S2, -_S2], dtype=complex),
    "+i": np.array([_S2, 1j * _S2], dtype=complex),
    "-i": np.array([_S2, -1j * _S2], dtype=complex),
}


@dataclass(frozen=True)
class InvariantValue:
    order: int
    value: complex

    @property
    def modulus(self) -> float:
        return abs(self.value)

    @property
    def phase(self) -> float:
        """arg of the value wrapped to [0, 2pi)."""
        return float(np.mod(np.angle(self.value), 2 * np.pi))


def as_state(psi, tol: float = NORM_TOL) -> np.ndarray:
    a = np.asarray(psi, dtype=complex)
    if a.ndim != 1 or a.size < 1:
        raise DimensionMismatch(f"a state must be a non-empty vector, got shape {a.shape}")
    if abs(np.linalg.norm(a) - 1.0) > tol:
        raise NotNormalized(f"state norm {np.linalg.norm(a):.15g} differs from 1")
    return a


def as_state_tuple(states, tol: float = NORM_TOL) -> np.ndarray:
    """Validate a sequence of states with a common dimension; returns (n, d)."""
    if isinstance(states, np.ndarray) and states.ndim == 2:
        rows = list(states)
    else:
        rows = [np.asarray(s, dtype=complex) for s in states]
    if not rows:
        raise LengthMismatch("empty state tuple")
    dims = {r.shape for r in rows}
    if len(dims) != 1:
        raise DimensionMismatch(f"states have differing shapes {sorted(dims)}")
    if len(rows) > MAX_TUPLE:
        raise LengthMismatch(f"at most {MAX_TUPLE} states are supported")
    return np.stack([as_state(r, tol) for r in rows])


def qubit(theta: float, phi: float = 0.0) -> np.ndarray:
    """cos(theta)|0> + e^{i phi} sin(theta)|1>."""
    return np.array([np.cos(theta), np.exp(1j * phi) * np.sin(theta)], dtype=complex)


def inner(a, b) -> complex:
    a, b = as_state(a), as_state(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"dimensions {a.size} and {b.size} differ")
    return complex(np.vdot(a, b))


def overlap(a, b) -> float:
    """|<a|b>|^2."""
    return float(abs(inner(a, b)) ** 2)


def gram_matrix(states) -> np.ndarray:
    t = as_state_tuple(states)
    return t.conj() @ t.T


def overlaps(states) -> np.ndarray:
    """Pairwise overlaps in row-major upper-triangle order (12, 13, ..., 23, ...)."""
    g = gram_matrix(states)
    iu = np.triu_indices(g.shape[0], 1)
    return np.abs(g[iu]) ** 2


def bargmann_invariant(states) -> InvariantValue:
    """<psi_1|psi_2><psi_2|psi_3>...<psi_n|psi_1>."""
    t = as_state_tuple(states)
    if t.shape[0] < 2:
        raise LengthMismatch("a Bargmann invariant needs at least two states")
    links = np.einsum("kd,kd->k", t.conj(), np.roll(t, -1, axis=0))
    return InvariantValue(t.shape[0], complex(np.prod(links)))


def bargmann_invariants_batch(tuples: np.ndarray) -> np.ndarray:
    """Cyclic invariants of a (N, n, d) batch of tuples, no validation."""
    links = np.einsum("bkd,bkd->bk", tuples.conj(), np.roll(tuples, -1, axis=1))
    return np.prod(links, axis=1)


def gram_batch(tuples: np.ndarray) -> np.ndarray:
    return np.einsum("bid,bjd->bij", tuples.conj(), tuples)


def as_density(rho, tol: float = PSD_TOL) -> np.ndarray:
    a = as_hermitian(rho).astype(complex)
    if abs(np.trace(a).real - 1.0) > tol:
        raise OutOfRange("density matrix must have unit trace")
    if hermitian_eigenvalues(a).min_eigenvalue < -tol:
        raise OutOfRange("density matrix must be positive semidefinite")
    return a


def projector(psi) -> np.ndarray:
    a = as_state(psi)
    return np.outer(a, a.conj())


def bargmann_invariant_mixed(rhos) -> InvariantValue:
    """Tr(rho_1 rho_2 ... rho_n)."""
    ms = [as_density(r) for r in rhos]
    if len(ms) < 2:
        raise LengthMismatch("a Bargmann invariant needs at least two states")
    if len({m.shape for m in ms}) != 1:
        raise DimensionMismatch("density matrices have differing dimensions")
    prod = ms[0]
    for m in ms[1:]:
        prod = prod @ m
    return InvariantValue(len(ms), complex(np.trace(prod)))


def apply_gauge(states, phases) -> np.ndarray:
    t = as_state_tuple(states)
    ph = np.asarray(phases, dtype=float)
    if ph.shape != (t.shape[0],):
        raise LengthMismatch(f"need {t.shape[0]} phases, got {ph.size}")
    return t * np.exp(1j * ph)[:, None]


def haar_states(rng: np.random.Generator, shape: tuple[int, ...], d: int) -> np.ndarray:
    """Haar-random unit vectors in C^d, array of shape ``shape + (d,)``.

    Gaussian real and imaginary parts, normalized; any vector whose norm
    underflows is redrawn.
    """
    if d < 1:
        raise OutOfRange("dimension must be at least 1")
    z = rng.standard_normal(shape + (d, 2)).view(complex)[..., 0]
    norms = np.linalg.norm(z, axis=-1)
    bad = norms < 1e-150
    while np.any(bad):
        z[bad] = rng.standard_normal((int(bad.sum()), d, 2)).view(complex)[..., 0]
        norms = np.linalg.norm(z, axis=-1)
        bad = norms < 1e-150
    return z / norms[..., None]


def haar_random_state(d: int, rng: np.random.Generator) -> np.ndarray:
    return haar_states(rng, (), d)


def real_encode(rho) -> np.ndarray:
    """Map a d-dimensional density matrix to the 2d-dimensional real one
    (1/2)[[Re rho, -Im rho], [Im rho, Re rho]]."""
    a = as_density(rho)
    re, im = a.real, a.imag
    return 0.5 * np.block([[re, -im], [im, re]])


def real_encode_observable(h) -> np.ndarray:
    """Companion encoding [[Re H, -Im H], [Im H, Re H]] for which
    Tr(rho H) = Tr(real_encode(rho) real_encode_observable(H))."""
    a = as_hermitian(h).astype(complex)
    re, im = a.real, a.imag
    return np.block([[re, -im], [im, re]])
