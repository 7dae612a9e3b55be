"""Set-imaginarity witnesses from unitary-invariant data.

The overlap witness for four states asks whether any real-signed candidate
Gram matrix with the measured overlaps is positive semidefinite. If none
is, no tuple of real-amplitude states has those overlaps, so the states
that produced them carry set imaginarity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import product

import numpy as np

from .errors import DimensionMismatch, LengthMismatch
from .gram import PAIRS3, PAIRS4, check_overlaps
from .linalg import PSD_TOL, min_eigenvalues
from .states import as_state_tuple, bargmann_invariant, overlaps


class WitnessMode(str, Enum):
    GAUGE3 = "gauge3"
    FULL6 = "full6"


# Gauge-fixed variants keep the first row positive; the free signs sit on
# entries (2,3), (2,4), (3,4).
_FREE_PAIRS = {WitnessMode.GAUGE3: PAIRS4[3:], WitnessMode.FULL6: PAIRS4}


def sign_assignments(mode: WitnessMode | str) -> list[tuple[int, ...]]:
    mode = WitnessMode(mode)
    return list(product((1, -1), repeat=len(_FREE_PAIRS[mode])))


def variant_matrices(overlap_rows, mode: WitnessMode | str = WitnessMode.GAUGE3) -> np.ndarray:
    """Real sign variants of the 4-state candidate.

    ``overlap_rows`` is (N, 6) in the order 12, 13, 14, 23, 24, 34; the
    result is (N, V, 4, 4) with V = 8 or 64 variants ordered as
    ``sign_assignments(mode)``.
    """
    mode = WitnessMode(mode)
    roots = np.sqrt(np.clip(np.asarray(overlap_rows, dtype=float), 0.0, 1.0))
    signs = np.array(sign_assignments(mode), dtype=float)
    count, nvar = roots.shape[0], signs.shape[0]
    m = np.broadcast_to(np.eye(4), (count, nvar, 4, 4)).copy()
    free = _FREE_PAIRS[mode]
    for k, (i, j) in enumerate(PAIRS4):
        entry = np.broadcast_to(roots[:, k, None], (count, nvar)).copy()
        if (i, j) in free:
            entry *= signs[None, :, free.index((i, j))]
        m[:, :, i, j] = entry
        m[:, :, j, i] = entry
    return m


def variant_min_eigenvalues(overlap_rows, mode: WitnessMode | str = WitnessMode.GAUGE3) -> np.ndarray:
    mats = variant_matrices(overlap_rows, mode)
    count, nvar = mats.shape[:2]
    return min_eigenvalues(mats.reshape(count * nvar, 4, 4)).reshape(count, nvar)


def witnessed_batch(overlap_rows, mode: WitnessMode | str = WitnessMode.GAUGE3, tol: float = PSD_TOL) -> np.ndarray:
    """Verdict per row: True when no sign variant is PSD within ``tol``."""
    return np.all(variant_min_eigenvalues(overlap_rows, mode) < -tol, axis=1)


@dataclass
class WitnessReport:
    witnessed: bool
    mode: WitnessMode
    tolerance: float
    signs: list[tuple[int, ...]]
    min_eigenvalues: list[float]
    overlaps: tuple[float, ...] = ()
    delta_phase: float | None = None
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "witnessed": bool(self.witnessed),
            "mode": self.mode.value,
            "variants": [
                {"signs": list(s), "min_eig": float(e)} for s, e in zip(self.signs, self.min_eigenvalues)
            ],
            "tolerance": self.tolerance,
            "overlaps": list(self.overlaps),
        }
        if self.delta_phase is not None:
            out["delta4_phase"] = self.delta_phase
        out.update(self.extra)
        return out


def witness_overlaps4(overlaps6, mode: WitnessMode | str = WitnessMode.GAUGE3, tol: float = PSD_TOL) -> WitnessReport:
    if tol < 0:
        raise ValueError("tol must be non-negative")
    mode = WitnessMode(mode)
    o = check_overlaps(overlaps6, 6)
    eigs = variant_min_eigenvalues(np.array([o]), mode)[0]
    return WitnessReport(
        witnessed=bool(np.all(eigs < -tol)),
        mode=mode,
        tolerance=tol,
        signs=sign_assignments(mode),
        min_eigenvalues=eigs.tolist(),
        overlaps=o,
    )


def witness_states4(states, mode: WitnessMode | str = WitnessMode.GAUGE3, tol: float = PSD_TOL) -> WitnessReport:
    t = as_state_tuple(states)
    if t.shape[0] != 4:
        raise DimensionMismatch(f"expected 4 states, got {t.shape[0]}")
    report = witness_overlaps4(overlaps(t), mode, tol)
    report.delta_phase = bargmann_invariant(t).phase
    return report


def witness_overlaps3(overlaps3, tol: float = PSD_TOL) -> WitnessReport:
    """Three-state analogue: the two sign variants of the 3x3 candidate.

    Included to exhibit that it never fires on realizable overlaps (the
    all-positive variant is always PSD).
    """
    o = check_overlaps(overlaps3, 3)
    r = np.sqrt(o)
    mats = np.broadcast_to(np.eye(3), (2, 3, 3)).copy()
    for k, (i, j) in enumerate(PAIRS3):
        mats[:, i, j] = mats[:, j, i] = r[k]
    mats[1, 1, 2] = mats[1, 2, 1] = -r[2]
    eigs = min_eigenvalues(mats)
    return WitnessReport(
        witnessed=bool(np.all(eigs < -tol)),
        mode=WitnessMode.GAUGE3,
        tolerance=tol,
        signs=[(1,), (-1,)],
        min_eigenvalues=eigs.tolist(),
        overlaps=o,
    )


def witness_phase3(states, tol: float = PSD_TOL) -> bool:
    """True when the third-order invariant has a non-vanishing imaginary part."""
    t = as_state_tuple(states)
    if t.shape[0] != 3:
        raise LengthMismatch(f"expected 3 states, got {t.shape[0]}")
    delta = bargmann_invariant(t).value
    return abs(delta.imag) > tol * max(1.0, abs(delta))


def _dedupe(values, tol: float) -> np.ndarray:
    out: list[float] = []
    for v in np.sort(np.asarray(values, dtype=float)):
        if not out or v - out[-1] > tol:
            out.append(float(v))
    return np.array(out)


def gauge_independence_check(overlaps6, tol: float = PSD_TOL) -> bool:
    """Full-gauge and gauge-fixed runs agree on the verdict and on the
    deduplicated set of variant minimum eigenvalues."""
    fixed = witness_overlaps4(overlaps6, WitnessMode.GAUGE3, tol)
    full = witness_overlaps4(overlaps6, WitnessMode.FULL6, tol)
    if fixed.witnessed != full.witnessed:
        return False
    a = _dedupe(fixed.min_eigenvalues, 1e-9)
    b = _dedupe(full.min_eigenvalues, 1e-9)
    return a.shape == b.shape and bool(np.all(np.abs(a - b) <= 1e-9))
