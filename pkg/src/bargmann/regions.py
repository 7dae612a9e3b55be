"""Attainable regions of third- and fourth-order Bargmann invariants.

``b3`` is the set of all third-order invariants of pure-state triples;
``b4circ`` is the set of fourth-order invariants of 4-tuples with a
circulant Gram matrix. Both are star-shaped about 0, so each is described
by a boundary radius per phase.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.spatial import ConvexHull

from .errors import OutOfRange, TooFewSamples
from .states import bargmann_invariant

TWO_PI = 2 * np.pi
MODULUS_TOL = 1e-12
MEMBER_TOL = 1e-10
HULL_TOL = 1e-6


class Region(str, Enum):
    B3 = "b3"
    B4CIRC = "b4circ"


def _modulus_phase(delta):
    z = np.asarray(delta, dtype=complex)
    r = np.abs(z)
    if np.any(~np.isfinite(z)):
        raise OutOfRange("invariant must be finite")
    if np.any(r > 1 + MODULUS_TOL):
        raise OutOfRange(f"|Delta| = {np.max(r)} exceeds 1")
    return r, np.mod(np.angle(z), TWO_PI)


def _two_thirds_power(r):
    r = np.asarray(r, dtype=float)
    out = np.zeros_like(r)
    pos = r > 0
    out[pos] = np.exp((2.0 / 3.0) * np.log(r[pos]))
    return out


def _b3_residual(r, phi):
    return 1.0 - 3.0 * _two_thirds_power(r) + 2.0 * r * np.cos(phi)


def b3_constraint(delta):
    """1 - 3|D|^(2/3) + 2|D| cos(arg D); D lies in b3 iff this is >= 0."""
    r, phi = _modulus_phase(delta)
    out = _b3_residual(r, phi)
    return float(out) if out.ndim == 0 else out


def b3_member(delta, tol: float = MEMBER_TOL):
    return b3_constraint(delta) >= -tol


def b3_radius(phi):
    """Boundary modulus of b3 at phase ``phi``, found by bisection on [0, 1].

    The residual is 1 at r = 0, non-positive at r = 1 and strictly
    decreasing in between, so the bracket always holds exactly one root.
    """
    phi = np.mod(np.asarray(phi, dtype=float), TWO_PI)
    lo = np.zeros_like(phi)
    hi = np.ones_like(phi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        inside = _b3_residual(mid, phi) >= 0
        lo = np.where(inside, mid, lo)
        hi = np.where(inside, hi, mid)
        if np.all(hi - lo <= 1e-15):
            break
    r = 0.5 * (lo + hi)
    r = np.where(np.cos(phi) == 1.0, 1.0, r)
    return float(r) if r.ndim == 0 else r


def b3_boundary(phi):
    phi = np.asarray(phi, dtype=float)
    out = b3_radius(phi) * np.exp(1j * phi)
    return complex(out) if np.ndim(out) == 0 else out


def b4circ_radius(phi):
    """1 / (sin(phi/4) + cos(phi/4))^4 for phi wrapped to [0, 2pi).

    Evaluated as 1 / (1 + sin(phi/2))^2, the same quantity since
    (sin q + cos q)^2 = 1 + sin 2q.
    """
    half = np.mod(np.asarray(phi, dtype=float), TWO_PI) / 2.0
    out = 1.0 / (1.0 + np.sin(half)) ** 2
    return float(out) if out.ndim == 0 else out


def b4circ_boundary(phi):
    phi = np.asarray(phi, dtype=float)
    out = b4circ_radius(phi) * np.exp(1j * phi)
    if np.ndim(out) == 0:
        return complex(out)
    return out


def b4circ_distance(delta):
    """Radial slack: boundary radius at arg(delta) minus |delta|."""
    r, phi = _modulus_phase(delta)
    out = b4circ_radius(phi) - r
    return float(out) if np.ndim(out) == 0 else out


def b4circ_membership(delta, tol: float = MEMBER_TOL):
    return b4circ_distance(delta) >= -tol


@dataclass(frozen=True)
class RegionPoint:
    value: complex
    region: Region
    boundary_distance: float

    def verdict(self, band: float = 1e-6) -> str:
        if abs(self.boundary_distance) <= band:
            return "boundary"
        return "inside" if self.boundary_distance > 0 else "outside"


def classify(region: Region | str, delta: complex) -> RegionPoint:
    region = Region(region)
    delta = complex(delta)
    if region is Region.B3:
        dist = b3_constraint(delta)
    else:
        dist = b4circ_distance(delta)
    return RegionPoint(delta, region, float(dist))


@dataclass(frozen=True)
class BoundaryCurve:
    region: Region
    phi: np.ndarray
    values: np.ndarray


def boundary_curve(region: Region | str, samples: int) -> BoundaryCurve:
    """Boundary at ``samples`` uniformly spaced phases, 0 included, 2pi excluded."""
    region = Region(region)
    if samples < 2:
        raise TooFewSamples("a boundary curve needs at least 2 samples")
    phi = TWO_PI * np.arange(samples) / samples
    values = b3_boundary(phi) if region is Region.B3 else b4circ_boundary(phi)
    return BoundaryCurve(region, phi, np.asarray(values))


def circulant_qubit_family(theta: float) -> np.ndarray:
    """Four qubits sin(theta)|0> + i^k cos(theta)|1>, k = 0..3, with circulant Gram matrix."""
    if not 0.0 <= theta <= np.pi / 2 + 1e-15:
        raise OutOfRange("theta must lie in [0, pi/2]")
    omega = 1j ** np.arange(4)
    return np.stack([np.full(4, np.sin(theta)), omega * np.cos(theta)], axis=1).astype(complex)


def circulant_family_invariant(theta: float) -> complex:
    return bargmann_invariant(circulant_qubit_family(theta)).value


@dataclass(frozen=True)
class Extremum:
    value: float
    phi: float


def _extremum(fn, maximize: bool, grid: int = 4096) -> Extremum:
    sign = -1.0 if maximize else 1.0
    phis = TWO_PI * np.arange(grid) / grid
    vals = sign * np.array([fn(p) for p in phis])
    k = int(np.argmin(vals))
    step = TWO_PI / grid
    res = minimize_scalar(
        lambda p: sign * fn(p),
        bounds=(phis[k] - step, phis[k] + step),
        method="bounded",
        options={"xatol": 1e-12},
    )
    best_phi, best = (res.x, res.fun) if res.fun <= vals[k] else (phis[k], vals[k])
    return Extremum(float(sign * best), float(np.mod(best_phi, TWO_PI)))


def region_extremes(region: Region | str) -> dict[str, Extremum]:
    """Numeric min of Re and max of Im along the boundary, with their phases."""
    region = Region(region)
    curve = b3_boundary if region is Region.B3 else b4circ_boundary
    return {
        "min_re": _extremum(lambda p: complex(curve(p)).real, maximize=False),
        "max_im": _extremum(lambda p: complex(curve(p)).imag, maximize=True),
    }


@dataclass
class HullReport:
    samples: int
    n_points: int
    n_outside: int
    max_outside_distance: float
    outside_indices: list[int] = field(default_factory=list)


class BoundaryHull:
    """Convex hull of the b4circ boundary sampled at ``samples`` phases."""

    def __init__(self, samples: int = 1024):
        if samples < 64:
            raise TooFewSamples("hull test needs at least 64 boundary samples")
        self.samples = samples
        pts = boundary_curve(Region.B4CIRC, samples).values
        xy = np.column_stack([pts.real, pts.imag])
        hull = ConvexHull(xy)
        self.vertices = xy[hull.vertices]  # counter-clockwise

    def winding_numbers(self, points) -> np.ndarray:
        z = np.asarray(points, dtype=complex).ravel()
        px, py = z.real[:, None], z.imag[:, None]
        a = self.vertices
        b = np.roll(a, -1, axis=0)
        ax, ay, bx, by = a[:, 0], a[:, 1], b[:, 0], b[:, 1]
        out = np.zeros(z.size, dtype=int)
        chunk = 4096
        for s in range(0, z.size, chunk):
            x, y = px[s : s + chunk], py[s : s + chunk]
            cross = (bx - ax) * (y - ay) - (x - ax) * (by - ay)
            up = (ay <= y) & (by > y) & (cross > 0)
            down = (ay > y) & (by <= y) & (cross < 0)
            out[s : s + chunk] = up.sum(axis=1) - down.sum(axis=1)
        return out

    def distance(self, points) -> np.ndarray:
        """Euclidean distance from each point to the polygon boundary."""
        z = np.asarray(points, dtype=complex).ravel()
        p = np.column_stack([z.real, z.imag])[:, None, :]
        a = self.vertices[None]
        e = np.roll(self.vertices, -1, axis=0)[None] - a
        t = np.clip(np.sum((p - a) * e, axis=2) / np.sum(e * e, axis=2), 0.0, 1.0)
        d = p - (a + t[..., None] * e)
        return np.sqrt(np.min(np.sum(d * d, axis=2), axis=1))

    def test(self, points, tol: float = HULL_TOL) -> HullReport:
        z = np.asarray(points, dtype=complex).ravel()
        outside = np.flatnonzero(self.winding_numbers(z) == 0)
        dist = self.distance(z[outside]) if outside.size else np.zeros(0)
        far = outside[dist > tol]
        return HullReport(
            samples=self.samples,
            n_points=int(z.size),
            n_outside=int(far.size),
            max_outside_distance=float(dist.max()) if dist.size else 0.0,
            outside_indices=far.tolist(),
        )


def hull_membership_test(points, boundary_samples: int = 1024, tol: float = HULL_TOL) -> HullReport:
    return BoundaryHull(boundary_samples).test(points, tol)
