"""Exit criteria for the package; run with ``pytest tests/test_acceptance.py``.

Each test prints one PASS/FAIL line in the "acceptance criteria" section
of the pytest summary.
"""

import os
import time

import numpy as np

from bargmann.experiments import ExperimentConfig, run_fraction, run_scatter
from bargmann.gram import CirculantCandidate4, build_circulant4, circulant_eigenvalues, real_realization_triple
from bargmann.linalg import hermitian_eigenvalues, is_psd, principal_minors
from bargmann.regions import (
    BoundaryHull,
    b3_constraint,
    b4circ_boundary,
    b4circ_radius,
    circulant_family_invariant,
    region_extremes,
)
from bargmann.states import haar_states, overlaps
from bargmann.witness import witness_overlaps4, _dedupe

from conftest import COUNTEREXAMPLE_OVERLAPS, REFERENCE_MIN_EIGS, random_hermitian, signs_to_pi_flags

SAMPLES = 100_000
WORKERS = min(4, os.cpu_count() or 1)
SEED = 20240611


def test_01_counterexample_certificate(criterion):
    start = time.perf_counter()
    report = witness_overlaps4(COUNTEREXAMPLE_OVERLAPS, "gauge3")
    elapsed = time.perf_counter() - start
    errs = [abs(e - REFERENCE_MIN_EIGS[signs_to_pi_flags(s)]) for s, e in zip(report.signs, report.min_eigenvalues)]
    criterion(
        "1 counterexample certificate",
        report.witnessed and len(errs) == 8 and max(errs) <= 1e-5 and elapsed < 1.0,
        f"witnessed={report.witnessed} max|err|={max(errs):.2e} t={elapsed:.3f}s",
    )


def test_02_gauge_independence(criterion):
    fixed = witness_overlaps4(COUNTEREXAMPLE_OVERLAPS, "gauge3")
    full = witness_overlaps4(COUNTEREXAMPLE_OVERLAPS, "full6")
    a, b = _dedupe(fixed.min_eigenvalues, 1e-9), _dedupe(full.min_eigenvalues, 1e-9)
    same = a.shape == b.shape and np.all(np.abs(a - b) <= 1e-9)
    criterion(
        "2 gauge independence (64 vs 8 variants)",
        bool(same) and fixed.witnessed == full.witnessed and len(full.min_eigenvalues) == 64,
        f"distinct={a.size}/{b.size} max|diff|={np.max(np.abs(a - b)) if same else float('nan'):.1e}",
    )


def test_03_b3_extremes(criterion):
    ext = region_extremes("b3")
    lo, hi = ext["min_re"].value, ext["max_im"].value
    criterion(
        "3 B3 extremes",
        abs(lo + 0.125) <= 1e-6 and abs(hi - 0.25) <= 1e-6,
        f"min Re={lo:.9f} max Im={hi:.9f}",
    )


def test_04_b4circ_extremes(criterion):
    at_pi = b4circ_boundary(np.pi)
    ext = region_extremes("b4circ")
    hi = ext["max_im"].value
    criterion(
        "4 B4circ extremes",
        at_pi.real == -0.25 and b4circ_radius(np.pi) == 0.25 and abs(hi - 0.38490) <= 1e-4,
        f"Delta(pi)={at_pi.real!r} max Im={hi:.6f} at phi={ext['max_im'].phi:.6f}",
    )


def test_05_region_law_b3(criterion):
    start = time.perf_counter()
    worst, violations = np.inf, 0
    for d in (2, 3, 4):
        z = run_scatter(ExperimentConfig(dim=d, samples=SAMPLES, seed=SEED, workers=WORKERS), 3)
        c = b3_constraint(z)
        worst = min(worst, float(c.min()))
        violations += int(np.count_nonzero(c < -1e-9))
    elapsed = time.perf_counter() - start
    criterion(
        "5 region law for Delta_3",
        violations == 0 and elapsed < 60,
        f"violations={violations} min constraint={worst:.2e} t={elapsed:.1f}s",
    )


def test_06_delta4_within_circulant_hull(criterion):
    hull = BoundaryHull(1024)
    outside, worst = 0, 0.0
    for d in (2, 3, 4):
        z = run_scatter(ExperimentConfig(dim=d, samples=SAMPLES, seed=SEED + 1, workers=WORKERS), 4)
        rep = hull.test(z, 1e-6)
        outside += rep.n_outside
        worst = max(worst, rep.max_outside_distance)
    criterion(
        "6 Delta_4 inside hull of circulant boundary",
        outside == 0,
        f"violations={outside} max outside distance={worst:.1e}",
    )


def test_07_witnessed_fractions(criterion):
    targets = {2: (0.6083, 0.01), 3: (0.0598, 0.005), 4: (0.0059, 0.002)}
    results = {
        d: run_fraction(ExperimentConfig(dim=d, samples=SAMPLES, seed=SEED + 2, workers=WORKERS)) for d in targets
    }
    ok = all(abs(results[d].fraction - p) <= tol for d, (p, tol) in targets.items())
    criterion(
        "7 witnessed fractions at 1e5 samples",
        ok,
        " ".join(f"d={d}:{results[d].fraction:.4f}" for d in targets),
    )


def test_08_real_realization_of_triples(criterion):
    rng = np.random.default_rng(SEED)
    worst_err, worst_imag, failures = 0.0, 0.0, 0
    for d in (2, 3, 4):
        for t in haar_states(rng, (10_000, 3), d):
            o = overlaps(t)
            try:
                v = real_realization_triple(o)
            except ValueError:
                failures += 1
                continue
            worst_imag = max(worst_imag, float(np.max(np.abs(np.imag(v)))))
            worst_err = max(worst_err, float(np.max(np.abs(overlaps(v.astype(complex)) - o))))
    criterion(
        "8 every overlap triple has a real realization",
        failures == 0 and worst_err <= 1e-8 and worst_imag < 1e-10,
        f"failures={failures} max overlap err={worst_err:.1e} max |Im|={worst_imag:.1e}",
    )


def test_09_qubit_family_on_boundary(criterion):
    worst = 0.0
    for theta in np.linspace(0, np.pi / 2, 1000):
        delta = circulant_family_invariant(theta)
        phi = np.mod(np.angle(delta), 2 * np.pi)
        worst = max(worst, abs(abs(delta) - b4circ_radius(phi)))
    criterion("9 qubit family traces the circulant boundary", worst <= 1e-10, f"max dev={worst:.1e}")


def test_10_oracle_equivalence(criterion):
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for _ in range(10_000):
        c = CirculantCandidate4(np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform()), rng.uniform())
        jac = hermitian_eigenvalues(build_circulant4(c)).eigenvalues
        worst = max(worst, float(np.max(np.abs(jac - circulant_eigenvalues(c)))))
    disagreements = 0
    for _ in range(10_000):
        a = random_hermitian(rng, int(rng.choice([3, 4])))
        disagreements += is_psd(a) != bool(np.all(principal_minors(a) >= -1e-6))
    criterion(
        "10 oracle equivalence",
        worst <= 1e-12 and disagreements == 0,
        f"circulant max diff={worst:.1e} psd/minor disagreements={disagreements}",
    )


def test_11_determinism_across_workers(criterion):
    scatters, fractions = [], []
    for w in (1, 2, 8):
        cfg = ExperimentConfig(dim=2, samples=20_000, seed=SEED, workers=w)
        scatters.append(run_scatter(cfg, 4).tobytes())
        fractions.append(run_fraction(cfg).to_dict())
    criterion(
        "11 determinism across workers 1/2/8",
        len(set(scatters)) == 1 and all(f == fractions[0] for f in fractions),
        f"witnessed={fractions[0]['witnessed_count']}",
    )
