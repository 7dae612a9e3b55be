import numpy as np
import pytest
from hypothesis import strategies as st

from bargmann.states import KET

SQRT6 = np.sqrt(6.0)

# Four qubits whose six overlaps admit no real-amplitude realization.
PSI4 = np.cos(np.pi / 6) * KET["0"] + np.exp(1j * np.pi / 4) * np.sin(np.pi / 6) * KET["1"]
COUNTEREXAMPLE_STATES = np.stack([KET["0"], KET["+"], KET["-i"], PSI4])
COUNTEREXAMPLE_OVERLAPS = (0.5, 0.5, 0.75, 0.5, (4 + SQRT6) / 8, (4 - SQRT6) / 8)

# Reference minimum eigenvalues keyed by the phases on entries (2,3), (2,4), (3,4).
REFERENCE_MIN_EIGS = {
    (0, 0, 0): -0.044984,
    (1, 0, 0): -0.512315,
    (0, 1, 0): -0.709002,
    (0, 0, 1): -0.561292,
    (1, 1, 0): -0.837603,
    (0, 1, 1): -0.704281,
    (1, 0, 1): -0.491359,
    (1, 1, 1): -1.17472,
}


def signs_to_pi_flags(signs):
    return tuple(int(s < 0) for s in signs)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_hermitian(rng, n, real=False):
    a = rng.uniform(-1, 1, (n, n))
    if not real:
        a = a + 1j * rng.uniform(-1, 1, (n, n))
    return (a + a.conj().T) / 2


def random_psd_unit_diagonal(rng, n, rank=None):
    rank = rank or n
    v = rng.standard_normal((n, rank)) + 1j * rng.standard_normal((n, rank))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    return v.conj() @ v.T


overlap = st.floats(0.0, 1.0, allow_nan=False)
phase = st.floats(0.0, 2 * np.pi, exclude_max=True, allow_nan=False)
seeds = st.integers(0, 2**32 - 1)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion, then assert it."""

    def check(label: str, ok: bool, detail: str = "") -> None:
        status = "PASS" if ok else "FAIL"
        ACCEPTANCE_LINES.append(f"{status}  {label}" + (f"  [{detail}]" if detail else ""))
        assert ok, f"{label}: {detail}"

    return check


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
