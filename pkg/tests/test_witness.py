import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bargmann.errors import DimensionMismatch, NotPSD, OutOfRange
from bargmann.linalg import factor_states
from bargmann.states import KET, apply_gauge, haar_states, overlaps
from bargmann.witness import (
    WitnessMode,
    gauge_independence_check,
    sign_assignments,
    variant_matrices,
    witness_overlaps3,
    witness_overlaps4,
    witness_phase3,
    witness_states4,
    witnessed_batch,
)

from conftest import (
    COUNTEREXAMPLE_OVERLAPS,
    COUNTEREXAMPLE_STATES,
    REFERENCE_MIN_EIGS,
    overlap,
    seeds,
    signs_to_pi_flags,
)


def real_haar(rng, shape, d):
    v = rng.standard_normal(shape + (d,))
    return (v / np.linalg.norm(v, axis=-1, keepdims=True)).astype(complex)


def test_sign_assignment_counts():
    assert len(sign_assignments("gauge3")) == 8
    assert len(sign_assignments("full6")) == 64
    assert len(set(sign_assignments("full6"))) == 64


def test_variant_layout():
    m = variant_matrices(np.array([[0.25] * 6]), "gauge3")[0]
    assert m.shape == (8, 4, 4)
    np.testing.assert_array_equal(m[:, 0, 1:], 0.5)
    for k, signs in enumerate(sign_assignments("gauge3")):
        np.testing.assert_array_equal([m[k, 1, 2], m[k, 1, 3], m[k, 2, 3]], 0.5 * np.array(signs))
        np.testing.assert_array_equal(m[k], m[k].T)


def test_all_ones_not_witnessed():
    assert not witness_overlaps4([1] * 6).witnessed


def test_counterexample_certificate():
    report = witness_overlaps4(COUNTEREXAMPLE_OVERLAPS)
    assert report.witnessed
    assert report.mode is WitnessMode.GAUGE3
    for signs, eig in zip(report.signs, report.min_eigenvalues):
        assert eig == pytest.approx(REFERENCE_MIN_EIGS[signs_to_pi_flags(signs)], abs=1e-5)


def test_real_chain_not_witnessed():
    minus = np.array([1, -1]) / np.sqrt(2)
    t = np.stack([KET["0"], KET["+"], KET["1"], minus]).astype(complex)
    assert not witness_overlaps4(overlaps(t)).witnessed
    assert not witness_states4(t).witnessed


def test_witness_states_counterexample():
    report = witness_states4(COUNTEREXAMPLE_STATES)
    assert report.witnessed
    assert report.delta_phase is not None
    with pytest.raises(DimensionMismatch):
        witness_states4(COUNTEREXAMPLE_STATES[:3])


def test_overlap_range_checked():
    with pytest.raises(OutOfRange):
        witness_overlaps4([0.5] * 5 + [1.5])
    with pytest.raises(OutOfRange):
        witness_overlaps4([0.5] * 5)


def test_report_dict_shape():
    doc = witness_overlaps4(COUNTEREXAMPLE_OVERLAPS, "full6").to_dict()
    assert doc["witnessed"] is True and doc["mode"] == "full6"
    assert len(doc["variants"]) == 64
    assert set(doc["variants"][0]) == {"signs", "min_eig"}
    assert doc["tolerance"] == 1e-9


def test_phase3_examples():
    minus_i = KET["-i"]
    assert not witness_phase3([KET["0"], KET["+"], KET["1"]])
    assert witness_phase3([KET["0"], KET["+"], minus_i])


@settings(max_examples=200, deadline=None)
@given(seeds, st.lists(st.floats(0, 2 * np.pi), min_size=3, max_size=3))
def test_phase3_gauge_invariant(seed, phases):
    t = np.stack([KET["0"], KET["+"], KET["-i"]])
    assert witness_phase3(apply_gauge(t, phases))
    h = haar_states(np.random.default_rng(seed), (3,), 3)
    assert witness_phase3(h) == witness_phase3(apply_gauge(h, phases))


def test_gauge_independence_examples():
    assert gauge_independence_check(COUNTEREXAMPLE_OVERLAPS)
    assert gauge_independence_check([0] * 6)


def test_gauge_independence_on_haar_overlaps(rng):
    for d in (2, 3, 4):
        for t in haar_states(rng, (334, 4), d):
            assert gauge_independence_check(overlaps(t))


def test_soundness_on_haar_tuples(rng):
    for d in (2, 3, 4):
        tuples = haar_states(rng, (10_000, 4), d)
        rows = np.array([overlaps(t) for t in tuples])
        hits = np.flatnonzero(witnessed_batch(rows))
        for k in hits[:200]:
            for m in variant_matrices(rows[k : k + 1])[0]:
                with pytest.raises(NotPSD):
                    factor_states(m)


def test_batch_matches_single(rng):
    rows = np.array([overlaps(t) for t in haar_states(rng, (300, 4), 2)])
    batch = witnessed_batch(rows)
    assert batch.tolist() == [witness_overlaps4(r).witnessed for r in rows]
    assert 0 < batch.sum() < len(rows)


def test_no_false_positives_on_real_tuples(rng):
    for d in (2, 3, 4):
        rows = np.array([overlaps(t) for t in real_haar(rng, (10_000, 4), d)])
        assert not np.any(witnessed_batch(rows, "gauge3"))


@settings(max_examples=300, deadline=None)
@given(seeds, st.integers(2, 5))
def test_three_overlaps_never_witness(seed, d):
    o = overlaps(haar_states(np.random.default_rng(seed), (3,), d))
    report = witness_overlaps3(o)
    assert not report.witnessed
    assert report.min_eigenvalues[0] >= -1e-9


@settings(max_examples=300, deadline=None)
@given(overlap, overlap, overlap)
def test_three_overlap_witness_silent_when_realizable(a, b, c):
    from bargmann.gram import zero_bound

    if zero_bound((a, b, c)) >= 0:
        assert not witness_overlaps3((a, b, c)).witnessed


def test_min_eigenvalue_sets_agree_between_modes(rng):
    for t in haar_states(rng, (200, 4), 2):
        o = overlaps(t)
        fixed = np.sort(witness_overlaps4(o, "gauge3").min_eigenvalues)
        full = np.array(witness_overlaps4(o, "full6").min_eigenvalues)
        assert np.all(np.min(np.abs(full[:, None] - fixed[None, :]), axis=1) <= 1e-9)
