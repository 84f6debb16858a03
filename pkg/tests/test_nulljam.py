import numpy as np
import pytest
from hypothesis import given, strategies as st

from jrjs_sim.exceptions import DegenerateChannel, NoNullSpace
from jrjs_sim.nulljam import _leakage, _null_steering_weights, build_jamming_vector, lambda_e


def test_two_jammer_axis_channel():
    z = build_jamming_vector(np.array([1.0 + 0j, 0.0 + 0j])).z
    assert np.allclose(z, [0.0, 1.0], atol=1e-15)


def test_two_jammer_diagonal_channel():
    h = np.array([1.0 + 0j, 1.0 + 0j])
    z = build_jamming_vector(h).z
    # the null space of (1,1) is spanned by (1,-1)/sqrt(2)
    ref = np.array([1.0, -1.0]) / np.sqrt(2.0)
    assert abs(abs(np.vdot(ref, z)) - 1.0) < 1e-12
    assert abs(np.vdot(h, z)) < 1e-12


def _complex_arrays(min_dim=2, max_dim=19):
    elems = st.complex_numbers(
        min_magnitude=1e-3, max_magnitude=1e3, allow_nan=False, allow_infinity=False
    )
    return st.integers(min_value=min_dim, max_value=max_dim).flatmap(
        lambda k: st.lists(elems, min_size=k, max_size=k).map(np.array)
    )


@given(_complex_arrays())
def test_weights_unit_norm_and_orthogonal(h_d):
    z = build_jamming_vector(h_d).z
    assert abs(np.linalg.norm(z) - 1.0) <= 1e-12
    assert abs(np.vdot(h_d, z)) <= 1e-10 * np.linalg.norm(h_d)


@given(_complex_arrays())
def test_weights_deterministic(h_d):
    a = build_jamming_vector(h_d).z
    b = build_jamming_vector(np.array(h_d, copy=True)).z
    assert np.array_equal(a, b)


def test_rejects_single_jammer():
    with pytest.raises(NoNullSpace):
        build_jamming_vector(np.array([1.0 + 0j]))
    with pytest.raises(NoNullSpace):
        build_jamming_vector(np.array([], dtype=np.complex128))


def test_rejects_degenerate_channels():
    with pytest.raises(DegenerateChannel):
        build_jamming_vector(np.zeros(3, dtype=np.complex128))
    with pytest.raises(DegenerateChannel):
        build_jamming_vector(np.array([1.0 + 0j, np.nan + 0j]))


def test_leakage_examples():
    h_d = np.array([1.0 + 0j, 0.0 + 0j])
    z = build_jamming_vector(h_d)
    # eavesdropper channel equal to the weights leaks everything
    assert lambda_e(z, z.z) == pytest.approx(1.0, abs=1e-15)
    # eavesdropper channel aligned with the destination channel leaks nothing
    assert lambda_e(z, h_d) == pytest.approx(0.0, abs=1e-15)


def test_lambda_e_shape_mismatch():
    z = build_jamming_vector(np.array([1.0 + 0j, 2.0 + 0j, 3.0 + 0j]))
    with pytest.raises(ValueError):
        lambda_e(z, np.ones(2, dtype=np.complex128))


def _cn(rng, var, shape):
    return (rng.normal(0, np.sqrt(var / 2), shape) + 1j * rng.normal(0, np.sqrt(var / 2), shape))


def test_leakage_mean_matches_eavesdropper_variance():
    """|h_e^H z|^2 averages to eps2 for unit z independent of h_e."""
    rng = np.random.default_rng(2024)
    for eps2, k in ((0.5, 4), (2.0, 9)):
        h_d = _cn(rng, 1.0, (200_000, k))
        h_e = _cn(rng, eps2, (200_000, k))
        z = _null_steering_weights(h_d)
        lam = _leakage(z, h_e)
        assert lam.mean() == pytest.approx(eps2, rel=0.02)


def test_batch_orthogonality_tight():
    rng = np.random.default_rng(7)
    h_d = _cn(rng, 1.0, (50_000, 9))
    z = _null_steering_weights(h_d)
    norms2 = np.sum(np.abs(z) ** 2, axis=1)
    assert np.max(np.abs(norms2 - 1.0)) < 1e-12
    resid = np.abs(np.sum(np.conj(h_d) * z, axis=1)) ** 2
    scale = np.sum(np.abs(h_d) ** 2, axis=1)
    assert np.max(resid / scale) < 1e-18
