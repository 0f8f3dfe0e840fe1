import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pforge.errors import SingularityError
from pforge.kernels import ga_pair, gaj_pair, ljc_pair, pair_is_excluded, zeta
from pforge.model import KernelSpec, from_arrays

GA = KernelSpec("ga")


def test_ga_unit_pair():
    assert np.array_equal(ga_pair((0, 0, 0), (1, 0, 0), 1.0, GA).accel_contrib, [1, 0, 0])


def test_ga_coincident_softened_is_zero():
    out = ga_pair((0.3, 0.2, 0.1), (0.3, 0.2, 0.1), 5.0, KernelSpec("ga", eps2=0.01))
    assert np.array_equal(out.accel_contrib, [0, 0, 0])


def test_ga_softened_value():
    # 2 * (1, 2, 2) / (9 + 1)^1.5, evaluated with math in double precision
    out = ga_pair((0, 0, 0), (1, 2, 2), 2.0, KernelSpec("ga", eps2=1.0))
    expected = [0.06324555320336758, 0.12649110640673517, 0.12649110640673517]
    np.testing.assert_allclose(out.accel_contrib, expected, rtol=1e-15)
    assert out.jerk_contrib is None


def test_ga_applies_G():
    out = ga_pair((0, 0, 0), (2, 0, 0), 1.0, KernelSpec("ga", G=4.0))
    assert out.accel_contrib[0] == 1.0


def test_ga_singular_pair_raises():
    with pytest.raises(SingularityError):
        ga_pair((1, 1, 1), (1, 1, 1), 1.0, GA)


def test_gaj_equal_velocities_zero_jerk():
    out = gaj_pair((0, 0, 0), (1, 0, 0), (0.5, 0.5, 0), (0.5, 0.5, 0), 1.0, KernelSpec("gaj"))
    assert np.array_equal(out.jerk_contrib, [0, 0, 0])
    assert np.array_equal(out.accel_contrib, [1, 0, 0])


def test_gaj_perpendicular_velocity():
    out = gaj_pair((0, 0, 0), (1, 0, 0), (0, 0, 0), (0, 0.25, -0.5), 1.0, KernelSpec("gaj"))
    np.testing.assert_array_equal(out.jerk_contrib, [0, 0.25, -0.5])


def test_gaj_softened_value():
    out = gaj_pair((0, 0, 0), (0, 2, 0), (0, 0, 0), (1, 1, 0), 3.0, KernelSpec("gaj", eps2=1.0))
    np.testing.assert_allclose(out.accel_contrib, [0.0, 0.5366563145999494, 0.0], rtol=1e-15)
    np.testing.assert_allclose(out.jerk_contrib, [0.2683281572999748, -0.3756594202199647, 0.0], rtol=1e-14)


def test_ljc_zero_couplings():
    out = ljc_pair((0, 0, 0), (1, 1, 0), 0.0, 0.0, 0.0, 1.0, KernelSpec("ljc-const"))
    assert np.array_equal(out.accel_contrib, [0, 0, 0])


def test_ljc_lj_vanishes_at_sigma():
    out = ljc_pair((0, 0, 0), (0, 1.5, 0), 0.0, 0.0, 0.7, 1.5, KernelSpec("ljc-const"))
    assert np.array_equal(out.accel_contrib, [0, 0, 0])


@pytest.mark.parametrize("variant, expected", [
    ("const", -0.1173095703125),
    ("linear", -0.1173095703125),
    ("sigmoidal", -0.20534551755405284),
])
def test_ljc_values(variant, expected):
    spec = KernelSpec("ljc-const", dielectric=2.0)
    out = ljc_pair((0, 0, 0), (2, 0, 0), 1.0, -1.0, 0.5, 1.0, spec, variant=variant)
    np.testing.assert_allclose(out.accel_contrib, [expected, 0, 0], rtol=1e-15)


def test_ljc_physical_mode_is_repulsive_inside_minimum():
    spec = KernelSpec("ljc-const", lj_mode="physical")
    out = ljc_pair((0, 0, 0), (0.9, 0, 0), 0.0, 0.0, 1.0, 1.0, spec)
    sr6 = (1 / 0.9) ** 6
    expected = 24 * (sr6 - 2 * sr6 * sr6) / 0.9 ** 2 * 0.9
    np.testing.assert_allclose(out.accel_contrib[0], expected, rtol=1e-14)
    assert out.accel_contrib[0] < 0


def test_zeta_modes():
    standard = KernelSpec("ljc-sigmoidal", sigmoid_coeffs=(0.1, 0.2, 0.3, 0.4))
    gamma_r = KernelSpec("ljc-sigmoidal", sigmoid_coeffs=(0.1, 0.2, 0.3, 0.4), zeta_mode="gamma-r")
    assert zeta(2.0, standard) == pytest.approx(math.exp(0.8 + 0.8 + 0.3 + 0.4))
    assert zeta(2.0, gamma_r) == pytest.approx(math.exp(0.8 + 0.8 + 0.6 + 0.4))


def test_gamma_r_mode_changes_sigmoidal_force():
    coeffs = (0.0, 0.0, 0.5, 0.0)
    a = ljc_pair((0, 0, 0), (2, 0, 0), 1, 1, 0, 1, KernelSpec("ljc-sigmoidal", sigmoid_coeffs=coeffs))
    b = ljc_pair((0, 0, 0), (2, 0, 0), 1, 1, 0, 1,
                 KernelSpec("ljc-sigmoidal", sigmoid_coeffs=coeffs, zeta_mode="gamma-r"))
    assert a.accel_contrib[0] == pytest.approx(0.25 / math.exp(0.5))
    assert b.accel_contrib[0] == pytest.approx(0.25 / math.exp(1.0))


def test_ljc_coincident_raises():
    with pytest.raises(SingularityError):
        ljc_pair((0, 0, 0), (0, 0, 0), 1, 1, 1, 1)


def test_pair_is_excluded():
    pset = from_arrays(np.eye(6, 3) * np.arange(1, 7)[:, None], exclusions=[[3], [], [], [], [], []], tile_width=8)
    assert pair_is_excluded(5, 5, pset)
    assert pair_is_excluded(0, 3, pset)
    assert pair_is_excluded(3, 0, pset)
    assert not pair_is_excluded(0, 2, pset)
    assert not pair_is_excluded(0, 3, pset, law="ga")
    assert pair_is_excluded(0, 3, pset, law="ljc-linear")
    assert not pair_is_excluded(0, 7, pset)  # padding index
    with pytest.raises(IndexError):
        pair_is_excluded(0, 8, pset)


vec = st.tuples(*[st.floats(-10, 10, allow_nan=False)] * 3)


def _separated(ri, rj, min_r=1e-3):
    return np.linalg.norm(np.subtract(rj, ri)) > min_r


@settings(max_examples=100, deadline=None)
@given(ri=vec, rj=vec, mi=st.floats(0.1, 10), mj=st.floats(0.1, 10), eps2=st.floats(0, 1))
def test_ga_antisymmetry(ri, rj, mi, mj, eps2):
    if not _separated(ri, rj):
        return
    spec = KernelSpec("ga", eps2=eps2)
    f_ij = mi * ga_pair(ri, rj, mj, spec).accel_contrib
    f_ji = mj * ga_pair(rj, ri, mi, spec).accel_contrib
    scale = np.linalg.norm(f_ij)
    assert np.linalg.norm(f_ij + f_ji) <= 1e-12 * scale


@settings(max_examples=50, deadline=None)
@given(direction=vec, eps2=st.floats(0, 1))
def test_ga_magnitude_decreases_with_distance(direction, eps2):
    u = np.asarray(direction)
    if np.linalg.norm(u) < 1e-3:
        return
    u = u / np.linalg.norm(u)
    spec = KernelSpec("ga", eps2=eps2)
    mags = [np.linalg.norm(ga_pair((0, 0, 0), r * u, 1.0, spec).accel_contrib) for r in (1.0, 1.5, 2.5, 4.0)]
    assert all(a > b for a, b in zip(mags, mags[1:]))


def test_jerk_matches_finite_difference():
    rng = np.random.default_rng(11)
    spec = KernelSpec("gaj", eps2=0.05)
    h = 1e-6
    for _ in range(100):
        ri, rj, vi, vj = rng.normal(size=(4, 3))
        jerk = gaj_pair(ri, rj, vi, vj, 1.3, spec).jerk_contrib
        ap = ga_pair(ri + h * vi, rj + h * vj, 1.3, spec).accel_contrib
        am = ga_pair(ri - h * vi, rj - h * vj, 1.3, spec).accel_contrib
        fd = (ap - am) / (2 * h)
        assert np.linalg.norm(fd - jerk) <= 1e-4 * np.linalg.norm(jerk)


@settings(max_examples=100, deadline=None)
@given(r=st.floats(0, 5), coeffs=st.tuples(*[st.floats(-1, 1)] * 4), mode=st.sampled_from(["standard", "gamma-r"]))
def test_zeta_positive(r, coeffs, mode):
    spec = KernelSpec("ljc-sigmoidal", sigmoid_coeffs=coeffs, zeta_mode=mode)
    assert zeta(r, spec) > 0


@settings(max_examples=50, deadline=None)
@given(r=st.floats(0.2, 5))
def test_sigmoidal_coulomb_sign_matches_constant(r):
    c = ljc_pair((0, 0, 0), (r, 0, 0), 1, -1, 0, 1, KernelSpec("ljc-const"))
    s = ljc_pair((0, 0, 0), (r, 0, 0), 1, -1, 0, 1, KernelSpec("ljc-sigmoidal", sigmoid_coeffs=(0.3, -0.2, 0.1, 1)))
    assert np.sign(c.accel_contrib[0]) == np.sign(s.accel_contrib[0])


@pytest.mark.parametrize("dtype", [np.float32, np.float64])
def test_translation_invariance_is_exact(dtype):
    # shifts by powers of two keep the float differences exact
    ri = np.array([0.25, -0.5, 0.125])
    rj = np.array([1.5, 0.75, -0.25])
    for shift in ([4.0, -8.0, 2.0], [-0.5, 0.5, 16.0]):
        s = np.array(shift)
        for fn in (lambda a, b: ga_pair(a, b, 0.7, KernelSpec("ga", eps2=0.01), dtype=dtype).accel_contrib,
                   lambda a, b: ljc_pair(a, b, 0.5, -0.25, 0.3, 0.9, KernelSpec("ljc-linear"),
                                         dtype=dtype).accel_contrib):
            assert np.array_equal(fn(ri, rj), fn(ri + s, rj + s))


def test_single_precision_path_close_to_double():
    rng = np.random.default_rng(2)
    for _ in range(50):
        ri, rj = rng.uniform(-1, 1, size=(2, 3)).astype(np.float32)
        a32 = ga_pair(ri, rj, 1.0, GA, dtype=np.float32).accel_contrib
        a64 = ga_pair(ri, rj, 1.0, GA).accel_contrib
        assert a32.dtype == np.float32
        np.testing.assert_allclose(a32, a64, rtol=2e-6)
