import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pforge.errors import ConfigurationError, ParticleDataError
from pforge.model import (ExecutionPlan, KernelSpec, Law, ParticleRecord, Strategy, build_particle_set,
                          from_arrays)


def records(n, seed=0):
    rng = np.random.default_rng(seed)
    return [ParticleRecord(tuple(rng.uniform(-1, 1, 3)), tuple(rng.normal(size=3)), float(rng.uniform(0.1, 1)),
                           float(rng.choice([-1, 1])), 0.1, 0.2) for _ in range(n)]


def test_three_particles_pad_to_four():
    pset = build_particle_set(records(3), ExecutionPlan("1x4"))
    assert pset.count == 3
    assert pset.padded_count == 4
    assert pset.masses[3] == 0.0
    assert pset.charges[3] == 0.0
    assert pset.lj_epsilon[3] == 0.0


def test_aligned_sizes_need_no_padding():
    pset = from_arrays(np.zeros((4096, 3)) + np.arange(4096)[:, None], tile_width=4)
    assert pset.padded_count == 4096


def test_table_scale_set_stays_unpadded():
    pos = np.random.default_rng(0).uniform(size=(65536, 3))
    assert from_arrays(pos, tile_width=4).padded_count == 65536


def test_tile_width_follows_plan():
    plan = ExecutionPlan("4x4")
    assert plan.tile_width == 4
    assert build_particle_set(records(5), plan).padded_count == 8
    assert build_particle_set(records(5), ExecutionPlan("1x4", lane_width=8)).padded_count == 8
    assert build_particle_set(records(5), ExecutionPlan("1x1")).padded_count == 5


def test_round_trip_of_live_records():
    raw = records(7, seed=3)
    pset = build_particle_set(raw)
    back = pset.records()
    assert len(back) == 7
    for a, b in zip(raw, back):
        assert a.position == b.position
        assert a.velocity == b.velocity
        assert (a.mass, a.charge, a.lj_epsilon, a.lj_sigma) == (b.mass, b.charge, b.lj_epsilon, b.lj_sigma)


def test_arrays_are_read_only():
    pset = build_particle_set(records(3))
    with pytest.raises(ValueError):
        pset.x[0] = 1.0


def test_padding_sits_outside_live_box():
    pset = build_particle_set(records(5), tile_width=8)
    live = np.abs(pset.positions).max()
    pad = np.stack([pset.x[5:], pset.y[5:], pset.z[5:]], axis=1)
    assert np.all(pad.max(axis=1) > live)
    assert len({tuple(p) for p in pad}) == 3


@pytest.mark.parametrize("bad", [np.nan, np.inf])
def test_non_finite_input_rejected(bad):
    pos = np.zeros((2, 3))
    pos[1, 2] = bad
    with pytest.raises(ParticleDataError, match="non-finite positions"):
        from_arrays(pos)


def test_negative_mass_rejected():
    with pytest.raises(ParticleDataError, match="negative mass"):
        from_arrays(np.eye(3), masses=[1, -1, 1])


def test_empty_input_rejected():
    with pytest.raises(ParticleDataError):
        build_particle_set([])


def test_exclusion_out_of_range():
    with pytest.raises(ParticleDataError, match="out of range"):
        from_arrays(np.eye(3), exclusions=[[3], [], []])


def test_exclusions_symmetrized_and_sorted():
    pset = from_arrays(np.eye(3) * np.arange(1, 4)[:, None], exclusions=[[2, 1], [], [0, 0]])
    assert pset.exclusions(0) == (1, 2)
    assert pset.exclusions(1) == (0,)
    assert pset.exclusions(2) == (0,)
    assert pset.excluded_pair_count == 2


def test_exclusion_cap():
    n = 5
    excl = [[j for j in range(n) if j != i] for i in range(n)]
    from_arrays(np.random.default_rng(0).normal(size=(n, 3)), exclusions=excl, max_exclusions=4)
    with pytest.raises(ParticleDataError, match="cap"):
        from_arrays(np.random.default_rng(0).normal(size=(n, 3)), exclusions=excl, max_exclusions=3)


def test_padded_keeps_exclusions_and_live_data():
    pset = from_arrays(np.eye(3), masses=[1, 2, 3], exclusions=[[1], [], []])
    wide = pset.padded(4, min_padded_count=12)
    assert wide.padded_count == 12
    assert wide.exclusions(1) == (0,)
    assert np.array_equal(wide.masses[:3], [1, 2, 3])
    assert not np.any(wide.masses[3:])


def test_kernel_spec_validation():
    with pytest.raises(ConfigurationError):
        KernelSpec("ga", eps2=-1)
    with pytest.raises(ConfigurationError):
        KernelSpec("ljc-const", dielectric=0)
    with pytest.raises(ConfigurationError):
        KernelSpec("ljc-sigmoidal", sigmoid_coeffs=(1, 2, 3))
    with pytest.raises(ConfigurationError):
        KernelSpec("nope")
    assert KernelSpec("GA").law is Law.GA


def test_law_properties():
    assert Law.GAJ.has_jerk and not Law.GA.has_jerk
    assert Law.GA.is_gravity and not Law.LJC_LINEAR.is_gravity
    assert [law.max_i_unroll for law in Law] == [4, 2, 2, 2, 2]


@pytest.mark.parametrize("r", [0, 3, 6, -2])
def test_replication_must_be_power_of_two(r):
    with pytest.raises(ConfigurationError):
        ExecutionPlan(replication=r)


def test_plan_aliases_and_labels():
    assert ExecutionPlan("GAJ_1x4").strategy is Strategy.UNROLL_1x4
    assert ExecutionPlan("LJC_2x4").label == "2x4"
    assert ExecutionPlan("1x4", lane_width=8).label == "1x8"
    assert ExecutionPlan("4x4").tile_i == 256
    with pytest.raises(ConfigurationError):
        ExecutionPlan(lane_width=16)
    with pytest.raises(ConfigurationError):
        ExecutionPlan("3x3")


@pytest.mark.parametrize("law", ["gaj", "ljc-const", "ljc-linear", "ljc-sigmoidal"])
def test_4x4_rejected_for_two_output_laws(law):
    with pytest.raises(ConfigurationError, match="at most 2x4"):
        ExecutionPlan("4x4").validate_for(law)


@settings(max_examples=40, deadline=None)
@given(n=st.integers(1, 70), width=st.sampled_from([1, 4, 8]))
def test_padding_invariants(n, width):
    pos = np.random.default_rng(n).normal(size=(n, 3))
    pset = from_arrays(pos, masses=np.ones(n), charges=np.ones(n), lj_epsilon=np.ones(n), tile_width=width)
    assert pset.padded_count % width == 0
    assert 0 <= pset.padded_count - n < width
    for arr in (pset.masses, pset.charges, pset.lj_epsilon):
        assert not np.any(arr[n:])
    assert np.array_equal(pset.positions, pos)
