import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pforge import generate as gen
from pforge.errors import ConfigurationError, SingularityError
from pforge.model import ExecutionPlan, KernelSpec, Law, from_arrays
from pforge.oracle import compare, oracle_compute
from pforge.tiling import (execute, reduce_partials, replica_bounds, run_1x1, run_1x4, run_2x4, run_4x4,
                           run_partials, run_replicated, set_worker_count, tile_jobs, worker_count)

LAWS = [law.value for law in Law]
PLANS = ["1x1", "1x4", "2x4", "4x4"]


def valid_plans(law, **kw):
    out = []
    for name in PLANS:
        plan = ExecutionPlan(name, **kw)
        if plan.i_unroll <= Law.parse(law).max_i_unroll:
            out.append(plan)
    return out


def test_single_particle_has_zero_force():
    pset = gen.uniform(1, 0)
    for plan in valid_plans("ga"):
        res = execute(pset, KernelSpec("ga"), plan)
        assert res.accelerations.shape == (1, 3)
        assert not np.any(res.accelerations)


def test_two_body_symmetry():
    pset = from_arrays([[-0.5, 0.25, 0], [0.5, -0.25, 0]], masses=[2.0, 2.0])
    res = run_1x1(pset, KernelSpec("ga"))
    np.testing.assert_array_equal(res.accelerations[0], -res.accelerations[1])
    assert res.summation_mode == "deterministic-sequential"


@pytest.mark.parametrize("law", LAWS)
def test_small_random_set_matches_oracle(law):
    pset = gen.uniform(64, 7)
    spec = KernelSpec(law)
    ref = oracle_compute(pset, spec)
    for plan in valid_plans(law):
        cmp = compare(execute(pset, spec, plan), ref, 2e-5)
        assert cmp.passed, (plan.label, cmp.summary())


def test_single_nonzero_source_is_bit_identical_across_plans():
    rng = np.random.default_rng(4)
    pos = rng.uniform(-1, 1, size=(13, 3))
    masses = np.zeros(13)
    masses[5] = 0.75
    pset = from_arrays(pos, masses=masses)
    ref = run_1x1(pset, KernelSpec("ga"))
    for fn in (run_1x4, run_2x4, run_4x4):
        assert np.array_equal(fn(pset, KernelSpec("ga")).accelerations, ref.accelerations)


def test_padding_contributes_nothing():
    pset = gen.uniform(6, 2)
    assert pset.padded_count == 8
    spec = KernelSpec("ljc-const")
    res = run_1x4(pset, spec)
    ref = run_1x1(from_arrays(**pset.live_arrays(), tile_width=1), spec)
    assert res.accelerations.shape == (6, 3)
    np.testing.assert_allclose(res.accelerations, ref.accelerations, rtol=1e-6)


def test_result_dtype_and_jerk_presence():
    pset = gen.uniform(16, 0)
    assert run_1x4(pset, KernelSpec("gaj")).jerks.shape == (16, 3)
    assert run_1x4(pset, KernelSpec("ga")).jerks is None
    assert run_1x4(pset, KernelSpec("ga")).accelerations.dtype == np.float32
    assert run_1x4(pset, KernelSpec("ga"), precision="double").accelerations.dtype == np.float64


@pytest.mark.parametrize("law", ["gaj", "ljc-const", "ljc-linear", "ljc-sigmoidal"])
def test_4x4_rejected_before_compute(law):
    with pytest.raises(ConfigurationError):
        run_4x4(gen.uniform(8, 0), KernelSpec(law))


def test_2x4_valid_for_ljc_linear():
    pset = gen.uniform(32, 1)
    spec = KernelSpec("ljc-linear")
    assert compare(run_2x4(pset, spec), oracle_compute(pset, spec), 2e-5).passed


def test_replication_split_is_partial_sum():
    pset = from_arrays([[0, 0, 0], [1, 0, 0], [0, 2, 0], [0, 0, 3]], masses=[1, 2, 3, 4])
    spec = KernelSpec("ga")
    plan = ExecutionPlan("1x1", replication=2, precision="double")
    _, parts, _ = run_partials(pset, spec, plan)
    full = run_1x1(pset, spec, precision="double").accelerations
    np.testing.assert_allclose(parts[0] + parts[1], full, rtol=1e-15)
    # each partial only sees its own j-chunk
    assert list(replica_bounds(4, 4, 2, 1)) == [0, 2, 4]
    pos = pset.positions
    lo = run_1x1(from_arrays(pos, masses=[1, 2, 0, 0]), spec, precision="double").accelerations
    hi = run_1x1(from_arrays(pos, masses=[0, 0, 3, 4]), spec, precision="double").accelerations
    np.testing.assert_allclose(parts[0], lo, rtol=1e-15)
    np.testing.assert_allclose(parts[1], hi, rtol=1e-15)


@pytest.mark.parametrize("R", [1, 2, 4, 8])
def test_replication_preserves_physics(R):
    pset = gen.uniform(256, 3)
    spec = KernelSpec("ljc-sigmoidal")
    ref = oracle_compute(pset, spec)
    res = execute(pset, spec, ExecutionPlan("2x4", replication=R))
    assert compare(res, ref, 2e-5).passed


def test_replication_equal_to_padded_count():
    pset = gen.uniform(8, 5)
    spec = KernelSpec("ga")
    res = run_replicated(pset, spec, 8, precision="double")
    ref = run_1x1(pset, spec, precision="double")
    np.testing.assert_allclose(res.accelerations, ref.accelerations, rtol=1e-14)


def test_replication_errors():
    pset = gen.uniform(4, 0)
    with pytest.raises(ConfigurationError):
        run_replicated(pset, KernelSpec("ga"), 8)
    with pytest.raises(ConfigurationError):
        run_replicated(pset, KernelSpec("ga"), 1)
    with pytest.raises(ConfigurationError):
        run_replicated(pset, KernelSpec("ga"), 3)


def test_replica_bounds_are_lane_aligned():
    b = replica_bounds(13, 16, 4, 4)
    assert b[0] == 0 and b[-1] == 16
    assert all(v % 4 == 0 for v in b)
    assert np.all(np.diff(b) >= 0)
    # extra padding only grows the last chunk
    assert np.array_equal(replica_bounds(13, 64, 4, 4)[:-1], b[:-1])


def test_reduce_partials():
    rng = np.random.default_rng(0)
    parts = rng.normal(size=(4, 10, 3))
    np.testing.assert_array_equal(reduce_partials(parts[:1]), parts[0])
    assert not np.any(reduce_partials(np.zeros((3, 5, 3))))
    expected = ((parts[0] + parts[1]) + parts[2]) + parts[3]
    np.testing.assert_array_equal(reduce_partials(parts), expected)
    with pytest.raises(ValueError):
        reduce_partials([np.zeros((2, 3)), np.zeros((3, 3))])
    with pytest.raises(ValueError):
        reduce_partials([])


def test_jobs_have_disjoint_outputs_and_cover_pairs():
    pset = gen.uniform(300, 0).padded(4)
    plan = ExecutionPlan("2x4", replication=4, i_tile=64)
    jobs = tile_jobs(pset, plan)
    slots = [(j.output_slot, j.i_range) for j in jobs]
    assert len({s for s, _ in slots}) == len(slots)
    grid = np.zeros((pset.padded_count, pset.padded_count), dtype=int)
    for job in jobs:
        grid[job.i_range[0]:job.i_range[1], job.j_range[0]:job.j_range[1]] += 1
    assert np.all(grid == 1)


@pytest.mark.parametrize("law", LAWS)
@pytest.mark.parametrize("n", [1, 2, 3, 5, 63, 66])
def test_each_live_pair_evaluated_once(law, n):
    pset = gen.protein_like(n, 1) if n > 3 else gen.uniform(n, 1)
    spec = KernelSpec(law)
    for plan in valid_plans(law) + [ExecutionPlan("1x4", replication=2), ExecutionPlan("1x4", lane_width=8)]:
        if plan.i_unroll > spec.law.max_i_unroll:
            continue
        p = pset.padded(plan.tile_width)
        P = p.padded_count
        counts = np.zeros((P, P), dtype=np.int64)
        execute(p, spec, plan, counts=counts)
        live = counts[:n, :n]
        expected = np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64)
        if not spec.law.is_gravity:
            for i in range(n):
                for j in p.exclusions(i):
                    expected[i, j] = 0
        assert np.array_equal(live, expected), plan.label


@pytest.mark.parametrize("law", LAWS)
def test_runs_are_bit_identical(law):
    pset = gen.uniform(200, 9)
    spec = KernelSpec(law)
    for plan in valid_plans(law, replication=2):
        a = execute(pset, spec, plan)
        b = execute(pset, spec, plan)
        assert np.array_equal(a.accelerations, b.accelerations)


def test_thread_count_does_not_change_results():
    pset = gen.uniform(700, 2)
    spec = KernelSpec("gaj")
    plan = ExecutionPlan("2x4", replication=2, i_tile=32)
    try:
        set_worker_count(1)
        one = execute(pset, spec, plan)
        set_worker_count(4)
        assert worker_count() == 4
        four = execute(pset, spec, plan)
    finally:
        set_worker_count(None)
    assert np.array_equal(one.accelerations, four.accelerations)
    assert np.array_equal(one.jerks, four.jerks)


def test_worker_count_env(monkeypatch):
    monkeypatch.setenv("PFORGE_THREADS", "3")
    assert worker_count() == 3
    monkeypatch.setenv("PFORGE_THREADS", "many")
    with pytest.raises(ConfigurationError):
        worker_count()


@pytest.mark.parametrize("plan", PLANS)
def test_singularity_reports_pair(plan):
    pset = from_arrays([[0, 0, 0], [1, 0, 0], [2, 0, 0], [1, 0, 0], [5, 1, 1]], masses=[1] * 5)
    with pytest.raises(SingularityError) as info:
        execute(pset, KernelSpec("ga"), ExecutionPlan(plan))
    assert (info.value.i, info.value.j) == (1, 3)


def test_singularity_ljc_and_excluded_pair():
    pos = [[0, 0, 0], [1, 0, 0], [1, 0, 0], [3, 0, 0]]
    with pytest.raises(SingularityError):
        execute(from_arrays(pos, charges=[1] * 4), KernelSpec("ljc-const"), ExecutionPlan("2x4"))
    # an excluded coincident pair is never evaluated
    pset = from_arrays(pos, charges=[1] * 4, exclusions=[[], [2], [], []])
    res = execute(pset, KernelSpec("ljc-const"), ExecutionPlan("2x4"))
    assert np.all(np.isfinite(res.accelerations))


def test_softening_avoids_singularity():
    pset = from_arrays([[0, 0, 0], [0, 0, 0], [1, 0, 0]], masses=[1, 1, 1])
    res = execute(pset, KernelSpec("ga", eps2=0.01), ExecutionPlan("4x4"))
    assert np.all(np.isfinite(res.accelerations))


def test_G_scaling():
    pset = gen.plummer(32, 0)
    a1 = run_1x4(pset, KernelSpec("ga"), precision="double").accelerations
    a2 = run_1x4(pset, KernelSpec("ga", G=2.5), precision="double").accelerations
    np.testing.assert_allclose(a2, 2.5 * a1, rtol=1e-15)


@settings(max_examples=15, deadline=None)
@given(n=st.integers(1, 40), extra=st.integers(1, 3), plan=st.sampled_from(PLANS), R=st.sampled_from([1, 2]))
def test_extra_padding_is_bit_identical(n, extra, plan, R):
    pset = gen.uniform(n, n)
    p = ExecutionPlan(plan, replication=R)
    if R > pset.padded(p.tile_width).padded_count:
        return
    spec = KernelSpec("ga")
    base = execute(pset.padded(p.tile_width), spec, p)
    wide = execute(pset.padded(p.tile_width, min_padded_count=pset.padded_count + 4 * extra), spec, p)
    assert np.array_equal(base.accelerations, wide.accelerations)
