from pathlib import Path

import numpy as np
import pytest

from pforge import generate as gen
from pforge.errors import SingularityError
from pforge.model import ExecutionPlan, ForceResult, KernelSpec, Law, from_arrays
from pforge.oracle import (compare, dump_fixture, fixture_key, load_fixture, oracle_compute,
                           relative_errors)
from pforge.tiling import execute

FIXTURES = Path(__file__).parent / "fixtures"


def brute_force_ga(pset, eps2=0.0):
    # vectorized all-pairs in numpy, independent of the compiled code
    p = pset.positions
    m = pset.masses[:pset.count]
    d = p[None, :, :] - p[:, None, :]
    r2 = (d ** 2).sum(-1) + eps2
    np.fill_diagonal(r2, 1.0)
    inv3 = r2 ** -1.5
    np.fill_diagonal(inv3, 0.0)
    return (m[None, :, None] * inv3[..., None] * d).sum(1)


def test_two_bodies():
    pset = from_arrays([[0, 0, 0], [2, 0, 0]], masses=[1.0, 3.0])
    ref = oracle_compute(pset, KernelSpec("ga"))
    np.testing.assert_array_equal(ref.accelerations, [[0.75, 0, 0], [-0.25, 0, 0]])
    assert ref.pair_count == 1


def test_three_collinear_bodies():
    pset = from_arrays([[-1, 0, 0], [0, 0, 0], [1, 0, 0]], masses=[1, 1, 1])
    acc = oracle_compute(pset, KernelSpec("ga")).accelerations
    np.testing.assert_allclose(acc, [[1.25, 0, 0], [0, 0, 0], [-1.25, 0, 0]], atol=1e-15)


def test_matches_numpy_brute_force():
    pset = gen.plummer(100, 1)
    ref = oracle_compute(pset, KernelSpec("ga", eps2=1e-3))
    np.testing.assert_allclose(ref.accelerations, brute_force_ga(pset, 1e-3), rtol=1e-12, atol=1e-12)


@pytest.mark.parametrize("law", ["ga", "ljc-const", "ljc-linear", "ljc-sigmoidal"])
def test_momentum_conserved(law):
    pset = gen.uniform(200, 4)
    acc = oracle_compute(pset, KernelSpec(law)).accelerations
    w = pset.masses[:200, None] if Law.parse(law).is_gravity else 1.0
    total = (w * acc).sum(axis=0)
    assert np.linalg.norm(total) <= 1e-10 * np.abs(w * acc).sum()


def test_pair_count_uses_third_law_and_exclusions():
    pset = gen.protein_like(60, 0)
    ga = oracle_compute(pset, KernelSpec("ga"))
    ljc = oracle_compute(pset, KernelSpec("ljc-const"))
    assert ga.pair_count == 60 * 59 // 2
    assert ljc.pair_count == 60 * 59 // 2 - pset.excluded_pair_count
    res = execute(pset, KernelSpec("ga"), ExecutionPlan("1x1"))
    assert res.pair_evaluations == 2 * ga.pair_count


def test_singular_pair_reported():
    pset = from_arrays([[0, 0, 0], [1, 1, 1], [1, 1, 1]])
    with pytest.raises(SingularityError) as info:
        oracle_compute(pset, KernelSpec("ga"))
    assert (info.value.i, info.value.j) == (1, 2)


def test_double_path_agrees_with_oracle():
    pset = gen.uniform(300, 8)
    spec = KernelSpec("gaj")
    cmp = compare(execute(pset, spec, ExecutionPlan("2x4", precision="double")), oracle_compute(pset, spec), 1e-12)
    assert cmp.passed, cmp.summary()


def _result(acc, jerk=None):
    acc = np.asarray(acc, dtype=np.float64)
    return ForceResult(acc, None if jerk is None else np.asarray(jerk), {"strategy": "1x1"}, "deterministic-sequential")


def test_compare_identical_is_zero():
    ref = oracle_compute(gen.uniform(20, 0), KernelSpec("ga"))
    cmp = compare(_result(ref.accelerations.copy()), ref, 0.0)
    assert cmp.passed and cmp.max_error == 0.0


def test_compare_locates_fault():
    ref = oracle_compute(gen.uniform(20, 0), KernelSpec("ga"))
    bad = ref.accelerations.copy()
    bad[13] *= 1.001
    cmp = compare(_result(bad), ref, 2e-5)
    assert not cmp.passed
    assert cmp.worst_index == 13
    assert cmp.max_error == pytest.approx(1e-3)
    assert "FAIL" in cmp.summary() and "particle 13" in cmp.summary()


def test_compare_checks_jerk_and_shapes():
    ref = oracle_compute(gen.uniform(10, 0), KernelSpec("gaj"))
    jerk = ref.jerks.copy()
    jerk[2] += 1.0
    cmp = compare(_result(ref.accelerations, jerk), ref, 1e-6)
    assert not cmp.passed and cmp.worst_index == 2
    assert compare(_result(ref.accelerations, jerk), ref, 1e-6, include_jerk=False).passed
    with pytest.raises(ValueError):
        compare(_result(ref.accelerations), ref, 1e-6)
    with pytest.raises(ValueError):
        relative_errors(np.zeros((3, 3)), np.zeros((4, 3)))


def test_relative_error_zero_reference():
    assert relative_errors([[0.0, 0, 0]], [[0.0, 0, 0]])[0] == 0.0


@pytest.mark.parametrize("name, law, n", [
    ("ljc-sigmoidal-N128-seed0.json", "ljc-sigmoidal", 128),
    ("gaj-N64-seed0.json", "gaj", 64),
])
def test_golden_fixture(name, law, n):
    meta, golden = load_fixture(FIXTURES / name)
    assert meta["key"] == fixture_key(law, n, 0)
    pset = gen.uniform(n, meta["seed"])
    spec = KernelSpec(law)
    fresh = oracle_compute(pset, spec)
    np.testing.assert_allclose(fresh.accelerations, golden.accelerations, rtol=1e-13, atol=1e-13)
    assert fresh.pair_count == golden.pair_count
    for plan in ("1x1", "1x4", "2x4"):
        assert compare(execute(pset, spec, ExecutionPlan(plan)), golden, 2e-5).passed
        assert compare(execute(pset, spec, ExecutionPlan(plan, precision="double")), golden, 1e-12).passed


def test_fixture_round_trip(tmp_path):
    ref = oracle_compute(gen.uniform(5, 1), KernelSpec("ga"))
    path = tmp_path / "f.json"
    dump_fixture(path, ref, "ga", 5, 1)
    meta, back = load_fixture(path)
    assert meta["N"] == 5 and back.jerks is None
    np.testing.assert_array_equal(back.accelerations, ref.accelerations)
    path.write_text(path.read_text().replace('"version": 1', '"version": 9'))
    with pytest.raises(ValueError):
        load_fixture(path)
