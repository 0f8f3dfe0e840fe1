import math

import numpy as np
import pytest

from pforge import generate as gen
from pforge.errors import ConfigurationError, ParticleDataError, SimulationError
from pforge.fileio import read_particles
from pforge.model import ExecutionPlan, KernelSpec, from_arrays
from pforge.sim import (SimConfig, compute_forces, kinetic_energy, potential_energy, simulate, step_leapfrog,
                        total_energy, total_momentum)


def circular_binary():
    # equal masses 0.5 at unit separation, relative speed sqrt(G M / r) = 1
    return from_arrays([[-0.5, 0, 0], [0.5, 0, 0]], velocities=[[0, -0.5, 0], [0, 0.5, 0]], masses=[0.5, 0.5])


def test_two_body_circular_orbit():
    period = 2 * math.pi
    cfg = SimConfig(dt=1e-3 * period, steps=1000, plan=ExecutionPlan("1x1", precision="double"))
    state = circular_binary()
    res = simulate(state, cfg)
    sep = res.state.positions[1] - res.state.positions[0]
    assert abs(np.linalg.norm(sep) - 1.0) <= 1e-3
    # back near the starting point after one period
    np.testing.assert_allclose(res.state.positions, state.positions, atol=1e-2)


def test_zero_forces_drift_linearly():
    state = from_arrays([[0, 0, 0], [5, 0, 0]], velocities=[[1, 2, 3], [0, 0, -1]], masses=[0, 0])
    res = simulate(state, SimConfig(dt=0.25, steps=8))
    np.testing.assert_allclose(res.state.positions, [[2, 4, 6], [5, 0, -2]])
    np.testing.assert_array_equal(res.state.velocities, state.velocities)


def test_single_particle():
    state = from_arrays([[1, 1, 1]], velocities=[[0.5, 0, 0]])
    res = simulate(state, SimConfig(dt=0.1, steps=10))
    np.testing.assert_allclose(res.state.positions, [[1.5, 1, 1]])


def test_energy_conservation_plummer():
    state = gen.plummer(16, 3)
    spec = KernelSpec("ga", eps2=0.01)
    res = simulate(state, SimConfig(dt=1e-3, steps=10_000, spec=spec, use_oracle=True), track_energy=True)
    e0 = res.energies[0]
    assert len(res.energies) == 10_001
    assert np.max(np.abs(res.energies - e0)) / abs(e0) <= 1e-4


def test_momentum_conserved_with_engine():
    state = gen.plummer(64, 1)
    p0 = total_momentum(state)
    res = simulate(state, SimConfig(dt=1e-3, steps=50, spec=KernelSpec("ga", eps2=0.01),
                                    plan=ExecutionPlan("4x4", precision="double")))
    assert np.linalg.norm(total_momentum(res.state) - p0) <= 1e-12


def test_step_returns_forces_of_new_state():
    state = gen.plummer(20, 0)
    cfg = SimConfig(dt=1e-3, steps=1, spec=KernelSpec("ga", eps2=0.01), use_oracle=True)
    new_state, forces = step_leapfrog(state, compute_forces(state, cfg), cfg)
    np.testing.assert_array_equal(forces.accelerations, compute_forces(new_state, cfg).accelerations)


def test_ljc_forces_divided_by_mass():
    state = from_arrays([[0, 0, 0], [2, 0, 0]], charges=[1, 1], masses=[1, 4])
    cfg = SimConfig(dt=1e-3, steps=1, spec=KernelSpec("ljc-const"), use_oracle=True)
    f = compute_forces(state, cfg).accelerations
    new_state, _ = step_leapfrog(state, compute_forces(state, cfg), cfg)
    dv = new_state.velocities - state.velocities
    # first-order check: dv ~ dt * F / m
    np.testing.assert_allclose(dv[:, 0], 1e-3 * f[:, 0] / [1, 4], rtol=1e-3)
    with pytest.raises(ParticleDataError):
        simulate(from_arrays([[0, 0, 0], [2, 0, 0]], charges=[1, 1], masses=[1, 0]), cfg)


def test_non_finite_state_raises():
    state = from_arrays([[0, 0, 0], [1, 0, 0]], velocities=[[1e30, 0, 0], [0, 0, 0]], masses=[0, 0])
    with pytest.raises(SimulationError) as info:
        simulate(state, SimConfig(dt=1e300, steps=3))
    assert info.value.step == 1
    assert isinstance(info.value, ArithmeticError)


def test_energies():
    state = circular_binary()
    spec = KernelSpec("ga")
    assert kinetic_energy(state) == pytest.approx(0.125)
    assert potential_energy(state, spec) == pytest.approx(-0.25)
    assert total_energy(state, spec) == pytest.approx(-0.125)
    with pytest.raises(ConfigurationError):
        potential_energy(state, KernelSpec("ljc-const"))


def test_snapshots(tmp_path):
    state = gen.plummer(8, 0)
    res = simulate(state, SimConfig(dt=1e-3, steps=10, snapshot_every=4, spec=KernelSpec("ga", eps2=0.01)),
                   snapshot_dir=tmp_path)
    assert [p.name for p in res.snapshots] == ["snap_000004.pf", "snap_000008.pf"]
    _, snap = read_particles(res.snapshots[-1])
    assert snap.count == 8


@pytest.mark.parametrize("kwargs", [dict(dt=0, steps=1), dict(dt=float("nan"), steps=1), dict(dt=1, steps=0),
                                    dict(dt=1, steps=1, snapshot_every=-1)])
def test_config_validation(kwargs):
    with pytest.raises(ConfigurationError):
        SimConfig(**kwargs)
