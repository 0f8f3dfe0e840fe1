"""Fixed-step kick-drift-kick leapfrog on top of the force engine."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from .errors import ConfigurationError, ParticleDataError, SimulationError
from .fileio import write_particles
from .model import ExecutionPlan, ForceResult, KernelSpec, ParticleSet
from .oracle import oracle_compute
from .tiling import execute


@dataclass(frozen=True)
class SimConfig:
    dt: float
    steps: int
    spec: KernelSpec = KernelSpec()
    plan: ExecutionPlan = ExecutionPlan()
    snapshot_every: int = 0
    use_oracle: bool = False

    def __post_init__(self):
        if not (np.isfinite(self.dt) and self.dt > 0):
            raise ConfigurationError(f"dt must be > 0, got {self.dt!r}")
        if int(self.steps) < 1:
            raise ConfigurationError(f"steps must be >= 1, got {self.steps!r}")
        if int(self.snapshot_every) < 0:
            raise ConfigurationError("snapshot_every must be >= 0")


def compute_forces(state: ParticleSet, cfg: SimConfig) -> ForceResult:
    """Forces for ``state`` from the tiled engine or, with ``use_oracle``, the oracle."""
    if cfg.use_oracle:
        ref = oracle_compute(state, cfg.spec)
        return ForceResult(ref.accelerations, ref.jerks, {"strategy": "oracle"},
                           "deterministic-sequential", ref.pair_count)
    res = execute(state, cfg.spec, cfg.plan)
    return ForceResult(res.accelerations.astype(np.float64), None if res.jerks is None else
                       res.jerks.astype(np.float64), res.plan_used, res.summation_mode, res.pair_evaluations)


def accelerations(state: ParticleSet, forces: ForceResult, spec: KernelSpec) -> np.ndarray:
    """Gravity results are accelerations already; LJC results are forces."""
    a = np.asarray(forces.accelerations, dtype=np.float64)
    if spec.law.is_gravity:
        return a
    m = state.masses[:state.count]
    if np.any(m <= 0):
        raise ParticleDataError("LJC integration needs positive masses")
    return a / m[:, None]


def step_leapfrog(state: ParticleSet, forces: ForceResult, cfg: SimConfig, *, step: int = 0):
    """One KDK step; returns ``(new_state, forces_at_new_state)``.

    ``forces`` must belong to ``state``; the recomputed forces are handed
    back so the next step reuses them.
    """
    h = 0.5 * cfg.dt
    pos = state.positions
    vel = state.velocities
    with np.errstate(over="ignore", invalid="ignore"):
        half = vel + h * accelerations(state, forces, cfg.spec)
        new_pos = pos + cfg.dt * half
    if not (np.all(np.isfinite(half)) and np.all(np.isfinite(new_pos))):
        raise SimulationError(step)
    drifted = state.with_phase_space(new_pos, half)
    try:
        new_forces = compute_forces(drifted, cfg)
    except ArithmeticError as exc:
        raise SimulationError(step, str(exc)) from exc
    with np.errstate(over="ignore", invalid="ignore"):
        new_vel = half + h * accelerations(drifted, new_forces, cfg.spec)
    if not np.all(np.isfinite(new_vel)):
        raise SimulationError(step)
    return state.with_phase_space(new_pos, new_vel), new_forces


def kinetic_energy(state: ParticleSet) -> float:
    m = state.masses[:state.count]
    v = state.velocities
    return 0.5 * float(np.sum(m * np.sum(v * v, axis=1)))


def potential_energy(state: ParticleSet, spec: KernelSpec) -> float:
    """Softened gravitational potential energy (GA/GAJ only)."""
    if not spec.law.is_gravity:
        raise ConfigurationError("potential energy is only defined here for gravity laws")
    pos = state.positions
    m = state.masses[:state.count]
    total = 0.0
    for i in range(state.count - 1):
        d = pos[i + 1:] - pos[i]
        r = np.sqrt(np.sum(d * d, axis=1) + spec.eps2)
        total -= m[i] * float(np.sum(m[i + 1:] / r))
    return spec.G * total


def total_energy(state: ParticleSet, spec: KernelSpec) -> float:
    return kinetic_energy(state) + potential_energy(state, spec)


def total_momentum(state: ParticleSet) -> np.ndarray:
    m = state.masses[:state.count]
    return np.sum(m[:, None] * state.velocities, axis=0)


@dataclass
class SimResult:
    state: ParticleSet
    steps: int
    energies: Optional[np.ndarray] = None
    snapshots: list = field(default_factory=list)


def simulate(state: ParticleSet, cfg: SimConfig, *, snapshot_dir=None, track_energy: bool = False,
             law_tag=None) -> SimResult:
    """Run ``cfg.steps`` leapfrog steps.

    With ``track_energy`` the total energy before the first step and after
    every step is recorded.  Snapshots go to ``snapshot_dir`` as
    ``snap_<step>.pf`` every ``cfg.snapshot_every`` steps.
    """
    if track_energy and not cfg.spec.law.is_gravity:
        raise ConfigurationError("energy tracking needs a gravity law")
    energies = [total_energy(state, cfg.spec)] if track_energy else None
    snaps = []
    out = None
    if snapshot_dir is not None and cfg.snapshot_every:
        out = Path(snapshot_dir)
        out.mkdir(parents=True, exist_ok=True)
    forces = compute_forces(state, cfg)
    for step in range(1, int(cfg.steps) + 1):
        state, forces = step_leapfrog(state, forces, cfg, step=step)
        if energies is not None:
            energies.append(total_energy(state, cfg.spec))
        if out is not None and step % cfg.snapshot_every == 0:
            path = out / f"snap_{step:06d}.pf"
            write_particles(path, state, law_tag or cfg.spec.law)
            snaps.append(path)
    return SimResult(state, int(cfg.steps), None if energies is None else np.array(energies), snaps)
