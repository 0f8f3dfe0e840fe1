"""Seeded particle-system generators.

All generated values are rounded to float32 so the single-precision kernels
and the double-precision oracle see bit-identical inputs.
"""

from __future__ import annotations

import numpy as np

from .model import DEFAULT_LANE_WIDTH, ParticleSet, from_arrays

KINDS = ("plummer", "uniform", "protein-like")
PROTEIN_DEFAULT_N = 1280


def _f32(a):
    return np.asarray(a, dtype=np.float32).astype(np.float64)


def _unit_vectors(rng, n):
    v = rng.normal(size=(n, 3))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def plummer(n: int, seed: int = 0, *, scale: float = 1.0, max_radius: float = 10.0,
            tile_width: int = DEFAULT_LANE_WIDTH) -> ParticleSet:
    """Plummer sphere in N-body units (G = 1, total mass 1).

    Radii beyond ``max_radius * scale`` are resampled; velocities use the
    usual rejection sampling of the isotropic distribution function.
    """
    rng = np.random.default_rng(seed)
    radii = np.empty(n)
    filled = 0
    while filled < n:
        u = rng.uniform(1e-10, 1.0, size=n - filled)
        r = scale / np.sqrt(u ** (-2.0 / 3.0) - 1.0)
        r = r[r <= max_radius * scale]
        radii[filled:filled + r.size] = r
        filled += r.size
    pos = radii[:, None] * _unit_vectors(rng, n)

    speeds = np.empty(n)
    todo = np.arange(n)
    while todo.size:
        q = rng.uniform(0.0, 1.0, size=todo.size)
        y = rng.uniform(0.0, 0.1, size=todo.size)
        ok = y < q * q * (1.0 - q * q) ** 3.5
        idx = todo[ok]
        escape = np.sqrt(2.0 / scale) * (1.0 + (radii[idx] / scale) ** 2) ** -0.25
        speeds[idx] = q[ok] * escape
        todo = todo[~ok]
    vel = speeds[:, None] * _unit_vectors(rng, n)
    pos -= pos.mean(axis=0)
    vel -= vel.mean(axis=0)
    return from_arrays(_f32(pos), velocities=_f32(vel), masses=_f32(np.full(n, 1.0 / n)),
                       tile_width=tile_width)


def uniform(n: int, seed: int = 0, *, box: float = 1.0,
            tile_width: int = DEFAULT_LANE_WIDTH) -> ParticleSet:
    """Uniform cube ``[-box, box]^3`` with every property filled in."""
    rng = np.random.default_rng(seed)
    pos = rng.uniform(-box, box, size=(n, 3))
    vel = rng.normal(scale=0.1, size=(n, 3))
    return from_arrays(
        _f32(pos), velocities=_f32(vel),
        masses=_f32(rng.uniform(0.5, 1.5, size=n) / n),
        charges=_f32(rng.choice([-0.5, 0.5], size=n)),
        lj_epsilon=_f32(rng.uniform(0.05, 0.2, size=n)),
        lj_sigma=_f32(rng.uniform(0.02, 0.05, size=n) * box),
        tile_width=tile_width,
    )


def protein_like(n: int = PROTEIN_DEFAULT_N, seed: int = 0, *, bond: float = 1.0, min_sep: float = 0.9,
                 tile_width: int = DEFAULT_LANE_WIDTH) -> ParticleSet:
    """Self-avoiding bead chain packed into a globule.

    Every bead excludes its two chain neighbours.  Beads carry partial
    charges and LJ parameters comparable to the bond length.
    """
    rng = np.random.default_rng(seed)
    radius = bond * max(2.0, 1.1 * n ** (1.0 / 3.0))
    pos = np.zeros((n, 3))
    for k in range(1, n):
        sep = min_sep
        for attempt in range(400):
            trial = pos[k - 1] + bond * _unit_vectors(rng, 1)[0]
            if np.dot(trial, trial) > radius * radius:
                continue
            d2 = np.sum((pos[:k - 1] - trial) ** 2, axis=1)
            if d2.size == 0 or d2.min() >= sep * sep:
                break
            if attempt % 100 == 99:
                sep *= 0.9  # dense pocket: relax rather than stall
        pos[k] = trial
    charges = rng.choice([-0.5, -0.25, 0.0, 0.25, 0.5], size=n)
    exclusions = [[j for j in (i - 1, i + 1) if 0 <= j < n] for i in range(n)]
    return from_arrays(
        _f32(pos - pos.mean(axis=0)),
        velocities=_f32(rng.normal(scale=0.05, size=(n, 3))),
        masses=_f32(rng.uniform(12.0, 16.0, size=n)),
        charges=_f32(charges),
        lj_epsilon=_f32(rng.uniform(0.1, 0.2, size=n)),
        lj_sigma=_f32(rng.uniform(0.9, 1.1, size=n) * bond),
        exclusions=exclusions,
        tile_width=tile_width,
    )


def generate(kind: str, n: int, seed: int = 0, **kwargs) -> ParticleSet:
    if n < 1:
        raise ValueError("N must be >= 1")
    if kind == "plummer":
        return plummer(n, seed, **kwargs)
    if kind == "uniform":
        return uniform(n, seed, **kwargs)
    if kind == "protein-like":
        return protein_like(n, seed, **kwargs)
    raise ValueError(f"unknown generator {kind!r}; expected one of {KINDS}")
