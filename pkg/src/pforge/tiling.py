"""Streaming execution of a force law over all (i, j) pairs.

A plan ``A x B`` processes ``A`` i-particles per inner iteration against
``B`` consecutive j-particles (the SIMD lanes).  Every (i, lane) keeps its
own partial sum; lanes are reduced in ascending order once the j-range is
exhausted.  With replication ``R`` the j-range is cut into ``R`` contiguous,
lane-aligned chunks, each chunk writes its own partial-force buffer, and the
buffers are summed in ascending replica order afterwards.

There is no third-law halving here: a job only ever writes the outputs of the
i-particles it owns.  Work is split into (replica, i-tile) jobs with disjoint
output slots, so the parallel loop needs no locks and every run of the same
plan on the same input is bit-identical regardless of thread count.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from ._unrolled import KERNELS
from .errors import ConfigurationError, SingularityError
from .kernels import kernel_mode, kernel_params, lj_factors, source_weights
from .model import ExecutionPlan, ForceResult, KernelSpec, Law, ParticleSet, Strategy

_threads = None


def worker_count() -> int:
    """Worker threads for tile jobs: ``$PFORGE_THREADS`` or the CPU count."""
    if _threads is not None:
        return _threads
    env = os.environ.get("PFORGE_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ConfigurationError(f"PFORGE_THREADS must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


def set_worker_count(n) -> None:
    """Override the worker count for this process (``None`` restores the default)."""
    global _threads
    _threads = None if n is None else max(1, int(n))


def _family(law: Law) -> str:
    return {Law.GA: "ga", Law.GAJ: "gaj"}.get(law, "ljc")


def tile_kernel(law, plan: ExecutionPlan):
    """The generated unrolled kernel implementing ``plan`` for ``law``."""
    law = Law.parse(law)
    plan.validate_for(law)
    try:
        return KERNELS[(_family(law), plan.i_unroll, plan.j_unroll)]
    except KeyError:
        raise ConfigurationError(
            f"no {plan.label} kernel for {law.value}; lane width must be 4 or 8") from None


@dataclass(frozen=True)
class TileJob:
    i_range: tuple
    j_range: tuple
    output_slot: int


def replica_bounds(count: int, padded_count: int, replication: int, align: int) -> np.ndarray:
    """j-chunk boundaries for ``replication`` replicas.

    Chunks are lane-aligned and sized from the live count; the last one runs
    to ``padded_count``.  Adding extra inert padding therefore only lengthens
    the last chunk and never moves a live particle to another replica.
    """
    if replication > padded_count:
        raise ConfigurationError(
            f"replication {replication} exceeds the padded particle count {padded_count}")
    chunk = align * -(-count // (replication * align))
    b = np.minimum(np.arange(replication + 1, dtype=np.int64) * chunk, padded_count)
    b[-1] = padded_count
    return b


def tile_jobs(pset: ParticleSet, plan: ExecutionPlan) -> list:
    """The (replica, i-tile) decomposition a run of ``plan`` executes."""
    P = pset.padded_count
    bounds = replica_bounds(pset.count, P, plan.replication, plan.j_unroll)
    jobs = []
    for r in range(plan.replication):
        for i0 in range(0, P, plan.tile_i):
            jobs.append(TileJob((i0, min(i0 + plan.tile_i, P)), (int(bounds[r]), int(bounds[r + 1])),
                                r * P + i0))
    return jobs


def reduce_partials(partials) -> np.ndarray:
    """Sum replica buffers elementwise in ascending replica order."""
    parts = [np.asarray(p) for p in partials]
    if not parts:
        raise ValueError("no partial-force buffers to reduce")
    shape = parts[0].shape
    for k, p in enumerate(parts):
        if p.shape != shape:
            raise ValueError(f"partial {k} has shape {p.shape}, expected {shape}")
    out = parts[0].copy()
    for p in parts[1:]:
        out += p
    return out


def run_partials(pset: ParticleSet, spec: KernelSpec, plan: ExecutionPlan, *, counts=None):
    """Execute ``plan`` and return the unreduced ``(R, padded, 3)`` buffers."""
    plan.validate_for(spec.law)
    if pset.padded_count % plan.tile_width:
        pset = pset.padded(plan.tile_width)
    dt = plan.dtype
    P = pset.padded_count
    law = spec.law
    se, hs = lj_factors(pset)
    arrays = [np.ascontiguousarray(a, dtype=dt) for a in (
        pset.x, pset.y, pset.z, pset.vx, pset.vy, pset.vz, source_weights(pset, law),
        pset.charges, se, hs)]
    R = plan.replication
    # accumulators are float64 in every precision, see codegen
    acc = np.zeros((R, P, 3))
    jerk = np.zeros((R, P if law.has_jerk else 1, 3))
    instrument = counts is not None
    if counts is None:
        counts = np.zeros((1, 1), dtype=np.int64)
    elif counts.shape != (P, P):
        raise ValueError(f"counts buffer must be {P} x {P}")
    n_tiles = -(-P // plan.tile_i)
    err = np.full((R * n_tiles, 2), -1, dtype=np.int64)
    use_excl = (not law.is_gravity) and pset.has_exclusions
    kernel = tile_kernel(law, plan)
    mode = kernel_mode(spec)
    prm = kernel_params(spec, dt)
    jobs = tile_jobs(pset, plan)

    def work(k):
        job = jobs[k]
        r = job.output_slot // P
        kernel(job.i_range[0], job.i_range[1], job.j_range[0], job.j_range[1], mode, prm, *arrays,
               pset.excl_ptr, pset.excl_idx, use_excl, acc[r], jerk[r], counts, instrument, err[k])

    nworkers = min(worker_count(), len(jobs))
    if nworkers <= 1 or instrument:
        for k in range(len(jobs)):
            work(k)
    else:
        with ThreadPoolExecutor(max_workers=nworkers) as pool:
            list(pool.map(work, range(len(jobs))))
    bad = err[err[:, 0] >= 0]
    if bad.size:
        i, j = min(map(tuple, bad))
        raise SingularityError(i, j)
    return pset, acc, (jerk if law.has_jerk else None)


def execute(pset: ParticleSet, spec: KernelSpec, plan: ExecutionPlan, *, counts=None) -> ForceResult:
    """Run ``plan`` end to end: stream, reduce replicas, scale by G, strip padding."""
    pset, acc, jerk = run_partials(pset, spec, plan, counts=counts)
    n = pset.count
    a = reduce_partials(list(acc))
    a[n:] = 0
    j = None
    if jerk is not None:
        j = reduce_partials(list(jerk))
        j[n:] = 0
    if spec.law.is_gravity and spec.G != 1.0:
        a *= spec.G
        if j is not None:
            j *= spec.G
    a = a.astype(plan.dtype, copy=False)
    if j is not None:
        j = j.astype(plan.dtype, copy=False)
    sequential = plan.strategy is Strategy.UNROLL_1x1 and plan.replication == 1
    evaluations = pset.padded_count * (pset.padded_count - 1)
    if not spec.law.is_gravity:
        evaluations -= int(pset.excl_idx.size)
    return ForceResult(
        accelerations=a[:n].copy(),
        jerks=None if j is None else j[:n].copy(),
        plan_used=plan.describe(),
        summation_mode="deterministic-sequential" if sequential else "tiled",
        pair_evaluations=evaluations,
    )


def run_1x1(pset: ParticleSet, spec: KernelSpec, precision: str = "single") -> ForceResult:
    return execute(pset, spec, ExecutionPlan(Strategy.UNROLL_1x1, precision=precision))


def run_1x4(pset: ParticleSet, spec: KernelSpec, precision: str = "single") -> ForceResult:
    return execute(pset, spec, ExecutionPlan(Strategy.UNROLL_1x4, precision=precision))


def run_2x4(pset: ParticleSet, spec: KernelSpec, precision: str = "single") -> ForceResult:
    return execute(pset, spec, ExecutionPlan(Strategy.UNROLL_2x4, precision=precision))


def run_4x4(pset: ParticleSet, spec: KernelSpec, precision: str = "single") -> ForceResult:
    """Four i-particles per j-block; raises ConfigurationError for GAJ/LJC."""
    return execute(pset, spec, ExecutionPlan(Strategy.UNROLL_4x4, precision=precision))


def run_replicated(pset: ParticleSet, spec: KernelSpec, R: int, strategy=Strategy.UNROLL_1x1,
                   precision: str = "single") -> ForceResult:
    if R < 2:
        raise ConfigurationError(f"replicated runs need R >= 2, got {R}")
    return execute(pset, spec, ExecutionPlan(strategy, replication=R, precision=precision))


def run(pset: ParticleSet, spec: KernelSpec, plan: ExecutionPlan = ExecutionPlan()) -> ForceResult:
    return execute(pset, spec, plan)
