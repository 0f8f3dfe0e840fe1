"""Double-precision reference forces with Newton's-third-law halving.

Each unordered live pair is evaluated once, in i-major order, and applied
with opposite signs to both particles.  This is the ground truth every
streaming plan is checked against; it is single-threaded on purpose.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np
from numba import njit

from .errors import SingularityError
from .kernels import P_SOFT, _interaction, kernel_mode, kernel_params, lj_factors, source_weights
from .model import ForceResult, KernelSpec, Law, ParticleSet

ETA = 1e-30
FIXTURE_VERSION = 1


@dataclass(frozen=True, eq=False)
class OracleResult:
    accelerations: np.ndarray
    jerks: Optional[np.ndarray]
    pair_count: int


@njit(cache=True, error_model="numpy")
def _third_law(mode, prm, n, x, y, z, vx, vy, vz, w, q, se, hs, eptr, eidx, use_excl, acc, jrk):
    soft = prm[P_SOFT]
    pairs = 0
    for i in range(n):
        p = eptr[i]
        e = eptr[i + 1]
        for j in range(i + 1, n):
            if use_excl:
                while p < e and eidx[p] < j:
                    p += 1
                if p < e and eidx[p] == j:
                    continue
            dx = x[j] - x[i]
            dy = y[j] - y[i]
            dz = z[j] - z[i]
            r2 = dx * dx + dy * dy + dz * dz + soft
            if r2 == 0.0:
                return i, j, pairs
            dvx = vx[j] - vx[i]
            dvy = vy[j] - vy[i]
            dvz = vz[j] - vz[i]
            s, t = _interaction(mode, prm, r2, dx, dy, dz, dvx, dvy, dvz, q[i], q[j], se[i], se[j], hs[i], hs[j])
            pairs += 1
            si = w[j] * s
            sj = w[i] * s
            acc[i, 0] += si * dx
            acc[i, 1] += si * dy
            acc[i, 2] += si * dz
            acc[j, 0] -= sj * dx
            acc[j, 1] -= sj * dy
            acc[j, 2] -= sj * dz
            ux = dvx - t * dx
            uy = dvy - t * dy
            uz = dvz - t * dz
            jrk[i, 0] += si * ux
            jrk[i, 1] += si * uy
            jrk[i, 2] += si * uz
            jrk[j, 0] -= sj * ux
            jrk[j, 1] -= sj * uy
            jrk[j, 2] -= sj * uz
    return -1, -1, pairs


def oracle_compute(pset: ParticleSet, spec: KernelSpec) -> OracleResult:
    law = spec.law
    n = pset.count
    se, hs = lj_factors(pset)
    acc = np.zeros((n, 3))
    jrk = np.zeros((n, 3))
    use_excl = (not law.is_gravity) and pset.has_exclusions
    arrays = [np.ascontiguousarray(a, dtype=np.float64) for a in (
        pset.x, pset.y, pset.z, pset.vx, pset.vy, pset.vz, source_weights(pset, law), pset.charges, se, hs)]
    i, j, pairs = _third_law(kernel_mode(spec), kernel_params(spec, np.float64), n, *arrays,
                             pset.excl_ptr, pset.excl_idx, use_excl, acc, jrk)
    if i >= 0:
        raise SingularityError(i, j)
    if law.is_gravity:
        acc *= spec.G
        jrk *= spec.G
    return OracleResult(acc, jrk if law.has_jerk else None, int(pairs))


@dataclass(frozen=True)
class Comparison:
    errors: np.ndarray
    max_error: float
    mean_error: float
    worst_index: int
    tol: float
    passed: bool
    jerk_errors: Optional[np.ndarray] = None

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} max rel err {self.max_error:.3e} (particle {self.worst_index}), "
                f"mean {self.mean_error:.3e}, tol {self.tol:.1e}")


def relative_errors(values, reference, eta: float = ETA) -> np.ndarray:
    """Per-particle ``|v - ref| / (|ref| + eta)`` with Euclidean norms."""
    v = np.asarray(values, dtype=np.float64)
    ref = np.asarray(reference, dtype=np.float64)
    if v.shape != ref.shape:
        raise ValueError(f"shape mismatch: {v.shape} vs {ref.shape}")
    return np.linalg.norm(v - ref, axis=1) / (np.linalg.norm(ref, axis=1) + eta)


def compare(result: ForceResult, reference: OracleResult, tol: float, *, include_jerk: bool = True) -> Comparison:
    """Per-particle relative error report of ``result`` against ``reference``."""
    errors = relative_errors(result.accelerations, reference.accelerations)
    jerk_errors = None
    if (result.jerks is None) != (reference.jerks is None):
        raise ValueError("result and reference disagree on jerk output")
    if include_jerk and result.jerks is not None:
        jerk_errors = relative_errors(result.jerks, reference.jerks)
        combined = np.maximum(errors, jerk_errors)
    else:
        combined = errors
    if combined.size == 0:
        return Comparison(combined, 0.0, 0.0, -1, tol, True, jerk_errors)
    worst = int(np.argmax(combined))
    max_error = float(combined[worst])
    return Comparison(combined, max_error, float(np.mean(combined)), worst, tol,
                      bool(max_error <= tol), jerk_errors)


def fixture_key(law, n: int, seed: int) -> str:
    return f"{Law.parse(law).value}-N{n}-seed{seed}"


def dump_fixture(path, result: OracleResult, law, n: int, seed: int, spec: Optional[KernelSpec] = None) -> None:
    """Write an oracle result as a versioned JSON golden fixture."""
    payload = {
        "version": FIXTURE_VERSION,
        "key": fixture_key(law, n, seed),
        "law": Law.parse(law).value,
        "N": n,
        "seed": seed,
        "pair_count": result.pair_count,
        "accelerations": result.accelerations.tolist(),
        "jerks": None if result.jerks is None else result.jerks.tolist(),
    }
    if spec is not None:
        payload["spec"] = {"G": spec.G, "eps2": spec.eps2, "dielectric": spec.dielectric,
                           "sigmoid_coeffs": list(spec.sigmoid_coeffs), "lj_mode": spec.lj_mode,
                           "zeta_mode": spec.zeta_mode}
    Path(path).write_text(json.dumps(payload, indent=1) + "\n")


def load_fixture(path) -> tuple:
    """Return ``(metadata, OracleResult)`` from a golden fixture file."""
    payload = json.loads(Path(path).read_text())
    if payload.get("version") != FIXTURE_VERSION:
        raise ValueError(f"unsupported fixture version {payload.get('version')!r}")
    jerks = payload["jerks"]
    result = OracleResult(np.array(payload["accelerations"], dtype=np.float64),
                          None if jerks is None else np.array(jerks, dtype=np.float64),
                          int(payload["pair_count"]))
    meta = {k: v for k, v in payload.items() if k not in ("accelerations", "jerks")}
    return meta, result
