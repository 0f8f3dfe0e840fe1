"""Pairwise force laws.

Every law is reduced to two scalars per pair, ``(s, t)``, such that with
``d = r_j - r_i`` and ``dv = v_j - v_i`` the contribution of ``j`` to ``i``
is::

    accel = w_j * s * d
    jerk  = w_j * s * (dv - t * d)

where ``w_j`` is the source mass for the gravity laws and 1 for the LJC laws
(whose couplings already sit inside ``s``).  ``_interaction`` is the single
definition shared by the float32 streaming kernels, the float64 oracle and
the scalar helpers below, so the paths cannot drift apart.

Numeric constants are read from the parameter vector rather than written as
literals: a Python float literal would silently promote float32 arithmetic to
float64 inside numba.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .errors import SingularityError
from .model import KernelSpec, Law, ParticleSet

# parameter vector layout
P_SOFT = 0
P_INV_DIEL = 1
P_ALPHA = 2
P_BETA = 3
P_GAMMA = 4
P_DELTA = 5
P_ZERO = 6
P_ONE = 7
P_TWO = 8
P_THREE = 9
P_TWENTYFOUR = 10
N_PARAMS = 11

LAW_MASK = 7
MODE_LJ_PHYSICAL = 8
MODE_ZETA_GAMMA_R = 16


def kernel_mode(spec: KernelSpec) -> int:
    """Integer dispatch code: law in the low bits plus variant flags."""
    mode = spec.law.code
    if spec.lj_mode == "physical":
        mode |= MODE_LJ_PHYSICAL
    if spec.zeta_mode == "gamma-r":
        mode |= MODE_ZETA_GAMMA_R
    return mode


def kernel_params(spec: KernelSpec, dtype=np.float64) -> np.ndarray:
    prm = np.zeros(N_PARAMS, dtype=np.float64)
    alpha, beta, gamma, delta = spec.sigmoid_coeffs
    prm[P_SOFT] = spec.softening
    prm[P_INV_DIEL] = 1.0 / spec.dielectric
    prm[P_ALPHA] = alpha
    prm[P_BETA] = beta
    if spec.zeta_mode == "standard":
        # r-independent terms fold into one constant
        prm[P_GAMMA] = 0.0
        prm[P_DELTA] = gamma + delta
    else:
        prm[P_GAMMA] = gamma
        prm[P_DELTA] = delta
    prm[P_ONE] = 1.0
    prm[P_TWO] = 2.0
    prm[P_THREE] = 3.0
    prm[P_TWENTYFOUR] = 24.0
    return prm.astype(dtype)


def source_weights(pset: ParticleSet, law: Law) -> np.ndarray:
    """``w_j``: masses for gravity, ones for LJC (padding stays zero)."""
    if law.is_gravity:
        return np.asarray(pset.masses, dtype=np.float64)
    w = np.zeros(pset.padded_count)
    w[:pset.count] = 1.0
    return w


def lj_factors(pset: ParticleSet):
    """Per-particle sqrt(eps) and sigma/2, so combination is one mul / one add."""
    return np.sqrt(pset.lj_epsilon), 0.5 * np.asarray(pset.lj_sigma)


@njit(inline="always")
def _interaction(mode, prm, r2, dx, dy, dz, dvx, dvy, dvz, qi, qj, sei, sej, hsi, hsj):
    law = mode & LAW_MASK
    rinv = prm[P_ONE] / np.sqrt(r2)
    if law == 0:
        return rinv * rinv * rinv, prm[P_ZERO]
    rinv2 = rinv * rinv
    if law == 1:
        rv = dx * dvx + dy * dvy + dz * dvz
        return rinv2 * rinv, prm[P_THREE] * rv * rinv2
    eij = sei * sej
    sr = (hsi + hsj) * rinv
    sr2 = sr * sr
    sr6 = sr2 * sr2 * sr2
    sr12 = sr6 * sr6
    if mode & MODE_LJ_PHYSICAL:
        lj = prm[P_TWENTYFOUR] * eij * (sr6 - prm[P_TWO] * sr12) * rinv
    else:
        lj = eij * (sr6 - sr12)
    qq = qi * qj
    if law == 2:
        coul = qq * prm[P_INV_DIEL] * rinv2
    elif law == 3:
        coul = qq * rinv2 * rinv
    else:
        r = r2 * rinv
        if mode & MODE_ZETA_GAMMA_R:
            poly = ((prm[P_ALPHA] * r + prm[P_BETA]) * r + prm[P_GAMMA]) * r + prm[P_DELTA]
        else:
            poly = (prm[P_ALPHA] * r + prm[P_BETA]) * r2 + prm[P_DELTA]
        coul = qq * rinv2 * np.exp(-poly)
    return rinv * (coul + lj), prm[P_ZERO]


@njit(cache=True, nogil=True)
def _find_singular(i, j0, j1, x, y, z, soft, err):
    """Record the first zero-separation partner of ``i`` in ``[j0, j1)``."""
    for j in range(j0, j1):
        if j != i:
            dx = x[j] - x[i]
            dy = y[j] - y[i]
            dz = z[j] - z[i]
            if dx * dx + dy * dy + dz * dz + soft == 0:
                if err[0] < 0:
                    err[0] = i
                    err[1] = j
                return


@njit(cache=True, error_model="numpy")
def _pair_eval(mode, prm, ri, rj, vi, vj, qi, qj, sei, sej, hsi, hsj, wj):
    out = np.zeros(6, ri.dtype)
    dx = rj[0] - ri[0]
    dy = rj[1] - ri[1]
    dz = rj[2] - ri[2]
    r2 = dx * dx + dy * dy + dz * dz + prm[P_SOFT]
    if r2 == prm[P_ZERO]:
        out[0] = np.nan
        return out, False
    dvx = vj[0] - vi[0]
    dvy = vj[1] - vi[1]
    dvz = vj[2] - vi[2]
    s, t = _interaction(mode, prm, r2, dx, dy, dz, dvx, dvy, dvz, qi, qj, sei, sej, hsi, hsj)
    sw = wj * s
    out[0] = sw * dx
    out[1] = sw * dy
    out[2] = sw * dz
    out[3] = sw * (dvx - t * dx)
    out[4] = sw * (dvy - t * dy)
    out[5] = sw * (dvz - t * dz)
    return out, True


class PairForce(tuple):
    """``(accel_contrib, jerk_contrib)``; jerk is ``None`` except for GAJ."""

    def __new__(cls, accel_contrib, jerk_contrib=None):
        return super().__new__(cls, (accel_contrib, jerk_contrib))

    @property
    def accel_contrib(self) -> np.ndarray:
        return self[0]

    @property
    def jerk_contrib(self):
        return self[1]


def _vec(v, dtype):
    a = np.asarray(v, dtype=dtype).reshape(3)
    if not np.all(np.isfinite(a)):
        raise ValueError(f"non-finite vector {v!r}")
    return a


def _evaluate(spec, ri, rj, vi, vj, qi, qj, sei, sej, hsi, hsj, wj, dtype):
    c = np.dtype(dtype).type
    out, ok = _pair_eval(kernel_mode(spec), kernel_params(spec, dtype), _vec(ri, dtype), _vec(rj, dtype),
                         _vec(vi, dtype), _vec(vj, dtype), c(qi), c(qj), c(sei), c(sej), c(hsi), c(hsj), c(wj))
    if not ok:
        raise SingularityError()
    return out


def ga_pair(ri, rj, mj, spec: KernelSpec = KernelSpec(), dtype=np.float64) -> PairForce:
    """Acceleration of a particle at ``ri`` due to mass ``mj`` at ``rj``.

    ``G mj (rj - ri) / (|rj - ri|^2 + eps2)^(3/2)``, pointing towards ``rj``.
    """
    spec = KernelSpec(Law.GA, G=spec.G, eps2=spec.eps2)
    out = _evaluate(spec, ri, rj, (0, 0, 0), (0, 0, 0), 0, 0, 0, 0, 0, 0, mj, dtype)
    return PairForce(out[:3] * np.dtype(dtype).type(spec.G))


def gaj_pair(ri, rj, vi, vj, mj, spec: KernelSpec = KernelSpec(Law.GAJ), dtype=np.float64) -> PairForce:
    spec = KernelSpec(Law.GAJ, G=spec.G, eps2=spec.eps2)
    out = _evaluate(spec, ri, rj, vi, vj, 0, 0, 0, 0, 0, 0, mj, dtype)
    g = np.dtype(dtype).type(spec.G)
    return PairForce(out[:3] * g, out[3:] * g)


_VARIANTS = {"const": Law.LJC_CONST, "constant": Law.LJC_CONST, "linear": Law.LJC_LINEAR,
             "sigmoidal": Law.LJC_SIGMOIDAL}


def ljc_pair(ri, rj, qi, qj, eps_ij, sigma_ij, spec: KernelSpec = KernelSpec(Law.LJC_CONST),
             variant=None, dtype=np.float64) -> PairForce:
    """Lennard-Jones + screened Coulomb force on ``i`` from ``j``.

    ``eps_ij``/``sigma_ij`` are already-combined pair parameters.  ``variant``
    ("const", "linear", "sigmoidal") overrides the law in ``spec``.
    """
    law = spec.law if variant is None else _VARIANTS[variant]
    if law.is_gravity:
        raise ValueError(f"ljc_pair needs an LJC law, got {law.value}")
    spec = KernelSpec(law, dielectric=spec.dielectric, sigmoid_coeffs=spec.sigmoid_coeffs,
                      lj_mode=spec.lj_mode, zeta_mode=spec.zeta_mode)
    # eps_ij * 1 and sigma_ij + 0 reproduce the combined values exactly
    out = _evaluate(spec, ri, rj, (0, 0, 0), (0, 0, 0), qi, qj, eps_ij, 1.0, sigma_ij, 0.0, 1.0, dtype)
    return PairForce(out[:3])


def zeta(r, spec: KernelSpec) -> float:
    """Sigmoidal screening function evaluated at separation ``r``."""
    alpha, beta, gamma, delta = spec.sigmoid_coeffs
    if spec.zeta_mode == "gamma-r":
        return float(np.exp(alpha * r**3 + beta * r**2 + gamma * r + delta))
    return float(np.exp(alpha * r**3 + beta * r**2 + gamma + delta))


def pair_is_excluded(i: int, j: int, pset: ParticleSet, law=None) -> bool:
    """True for self pairs and, under LJC laws, listed exclusions.

    Padding indices are not excluded: they are inert by construction.
    Gravity laws ignore exclusion lists.
    """
    if not (0 <= i < pset.padded_count and 0 <= j < pset.padded_count):
        raise IndexError(f"pair ({i}, {j}) outside [0, {pset.padded_count})")
    if i == j:
        return True
    if law is not None and Law.parse(law).is_gravity:
        return False
    lo, hi = pset.excl_ptr[i], pset.excl_ptr[i + 1]
    k = lo + np.searchsorted(pset.excl_idx[lo:hi], j)
    return bool(k < hi and pset.excl_idx[k] == j)
