"""Unrolled tile kernels.  GENERATED by pforge.codegen, do not edit."""

import numpy as np
from numba import njit

from .kernels import P_ONE, P_SOFT, P_ZERO, _find_singular, _interaction

@njit(cache=True, nogil=True, error_model="numpy", boundscheck=False)
def tile_ga_1x1(i0, i1, j0, j1, mode, prm, x, y, z, vx, vy, vz, w, q, se, hs, eptr, eidx,
        use_excl, acc_out, jerk_out, counts, instrument, err):
    zero = prm[P_ZERO]
    soft = prm[P_SOFT]
    one = prm[P_ONE]
    azero = np.float64(0.0)
    for ib in range(i0, i1, 1):
        ip0 = ib + 0
        xi0 = x[ip0]; yi0 = y[ip0]; zi0 = z[ip0]
        ax0_0 = ay0_0 = az0_0 = azero
        for jb in range(j0, j1, 128):
            bx0_0 = by0_0 = bz0_0 = zero
            for j in range(jb, min(jb + 128, j1), 1):
                xj0 = x[j + 0]; yj0 = y[j + 0]; zj0 = z[j + 0]
                wj0 = w[j + 0]
                jj = j + 0
                live = jj != ip0
                dx = xj0 - xi0; dy = yj0 - yi0; dz = zj0 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj0 * s if live else zero
                bx0_0 += sw * dx
                by0_0 += sw * dy
                bz0_0 += sw * dz
            ax0_0 += bx0_0
            ay0_0 += by0_0
            az0_0 += bz0_0
        if not abs(ax0_0 + ay0_0 + az0_0) < np.inf:
            _find_singular(ip0, j0, j1, x, y, z, soft, err)
        acc_out[ip0, 0] = ax0_0
        acc_out[ip0, 1] = ay0_0
        acc_out[ip0, 2] = az0_0


@njit(cache=True, nogil=True, error_model="numpy", boundscheck=False)
def tile_ga_1x4(i0, i1, j0, j1, mode, prm, x, y, z, vx, vy, vz, w, q, se, hs, eptr, eidx,
        use_excl, acc_out, jerk_out, counts, instrument, err):
    zero = prm[P_ZERO]
    soft = prm[P_SOFT]
    one = prm[P_ONE]
    azero = np.float64(0.0)
    for ib in range(i0, i1, 1):
        ip0 = ib + 0
        xi0 = x[ip0]; yi0 = y[ip0]; zi0 = z[ip0]
        ax0_0 = ay0_0 = az0_0 = azero
        ax0_1 = ay0_1 = az0_1 = azero
        ax0_2 = ay0_2 = az0_2 = azero
        ax0_3 = ay0_3 = az0_3 = azero
        for jb in range(j0, j1, 128):
            bx0_0 = by0_0 = bz0_0 = zero
            bx0_1 = by0_1 = bz0_1 = zero
            bx0_2 = by0_2 = bz0_2 = zero
            bx0_3 = by0_3 = bz0_3 = zero
            for j in range(jb, min(jb + 128, j1), 4):
                xj0 = x[j + 0]; yj0 = y[j + 0]; zj0 = z[j + 0]
                wj0 = w[j + 0]
                xj1 = x[j + 1]; yj1 = y[j + 1]; zj1 = z[j + 1]
                wj1 = w[j + 1]
                xj2 = x[j + 2]; yj2 = y[j + 2]; zj2 = z[j + 2]
                wj2 = w[j + 2]
                xj3 = x[j + 3]; yj3 = y[j + 3]; zj3 = z[j + 3]
                wj3 = w[j + 3]
                jj = j + 0
                live = jj != ip0
                dx = xj0 - xi0; dy = yj0 - yi0; dz = zj0 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj0 * s if live else zero
                bx0_0 += sw * dx
                by0_0 += sw * dy
                bz0_0 += sw * dz
                jj = j + 1
                live = jj != ip0
                dx = xj1 - xi0; dy = yj1 - yi0; dz = zj1 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj1 * s if live else zero
                bx0_1 += sw * dx
                by0_1 += sw * dy
                bz0_1 += sw * dz
                jj = j + 2
                live = jj != ip0
                dx = xj2 - xi0; dy = yj2 - yi0; dz = zj2 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj2 * s if live else zero
                bx0_2 += sw * dx
                by0_2 += sw * dy
                bz0_2 += sw * dz
                jj = j + 3
                live = jj != ip0
                dx = xj3 - xi0; dy = yj3 - yi0; dz = zj3 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj3 * s if live else zero
                bx0_3 += sw * dx
                by0_3 += sw * dy
                bz0_3 += sw * dz
            ax0_0 += bx0_0
            ay0_0 += by0_0
            az0_0 += bz0_0
            ax0_1 += bx0_1
            ay0_1 += by0_1
            az0_1 += bz0_1
            ax0_2 += bx0_2
            ay0_2 += by0_2
            az0_2 += bz0_2
            ax0_3 += bx0_3
            ay0_3 += by0_3
            az0_3 += bz0_3
        if not abs(ax0_0 + ay0_0 + az0_0 + ax0_1 + ay0_1 + az0_1 + ax0_2 + ay0_2 + az0_2 + ax0_3 + ay0_3 + az0_3) < np.inf:
            _find_singular(ip0, j0, j1, x, y, z, soft, err)
        acc_out[ip0, 0] = ((ax0_0 + ax0_1) + ax0_2) + ax0_3
        acc_out[ip0, 1] = ((ay0_0 + ay0_1) + ay0_2) + ay0_3
        acc_out[ip0, 2] = ((az0_0 + az0_1) + az0_2) + az0_3


@njit(cache=True, nogil=True, error_model="numpy", boundscheck=False)
def tile_ga_1x8(i0, i1, j0, j1, mode, prm, x, y, z, vx, vy, vz, w, q, se, hs, eptr, eidx,
        use_excl, acc_out, jerk_out, counts, instrument, err):
    zero = prm[P_ZERO]
    soft = prm[P_SOFT]
    one = prm[P_ONE]
    azero = np.float64(0.0)
    for ib in range(i0, i1, 1):
        ip0 = ib + 0
        xi0 = x[ip0]; yi0 = y[ip0]; zi0 = z[ip0]
        ax0_0 = ay0_0 = az0_0 = azero
        ax0_1 = ay0_1 = az0_1 = azero
        ax0_2 = ay0_2 = az0_2 = azero
        ax0_3 = ay0_3 = az0_3 = azero
        ax0_4 = ay0_4 = az0_4 = azero
        ax0_5 = ay0_5 = az0_5 = azero
        ax0_6 = ay0_6 = az0_6 = azero
        ax0_7 = ay0_7 = az0_7 = azero
        for jb in range(j0, j1, 128):
            bx0_0 = by0_0 = bz0_0 = zero
            bx0_1 = by0_1 = bz0_1 = zero
            bx0_2 = by0_2 = bz0_2 = zero
            bx0_3 = by0_3 = bz0_3 = zero
            bx0_4 = by0_4 = bz0_4 = zero
            bx0_5 = by0_5 = bz0_5 = zero
            bx0_6 = by0_6 = bz0_6 = zero
            bx0_7 = by0_7 = bz0_7 = zero
            for j in range(jb, min(jb + 128, j1), 8):
                xj0 = x[j + 0]; yj0 = y[j + 0]; zj0 = z[j + 0]
                wj0 = w[j + 0]
                xj1 = x[j + 1]; yj1 = y[j + 1]; zj1 = z[j + 1]
                wj1 = w[j + 1]
                xj2 = x[j + 2]; yj2 = y[j + 2]; zj2 = z[j + 2]
                wj2 = w[j + 2]
                xj3 = x[j + 3]; yj3 = y[j + 3]; zj3 = z[j + 3]
                wj3 = w[j + 3]
                xj4 = x[j + 4]; yj4 = y[j + 4]; zj4 = z[j + 4]
                wj4 = w[j + 4]
                xj5 = x[j + 5]; yj5 = y[j + 5]; zj5 = z[j + 5]
                wj5 = w[j + 5]
                xj6 = x[j + 6]; yj6 = y[j + 6]; zj6 = z[j + 6]
                wj6 = w[j + 6]
                xj7 = x[j + 7]; yj7 = y[j + 7]; zj7 = z[j + 7]
                wj7 = w[j + 7]
                jj = j + 0
                live = jj != ip0
                dx = xj0 - xi0; dy = yj0 - yi0; dz = zj0 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj0 * s if live else zero
                bx0_0 += sw * dx
                by0_0 += sw * dy
                bz0_0 += sw * dz
                jj = j + 1
                live = jj != ip0
                dx = xj1 - xi0; dy = yj1 - yi0; dz = zj1 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj1 * s if live else zero
                bx0_1 += sw * dx
                by0_1 += sw * dy
                bz0_1 += sw * dz
                jj = j + 2
                live = jj != ip0
                dx = xj2 - xi0; dy = yj2 - yi0; dz = zj2 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj2 * s if live else zero
                bx0_2 += sw * dx
                by0_2 += sw * dy
                bz0_2 += sw * dz
                jj = j + 3
                live = jj != ip0
                dx = xj3 - xi0; dy = yj3 - yi0; dz = zj3 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj3 * s if live else zero
                bx0_3 += sw * dx
                by0_3 += sw * dy
                bz0_3 += sw * dz
                jj = j + 4
                live = jj != ip0
                dx = xj4 - xi0; dy = yj4 - yi0; dz = zj4 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj4 * s if live else zero
                bx0_4 += sw * dx
                by0_4 += sw * dy
                bz0_4 += sw * dz
                jj = j + 5
                live = jj != ip0
                dx = xj5 - xi0; dy = yj5 - yi0; dz = zj5 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj5 * s if live else zero
                bx0_5 += sw * dx
                by0_5 += sw * dy
                bz0_5 += sw * dz
                jj = j + 6
                live = jj != ip0
                dx = xj6 - xi0; dy = yj6 - yi0; dz = zj6 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj6 * s if live else zero
                bx0_6 += sw * dx
                by0_6 += sw * dy
                bz0_6 += sw * dz
                jj = j + 7
                live = jj != ip0
                dx = xj7 - xi0; dy = yj7 - yi0; dz = zj7 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj7 * s if live else zero
                bx0_7 += sw * dx
                by0_7 += sw * dy
                bz0_7 += sw * dz
            ax0_0 += bx0_0
            ay0_0 += by0_0
            az0_0 += bz0_0
            ax0_1 += bx0_1
            ay0_1 += by0_1
            az0_1 += bz0_1
            ax0_2 += bx0_2
            ay0_2 += by0_2
            az0_2 += bz0_2
            ax0_3 += bx0_3
            ay0_3 += by0_3
            az0_3 += bz0_3
            ax0_4 += bx0_4
            ay0_4 += by0_4
            az0_4 += bz0_4
            ax0_5 += bx0_5
            ay0_5 += by0_5
            az0_5 += bz0_5
            ax0_6 += bx0_6
            ay0_6 += by0_6
            az0_6 += bz0_6
            ax0_7 += bx0_7
            ay0_7 += by0_7
            az0_7 += bz0_7
        if not abs(ax0_0 + ay0_0 + az0_0 + ax0_1 + ay0_1 + az0_1 + ax0_2 + ay0_2 + az0_2 + ax0_3 + ay0_3 + az0_3 + ax0_4 + ay0_4 + az0_4 + ax0_5 + ay0_5 + az0_5 + ax0_6 + ay0_6 + az0_6 + ax0_7 + ay0_7 + az0_7) < np.inf:
            _find_singular(ip0, j0, j1, x, y, z, soft, err)
        acc_out[ip0, 0] = ((((((ax0_0 + ax0_1) + ax0_2) + ax0_3) + ax0_4) + ax0_5) + ax0_6) + ax0_7
        acc_out[ip0, 1] = ((((((ay0_0 + ay0_1) + ay0_2) + ay0_3) + ay0_4) + ay0_5) + ay0_6) + ay0_7
        acc_out[ip0, 2] = ((((((az0_0 + az0_1) + az0_2) + az0_3) + az0_4) + az0_5) + az0_6) + az0_7


@njit(cache=True, nogil=True, error_model="numpy", boundscheck=False)
def tile_ga_2x4(i0, i1, j0, j1, mode, prm, x, y, z, vx, vy, vz, w, q, se, hs, eptr, eidx,
        use_excl, acc_out, jerk_out, counts, instrument, err):
    zero = prm[P_ZERO]
    soft = prm[P_SOFT]
    one = prm[P_ONE]
    azero = np.float64(0.0)
    for ib in range(i0, i1, 2):
        ip0 = ib + 0
        xi0 = x[ip0]; yi0 = y[ip0]; zi0 = z[ip0]
        ax0_0 = ay0_0 = az0_0 = azero
        ax0_1 = ay0_1 = az0_1 = azero
        ax0_2 = ay0_2 = az0_2 = azero
        ax0_3 = ay0_3 = az0_3 = azero
        ip1 = ib + 1
        xi1 = x[ip1]; yi1 = y[ip1]; zi1 = z[ip1]
        ax1_0 = ay1_0 = az1_0 = azero
        ax1_1 = ay1_1 = az1_1 = azero
        ax1_2 = ay1_2 = az1_2 = azero
        ax1_3 = ay1_3 = az1_3 = azero
        for jb in range(j0, j1, 128):
            bx0_0 = by0_0 = bz0_0 = zero
            bx0_1 = by0_1 = bz0_1 = zero
            bx0_2 = by0_2 = bz0_2 = zero
            bx0_3 = by0_3 = bz0_3 = zero
            bx1_0 = by1_0 = bz1_0 = zero
            bx1_1 = by1_1 = bz1_1 = zero
            bx1_2 = by1_2 = bz1_2 = zero
            bx1_3 = by1_3 = bz1_3 = zero
            for j in range(jb, min(jb + 128, j1), 4):
                xj0 = x[j + 0]; yj0 = y[j + 0]; zj0 = z[j + 0]
                wj0 = w[j + 0]
                xj1 = x[j + 1]; yj1 = y[j + 1]; zj1 = z[j + 1]
                wj1 = w[j + 1]
                xj2 = x[j + 2]; yj2 = y[j + 2]; zj2 = z[j + 2]
                wj2 = w[j + 2]
                xj3 = x[j + 3]; yj3 = y[j + 3]; zj3 = z[j + 3]
                wj3 = w[j + 3]
                jj = j + 0
                live = jj != ip0
                dx = xj0 - xi0; dy = yj0 - yi0; dz = zj0 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj0 * s if live else zero
                bx0_0 += sw * dx
                by0_0 += sw * dy
                bz0_0 += sw * dz
                jj = j + 1
                live = jj != ip0
                dx = xj1 - xi0; dy = yj1 - yi0; dz = zj1 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj1 * s if live else zero
                bx0_1 += sw * dx
                by0_1 += sw * dy
                bz0_1 += sw * dz
                jj = j + 2
                live = jj != ip0
                dx = xj2 - xi0; dy = yj2 - yi0; dz = zj2 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj2 * s if live else zero
                bx0_2 += sw * dx
                by0_2 += sw * dy
                bz0_2 += sw * dz
                jj = j + 3
                live = jj != ip0
                dx = xj3 - xi0; dy = yj3 - yi0; dz = zj3 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj3 * s if live else zero
                bx0_3 += sw * dx
                by0_3 += sw * dy
                bz0_3 += sw * dz
                jj = j + 0
                live = jj != ip1
                dx = xj0 - xi1; dy = yj0 - yi1; dz = zj0 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj0 * s if live else zero
                bx1_0 += sw * dx
                by1_0 += sw * dy
                bz1_0 += sw * dz
                jj = j + 1
                live = jj != ip1
                dx = xj1 - xi1; dy = yj1 - yi1; dz = zj1 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj1 * s if live else zero
                bx1_1 += sw * dx
                by1_1 += sw * dy
                bz1_1 += sw * dz
                jj = j + 2
                live = jj != ip1
                dx = xj2 - xi1; dy = yj2 - yi1; dz = zj2 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj2 * s if live else zero
                bx1_2 += sw * dx
                by1_2 += sw * dy
                bz1_2 += sw * dz
                jj = j + 3
                live = jj != ip1
                dx = xj3 - xi1; dy = yj3 - yi1; dz = zj3 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj3 * s if live else zero
                bx1_3 += sw * dx
                by1_3 += sw * dy
                bz1_3 += sw * dz
            ax0_0 += bx0_0
            ay0_0 += by0_0
            az0_0 += bz0_0
            ax0_1 += bx0_1
            ay0_1 += by0_1
            az0_1 += bz0_1
            ax0_2 += bx0_2
            ay0_2 += by0_2
            az0_2 += bz0_2
            ax0_3 += bx0_3
            ay0_3 += by0_3
            az0_3 += bz0_3
            ax1_0 += bx1_0
            ay1_0 += by1_0
            az1_0 += bz1_0
            ax1_1 += bx1_1
            ay1_1 += by1_1
            az1_1 += bz1_1
            ax1_2 += bx1_2
            ay1_2 += by1_2
            az1_2 += bz1_2
            ax1_3 += bx1_3
            ay1_3 += by1_3
            az1_3 += bz1_3
        if not abs(ax0_0 + ay0_0 + az0_0 + ax0_1 + ay0_1 + az0_1 + ax0_2 + ay0_2 + az0_2 + ax0_3 + ay0_3 + az0_3) < np.inf:
            _find_singular(ip0, j0, j1, x, y, z, soft, err)
        if not abs(ax1_0 + ay1_0 + az1_0 + ax1_1 + ay1_1 + az1_1 + ax1_2 + ay1_2 + az1_2 + ax1_3 + ay1_3 + az1_3) < np.inf:
            _find_singular(ip1, j0, j1, x, y, z, soft, err)
        acc_out[ip0, 0] = ((ax0_0 + ax0_1) + ax0_2) + ax0_3
        acc_out[ip0, 1] = ((ay0_0 + ay0_1) + ay0_2) + ay0_3
        acc_out[ip0, 2] = ((az0_0 + az0_1) + az0_2) + az0_3
        acc_out[ip1, 0] = ((ax1_0 + ax1_1) + ax1_2) + ax1_3
        acc_out[ip1, 1] = ((ay1_0 + ay1_1) + ay1_2) + ay1_3
        acc_out[ip1, 2] = ((az1_0 + az1_1) + az1_2) + az1_3


@njit(cache=True, nogil=True, error_model="numpy", boundscheck=False)
def tile_ga_2x8(i0, i1, j0, j1, mode, prm, x, y, z, vx, vy, vz, w, q, se, hs, eptr, eidx,
        use_excl, acc_out, jerk_out, counts, instrument, err):
    zero = prm[P_ZERO]
    soft = prm[P_SOFT]
    one = prm[P_ONE]
    azero = np.float64(0.0)
    for ib in range(i0, i1, 2):
        ip0 = ib + 0
        xi0 = x[ip0]; yi0 = y[ip0]; zi0 = z[ip0]
        ax0_0 = ay0_0 = az0_0 = azero
        ax0_1 = ay0_1 = az0_1 = azero
        ax0_2 = ay0_2 = az0_2 = azero
        ax0_3 = ay0_3 = az0_3 = azero
        ax0_4 = ay0_4 = az0_4 = azero
        ax0_5 = ay0_5 = az0_5 = azero
        ax0_6 = ay0_6 = az0_6 = azero
        ax0_7 = ay0_7 = az0_7 = azero
        ip1 = ib + 1
        xi1 = x[ip1]; yi1 = y[ip1]; zi1 = z[ip1]
        ax1_0 = ay1_0 = az1_0 = azero
        ax1_1 = ay1_1 = az1_1 = azero
        ax1_2 = ay1_2 = az1_2 = azero
        ax1_3 = ay1_3 = az1_3 = azero
        ax1_4 = ay1_4 = az1_4 = azero
        ax1_5 = ay1_5 = az1_5 = azero
        ax1_6 = ay1_6 = az1_6 = azero
        ax1_7 = ay1_7 = az1_7 = azero
        for jb in range(j0, j1, 128):
            bx0_0 = by0_0 = bz0_0 = zero
            bx0_1 = by0_1 = bz0_1 = zero
            bx0_2 = by0_2 = bz0_2 = zero
            bx0_3 = by0_3 = bz0_3 = zero
            bx0_4 = by0_4 = bz0_4 = zero
            bx0_5 = by0_5 = bz0_5 = zero
            bx0_6 = by0_6 = bz0_6 = zero
            bx0_7 = by0_7 = bz0_7 = zero
            bx1_0 = by1_0 = bz1_0 = zero
            bx1_1 = by1_1 = bz1_1 = zero
            bx1_2 = by1_2 = bz1_2 = zero
            bx1_3 = by1_3 = bz1_3 = zero
            bx1_4 = by1_4 = bz1_4 = zero
            bx1_5 = by1_5 = bz1_5 = zero
            bx1_6 = by1_6 = bz1_6 = zero
            bx1_7 = by1_7 = bz1_7 = zero
            for j in range(jb, min(jb + 128, j1), 8):
                xj0 = x[j + 0]; yj0 = y[j + 0]; zj0 = z[j + 0]
                wj0 = w[j + 0]
                xj1 = x[j + 1]; yj1 = y[j + 1]; zj1 = z[j + 1]
                wj1 = w[j + 1]
                xj2 = x[j + 2]; yj2 = y[j + 2]; zj2 = z[j + 2]
                wj2 = w[j + 2]
                xj3 = x[j + 3]; yj3 = y[j + 3]; zj3 = z[j + 3]
                wj3 = w[j + 3]
                xj4 = x[j + 4]; yj4 = y[j + 4]; zj4 = z[j + 4]
                wj4 = w[j + 4]
                xj5 = x[j + 5]; yj5 = y[j + 5]; zj5 = z[j + 5]
                wj5 = w[j + 5]
                xj6 = x[j + 6]; yj6 = y[j + 6]; zj6 = z[j + 6]
                wj6 = w[j + 6]
                xj7 = x[j + 7]; yj7 = y[j + 7]; zj7 = z[j + 7]
                wj7 = w[j + 7]
                jj = j + 0
                live = jj != ip0
                dx = xj0 - xi0; dy = yj0 - yi0; dz = zj0 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj0 * s if live else zero
                bx0_0 += sw * dx
                by0_0 += sw * dy
                bz0_0 += sw * dz
                jj = j + 1
                live = jj != ip0
                dx = xj1 - xi0; dy = yj1 - yi0; dz = zj1 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj1 * s if live else zero
                bx0_1 += sw * dx
                by0_1 += sw * dy
                bz0_1 += sw * dz
                jj = j + 2
                live = jj != ip0
                dx = xj2 - xi0; dy = yj2 - yi0; dz = zj2 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj2 * s if live else zero
                bx0_2 += sw * dx
                by0_2 += sw * dy
                bz0_2 += sw * dz
                jj = j + 3
                live = jj != ip0
                dx = xj3 - xi0; dy = yj3 - yi0; dz = zj3 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj3 * s if live else zero
                bx0_3 += sw * dx
                by0_3 += sw * dy
                bz0_3 += sw * dz
                jj = j + 4
                live = jj != ip0
                dx = xj4 - xi0; dy = yj4 - yi0; dz = zj4 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj4 * s if live else zero
                bx0_4 += sw * dx
                by0_4 += sw * dy
                bz0_4 += sw * dz
                jj = j + 5
                live = jj != ip0
                dx = xj5 - xi0; dy = yj5 - yi0; dz = zj5 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj5 * s if live else zero
                bx0_5 += sw * dx
                by0_5 += sw * dy
                bz0_5 += sw * dz
                jj = j + 6
                live = jj != ip0
                dx = xj6 - xi0; dy = yj6 - yi0; dz = zj6 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj6 * s if live else zero
                bx0_6 += sw * dx
                by0_6 += sw * dy
                bz0_6 += sw * dz
                jj = j + 7
                live = jj != ip0
                dx = xj7 - xi0; dy = yj7 - yi0; dz = zj7 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj7 * s if live else zero
                bx0_7 += sw * dx
                by0_7 += sw * dy
                bz0_7 += sw * dz
                jj = j + 0
                live = jj != ip1
                dx = xj0 - xi1; dy = yj0 - yi1; dz = zj0 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj0 * s if live else zero
                bx1_0 += sw * dx
                by1_0 += sw * dy
                bz1_0 += sw * dz
                jj = j + 1
                live = jj != ip1
                dx = xj1 - xi1; dy = yj1 - yi1; dz = zj1 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj1 * s if live else zero
                bx1_1 += sw * dx
                by1_1 += sw * dy
                bz1_1 += sw * dz
                jj = j + 2
                live = jj != ip1
                dx = xj2 - xi1; dy = yj2 - yi1; dz = zj2 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj2 * s if live else zero
                bx1_2 += sw * dx
                by1_2 += sw * dy
                bz1_2 += sw * dz
                jj = j + 3
                live = jj != ip1
                dx = xj3 - xi1; dy = yj3 - yi1; dz = zj3 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj3 * s if live else zero
                bx1_3 += sw * dx
                by1_3 += sw * dy
                bz1_3 += sw * dz
                jj = j + 4
                live = jj != ip1
                dx = xj4 - xi1; dy = yj4 - yi1; dz = zj4 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj4 * s if live else zero
                bx1_4 += sw * dx
                by1_4 += sw * dy
                bz1_4 += sw * dz
                jj = j + 5
                live = jj != ip1
                dx = xj5 - xi1; dy = yj5 - yi1; dz = zj5 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj5 * s if live else zero
                bx1_5 += sw * dx
                by1_5 += sw * dy
                bz1_5 += sw * dz
                jj = j + 6
                live = jj != ip1
                dx = xj6 - xi1; dy = yj6 - yi1; dz = zj6 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj6 * s if live else zero
                bx1_6 += sw * dx
                by1_6 += sw * dy
                bz1_6 += sw * dz
                jj = j + 7
                live = jj != ip1
                dx = xj7 - xi1; dy = yj7 - yi1; dz = zj7 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj7 * s if live else zero
                bx1_7 += sw * dx
                by1_7 += sw * dy
                bz1_7 += sw * dz
            ax0_0 += bx0_0
            ay0_0 += by0_0
            az0_0 += bz0_0
            ax0_1 += bx0_1
            ay0_1 += by0_1
            az0_1 += bz0_1
            ax0_2 += bx0_2
            ay0_2 += by0_2
            az0_2 += bz0_2
            ax0_3 += bx0_3
            ay0_3 += by0_3
            az0_3 += bz0_3
            ax0_4 += bx0_4
            ay0_4 += by0_4
            az0_4 += bz0_4
            ax0_5 += bx0_5
            ay0_5 += by0_5
            az0_5 += bz0_5
            ax0_6 += bx0_6
            ay0_6 += by0_6
            az0_6 += bz0_6
            ax0_7 += bx0_7
            ay0_7 += by0_7
            az0_7 += bz0_7
            ax1_0 += bx1_0
            ay1_0 += by1_0
            az1_0 += bz1_0
            ax1_1 += bx1_1
            ay1_1 += by1_1
            az1_1 += bz1_1
            ax1_2 += bx1_2
            ay1_2 += by1_2
            az1_2 += bz1_2
            ax1_3 += bx1_3
            ay1_3 += by1_3
            az1_3 += bz1_3
            ax1_4 += bx1_4
            ay1_4 += by1_4
            az1_4 += bz1_4
            ax1_5 += bx1_5
            ay1_5 += by1_5
            az1_5 += bz1_5
            ax1_6 += bx1_6
            ay1_6 += by1_6
            az1_6 += bz1_6
            ax1_7 += bx1_7
            ay1_7 += by1_7
            az1_7 += bz1_7
        if not abs(ax0_0 + ay0_0 + az0_0 + ax0_1 + ay0_1 + az0_1 + ax0_2 + ay0_2 + az0_2 + ax0_3 + ay0_3 + az0_3 + ax0_4 + ay0_4 + az0_4 + ax0_5 + ay0_5 + az0_5 + ax0_6 + ay0_6 + az0_6 + ax0_7 + ay0_7 + az0_7) < np.inf:
            _find_singular(ip0, j0, j1, x, y, z, soft, err)
        if not abs(ax1_0 + ay1_0 + az1_0 + ax1_1 + ay1_1 + az1_1 + ax1_2 + ay1_2 + az1_2 + ax1_3 + ay1_3 + az1_3 + ax1_4 + ay1_4 + az1_4 + ax1_5 + ay1_5 + az1_5 + ax1_6 + ay1_6 + az1_6 + ax1_7 + ay1_7 + az1_7) < np.inf:
            _find_singular(ip1, j0, j1, x, y, z, soft, err)
        acc_out[ip0, 0] = ((((((ax0_0 + ax0_1) + ax0_2) + ax0_3) + ax0_4) + ax0_5) + ax0_6) + ax0_7
        acc_out[ip0, 1] = ((((((ay0_0 + ay0_1) + ay0_2) + ay0_3) + ay0_4) + ay0_5) + ay0_6) + ay0_7
        acc_out[ip0, 2] = ((((((az0_0 + az0_1) + az0_2) + az0_3) + az0_4) + az0_5) + az0_6) + az0_7
        acc_out[ip1, 0] = ((((((ax1_0 + ax1_1) + ax1_2) + ax1_3) + ax1_4) + ax1_5) + ax1_6) + ax1_7
        acc_out[ip1, 1] = ((((((ay1_0 + ay1_1) + ay1_2) + ay1_3) + ay1_4) + ay1_5) + ay1_6) + ay1_7
        acc_out[ip1, 2] = ((((((az1_0 + az1_1) + az1_2) + az1_3) + az1_4) + az1_5) + az1_6) + az1_7


@njit(cache=True, nogil=True, error_model="numpy", boundscheck=False)
def tile_ga_4x4(i0, i1, j0, j1, mode, prm, x, y, z, vx, vy, vz, w, q, se, hs, eptr, eidx,
        use_excl, acc_out, jerk_out, counts, instrument, err):
    zero = prm[P_ZERO]
    soft = prm[P_SOFT]
    one = prm[P_ONE]
    azero = np.float64(0.0)
    for ib in range(i0, i1, 4):
        ip0 = ib + 0
        xi0 = x[ip0]; yi0 = y[ip0]; zi0 = z[ip0]
        ax0_0 = ay0_0 = az0_0 = azero
        ax0_1 = ay0_1 = az0_1 = azero
        ax0_2 = ay0_2 = az0_2 = azero
        ax0_3 = ay0_3 = az0_3 = azero
        ip1 = ib + 1
        xi1 = x[ip1]; yi1 = y[ip1]; zi1 = z[ip1]
        ax1_0 = ay1_0 = az1_0 = azero
        ax1_1 = ay1_1 = az1_1 = azero
        ax1_2 = ay1_2 = az1_2 = azero
        ax1_3 = ay1_3 = az1_3 = azero
        ip2 = ib + 2
        xi2 = x[ip2]; yi2 = y[ip2]; zi2 = z[ip2]
        ax2_0 = ay2_0 = az2_0 = azero
        ax2_1 = ay2_1 = az2_1 = azero
        ax2_2 = ay2_2 = az2_2 = azero
        ax2_3 = ay2_3 = az2_3 = azero
        ip3 = ib + 3
        xi3 = x[ip3]; yi3 = y[ip3]; zi3 = z[ip3]
        ax3_0 = ay3_0 = az3_0 = azero
        ax3_1 = ay3_1 = az3_1 = azero
        ax3_2 = ay3_2 = az3_2 = azero
        ax3_3 = ay3_3 = az3_3 = azero
        for jb in range(j0, j1, 128):
            bx0_0 = by0_0 = bz0_0 = zero
            bx0_1 = by0_1 = bz0_1 = zero
            bx0_2 = by0_2 = bz0_2 = zero
            bx0_3 = by0_3 = bz0_3 = zero
            bx1_0 = by1_0 = bz1_0 = zero
            bx1_1 = by1_1 = bz1_1 = zero
            bx1_2 = by1_2 = bz1_2 = zero
            bx1_3 = by1_3 = bz1_3 = zero
            bx2_0 = by2_0 = bz2_0 = zero
            bx2_1 = by2_1 = bz2_1 = zero
            bx2_2 = by2_2 = bz2_2 = zero
            bx2_3 = by2_3 = bz2_3 = zero
            bx3_0 = by3_0 = bz3_0 = zero
            bx3_1 = by3_1 = bz3_1 = zero
            bx3_2 = by3_2 = bz3_2 = zero
            bx3_3 = by3_3 = bz3_3 = zero
            for j in range(jb, min(jb + 128, j1), 4):
                xj0 = x[j + 0]; yj0 = y[j + 0]; zj0 = z[j + 0]
                wj0 = w[j + 0]
                xj1 = x[j + 1]; yj1 = y[j + 1]; zj1 = z[j + 1]
                wj1 = w[j + 1]
                xj2 = x[j + 2]; yj2 = y[j + 2]; zj2 = z[j + 2]
                wj2 = w[j + 2]
                xj3 = x[j + 3]; yj3 = y[j + 3]; zj3 = z[j + 3]
                wj3 = w[j + 3]
                jj = j + 0
                live = jj != ip0
                dx = xj0 - xi0; dy = yj0 - yi0; dz = zj0 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj0 * s if live else zero
                bx0_0 += sw * dx
                by0_0 += sw * dy
                bz0_0 += sw * dz
                jj = j + 1
                live = jj != ip0
                dx = xj1 - xi0; dy = yj1 - yi0; dz = zj1 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj1 * s if live else zero
                bx0_1 += sw * dx
                by0_1 += sw * dy
                bz0_1 += sw * dz
                jj = j + 2
                live = jj != ip0
                dx = xj2 - xi0; dy = yj2 - yi0; dz = zj2 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj2 * s if live else zero
                bx0_2 += sw * dx
                by0_2 += sw * dy
                bz0_2 += sw * dz
                jj = j + 3
                live = jj != ip0
                dx = xj3 - xi0; dy = yj3 - yi0; dz = zj3 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj3 * s if live else zero
                bx0_3 += sw * dx
                by0_3 += sw * dy
                bz0_3 += sw * dz
                jj = j + 0
                live = jj != ip1
                dx = xj0 - xi1; dy = yj0 - yi1; dz = zj0 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj0 * s if live else zero
                bx1_0 += sw * dx
                by1_0 += sw * dy
                bz1_0 += sw * dz
                jj = j + 1
                live = jj != ip1
                dx = xj1 - xi1; dy = yj1 - yi1; dz = zj1 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj1 * s if live else zero
                bx1_1 += sw * dx
                by1_1 += sw * dy
                bz1_1 += sw * dz
                jj = j + 2
                live = jj != ip1
                dx = xj2 - xi1; dy = yj2 - yi1; dz = zj2 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj2 * s if live else zero
                bx1_2 += sw * dx
                by1_2 += sw * dy
                bz1_2 += sw * dz
                jj = j + 3
                live = jj != ip1
                dx = xj3 - xi1; dy = yj3 - yi1; dz = zj3 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj3 * s if live else zero
                bx1_3 += sw * dx
                by1_3 += sw * dy
                bz1_3 += sw * dz
                jj = j + 0
                live = jj != ip2
                dx = xj0 - xi2; dy = yj0 - yi2; dz = zj0 - zi2
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip2, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj0 * s if live else zero
                bx2_0 += sw * dx
                by2_0 += sw * dy
                bz2_0 += sw * dz
                jj = j + 1
                live = jj != ip2
                dx = xj1 - xi2; dy = yj1 - yi2; dz = zj1 - zi2
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip2, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj1 * s if live else zero
                bx2_1 += sw * dx
                by2_1 += sw * dy
                bz2_1 += sw * dz
                jj = j + 2
                live = jj != ip2
                dx = xj2 - xi2; dy = yj2 - yi2; dz = zj2 - zi2
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip2, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj2 * s if live else zero
                bx2_2 += sw * dx
                by2_2 += sw * dy
                bz2_2 += sw * dz
                jj = j + 3
                live = jj != ip2
                dx = xj3 - xi2; dy = yj3 - yi2; dz = zj3 - zi2
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip2, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj3 * s if live else zero
                bx2_3 += sw * dx
                by2_3 += sw * dy
                bz2_3 += sw * dz
                jj = j + 0
                live = jj != ip3
                dx = xj0 - xi3; dy = yj0 - yi3; dz = zj0 - zi3
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip3, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj0 * s if live else zero
                bx3_0 += sw * dx
                by3_0 += sw * dy
                bz3_0 += sw * dz
                jj = j + 1
                live = jj != ip3
                dx = xj1 - xi3; dy = yj1 - yi3; dz = zj1 - zi3
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip3, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj1 * s if live else zero
                bx3_1 += sw * dx
                by3_1 += sw * dy
                bz3_1 += sw * dz
                jj = j + 2
                live = jj != ip3
                dx = xj2 - xi3; dy = yj2 - yi3; dz = zj2 - zi3
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip3, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj2 * s if live else zero
                bx3_2 += sw * dx
                by3_2 += sw * dy
                bz3_2 += sw * dz
                jj = j + 3
                live = jj != ip3
                dx = xj3 - xi3; dy = yj3 - yi3; dz = zj3 - zi3
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip3, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj3 * s if live else zero
                bx3_3 += sw * dx
                by3_3 += sw * dy
                bz3_3 += sw * dz
            ax0_0 += bx0_0
            ay0_0 += by0_0
            az0_0 += bz0_0
            ax0_1 += bx0_1
            ay0_1 += by0_1
            az0_1 += bz0_1
            ax0_2 += bx0_2
            ay0_2 += by0_2
            az0_2 += bz0_2
            ax0_3 += bx0_3
            ay0_3 += by0_3
            az0_3 += bz0_3
            ax1_0 += bx1_0
            ay1_0 += by1_0
            az1_0 += bz1_0
            ax1_1 += bx1_1
            ay1_1 += by1_1
            az1_1 += bz1_1
            ax1_2 += bx1_2
            ay1_2 += by1_2
            az1_2 += bz1_2
            ax1_3 += bx1_3
            ay1_3 += by1_3
            az1_3 += bz1_3
            ax2_0 += bx2_0
            ay2_0 += by2_0
            az2_0 += bz2_0
            ax2_1 += bx2_1
            ay2_1 += by2_1
            az2_1 += bz2_1
            ax2_2 += bx2_2
            ay2_2 += by2_2
            az2_2 += bz2_2
            ax2_3 += bx2_3
            ay2_3 += by2_3
            az2_3 += bz2_3
            ax3_0 += bx3_0
            ay3_0 += by3_0
            az3_0 += bz3_0
            ax3_1 += bx3_1
            ay3_1 += by3_1
            az3_1 += bz3_1
            ax3_2 += bx3_2
            ay3_2 += by3_2
            az3_2 += bz3_2
            ax3_3 += bx3_3
            ay3_3 += by3_3
            az3_3 += bz3_3
        if not abs(ax0_0 + ay0_0 + az0_0 + ax0_1 + ay0_1 + az0_1 + ax0_2 + ay0_2 + az0_2 + ax0_3 + ay0_3 + az0_3) < np.inf:
            _find_singular(ip0, j0, j1, x, y, z, soft, err)
        if not abs(ax1_0 + ay1_0 + az1_0 + ax1_1 + ay1_1 + az1_1 + ax1_2 + ay1_2 + az1_2 + ax1_3 + ay1_3 + az1_3) < np.inf:
            _find_singular(ip1, j0, j1, x, y, z, soft, err)
        if not abs(ax2_0 + ay2_0 + az2_0 + ax2_1 + ay2_1 + az2_1 + ax2_2 + ay2_2 + az2_2 + ax2_3 + ay2_3 + az2_3) < np.inf:
            _find_singular(ip2, j0, j1, x, y, z, soft, err)
        if not abs(ax3_0 + ay3_0 + az3_0 + ax3_1 + ay3_1 + az3_1 + ax3_2 + ay3_2 + az3_2 + ax3_3 + ay3_3 + az3_3) < np.inf:
            _find_singular(ip3, j0, j1, x, y, z, soft, err)
        acc_out[ip0, 0] = ((ax0_0 + ax0_1) + ax0_2) + ax0_3
        acc_out[ip0, 1] = ((ay0_0 + ay0_1) + ay0_2) + ay0_3
        acc_out[ip0, 2] = ((az0_0 + az0_1) + az0_2) + az0_3
        acc_out[ip1, 0] = ((ax1_0 + ax1_1) + ax1_2) + ax1_3
        acc_out[ip1, 1] = ((ay1_0 + ay1_1) + ay1_2) + ay1_3
        acc_out[ip1, 2] = ((az1_0 + az1_1) + az1_2) + az1_3
        acc_out[ip2, 0] = ((ax2_0 + ax2_1) + ax2_2) + ax2_3
        acc_out[ip2, 1] = ((ay2_0 + ay2_1) + ay2_2) + ay2_3
        acc_out[ip2, 2] = ((az2_0 + az2_1) + az2_2) + az2_3
        acc_out[ip3, 0] = ((ax3_0 + ax3_1) + ax3_2) + ax3_3
        acc_out[ip3, 1] = ((ay3_0 + ay3_1) + ay3_2) + ay3_3
        acc_out[ip3, 2] = ((az3_0 + az3_1) + az3_2) + az3_3


@njit(cache=True, nogil=True, error_model="numpy", boundscheck=False)
def tile_ga_4x8(i0, i1, j0, j1, mode, prm, x, y, z, vx, vy, vz, w, q, se, hs, eptr, eidx,
        use_excl, acc_out, jerk_out, counts, instrument, err):
    zero = prm[P_ZERO]
    soft = prm[P_SOFT]
    one = prm[P_ONE]
    azero = np.float64(0.0)
    for ib in range(i0, i1, 4):
        ip0 = ib + 0
        xi0 = x[ip0]; yi0 = y[ip0]; zi0 = z[ip0]
        ax0_0 = ay0_0 = az0_0 = azero
        ax0_1 = ay0_1 = az0_1 = azero
        ax0_2 = ay0_2 = az0_2 = azero
        ax0_3 = ay0_3 = az0_3 = azero
        ax0_4 = ay0_4 = az0_4 = azero
        ax0_5 = ay0_5 = az0_5 = azero
        ax0_6 = ay0_6 = az0_6 = azero
        ax0_7 = ay0_7 = az0_7 = azero
        ip1 = ib + 1
        xi1 = x[ip1]; yi1 = y[ip1]; zi1 = z[ip1]
        ax1_0 = ay1_0 = az1_0 = azero
        ax1_1 = ay1_1 = az1_1 = azero
        ax1_2 = ay1_2 = az1_2 = azero
        ax1_3 = ay1_3 = az1_3 = azero
        ax1_4 = ay1_4 = az1_4 = azero
        ax1_5 = ay1_5 = az1_5 = azero
        ax1_6 = ay1_6 = az1_6 = azero
        ax1_7 = ay1_7 = az1_7 = azero
        ip2 = ib + 2
        xi2 = x[ip2]; yi2 = y[ip2]; zi2 = z[ip2]
        ax2_0 = ay2_0 = az2_0 = azero
        ax2_1 = ay2_1 = az2_1 = azero
        ax2_2 = ay2_2 = az2_2 = azero
        ax2_3 = ay2_3 = az2_3 = azero
        ax2_4 = ay2_4 = az2_4 = azero
        ax2_5 = ay2_5 = az2_5 = azero
        ax2_6 = ay2_6 = az2_6 = azero
        ax2_7 = ay2_7 = az2_7 = azero
        ip3 = ib + 3
        xi3 = x[ip3]; yi3 = y[ip3]; zi3 = z[ip3]
        ax3_0 = ay3_0 = az3_0 = azero
        ax3_1 = ay3_1 = az3_1 = azero
        ax3_2 = ay3_2 = az3_2 = azero
        ax3_3 = ay3_3 = az3_3 = azero
        ax3_4 = ay3_4 = az3_4 = azero
        ax3_5 = ay3_5 = az3_5 = azero
        ax3_6 = ay3_6 = az3_6 = azero
        ax3_7 = ay3_7 = az3_7 = azero
        for jb in range(j0, j1, 128):
            bx0_0 = by0_0 = bz0_0 = zero
            bx0_1 = by0_1 = bz0_1 = zero
            bx0_2 = by0_2 = bz0_2 = zero
            bx0_3 = by0_3 = bz0_3 = zero
            bx0_4 = by0_4 = bz0_4 = zero
            bx0_5 = by0_5 = bz0_5 = zero
            bx0_6 = by0_6 = bz0_6 = zero
            bx0_7 = by0_7 = bz0_7 = zero
            bx1_0 = by1_0 = bz1_0 = zero
            bx1_1 = by1_1 = bz1_1 = zero
            bx1_2 = by1_2 = bz1_2 = zero
            bx1_3 = by1_3 = bz1_3 = zero
            bx1_4 = by1_4 = bz1_4 = zero
            bx1_5 = by1_5 = bz1_5 = zero
            bx1_6 = by1_6 = bz1_6 = zero
            bx1_7 = by1_7 = bz1_7 = zero
            bx2_0 = by2_0 = bz2_0 = zero
            bx2_1 = by2_1 = bz2_1 = zero
            bx2_2 = by2_2 = bz2_2 = zero
            bx2_3 = by2_3 = bz2_3 = zero
            bx2_4 = by2_4 = bz2_4 = zero
            bx2_5 = by2_5 = bz2_5 = zero
            bx2_6 = by2_6 = bz2_6 = zero
            bx2_7 = by2_7 = bz2_7 = zero
            bx3_0 = by3_0 = bz3_0 = zero
            bx3_1 = by3_1 = bz3_1 = zero
            bx3_2 = by3_2 = bz3_2 = zero
            bx3_3 = by3_3 = bz3_3 = zero
            bx3_4 = by3_4 = bz3_4 = zero
            bx3_5 = by3_5 = bz3_5 = zero
            bx3_6 = by3_6 = bz3_6 = zero
            bx3_7 = by3_7 = bz3_7 = zero
            for j in range(jb, min(jb + 128, j1), 8):
                xj0 = x[j + 0]; yj0 = y[j + 0]; zj0 = z[j + 0]
                wj0 = w[j + 0]
                xj1 = x[j + 1]; yj1 = y[j + 1]; zj1 = z[j + 1]
                wj1 = w[j + 1]
                xj2 = x[j + 2]; yj2 = y[j + 2]; zj2 = z[j + 2]
                wj2 = w[j + 2]
                xj3 = x[j + 3]; yj3 = y[j + 3]; zj3 = z[j + 3]
                wj3 = w[j + 3]
                xj4 = x[j + 4]; yj4 = y[j + 4]; zj4 = z[j + 4]
                wj4 = w[j + 4]
                xj5 = x[j + 5]; yj5 = y[j + 5]; zj5 = z[j + 5]
                wj5 = w[j + 5]
                xj6 = x[j + 6]; yj6 = y[j + 6]; zj6 = z[j + 6]
                wj6 = w[j + 6]
                xj7 = x[j + 7]; yj7 = y[j + 7]; zj7 = z[j + 7]
                wj7 = w[j + 7]
                jj = j + 0
                live = jj != ip0
                dx = xj0 - xi0; dy = yj0 - yi0; dz = zj0 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj0 * s if live else zero
                bx0_0 += sw * dx
                by0_0 += sw * dy
                bz0_0 += sw * dz
                jj = j + 1
                live = jj != ip0
                dx = xj1 - xi0; dy = yj1 - yi0; dz = zj1 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj1 * s if live else zero
                bx0_1 += sw * dx
                by0_1 += sw * dy
                bz0_1 += sw * dz
                jj = j + 2
                live = jj != ip0
                dx = xj2 - xi0; dy = yj2 - yi0; dz = zj2 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj2 * s if live else zero
                bx0_2 += sw * dx
                by0_2 += sw * dy
                bz0_2 += sw * dz
                jj = j + 3
                live = jj != ip0
                dx = xj3 - xi0; dy = yj3 - yi0; dz = zj3 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj3 * s if live else zero
                bx0_3 += sw * dx
                by0_3 += sw * dy
                bz0_3 += sw * dz
                jj = j + 4
                live = jj != ip0
                dx = xj4 - xi0; dy = yj4 - yi0; dz = zj4 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj4 * s if live else zero
                bx0_4 += sw * dx
                by0_4 += sw * dy
                bz0_4 += sw * dz
                jj = j + 5
                live = jj != ip0
                dx = xj5 - xi0; dy = yj5 - yi0; dz = zj5 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj5 * s if live else zero
                bx0_5 += sw * dx
                by0_5 += sw * dy
                bz0_5 += sw * dz
                jj = j + 6
                live = jj != ip0
                dx = xj6 - xi0; dy = yj6 - yi0; dz = zj6 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj6 * s if live else zero
                bx0_6 += sw * dx
                by0_6 += sw * dy
                bz0_6 += sw * dz
                jj = j + 7
                live = jj != ip0
                dx = xj7 - xi0; dy = yj7 - yi0; dz = zj7 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj7 * s if live else zero
                bx0_7 += sw * dx
                by0_7 += sw * dy
                bz0_7 += sw * dz
                jj = j + 0
                live = jj != ip1
                dx = xj0 - xi1; dy = yj0 - yi1; dz = zj0 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj0 * s if live else zero
                bx1_0 += sw * dx
                by1_0 += sw * dy
                bz1_0 += sw * dz
                jj = j + 1
                live = jj != ip1
                dx = xj1 - xi1; dy = yj1 - yi1; dz = zj1 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj1 * s if live else zero
                bx1_1 += sw * dx
                by1_1 += sw * dy
                bz1_1 += sw * dz
                jj = j + 2
                live = jj != ip1
                dx = xj2 - xi1; dy = yj2 - yi1; dz = zj2 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj2 * s if live else zero
                bx1_2 += sw * dx
                by1_2 += sw * dy
                bz1_2 += sw * dz
                jj = j + 3
                live = jj != ip1
                dx = xj3 - xi1; dy = yj3 - yi1; dz = zj3 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj3 * s if live else zero
                bx1_3 += sw * dx
                by1_3 += sw * dy
                bz1_3 += sw * dz
                jj = j + 4
                live = jj != ip1
                dx = xj4 - xi1; dy = yj4 - yi1; dz = zj4 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj4 * s if live else zero
                bx1_4 += sw * dx
                by1_4 += sw * dy
                bz1_4 += sw * dz
                jj = j + 5
                live = jj != ip1
                dx = xj5 - xi1; dy = yj5 - yi1; dz = zj5 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj5 * s if live else zero
                bx1_5 += sw * dx
                by1_5 += sw * dy
                bz1_5 += sw * dz
                jj = j + 6
                live = jj != ip1
                dx = xj6 - xi1; dy = yj6 - yi1; dz = zj6 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj6 * s if live else zero
                bx1_6 += sw * dx
                by1_6 += sw * dy
                bz1_6 += sw * dz
                jj = j + 7
                live = jj != ip1
                dx = xj7 - xi1; dy = yj7 - yi1; dz = zj7 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj7 * s if live else zero
                bx1_7 += sw * dx
                by1_7 += sw * dy
                bz1_7 += sw * dz
                jj = j + 0
                live = jj != ip2
                dx = xj0 - xi2; dy = yj0 - yi2; dz = zj0 - zi2
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip2, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj0 * s if live else zero
                bx2_0 += sw * dx
                by2_0 += sw * dy
                bz2_0 += sw * dz
                jj = j + 1
                live = jj != ip2
                dx = xj1 - xi2; dy = yj1 - yi2; dz = zj1 - zi2
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip2, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj1 * s if live else zero
                bx2_1 += sw * dx
                by2_1 += sw * dy
                bz2_1 += sw * dz
                jj = j + 2
                live = jj != ip2
                dx = xj2 - xi2; dy = yj2 - yi2; dz = zj2 - zi2
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip2, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj2 * s if live else zero
                bx2_2 += sw * dx
                by2_2 += sw * dy
                bz2_2 += sw * dz
                jj = j + 3
                live = jj != ip2
                dx = xj3 - xi2; dy = yj3 - yi2; dz = zj3 - zi2
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip2, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj3 * s if live else zero
                bx2_3 += sw * dx
                by2_3 += sw * dy
                bz2_3 += sw * dz
                jj = j + 4
                live = jj != ip2
                dx = xj4 - xi2; dy = yj4 - yi2; dz = zj4 - zi2
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip2, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj4 * s if live else zero
                bx2_4 += sw * dx
                by2_4 += sw * dy
                bz2_4 += sw * dz
                jj = j + 5
                live = jj != ip2
                dx = xj5 - xi2; dy = yj5 - yi2; dz = zj5 - zi2
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip2, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj5 * s if live else zero
                bx2_5 += sw * dx
                by2_5 += sw * dy
                bz2_5 += sw * dz
                jj = j + 6
                live = jj != ip2
                dx = xj6 - xi2; dy = yj6 - yi2; dz = zj6 - zi2
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip2, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj6 * s if live else zero
                bx2_6 += sw * dx
                by2_6 += sw * dy
                bz2_6 += sw * dz
                jj = j + 7
                live = jj != ip2
                dx = xj7 - xi2; dy = yj7 - yi2; dz = zj7 - zi2
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip2, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj7 * s if live else zero
                bx2_7 += sw * dx
                by2_7 += sw * dy
                bz2_7 += sw * dz
                jj = j + 0
                live = jj != ip3
                dx = xj0 - xi3; dy = yj0 - yi3; dz = zj0 - zi3
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip3, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj0 * s if live else zero
                bx3_0 += sw * dx
                by3_0 += sw * dy
                bz3_0 += sw * dz
                jj = j + 1
                live = jj != ip3
                dx = xj1 - xi3; dy = yj1 - yi3; dz = zj1 - zi3
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip3, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj1 * s if live else zero
                bx3_1 += sw * dx
                by3_1 += sw * dy
                bz3_1 += sw * dz
                jj = j + 2
                live = jj != ip3
                dx = xj2 - xi3; dy = yj2 - yi3; dz = zj2 - zi3
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip3, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj2 * s if live else zero
                bx3_2 += sw * dx
                by3_2 += sw * dy
                bz3_2 += sw * dz
                jj = j + 3
                live = jj != ip3
                dx = xj3 - xi3; dy = yj3 - yi3; dz = zj3 - zi3
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip3, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj3 * s if live else zero
                bx3_3 += sw * dx
                by3_3 += sw * dy
                bz3_3 += sw * dz
                jj = j + 4
                live = jj != ip3
                dx = xj4 - xi3; dy = yj4 - yi3; dz = zj4 - zi3
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip3, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj4 * s if live else zero
                bx3_4 += sw * dx
                by3_4 += sw * dy
                bz3_4 += sw * dz
                jj = j + 5
                live = jj != ip3
                dx = xj5 - xi3; dy = yj5 - yi3; dz = zj5 - zi3
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip3, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj5 * s if live else zero
                bx3_5 += sw * dx
                by3_5 += sw * dy
                bz3_5 += sw * dz
                jj = j + 6
                live = jj != ip3
                dx = xj6 - xi3; dy = yj6 - yi3; dz = zj6 - zi3
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip3, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj6 * s if live else zero
                bx3_6 += sw * dx
                by3_6 += sw * dy
                bz3_6 += sw * dz
                jj = j + 7
                live = jj != ip3
                dx = xj7 - xi3; dy = yj7 - yi3; dz = zj7 - zi3
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip3, jj] += 1
                r2 = r2 if live else one
                s, t = _interaction(0, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)
                sw = wj7 * s if live else zero
                bx3_7 += sw * dx
                by3_7 += sw * dy
                bz3_7 += sw * dz
            ax0_0 += bx0_0
            ay0_0 += by0_0
            az0_0 += bz0_0
            ax0_1 += bx0_1
            ay0_1 += by0_1
            az0_1 += bz0_1
            ax0_2 += bx0_2
            ay0_2 += by0_2
            az0_2 += bz0_2
            ax0_3 += bx0_3
            ay0_3 += by0_3
            az0_3 += bz0_3
            ax0_4 += bx0_4
            ay0_4 += by0_4
            az0_4 += bz0_4
            ax0_5 += bx0_5
            ay0_5 += by0_5
            az0_5 += bz0_5
            ax0_6 += bx0_6
            ay0_6 += by0_6
            az0_6 += bz0_6
            ax0_7 += bx0_7
            ay0_7 += by0_7
            az0_7 += bz0_7
            ax1_0 += bx1_0
            ay1_0 += by1_0
            az1_0 += bz1_0
            ax1_1 += bx1_1
            ay1_1 += by1_1
            az1_1 += bz1_1
            ax1_2 += bx1_2
            ay1_2 += by1_2
            az1_2 += bz1_2
            ax1_3 += bx1_3
            ay1_3 += by1_3
            az1_3 += bz1_3
            ax1_4 += bx1_4
            ay1_4 += by1_4
            az1_4 += bz1_4
            ax1_5 += bx1_5
            ay1_5 += by1_5
            az1_5 += bz1_5
            ax1_6 += bx1_6
            ay1_6 += by1_6
            az1_6 += bz1_6
            ax1_7 += bx1_7
            ay1_7 += by1_7
            az1_7 += bz1_7
            ax2_0 += bx2_0
            ay2_0 += by2_0
            az2_0 += bz2_0
            ax2_1 += bx2_1
            ay2_1 += by2_1
            az2_1 += bz2_1
            ax2_2 += bx2_2
            ay2_2 += by2_2
            az2_2 += bz2_2
            ax2_3 += bx2_3
            ay2_3 += by2_3
            az2_3 += bz2_3
            ax2_4 += bx2_4
            ay2_4 += by2_4
            az2_4 += bz2_4
            ax2_5 += bx2_5
            ay2_5 += by2_5
            az2_5 += bz2_5
            ax2_6 += bx2_6
            ay2_6 += by2_6
            az2_6 += bz2_6
            ax2_7 += bx2_7
            ay2_7 += by2_7
            az2_7 += bz2_7
            ax3_0 += bx3_0
            ay3_0 += by3_0
            az3_0 += bz3_0
            ax3_1 += bx3_1
            ay3_1 += by3_1
            az3_1 += bz3_1
            ax3_2 += bx3_2
            ay3_2 += by3_2
            az3_2 += bz3_2
            ax3_3 += bx3_3
            ay3_3 += by3_3
            az3_3 += bz3_3
            ax3_4 += bx3_4
            ay3_4 += by3_4
            az3_4 += bz3_4
            ax3_5 += bx3_5
            ay3_5 += by3_5
            az3_5 += bz3_5
            ax3_6 += bx3_6
            ay3_6 += by3_6
            az3_6 += bz3_6
            ax3_7 += bx3_7
            ay3_7 += by3_7
            az3_7 += bz3_7
        if not abs(ax0_0 + ay0_0 + az0_0 + ax0_1 + ay0_1 + az0_1 + ax0_2 + ay0_2 + az0_2 + ax0_3 + ay0_3 + az0_3 + ax0_4 + ay0_4 + az0_4 + ax0_5 + ay0_5 + az0_5 + ax0_6 + ay0_6 + az0_6 + ax0_7 + ay0_7 + az0_7) < np.inf:
            _find_singular(ip0, j0, j1, x, y, z, soft, err)
        if not abs(ax1_0 + ay1_0 + az1_0 + ax1_1 + ay1_1 + az1_1 + ax1_2 + ay1_2 + az1_2 + ax1_3 + ay1_3 + az1_3 + ax1_4 + ay1_4 + az1_4 + ax1_5 + ay1_5 + az1_5 + ax1_6 + ay1_6 + az1_6 + ax1_7 + ay1_7 + az1_7) < np.inf:
            _find_singular(ip1, j0, j1, x, y, z, soft, err)
        if not abs(ax2_0 + ay2_0 + az2_0 + ax2_1 + ay2_1 + az2_1 + ax2_2 + ay2_2 + az2_2 + ax2_3 + ay2_3 + az2_3 + ax2_4 + ay2_4 + az2_4 + ax2_5 + ay2_5 + az2_5 + ax2_6 + ay2_6 + az2_6 + ax2_7 + ay2_7 + az2_7) < np.inf:
            _find_singular(ip2, j0, j1, x, y, z, soft, err)
        if not abs(ax3_0 + ay3_0 + az3_0 + ax3_1 + ay3_1 + az3_1 + ax3_2 + ay3_2 + az3_2 + ax3_3 + ay3_3 + az3_3 + ax3_4 + ay3_4 + az3_4 + ax3_5 + ay3_5 + az3_5 + ax3_6 + ay3_6 + az3_6 + ax3_7 + ay3_7 + az3_7) < np.inf:
            _find_singular(ip3, j0, j1, x, y, z, soft, err)
        acc_out[ip0, 0] = ((((((ax0_0 + ax0_1) + ax0_2) + ax0_3) + ax0_4) + ax0_5) + ax0_6) + ax0_7
        acc_out[ip0, 1] = ((((((ay0_0 + ay0_1) + ay0_2) + ay0_3) + ay0_4) + ay0_5) + ay0_6) + ay0_7
        acc_out[ip0, 2] = ((((((az0_0 + az0_1) + az0_2) + az0_3) + az0_4) + az0_5) + az0_6) + az0_7
        acc_out[ip1, 0] = ((((((ax1_0 + ax1_1) + ax1_2) + ax1_3) + ax1_4) + ax1_5) + ax1_6) + ax1_7
        acc_out[ip1, 1] = ((((((ay1_0 + ay1_1) + ay1_2) + ay1_3) + ay1_4) + ay1_5) + ay1_6) + ay1_7
        acc_out[ip1, 2] = ((((((az1_0 + az1_1) + az1_2) + az1_3) + az1_4) + az1_5) + az1_6) + az1_7
        acc_out[ip2, 0] = ((((((ax2_0 + ax2_1) + ax2_2) + ax2_3) + ax2_4) + ax2_5) + ax2_6) + ax2_7
        acc_out[ip2, 1] = ((((((ay2_0 + ay2_1) + ay2_2) + ay2_3) + ay2_4) + ay2_5) + ay2_6) + ay2_7
        acc_out[ip2, 2] = ((((((az2_0 + az2_1) + az2_2) + az2_3) + az2_4) + az2_5) + az2_6) + az2_7
        acc_out[ip3, 0] = ((((((ax3_0 + ax3_1) + ax3_2) + ax3_3) + ax3_4) + ax3_5) + ax3_6) + ax3_7
        acc_out[ip3, 1] = ((((((ay3_0 + ay3_1) + ay3_2) + ay3_3) + ay3_4) + ay3_5) + ay3_6) + ay3_7
        acc_out[ip3, 2] = ((((((az3_0 + az3_1) + az3_2) + az3_3) + az3_4) + az3_5) + az3_6) + az3_7


@njit(cache=True, nogil=True, error_model="numpy", boundscheck=False)
def tile_gaj_1x1(i0, i1, j0, j1, mode, prm, x, y, z, vx, vy, vz, w, q, se, hs, eptr, eidx,
        use_excl, acc_out, jerk_out, counts, instrument, err):
    zero = prm[P_ZERO]
    soft = prm[P_SOFT]
    one = prm[P_ONE]
    azero = np.float64(0.0)
    for ib in range(i0, i1, 1):
        ip0 = ib + 0
        xi0 = x[ip0]; yi0 = y[ip0]; zi0 = z[ip0]
        vxi0 = vx[ip0]; vyi0 = vy[ip0]; vzi0 = vz[ip0]
        ax0_0 = ay0_0 = az0_0 = jx0_0 = jy0_0 = jz0_0 = azero
        for jb in range(j0, j1, 128):
            bx0_0 = by0_0 = bz0_0 = kx0_0 = ky0_0 = kz0_0 = zero
            for j in range(jb, min(jb + 128, j1), 1):
                xj0 = x[j + 0]; yj0 = y[j + 0]; zj0 = z[j + 0]
                wj0 = w[j + 0]
                vxj0 = vx[j + 0]; vyj0 = vy[j + 0]; vzj0 = vz[j + 0]
                jj = j + 0
                live = jj != ip0
                dx = xj0 - xi0; dy = yj0 - yi0; dz = zj0 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                dvx = vxj0 - vxi0; dvy = vyj0 - vyi0; dvz = vzj0 - vzi0
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj0 * s if live else zero
                bx0_0 += sw * dx
                by0_0 += sw * dy
                bz0_0 += sw * dz
                kx0_0 += sw * (dvx - t * dx)
                ky0_0 += sw * (dvy - t * dy)
                kz0_0 += sw * (dvz - t * dz)
            ax0_0 += bx0_0
            jx0_0 += kx0_0
            ay0_0 += by0_0
            jy0_0 += ky0_0
            az0_0 += bz0_0
            jz0_0 += kz0_0
        if not abs(ax0_0 + ay0_0 + az0_0) < np.inf:
            _find_singular(ip0, j0, j1, x, y, z, soft, err)
        acc_out[ip0, 0] = ax0_0
        acc_out[ip0, 1] = ay0_0
        acc_out[ip0, 2] = az0_0
        jerk_out[ip0, 0] = jx0_0
        jerk_out[ip0, 1] = jy0_0
        jerk_out[ip0, 2] = jz0_0


@njit(cache=True, nogil=True, error_model="numpy", boundscheck=False)
def tile_gaj_1x4(i0, i1, j0, j1, mode, prm, x, y, z, vx, vy, vz, w, q, se, hs, eptr, eidx,
        use_excl, acc_out, jerk_out, counts, instrument, err):
    zero = prm[P_ZERO]
    soft = prm[P_SOFT]
    one = prm[P_ONE]
    azero = np.float64(0.0)
    for ib in range(i0, i1, 1):
        ip0 = ib + 0
        xi0 = x[ip0]; yi0 = y[ip0]; zi0 = z[ip0]
        vxi0 = vx[ip0]; vyi0 = vy[ip0]; vzi0 = vz[ip0]
        ax0_0 = ay0_0 = az0_0 = jx0_0 = jy0_0 = jz0_0 = azero
        ax0_1 = ay0_1 = az0_1 = jx0_1 = jy0_1 = jz0_1 = azero
        ax0_2 = ay0_2 = az0_2 = jx0_2 = jy0_2 = jz0_2 = azero
        ax0_3 = ay0_3 = az0_3 = jx0_3 = jy0_3 = jz0_3 = azero
        for jb in range(j0, j1, 128):
            bx0_0 = by0_0 = bz0_0 = kx0_0 = ky0_0 = kz0_0 = zero
            bx0_1 = by0_1 = bz0_1 = kx0_1 = ky0_1 = kz0_1 = zero
            bx0_2 = by0_2 = bz0_2 = kx0_2 = ky0_2 = kz0_2 = zero
            bx0_3 = by0_3 = bz0_3 = kx0_3 = ky0_3 = kz0_3 = zero
            for j in range(jb, min(jb + 128, j1), 4):
                xj0 = x[j + 0]; yj0 = y[j + 0]; zj0 = z[j + 0]
                wj0 = w[j + 0]
                vxj0 = vx[j + 0]; vyj0 = vy[j + 0]; vzj0 = vz[j + 0]
                xj1 = x[j + 1]; yj1 = y[j + 1]; zj1 = z[j + 1]
                wj1 = w[j + 1]
                vxj1 = vx[j + 1]; vyj1 = vy[j + 1]; vzj1 = vz[j + 1]
                xj2 = x[j + 2]; yj2 = y[j + 2]; zj2 = z[j + 2]
                wj2 = w[j + 2]
                vxj2 = vx[j + 2]; vyj2 = vy[j + 2]; vzj2 = vz[j + 2]
                xj3 = x[j + 3]; yj3 = y[j + 3]; zj3 = z[j + 3]
                wj3 = w[j + 3]
                vxj3 = vx[j + 3]; vyj3 = vy[j + 3]; vzj3 = vz[j + 3]
                jj = j + 0
                live = jj != ip0
                dx = xj0 - xi0; dy = yj0 - yi0; dz = zj0 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                dvx = vxj0 - vxi0; dvy = vyj0 - vyi0; dvz = vzj0 - vzi0
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj0 * s if live else zero
                bx0_0 += sw * dx
                by0_0 += sw * dy
                bz0_0 += sw * dz
                kx0_0 += sw * (dvx - t * dx)
                ky0_0 += sw * (dvy - t * dy)
                kz0_0 += sw * (dvz - t * dz)
                jj = j + 1
                live = jj != ip0
                dx = xj1 - xi0; dy = yj1 - yi0; dz = zj1 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                dvx = vxj1 - vxi0; dvy = vyj1 - vyi0; dvz = vzj1 - vzi0
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj1 * s if live else zero
                bx0_1 += sw * dx
                by0_1 += sw * dy
                bz0_1 += sw * dz
                kx0_1 += sw * (dvx - t * dx)
                ky0_1 += sw * (dvy - t * dy)
                kz0_1 += sw * (dvz - t * dz)
                jj = j + 2
                live = jj != ip0
                dx = xj2 - xi0; dy = yj2 - yi0; dz = zj2 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                dvx = vxj2 - vxi0; dvy = vyj2 - vyi0; dvz = vzj2 - vzi0
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj2 * s if live else zero
                bx0_2 += sw * dx
                by0_2 += sw * dy
                bz0_2 += sw * dz
                kx0_2 += sw * (dvx - t * dx)
                ky0_2 += sw * (dvy - t * dy)
                kz0_2 += sw * (dvz - t * dz)
                jj = j + 3
                live = jj != ip0
                dx = xj3 - xi0; dy = yj3 - yi0; dz = zj3 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                dvx = vxj3 - vxi0; dvy = vyj3 - vyi0; dvz = vzj3 - vzi0
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj3 * s if live else zero
                bx0_3 += sw * dx
                by0_3 += sw * dy
                bz0_3 += sw * dz
                kx0_3 += sw * (dvx - t * dx)
                ky0_3 += sw * (dvy - t * dy)
                kz0_3 += sw * (dvz - t * dz)
            ax0_0 += bx0_0
            jx0_0 += kx0_0
            ay0_0 += by0_0
            jy0_0 += ky0_0
            az0_0 += bz0_0
            jz0_0 += kz0_0
            ax0_1 += bx0_1
            jx0_1 += kx0_1
            ay0_1 += by0_1
            jy0_1 += ky0_1
            az0_1 += bz0_1
            jz0_1 += kz0_1
            ax0_2 += bx0_2
            jx0_2 += kx0_2
            ay0_2 += by0_2
            jy0_2 += ky0_2
            az0_2 += bz0_2
            jz0_2 += kz0_2
            ax0_3 += bx0_3
            jx0_3 += kx0_3
            ay0_3 += by0_3
            jy0_3 += ky0_3
            az0_3 += bz0_3
            jz0_3 += kz0_3
        if not abs(ax0_0 + ay0_0 + az0_0 + ax0_1 + ay0_1 + az0_1 + ax0_2 + ay0_2 + az0_2 + ax0_3 + ay0_3 + az0_3) < np.inf:
            _find_singular(ip0, j0, j1, x, y, z, soft, err)
        acc_out[ip0, 0] = ((ax0_0 + ax0_1) + ax0_2) + ax0_3
        acc_out[ip0, 1] = ((ay0_0 + ay0_1) + ay0_2) + ay0_3
        acc_out[ip0, 2] = ((az0_0 + az0_1) + az0_2) + az0_3
        jerk_out[ip0, 0] = ((jx0_0 + jx0_1) + jx0_2) + jx0_3
        jerk_out[ip0, 1] = ((jy0_0 + jy0_1) + jy0_2) + jy0_3
        jerk_out[ip0, 2] = ((jz0_0 + jz0_1) + jz0_2) + jz0_3


@njit(cache=True, nogil=True, error_model="numpy", boundscheck=False)
def tile_gaj_1x8(i0, i1, j0, j1, mode, prm, x, y, z, vx, vy, vz, w, q, se, hs, eptr, eidx,
        use_excl, acc_out, jerk_out, counts, instrument, err):
    zero = prm[P_ZERO]
    soft = prm[P_SOFT]
    one = prm[P_ONE]
    azero = np.float64(0.0)
    for ib in range(i0, i1, 1):
        ip0 = ib + 0
        xi0 = x[ip0]; yi0 = y[ip0]; zi0 = z[ip0]
        vxi0 = vx[ip0]; vyi0 = vy[ip0]; vzi0 = vz[ip0]
        ax0_0 = ay0_0 = az0_0 = jx0_0 = jy0_0 = jz0_0 = azero
        ax0_1 = ay0_1 = az0_1 = jx0_1 = jy0_1 = jz0_1 = azero
        ax0_2 = ay0_2 = az0_2 = jx0_2 = jy0_2 = jz0_2 = azero
        ax0_3 = ay0_3 = az0_3 = jx0_3 = jy0_3 = jz0_3 = azero
        ax0_4 = ay0_4 = az0_4 = jx0_4 = jy0_4 = jz0_4 = azero
        ax0_5 = ay0_5 = az0_5 = jx0_5 = jy0_5 = jz0_5 = azero
        ax0_6 = ay0_6 = az0_6 = jx0_6 = jy0_6 = jz0_6 = azero
        ax0_7 = ay0_7 = az0_7 = jx0_7 = jy0_7 = jz0_7 = azero
        for jb in range(j0, j1, 128):
            bx0_0 = by0_0 = bz0_0 = kx0_0 = ky0_0 = kz0_0 = zero
            bx0_1 = by0_1 = bz0_1 = kx0_1 = ky0_1 = kz0_1 = zero
            bx0_2 = by0_2 = bz0_2 = kx0_2 = ky0_2 = kz0_2 = zero
            bx0_3 = by0_3 = bz0_3 = kx0_3 = ky0_3 = kz0_3 = zero
            bx0_4 = by0_4 = bz0_4 = kx0_4 = ky0_4 = kz0_4 = zero
            bx0_5 = by0_5 = bz0_5 = kx0_5 = ky0_5 = kz0_5 = zero
            bx0_6 = by0_6 = bz0_6 = kx0_6 = ky0_6 = kz0_6 = zero
            bx0_7 = by0_7 = bz0_7 = kx0_7 = ky0_7 = kz0_7 = zero
            for j in range(jb, min(jb + 128, j1), 8):
                xj0 = x[j + 0]; yj0 = y[j + 0]; zj0 = z[j + 0]
                wj0 = w[j + 0]
                vxj0 = vx[j + 0]; vyj0 = vy[j + 0]; vzj0 = vz[j + 0]
                xj1 = x[j + 1]; yj1 = y[j + 1]; zj1 = z[j + 1]
                wj1 = w[j + 1]
                vxj1 = vx[j + 1]; vyj1 = vy[j + 1]; vzj1 = vz[j + 1]
                xj2 = x[j + 2]; yj2 = y[j + 2]; zj2 = z[j + 2]
                wj2 = w[j + 2]
                vxj2 = vx[j + 2]; vyj2 = vy[j + 2]; vzj2 = vz[j + 2]
                xj3 = x[j + 3]; yj3 = y[j + 3]; zj3 = z[j + 3]
                wj3 = w[j + 3]
                vxj3 = vx[j + 3]; vyj3 = vy[j + 3]; vzj3 = vz[j + 3]
                xj4 = x[j + 4]; yj4 = y[j + 4]; zj4 = z[j + 4]
                wj4 = w[j + 4]
                vxj4 = vx[j + 4]; vyj4 = vy[j + 4]; vzj4 = vz[j + 4]
                xj5 = x[j + 5]; yj5 = y[j + 5]; zj5 = z[j + 5]
                wj5 = w[j + 5]
                vxj5 = vx[j + 5]; vyj5 = vy[j + 5]; vzj5 = vz[j + 5]
                xj6 = x[j + 6]; yj6 = y[j + 6]; zj6 = z[j + 6]
                wj6 = w[j + 6]
                vxj6 = vx[j + 6]; vyj6 = vy[j + 6]; vzj6 = vz[j + 6]
                xj7 = x[j + 7]; yj7 = y[j + 7]; zj7 = z[j + 7]
                wj7 = w[j + 7]
                vxj7 = vx[j + 7]; vyj7 = vy[j + 7]; vzj7 = vz[j + 7]
                jj = j + 0
                live = jj != ip0
                dx = xj0 - xi0; dy = yj0 - yi0; dz = zj0 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                dvx = vxj0 - vxi0; dvy = vyj0 - vyi0; dvz = vzj0 - vzi0
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj0 * s if live else zero
                bx0_0 += sw * dx
                by0_0 += sw * dy
                bz0_0 += sw * dz
                kx0_0 += sw * (dvx - t * dx)
                ky0_0 += sw * (dvy - t * dy)
                kz0_0 += sw * (dvz - t * dz)
                jj = j + 1
                live = jj != ip0
                dx = xj1 - xi0; dy = yj1 - yi0; dz = zj1 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                dvx = vxj1 - vxi0; dvy = vyj1 - vyi0; dvz = vzj1 - vzi0
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj1 * s if live else zero
                bx0_1 += sw * dx
                by0_1 += sw * dy
                bz0_1 += sw * dz
                kx0_1 += sw * (dvx - t * dx)
                ky0_1 += sw * (dvy - t * dy)
                kz0_1 += sw * (dvz - t * dz)
                jj = j + 2
                live = jj != ip0
                dx = xj2 - xi0; dy = yj2 - yi0; dz = zj2 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                dvx = vxj2 - vxi0; dvy = vyj2 - vyi0; dvz = vzj2 - vzi0
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj2 * s if live else zero
                bx0_2 += sw * dx
                by0_2 += sw * dy
                bz0_2 += sw * dz
                kx0_2 += sw * (dvx - t * dx)
                ky0_2 += sw * (dvy - t * dy)
                kz0_2 += sw * (dvz - t * dz)
                jj = j + 3
                live = jj != ip0
                dx = xj3 - xi0; dy = yj3 - yi0; dz = zj3 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                dvx = vxj3 - vxi0; dvy = vyj3 - vyi0; dvz = vzj3 - vzi0
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj3 * s if live else zero
                bx0_3 += sw * dx
                by0_3 += sw * dy
                bz0_3 += sw * dz
                kx0_3 += sw * (dvx - t * dx)
                ky0_3 += sw * (dvy - t * dy)
                kz0_3 += sw * (dvz - t * dz)
                jj = j + 4
                live = jj != ip0
                dx = xj4 - xi0; dy = yj4 - yi0; dz = zj4 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                dvx = vxj4 - vxi0; dvy = vyj4 - vyi0; dvz = vzj4 - vzi0
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj4 * s if live else zero
                bx0_4 += sw * dx
                by0_4 += sw * dy
                bz0_4 += sw * dz
                kx0_4 += sw * (dvx - t * dx)
                ky0_4 += sw * (dvy - t * dy)
                kz0_4 += sw * (dvz - t * dz)
                jj = j + 5
                live = jj != ip0
                dx = xj5 - xi0; dy = yj5 - yi0; dz = zj5 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                dvx = vxj5 - vxi0; dvy = vyj5 - vyi0; dvz = vzj5 - vzi0
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj5 * s if live else zero
                bx0_5 += sw * dx
                by0_5 += sw * dy
                bz0_5 += sw * dz
                kx0_5 += sw * (dvx - t * dx)
                ky0_5 += sw * (dvy - t * dy)
                kz0_5 += sw * (dvz - t * dz)
                jj = j + 6
                live = jj != ip0
                dx = xj6 - xi0; dy = yj6 - yi0; dz = zj6 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                dvx = vxj6 - vxi0; dvy = vyj6 - vyi0; dvz = vzj6 - vzi0
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj6 * s if live else zero
                bx0_6 += sw * dx
                by0_6 += sw * dy
                bz0_6 += sw * dz
                kx0_6 += sw * (dvx - t * dx)
                ky0_6 += sw * (dvy - t * dy)
                kz0_6 += sw * (dvz - t * dz)
                jj = j + 7
                live = jj != ip0
                dx = xj7 - xi0; dy = yj7 - yi0; dz = zj7 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                dvx = vxj7 - vxi0; dvy = vyj7 - vyi0; dvz = vzj7 - vzi0
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj7 * s if live else zero
                bx0_7 += sw * dx
                by0_7 += sw * dy
                bz0_7 += sw * dz
                kx0_7 += sw * (dvx - t * dx)
                ky0_7 += sw * (dvy - t * dy)
                kz0_7 += sw * (dvz - t * dz)
            ax0_0 += bx0_0
            jx0_0 += kx0_0
            ay0_0 += by0_0
            jy0_0 += ky0_0
            az0_0 += bz0_0
            jz0_0 += kz0_0
            ax0_1 += bx0_1
            jx0_1 += kx0_1
            ay0_1 += by0_1
            jy0_1 += ky0_1
            az0_1 += bz0_1
            jz0_1 += kz0_1
            ax0_2 += bx0_2
            jx0_2 += kx0_2
            ay0_2 += by0_2
            jy0_2 += ky0_2
            az0_2 += bz0_2
            jz0_2 += kz0_2
            ax0_3 += bx0_3
            jx0_3 += kx0_3
            ay0_3 += by0_3
            jy0_3 += ky0_3
            az0_3 += bz0_3
            jz0_3 += kz0_3
            ax0_4 += bx0_4
            jx0_4 += kx0_4
            ay0_4 += by0_4
            jy0_4 += ky0_4
            az0_4 += bz0_4
            jz0_4 += kz0_4
            ax0_5 += bx0_5
            jx0_5 += kx0_5
            ay0_5 += by0_5
            jy0_5 += ky0_5
            az0_5 += bz0_5
            jz0_5 += kz0_5
            ax0_6 += bx0_6
            jx0_6 += kx0_6
            ay0_6 += by0_6
            jy0_6 += ky0_6
            az0_6 += bz0_6
            jz0_6 += kz0_6
            ax0_7 += bx0_7
            jx0_7 += kx0_7
            ay0_7 += by0_7
            jy0_7 += ky0_7
            az0_7 += bz0_7
            jz0_7 += kz0_7
        if not abs(ax0_0 + ay0_0 + az0_0 + ax0_1 + ay0_1 + az0_1 + ax0_2 + ay0_2 + az0_2 + ax0_3 + ay0_3 + az0_3 + ax0_4 + ay0_4 + az0_4 + ax0_5 + ay0_5 + az0_5 + ax0_6 + ay0_6 + az0_6 + ax0_7 + ay0_7 + az0_7) < np.inf:
            _find_singular(ip0, j0, j1, x, y, z, soft, err)
        acc_out[ip0, 0] = ((((((ax0_0 + ax0_1) + ax0_2) + ax0_3) + ax0_4) + ax0_5) + ax0_6) + ax0_7
        acc_out[ip0, 1] = ((((((ay0_0 + ay0_1) + ay0_2) + ay0_3) + ay0_4) + ay0_5) + ay0_6) + ay0_7
        acc_out[ip0, 2] = ((((((az0_0 + az0_1) + az0_2) + az0_3) + az0_4) + az0_5) + az0_6) + az0_7
        jerk_out[ip0, 0] = ((((((jx0_0 + jx0_1) + jx0_2) + jx0_3) + jx0_4) + jx0_5) + jx0_6) + jx0_7
        jerk_out[ip0, 1] = ((((((jy0_0 + jy0_1) + jy0_2) + jy0_3) + jy0_4) + jy0_5) + jy0_6) + jy0_7
        jerk_out[ip0, 2] = ((((((jz0_0 + jz0_1) + jz0_2) + jz0_3) + jz0_4) + jz0_5) + jz0_6) + jz0_7


@njit(cache=True, nogil=True, error_model="numpy", boundscheck=False)
def tile_gaj_2x4(i0, i1, j0, j1, mode, prm, x, y, z, vx, vy, vz, w, q, se, hs, eptr, eidx,
        use_excl, acc_out, jerk_out, counts, instrument, err):
    zero = prm[P_ZERO]
    soft = prm[P_SOFT]
    one = prm[P_ONE]
    azero = np.float64(0.0)
    for ib in range(i0, i1, 2):
        ip0 = ib + 0
        xi0 = x[ip0]; yi0 = y[ip0]; zi0 = z[ip0]
        vxi0 = vx[ip0]; vyi0 = vy[ip0]; vzi0 = vz[ip0]
        ax0_0 = ay0_0 = az0_0 = jx0_0 = jy0_0 = jz0_0 = azero
        ax0_1 = ay0_1 = az0_1 = jx0_1 = jy0_1 = jz0_1 = azero
        ax0_2 = ay0_2 = az0_2 = jx0_2 = jy0_2 = jz0_2 = azero
        ax0_3 = ay0_3 = az0_3 = jx0_3 = jy0_3 = jz0_3 = azero
        ip1 = ib + 1
        xi1 = x[ip1]; yi1 = y[ip1]; zi1 = z[ip1]
        vxi1 = vx[ip1]; vyi1 = vy[ip1]; vzi1 = vz[ip1]
        ax1_0 = ay1_0 = az1_0 = jx1_0 = jy1_0 = jz1_0 = azero
        ax1_1 = ay1_1 = az1_1 = jx1_1 = jy1_1 = jz1_1 = azero
        ax1_2 = ay1_2 = az1_2 = jx1_2 = jy1_2 = jz1_2 = azero
        ax1_3 = ay1_3 = az1_3 = jx1_3 = jy1_3 = jz1_3 = azero
        for jb in range(j0, j1, 128):
            bx0_0 = by0_0 = bz0_0 = kx0_0 = ky0_0 = kz0_0 = zero
            bx0_1 = by0_1 = bz0_1 = kx0_1 = ky0_1 = kz0_1 = zero
            bx0_2 = by0_2 = bz0_2 = kx0_2 = ky0_2 = kz0_2 = zero
            bx0_3 = by0_3 = bz0_3 = kx0_3 = ky0_3 = kz0_3 = zero
            bx1_0 = by1_0 = bz1_0 = kx1_0 = ky1_0 = kz1_0 = zero
            bx1_1 = by1_1 = bz1_1 = kx1_1 = ky1_1 = kz1_1 = zero
            bx1_2 = by1_2 = bz1_2 = kx1_2 = ky1_2 = kz1_2 = zero
            bx1_3 = by1_3 = bz1_3 = kx1_3 = ky1_3 = kz1_3 = zero
            for j in range(jb, min(jb + 128, j1), 4):
                xj0 = x[j + 0]; yj0 = y[j + 0]; zj0 = z[j + 0]
                wj0 = w[j + 0]
                vxj0 = vx[j + 0]; vyj0 = vy[j + 0]; vzj0 = vz[j + 0]
                xj1 = x[j + 1]; yj1 = y[j + 1]; zj1 = z[j + 1]
                wj1 = w[j + 1]
                vxj1 = vx[j + 1]; vyj1 = vy[j + 1]; vzj1 = vz[j + 1]
                xj2 = x[j + 2]; yj2 = y[j + 2]; zj2 = z[j + 2]
                wj2 = w[j + 2]
                vxj2 = vx[j + 2]; vyj2 = vy[j + 2]; vzj2 = vz[j + 2]
                xj3 = x[j + 3]; yj3 = y[j + 3]; zj3 = z[j + 3]
                wj3 = w[j + 3]
                vxj3 = vx[j + 3]; vyj3 = vy[j + 3]; vzj3 = vz[j + 3]
                jj = j + 0
                live = jj != ip0
                dx = xj0 - xi0; dy = yj0 - yi0; dz = zj0 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                dvx = vxj0 - vxi0; dvy = vyj0 - vyi0; dvz = vzj0 - vzi0
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj0 * s if live else zero
                bx0_0 += sw * dx
                by0_0 += sw * dy
                bz0_0 += sw * dz
                kx0_0 += sw * (dvx - t * dx)
                ky0_0 += sw * (dvy - t * dy)
                kz0_0 += sw * (dvz - t * dz)
                jj = j + 1
                live = jj != ip0
                dx = xj1 - xi0; dy = yj1 - yi0; dz = zj1 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                dvx = vxj1 - vxi0; dvy = vyj1 - vyi0; dvz = vzj1 - vzi0
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj1 * s if live else zero
                bx0_1 += sw * dx
                by0_1 += sw * dy
                bz0_1 += sw * dz
                kx0_1 += sw * (dvx - t * dx)
                ky0_1 += sw * (dvy - t * dy)
                kz0_1 += sw * (dvz - t * dz)
                jj = j + 2
                live = jj != ip0
                dx = xj2 - xi0; dy = yj2 - yi0; dz = zj2 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                dvx = vxj2 - vxi0; dvy = vyj2 - vyi0; dvz = vzj2 - vzi0
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj2 * s if live else zero
                bx0_2 += sw * dx
                by0_2 += sw * dy
                bz0_2 += sw * dz
                kx0_2 += sw * (dvx - t * dx)
                ky0_2 += sw * (dvy - t * dy)
                kz0_2 += sw * (dvz - t * dz)
                jj = j + 3
                live = jj != ip0
                dx = xj3 - xi0; dy = yj3 - yi0; dz = zj3 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                dvx = vxj3 - vxi0; dvy = vyj3 - vyi0; dvz = vzj3 - vzi0
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj3 * s if live else zero
                bx0_3 += sw * dx
                by0_3 += sw * dy
                bz0_3 += sw * dz
                kx0_3 += sw * (dvx - t * dx)
                ky0_3 += sw * (dvy - t * dy)
                kz0_3 += sw * (dvz - t * dz)
                jj = j + 0
                live = jj != ip1
                dx = xj0 - xi1; dy = yj0 - yi1; dz = zj0 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                dvx = vxj0 - vxi1; dvy = vyj0 - vyi1; dvz = vzj0 - vzi1
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj0 * s if live else zero
                bx1_0 += sw * dx
                by1_0 += sw * dy
                bz1_0 += sw * dz
                kx1_0 += sw * (dvx - t * dx)
                ky1_0 += sw * (dvy - t * dy)
                kz1_0 += sw * (dvz - t * dz)
                jj = j + 1
                live = jj != ip1
                dx = xj1 - xi1; dy = yj1 - yi1; dz = zj1 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                dvx = vxj1 - vxi1; dvy = vyj1 - vyi1; dvz = vzj1 - vzi1
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj1 * s if live else zero
                bx1_1 += sw * dx
                by1_1 += sw * dy
                bz1_1 += sw * dz
                kx1_1 += sw * (dvx - t * dx)
                ky1_1 += sw * (dvy - t * dy)
                kz1_1 += sw * (dvz - t * dz)
                jj = j + 2
                live = jj != ip1
                dx = xj2 - xi1; dy = yj2 - yi1; dz = zj2 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                dvx = vxj2 - vxi1; dvy = vyj2 - vyi1; dvz = vzj2 - vzi1
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj2 * s if live else zero
                bx1_2 += sw * dx
                by1_2 += sw * dy
                bz1_2 += sw * dz
                kx1_2 += sw * (dvx - t * dx)
                ky1_2 += sw * (dvy - t * dy)
                kz1_2 += sw * (dvz - t * dz)
                jj = j + 3
                live = jj != ip1
                dx = xj3 - xi1; dy = yj3 - yi1; dz = zj3 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                dvx = vxj3 - vxi1; dvy = vyj3 - vyi1; dvz = vzj3 - vzi1
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj3 * s if live else zero
                bx1_3 += sw * dx
                by1_3 += sw * dy
                bz1_3 += sw * dz
                kx1_3 += sw * (dvx - t * dx)
                ky1_3 += sw * (dvy - t * dy)
                kz1_3 += sw * (dvz - t * dz)
            ax0_0 += bx0_0
            jx0_0 += kx0_0
            ay0_0 += by0_0
            jy0_0 += ky0_0
            az0_0 += bz0_0
            jz0_0 += kz0_0
            ax0_1 += bx0_1
            jx0_1 += kx0_1
            ay0_1 += by0_1
            jy0_1 += ky0_1
            az0_1 += bz0_1
            jz0_1 += kz0_1
            ax0_2 += bx0_2
            jx0_2 += kx0_2
            ay0_2 += by0_2
            jy0_2 += ky0_2
            az0_2 += bz0_2
            jz0_2 += kz0_2
            ax0_3 += bx0_3
            jx0_3 += kx0_3
            ay0_3 += by0_3
            jy0_3 += ky0_3
            az0_3 += bz0_3
            jz0_3 += kz0_3
            ax1_0 += bx1_0
            jx1_0 += kx1_0
            ay1_0 += by1_0
            jy1_0 += ky1_0
            az1_0 += bz1_0
            jz1_0 += kz1_0
            ax1_1 += bx1_1
            jx1_1 += kx1_1
            ay1_1 += by1_1
            jy1_1 += ky1_1
            az1_1 += bz1_1
            jz1_1 += kz1_1
            ax1_2 += bx1_2
            jx1_2 += kx1_2
            ay1_2 += by1_2
            jy1_2 += ky1_2
            az1_2 += bz1_2
            jz1_2 += kz1_2
            ax1_3 += bx1_3
            jx1_3 += kx1_3
            ay1_3 += by1_3
            jy1_3 += ky1_3
            az1_3 += bz1_3
            jz1_3 += kz1_3
        if not abs(ax0_0 + ay0_0 + az0_0 + ax0_1 + ay0_1 + az0_1 + ax0_2 + ay0_2 + az0_2 + ax0_3 + ay0_3 + az0_3) < np.inf:
            _find_singular(ip0, j0, j1, x, y, z, soft, err)
        if not abs(ax1_0 + ay1_0 + az1_0 + ax1_1 + ay1_1 + az1_1 + ax1_2 + ay1_2 + az1_2 + ax1_3 + ay1_3 + az1_3) < np.inf:
            _find_singular(ip1, j0, j1, x, y, z, soft, err)
        acc_out[ip0, 0] = ((ax0_0 + ax0_1) + ax0_2) + ax0_3
        acc_out[ip0, 1] = ((ay0_0 + ay0_1) + ay0_2) + ay0_3
        acc_out[ip0, 2] = ((az0_0 + az0_1) + az0_2) + az0_3
        jerk_out[ip0, 0] = ((jx0_0 + jx0_1) + jx0_2) + jx0_3
        jerk_out[ip0, 1] = ((jy0_0 + jy0_1) + jy0_2) + jy0_3
        jerk_out[ip0, 2] = ((jz0_0 + jz0_1) + jz0_2) + jz0_3
        acc_out[ip1, 0] = ((ax1_0 + ax1_1) + ax1_2) + ax1_3
        acc_out[ip1, 1] = ((ay1_0 + ay1_1) + ay1_2) + ay1_3
        acc_out[ip1, 2] = ((az1_0 + az1_1) + az1_2) + az1_3
        jerk_out[ip1, 0] = ((jx1_0 + jx1_1) + jx1_2) + jx1_3
        jerk_out[ip1, 1] = ((jy1_0 + jy1_1) + jy1_2) + jy1_3
        jerk_out[ip1, 2] = ((jz1_0 + jz1_1) + jz1_2) + jz1_3


@njit(cache=True, nogil=True, error_model="numpy", boundscheck=False)
def tile_gaj_2x8(i0, i1, j0, j1, mode, prm, x, y, z, vx, vy, vz, w, q, se, hs, eptr, eidx,
        use_excl, acc_out, jerk_out, counts, instrument, err):
    zero = prm[P_ZERO]
    soft = prm[P_SOFT]
    one = prm[P_ONE]
    azero = np.float64(0.0)
    for ib in range(i0, i1, 2):
        ip0 = ib + 0
        xi0 = x[ip0]; yi0 = y[ip0]; zi0 = z[ip0]
        vxi0 = vx[ip0]; vyi0 = vy[ip0]; vzi0 = vz[ip0]
        ax0_0 = ay0_0 = az0_0 = jx0_0 = jy0_0 = jz0_0 = azero
        ax0_1 = ay0_1 = az0_1 = jx0_1 = jy0_1 = jz0_1 = azero
        ax0_2 = ay0_2 = az0_2 = jx0_2 = jy0_2 = jz0_2 = azero
        ax0_3 = ay0_3 = az0_3 = jx0_3 = jy0_3 = jz0_3 = azero
        ax0_4 = ay0_4 = az0_4 = jx0_4 = jy0_4 = jz0_4 = azero
        ax0_5 = ay0_5 = az0_5 = jx0_5 = jy0_5 = jz0_5 = azero
        ax0_6 = ay0_6 = az0_6 = jx0_6 = jy0_6 = jz0_6 = azero
        ax0_7 = ay0_7 = az0_7 = jx0_7 = jy0_7 = jz0_7 = azero
        ip1 = ib + 1
        xi1 = x[ip1]; yi1 = y[ip1]; zi1 = z[ip1]
        vxi1 = vx[ip1]; vyi1 = vy[ip1]; vzi1 = vz[ip1]
        ax1_0 = ay1_0 = az1_0 = jx1_0 = jy1_0 = jz1_0 = azero
        ax1_1 = ay1_1 = az1_1 = jx1_1 = jy1_1 = jz1_1 = azero
        ax1_2 = ay1_2 = az1_2 = jx1_2 = jy1_2 = jz1_2 = azero
        ax1_3 = ay1_3 = az1_3 = jx1_3 = jy1_3 = jz1_3 = azero
        ax1_4 = ay1_4 = az1_4 = jx1_4 = jy1_4 = jz1_4 = azero
        ax1_5 = ay1_5 = az1_5 = jx1_5 = jy1_5 = jz1_5 = azero
        ax1_6 = ay1_6 = az1_6 = jx1_6 = jy1_6 = jz1_6 = azero
        ax1_7 = ay1_7 = az1_7 = jx1_7 = jy1_7 = jz1_7 = azero
        for jb in range(j0, j1, 128):
            bx0_0 = by0_0 = bz0_0 = kx0_0 = ky0_0 = kz0_0 = zero
            bx0_1 = by0_1 = bz0_1 = kx0_1 = ky0_1 = kz0_1 = zero
            bx0_2 = by0_2 = bz0_2 = kx0_2 = ky0_2 = kz0_2 = zero
            bx0_3 = by0_3 = bz0_3 = kx0_3 = ky0_3 = kz0_3 = zero
            bx0_4 = by0_4 = bz0_4 = kx0_4 = ky0_4 = kz0_4 = zero
            bx0_5 = by0_5 = bz0_5 = kx0_5 = ky0_5 = kz0_5 = zero
            bx0_6 = by0_6 = bz0_6 = kx0_6 = ky0_6 = kz0_6 = zero
            bx0_7 = by0_7 = bz0_7 = kx0_7 = ky0_7 = kz0_7 = zero
            bx1_0 = by1_0 = bz1_0 = kx1_0 = ky1_0 = kz1_0 = zero
            bx1_1 = by1_1 = bz1_1 = kx1_1 = ky1_1 = kz1_1 = zero
            bx1_2 = by1_2 = bz1_2 = kx1_2 = ky1_2 = kz1_2 = zero
            bx1_3 = by1_3 = bz1_3 = kx1_3 = ky1_3 = kz1_3 = zero
            bx1_4 = by1_4 = bz1_4 = kx1_4 = ky1_4 = kz1_4 = zero
            bx1_5 = by1_5 = bz1_5 = kx1_5 = ky1_5 = kz1_5 = zero
            bx1_6 = by1_6 = bz1_6 = kx1_6 = ky1_6 = kz1_6 = zero
            bx1_7 = by1_7 = bz1_7 = kx1_7 = ky1_7 = kz1_7 = zero
            for j in range(jb, min(jb + 128, j1), 8):
                xj0 = x[j + 0]; yj0 = y[j + 0]; zj0 = z[j + 0]
                wj0 = w[j + 0]
                vxj0 = vx[j + 0]; vyj0 = vy[j + 0]; vzj0 = vz[j + 0]
                xj1 = x[j + 1]; yj1 = y[j + 1]; zj1 = z[j + 1]
                wj1 = w[j + 1]
                vxj1 = vx[j + 1]; vyj1 = vy[j + 1]; vzj1 = vz[j + 1]
                xj2 = x[j + 2]; yj2 = y[j + 2]; zj2 = z[j + 2]
                wj2 = w[j + 2]
                vxj2 = vx[j + 2]; vyj2 = vy[j + 2]; vzj2 = vz[j + 2]
                xj3 = x[j + 3]; yj3 = y[j + 3]; zj3 = z[j + 3]
                wj3 = w[j + 3]
                vxj3 = vx[j + 3]; vyj3 = vy[j + 3]; vzj3 = vz[j + 3]
                xj4 = x[j + 4]; yj4 = y[j + 4]; zj4 = z[j + 4]
                wj4 = w[j + 4]
                vxj4 = vx[j + 4]; vyj4 = vy[j + 4]; vzj4 = vz[j + 4]
                xj5 = x[j + 5]; yj5 = y[j + 5]; zj5 = z[j + 5]
                wj5 = w[j + 5]
                vxj5 = vx[j + 5]; vyj5 = vy[j + 5]; vzj5 = vz[j + 5]
                xj6 = x[j + 6]; yj6 = y[j + 6]; zj6 = z[j + 6]
                wj6 = w[j + 6]
                vxj6 = vx[j + 6]; vyj6 = vy[j + 6]; vzj6 = vz[j + 6]
                xj7 = x[j + 7]; yj7 = y[j + 7]; zj7 = z[j + 7]
                wj7 = w[j + 7]
                vxj7 = vx[j + 7]; vyj7 = vy[j + 7]; vzj7 = vz[j + 7]
                jj = j + 0
                live = jj != ip0
                dx = xj0 - xi0; dy = yj0 - yi0; dz = zj0 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                dvx = vxj0 - vxi0; dvy = vyj0 - vyi0; dvz = vzj0 - vzi0
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj0 * s if live else zero
                bx0_0 += sw * dx
                by0_0 += sw * dy
                bz0_0 += sw * dz
                kx0_0 += sw * (dvx - t * dx)
                ky0_0 += sw * (dvy - t * dy)
                kz0_0 += sw * (dvz - t * dz)
                jj = j + 1
                live = jj != ip0
                dx = xj1 - xi0; dy = yj1 - yi0; dz = zj1 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                dvx = vxj1 - vxi0; dvy = vyj1 - vyi0; dvz = vzj1 - vzi0
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj1 * s if live else zero
                bx0_1 += sw * dx
                by0_1 += sw * dy
                bz0_1 += sw * dz
                kx0_1 += sw * (dvx - t * dx)
                ky0_1 += sw * (dvy - t * dy)
                kz0_1 += sw * (dvz - t * dz)
                jj = j + 2
                live = jj != ip0
                dx = xj2 - xi0; dy = yj2 - yi0; dz = zj2 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                dvx = vxj2 - vxi0; dvy = vyj2 - vyi0; dvz = vzj2 - vzi0
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj2 * s if live else zero
                bx0_2 += sw * dx
                by0_2 += sw * dy
                bz0_2 += sw * dz
                kx0_2 += sw * (dvx - t * dx)
                ky0_2 += sw * (dvy - t * dy)
                kz0_2 += sw * (dvz - t * dz)
                jj = j + 3
                live = jj != ip0
                dx = xj3 - xi0; dy = yj3 - yi0; dz = zj3 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                dvx = vxj3 - vxi0; dvy = vyj3 - vyi0; dvz = vzj3 - vzi0
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj3 * s if live else zero
                bx0_3 += sw * dx
                by0_3 += sw * dy
                bz0_3 += sw * dz
                kx0_3 += sw * (dvx - t * dx)
                ky0_3 += sw * (dvy - t * dy)
                kz0_3 += sw * (dvz - t * dz)
                jj = j + 4
                live = jj != ip0
                dx = xj4 - xi0; dy = yj4 - yi0; dz = zj4 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                dvx = vxj4 - vxi0; dvy = vyj4 - vyi0; dvz = vzj4 - vzi0
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj4 * s if live else zero
                bx0_4 += sw * dx
                by0_4 += sw * dy
                bz0_4 += sw * dz
                kx0_4 += sw * (dvx - t * dx)
                ky0_4 += sw * (dvy - t * dy)
                kz0_4 += sw * (dvz - t * dz)
                jj = j + 5
                live = jj != ip0
                dx = xj5 - xi0; dy = yj5 - yi0; dz = zj5 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                dvx = vxj5 - vxi0; dvy = vyj5 - vyi0; dvz = vzj5 - vzi0
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj5 * s if live else zero
                bx0_5 += sw * dx
                by0_5 += sw * dy
                bz0_5 += sw * dz
                kx0_5 += sw * (dvx - t * dx)
                ky0_5 += sw * (dvy - t * dy)
                kz0_5 += sw * (dvz - t * dz)
                jj = j + 6
                live = jj != ip0
                dx = xj6 - xi0; dy = yj6 - yi0; dz = zj6 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                dvx = vxj6 - vxi0; dvy = vyj6 - vyi0; dvz = vzj6 - vzi0
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj6 * s if live else zero
                bx0_6 += sw * dx
                by0_6 += sw * dy
                bz0_6 += sw * dz
                kx0_6 += sw * (dvx - t * dx)
                ky0_6 += sw * (dvy - t * dy)
                kz0_6 += sw * (dvz - t * dz)
                jj = j + 7
                live = jj != ip0
                dx = xj7 - xi0; dy = yj7 - yi0; dz = zj7 - zi0
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip0, jj] += 1
                r2 = r2 if live else one
                dvx = vxj7 - vxi0; dvy = vyj7 - vyi0; dvz = vzj7 - vzi0
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj7 * s if live else zero
                bx0_7 += sw * dx
                by0_7 += sw * dy
                bz0_7 += sw * dz
                kx0_7 += sw * (dvx - t * dx)
                ky0_7 += sw * (dvy - t * dy)
                kz0_7 += sw * (dvz - t * dz)
                jj = j + 0
                live = jj != ip1
                dx = xj0 - xi1; dy = yj0 - yi1; dz = zj0 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                dvx = vxj0 - vxi1; dvy = vyj0 - vyi1; dvz = vzj0 - vzi1
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj0 * s if live else zero
                bx1_0 += sw * dx
                by1_0 += sw * dy
                bz1_0 += sw * dz
                kx1_0 += sw * (dvx - t * dx)
                ky1_0 += sw * (dvy - t * dy)
                kz1_0 += sw * (dvz - t * dz)
                jj = j + 1
                live = jj != ip1
                dx = xj1 - xi1; dy = yj1 - yi1; dz = zj1 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                dvx = vxj1 - vxi1; dvy = vyj1 - vyi1; dvz = vzj1 - vzi1
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj1 * s if live else zero
                bx1_1 += sw * dx
                by1_1 += sw * dy
                bz1_1 += sw * dz
                kx1_1 += sw * (dvx - t * dx)
                ky1_1 += sw * (dvy - t * dy)
                kz1_1 += sw * (dvz - t * dz)
                jj = j + 2
                live = jj != ip1
                dx = xj2 - xi1; dy = yj2 - yi1; dz = zj2 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                dvx = vxj2 - vxi1; dvy = vyj2 - vyi1; dvz = vzj2 - vzi1
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj2 * s if live else zero
                bx1_2 += sw * dx
                by1_2 += sw * dy
                bz1_2 += sw * dz
                kx1_2 += sw * (dvx - t * dx)
                ky1_2 += sw * (dvy - t * dy)
                kz1_2 += sw * (dvz - t * dz)
                jj = j + 3
                live = jj != ip1
                dx = xj3 - xi1; dy = yj3 - yi1; dz = zj3 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                dvx = vxj3 - vxi1; dvy = vyj3 - vyi1; dvz = vzj3 - vzi1
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj3 * s if live else zero
                bx1_3 += sw * dx
                by1_3 += sw * dy
                bz1_3 += sw * dz
                kx1_3 += sw * (dvx - t * dx)
                ky1_3 += sw * (dvy - t * dy)
                kz1_3 += sw * (dvz - t * dz)
                jj = j + 4
                live = jj != ip1
                dx = xj4 - xi1; dy = yj4 - yi1; dz = zj4 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                dvx = vxj4 - vxi1; dvy = vyj4 - vyi1; dvz = vzj4 - vzi1
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj4 * s if live else zero
                bx1_4 += sw * dx
                by1_4 += sw * dy
                bz1_4 += sw * dz
                kx1_4 += sw * (dvx - t * dx)
                ky1_4 += sw * (dvy - t * dy)
                kz1_4 += sw * (dvz - t * dz)
                jj = j + 5
                live = jj != ip1
                dx = xj5 - xi1; dy = yj5 - yi1; dz = zj5 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                dvx = vxj5 - vxi1; dvy = vyj5 - vyi1; dvz = vzj5 - vzi1
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj5 * s if live else zero
                bx1_5 += sw * dx
                by1_5 += sw * dy
                bz1_5 += sw * dz
                kx1_5 += sw * (dvx - t * dx)
                ky1_5 += sw * (dvy - t * dy)
                kz1_5 += sw * (dvz - t * dz)
                jj = j + 6
                live = jj != ip1
                dx = xj6 - xi1; dy = yj6 - yi1; dz = zj6 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                dvx = vxj6 - vxi1; dvy = vyj6 - vyi1; dvz = vzj6 - vzi1
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj6 * s if live else zero
                bx1_6 += sw * dx
                by1_6 += sw * dy
                bz1_6 += sw * dz
                kx1_6 += sw * (dvx - t * dx)
                ky1_6 += sw * (dvy - t * dy)
                kz1_6 += sw * (dvz - t * dz)
                jj = j + 7
                live = jj != ip1
                dx = xj7 - xi1; dy = yj7 - yi1; dz = zj7 - zi1
                r2 = dx * dx + dy * dy + dz * dz + soft
                if instrument and live:
                    counts[ip1, jj] += 1
                r2 = r2 if live else one
                dvx = vxj7 - vxi1; dvy = vyj7 - vyi1; dvz = vzj7 - vzi1
                s, t = _interaction(1, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)
                sw = wj7 * s if live else zero
                bx1_7 += sw * dx
                by1_7 += sw * dy
                bz1_7 += sw * dz
                kx1_7 += sw * (dvx - t * dx)
                ky1_7 += sw * (dvy - t * dy)
                kz1_7 += sw * (dvz - t * dz)
            ax0_0 += bx0_0
            jx0_0 += kx0_0
            ay0_0 += by0_0
            jy0_0 += ky0_0
            az0_0 += bz0_0
            jz0_0 += kz0_0
            ax0_1 += bx0_1
            jx0_1 += kx0_1
            ay0_1 += by0_1
            jy0_1 += ky0_1
            az0_1 += bz0_1
            jz0_1 += kz0_1
            ax0_2 += bx0_2
            jx0_2 += kx0_2
            ay0_2 += by0_2
            jy0_2 += ky0_2
            az0_2 += bz0_2
            jz0_2 += kz0_2
            ax0_3 += bx0_3
            jx0_3 += kx0_3
            ay0_3 += by0_3
            jy0_3 += ky0_3
            az0_3 += bz0_3
            jz0_3 += kz0_3
            ax0_4 += bx0_4
            jx0_4 += kx0_4
            ay0_4 += by0_4
            jy0_4 += ky0_4
            az0_4 += bz0_4
            jz0_4 += kz0_4
            ax0_5 += bx0_5
            jx0_5 += kx0_5
            ay0_5 += by0_5
            jy0_5 += ky0_5
            az0_5 += bz0_5
            jz0_5 += kz0_5
            ax0_6 += bx0_6
            jx0_6 += kx0_6
            ay0_6 += by0_6
            jy0_6 += ky0_6
            az0_6 += bz0_6
            jz0_6 += kz0_6
            ax0_7 += bx0_7
            jx0_7 += kx0_7
            ay0_7 += by0_7
            jy0_7 += ky0_7
            az0_7 += bz0_7
            jz0_7 += kz0_7
            ax1_0 += bx1_0
            jx1_0 += kx1_0
            ay1_0 += by1_0
            jy1_0 += ky1_0
            az1_0 += bz1_0
            jz1_0 += kz1_0
            ax1_1 += bx1_1
            jx1_1 += kx1_1
            ay1_1 += by1_1
            jy1_1 += ky1_1
            az1_1 += bz1_1
            jz1_1 += kz1_1
            ax1_2 += bx1_2
            jx1_2 += kx1_2
            ay1_2 += by1_2
            jy1_2 += ky1_2
            az1_2 += bz1_2
            jz1_2 += kz1_2
            ax1_3 += bx1_3
            jx1_3 += kx1_3
            ay1_3 += by1_3
            jy1_3 += ky1_3
            az1_3 += bz1_3
            jz1_3 += kz1_3
            ax1_4 += bx1_4
            jx1_4 += kx1_4
            ay1_4 += by1_4
            jy1_4 += ky1_4
            az1_4 += bz1_4
            jz1_4 += kz1_4
            ax1_5 += bx1_5
            jx1_5 += kx1_5
            ay1_5 += by1_5
            jy1_5 += ky1_5
            az1_5 += bz1_5
            jz1_5 += kz1_5
            ax1_6 += bx1_6
            jx1_6 += kx1_6
            ay1_6 += by1_6
            jy1_6 += ky1_6
            az1_6 += bz1_6
            jz1_6 += kz1_6
            ax1_7 += bx1_7
            jx1_7 += kx1_7
            ay1_7 += by1_7
            jy1_7 += ky1_7
            az1_7 += bz1_7
            jz1_7 += kz1_7
        if not abs(ax0_0 + ay0_0 + az0_0 + ax0_1 + ay0_1 + az0_1 + ax0_2 + ay0_2 + az0_2 + ax0_3 + ay0_3 + az0_3 + ax0_4 + ay0_4 + az0_4 + ax0_5 + ay0_5 + az0_5 + ax0_6 + ay0_6 + az0_6 + ax0_7 + ay0_7 + az0_7) < np.inf:
            _find_singular(ip0, j0, j1, x, y, z, soft, err)
        if not abs(ax1_0 + ay1_0 + az1_0 + ax1_1 + ay1_1 + az1_1 + ax1_2 + ay1_2 + az1_2 + ax1_3 + ay1_3 + az1_3 + ax1_4 + ay1_4 + az1_4 + ax1_5 + ay1_5 + az1_5 + ax1_6 + ay1_6 + az1_6 + ax1_7 + ay1_7 + az1_7) < np.inf:
            _find_singular(ip1, j0, j1, x, y, z, soft, err)
        acc_out[ip0, 0] = ((((((ax0_0 + ax0_1) + ax0_2) + ax0_3) + ax0_4) + ax0_5) + ax0_6) + ax0_7
        acc_out[ip0, 1] = ((((((ay0_0 + ay0_1) + ay0_2) + ay0_3) + ay0_4) + ay0_5) + ay0_6) + ay0_7
        acc_out[ip0, 2] = ((((((az0_0 + az0_1) + az0_2) + az0_3) + az0_4) + az0_5) + az0_6) + az0_7
        jerk_out[ip0, 0] = ((((((jx0_0 + jx0_1) + jx0_2) + jx0_3) + jx0_4) + jx0_5) + jx0_6) + jx0_7
        jerk_out[ip0, 1] = ((((((jy0_0 + jy0_1) + jy0_2) + jy0_3) + jy0_4) + jy0_5) + jy0_6) + jy0_7
        jerk_out[ip0, 2] = ((((((jz0_0 + jz0_1) + jz0_2) + jz0_3) + jz0_4) + jz0_5) + jz0_6) + jz0_7
        acc_out[ip1, 0] = ((((((ax1_0 + ax1_1) + ax1_2) + ax1_3) + ax1_4) + ax1_5) + ax1_6) + ax1_7
        acc_out[ip1, 1] = ((((((ay1_0 + ay1_1) + ay1_2) + ay1_3) + ay1_4) + ay1_5) + ay1_6) + ay1_7
        acc_out[ip1, 2] = ((((((az1_0 + az1_1) + az1_2) + az1_3) + az1_4) + az1_5) + az1_6) + az1_7
        jerk_out[ip1, 0] = ((((((jx1_0 + jx1_1) + jx1_2) + jx1_3) + jx1_4) + jx1_5) + jx1_6) + jx1_7
        jerk_out[ip1, 1] = ((((((jy1_0 + jy1_1) + jy1_2) + jy1_3) + jy1_4) + jy1_5) + jy1_6) + jy1_7
        jerk_out[ip1, 2] = ((((((jz1_0 + jz1_1) + jz1_2) + jz1_3) + jz1_4) + jz1_5) + jz1_6) + jz1_7


@njit(cache=True, nogil=True, error_model="numpy", boundscheck=False)
def tile_ljc_1x1(i0, i1, j0, j1, mode, prm, x, y, z, vx, vy, vz, w, q, se, hs, eptr, eidx,
        use_excl, acc_out, jerk_out, counts, instrument, err):
    zero = prm[P_ZERO]
    soft = prm[P_SOFT]
    one = prm[P_ONE]
    azero = np.float64(0.0)
    for ib in range(i0, i1, 1):
        ip0 = ib + 0
        xi0 = x[ip0]; yi0 = y[ip0]; zi0 = z[ip0]
        qi0 = q[ip0]; sei0 = se[ip0]; hsi0 = hs[ip0]
        p0 = eptr[ip0]; e0 = eptr[ip0 + 1]
        while p0 < e0 and eidx[p0] < j0:
            p0 += 1
        ax0_0 = ay0_0 = az0_0 = azero
        for jb in range(j0, j1, 128):
            bx0_0 = by0_0 = bz0_0 = zero
            for j in range(jb, min(jb + 128, j1), 1):
                xj0 = x[j + 0]; yj0 = y[j + 0]; zj0 = z[j + 0]
                qj0 = q[j + 0]; sej0 = se[j + 0]; hsj0 = hs[j + 0]
                jj = j + 0
                live = jj != ip0
                if live and use_excl:
                    while p0 < e0 and eidx[p0] < jj:
                        p0 += 1
                    live = not (p0 < e0 and eidx[p0] == jj)
                if live:
                    dx = xj0 - xi0; dy = yj0 - yi0; dz = zj0 - zi0
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip0; err[1] = jj
                    if instrument:
                        counts[ip0, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi0, qj0, sei0, sej0, hsi0, hsj0)
                    sw = s
                    bx0_0 += sw * dx
                    by0_0 += sw * dy
                    bz0_0 += sw * dz
            ax0_0 += bx0_0
            ay0_0 += by0_0
            az0_0 += bz0_0
        acc_out[ip0, 0] = ax0_0
        acc_out[ip0, 1] = ay0_0
        acc_out[ip0, 2] = az0_0


@njit(cache=True, nogil=True, error_model="numpy", boundscheck=False)
def tile_ljc_1x4(i0, i1, j0, j1, mode, prm, x, y, z, vx, vy, vz, w, q, se, hs, eptr, eidx,
        use_excl, acc_out, jerk_out, counts, instrument, err):
    zero = prm[P_ZERO]
    soft = prm[P_SOFT]
    one = prm[P_ONE]
    azero = np.float64(0.0)
    for ib in range(i0, i1, 1):
        ip0 = ib + 0
        xi0 = x[ip0]; yi0 = y[ip0]; zi0 = z[ip0]
        qi0 = q[ip0]; sei0 = se[ip0]; hsi0 = hs[ip0]
        p0 = eptr[ip0]; e0 = eptr[ip0 + 1]
        while p0 < e0 and eidx[p0] < j0:
            p0 += 1
        ax0_0 = ay0_0 = az0_0 = azero
        ax0_1 = ay0_1 = az0_1 = azero
        ax0_2 = ay0_2 = az0_2 = azero
        ax0_3 = ay0_3 = az0_3 = azero
        for jb in range(j0, j1, 128):
            bx0_0 = by0_0 = bz0_0 = zero
            bx0_1 = by0_1 = bz0_1 = zero
            bx0_2 = by0_2 = bz0_2 = zero
            bx0_3 = by0_3 = bz0_3 = zero
            for j in range(jb, min(jb + 128, j1), 4):
                xj0 = x[j + 0]; yj0 = y[j + 0]; zj0 = z[j + 0]
                qj0 = q[j + 0]; sej0 = se[j + 0]; hsj0 = hs[j + 0]
                xj1 = x[j + 1]; yj1 = y[j + 1]; zj1 = z[j + 1]
                qj1 = q[j + 1]; sej1 = se[j + 1]; hsj1 = hs[j + 1]
                xj2 = x[j + 2]; yj2 = y[j + 2]; zj2 = z[j + 2]
                qj2 = q[j + 2]; sej2 = se[j + 2]; hsj2 = hs[j + 2]
                xj3 = x[j + 3]; yj3 = y[j + 3]; zj3 = z[j + 3]
                qj3 = q[j + 3]; sej3 = se[j + 3]; hsj3 = hs[j + 3]
                jj = j + 0
                live = jj != ip0
                if live and use_excl:
                    while p0 < e0 and eidx[p0] < jj:
                        p0 += 1
                    live = not (p0 < e0 and eidx[p0] == jj)
                if live:
                    dx = xj0 - xi0; dy = yj0 - yi0; dz = zj0 - zi0
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip0; err[1] = jj
                    if instrument:
                        counts[ip0, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi0, qj0, sei0, sej0, hsi0, hsj0)
                    sw = s
                    bx0_0 += sw * dx
                    by0_0 += sw * dy
                    bz0_0 += sw * dz
                jj = j + 1
                live = jj != ip0
                if live and use_excl:
                    while p0 < e0 and eidx[p0] < jj:
                        p0 += 1
                    live = not (p0 < e0 and eidx[p0] == jj)
                if live:
                    dx = xj1 - xi0; dy = yj1 - yi0; dz = zj1 - zi0
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip0; err[1] = jj
                    if instrument:
                        counts[ip0, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi0, qj1, sei0, sej1, hsi0, hsj1)
                    sw = s
                    bx0_1 += sw * dx
                    by0_1 += sw * dy
                    bz0_1 += sw * dz
                jj = j + 2
                live = jj != ip0
                if live and use_excl:
                    while p0 < e0 and eidx[p0] < jj:
                        p0 += 1
                    live = not (p0 < e0 and eidx[p0] == jj)
                if live:
                    dx = xj2 - xi0; dy = yj2 - yi0; dz = zj2 - zi0
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip0; err[1] = jj
                    if instrument:
                        counts[ip0, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi0, qj2, sei0, sej2, hsi0, hsj2)
                    sw = s
                    bx0_2 += sw * dx
                    by0_2 += sw * dy
                    bz0_2 += sw * dz
                jj = j + 3
                live = jj != ip0
                if live and use_excl:
                    while p0 < e0 and eidx[p0] < jj:
                        p0 += 1
                    live = not (p0 < e0 and eidx[p0] == jj)
                if live:
                    dx = xj3 - xi0; dy = yj3 - yi0; dz = zj3 - zi0
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip0; err[1] = jj
                    if instrument:
                        counts[ip0, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi0, qj3, sei0, sej3, hsi0, hsj3)
                    sw = s
                    bx0_3 += sw * dx
                    by0_3 += sw * dy
                    bz0_3 += sw * dz
            ax0_0 += bx0_0
            ay0_0 += by0_0
            az0_0 += bz0_0
            ax0_1 += bx0_1
            ay0_1 += by0_1
            az0_1 += bz0_1
            ax0_2 += bx0_2
            ay0_2 += by0_2
            az0_2 += bz0_2
            ax0_3 += bx0_3
            ay0_3 += by0_3
            az0_3 += bz0_3
        acc_out[ip0, 0] = ((ax0_0 + ax0_1) + ax0_2) + ax0_3
        acc_out[ip0, 1] = ((ay0_0 + ay0_1) + ay0_2) + ay0_3
        acc_out[ip0, 2] = ((az0_0 + az0_1) + az0_2) + az0_3


@njit(cache=True, nogil=True, error_model="numpy", boundscheck=False)
def tile_ljc_1x8(i0, i1, j0, j1, mode, prm, x, y, z, vx, vy, vz, w, q, se, hs, eptr, eidx,
        use_excl, acc_out, jerk_out, counts, instrument, err):
    zero = prm[P_ZERO]
    soft = prm[P_SOFT]
    one = prm[P_ONE]
    azero = np.float64(0.0)
    for ib in range(i0, i1, 1):
        ip0 = ib + 0
        xi0 = x[ip0]; yi0 = y[ip0]; zi0 = z[ip0]
        qi0 = q[ip0]; sei0 = se[ip0]; hsi0 = hs[ip0]
        p0 = eptr[ip0]; e0 = eptr[ip0 + 1]
        while p0 < e0 and eidx[p0] < j0:
            p0 += 1
        ax0_0 = ay0_0 = az0_0 = azero
        ax0_1 = ay0_1 = az0_1 = azero
        ax0_2 = ay0_2 = az0_2 = azero
        ax0_3 = ay0_3 = az0_3 = azero
        ax0_4 = ay0_4 = az0_4 = azero
        ax0_5 = ay0_5 = az0_5 = azero
        ax0_6 = ay0_6 = az0_6 = azero
        ax0_7 = ay0_7 = az0_7 = azero
        for jb in range(j0, j1, 128):
            bx0_0 = by0_0 = bz0_0 = zero
            bx0_1 = by0_1 = bz0_1 = zero
            bx0_2 = by0_2 = bz0_2 = zero
            bx0_3 = by0_3 = bz0_3 = zero
            bx0_4 = by0_4 = bz0_4 = zero
            bx0_5 = by0_5 = bz0_5 = zero
            bx0_6 = by0_6 = bz0_6 = zero
            bx0_7 = by0_7 = bz0_7 = zero
            for j in range(jb, min(jb + 128, j1), 8):
                xj0 = x[j + 0]; yj0 = y[j + 0]; zj0 = z[j + 0]
                qj0 = q[j + 0]; sej0 = se[j + 0]; hsj0 = hs[j + 0]
                xj1 = x[j + 1]; yj1 = y[j + 1]; zj1 = z[j + 1]
                qj1 = q[j + 1]; sej1 = se[j + 1]; hsj1 = hs[j + 1]
                xj2 = x[j + 2]; yj2 = y[j + 2]; zj2 = z[j + 2]
                qj2 = q[j + 2]; sej2 = se[j + 2]; hsj2 = hs[j + 2]
                xj3 = x[j + 3]; yj3 = y[j + 3]; zj3 = z[j + 3]
                qj3 = q[j + 3]; sej3 = se[j + 3]; hsj3 = hs[j + 3]
                xj4 = x[j + 4]; yj4 = y[j + 4]; zj4 = z[j + 4]
                qj4 = q[j + 4]; sej4 = se[j + 4]; hsj4 = hs[j + 4]
                xj5 = x[j + 5]; yj5 = y[j + 5]; zj5 = z[j + 5]
                qj5 = q[j + 5]; sej5 = se[j + 5]; hsj5 = hs[j + 5]
                xj6 = x[j + 6]; yj6 = y[j + 6]; zj6 = z[j + 6]
                qj6 = q[j + 6]; sej6 = se[j + 6]; hsj6 = hs[j + 6]
                xj7 = x[j + 7]; yj7 = y[j + 7]; zj7 = z[j + 7]
                qj7 = q[j + 7]; sej7 = se[j + 7]; hsj7 = hs[j + 7]
                jj = j + 0
                live = jj != ip0
                if live and use_excl:
                    while p0 < e0 and eidx[p0] < jj:
                        p0 += 1
                    live = not (p0 < e0 and eidx[p0] == jj)
                if live:
                    dx = xj0 - xi0; dy = yj0 - yi0; dz = zj0 - zi0
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip0; err[1] = jj
                    if instrument:
                        counts[ip0, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi0, qj0, sei0, sej0, hsi0, hsj0)
                    sw = s
                    bx0_0 += sw * dx
                    by0_0 += sw * dy
                    bz0_0 += sw * dz
                jj = j + 1
                live = jj != ip0
                if live and use_excl:
                    while p0 < e0 and eidx[p0] < jj:
                        p0 += 1
                    live = not (p0 < e0 and eidx[p0] == jj)
                if live:
                    dx = xj1 - xi0; dy = yj1 - yi0; dz = zj1 - zi0
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip0; err[1] = jj
                    if instrument:
                        counts[ip0, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi0, qj1, sei0, sej1, hsi0, hsj1)
                    sw = s
                    bx0_1 += sw * dx
                    by0_1 += sw * dy
                    bz0_1 += sw * dz
                jj = j + 2
                live = jj != ip0
                if live and use_excl:
                    while p0 < e0 and eidx[p0] < jj:
                        p0 += 1
                    live = not (p0 < e0 and eidx[p0] == jj)
                if live:
                    dx = xj2 - xi0; dy = yj2 - yi0; dz = zj2 - zi0
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip0; err[1] = jj
                    if instrument:
                        counts[ip0, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi0, qj2, sei0, sej2, hsi0, hsj2)
                    sw = s
                    bx0_2 += sw * dx
                    by0_2 += sw * dy
                    bz0_2 += sw * dz
                jj = j + 3
                live = jj != ip0
                if live and use_excl:
                    while p0 < e0 and eidx[p0] < jj:
                        p0 += 1
                    live = not (p0 < e0 and eidx[p0] == jj)
                if live:
                    dx = xj3 - xi0; dy = yj3 - yi0; dz = zj3 - zi0
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip0; err[1] = jj
                    if instrument:
                        counts[ip0, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi0, qj3, sei0, sej3, hsi0, hsj3)
                    sw = s
                    bx0_3 += sw * dx
                    by0_3 += sw * dy
                    bz0_3 += sw * dz
                jj = j + 4
                live = jj != ip0
                if live and use_excl:
                    while p0 < e0 and eidx[p0] < jj:
                        p0 += 1
                    live = not (p0 < e0 and eidx[p0] == jj)
                if live:
                    dx = xj4 - xi0; dy = yj4 - yi0; dz = zj4 - zi0
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip0; err[1] = jj
                    if instrument:
                        counts[ip0, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi0, qj4, sei0, sej4, hsi0, hsj4)
                    sw = s
                    bx0_4 += sw * dx
                    by0_4 += sw * dy
                    bz0_4 += sw * dz
                jj = j + 5
                live = jj != ip0
                if live and use_excl:
                    while p0 < e0 and eidx[p0] < jj:
                        p0 += 1
                    live = not (p0 < e0 and eidx[p0] == jj)
                if live:
                    dx = xj5 - xi0; dy = yj5 - yi0; dz = zj5 - zi0
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip0; err[1] = jj
                    if instrument:
                        counts[ip0, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi0, qj5, sei0, sej5, hsi0, hsj5)
                    sw = s
                    bx0_5 += sw * dx
                    by0_5 += sw * dy
                    bz0_5 += sw * dz
                jj = j + 6
                live = jj != ip0
                if live and use_excl:
                    while p0 < e0 and eidx[p0] < jj:
                        p0 += 1
                    live = not (p0 < e0 and eidx[p0] == jj)
                if live:
                    dx = xj6 - xi0; dy = yj6 - yi0; dz = zj6 - zi0
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip0; err[1] = jj
                    if instrument:
                        counts[ip0, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi0, qj6, sei0, sej6, hsi0, hsj6)
                    sw = s
                    bx0_6 += sw * dx
                    by0_6 += sw * dy
                    bz0_6 += sw * dz
                jj = j + 7
                live = jj != ip0
                if live and use_excl:
                    while p0 < e0 and eidx[p0] < jj:
                        p0 += 1
                    live = not (p0 < e0 and eidx[p0] == jj)
                if live:
                    dx = xj7 - xi0; dy = yj7 - yi0; dz = zj7 - zi0
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip0; err[1] = jj
                    if instrument:
                        counts[ip0, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi0, qj7, sei0, sej7, hsi0, hsj7)
                    sw = s
                    bx0_7 += sw * dx
                    by0_7 += sw * dy
                    bz0_7 += sw * dz
            ax0_0 += bx0_0
            ay0_0 += by0_0
            az0_0 += bz0_0
            ax0_1 += bx0_1
            ay0_1 += by0_1
            az0_1 += bz0_1
            ax0_2 += bx0_2
            ay0_2 += by0_2
            az0_2 += bz0_2
            ax0_3 += bx0_3
            ay0_3 += by0_3
            az0_3 += bz0_3
            ax0_4 += bx0_4
            ay0_4 += by0_4
            az0_4 += bz0_4
            ax0_5 += bx0_5
            ay0_5 += by0_5
            az0_5 += bz0_5
            ax0_6 += bx0_6
            ay0_6 += by0_6
            az0_6 += bz0_6
            ax0_7 += bx0_7
            ay0_7 += by0_7
            az0_7 += bz0_7
        acc_out[ip0, 0] = ((((((ax0_0 + ax0_1) + ax0_2) + ax0_3) + ax0_4) + ax0_5) + ax0_6) + ax0_7
        acc_out[ip0, 1] = ((((((ay0_0 + ay0_1) + ay0_2) + ay0_3) + ay0_4) + ay0_5) + ay0_6) + ay0_7
        acc_out[ip0, 2] = ((((((az0_0 + az0_1) + az0_2) + az0_3) + az0_4) + az0_5) + az0_6) + az0_7


@njit(cache=True, nogil=True, error_model="numpy", boundscheck=False)
def tile_ljc_2x4(i0, i1, j0, j1, mode, prm, x, y, z, vx, vy, vz, w, q, se, hs, eptr, eidx,
        use_excl, acc_out, jerk_out, counts, instrument, err):
    zero = prm[P_ZERO]
    soft = prm[P_SOFT]
    one = prm[P_ONE]
    azero = np.float64(0.0)
    for ib in range(i0, i1, 2):
        ip0 = ib + 0
        xi0 = x[ip0]; yi0 = y[ip0]; zi0 = z[ip0]
        qi0 = q[ip0]; sei0 = se[ip0]; hsi0 = hs[ip0]
        p0 = eptr[ip0]; e0 = eptr[ip0 + 1]
        while p0 < e0 and eidx[p0] < j0:
            p0 += 1
        ax0_0 = ay0_0 = az0_0 = azero
        ax0_1 = ay0_1 = az0_1 = azero
        ax0_2 = ay0_2 = az0_2 = azero
        ax0_3 = ay0_3 = az0_3 = azero
        ip1 = ib + 1
        xi1 = x[ip1]; yi1 = y[ip1]; zi1 = z[ip1]
        qi1 = q[ip1]; sei1 = se[ip1]; hsi1 = hs[ip1]
        p1 = eptr[ip1]; e1 = eptr[ip1 + 1]
        while p1 < e1 and eidx[p1] < j0:
            p1 += 1
        ax1_0 = ay1_0 = az1_0 = azero
        ax1_1 = ay1_1 = az1_1 = azero
        ax1_2 = ay1_2 = az1_2 = azero
        ax1_3 = ay1_3 = az1_3 = azero
        for jb in range(j0, j1, 128):
            bx0_0 = by0_0 = bz0_0 = zero
            bx0_1 = by0_1 = bz0_1 = zero
            bx0_2 = by0_2 = bz0_2 = zero
            bx0_3 = by0_3 = bz0_3 = zero
            bx1_0 = by1_0 = bz1_0 = zero
            bx1_1 = by1_1 = bz1_1 = zero
            bx1_2 = by1_2 = bz1_2 = zero
            bx1_3 = by1_3 = bz1_3 = zero
            for j in range(jb, min(jb + 128, j1), 4):
                xj0 = x[j + 0]; yj0 = y[j + 0]; zj0 = z[j + 0]
                qj0 = q[j + 0]; sej0 = se[j + 0]; hsj0 = hs[j + 0]
                xj1 = x[j + 1]; yj1 = y[j + 1]; zj1 = z[j + 1]
                qj1 = q[j + 1]; sej1 = se[j + 1]; hsj1 = hs[j + 1]
                xj2 = x[j + 2]; yj2 = y[j + 2]; zj2 = z[j + 2]
                qj2 = q[j + 2]; sej2 = se[j + 2]; hsj2 = hs[j + 2]
                xj3 = x[j + 3]; yj3 = y[j + 3]; zj3 = z[j + 3]
                qj3 = q[j + 3]; sej3 = se[j + 3]; hsj3 = hs[j + 3]
                jj = j + 0
                live = jj != ip0
                if live and use_excl:
                    while p0 < e0 and eidx[p0] < jj:
                        p0 += 1
                    live = not (p0 < e0 and eidx[p0] == jj)
                if live:
                    dx = xj0 - xi0; dy = yj0 - yi0; dz = zj0 - zi0
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip0; err[1] = jj
                    if instrument:
                        counts[ip0, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi0, qj0, sei0, sej0, hsi0, hsj0)
                    sw = s
                    bx0_0 += sw * dx
                    by0_0 += sw * dy
                    bz0_0 += sw * dz
                jj = j + 1
                live = jj != ip0
                if live and use_excl:
                    while p0 < e0 and eidx[p0] < jj:
                        p0 += 1
                    live = not (p0 < e0 and eidx[p0] == jj)
                if live:
                    dx = xj1 - xi0; dy = yj1 - yi0; dz = zj1 - zi0
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip0; err[1] = jj
                    if instrument:
                        counts[ip0, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi0, qj1, sei0, sej1, hsi0, hsj1)
                    sw = s
                    bx0_1 += sw * dx
                    by0_1 += sw * dy
                    bz0_1 += sw * dz
                jj = j + 2
                live = jj != ip0
                if live and use_excl:
                    while p0 < e0 and eidx[p0] < jj:
                        p0 += 1
                    live = not (p0 < e0 and eidx[p0] == jj)
                if live:
                    dx = xj2 - xi0; dy = yj2 - yi0; dz = zj2 - zi0
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip0; err[1] = jj
                    if instrument:
                        counts[ip0, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi0, qj2, sei0, sej2, hsi0, hsj2)
                    sw = s
                    bx0_2 += sw * dx
                    by0_2 += sw * dy
                    bz0_2 += sw * dz
                jj = j + 3
                live = jj != ip0
                if live and use_excl:
                    while p0 < e0 and eidx[p0] < jj:
                        p0 += 1
                    live = not (p0 < e0 and eidx[p0] == jj)
                if live:
                    dx = xj3 - xi0; dy = yj3 - yi0; dz = zj3 - zi0
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip0; err[1] = jj
                    if instrument:
                        counts[ip0, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi0, qj3, sei0, sej3, hsi0, hsj3)
                    sw = s
                    bx0_3 += sw * dx
                    by0_3 += sw * dy
                    bz0_3 += sw * dz
                jj = j + 0
                live = jj != ip1
                if live and use_excl:
                    while p1 < e1 and eidx[p1] < jj:
                        p1 += 1
                    live = not (p1 < e1 and eidx[p1] == jj)
                if live:
                    dx = xj0 - xi1; dy = yj0 - yi1; dz = zj0 - zi1
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip1; err[1] = jj
                    if instrument:
                        counts[ip1, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi1, qj0, sei1, sej0, hsi1, hsj0)
                    sw = s
                    bx1_0 += sw * dx
                    by1_0 += sw * dy
                    bz1_0 += sw * dz
                jj = j + 1
                live = jj != ip1
                if live and use_excl:
                    while p1 < e1 and eidx[p1] < jj:
                        p1 += 1
                    live = not (p1 < e1 and eidx[p1] == jj)
                if live:
                    dx = xj1 - xi1; dy = yj1 - yi1; dz = zj1 - zi1
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip1; err[1] = jj
                    if instrument:
                        counts[ip1, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi1, qj1, sei1, sej1, hsi1, hsj1)
                    sw = s
                    bx1_1 += sw * dx
                    by1_1 += sw * dy
                    bz1_1 += sw * dz
                jj = j + 2
                live = jj != ip1
                if live and use_excl:
                    while p1 < e1 and eidx[p1] < jj:
                        p1 += 1
                    live = not (p1 < e1 and eidx[p1] == jj)
                if live:
                    dx = xj2 - xi1; dy = yj2 - yi1; dz = zj2 - zi1
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip1; err[1] = jj
                    if instrument:
                        counts[ip1, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi1, qj2, sei1, sej2, hsi1, hsj2)
                    sw = s
                    bx1_2 += sw * dx
                    by1_2 += sw * dy
                    bz1_2 += sw * dz
                jj = j + 3
                live = jj != ip1
                if live and use_excl:
                    while p1 < e1 and eidx[p1] < jj:
                        p1 += 1
                    live = not (p1 < e1 and eidx[p1] == jj)
                if live:
                    dx = xj3 - xi1; dy = yj3 - yi1; dz = zj3 - zi1
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip1; err[1] = jj
                    if instrument:
                        counts[ip1, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi1, qj3, sei1, sej3, hsi1, hsj3)
                    sw = s
                    bx1_3 += sw * dx
                    by1_3 += sw * dy
                    bz1_3 += sw * dz
            ax0_0 += bx0_0
            ay0_0 += by0_0
            az0_0 += bz0_0
            ax0_1 += bx0_1
            ay0_1 += by0_1
            az0_1 += bz0_1
            ax0_2 += bx0_2
            ay0_2 += by0_2
            az0_2 += bz0_2
            ax0_3 += bx0_3
            ay0_3 += by0_3
            az0_3 += bz0_3
            ax1_0 += bx1_0
            ay1_0 += by1_0
            az1_0 += bz1_0
            ax1_1 += bx1_1
            ay1_1 += by1_1
            az1_1 += bz1_1
            ax1_2 += bx1_2
            ay1_2 += by1_2
            az1_2 += bz1_2
            ax1_3 += bx1_3
            ay1_3 += by1_3
            az1_3 += bz1_3
        acc_out[ip0, 0] = ((ax0_0 + ax0_1) + ax0_2) + ax0_3
        acc_out[ip0, 1] = ((ay0_0 + ay0_1) + ay0_2) + ay0_3
        acc_out[ip0, 2] = ((az0_0 + az0_1) + az0_2) + az0_3
        acc_out[ip1, 0] = ((ax1_0 + ax1_1) + ax1_2) + ax1_3
        acc_out[ip1, 1] = ((ay1_0 + ay1_1) + ay1_2) + ay1_3
        acc_out[ip1, 2] = ((az1_0 + az1_1) + az1_2) + az1_3


@njit(cache=True, nogil=True, error_model="numpy", boundscheck=False)
def tile_ljc_2x8(i0, i1, j0, j1, mode, prm, x, y, z, vx, vy, vz, w, q, se, hs, eptr, eidx,
        use_excl, acc_out, jerk_out, counts, instrument, err):
    zero = prm[P_ZERO]
    soft = prm[P_SOFT]
    one = prm[P_ONE]
    azero = np.float64(0.0)
    for ib in range(i0, i1, 2):
        ip0 = ib + 0
        xi0 = x[ip0]; yi0 = y[ip0]; zi0 = z[ip0]
        qi0 = q[ip0]; sei0 = se[ip0]; hsi0 = hs[ip0]
        p0 = eptr[ip0]; e0 = eptr[ip0 + 1]
        while p0 < e0 and eidx[p0] < j0:
            p0 += 1
        ax0_0 = ay0_0 = az0_0 = azero
        ax0_1 = ay0_1 = az0_1 = azero
        ax0_2 = ay0_2 = az0_2 = azero
        ax0_3 = ay0_3 = az0_3 = azero
        ax0_4 = ay0_4 = az0_4 = azero
        ax0_5 = ay0_5 = az0_5 = azero
        ax0_6 = ay0_6 = az0_6 = azero
        ax0_7 = ay0_7 = az0_7 = azero
        ip1 = ib + 1
        xi1 = x[ip1]; yi1 = y[ip1]; zi1 = z[ip1]
        qi1 = q[ip1]; sei1 = se[ip1]; hsi1 = hs[ip1]
        p1 = eptr[ip1]; e1 = eptr[ip1 + 1]
        while p1 < e1 and eidx[p1] < j0:
            p1 += 1
        ax1_0 = ay1_0 = az1_0 = azero
        ax1_1 = ay1_1 = az1_1 = azero
        ax1_2 = ay1_2 = az1_2 = azero
        ax1_3 = ay1_3 = az1_3 = azero
        ax1_4 = ay1_4 = az1_4 = azero
        ax1_5 = ay1_5 = az1_5 = azero
        ax1_6 = ay1_6 = az1_6 = azero
        ax1_7 = ay1_7 = az1_7 = azero
        for jb in range(j0, j1, 128):
            bx0_0 = by0_0 = bz0_0 = zero
            bx0_1 = by0_1 = bz0_1 = zero
            bx0_2 = by0_2 = bz0_2 = zero
            bx0_3 = by0_3 = bz0_3 = zero
            bx0_4 = by0_4 = bz0_4 = zero
            bx0_5 = by0_5 = bz0_5 = zero
            bx0_6 = by0_6 = bz0_6 = zero
            bx0_7 = by0_7 = bz0_7 = zero
            bx1_0 = by1_0 = bz1_0 = zero
            bx1_1 = by1_1 = bz1_1 = zero
            bx1_2 = by1_2 = bz1_2 = zero
            bx1_3 = by1_3 = bz1_3 = zero
            bx1_4 = by1_4 = bz1_4 = zero
            bx1_5 = by1_5 = bz1_5 = zero
            bx1_6 = by1_6 = bz1_6 = zero
            bx1_7 = by1_7 = bz1_7 = zero
            for j in range(jb, min(jb + 128, j1), 8):
                xj0 = x[j + 0]; yj0 = y[j + 0]; zj0 = z[j + 0]
                qj0 = q[j + 0]; sej0 = se[j + 0]; hsj0 = hs[j + 0]
                xj1 = x[j + 1]; yj1 = y[j + 1]; zj1 = z[j + 1]
                qj1 = q[j + 1]; sej1 = se[j + 1]; hsj1 = hs[j + 1]
                xj2 = x[j + 2]; yj2 = y[j + 2]; zj2 = z[j + 2]
                qj2 = q[j + 2]; sej2 = se[j + 2]; hsj2 = hs[j + 2]
                xj3 = x[j + 3]; yj3 = y[j + 3]; zj3 = z[j + 3]
                qj3 = q[j + 3]; sej3 = se[j + 3]; hsj3 = hs[j + 3]
                xj4 = x[j + 4]; yj4 = y[j + 4]; zj4 = z[j + 4]
                qj4 = q[j + 4]; sej4 = se[j + 4]; hsj4 = hs[j + 4]
                xj5 = x[j + 5]; yj5 = y[j + 5]; zj5 = z[j + 5]
                qj5 = q[j + 5]; sej5 = se[j + 5]; hsj5 = hs[j + 5]
                xj6 = x[j + 6]; yj6 = y[j + 6]; zj6 = z[j + 6]
                qj6 = q[j + 6]; sej6 = se[j + 6]; hsj6 = hs[j + 6]
                xj7 = x[j + 7]; yj7 = y[j + 7]; zj7 = z[j + 7]
                qj7 = q[j + 7]; sej7 = se[j + 7]; hsj7 = hs[j + 7]
                jj = j + 0
                live = jj != ip0
                if live and use_excl:
                    while p0 < e0 and eidx[p0] < jj:
                        p0 += 1
                    live = not (p0 < e0 and eidx[p0] == jj)
                if live:
                    dx = xj0 - xi0; dy = yj0 - yi0; dz = zj0 - zi0
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip0; err[1] = jj
                    if instrument:
                        counts[ip0, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi0, qj0, sei0, sej0, hsi0, hsj0)
                    sw = s
                    bx0_0 += sw * dx
                    by0_0 += sw * dy
                    bz0_0 += sw * dz
                jj = j + 1
                live = jj != ip0
                if live and use_excl:
                    while p0 < e0 and eidx[p0] < jj:
                        p0 += 1
                    live = not (p0 < e0 and eidx[p0] == jj)
                if live:
                    dx = xj1 - xi0; dy = yj1 - yi0; dz = zj1 - zi0
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip0; err[1] = jj
                    if instrument:
                        counts[ip0, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi0, qj1, sei0, sej1, hsi0, hsj1)
                    sw = s
                    bx0_1 += sw * dx
                    by0_1 += sw * dy
                    bz0_1 += sw * dz
                jj = j + 2
                live = jj != ip0
                if live and use_excl:
                    while p0 < e0 and eidx[p0] < jj:
                        p0 += 1
                    live = not (p0 < e0 and eidx[p0] == jj)
                if live:
                    dx = xj2 - xi0; dy = yj2 - yi0; dz = zj2 - zi0
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip0; err[1] = jj
                    if instrument:
                        counts[ip0, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi0, qj2, sei0, sej2, hsi0, hsj2)
                    sw = s
                    bx0_2 += sw * dx
                    by0_2 += sw * dy
                    bz0_2 += sw * dz
                jj = j + 3
                live = jj != ip0
                if live and use_excl:
                    while p0 < e0 and eidx[p0] < jj:
                        p0 += 1
                    live = not (p0 < e0 and eidx[p0] == jj)
                if live:
                    dx = xj3 - xi0; dy = yj3 - yi0; dz = zj3 - zi0
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip0; err[1] = jj
                    if instrument:
                        counts[ip0, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi0, qj3, sei0, sej3, hsi0, hsj3)
                    sw = s
                    bx0_3 += sw * dx
                    by0_3 += sw * dy
                    bz0_3 += sw * dz
                jj = j + 4
                live = jj != ip0
                if live and use_excl:
                    while p0 < e0 and eidx[p0] < jj:
                        p0 += 1
                    live = not (p0 < e0 and eidx[p0] == jj)
                if live:
                    dx = xj4 - xi0; dy = yj4 - yi0; dz = zj4 - zi0
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip0; err[1] = jj
                    if instrument:
                        counts[ip0, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi0, qj4, sei0, sej4, hsi0, hsj4)
                    sw = s
                    bx0_4 += sw * dx
                    by0_4 += sw * dy
                    bz0_4 += sw * dz
                jj = j + 5
                live = jj != ip0
                if live and use_excl:
                    while p0 < e0 and eidx[p0] < jj:
                        p0 += 1
                    live = not (p0 < e0 and eidx[p0] == jj)
                if live:
                    dx = xj5 - xi0; dy = yj5 - yi0; dz = zj5 - zi0
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip0; err[1] = jj
                    if instrument:
                        counts[ip0, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi0, qj5, sei0, sej5, hsi0, hsj5)
                    sw = s
                    bx0_5 += sw * dx
                    by0_5 += sw * dy
                    bz0_5 += sw * dz
                jj = j + 6
                live = jj != ip0
                if live and use_excl:
                    while p0 < e0 and eidx[p0] < jj:
                        p0 += 1
                    live = not (p0 < e0 and eidx[p0] == jj)
                if live:
                    dx = xj6 - xi0; dy = yj6 - yi0; dz = zj6 - zi0
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip0; err[1] = jj
                    if instrument:
                        counts[ip0, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi0, qj6, sei0, sej6, hsi0, hsj6)
                    sw = s
                    bx0_6 += sw * dx
                    by0_6 += sw * dy
                    bz0_6 += sw * dz
                jj = j + 7
                live = jj != ip0
                if live and use_excl:
                    while p0 < e0 and eidx[p0] < jj:
                        p0 += 1
                    live = not (p0 < e0 and eidx[p0] == jj)
                if live:
                    dx = xj7 - xi0; dy = yj7 - yi0; dz = zj7 - zi0
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip0; err[1] = jj
                    if instrument:
                        counts[ip0, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi0, qj7, sei0, sej7, hsi0, hsj7)
                    sw = s
                    bx0_7 += sw * dx
                    by0_7 += sw * dy
                    bz0_7 += sw * dz
                jj = j + 0
                live = jj != ip1
                if live and use_excl:
                    while p1 < e1 and eidx[p1] < jj:
                        p1 += 1
                    live = not (p1 < e1 and eidx[p1] == jj)
                if live:
                    dx = xj0 - xi1; dy = yj0 - yi1; dz = zj0 - zi1
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip1; err[1] = jj
                    if instrument:
                        counts[ip1, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi1, qj0, sei1, sej0, hsi1, hsj0)
                    sw = s
                    bx1_0 += sw * dx
                    by1_0 += sw * dy
                    bz1_0 += sw * dz
                jj = j + 1
                live = jj != ip1
                if live and use_excl:
                    while p1 < e1 and eidx[p1] < jj:
                        p1 += 1
                    live = not (p1 < e1 and eidx[p1] == jj)
                if live:
                    dx = xj1 - xi1; dy = yj1 - yi1; dz = zj1 - zi1
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip1; err[1] = jj
                    if instrument:
                        counts[ip1, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi1, qj1, sei1, sej1, hsi1, hsj1)
                    sw = s
                    bx1_1 += sw * dx
                    by1_1 += sw * dy
                    bz1_1 += sw * dz
                jj = j + 2
                live = jj != ip1
                if live and use_excl:
                    while p1 < e1 and eidx[p1] < jj:
                        p1 += 1
                    live = not (p1 < e1 and eidx[p1] == jj)
                if live:
                    dx = xj2 - xi1; dy = yj2 - yi1; dz = zj2 - zi1
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip1; err[1] = jj
                    if instrument:
                        counts[ip1, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi1, qj2, sei1, sej2, hsi1, hsj2)
                    sw = s
                    bx1_2 += sw * dx
                    by1_2 += sw * dy
                    bz1_2 += sw * dz
                jj = j + 3
                live = jj != ip1
                if live and use_excl:
                    while p1 < e1 and eidx[p1] < jj:
                        p1 += 1
                    live = not (p1 < e1 and eidx[p1] == jj)
                if live:
                    dx = xj3 - xi1; dy = yj3 - yi1; dz = zj3 - zi1
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip1; err[1] = jj
                    if instrument:
                        counts[ip1, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi1, qj3, sei1, sej3, hsi1, hsj3)
                    sw = s
                    bx1_3 += sw * dx
                    by1_3 += sw * dy
                    bz1_3 += sw * dz
                jj = j + 4
                live = jj != ip1
                if live and use_excl:
                    while p1 < e1 and eidx[p1] < jj:
                        p1 += 1
                    live = not (p1 < e1 and eidx[p1] == jj)
                if live:
                    dx = xj4 - xi1; dy = yj4 - yi1; dz = zj4 - zi1
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip1; err[1] = jj
                    if instrument:
                        counts[ip1, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi1, qj4, sei1, sej4, hsi1, hsj4)
                    sw = s
                    bx1_4 += sw * dx
                    by1_4 += sw * dy
                    bz1_4 += sw * dz
                jj = j + 5
                live = jj != ip1
                if live and use_excl:
                    while p1 < e1 and eidx[p1] < jj:
                        p1 += 1
                    live = not (p1 < e1 and eidx[p1] == jj)
                if live:
                    dx = xj5 - xi1; dy = yj5 - yi1; dz = zj5 - zi1
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip1; err[1] = jj
                    if instrument:
                        counts[ip1, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi1, qj5, sei1, sej5, hsi1, hsj5)
                    sw = s
                    bx1_5 += sw * dx
                    by1_5 += sw * dy
                    bz1_5 += sw * dz
                jj = j + 6
                live = jj != ip1
                if live and use_excl:
                    while p1 < e1 and eidx[p1] < jj:
                        p1 += 1
                    live = not (p1 < e1 and eidx[p1] == jj)
                if live:
                    dx = xj6 - xi1; dy = yj6 - yi1; dz = zj6 - zi1
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip1; err[1] = jj
                    if instrument:
                        counts[ip1, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi1, qj6, sei1, sej6, hsi1, hsj6)
                    sw = s
                    bx1_6 += sw * dx
                    by1_6 += sw * dy
                    bz1_6 += sw * dz
                jj = j + 7
                live = jj != ip1
                if live and use_excl:
                    while p1 < e1 and eidx[p1] < jj:
                        p1 += 1
                    live = not (p1 < e1 and eidx[p1] == jj)
                if live:
                    dx = xj7 - xi1; dy = yj7 - yi1; dz = zj7 - zi1
                    r2 = dx * dx + dy * dy + dz * dz + soft
                    if r2 == zero and err[0] < 0:
                        err[0] = ip1; err[1] = jj
                    if instrument:
                        counts[ip1, jj] += 1
                    s, t = _interaction(mode, prm, r2, dx, dy, dz, zero, zero, zero, qi1, qj7, sei1, sej7, hsi1, hsj7)
                    sw = s
                    bx1_7 += sw * dx
                    by1_7 += sw * dy
                    bz1_7 += sw * dz
            ax0_0 += bx0_0
            ay0_0 += by0_0
            az0_0 += bz0_0
            ax0_1 += bx0_1
            ay0_1 += by0_1
            az0_1 += bz0_1
            ax0_2 += bx0_2
            ay0_2 += by0_2
            az0_2 += bz0_2
            ax0_3 += bx0_3
            ay0_3 += by0_3
            az0_3 += bz0_3
            ax0_4 += bx0_4
            ay0_4 += by0_4
            az0_4 += bz0_4
            ax0_5 += bx0_5
            ay0_5 += by0_5
            az0_5 += bz0_5
            ax0_6 += bx0_6
            ay0_6 += by0_6
            az0_6 += bz0_6
            ax0_7 += bx0_7
            ay0_7 += by0_7
            az0_7 += bz0_7
            ax1_0 += bx1_0
            ay1_0 += by1_0
            az1_0 += bz1_0
            ax1_1 += bx1_1
            ay1_1 += by1_1
            az1_1 += bz1_1
            ax1_2 += bx1_2
            ay1_2 += by1_2
            az1_2 += bz1_2
            ax1_3 += bx1_3
            ay1_3 += by1_3
            az1_3 += bz1_3
            ax1_4 += bx1_4
            ay1_4 += by1_4
            az1_4 += bz1_4
            ax1_5 += bx1_5
            ay1_5 += by1_5
            az1_5 += bz1_5
            ax1_6 += bx1_6
            ay1_6 += by1_6
            az1_6 += bz1_6
            ax1_7 += bx1_7
            ay1_7 += by1_7
            az1_7 += bz1_7
        acc_out[ip0, 0] = ((((((ax0_0 + ax0_1) + ax0_2) + ax0_3) + ax0_4) + ax0_5) + ax0_6) + ax0_7
        acc_out[ip0, 1] = ((((((ay0_0 + ay0_1) + ay0_2) + ay0_3) + ay0_4) + ay0_5) + ay0_6) + ay0_7
        acc_out[ip0, 2] = ((((((az0_0 + az0_1) + az0_2) + az0_3) + az0_4) + az0_5) + az0_6) + az0_7
        acc_out[ip1, 0] = ((((((ax1_0 + ax1_1) + ax1_2) + ax1_3) + ax1_4) + ax1_5) + ax1_6) + ax1_7
        acc_out[ip1, 1] = ((((((ay1_0 + ay1_1) + ay1_2) + ay1_3) + ay1_4) + ay1_5) + ay1_6) + ay1_7
        acc_out[ip1, 2] = ((((((az1_0 + az1_1) + az1_2) + az1_3) + az1_4) + az1_5) + az1_6) + az1_7


KERNELS = {
    ('ga', 1, 1): tile_ga_1x1,
    ('ga', 1, 4): tile_ga_1x4,
    ('ga', 1, 8): tile_ga_1x8,
    ('ga', 2, 4): tile_ga_2x4,
    ('ga', 2, 8): tile_ga_2x8,
    ('ga', 4, 4): tile_ga_4x4,
    ('ga', 4, 8): tile_ga_4x8,
    ('gaj', 1, 1): tile_gaj_1x1,
    ('gaj', 1, 4): tile_gaj_1x4,
    ('gaj', 1, 8): tile_gaj_1x8,
    ('gaj', 2, 4): tile_gaj_2x4,
    ('gaj', 2, 8): tile_gaj_2x8,
    ('ljc', 1, 1): tile_ljc_1x1,
    ('ljc', 1, 4): tile_ljc_1x4,
    ('ljc', 1, 8): tile_ljc_1x8,
    ('ljc', 2, 4): tile_ljc_2x4,
    ('ljc', 2, 8): tile_ljc_2x8,
}
