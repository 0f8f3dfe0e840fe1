"""Generator for the explicitly unrolled tile kernels in ``_unrolled.py``.

Pair arithmetic runs in the precision of the input arrays.  Each lane sums
``J_BLOCK`` j-particles in that precision and then flushes into a float64
total: long float32 sums of terms far larger than the net force lose several
digits otherwise, while a float64 add in the innermost loop costs about a
third of the throughput.

Numba will not unroll the i/j blocking for us, so every ``A x B`` variant is
written out with one scalar accumulator per (i-particle, lane, component).
The j-particle loads of a block are shared by all ``A`` i-particles, which is
the whole point of unrolling in i.

Regenerate after editing this file::

    python -m pforge.codegen
"""

from __future__ import annotations

import sys
from pathlib import Path

TARGET = Path(__file__).with_name("_unrolled.py")

FAMILIES = {
    # family: (law code passed to _interaction or None for runtime mode, i-unrolls)
    "ga": ("0", (1, 2, 4)),
    "gaj": ("1", (1, 2)),
    "ljc": (None, (1, 2)),
}
LANES = (1, 4, 8)
# j-particles summed in working precision before flushing to float64
J_BLOCK = 128

HEADER = '''"""Unrolled tile kernels.  GENERATED by pforge.codegen, do not edit."""

import numpy as np
from numba import njit

from .kernels import P_ONE, P_SOFT, P_ZERO, _find_singular, _interaction

'''


class Writer:
    def __init__(self):
        self.lines = []
        self.level = 0

    def __call__(self, text=""):
        for line in text.splitlines() or [""]:
            self.lines.append(("    " * self.level + line) if line else "")

    def indent(self):
        self.level += 1

    def dedent(self):
        self.level -= 1

    def text(self):
        return "\n".join(self.lines) + "\n"


def emit_kernel(w: Writer, family: str, ni: int, nj: int) -> str:
    law, _ = FAMILIES[family]
    jerk = family == "gaj"
    ljc = family == "ljc"
    mode = "mode" if law is None else law
    name = f"tile_{family}_{ni}x{nj}"
    comps = ("x", "y", "z")
    w('@njit(cache=True, nogil=True, error_model="numpy", boundscheck=False)')
    w(f"def {name}(i0, i1, j0, j1, mode, prm, x, y, z, vx, vy, vz, w, q, se, hs, eptr, eidx,")
    w("        use_excl, acc_out, jerk_out, counts, instrument, err):")
    w.indent()
    w("zero = prm[P_ZERO]")
    w("soft = prm[P_SOFT]")
    w("one = prm[P_ONE]")
    w("azero = np.float64(0.0)")
    w(f"for ib in range(i0, i1, {ni}):")
    w.indent()
    for a in range(ni):
        w(f"ip{a} = ib + {a}")
        w(f"xi{a} = x[ip{a}]; yi{a} = y[ip{a}]; zi{a} = z[ip{a}]")
        if jerk:
            w(f"vxi{a} = vx[ip{a}]; vyi{a} = vy[ip{a}]; vzi{a} = vz[ip{a}]")
        if ljc:
            w(f"qi{a} = q[ip{a}]; sei{a} = se[ip{a}]; hsi{a} = hs[ip{a}]")
            w(f"p{a} = eptr[ip{a}]; e{a} = eptr[ip{a} + 1]")
            w(f"while p{a} < e{a} and eidx[p{a}] < j0:")
            w(f"    p{a} += 1")
        for l in range(nj):
            accs = [f"a{c}{a}_{l}" for c in comps]
            if jerk:
                accs += [f"j{c}{a}_{l}" for c in comps]
            w(" = ".join(accs) + " = azero")
    w(f"for jb in range(j0, j1, {J_BLOCK}):")
    w.indent()
    for a in range(ni):
        for l in range(nj):
            accs = [f"b{c}{a}_{l}" for c in comps]
            if jerk:
                accs += [f"k{c}{a}_{l}" for c in comps]
            w(" = ".join(accs) + " = zero")
    w(f"for j in range(jb, min(jb + {J_BLOCK}, j1), {nj}):")
    w.indent()
    for l in range(nj):
        w(f"xj{l} = x[j + {l}]; yj{l} = y[j + {l}]; zj{l} = z[j + {l}]")
        if ljc:
            w(f"qj{l} = q[j + {l}]; sej{l} = se[j + {l}]; hsj{l} = hs[j + {l}]")
        else:
            w(f"wj{l} = w[j + {l}]")
        if jerk:
            w(f"vxj{l} = vx[j + {l}]; vyj{l} = vy[j + {l}]; vzj{l} = vz[j + {l}]")
    for a in range(ni):
        for l in range(nj):
            w(f"jj = j + {l}")
            if ljc:
                w(f"live = jj != ip{a}")
                w("if live and use_excl:")
                w(f"    while p{a} < e{a} and eidx[p{a}] < jj:")
                w(f"        p{a} += 1")
                w(f"    live = not (p{a} < e{a} and eidx[p{a}] == jj)")
                w("if live:")
            else:
                w(f"live = jj != ip{a}")
            if ljc:
                w.indent()
            w(f"dx = xj{l} - xi{a}; dy = yj{l} - yi{a}; dz = zj{l} - zi{a}")
            w("r2 = dx * dx + dy * dy + dz * dz + soft")
            if ljc:
                w("if r2 == zero and err[0] < 0:")
                w(f"    err[0] = ip{a}; err[1] = jj")
                w("if instrument:")
                w(f"    counts[ip{a}, jj] += 1")
            else:
                # branch-free: the self term is computed on a dummy r2 and
                # masked; a singular pair poisons the sum and is located by
                # a rescan after the i-particle is done
                w("if instrument and live:")
                w(f"    counts[ip{a}, jj] += 1")
                w("r2 = r2 if live else one")
            if jerk:
                w(f"dvx = vxj{l} - vxi{a}; dvy = vyj{l} - vyi{a}; dvz = vzj{l} - vzi{a}")
                w(f"s, t = _interaction({mode}, prm, r2, dx, dy, dz, dvx, dvy, dvz, zero, zero, zero, zero, zero, zero)")
            elif ljc:
                w(f"s, t = _interaction({mode}, prm, r2, dx, dy, dz, zero, zero, zero, "
                  f"qi{a}, qj{l}, sei{a}, sej{l}, hsi{a}, hsj{l})")
            else:
                w(f"s, t = _interaction({mode}, prm, r2, dx, dy, dz, zero, zero, zero, zero, zero, zero, zero, zero, zero)")
            w("sw = s" if ljc else f"sw = wj{l} * s if live else zero")
            for c in comps:
                w(f"b{c}{a}_{l} += sw * d{c}")
            if jerk:
                for c in comps:
                    w(f"k{c}{a}_{l} += sw * (dv{c} - t * d{c})")
            if ljc:
                w.dedent()
    w.dedent()
    for a in range(ni):
        for l in range(nj):
            for c in comps:
                w(f"a{c}{a}_{l} += b{c}{a}_{l}")
                if jerk:
                    w(f"j{c}{a}_{l} += k{c}{a}_{l}")
    w.dedent()
    if not ljc:
        for a in range(ni):
            w(f"if not abs(ax{a}_0 + ay{a}_0 + az{a}_0" + "".join(f" + ax{a}_{l} + ay{a}_{l} + az{a}_{l}" for l in range(1, nj)) + ") < np.inf:")
            w(f"    _find_singular(ip{a}, j0, j1, x, y, z, soft, err)")
    for a in range(ni):
        kinds = [("a", "acc_out")] + ([("j", "jerk_out")] if jerk else [])
        for prefix, out in kinds:
            for k, c in enumerate(comps):
                expr = f"{prefix}{c}{a}_0"
                for l in range(1, nj):
                    expr = f"({expr} + {prefix}{c}{a}_{l})" if l < nj - 1 else f"{expr} + {prefix}{c}{a}_{l}"
                w(f"{out}[ip{a}, {k}] = {expr}")
    w.dedent()
    w.dedent()
    w()
    w()
    return name


def generate() -> str:
    w = Writer()
    w(HEADER)
    names = {}
    for family, (_, unrolls) in FAMILIES.items():
        for ni in unrolls:
            for nj in LANES:
                if nj == 1 and ni != 1:
                    continue
                names[(family, ni, nj)] = emit_kernel(w, family, ni, nj)
    w("KERNELS = {")
    for key, name in names.items():
        w(f"    {key!r}: {name},")
    w("}")
    return w.text()


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    text = generate()
    if argv and argv[0] == "--check":
        return 0 if TARGET.read_text() == text else 1
    TARGET.write_text(text)
    print(f"wrote {TARGET}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
