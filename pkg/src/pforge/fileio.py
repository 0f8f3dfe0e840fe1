"""Particle and force file formats.

Text format, one particle per line after a header::

    #pforge v1 <law>
    x y z vx vy vz mass charge lj_eps lj_sigma [excl:i,j,k]

Blank lines and lines starting with ``#`` after the header are ignored.
Floats are written with ``repr`` so a write/read cycle is exact.

Binary format (little endian)::

    uint64   N
    float32  x[N] y[N] z[N] vx[N] vy[N] vz[N] mass[N] charge[N] lj_eps[N] lj_sigma[N]
    uint32   nexcl[N]
    uint32   excl[sum(nexcl)]      partner indices, particle by particle

The binary format stores float32, so it round-trips exactly only for values
already representable in single precision (everything the generators emit).
"""

from __future__ import annotations

import struct
from pathlib import Path
from typing import Optional

import numpy as np

from .errors import ParseError
from .model import DEFAULT_MAX_EXCLUSIONS, ForceResult, Law, ParticleSet, from_arrays

MAGIC = "#pforge"
VERSION = "v1"
FIELDS = ("x", "y", "z", "vx", "vy", "vz", "mass", "charge", "lj_eps", "lj_sigma")


def _fmt(v) -> str:
    return repr(float(v))


def format_particles(pset: ParticleSet, law="ga") -> str:
    law = Law.parse(law)
    out = [f"{MAGIC} {VERSION} {law.value}"]
    cols = [pset.x, pset.y, pset.z, pset.vx, pset.vy, pset.vz, pset.masses, pset.charges,
            pset.lj_epsilon, pset.lj_sigma]
    for i in range(pset.count):
        line = " ".join(_fmt(c[i]) for c in cols)
        ex = pset.exclusions(i)
        if len(ex):
            line += " excl:" + ",".join(str(int(j)) for j in ex)
        out.append(line)
    return "\n".join(out) + "\n"


def parse_particles(text: str, *, path=None, max_exclusions: int = DEFAULT_MAX_EXCLUSIONS):
    """Parse the text format; returns ``(law, ParticleSet)``."""
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty particle file", line=1, path=path)
    head = lines[0].split()
    if len(head) != 3 or head[0] != MAGIC:
        raise ParseError(f"expected header '{MAGIC} {VERSION} <law>'", line=1, path=path)
    if head[1] != VERSION:
        raise ParseError(f"unsupported format version {head[1]!r}", line=1, path=path)
    try:
        law = Law.parse(head[2])
    except ValueError as exc:
        raise ParseError(str(exc), line=1, path=path) from None
    rows, excl, where = [], [], []
    for lineno, raw in enumerate(lines[1:], start=2):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        tokens = s.split()
        ex = []
        if tokens[-1].startswith("excl:"):
            body = tokens.pop()[5:]
            try:
                ex = [int(t) for t in body.split(",") if t]
            except ValueError:
                raise ParseError(f"bad exclusion list {body!r}", line=lineno, path=path) from None
        if len(tokens) != len(FIELDS):
            raise ParseError(f"expected {len(FIELDS)} numeric fields, got {len(tokens)}", line=lineno, path=path)
        try:
            vals = [float(t) for t in tokens]
        except ValueError as exc:
            raise ParseError(str(exc), line=lineno, path=path) from None
        if not all(np.isfinite(vals)):
            raise ParseError("non-finite value", line=lineno, path=path)
        rows.append(vals)
        excl.append(ex)
        where.append(lineno)
    if not rows:
        raise ParseError("no particle records", line=len(lines), path=path)
    n = len(rows)
    for k, ex in enumerate(excl):
        bad = [j for j in ex if not 0 <= j < n]
        if bad:
            raise ParseError(f"exclusion index {bad[0]} out of range for {n} particles", line=where[k], path=path)
    a = np.array(rows, dtype=np.float64)
    try:
        pset = from_arrays(a[:, 0:3], velocities=a[:, 3:6], masses=a[:, 6], charges=a[:, 7],
                           lj_epsilon=a[:, 8], lj_sigma=a[:, 9], exclusions=excl,
                           max_exclusions=max_exclusions)
    except ValueError as exc:
        raise ParseError(str(exc), path=path) from None
    return law, pset


def write_particles(path, pset: ParticleSet, law="ga") -> None:
    Path(path).write_text(format_particles(pset, law))


def read_particles(path, **kwargs):
    p = Path(path)
    return parse_particles(p.read_text(), path=str(p), **kwargs)


def write_binary(path, pset: ParticleSet) -> None:
    n = pset.count
    cols = [pset.x, pset.y, pset.z, pset.vx, pset.vy, pset.vz, pset.masses, pset.charges,
            pset.lj_epsilon, pset.lj_sigma]
    counts = np.diff(pset.excl_ptr[:n + 1]).astype("<u4")
    with open(path, "wb") as fh:
        fh.write(struct.pack("<Q", n))
        for c in cols:
            fh.write(np.asarray(c[:n], dtype="<f4").tobytes())
        fh.write(counts.tobytes())
        fh.write(np.asarray(pset.excl_idx, dtype="<u4").tobytes())


def read_binary(path, *, max_exclusions: int = DEFAULT_MAX_EXCLUSIONS) -> ParticleSet:
    data = Path(path).read_bytes()
    if len(data) < 8:
        raise ParseError("truncated binary header", path=str(path))
    (n,) = struct.unpack_from("<Q", data, 0)
    need = 8 + 4 * n * (len(FIELDS) + 1)
    if n < 1 or len(data) < need:
        raise ParseError(f"binary file too short for {n} particles", path=str(path))
    blocks = np.frombuffer(data, dtype="<f4", count=n * len(FIELDS), offset=8).reshape(len(FIELDS), n)
    counts = np.frombuffer(data, dtype="<u4", count=n, offset=8 + 4 * n * len(FIELDS)).astype(np.int64)
    total = int(counts.sum())
    if len(data) != need + 4 * total:
        raise ParseError(f"binary exclusion block has {len(data) - need} bytes, expected {4 * total}",
                         path=str(path))
    idx = np.frombuffer(data, dtype="<u4", count=total, offset=need).astype(np.int64)
    ptr = np.concatenate([[0], np.cumsum(counts)])
    excl = [idx[ptr[i]:ptr[i + 1]].tolist() for i in range(n)]
    b = blocks.astype(np.float64)
    try:
        return from_arrays(b[0:3].T, velocities=b[3:6].T, masses=b[6], charges=b[7], lj_epsilon=b[8],
                           lj_sigma=b[9], exclusions=excl, max_exclusions=max_exclusions)
    except ValueError as exc:
        raise ParseError(str(exc), path=str(path)) from None


def load(path, **kwargs):
    """Read either format, sniffing the text header.  Returns ``(law or None, set)``."""
    p = Path(path)
    with open(p, "rb") as fh:
        head = fh.read(len(MAGIC))
    if head == MAGIC.encode():
        return read_particles(p, **kwargs)
    return None, read_binary(p, **kwargs)


def format_forces(result: ForceResult) -> str:
    lines = []
    acc = result.accelerations
    jerk = result.jerks
    for i in range(acc.shape[0]):
        vals = list(acc[i]) + ([] if jerk is None else list(jerk[i]))
        lines.append(f"{i} " + " ".join(_fmt(v) for v in vals))
    return "\n".join(lines) + ("\n" if lines else "")


def parse_forces(text: str, *, path=None):
    """Inverse of ``format_forces``: ``(accelerations, jerks or None)``."""
    acc, jerk = [], []
    width: Optional[int] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens:
            continue
        if width is None:
            width = len(tokens)
            if width not in (4, 7):
                raise ParseError(f"force lines need 4 or 7 fields, got {width}", line=lineno, path=path)
        if len(tokens) != width or int(tokens[0]) != len(acc):
            raise ParseError("malformed or out-of-order force line", line=lineno, path=path)
        vals = [float(t) for t in tokens[1:]]
        acc.append(vals[:3])
        if width == 7:
            jerk.append(vals[3:])
    return np.array(acc).reshape(-1, 3), (np.array(jerk) if width == 7 else None)
