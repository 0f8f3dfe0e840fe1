"""Flop accounting, throughput and bandwidth reporting.

Flop counts are fixed per-law constants ("useful" flops), not hardware
instruction counts.  ``audit_flops`` recounts them from an itemized list of
the operations one 4-interaction SIMD block performs, so a kernel edit that
changes the cost shows up as an itemized diff instead of silently skewing
every GFlops figure.

Counting conventions: a 3-vector subtract is 3 flops, a dot product plus an
added constant is 6 (both per lane), a 4-lane rsqrt is 4, every 4-lane
multiply or add is 4, and a fused multiply-add counts as 2.
"""

from __future__ import annotations

import csv
import io
import json
import statistics
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .model import Law

BLOCK = 4

FLOPS_PER_INTERACTION = {
    Law.GA: 19,
    Law.GAJ: 42,
    Law.LJC_CONST: 30,
    Law.LJC_LINEAR: 30,
    Law.LJC_SIGMOIDAL: 43,
}

INPUT_BYTES = {
    Law.GA: 64,
    Law.GAJ: 128,
    Law.LJC_CONST: 104,
    Law.LJC_LINEAR: 104,
    Law.LJC_SIGMOIDAL: 104,
}

# Exponential of a 4-lane vector.  No hardware exp exists on the target, so
# it is charged like a short polynomial: 6 flops per lane.
EXP_FLOPS = 24

# (operation, flops per 4-interaction block)
_GA_OPS = (
    ("d = rj - ri (4 x 3-vector subtract)", 12),
    ("r2 = d.d + eps (4 x dot+add)", 24),
    ("rinv = rsqrt(r2)", 4),
    ("rinv3 = rinv * rinv * rinv", 8),
    ("s = mj * rinv3", 4),
    ("acc += s * d (3 components, 3 terms)", 18),
    ("acc += s * d (guarded self term)", 6),
)

_GAJ_OPS = (
    ("d = rj - ri", 12),
    ("dv = vj - vi", 12),
    ("r2 = d.d + eps", 24),
    ("rinv = rsqrt(r2)", 4),
    ("rinv2 = rinv * rinv", 4),
    ("rinv3 = rinv2 * rinv", 4),
    ("s = mj * rinv3", 4),
    ("rv = d.dv (fma chain)", 20),
    ("t = 3 * rv * rinv2", 8),
    ("acc += s * d", 24),
    ("st = s * t", 4),
    ("sv = s * dv", 12),
    ("std = st * d", 12),
    ("u = sv - std", 12),
    ("jerk += u", 12),
)

_LJC_COMMON = (
    ("d = rj - ri", 12),
    ("r2 = d.d", 20),
    ("rinv = rsqrt(r2)", 4),
    ("rinv2 = rinv * rinv", 4),
    ("eps_ij = sqrt(eps_i) * sqrt(eps_j)", 4),
    ("sigma_ij = sigma_i/2 + sigma_j/2", 4),
    ("sr = sigma_ij * rinv", 4),
    ("sr2 = sr * sr", 4),
    ("sr6 = sr2 * sr2 * sr2", 8),
    ("sr12 = sr6 * sr6", 4),
    ("lj = eps_ij * (sr6 - sr12)", 8),
    ("qq = qi * qj", 4),
)

_LJC_TAIL = (
    ("f = coul + lj", 4),
    ("s = f * rinv", 4),
    ("acc += s * d", 24),
)

_OPS = {
    Law.GA: _GA_OPS,
    Law.GAJ: _GAJ_OPS,
    Law.LJC_CONST: _LJC_COMMON + (
        ("qq * inv_dielectric", 4),
        ("coul = qq * rinv2", 4),
    ) + _LJC_TAIL,
    Law.LJC_LINEAR: _LJC_COMMON + (
        ("rinv3 = rinv2 * rinv", 4),
        ("coul = qq * rinv3", 4),
    ) + _LJC_TAIL,
    Law.LJC_SIGMOIDAL: _LJC_COMMON + (
        ("coul = qq * rinv2", 4),
        ("r = r2 * rinv", 4),
        ("r3 = r2 * r", 4),
        ("alpha * r3", 4),
        ("beta * r2", 4),
        ("alpha r3 + beta r2", 4),
        ("+ (gamma + delta)", 4),
        ("exp(poly)", EXP_FLOPS),
        ("1 / zeta", 4),
        ("coul / zeta", 4),
    ) + _LJC_TAIL,
}


class FlopAuditError(AssertionError):
    def __init__(self, law: Law, expected: int, items: tuple):
        self.law = law
        self.expected = expected
        self.items = items
        total = sum(n for _, n in items)
        lines = [f"{law.value}: itemized {total} flops per {BLOCK} interactions, "
                 f"expected {expected * BLOCK} ({expected}/interaction)"]
        lines += [f"  {n:4d}  {op}" for op, n in items]
        lines.append(f"  diff {total - expected * BLOCK:+d}")
        super().__init__("\n".join(lines))


@dataclass(frozen=True)
class FlopAudit:
    law: Law
    items: tuple
    block: int = BLOCK

    @property
    def total(self) -> int:
        return sum(n for _, n in self.items)

    @property
    def per_interaction(self) -> int:
        return self.total // self.block

    def __str__(self):
        rows = [f"{n:4d}  {op}" for op, n in self.items]
        return "\n".join(rows + [f"{self.total:4d}  total per {self.block} interactions"])


def flops_per_interaction(law) -> int:
    return FLOPS_PER_INTERACTION[Law.parse(law)]


def input_bytes_per_interaction(law) -> int:
    return INPUT_BYTES[Law.parse(law)]


def audit_flops(law, ops: Optional[tuple] = None) -> FlopAudit:
    """Itemized flop recount for one 4-interaction block.

    Raises FlopAuditError (with the itemized list) when the recount does not
    match ``flops_per_interaction``.  ``ops`` substitutes a custom op list,
    which is how tests check the diff path.
    """
    law = Law.parse(law)
    items = tuple(_OPS[law] if ops is None else ops)
    audit = FlopAudit(law, items)
    expected = flops_per_interaction(law)
    if audit.total != expected * BLOCK:
        raise FlopAuditError(law, expected, items)
    return audit


def interactions_reported(raw_pair_evals: int, uses_third_law: bool) -> int:
    """Pair evaluations as comparable interactions: halved codes count double."""
    raw = int(raw_pair_evals)
    if raw < 0:
        raise ValueError("pair evaluation count must be non-negative")
    return 2 * raw if uses_third_law else raw


@dataclass(frozen=True)
class FlopLedger:
    law: Law
    interactions: int
    elapsed: float
    flops_per_interaction: int = field(default=-1)
    input_bytes_per_interaction: int = field(default=-1)

    def __post_init__(self):
        law = Law.parse(self.law)
        object.__setattr__(self, "law", law)
        if self.flops_per_interaction < 0:
            object.__setattr__(self, "flops_per_interaction", flops_per_interaction(law))
        if self.input_bytes_per_interaction < 0:
            object.__setattr__(self, "input_bytes_per_interaction", input_bytes_per_interaction(law))
        if self.interactions < 0:
            raise ValueError("interaction count must be non-negative")
        if self.elapsed < 0:
            raise ValueError("elapsed time must be non-negative")

    def _rate(self, per_interaction: int) -> Fraction:
        if not self.elapsed > 0:
            raise ValueError(f"rates need elapsed > 0, got {self.elapsed}")
        return Fraction(per_interaction * self.interactions) / Fraction(self.elapsed)

    @property
    def flops(self) -> int:
        return self.flops_per_interaction * self.interactions

    @property
    def gflops(self) -> float:
        return float(self._rate(self.flops_per_interaction) / 10**9)

    @property
    def interactions_per_sec(self) -> float:
        return float(self._rate(1))

    @property
    def effective_bandwidth_GBps(self) -> float:
        return effective_bandwidth(self)


def effective_bandwidth(ledger: FlopLedger) -> float:
    """Input bytes streamed per second, in GB/s."""
    return float(ledger._rate(ledger.input_bytes_per_interaction) / 10**9)


CSV_COLUMNS = ("law", "strategy", "replication", "N", "elapsed_s", "gflops",
               "interactions_per_sec", "bandwidth_GBps")


@dataclass(frozen=True)
class BenchRecord:
    law: str
    strategy: str
    replication: int
    N: int
    elapsed_s: float
    gflops: float
    interactions_per_sec: float
    bandwidth_GBps: float
    samples: tuple = ()

    @classmethod
    def from_ledger(cls, ledger: FlopLedger, strategy: str, replication: int, n: int,
                    samples=()) -> "BenchRecord":
        return cls(ledger.law.value, strategy, int(replication), int(n), float(ledger.elapsed),
                   ledger.gflops, ledger.interactions_per_sec, ledger.effective_bandwidth_GBps,
                   tuple(samples))

    def row(self) -> dict:
        return {k: getattr(self, k) for k in CSV_COLUMNS}


def records_to_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow(rec.row())
    return buf.getvalue()


def records_to_json(records) -> str:
    return json.dumps([rec.row() for rec in records], indent=1) + "\n"


def records_from_json(text: str) -> list:
    return [BenchRecord(**row) for row in json.loads(text)]


@dataclass(frozen=True)
class Timing:
    median: float
    samples: tuple
    warmups: int

    def as_dict(self):
        return asdict(self)


def time_call(fn: Callable[[], object], *, warmups: int = 3, repeats: int = 10,
              clock: Callable[[], float] = time.perf_counter) -> Timing:
    """Run ``fn`` ``warmups`` times untimed, then ``repeats`` timed; report the median."""
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    if warmups < 0:
        raise ValueError("warmups must be >= 0")
    for _ in range(warmups):
        fn()
    samples = []
    for _ in range(repeats):
        t0 = clock()
        fn()
        samples.append(clock() - t0)
    return Timing(statistics.median(samples), tuple(samples), warmups)


@dataclass(frozen=True)
class TrendReport:
    name: str
    status: str  # "pass", "warn" or "skip"
    detail: str

    def line(self) -> str:
        return f"[{self.status.upper()}] {self.name}: {self.detail}"


def unrolling_trend(records, n: Optional[int] = None, law: str = "ga") -> TrendReport:
    """Checks interactions/sec ordering 4x4 >= 1x4 >= 1x1 at the largest (or given) N."""
    recs = [r for r in records if r.law == law and r.replication == 1]
    if n is None and recs:
        n = max(r.N for r in recs)
    rate = {r.strategy: r.interactions_per_sec for r in recs if r.N == n}
    need = ("1x1", "1x4", "4x4")
    if not all(k in rate for k in need):
        return TrendReport("unrolling trend", "skip", f"missing plans at N={n}: have {sorted(rate)}")
    ok = rate["4x4"] >= rate["1x4"] >= rate["1x1"]
    detail = f"N={n} " + ", ".join(f"{k} {rate[k]:.3e}/s" for k in need)
    return TrendReport("unrolling trend", "pass" if ok else "warn", detail)


def replication_trend(records, threads: int, *, law: str = "ljc-sigmoidal", max_n: int = 1024,
                      min_speedup: float = 1.2, min_threads: int = 8) -> TrendReport:
    """Some R > 1 beats R = 1 by ``min_speedup`` at some N <= ``max_n``."""
    recs = [r for r in records if r.law == law and r.N <= max_n]
    best = None
    for n in sorted({r.N for r in recs}):
        cells = {r.replication: r.interactions_per_sec for r in recs if r.N == n}
        if 1 not in cells:
            continue
        for R, v in cells.items():
            if R > 1:
                s = v / cells[1]
                if best is None or s > best[0]:
                    best = (s, n, R)
    if best is None:
        return TrendReport("replication trend", "skip", "no R = 1 baseline with R > 1 cells")
    s, n, R = best
    detail = f"best speedup {s:.2f}x at N={n}, R={R} with {threads} worker threads"
    if threads < min_threads:
        # any apparent speedup here is timing noise, not parallelism
        detail += f" (needs >= {min_threads} hardware threads to be meaningful)"
        return TrendReport("replication trend", "warn", detail)
    return TrendReport("replication trend", "pass" if s >= min_speedup else "warn", detail)
