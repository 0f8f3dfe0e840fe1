"""``pforge`` command line.

Exit codes: 0 success, 2 usage or input error, 3 numeric failure
(singular pair, non-finite state), 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import fileio
from .errors import ConfigurationError, ParseError, ParticleDataError, SimulationError, SingularityError
from .generate import KINDS, PROTEIN_DEFAULT_N, generate
from .metrics import (BenchRecord, FlopLedger, records_to_csv, records_to_json, replication_trend,
                      time_call, unrolling_trend)
from .model import ExecutionPlan, KernelSpec, Law, ParticleSet
from .oracle import compare, oracle_compute
from .sim import SimConfig, simulate
from .tiling import execute, worker_count

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_VERIFY = 4

LAWS = [law.value for law in Law]
PLANS = ("1x1", "1x4", "2x4", "4x4")
SINGLE_TOL = 2e-5
DOUBLE_TOL = 1e-12

UNROLLING_PRESET = {"laws": ["ga"], "plans": ["1x1", "1x4", "4x4"], "n": [1024, 2048, 4096, 8192, 16384, 32768, 65536],
        "replicate": [1]}
REPLICATION_PRESET = {"laws": ["ljc-sigmoidal"], "plans": ["2x4"], "n": [256, 512, 1024, 2048, 4096],
        "replicate": [1, 2, 4, 8, 16]}


def _int_list(text: str) -> list:
    try:
        vals = [int(v) for v in text.split(",") if v]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def _str_list(choices):
    def parse(text):
        vals = [v for v in text.split(",") if v]
        bad = [v for v in vals if v not in choices]
        if bad or not vals:
            raise argparse.ArgumentTypeError(f"invalid choice(s) {bad}; pick from {list(choices)}")
        return vals
    return parse


def _spec_args(p):
    p.add_argument("--law", choices=LAWS, default=None)
    p.add_argument("--eps2", type=float, default=0.0, help="gravity softening eps^2")
    p.add_argument("-G", "--gravitational-constant", dest="G", type=float, default=1.0)
    p.add_argument("--dielectric", type=float, default=1.0)
    p.add_argument("--sigmoid", type=float, nargs=4, metavar=("A", "B", "C", "D"), default=None,
                   help="sigmoidal screening coefficients alpha beta gamma delta")
    p.add_argument("--lj", choices=("standard", "physical"), default="standard")
    p.add_argument("--zeta", choices=("standard", "gamma-r"), default="standard")


def _plan_args(p, many=False):
    if many:
        p.add_argument("--plan", type=_str_list(PLANS), default=None, help="comma-separated plans")
        p.add_argument("--replicate", type=_int_list, default=None, help="comma-separated R values")
    else:
        p.add_argument("--plan", choices=PLANS, default="1x1")
        p.add_argument("--replicate", type=int, default=1, metavar="R")
    p.add_argument("--precision", choices=("single", "double"), default="single")
    p.add_argument("--lane-width", type=int, choices=(4, 8), default=4)


def _spec(args, law) -> KernelSpec:
    kw = {}
    if args.sigmoid is not None:
        kw["sigmoid_coeffs"] = tuple(args.sigmoid)
    return KernelSpec(law, G=args.G, eps2=args.eps2, dielectric=args.dielectric, lj_mode=args.lj,
                      zeta_mode=args.zeta, **kw)


def _plan(plan, replicate, args) -> ExecutionPlan:
    return ExecutionPlan.parse(plan, replication=replicate, precision=args.precision, lane_width=args.lane_width)


def _live_interactions(pset: ParticleSet, law: Law) -> int:
    n = pset.count
    excl = 0 if law.is_gravity else int(pset.excl_idx.size)
    return n * (n - 1) - excl


def _out(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_compute(args) -> int:
    file_law, pset = fileio.load(args.inp)
    law = Law.parse(args.law or file_law or "ga")
    spec = _spec(args, law)
    plan = _plan(args.plan, args.replicate, args)
    plan.validate_for(law)
    holder = {}

    def run():
        holder["r"] = execute(pset, spec, plan)

    timing = time_call(run, warmups=args.warmups, repeats=args.repeats)
    result = holder["r"]
    _out(args, fileio.format_forces(result))
    ledger = FlopLedger(law, _live_interactions(pset, law), timing.median)
    rec = BenchRecord.from_ledger(ledger, plan.label, plan.replication, pset.count, timing.samples)
    log = sys.stderr if not args.out else sys.stdout
    if args.format == "json":
        log.write(records_to_json([rec]))
    else:
        log.write(records_to_csv([rec]))
    if args.verify:
        cmp = compare(result, oracle_compute(pset, spec), SINGLE_TOL if plan.precision == "single" else DOUBLE_TOL)
        log.write(f"verify: max relative error {cmp.max_error:.3e} (particle {cmp.worst_index}), "
                  f"tol {cmp.tol:.1e}: {'PASS' if cmp.passed else 'FAIL'}\n")
        if not cmp.passed:
            return EXIT_VERIFY
    return EXIT_OK


def _bench_input(law: Law, n: int, seed: int) -> ParticleSet:
    return generate("plummer" if law.is_gravity else "uniform", n, seed)


def run_bench(laws, plans, ns, replicates, *, seed=0, warmups=3, repeats=10, precision="single",
              lane_width=4, spec_kwargs=None, progress=None) -> list:
    """Benchmark grid; one BenchRecord per (law, plan, R, N) cell that is valid."""
    records = []
    for law_name in laws:
        law = Law.parse(law_name)
        spec = KernelSpec(law, **(spec_kwargs or {}))
        for n in ns:
            pset = _bench_input(law, n, seed)
            for plan_name in plans:
                for R in replicates:
                    plan = ExecutionPlan.parse(plan_name, replication=R, precision=precision,
                                               lane_width=lane_width)
                    try:
                        plan.validate_for(law)
                    except ConfigurationError:
                        continue
                    if R > pset.padded(plan.tile_width).padded_count:
                        continue
                    timing = time_call(lambda: execute(pset, spec, plan), warmups=warmups, repeats=repeats)
                    ledger = FlopLedger(law, _live_interactions(pset, law), timing.median)
                    rec = BenchRecord.from_ledger(ledger, plan.label, R, n, timing.samples)
                    records.append(rec)
                    if progress is not None:
                        progress(rec)
    return records


def gnuplot_blocks(records, key: str) -> str:
    """gnuplot data: one index block per series, blank-line separated.

    ``key="strategy"`` gives GFlops vs N per plan; ``key="N"`` gives GFlops
    vs R per particle count.
    """
    out = []
    if key == "strategy":
        series = sorted({(r.law, r.strategy, r.replication) for r in records})
        for law, strat, R in series:
            out.append(f'# "{law} {strat} R={R}"\n# N gflops interactions_per_sec')
            for r in sorted((r for r in records if (r.law, r.strategy, r.replication) == (law, strat, R)),
                            key=lambda r: r.N):
                out.append(f"{r.N} {r.gflops!r} {r.interactions_per_sec!r}")
            out.append("\n")
    else:
        series = sorted({(r.law, r.strategy, r.N) for r in records})
        for law, strat, n in series:
            out.append(f'# "{law} {strat} N={n}"\n# R gflops interactions_per_sec')
            for r in sorted((r for r in records if (r.law, r.strategy, r.N) == (law, strat, n)),
                            key=lambda r: r.replication):
                out.append(f"{r.replication} {r.gflops!r} {r.interactions_per_sec!r}")
            out.append("\n")
    return "\n".join(out)


def cmd_bench(args) -> int:
    preset = {"unrolling": UNROLLING_PRESET, "replication": REPLICATION_PRESET}.get(args.preset, {})
    laws = [args.law] if args.law else preset.get("laws", ["ga"])
    plans = args.plan or preset.get("plans", ["1x1"])
    ns = args.n or preset.get("n", [1024])
    reps = args.replicate or preset.get("replicate", [1])
    if min(ns) < 1:
        raise ConfigurationError("N values must be >= 1")
    spec_kwargs = {"G": args.G, "eps2": args.eps2, "dielectric": args.dielectric, "lj_mode": args.lj,
                   "zeta_mode": args.zeta}
    if args.sigmoid is not None:
        spec_kwargs["sigmoid_coeffs"] = tuple(args.sigmoid)
    progress = None
    if args.verbose:
        def progress(rec):
            print(f"{rec.law} {rec.strategy} R={rec.replication} N={rec.N}: {rec.gflops:.3f} GFlops",
                  file=sys.stderr)
    records = run_bench(laws, plans, ns, reps, seed=args.seed, warmups=args.warmups, repeats=args.repeats,
                        precision=args.precision, lane_width=args.lane_width, spec_kwargs=spec_kwargs,
                        progress=progress)
    _out(args, records_to_json(records) if args.format == "json" else records_to_csv(records))
    if args.gnuplot:
        key = "N" if (args.preset == "replication" or len(reps) > 1) else "strategy"
        Path(args.gnuplot).write_text(gnuplot_blocks(records, key))
    if args.trend:
        threads = min(worker_count(), os.cpu_count() or 1)
        reports = [unrolling_trend(records), replication_trend(records, threads)]
        for rep in reports:
            print(rep.line(), file=sys.stderr)
    return EXIT_OK


def cmd_gen(args) -> int:
    n = args.n if args.n is not None else (PROTEIN_DEFAULT_N if args.kind == "protein-like" else 1024)
    if n < 1:
        raise ConfigurationError("N must be >= 1")
    pset = generate(args.kind, n, args.seed)
    law = args.law or ("ga" if args.kind == "plummer" else "ljc-const")
    if args.binary:
        if not args.out:
            raise ConfigurationError("--binary needs --out")
        fileio.write_binary(args.out, pset)
    else:
        _out(args, fileio.format_particles(pset, law))
    return EXIT_OK


def verify_matrix(laws, ns, seed, *, precisions=("single", "double"), replicates=(1, 2), fault=False,
                  lane_width=4, report=print):
    """Every valid plan x law x N against the oracle; returns the list of failures."""
    failures = []
    for law_name in laws:
        law = Law.parse(law_name)
        spec = KernelSpec(law)
        for n in ns:
            pset = generate("uniform", n, seed)
            ref = oracle_compute(pset, spec)
            for precision in precisions:
                tol = SINGLE_TOL if precision == "single" else DOUBLE_TOL
                for plan_name in PLANS:
                    for R in replicates:
                        plan = ExecutionPlan.parse(plan_name, replication=R, precision=precision,
                                                   lane_width=lane_width)
                        if plan.i_unroll > law.max_i_unroll or R > pset.padded(plan.tile_width).padded_count:
                            continue
                        res = execute(pset, spec, plan)
                        if fault:
                            res.accelerations[n // 2] *= 1.01
                            res.accelerations[n // 2] += 1e-3
                        cmp = compare(res, ref, tol)
                        label = f"{law.value:14s} N={n:<6d} {plan.label:8s} R={R} {precision:6s}"
                        report(f"{label} {cmp.summary()}")
                        if not cmp.passed:
                            failures.append((label, cmp))
    return failures


def cmd_verify(args) -> int:
    laws = args.law_list or LAWS
    ns = args.n or [1, 2, 3, 63, 64, 1024]
    failures = verify_matrix(laws, ns, args.seed, fault=args.inject_fault, lane_width=args.lane_width)
    if failures:
        print(f"{len(failures)} verification failure(s)", file=sys.stderr)
        return EXIT_VERIFY
    print("all plans match the oracle")
    return EXIT_OK


def cmd_simulate(args) -> int:
    file_law, pset = fileio.load(args.inp)
    law = Law.parse(args.law or file_law or "ga")
    spec = _spec(args, law)
    plan = _plan(args.plan, args.replicate, args)
    plan.validate_for(law)
    cfg = SimConfig(args.dt, args.steps, spec, plan, args.snapshot_every, use_oracle=args.oracle)
    res = simulate(pset, cfg, snapshot_dir=args.snapshot_dir, track_energy=law.is_gravity)
    if args.out:
        fileio.write_particles(args.out, res.state, law)
    summary = {"steps": res.steps, "snapshots": [str(p) for p in res.snapshots]}
    if res.energies is not None:
        e = res.energies
        summary["energy_initial"] = float(e[0])
        summary["energy_final"] = float(e[-1])
        summary["max_relative_drift"] = float(np.max(np.abs(e - e[0])) / abs(e[0])) if e[0] else None
    print(json.dumps(summary))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pforge", description="O(N^2) pairwise force kernels and benchmarks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute forces for one particle file")
    p.add_argument("--in", dest="inp", required=True, metavar="PATH")
    p.add_argument("--out", metavar="PATH")
    _spec_args(p)
    _plan_args(p)
    p.add_argument("--repeats", type=int, default=1)
    p.add_argument("--warmups", type=int, default=1)
    p.add_argument("--verify", action="store_true", help="compare against the double-precision oracle")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("bench", help="throughput sweep over laws, plans, N and R")
    _spec_args(p)
    _plan_args(p, many=True)
    p.add_argument("--n", type=_int_list, default=None, help="comma-separated particle counts")
    p.add_argument("--preset", choices=("unrolling", "replication"), default=None,
                   help="unrolling: GA plan ladder over N; replication: LJC sigmoidal R sweep")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=10)
    p.add_argument("--warmups", type=int, default=3)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--gnuplot", metavar="PATH", help="also write gnuplot-style data blocks")
    p.add_argument("--trend", action="store_true", help="print unrolling/replication trend reports")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen", help="write a seeded particle file")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--law", choices=LAWS, default=None, help="law recorded in the file header")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--binary", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check every plan against the oracle")
    p.add_argument("--law", dest="law_list", type=_str_list(LAWS), default=None, help="comma-separated laws")
    p.add_argument("--n", type=_int_list, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lane-width", type=int, choices=(4, 8), default=4)
    p.add_argument("--inject-fault", action="store_true", help="corrupt one force per run (self-test)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simulate", help="leapfrog integration with snapshots")
    p.add_argument("--in", dest="inp", required=True, metavar="PATH")
    p.add_argument("--out", metavar="PATH", help="final state")
    _spec_args(p)
    _plan_args(p)
    p.add_argument("--dt", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--snapshot-every", type=int, default=0)
    p.add_argument("--snapshot-dir", metavar="DIR")
    p.add_argument("--oracle", action="store_true", help="integrate with oracle forces")
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigurationError, ParseError, ParticleDataError, FileNotFoundError) as exc:
        print(f"pforge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SingularityError, SimulationError, FloatingPointError) as exc:
        print(f"pforge: numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
