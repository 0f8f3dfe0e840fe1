"""One test per acceptance criterion, each printing a pass/fail line.

Compile time is kept out of the runtime budgets: kernels are exercised once
on a tiny input before the clock starts.
"""

import csv
import os
import time

import numpy as np
import pytest

from pforge import generate as gen
from pforge.cli import EXIT_USAGE, main, run_bench
from pforge.errors import ConfigurationError
from pforge.kernels import ga_pair, gaj_pair
from pforge.metrics import (BenchRecord, audit_flops, flops_per_interaction, interactions_reported, replication_trend,
                            unrolling_trend)
from pforge.model import ExecutionPlan, KernelSpec, Law, from_arrays
from pforge.oracle import compare, oracle_compute
from pforge.sim import SimConfig, simulate
from pforge.tiling import execute, run_4x4, worker_count

LAWS = list(Law)
PLANS = ("1x1", "1x4", "2x4", "4x4")
SINGLE_TOL = 2e-5
DOUBLE_TOL = 1e-12


def plans_for(law, **kw):
    return [ExecutionPlan(p, **kw) for p in PLANS if ExecutionPlan(p).i_unroll <= law.max_i_unroll]


def warm_up():
    pset = gen.uniform(9, 0)
    for law in LAWS:
        for precision in ("single", "double"):
            for R in (1, 2):
                for plan in plans_for(law, precision=precision, replication=R):
                    execute(pset, KernelSpec(law), plan)
        oracle_compute(pset, KernelSpec(law))


def test_criterion_1_oracle_equivalence(acceptance_report):
    warm_up()
    t0 = time.perf_counter()
    worst = {"single": (0.0, ""), "double": (0.0, "")}
    failures = []
    cells = 0
    for law in LAWS:
        spec = KernelSpec(law)
        for n in (1, 2, 3, 63, 64, 4096):
            pset = gen.uniform(n, 0)
            ref = oracle_compute(pset, spec)
            for precision, tol in (("single", SINGLE_TOL), ("double", DOUBLE_TOL)):
                for R in (1, 2, 4):
                    for plan in plans_for(law, precision=precision, replication=R):
                        if R > pset.padded(plan.tile_width).padded_count:
                            continue
                        cmp = compare(execute(pset, spec, plan), ref, tol)
                        cells += 1
                        label = f"{law.value} N={n} {plan.label} R={R}"
                        if cmp.max_error > worst[precision][0]:
                            worst[precision] = (cmp.max_error, label)
                        if not cmp.passed:
                            failures.append(f"{label} {precision}: {cmp.summary()}")
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 60
    acceptance_report(1, ok, f"{cells} law/plan/R/N/precision cells in {elapsed:.1f}s; worst single "
                             f"{worst['single'][0]:.2e} ({worst['single'][1]}), worst double "
                             f"{worst['double'][0]:.2e} ({worst['double'][1]})")
    assert not failures, failures[:5]
    assert elapsed < 60


def test_criterion_2_flop_goldens(acceptance_report):
    got = [flops_per_interaction(law) for law in LAWS]
    block = audit_flops(Law.GA).total
    audits = [audit_flops(law).per_interaction for law in LAWS]
    ok = got == [19, 42, 30, 30, 43] and block == 76 and audits == got
    acceptance_report(2, ok, f"flops/interaction {got}, GA block {block}")
    assert got == [19, 42, 30, 30, 43]
    assert block == 76
    assert audits == got


def test_criterion_3_interaction_accounting(acceptance_report):
    pset = gen.protein_like(200, 0)
    n = pset.count
    ljc = oracle_compute(pset, KernelSpec("ljc-const")).pair_count
    ga = oracle_compute(pset, KernelSpec("ga")).pair_count
    expect_ljc = n * (n - 1) // 2 - pset.excluded_pair_count
    doubled = interactions_reported(ljc, uses_third_law=True)
    ok = ljc == expect_ljc and ga == n * (n - 1) // 2 and doubled == 2 * expect_ljc
    acceptance_report(3, ok, f"N={n}, {pset.excluded_pair_count} excluded pairs, pair_count {ljc}, reported {doubled}")
    assert ljc == expect_ljc
    assert ga == n * (n - 1) // 2
    assert doubled == 2 * expect_ljc
    assert interactions_reported(n * (n - 1), uses_third_law=False) == n * (n - 1)


def test_criterion_4_jerk_finite_difference(acceptance_report):
    gaj_pair((0, 0, 0), (1, 0, 0), (0, 0, 0), (0, 1, 0), 1.0, KernelSpec("gaj"))
    t0 = time.perf_counter()
    rng = np.random.default_rng(0)
    spec_ga, spec_gaj = KernelSpec("ga"), KernelSpec("gaj")
    h = 1e-6
    worst = 0.0
    for _ in range(100):
        ri, rj, vi, vj = rng.normal(size=(4, 3))
        m = rng.uniform(0.1, 2.0)
        jerk = gaj_pair(ri, rj, vi, vj, m, spec_gaj).jerk_contrib
        ap = ga_pair(ri + h * vi, rj + h * vj, m, spec_ga).accel_contrib
        am = ga_pair(ri - h * vi, rj - h * vj, m, spec_ga).accel_contrib
        fd = (ap - am) / (2 * h)
        worst = max(worst, float(np.linalg.norm(fd - jerk) / np.linalg.norm(jerk)))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-4 and elapsed < 1.0
    acceptance_report(4, ok, f"100 pairs, worst relative error {worst:.2e}, {elapsed:.3f}s")
    assert worst <= 1e-4
    assert elapsed < 1.0


def test_criterion_5_conservation(acceptance_report):
    warm_up()
    t0 = time.perf_counter()
    worst_mom = 0.0
    for law in ("ga", "gaj"):
        for seed in range(3):
            pset = gen.plummer(512, seed)
            a = oracle_compute(pset, KernelSpec(law, eps2=1e-4)).accelerations
            ma = pset.masses[:pset.count, None] * a
            worst_mom = max(worst_mom, float(np.linalg.norm(ma.sum(axis=0)) / np.abs(ma).sum()))
    state = gen.plummer(16, 3)
    cfg = SimConfig(dt=1e-3, steps=10_000, spec=KernelSpec("ga", eps2=0.01), use_oracle=True)
    energies = simulate(state, cfg, track_energy=True).energies
    drift = float(np.max(np.abs(energies - energies[0])) / abs(energies[0]))
    elapsed = time.perf_counter() - t0
    ok = worst_mom <= 1e-10 and drift <= 1e-4 and elapsed < 30
    acceptance_report(5, ok, f"momentum rate {worst_mom:.1e} relative; 16-body energy drift {drift:.2e} "
                             f"over 10000 steps; {elapsed:.1f}s")
    assert worst_mom <= 1e-10
    assert drift <= 1e-4
    assert elapsed < 30


def test_criterion_6_unrolling_trend(acceptance_report, tmp_path):
    # soft: the report is produced by the bench command; its status is not gated
    n = int(os.environ.get("PFORGE_TREND_N", 65536))
    gen.plummer(8, 0)
    run_bench(["ga"], ["1x1", "1x4", "4x4"], [64], [1], warmups=1, repeats=1)
    out = tmp_path / "unrolling.csv"
    code = main(["bench", "--plan", "1x1,1x4,4x4", "--n", str(n), "--warmups", "0", "--repeats", "1",
                 "--out", str(out)])
    assert code == 0
    rows = list(csv.DictReader(out.read_text().splitlines()))
    records = [BenchRecord(r["law"], r["strategy"], int(r["replication"]), int(r["N"]), float(r["elapsed_s"]),
                           float(r["gflops"]), float(r["interactions_per_sec"]), float(r["bandwidth_GBps"]))
               for r in rows]
    report = unrolling_trend(records, n=n)
    acceptance_report(6, report.status.upper(), report.detail + " (soft criterion)")
    assert report.status in ("pass", "warn")


def test_criterion_7_replication_trend(acceptance_report):
    records = run_bench(["ljc-sigmoidal"], ["2x4"], [256, 512, 1024], [1, 2, 4, 8], warmups=2, repeats=5)
    report = replication_trend(records, min(worker_count(), os.cpu_count() or 1))
    acceptance_report(7, report.status.upper(), report.detail + " (soft criterion)")
    assert report.status in ("pass", "warn")


@pytest.mark.parametrize("law", ["gaj", "ljc-const", "ljc-linear", "ljc-sigmoidal"])
def test_criterion_8_plan_law_constraint(law, acceptance_report, tmp_path):
    # coincident particles: any compute would raise a singularity, so a
    # configuration error proves validation happens first
    pset = from_arrays([[0, 0, 0], [0, 0, 0]], charges=[1, 1])
    raised = False
    try:
        run_4x4(pset, KernelSpec(law))
    except ConfigurationError:
        raised = True
    path = tmp_path / "p.pf"
    path.write_text(f"#pforge v1 {law}\n0 0 0 0 0 0 1 1 0 1\n0 0 0 0 0 0 1 1 0 1\n")
    code = main(["compute", "--in", str(path), "--plan", "4x4"])
    ok = raised and code == EXIT_USAGE
    acceptance_report(8, ok, f"{law} 4x4 rejected before compute (exit {code})")
    assert raised
    assert code == EXIT_USAGE


def test_criterion_9_padding_inertness(acceptance_report):
    mismatches = []
    cells = 0
    for n in (1, 2, 3, 5, 6, 7, 63, 65):
        for law in LAWS:
            spec = KernelSpec(law)
            pset = gen.protein_like(n, 0) if n >= 5 else gen.uniform(n, 0)
            for precision in ("single", "double"):
                for R in (1, 2):
                    for plan in plans_for(law, precision=precision, replication=R):
                        aligned = pset.padded(plan.tile_width)
                        if R > aligned.padded_count:
                            continue
                        wider = aligned.padded_count + 3 * plan.tile_width + 4
                        extra = pset.padded(plan.tile_width, min_padded_count=wider)
                        a = execute(aligned, spec, plan)
                        b = execute(extra, spec, plan)
                        cells += 1
                        same = np.array_equal(a.accelerations, b.accelerations) and (
                            a.jerks is None or np.array_equal(a.jerks, b.jerks))
                        if not same:
                            mismatches.append(f"{law.value} N={n} {plan.label} R={R} {precision}")
    acceptance_report(9, not mismatches, f"{cells} cells bit-identical with extra inert padding"
                      if not mismatches else f"{len(mismatches)} mismatches, first {mismatches[0]}")
    assert not mismatches
