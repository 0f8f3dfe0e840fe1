import json

import pytest

from pforge.metrics import (CSV_COLUMNS, BenchRecord, FlopAuditError, FlopLedger, audit_flops,
                            effective_bandwidth, flops_per_interaction, input_bytes_per_interaction,
                            interactions_reported, records_from_json, records_to_csv, records_to_json,
                            replication_trend, time_call, unrolling_trend)
from pforge.model import Law


@pytest.mark.parametrize("law, flops, nbytes", [
    ("ga", 19, 64), ("gaj", 42, 128), ("ljc-const", 30, 104), ("ljc-linear", 30, 104), ("ljc-sigmoidal", 43, 104),
])
def test_per_law_constants(law, flops, nbytes):
    assert flops_per_interaction(law) == flops
    assert input_bytes_per_interaction(law) == nbytes


@pytest.mark.parametrize("law", [law.value for law in Law])
def test_itemized_audit_matches_constants(law):
    audit = audit_flops(law)
    assert audit.per_interaction == flops_per_interaction(law)
    assert "total per 4 interactions" in str(audit)


def test_ga_block_is_76():
    assert audit_flops("ga").total == 76


def test_audit_reports_itemized_diff():
    ops = (("d = rj - ri", 12), ("r2 = d.d + eps", 24), ("rinv", 4), ("acc += s * d", 24))
    with pytest.raises(FlopAuditError) as info:
        audit_flops("ga", ops)
    text = str(info.value)
    assert "itemized 64 flops" in text and "expected 76" in text
    assert "diff -12" in text
    assert "rinv" in text


def test_interaction_counting():
    assert interactions_reported(999000, uses_third_law=False) == 999000
    assert interactions_reported(499500, uses_third_law=True) == 999000
    with pytest.raises(ValueError):
        interactions_reported(-1, False)


def test_ledger_rates_are_exact():
    ledger = FlopLedger("ga", interactions=1000 * 999, elapsed=0.5)
    assert ledger.flops == 19 * 999000
    assert ledger.gflops == 19 * 999000 * 2 / 1e9
    assert ledger.interactions_per_sec == 1998000.0
    assert effective_bandwidth(ledger) == ledger.effective_bandwidth_GBps == 64 * 1998000 / 1e9


def test_ledger_doubling_interactions_doubles_flops():
    a = FlopLedger("ljc-sigmoidal", 12345, 1.0)
    b = FlopLedger("ljc-sigmoidal", 2 * 12345, 1.0)
    assert b.flops == 2 * a.flops
    assert b.gflops == 2 * a.gflops


def test_ledger_zero_elapsed_errors():
    ledger = FlopLedger("ga", 10, 0.0)
    assert ledger.flops == 190
    with pytest.raises(ValueError, match="elapsed > 0"):
        ledger.gflops
    with pytest.raises(ValueError):
        FlopLedger("ga", 10, -1.0)
    with pytest.raises(ValueError):
        FlopLedger("ga", -10, 1.0)


def _records():
    recs = []
    for strat, rate in (("1x1", 1.0e8), ("1x4", 1.2e8), ("4x4", 1.5e8)):
        ledger = FlopLedger("ga", int(rate), 1.0)
        recs.append(BenchRecord.from_ledger(ledger, strat, 1, 4096, samples=(1.0, 1.0)))
    return recs


def test_csv_and_json_round_trip():
    recs = _records()
    text = records_to_csv(recs)
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 4
    back = records_from_json(records_to_json(recs))
    assert [r.row() for r in back] == [r.row() for r in recs]
    assert json.loads(records_to_json(recs))[2]["strategy"] == "4x4"


def test_time_call_median_and_warmups():
    calls = []
    ticks = iter(range(100))
    timing = time_call(lambda: calls.append(1), warmups=2, repeats=5, clock=lambda: next(ticks) ** 2)
    assert len(calls) == 7
    # samples are (2k+1)^2 - (2k)^2 = 4k + 1
    assert timing.samples == (1, 5, 9, 13, 17)
    assert timing.median == 9
    assert timing.warmups == 2
    with pytest.raises(ValueError):
        time_call(lambda: None, repeats=0)


def test_unrolling_trend():
    assert unrolling_trend(_records()).status == "pass"
    flipped = _records()
    flipped[0], flipped[2] = (BenchRecord(**{**flipped[0].__dict__, "strategy": "4x4"}),
                              BenchRecord(**{**flipped[2].__dict__, "strategy": "1x1"}))
    report = unrolling_trend(flipped)
    assert report.status == "warn"
    assert report.line().startswith("[WARN] unrolling trend: N=4096")
    assert unrolling_trend(_records()[:2]).status == "skip"


def _rep(R, rate, n=512):
    return BenchRecord("ljc-sigmoidal", "2x4", R, n, 1.0, 0.0, rate, 0.0)


def test_replication_trend():
    assert replication_trend([_rep(1, 1.0), _rep(4, 1.5)], threads=8).status == "pass"
    weak = replication_trend([_rep(1, 1.0), _rep(4, 1.05)], threads=1)
    assert weak.status == "warn" and "hardware threads" in weak.detail
    assert replication_trend([_rep(1, 1.0), _rep(4, 1.05)], threads=8).status == "warn"
    assert replication_trend([_rep(1, 1.0), _rep(4, 1.9)], threads=1).status == "warn"
    assert replication_trend([_rep(4, 2.0)], threads=8).status == "skip"
    assert replication_trend([_rep(1, 1.0), _rep(4, 3.0, n=4096)], threads=8).status == "skip"
