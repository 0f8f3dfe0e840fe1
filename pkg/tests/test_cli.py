import json
import subprocess
import sys

import numpy as np
import pytest

from pforge.cli import EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, main
from pforge.fileio import load, parse_forces, parse_particles


def run(*argv):
    return main([str(a) for a in argv])


def test_gen_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.pf", tmp_path / "b.pf"
    assert run("gen", "plummer", "--n", 50, "--seed", 4, "--out", a) == EXIT_OK
    assert run("gen", "plummer", "--n", 50, "--seed", 4, "--out", b) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()
    assert run("gen", "plummer", "--n", 3, "--seed", 4) == EXIT_OK
    law, pset = parse_particles(capsys.readouterr().out)
    assert law.value == "ga" and pset.count == 3


def test_protein_like_default_size(tmp_path):
    path = tmp_path / "p.bin"
    assert run("gen", "protein-like", "--binary", "--out", path) == EXIT_OK
    law, pset = load(path)
    assert pset.count == 1280 and pset.has_exclusions
    out = tmp_path / "f.txt"
    assert run("compute", "--in", path, "--law", "ljc-sigmoidal", "--plan", "2x4", "--out", out) == EXIT_OK
    assert len(out.read_text().splitlines()) == 1280


def test_compute_writes_forces_and_record(tmp_path, capsys):
    inp, out = tmp_path / "in.pf", tmp_path / "out.txt"
    run("gen", "uniform", "--n", 64, "--out", inp, "--law", "gaj")
    capsys.readouterr()
    assert run("compute", "--in", inp, "--out", out, "--plan", "1x4", "--verify", "--format", "json") == EXIT_OK
    acc, jerk = parse_forces(out.read_text())
    assert acc.shape == (64, 3) and jerk.shape == (64, 3)
    log = capsys.readouterr().out
    record = json.loads(log[:log.index("]") + 1])[0]
    assert record["law"] == "gaj" and record["N"] == 64 and record["strategy"] == "1x4"
    assert "PASS" in log


def test_plan_law_conflict_is_usage_error(tmp_path, capsys):
    inp = tmp_path / "in.pf"
    run("gen", "uniform", "--n", 8, "--out", inp)
    assert run("compute", "--in", inp, "--law", "gaj", "--plan", "4x4") == EXIT_USAGE
    assert "at most 2x4" in capsys.readouterr().err


def test_bad_input_is_usage_error(tmp_path, capsys):
    bad = tmp_path / "bad.pf"
    bad.write_text("#pforge v1 ga\n0 0 0 0 0 0 1 0 0\n")
    assert run("compute", "--in", bad) == EXIT_USAGE
    assert ":2:" in capsys.readouterr().err
    assert run("compute", "--in", tmp_path / "missing.pf") == EXIT_USAGE


def test_singular_input_is_numeric_error(tmp_path, capsys):
    path = tmp_path / "s.pf"
    path.write_text("#pforge v1 ga\n0 0 0 0 0 0 1 0 0 1\n0 0 0 0 0 0 1 0 0 1\n")
    assert run("compute", "--in", path) == EXIT_NUMERIC
    assert "0" in capsys.readouterr().err


def test_argparse_rejects_unknown_plan():
    with pytest.raises(SystemExit) as info:
        run("bench", "--plan", "3x3")
    assert info.value.code == 2


def test_verify_small(capsys):
    assert run("verify", "--law", "ga,ljc-sigmoidal", "--n", "1,5") == EXIT_OK
    out = capsys.readouterr().out
    assert "all plans match the oracle" in out
    assert "N=1 " in out


def test_verify_detects_injected_fault(capsys):
    assert run("verify", "--law", "ga", "--n", 16, "--inject-fault") == EXIT_VERIFY
    assert "verification failure" in capsys.readouterr().err


def test_bench_single_cell(tmp_path, capsys):
    out, plot = tmp_path / "b.csv", tmp_path / "b.dat"
    code = run("bench", "--plan", "1x1,4x4", "--n", 64, "--repeats", 1, "--warmups", 0, "--out", out,
               "--gnuplot", plot, "--trend")
    assert code == EXIT_OK
    lines = out.read_text().splitlines()
    assert lines[0].startswith("law,strategy,replication,N")
    assert len(lines) == 3
    assert '# "ga 4x4 R=1"' in plot.read_text()
    assert "[SKIP] unrolling trend" in capsys.readouterr().err


def test_bench_skips_invalid_cells(capsys):
    assert run("bench", "--law", "gaj", "--plan", "4x4,2x4", "--n", 32, "--repeats", 1, "--warmups", 0,
               "--format", "json") == EXIT_OK
    rows = json.loads(capsys.readouterr().out)
    assert [r["strategy"] for r in rows] == ["2x4"]


def test_simulate(tmp_path, capsys):
    inp, out, snaps = tmp_path / "in.pf", tmp_path / "out.pf", tmp_path / "snaps"
    run("gen", "plummer", "--n", 16, "--seed", 3, "--out", inp)
    capsys.readouterr()
    code = run("simulate", "--in", inp, "--out", out, "--dt", 1e-3, "--steps", 20, "--eps2", 0.01,
               "--snapshot-every", 10, "--snapshot-dir", snaps, "--precision", "double")
    assert code == EXIT_OK
    summary = json.loads(capsys.readouterr().out)
    assert summary["steps"] == 20 and len(summary["snapshots"]) == 2
    assert summary["max_relative_drift"] < 1e-5
    _, final = load(out)
    assert final.count == 16
    assert not np.array_equal(final.positions, load(inp)[1].positions)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pforge.cli", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0
    for cmd in ("compute", "bench", "gen", "verify", "simulate"):
        assert cmd in proc.stdout
