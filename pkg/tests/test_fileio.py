import numpy as np
import pytest

from pforge import generate as gen
from pforge.errors import ParseError
from pforge.fileio import (format_forces, format_particles, load, parse_forces, parse_particles, read_binary,
                           write_binary, write_particles)
from pforge.model import ExecutionPlan, KernelSpec, Law, from_arrays
from pforge.tiling import execute


def _same(a, b):
    for name in ("x", "y", "z", "vx", "vy", "vz", "masses", "charges", "lj_epsilon", "lj_sigma"):
        assert np.array_equal(getattr(a, name)[:a.count], getattr(b, name)[:b.count]), name
    assert [a.exclusions(i) for i in range(a.count)] == [b.exclusions(i) for i in range(b.count)]


def test_text_round_trip_is_exact(tmp_path):
    pset = gen.protein_like(40, 2)
    path = tmp_path / "p.pf"
    write_particles(path, pset, "ljc-sigmoidal")
    law, back = load(path)
    assert law is Law.LJC_SIGMOIDAL
    _same(pset, back)


def test_text_round_trip_of_double_values():
    pos = np.random.default_rng(0).normal(size=(5, 3))
    pset = from_arrays(pos, masses=np.full(5, 0.1))
    _, back = parse_particles(format_particles(pset))
    assert np.array_equal(back.positions, pos)


def test_binary_round_trip(tmp_path):
    pset = gen.protein_like(64, 1)
    path = tmp_path / "p.bin"
    write_binary(path, pset)
    n = pset.count
    assert path.stat().st_size == 8 + 4 * n * 11 + 4 * len(pset.excl_idx)
    law, back = load(path)
    assert law is None
    _same(pset, back)


def test_binary_truncated(tmp_path):
    path = tmp_path / "p.bin"
    write_binary(path, gen.uniform(4, 0))
    data = path.read_bytes()
    path.write_bytes(data[:-4])
    with pytest.raises(ParseError):
        read_binary(path)
    path.write_bytes(data[:5])
    with pytest.raises(ParseError):
        read_binary(path)


def test_comments_and_blank_lines_ignored():
    text = "#pforge v1 ga\n\n# comment\n0 0 0 0 0 0 1 0 0 1\n1 0 0 0 0 0 1 0 0 1 excl:0\n"
    law, pset = parse_particles(text)
    assert law is Law.GA and pset.count == 2
    assert pset.exclusions(0) == (1,)


@pytest.mark.parametrize("text, line, fragment", [
    ("", 1, "empty"),
    ("#pforge v2 ga\n0 0 0 0 0 0 1 0 0 1\n", 1, "version"),
    ("#pforge v1 magic\n0 0 0 0 0 0 1 0 0 1\n", 1, "unknown"),
    ("#pforge v1 ga\n0 0 0 0 0 0 1 0 0 1\n0 0 1 0 0 0 1 0 0\n", 3, "10 numeric fields"),
    ("#pforge v1 ga\n0 0 0 0 0 0 1 0 0 1\n0 0 1 0 0 0 1 0 zero 1\n", 3, "could not convert"),
    ("#pforge v1 ga\n0 0 0 0 0 0 1 0 0 nan\n", 2, "non-finite"),
    ("#pforge v1 ga\n\n0 0 0 0 0 0 1 0 0 1 excl:1\n", 3, "out of range"),
    ("#pforge v1 ga\n0 0 0 0 0 0 1 0 0 1 excl:a\n", 2, "bad exclusion"),
    ("#pforge v1 ga\n# nothing\n", 2, "no particle records"),
])
def test_parse_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(ParseError) as info:
        parse_particles(text, path="in.pf")
    assert info.value.line == line
    assert fragment in str(info.value).lower()
    assert str(info.value).startswith(f"in.pf:{line}:")


def test_model_errors_become_parse_errors():
    with pytest.raises(ParseError, match="negative mass"):
        parse_particles("#pforge v1 ga\n0 0 0 0 0 0 -1 0 0 1\n")


@pytest.mark.parametrize("law", ["ga", "gaj"])
def test_force_round_trip(law):
    pset = gen.uniform(9, 0)
    res = execute(pset, KernelSpec(law), ExecutionPlan("1x4"))
    text = format_forces(res)
    assert len(text.splitlines()) == 9
    assert text.splitlines()[3].startswith("3 ")
    acc, jerk = parse_forces(text)
    assert np.array_equal(acc, res.accelerations.astype(np.float64))
    assert (jerk is None) == (law == "ga")


def test_force_parse_errors():
    with pytest.raises(ParseError):
        parse_forces("0 1 2\n")
    with pytest.raises(ParseError) as info:
        parse_forces("0 1 2 3\n2 1 2 3\n")
    assert info.value.line == 2
