"""Domain types: particle sets, kernel parameters, execution plans and results.

Particles are stored structure-of-arrays: one contiguous array per coordinate
and per scalar property, so the inner j-loop of every kernel walks memory with
unit stride.  Sets are padded up to the tile width of the plan that will run
them; padding entries carry zero mass, charge and LJ well depth and therefore
contribute exactly nothing under every force law.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import ConfigurationError, ParticleDataError

DEFAULT_MAX_EXCLUSIONS = 32
DEFAULT_LANE_WIDTH = 4
LANE_WIDTHS = (4, 8)
I_TILE_BLOCKS = 64


class Law(str, enum.Enum):
    GA = "ga"
    GAJ = "gaj"
    LJC_CONST = "ljc-const"
    LJC_LINEAR = "ljc-linear"
    LJC_SIGMOIDAL = "ljc-sigmoidal"

    @property
    def code(self) -> int:
        return _LAW_CODES[self]

    @property
    def is_gravity(self) -> bool:
        return self in (Law.GA, Law.GAJ)

    @property
    def has_jerk(self) -> bool:
        return self is Law.GAJ

    @property
    def max_i_unroll(self) -> int:
        # GA fits four outputs per fragment; GAJ needs two outputs per particle
        # and the LJC kernels run out of registers past two i-particles.
        return 4 if self is Law.GA else 2

    @classmethod
    def parse(cls, value) -> "Law":
        if isinstance(value, Law):
            return value
        key = str(value).strip().lower().replace("_", "-")
        aliases = {"ljc": "ljc-const", "ljc-constant": "ljc-const", "ljc-sigmoid": "ljc-sigmoidal"}
        key = aliases.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise ConfigurationError(f"unknown force law {value!r}; expected one of {[m.value for m in cls]}") from None


_LAW_CODES = {Law.GA: 0, Law.GAJ: 1, Law.LJC_CONST: 2, Law.LJC_LINEAR: 3, Law.LJC_SIGMOIDAL: 4}


@dataclass(frozen=True)
class KernelSpec:
    """Which force law to evaluate and its physical constants.

    ``eps2`` is the softening length already squared; it is added to the
    squared separation of gravity pairs.  ``sigmoid_coeffs`` are
    ``(alpha, beta, gamma, delta)`` of the screening function
    ``zeta(r) = exp(alpha r^3 + beta r^2 + gamma + delta)``; with
    ``zeta_mode="gamma-r"`` the gamma term is multiplied by ``r`` instead.
    ``lj_mode="physical"`` swaps the as-tabulated Lennard-Jones term for the
    conventional ``24 eps [(s/r)^6 - 2 (s/r)^12] / r^2`` force.
    """

    law: Law = Law.GA
    G: float = 1.0
    eps2: float = 0.0
    dielectric: float = 1.0
    sigmoid_coeffs: tuple = (0.0, 0.04, 0.0, 0.0)
    lj_mode: str = "standard"
    zeta_mode: str = "standard"

    def __post_init__(self):
        object.__setattr__(self, "law", Law.parse(self.law))
        object.__setattr__(self, "sigmoid_coeffs", tuple(float(c) for c in self.sigmoid_coeffs))
        if len(self.sigmoid_coeffs) != 4:
            raise ConfigurationError("sigmoid_coeffs needs exactly four values (alpha, beta, gamma, delta)")
        for name in ("G", "eps2", "dielectric"):
            if not math.isfinite(getattr(self, name)):
                raise ConfigurationError(f"{name} must be finite")
        if not all(math.isfinite(c) for c in self.sigmoid_coeffs):
            raise ConfigurationError("sigmoid_coeffs must be finite")
        if self.eps2 < 0:
            raise ConfigurationError("eps2 must be >= 0")
        if self.dielectric <= 0:
            raise ConfigurationError("dielectric must be > 0")
        if self.lj_mode not in ("standard", "physical"):
            raise ConfigurationError(f"lj_mode must be 'standard' or 'physical', got {self.lj_mode!r}")
        if self.zeta_mode not in ("standard", "gamma-r"):
            raise ConfigurationError(f"zeta_mode must be 'standard' or 'gamma-r', got {self.zeta_mode!r}")

    @property
    def softening(self) -> float:
        """Value added to r^2 inside the kernel (LJC laws have none)."""
        return self.eps2 if self.law.is_gravity else 0.0


class Strategy(str, enum.Enum):
    UNROLL_1x1 = "1x1"
    UNROLL_1x4 = "1x4"
    UNROLL_2x4 = "2x4"
    UNROLL_4x4 = "4x4"
    # Table names used for the jerk and LJC kernels.
    GAJ_1x4 = "1x4"
    LJC_2x4 = "2x4"

    @property
    def i_unroll(self) -> int:
        return int(self.value.split("x")[0])

    @classmethod
    def parse(cls, value) -> "Strategy":
        if isinstance(value, Strategy):
            return value
        text = str(value).strip()
        if text in cls.__members__:
            return cls[text]
        try:
            return cls(text.lower())
        except ValueError:
            raise ConfigurationError(f"unknown plan {value!r}; expected one of 1x1, 1x4, 2x4, 4x4") from None


@dataclass(frozen=True)
class ExecutionPlan:
    """How the i/j loops are unrolled, replicated and tiled.

    ``i_tile`` is the number of i-particles one worker job owns; ``None``
    means ``i_unroll * 64``.  ``precision`` selects the float32 streaming
    path (the default) or a float64 path used for tight cross-checks.
    """

    strategy: Strategy = Strategy.UNROLL_1x1
    replication: int = 1
    lane_width: int = DEFAULT_LANE_WIDTH
    precision: str = "single"
    i_tile: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "strategy", Strategy.parse(self.strategy))
        r = self.replication
        if not isinstance(r, (int, np.integer)) or r < 1 or (r & (r - 1)):
            raise ConfigurationError(f"replication must be a power of two >= 1, got {r!r}")
        lw = self.lane_width
        if lw not in LANE_WIDTHS:
            raise ConfigurationError(f"lane_width must be one of {LANE_WIDTHS}, got {lw!r}")
        if self.precision not in ("single", "double"):
            raise ConfigurationError(f"precision must be 'single' or 'double', got {self.precision!r}")
        if self.i_tile is not None and (self.i_tile < 1 or self.i_tile % self.i_unroll):
            raise ConfigurationError("i_tile must be a positive multiple of the i-unroll factor")

    @property
    def i_unroll(self) -> int:
        return self.strategy.i_unroll

    @property
    def j_unroll(self) -> int:
        return 1 if self.strategy is Strategy.UNROLL_1x1 else int(self.lane_width)

    @property
    def tile_width(self) -> int:
        """Padding granularity: every i-block and every j-block is full."""
        return math.lcm(self.i_unroll, self.j_unroll)

    @property
    def tile_i(self) -> int:
        return self.i_tile if self.i_tile is not None else self.i_unroll * I_TILE_BLOCKS

    @property
    def dtype(self):
        return np.float32 if self.precision == "single" else np.float64

    @property
    def label(self) -> str:
        return f"{self.i_unroll}x{self.j_unroll}"

    def validate_for(self, law) -> None:
        law = Law.parse(law)
        if self.i_unroll > law.max_i_unroll:
            raise ConfigurationError(
                f"plan {self.strategy.value} unrolls {self.i_unroll} i-particles but {law.value} "
                f"supports at most {law.max_i_unroll}x{DEFAULT_LANE_WIDTH}"
            )

    @classmethod
    def parse(cls, plan: str, **kwargs) -> "ExecutionPlan":
        return cls(strategy=Strategy.parse(plan), **kwargs)

    def describe(self) -> dict:
        return {
            "strategy": self.strategy.value,
            "unroll": self.label,
            "replication": int(self.replication),
            "lane_width": int(self.lane_width),
            "precision": self.precision,
            "i_tile": self.tile_i,
        }


@dataclass(frozen=True)
class ParticleRecord:
    position: tuple
    velocity: tuple = (0.0, 0.0, 0.0)
    mass: float = 0.0
    charge: float = 0.0
    lj_epsilon: float = 0.0
    lj_sigma: float = 0.0
    exclusions: tuple = ()


def _readonly(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class ParticleSet:
    """Padded structure-of-arrays particle container.

    All per-particle arrays have length ``padded_count``; entries
    ``[0, count)`` are live.  Exclusions are stored CSR style
    (``excl_ptr``/``excl_idx``), sorted and symmetric.  Instances are
    immutable: the arrays are flagged read-only.
    """

    count: int
    x: np.ndarray
    y: np.ndarray
    z: np.ndarray
    vx: np.ndarray
    vy: np.ndarray
    vz: np.ndarray
    masses: np.ndarray
    charges: np.ndarray
    lj_epsilon: np.ndarray
    lj_sigma: np.ndarray
    excl_ptr: np.ndarray
    excl_idx: np.ndarray
    max_exclusions: int = field(default=DEFAULT_MAX_EXCLUSIONS)

    @property
    def padded_count(self) -> int:
        return int(self.x.shape[0])

    @property
    def positions(self) -> np.ndarray:
        """Live positions, ``count x 3`` (a copy)."""
        n = self.count
        return np.column_stack((self.x[:n], self.y[:n], self.z[:n]))

    @property
    def velocities(self) -> np.ndarray:
        n = self.count
        return np.column_stack((self.vx[:n], self.vy[:n], self.vz[:n]))

    @property
    def has_exclusions(self) -> bool:
        return self.excl_idx.size > 0

    @property
    def excluded_pair_count(self) -> int:
        """Number of unordered live pairs removed by exclusion lists."""
        return int(self.excl_idx.size // 2)

    def exclusions(self, i: int) -> tuple:
        return tuple(int(k) for k in self.excl_idx[self.excl_ptr[i]:self.excl_ptr[i + 1]])

    def records(self) -> list:
        """Live entries as :class:`ParticleRecord` objects."""
        out = []
        for i in range(self.count):
            out.append(ParticleRecord(
                position=(float(self.x[i]), float(self.y[i]), float(self.z[i])),
                velocity=(float(self.vx[i]), float(self.vy[i]), float(self.vz[i])),
                mass=float(self.masses[i]),
                charge=float(self.charges[i]),
                lj_epsilon=float(self.lj_epsilon[i]),
                lj_sigma=float(self.lj_sigma[i]),
                exclusions=self.exclusions(i),
            ))
        return out

    def live_arrays(self) -> dict:
        n = self.count
        return {
            "positions": self.positions,
            "velocities": self.velocities,
            "masses": self.masses[:n].copy(),
            "charges": self.charges[:n].copy(),
            "lj_epsilon": self.lj_epsilon[:n].copy(),
            "lj_sigma": self.lj_sigma[:n].copy(),
            "exclusions": [self.exclusions(i) for i in range(n)],
        }

    def padded(self, tile_width: int, min_padded_count: int = 0) -> "ParticleSet":
        """Same live particles, padded to a multiple of ``tile_width``.

        Returns ``self`` when the current padding already satisfies the
        request exactly (no extra padding is ever stripped implicitly).
        """
        target = _padded_size(self.count, tile_width, min_padded_count)
        if target == self.padded_count or (
            min_padded_count == 0 and self.padded_count % tile_width == 0
        ):
            return self
        return from_arrays(**self.live_arrays(), tile_width=tile_width,
                           min_padded_count=min_padded_count, max_exclusions=self.max_exclusions)

    def with_phase_space(self, positions: np.ndarray, velocities: np.ndarray) -> "ParticleSet":
        """Copy with new live positions/velocities; padding is rebuilt."""
        pos = np.asarray(positions, dtype=np.float64)
        vel = np.asarray(velocities, dtype=np.float64)
        if not (np.all(np.isfinite(pos)) and np.all(np.isfinite(vel))):
            raise ParticleDataError("non-finite positions or velocities")
        pad = self.padded_count - self.count
        px, py, pz = _pad_positions(pos, pad)
        cols = {}
        for k, name in enumerate("xyz"):
            cols[name] = _readonly(np.concatenate((pos[:, k], (px, py, pz)[k])))
        for k, name in enumerate(("vx", "vy", "vz")):
            cols[name] = _readonly(np.concatenate((vel[:, k], np.zeros(pad))))
        return replace(self, **cols)


def _padded_size(count: int, tile_width: int, min_padded_count: int = 0) -> int:
    if tile_width < 1:
        raise ConfigurationError("tile width must be >= 1")
    n = max(count, min_padded_count)
    return -(-n // tile_width) * tile_width


def _pad_positions(pos: np.ndarray, pad: int):
    """Padding sites strictly outside the live bounding box, a scale apart.

    Keeps every padding-live and padding-padding separation finite and
    well away from zero, also after rounding to float32.
    """
    if pad == 0:
        e = np.zeros(0)
        return e, e, e
    reach = float(np.max(np.abs(pos))) if pos.size else 0.0
    scale = max(1.0, reach)
    k = np.arange(pad, dtype=np.float64)
    px = reach + scale * (1.0 + k)
    py = np.full(pad, reach + scale)
    pz = np.full(pad, reach + scale)
    return (px.astype(np.float32).astype(np.float64),
            py.astype(np.float32).astype(np.float64),
            pz.astype(np.float32).astype(np.float64))


def _column(values, n, name, default=0.0):
    if values is None:
        return np.full(n, default, dtype=np.float64)
    a = np.asarray(values, dtype=np.float64).reshape(-1)
    if a.shape[0] != n:
        raise ParticleDataError(f"{name} has {a.shape[0]} entries, expected {n}")
    return a


def _build_exclusions(exclusions, n, max_exclusions):
    if exclusions is None:
        return np.zeros(n + 1, dtype=np.int64), np.zeros(0, dtype=np.int64)
    if len(exclusions) != n:
        raise ParticleDataError(f"exclusions has {len(exclusions)} entries, expected {n}")
    sets = [set() for _ in range(n)]
    for i, lst in enumerate(exclusions):
        for j in lst:
            j = int(j)
            if j < 0 or j >= n:
                raise ParticleDataError(f"exclusion index {j} of particle {i} out of range [0, {n})")
            if j == i:
                continue  # self is always excluded
            sets[i].add(j)
            sets[j].add(i)
    ptr = np.zeros(n + 1, dtype=np.int64)
    for i, s in enumerate(sets):
        if len(s) > max_exclusions:
            raise ParticleDataError(
                f"particle {i} has {len(s)} exclusions, cap is {max_exclusions}")
        ptr[i + 1] = ptr[i] + len(s)
    idx = np.fromiter((j for s in sets for j in sorted(s)), dtype=np.int64, count=int(ptr[-1]))
    return ptr, idx


def from_arrays(positions, velocities=None, masses=None, charges=None, lj_epsilon=None,
                lj_sigma=None, exclusions=None, *, tile_width: int = DEFAULT_LANE_WIDTH,
                min_padded_count: int = 0, max_exclusions: int = DEFAULT_MAX_EXCLUSIONS) -> ParticleSet:
    """Build a padded :class:`ParticleSet` from live per-particle arrays."""
    pos = np.asarray(positions, dtype=np.float64)
    if pos.ndim != 2 or pos.shape[1] != 3:
        raise ParticleDataError(f"positions must be N x 3, got shape {pos.shape}")
    n = pos.shape[0]
    if n < 1:
        raise ParticleDataError("particle set must contain at least one particle")
    vel = np.zeros((n, 3)) if velocities is None else np.asarray(velocities, dtype=np.float64)
    if vel.shape != (n, 3):
        raise ParticleDataError(f"velocities must be {n} x 3, got shape {vel.shape}")
    cols = {
        "masses": _column(masses, n, "masses"),
        "charges": _column(charges, n, "charges"),
        "lj_epsilon": _column(lj_epsilon, n, "lj_epsilon"),
        "lj_sigma": _column(lj_sigma, n, "lj_sigma"),
    }
    for name, arr in (("positions", pos), ("velocities", vel), *cols.items()):
        if not np.all(np.isfinite(arr)):
            bad = int(np.argwhere(~np.isfinite(arr.reshape(n, -1)))[0][0])
            raise ParticleDataError(f"non-finite {name} for particle {bad}")
    if np.any(cols["masses"] < 0):
        raise ParticleDataError(f"negative mass for particle {int(np.argmax(cols['masses'] < 0))}")
    if np.any(cols["lj_epsilon"] < 0):
        raise ParticleDataError("lj_epsilon must be >= 0")
    ptr, idx = _build_exclusions(exclusions, n, max_exclusions)

    size = _padded_size(n, tile_width, min_padded_count)
    pad = size - n
    px, py, pz = _pad_positions(pos, pad)
    zeros = np.zeros(pad)
    ptr = np.concatenate((ptr, np.full(pad, ptr[-1], dtype=np.int64)))
    return ParticleSet(
        count=n,
        x=_readonly(np.concatenate((pos[:, 0], px))),
        y=_readonly(np.concatenate((pos[:, 1], py))),
        z=_readonly(np.concatenate((pos[:, 2], pz))),
        vx=_readonly(np.concatenate((vel[:, 0], zeros))),
        vy=_readonly(np.concatenate((vel[:, 1], zeros))),
        vz=_readonly(np.concatenate((vel[:, 2], zeros))),
        masses=_readonly(np.concatenate((cols["masses"], zeros))),
        charges=_readonly(np.concatenate((cols["charges"], zeros))),
        lj_epsilon=_readonly(np.concatenate((cols["lj_epsilon"], zeros))),
        lj_sigma=_readonly(np.concatenate((cols["lj_sigma"], zeros))),
        excl_ptr=_readonly(ptr),
        excl_idx=_readonly(idx),
        max_exclusions=max_exclusions,
    )


def build_particle_set(raw: Sequence[ParticleRecord] | Iterable[ParticleRecord],
                       plan: Optional[ExecutionPlan] = None, *, tile_width: Optional[int] = None,
                       min_padded_count: int = 0,
                       max_exclusions: int = DEFAULT_MAX_EXCLUSIONS) -> ParticleSet:
    """Pack particle records into a padded SoA set for ``plan``."""
    records = list(raw)
    if not records:
        raise ParticleDataError("no particle records")
    if tile_width is None:
        tile_width = plan.tile_width if plan is not None else DEFAULT_LANE_WIDTH
    return from_arrays(
        positions=[r.position for r in records],
        velocities=[r.velocity for r in records],
        masses=[r.mass for r in records],
        charges=[r.charge for r in records],
        lj_epsilon=[r.lj_epsilon for r in records],
        lj_sigma=[r.lj_sigma for r in records],
        exclusions=[r.exclusions for r in records],
        tile_width=tile_width,
        min_padded_count=min_padded_count,
        max_exclusions=max_exclusions,
    )


@dataclass(frozen=True, eq=False)
class ForceResult:
    """Per-particle accelerations (forces for LJC laws) of the live particles.

    Padding rows are zeroed by the executor before they are stripped, so
    ``accelerations`` has exactly ``count`` rows.
    """

    accelerations: np.ndarray
    jerks: Optional[np.ndarray]
    plan_used: dict
    summation_mode: str
    pair_evaluations: int = 0

    @property
    def count(self) -> int:
        return int(self.accelerations.shape[0])
