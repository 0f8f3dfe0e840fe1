"""Direct-summation pairwise force kernels with selectable unrolling plans."""

from .errors import (ConfigurationError, ParseError, ParticleDataError, PforgeError, SimulationError,
                     SingularityError)
from .kernels import PairForce, ga_pair, gaj_pair, ljc_pair, pair_is_excluded, zeta
from .metrics import (BenchRecord, FlopLedger, audit_flops, effective_bandwidth, flops_per_interaction,
                      interactions_reported)
from .model import (ExecutionPlan, ForceResult, KernelSpec, Law, ParticleRecord, ParticleSet, Strategy,
                    build_particle_set, from_arrays)
from .oracle import OracleResult, compare, oracle_compute
from .tiling import execute, reduce_partials, run, run_1x1, run_1x4, run_2x4, run_4x4, run_replicated

__version__ = "0.1.0"

__all__ = [
    "BenchRecord", "ConfigurationError", "ExecutionPlan", "FlopLedger", "ForceResult", "KernelSpec", "Law",
    "OracleResult", "PairForce", "ParseError", "ParticleDataError", "ParticleRecord", "ParticleSet",
    "PforgeError", "SimulationError", "SingularityError", "Strategy", "audit_flops", "build_particle_set",
    "compare", "effective_bandwidth", "execute", "flops_per_interaction", "from_arrays", "ga_pair",
    "gaj_pair", "interactions_reported", "ljc_pair", "oracle_compute", "pair_is_excluded", "reduce_partials",
    "run", "run_1x1", "run_1x4", "run_2x4", "run_4x4", "run_replicated", "zeta",
]
