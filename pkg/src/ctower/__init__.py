"""ctower: towers of computable UFDs built from localizations and xy - q factorization
extensions, driven stage by stage by a predicate, plus primality in rings of integers."""

__version__ = "0.1.0"
__license__ = "MIT"

from .builder import BuildResult, ConstructionState, StatusReport, build, build_pid, run_stage, self_check
from .expr import eval_expr, parse_expr
from .ring import PrimeId, Tower

__all__ = [
    "BuildResult",
    "ConstructionState",
    "PrimeId",
    "StatusReport",
    "Tower",
    "build",
    "build_pid",
    "eval_expr",
    "parse_expr",
    "run_stage",
    "self_check",
]
