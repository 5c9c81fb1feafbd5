"""Exact solver, verification suites, and play server for pattern-removal
matcher games on small graphs.

One move has two halves: the initiator nominates an available vertex, the
responder removes the image of a pattern copy anchored there, and the score
is the number of moves when no nomination is playable.  The package computes
exact values by memoized minimax over availability bitmasks, generates the
graph families with known closed forms, checks scripted strategies by
exhaustive adversary walks, and verifies every closed form against the
solver.
"""

from .engine import (
    GENERIC,
    MAXIMIZER,
    MINIMIZER,
    STAR,
    STRIPE,
    UNROOTED,
    GameSpec,
    GameState,
    Move,
    Pattern,
)
from .errors import CapExceeded, InvalidInput, MatchgameError, StrategyError
from .families import FamilyInstance, closed_form, closed_form_instance, parse_family
from .graphs import Graph, VertexSet, enumerate_free_trees, random_gnp
from .kernels import BACKEND
from .packing import PackingResult, has_k3_partition, min_maximal, mu
from .solver import Analyzer, SolveResult, is_perfect, solve, value_after
from .strategies import (
    GuaranteeReport,
    MatchRecord,
    OptimalStrategy,
    Strategy,
    check_guarantee,
    run_match,
)
from .verify import VerificationReport, verify_all

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "GENERIC",
    "MAXIMIZER",
    "MINIMIZER",
    "STAR",
    "STRIPE",
    "UNROOTED",
    "Analyzer",
    "CapExceeded",
    "FamilyInstance",
    "GameSpec",
    "GameState",
    "Graph",
    "GuaranteeReport",
    "InvalidInput",
    "MatchRecord",
    "MatchgameError",
    "Move",
    "OptimalStrategy",
    "PackingResult",
    "Pattern",
    "SolveResult",
    "Strategy",
    "StrategyError",
    "VerificationReport",
    "VertexSet",
    "check_guarantee",
    "closed_form",
    "closed_form_instance",
    "enumerate_free_trees",
    "has_k3_partition",
    "is_perfect",
    "min_maximal",
    "mu",
    "parse_family",
    "random_gnp",
    "run_match",
    "solve",
    "value_after",
    "verify_all",
    "__version__",
]
