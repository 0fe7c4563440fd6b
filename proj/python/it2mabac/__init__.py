"""Interval type-2 fuzzy MABAC group decision making."""

from ._it2mabac import (
    DecisionProblem,
    Error,
    IT2TrFN,
    LinguisticScale,
    Trace,
    builtin_scale,
    distance,
    geometric_mean,
    load_problem,
    parse_problem,
    rank_to_one,
    render,
    solve,
    tit2fgbm,
)

__all__ = [
    "DecisionProblem",
    "Error",
    "IT2TrFN",
    "LinguisticScale",
    "Trace",
    "builtin_scale",
    "distance",
    "error_code",
    "geometric_mean",
    "load_problem",
    "parse_problem",
    "rank_to_one",
    "render",
    "solve",
    "tit2fgbm",
]


def error_code(exc: Error) -> str:
    """Name of the error code carried by an it2mabac.Error, e.g. 'UnknownTerm'."""
    return exc.args[1] if len(exc.args) > 1 else ""
