"""Exact combinatorics of the degeneration formula: graph enumeration,
tropical splitting/gluing, and the numerical formula evaluator.

All heavy lifting is in the C++ extension module; inputs and outputs are
JSON documents (see docs/formats.md) and exact "p/q" rational strings.
"""

from ._core import (
    SearchCapError,
    UnresolvedQueryError,
    ValidationError,
    enumerate_graphs,
    evaluate,
    evaluate_constant,
    glue,
    run_suite,
    splitting_rays,
    suite_names,
)

__all__ = [
    "SearchCapError",
    "UnresolvedQueryError",
    "ValidationError",
    "enumerate_graphs",
    "evaluate",
    "evaluate_constant",
    "glue",
    "run_suite",
    "splitting_rays",
    "suite_names",
]
