"""Coded all-gather and all-to-all simulation on ring networks.

Exact loads come back from the extension as "p/q" strings; the helpers here
turn them into :class:`fractions.Fraction`.
"""

from fractions import Fraction

from ._core import (
    InvalidParameter,
    SimulationError,
    allgather_lower_bound,
    allgather_ncl_formula,
    appendix_c_placement,
    bounds,
    check_goldens,
    coding_gain,
    cyclic_placement,
    memory_sharing_envelope,
    neighbors,
    ring_distance,
    run,
    sweep,
)

__all__ = [
    "InvalidParameter",
    "SimulationError",
    "allgather_lower_bound",
    "allgather_ncl_formula",
    "appendix_c_placement",
    "bounds",
    "check_goldens",
    "coding_gain",
    "cyclic_placement",
    "memory_sharing_envelope",
    "ncl",
    "neighbors",
    "ring_distance",
    "run",
    "sweep",
]


def ncl(problem, n, r, d, **kwargs):
    """Simulated NCL of one configuration as a Fraction."""
    report = run(problem, n, r, d, **kwargs)
    if not report["ok"]:
        raise SimulationError(report["failure"] or "run did not complete")
    return Fraction(report["ncl"])
