"""Exact arithmetic of digit partial-sum hitting times.

Everything exact crosses the boundary as fractions.Fraction; digit streams
and scans are certified, so results never depend on internal precision.
"""

from ._core import (
    ScanResult,
    asymptotic_moment,
    conditional_moments,
    digits,
    first_hit_distribution,
    first_primes,
    hit_probability,
    monte_carlo_scan,
    run_experiment,
    scan,
    scan_batch,
)

__all__ = [
    "ScanResult",
    "asymptotic_moment",
    "conditional_moments",
    "digits",
    "first_hit_distribution",
    "first_primes",
    "hit_probability",
    "monte_carlo_scan",
    "run_experiment",
    "scan",
    "scan_batch",
]
