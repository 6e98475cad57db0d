"""Decibel/linear conversions for power quantities.

Everything inside this package computes on linear power ratios; decibels
appear only at the configuration and reporting boundaries. The power
convention is used throughout: ``x_db = 10 * log10(x)``.
"""

from __future__ import annotations

import math

__all__ = ["db_to_linear", "linear_to_db"]


def db_to_linear(value_db: float) -> float:
    """Convert a power quantity in dB to a linear ratio."""
    if not math.isfinite(value_db):
        raise ValueError(f"dB value must be finite, got {value_db!r}")
    return 10.0 ** (value_db / 10.0)


def linear_to_db(ratio: float) -> float:
    """Convert a positive linear power ratio to dB."""
    if not (ratio > 0.0 and math.isfinite(ratio)):
        raise ValueError(f"linear ratio must be positive and finite, got {ratio!r}")
    return 10.0 * math.log10(ratio)
