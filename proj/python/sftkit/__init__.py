"""Shifts of finite type, cocycles and flow equivalence."""

from ._sftkit import (
    SftkitError,
    groupoid_element,
    invariants,
    language,
    least_period,
    normalize_point,
    pipeline,
    positive,
    potential,
)

__all__ = [
    "SftkitError",
    "groupoid_element",
    "invariants",
    "language",
    "least_period",
    "normalize_point",
    "pipeline",
    "positive",
    "potential",
]
