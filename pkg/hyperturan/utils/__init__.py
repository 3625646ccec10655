"""Utility functions for hyperturan."""

from hyperturan.utils.helpers import (
    balanced_sizes,
    ensure_dir,
    falling_factorial,
    parse_params,
    weak_compositions,
)

__all__ = [
    "balanced_sizes",
    "ensure_dir",
    "falling_factorial",
    "parse_params",
    "weak_compositions",
]
