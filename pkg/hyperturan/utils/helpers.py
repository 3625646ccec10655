"""Utility functions for hyperturan."""

from __future__ import annotations

import math
from collections.abc import Iterator
from pathlib import Path

from hyperturan.errors import ParseError


def ensure_dir(path: Path) -> Path:
    """Ensure a directory exists, creating it if necessary."""
    path.mkdir(parents=True, exist_ok=True)
    return path


def safe_filename(name: str) -> str:
    """Convert a string to a safe filename."""
    unsafe = '<>:"/\\|?* '
    for char in unsafe:
        name = name.replace(char, "_")
    return name.strip()


def falling_factorial(n: int, r: int) -> int:
    """(n)_r = n(n-1)...(n-r+1); zero when r > n >= 0."""
    return math.perm(n, r) if n >= 0 else 0


def balanced_sizes(n: int, parts: int) -> tuple[int, ...]:
    """Sizes of a balanced partition; remainder goes to the lowest-indexed blocks."""
    if parts < 1:
        raise ValueError("parts must be >= 1")
    base, extra = divmod(n, parts)
    return tuple(base + 1 if i < extra else base for i in range(parts))


def weak_compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Yield every (n_1, ..., n_parts) with n_i >= 0 summing to n, lexicographically descending."""
    if parts == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in weak_compositions(n - first, parts - 1):
            yield (first, *rest)


def parse_params(text: str) -> dict[str, str]:
    """Parse ``key=value,key=value`` builtin parameter strings."""
    params: dict[str, str] = {}
    if not text.strip():
        return params
    for chunk in text.split(","):
        key, sep, value = chunk.partition("=")
        if not sep or not key.strip():
            raise ParseError(f"expected key=value, got {chunk!r}")
        params[key.strip()] = value.strip()
    return params
