"""
r-patterns ([l], E): colours 0..l-1 and allowed r-multisets of colours.

Each multiset is stored as its multiplicity vector (m_0, ..., m_{l-1}) with sum r, so
edge counts of maximal colourable graphs are products of binomials and the density
polynomial is a sum of monomials.

Text format:

    pat <l> <r> <m>
    <m_0> ... <m_{l-1}>      (m lines)
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, combinations_with_replacement
from pathlib import Path

import numpy as np

from hyperturan.errors import InvalidPatternError, ParseError
from hyperturan.hypergraph.core import Hypergraph
from hyperturan.utils.helpers import parse_params

Multiplicity = tuple[int, ...]


@dataclass(frozen=True)
class Pattern:
    """An r-pattern on colours 0..l-1."""

    l: int  # noqa: E741
    r: int
    edges: tuple[Multiplicity, ...]
    name: str = field(default="", compare=False)

    @cached_property
    def edge_set(self) -> frozenset[Multiplicity]:
        return frozenset(self.edges)

    def allows(self, multiplicity: Multiplicity) -> bool:
        return multiplicity in self.edge_set

    @cached_property
    def partial_set(self) -> frozenset[Multiplicity]:
        """Every vector dominated coordinatewise by some allowed multiplicity vector."""
        out: set[Multiplicity] = set()
        for m in self.edges:
            ranges = [range(k + 1) for k in m]
            stack: list[Multiplicity] = [()]
            for rng in ranges:
                stack = [(*prefix, k) for prefix in stack for k in rng]
            out.update(stack)
        return frozenset(out)

    @property
    def has_monochromatic_edge(self) -> bool:
        """True iff some colour may fill a whole edge (every graph is then colourable)."""
        return any(max(m) == self.r for m in self.edges)

    @property
    def label(self) -> str:
        return self.name or f"pattern(l={self.l}, r={self.r}, |E|={len(self.edges)})"


def new_pattern(
    l: int, r: int, edges: Iterable[Sequence[int]], name: str = ""  # noqa: E741
) -> Pattern:
    """Validate and build a pattern from multiplicity vectors."""
    if l < 1:
        raise InvalidPatternError(f"a pattern needs at least one colour, got l={l}")
    if r < 2:
        raise InvalidPatternError(f"uniformity must be >= 2, got {r}")
    seen: set[Multiplicity] = set()
    for raw in edges:
        m = tuple(int(k) for k in raw)
        if len(m) != l:
            raise InvalidPatternError(f"multiplicity vector {list(raw)} needs {l} entries")
        if any(k < 0 for k in m) or sum(m) != r:
            raise InvalidPatternError(
                f"multiplicity vector {list(raw)} must be nonnegative and sum to {r}"
            )
        if m in seen:
            raise InvalidPatternError(f"duplicate multiset {m}")
        seen.add(m)
    return Pattern(l=l, r=r, edges=tuple(sorted(seen, reverse=True)), name=name)


def multiplicity_of(colors: Iterable[int], l: int) -> Multiplicity:  # noqa: E741
    counts = [0] * l
    for c in colors:
        counts[c] += 1
    return tuple(counts)


def all_multiplicities(l: int, r: int) -> list[Multiplicity]:  # noqa: E741
    """Every r-multiset over l colours as a multiplicity vector."""
    return [multiplicity_of(ms, l) for ms in combinations_with_replacement(range(l), r)]


def complete_pattern(l: int, r: int) -> Pattern:  # noqa: E741
    """K_l^r: all r-sets of distinct colours (Col is the l-partite family)."""
    if l < r:
        raise InvalidPatternError(f"K_l^r pattern needs l >= r, got l={l}, r={r}")
    edges = [multiplicity_of(s, l) for s in combinations(range(l), r)]
    return new_pattern(l, r, edges, name=f"K_{l}^{r}")


def chromatic_pattern(k: int, r: int) -> Pattern:
    """All r-multisets over k colours except the monochromatic ones."""
    if k < 2:
        raise InvalidPatternError(f"chromatic pattern needs k >= 2, got {k}")
    edges = [m for m in all_multiplicities(k, r) if max(m) < r]
    return new_pattern(k, r, edges, name=f"chromatic(k={k}, r={r})")


def single_color_pattern(r: int) -> Pattern:
    """l = 1, E = {(r)}: every r-graph is colourable."""
    return new_pattern(1, r, [(r,)], name=f"single(r={r})")


def empty_pattern(l: int, r: int) -> Pattern:  # noqa: E741
    """No allowed multisets: only edgeless graphs are colourable."""
    return new_pattern(l, r, [], name=f"empty(l={l}, r={r})")


def all_multisets_pattern(l: int, r: int) -> Pattern:  # noqa: E741
    return new_pattern(l, r, all_multiplicities(l, r), name=f"all(l={l}, r={r})")


def pattern_from_hypergraph(h: Hypergraph) -> Pattern:
    """The pattern on colours V(H) whose multisets are the edges of H."""
    edges = [multiplicity_of(e, h.n) for e in h.edges]
    return new_pattern(max(h.n, 1), h.r, edges, name=f"pattern(H, n={h.n})")


def multinomial_polynomial(p: Pattern, y: Sequence[float] | np.ndarray) -> float:
    """q_P(y) = sum_{m in E} (r! / prod m_i!) prod y_i^(m_i)."""
    vec = np.asarray(y, dtype=float)
    if vec.shape != (p.l,):
        raise InvalidPatternError(f"expected {p.l} colour weights, got shape {vec.shape}")
    total = 0.0
    for m in p.edges:
        coefficient = math.factorial(p.r) / math.prod(math.factorial(k) for k in m)
        total += coefficient * float(np.prod(vec ** np.asarray(m)))
    return total


def format_pattern(p: Pattern) -> str:
    lines = [f"pat {p.l} {p.r} {len(p.edges)}"]
    lines.extend(" ".join(str(k) for k in m) for m in p.edges)
    return "\n".join(lines) + "\n"


def parse_pattern(text: str) -> Pattern:
    """Parse the `pat` format; errors carry the 1-based line number."""
    lines = [
        (number, line.strip())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("empty input, expected header 'pat <l> <r> <m>'", 1)
    number, header = lines[0]
    fields = header.split()
    if len(fields) != 4 or fields[0] != "pat":
        raise ParseError(f"expected header 'pat <l> <r> <m>', got {header!r}", number)
    try:
        l, r, m = (int(x) for x in fields[1:])  # noqa: E741
    except ValueError:
        raise ParseError(f"non-integer header field in {header!r}", number) from None
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header declares {m} multisets, found {len(body)}", number)
    edges: list[list[int]] = []
    seen: set[tuple[int, ...]] = set()
    for number, line in body:
        try:
            vector = [int(x) for x in line.split()]
            new_pattern(l, r, [vector])
        except ValueError as exc:
            raise ParseError(str(exc), number) from exc
        if tuple(vector) in seen:
            raise ParseError(f"duplicate multiset {tuple(vector)}", number)
        seen.add(tuple(vector))
        edges.append(vector)
    try:
        return new_pattern(l, r, edges)
    except InvalidPatternError as exc:
        raise ParseError(str(exc), number) from exc


def read_pattern(path: Path) -> Pattern:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"not UTF-8 text at byte {exc.start}: {path}") from exc
    return parse_pattern(text)


# ---------------------------------------------------------------------------
# Named patterns for the CLI: `complete:l=3,r=2`, `chromatic:k=2,r=3`, ...
# ---------------------------------------------------------------------------

_NAMED: dict[str, tuple[tuple[str, ...], Callable[..., Pattern]]] = {
    "complete": (("l", "r"), complete_pattern),
    "chromatic": (("k", "r"), chromatic_pattern),
    "single": (("r",), single_color_pattern),
    "empty": (("l", "r"), empty_pattern),
    "all": (("l", "r"), all_multisets_pattern),
}


def resolve_pattern(text: str) -> Pattern:
    """Build a named pattern from `name:key=value,...`."""
    name, _, params = text.strip().partition(":")
    if name not in _NAMED:
        raise ParseError(f"unknown pattern {name!r} (known: {', '.join(sorted(_NAMED))})")
    keys, build = _NAMED[name]
    raw = parse_params(params)
    if sorted(raw) != sorted(keys):
        got = ', '.join(raw) or 'none'
        raise ParseError(f"pattern '{name}' takes {', '.join(keys)}, got {got}")
    try:
        return build(**{k: int(v) for k, v in raw.items()})
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
