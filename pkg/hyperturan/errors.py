"""Exception hierarchy shared by every hyperturan package.

Each class carries the CLI exit code it maps to:
0 pass, 1 usage/parse/validation, 2 numeric failure, 3 infeasible instance.
"""

from __future__ import annotations


class HyperturanError(Exception):
    """Base class for all hyperturan errors."""

    exit_code: int = 1


class InvalidHypergraphError(HyperturanError, ValueError):
    """A hypergraph (or pattern/coloring) violates a construction precondition."""


class EdgeSizeError(InvalidHypergraphError):
    """An edge does not have exactly r distinct vertices."""


class VertexRangeError(InvalidHypergraphError):
    """An edge mentions a vertex outside 0..n-1."""


class DuplicateEdgeError(InvalidHypergraphError):
    """The same r-set was listed twice."""


class UniformityMismatchError(InvalidHypergraphError):
    """Two objects that must share r do not."""


class DimensionMismatchError(InvalidHypergraphError):
    """A vector does not have one entry per vertex (or per class)."""


class InvalidMultiplicityError(InvalidHypergraphError):
    """A blow-up multiplicity is not a positive integer."""


class InvalidPatternError(InvalidHypergraphError):
    """A pattern edge is not a valid r-multiset over its colors."""


class InvalidColoringError(InvalidHypergraphError):
    """A coloring is partial or uses colors outside the pattern."""


class EmptyClassError(InvalidHypergraphError):
    """A color class that must be nonempty is empty."""


class NotColorableError(HyperturanError, ValueError):
    """A hypergraph admits no homomorphism to the required pattern."""


class ParseError(HyperturanError, ValueError):
    """Malformed text input; `line` is 1-based (0 when unknown)."""

    def __init__(self, message: str, line: int = 0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


class SolverError(HyperturanError, ArithmeticError):
    """Invalid solver input or a numeric breakdown (NaN)."""

    exit_code = 2


class InfeasibleInstanceError(HyperturanError):
    """The requested instance exceeds an enumeration or search budget."""

    exit_code = 3


class UnknownExperimentError(HyperturanError, KeyError):
    """No experiment with the requested name is registered."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown experiment"
