"""
ambitlab exceptions.

Every failure a caller can act on has its own class and carries the data that
explains it, so the CLI can report the offending element, triple or index
instead of a bare message.
"""

from __future__ import annotations

from typing import Any


class AmbitlabError(Exception):
    """Base class for all ambitlab errors."""


class InvalidElement(AmbitlabError):
    """An element encoding does not belong to the semigroup it was used with."""

    def __init__(self, message: str, element: Any = None):
        super().__init__(message)
        self.element = element


class MalformedTable(AmbitlabError):
    """A Cayley table is not square or has entries outside the carrier."""


class WindowTooLarge(AmbitlabError):
    """More elements were requested than a finite carrier holds."""

    def __init__(self, requested: int, size: int):
        super().__init__(f"window of {requested} requested from a carrier of size {size}")
        self.requested = requested
        self.size = size


class MalformedMatrix(AmbitlabError):
    """A distance matrix does not match its window."""


class WindowMismatch(AmbitlabError):
    """An element lies outside the window an operation is restricted to."""

    def __init__(self, message: str, element: Any = None):
        super().__init__(message)
        self.element = element


class ProductOutsideWindow(AmbitlabError):
    """A product needed for an equicontinuity ratio has no recorded distance."""

    def __init__(self, x: Any, y: Any, product: Any):
        super().__init__(f"product {x}*{y} = {product} lies outside the metric window")
        self.x = x
        self.y = y
        self.product = product


class HandleMismatch(AmbitlabError):
    """Two measures live on different semigroups."""


class ActionLawViolation(AmbitlabError):
    """A sampled triple fails m(s, m(s', y)) = m(ss', y)."""

    def __init__(self, s: Any, s_prime: Any, y: Any):
        super().__init__(f"action law fails at s={s}, s'={s_prime}, y={y}")
        self.s = s
        self.s_prime = s_prime
        self.y = y


class CoverageError(AmbitlabError):
    """A window function was evaluated where it has neither a value nor a default."""

    def __init__(self, element: Any):
        super().__init__(f"function has no value at {element} and no default")
        self.element = element


class InvalidNeighborhood(AmbitlabError):
    """A basic neighbourhood has an empty F, h outside [0,1], or a non-positive epsilon."""


class BudgetExhausted(AmbitlabError):
    """Greedy selection found no admissible element within the search budget."""

    def __init__(self, index: int, budget: int):
        super().__init__(
            f"no admissible element for neighborhood {index} within {budget} candidates"
        )
        self.index = index
        self.budget = budget


class IllFormedSelection(AmbitlabError):
    """A point y = x x_U = x' x_V would receive two values."""

    def __init__(self, point: Any, first: tuple[int, Any], second: tuple[int, Any]):
        super().__init__(
            f"point {point} claimed by neighborhood {first[0]} (z={first[1]}) "
            f"and neighborhood {second[0]} (z={second[1]})"
        )
        self.point = point
        self.first = first
        self.second = second


class ParseError(AmbitlabError):
    """An input document could not be read."""

    def __init__(self, message: str, source: str | None = None, location: str | None = None):
        where = ":".join(part for part in (source, location) if part)
        super().__init__(f"{where}: {message}" if where else message)
        self.source = source
        self.location = location


class InvariantError(AmbitlabError):
    """A construction-time invariant check failed."""

    def __init__(self, check: str, detail: str):
        super().__init__(f"{check}: {detail}")
        self.check = check
        self.detail = detail


class UnboundedProgram(AmbitlabError):
    """A linear program has no finite optimum."""

    def __init__(self, column: int):
        super().__init__(f"objective unbounded along column {column}")
        self.column = column
