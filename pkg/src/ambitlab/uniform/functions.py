"""
Pseudometrics and rational-valued functions on finite windows.

Everything here is exact: distances and values are Fractions. A window
function may carry a default value that stands for every element outside its
window; without one, evaluating it off the window raises CoverageError.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from types import MappingProxyType
from typing import Any

from ..errors import CoverageError, MalformedMatrix, WindowMismatch
from ..semigroups.handles import Window
from ..types import Element


class MetricKind(str, Enum):
    """How a pseudometric computes distances."""

    DISCRETE = "discrete"  # 1 between distinct points
    TABLE = "table"  # explicit matrix over a window
    ABSOLUTE = "absolute"  # |x - y| on rationals


@dataclass(frozen=True)
class Pseudometric:
    kind: MetricKind
    window: Window | None = None
    matrix: tuple[tuple[Fraction, ...], ...] = ()
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        index: dict[Element, int] = {}
        if self.kind == MetricKind.TABLE:
            if self.window is None:
                raise MalformedMatrix("a table pseudometric needs a window")
            n = len(self.window)
            if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
                raise MalformedMatrix(f"matrix must be {n}x{n} to match its window")
            rows = tuple(tuple(Fraction(v) for v in row) for row in self.matrix)
            object.__setattr__(self, "matrix", rows)
            index = {x: i for i, x in enumerate(self.window)}
        object.__setattr__(self, "_index", index)

    @classmethod
    def discrete(cls) -> Pseudometric:
        return cls(MetricKind.DISCRETE)

    @classmethod
    def absolute(cls) -> Pseudometric:
        return cls(MetricKind.ABSOLUTE)

    @classmethod
    def table(cls, window: Window, matrix: Iterable[Iterable[Any]]) -> Pseudometric:
        return cls(MetricKind.TABLE, window, tuple(tuple(Fraction(v) for v in r) for r in matrix))

    @classmethod
    def from_function(
        cls, window: Window, distance: Callable[[Element, Element], Fraction]
    ) -> Pseudometric:
        """Tabulate ``distance`` over a window."""
        return cls.table(window, [[distance(x, y) for y in window] for x in window])

    def covers(self, x: Element) -> bool:
        return self.kind != MetricKind.TABLE or x in self._index

    def distance(self, x: Element, y: Element) -> Fraction:
        if self.kind == MetricKind.DISCRETE:
            return Fraction(0) if x == y else Fraction(1)
        if self.kind == MetricKind.ABSOLUTE:
            return abs(Fraction(x) - Fraction(y))
        for point in (x, y):
            if point not in self._index:
                raise WindowMismatch(f"{point!r} lies outside the metric window", element=point)
        return self.matrix[self._index[x]][self._index[y]]


@dataclass(frozen=True)
class MetricViolation:
    rule: str  # "negative", "diagonal", "symmetry" or "triangle"
    points: tuple[Element, ...]


@dataclass(frozen=True)
class MetricVerdict:
    ok: bool
    violation: MetricViolation | None = None


def validate_pseudometric(d: Pseudometric) -> MetricVerdict:
    """Check the pseudometric axioms on the window; first violation wins.

    Discrete and absolute metrics satisfy the axioms by construction.
    """
    if d.kind != MetricKind.TABLE:
        return MetricVerdict(ok=True)
    points = list(d.window)  # type: ignore[arg-type]
    m = d.matrix
    n = len(points)
    for i in range(n):
        if m[i][i] != 0:
            return MetricVerdict(False, MetricViolation("diagonal", (points[i],)))
    for i, j in itertools.product(range(n), repeat=2):
        if m[i][j] < 0:
            return MetricVerdict(False, MetricViolation("negative", (points[i], points[j])))
        if m[i][j] != m[j][i]:
            return MetricVerdict(False, MetricViolation("symmetry", (points[i], points[j])))
    for i, j, k in itertools.product(range(n), repeat=3):
        if m[i][k] > m[i][j] + m[j][k]:
            return MetricVerdict(
                False, MetricViolation("triangle", (points[i], points[j], points[k]))
            )
    return MetricVerdict(ok=True)


@dataclass(frozen=True, eq=False)
class WindowFunction:
    """A rational function known exactly on a window, with an optional default elsewhere."""

    window: Window
    values: Mapping[Element, Fraction] = field(default_factory=dict)
    default: Fraction | None = Fraction(0)

    def __post_init__(self):
        window = self.window if isinstance(self.window, Window) else Window(tuple(self.window))
        values = {x: Fraction(v) for x, v in (self.values or {}).items()}
        for x in values:
            if x not in window:
                raise WindowMismatch(f"value given at {x!r} outside the window", element=x)
        object.__setattr__(self, "window", window)
        object.__setattr__(self, "values", MappingProxyType(values))
        if self.default is not None:
            object.__setattr__(self, "default", Fraction(self.default))

    @classmethod
    def constant(cls, value: Fraction | int = 0) -> WindowFunction:
        return cls(Window(()), {}, value)

    @classmethod
    def indicator(cls, points: Iterable[Element], window: Iterable[Element] | None = None):
        points = tuple(points)
        return cls(window if window is not None else points, {x: 1 for x in points}, 0)

    @classmethod
    def tabulate(
        cls,
        window: Window | Iterable[Element],
        fn: Callable[[Element], Fraction],
        default: Fraction | int | None = Fraction(0),
    ) -> WindowFunction:
        window = window if isinstance(window, Window) else Window(tuple(window))
        return cls(window, {x: fn(x) for x in window}, default)

    def __call__(self, x: Element) -> Fraction:
        if x in self.values:
            return self.values[x]
        if self.default is None:
            raise CoverageError(x)
        return self.default

    def covers(self, x: Element) -> bool:
        return x in self.values or self.default is not None

    def as_dict(self) -> dict[Element, Fraction]:
        """Value at every window point."""
        return {x: self(x) for x in self.window}

    def restrict(self, points: Iterable[Element]) -> tuple[Fraction, ...]:
        return tuple(self(x) for x in points)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WindowFunction):
            return NotImplemented
        return (
            self.window.elements == other.window.elements
            and self.as_dict() == other.as_dict()
            and self.default == other.default
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"WindowFunction({self.as_dict()!r}, default={self.default!r})"


@dataclass(frozen=True)
class LipViolation:
    rule: str  # "range", "positivity" or "lipschitz"
    points: tuple[Element, ...]
    detail: str


@dataclass(frozen=True)
class LipVerdict:
    ok: bool
    violation: LipViolation | None = None


def lip_membership(f: WindowFunction, d: Pseudometric, positive: bool = False) -> LipVerdict:
    """Membership of f in Lip(d) (or Lip+(d) when ``positive``) on f's window.

    Raises:
        WindowMismatch: If a table metric does not cover f's window.
    """
    points = list(f.window)
    for x in points:
        if not d.covers(x):
            raise WindowMismatch(f"{x!r} lies outside the metric window", element=x)
    values = [f(x) for x in points]
    for x, v in zip(points, values):
        if not -1 <= v <= 1:
            return LipVerdict(False, LipViolation("range", (x,), f"f({x}) = {v} outside [-1, 1]"))
        if positive and v < 0:
            return LipVerdict(False, LipViolation("positivity", (x,), f"f({x}) = {v} < 0"))
    for (i, x), (j, y) in itertools.combinations(enumerate(points), 2):
        gap = abs(values[i] - values[j])
        bound = d.distance(x, y)
        if gap > bound:
            return LipVerdict(
                False,
                LipViolation("lipschitz", (x, y), f"|f({x}) - f({y})| = {gap} > d = {bound}"),
            )
    return LipVerdict(ok=True)
