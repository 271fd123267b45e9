"""
Basic neighbourhoods {f : |f(x) - h(x)| < ε on F} and their deterministic stream.

F runs over prefixes of the canonical enumeration, h over the grid
{0, 1/m, ..., 1}^F, and ε over a schedule indexed by the 1-based position in
the stream.

With the dovetail rule, stage t = 1, 2, ... visits prefix sizes
k = 1 .. min(t, max_window) in order and emits, for each, the next grid vector
not yet used with F_k. Grid vectors for F_k are read as k-digit numbers in base
m + 1 (most significant digit first) and taken in increasing order, so the
stream is injective and prefix-stable. A size whose grid is used up is skipped;
on a finite carrier the stream can end before ``count``.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from ..config import DEFAULT_GRID, DEFAULT_MAX_WINDOW
from ..errors import InvalidNeighborhood
from ..semigroups.handles import SemigroupHandle, Window, enumerate_window
from ..uniform.functions import WindowFunction

logger = logging.getLogger(__name__)


class EpsilonSchedule(str, Enum):
    GEOMETRIC = "geometric"  # 1/2^j
    HARMONIC = "harmonic"  # 1/j

    def epsilon(self, j: int) -> Fraction:
        if self == EpsilonSchedule.GEOMETRIC:
            return Fraction(1, 2**j)
        return Fraction(1, j)


class WindowGrowth(str, Enum):
    DOVETAIL = "dovetail"  # interleave prefix sizes 1 .. max_window
    FIXED = "fixed"  # always the largest prefix


@dataclass(frozen=True)
class BasicNeighborhood:
    F: Window
    h: WindowFunction
    epsilon: Fraction

    def __post_init__(self):
        if not len(self.F):
            raise InvalidNeighborhood("F must be non-empty")
        if self.epsilon <= 0:
            raise InvalidNeighborhood(f"epsilon must be positive, got {self.epsilon}")
        for x in self.F:
            if not self.h.covers(x):
                raise InvalidNeighborhood(f"h has no value at {x!r}")
            if not 0 <= self.h(x) <= 1:
                raise InvalidNeighborhood(f"h({x!r}) = {self.h(x)} outside [0, 1]")

    @classmethod
    def from_values(cls, F: Window, values, epsilon) -> BasicNeighborhood:
        """Build from h's values listed in F's order."""
        values = tuple(values)
        if len(values) != len(F):
            raise InvalidNeighborhood(f"{len(values)} values given for {len(F)} points")
        return cls(F, WindowFunction(F, dict(zip(F, values)), default=None), Fraction(epsilon))

    @property
    def key(self) -> tuple:
        return (self.F.elements, self.h.restrict(self.F), self.epsilon)


def _grid_vectors(k: int, m: int) -> Iterator[tuple[Fraction, ...]]:
    levels = [Fraction(i, m) for i in range(m + 1)]
    return itertools.product(levels, repeat=k)


def _dovetail(sizes: list[int], m: int) -> Iterator[tuple[int, tuple[Fraction, ...]]]:
    streams = {k: _grid_vectors(k, m) for k in sizes}
    live = list(sizes)
    stage = 0
    while live:
        stage += 1
        for k in [k for k in live if k <= stage]:
            vector = next(streams[k], None)
            if vector is None:
                live.remove(k)
                continue
            yield k, vector


def _fixed(k: int, m: int) -> Iterator[tuple[int, tuple[Fraction, ...]]]:
    for vector in _grid_vectors(k, m):
        yield k, vector


def enumerate_neighborhoods(
    s: SemigroupHandle,
    count: int,
    max_window: int = DEFAULT_MAX_WINDOW,
    grid_denominator: int = DEFAULT_GRID,
    epsilon_schedule: EpsilonSchedule = EpsilonSchedule.GEOMETRIC,
    growth: WindowGrowth = WindowGrowth.DOVETAIL,
) -> list[BasicNeighborhood]:
    """The first ``count`` neighbourhoods of the stream.

    Raises:
        ValueError: If count, max_window or grid_denominator is not positive.
    """
    for label, value in (
        ("count", count),
        ("max_window", max_window),
        ("grid_denominator", grid_denominator),
    ):
        if value < 1:
            raise ValueError(f"{label} must be positive, got {value}")

    largest = max_window if s.size is None else min(max_window, s.size)
    prefix = enumerate_window(s, largest)
    windows = {k: Window(prefix.elements[:k], is_prefix=True) for k in range(1, largest + 1)}

    if growth == WindowGrowth.DOVETAIL:
        stream = _dovetail(list(windows), grid_denominator)
    else:
        stream = _fixed(largest, grid_denominator)

    result: list[BasicNeighborhood] = []
    for j, (k, vector) in enumerate(itertools.islice(stream, count), start=1):
        epsilon = epsilon_schedule.epsilon(j)
        result.append(BasicNeighborhood.from_values(windows[k], vector, epsilon))
    if len(result) < count:
        logger.warning(
            "neighborhood stream on %s ended after %d of %d", s.name, len(result), count
        )
    return result
