"""
Quantitative equicontinuity of translations on a sample.

On a finite sample every map is uniformly continuous, so instead of a boolean
the report gives Lipschitz-type moduli: the best L with d(xy, x'y) <= L d(x, x')
over the right translations, and per-element constants for y -> xy. The
boolean content survives only as the zero-distance condition:
d(x, x') = 0 must force d(xy, x'y) = 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ..errors import ProductOutsideWindow, WindowMismatch
from ..semigroups.handles import SemigroupHandle, Window, enumerate_window
from ..types import Element
from .functions import Pseudometric


@dataclass(frozen=True)
class ZeroDistanceViolation:
    """d(x, x') = 0 but the translates by y are apart."""

    x: Element
    x_prime: Element
    y: Element


@dataclass(frozen=True)
class EquicontinuityReport:
    right_family_constant: Fraction
    left_constants: dict[Element, Fraction]
    zero_distance_violations: tuple[ZeroDistanceViolation, ...]
    left_zero_distance_violations: tuple[ZeroDistanceViolation, ...] = ()

    @property
    def zero_distance_ok(self) -> bool:
        return not self.zero_distance_violations


def equicontinuity_report(
    s: SemigroupHandle, d: Pseudometric, sample: Window
) -> EquicontinuityReport:
    """Exact moduli of the right family {x -> xy} and of each y -> xy over ``sample``.

    Raises:
        WindowMismatch: If the sample leaves a table metric's window.
        ProductOutsideWindow: If a needed product has no recorded distance.
    """
    points = [s.validate(x) for x in sample]
    for x in points:
        if not d.covers(x):
            raise WindowMismatch(f"{x!r} lies outside the metric window", element=x)

    right = Fraction(0)
    violations: list[ZeroDistanceViolation] = []
    for y in points:
        for x, x_prime in itertools.combinations(points, 2):
            base = d.distance(x, x_prime)
            moved = _translated_distance(s, d, x, x_prime, y, side="right")
            if base > 0:
                right = max(right, moved / base)
            elif moved > 0:
                violations.append(ZeroDistanceViolation(x, x_prime, y))

    left: dict[Element, Fraction] = {}
    left_violations: list[ZeroDistanceViolation] = []
    for x in points:
        best = Fraction(0)
        for y, y_prime in itertools.combinations(points, 2):
            base = d.distance(y, y_prime)
            moved = _translated_distance(s, d, y, y_prime, x, side="left")
            if base > 0:
                best = max(best, moved / base)
            elif moved > 0:
                left_violations.append(ZeroDistanceViolation(y, y_prime, x))
        left[x] = best

    return EquicontinuityReport(
        right_family_constant=right,
        left_constants=left,
        zero_distance_violations=tuple(violations),
        left_zero_distance_violations=tuple(left_violations),
    )


def _translated_distance(
    s: SemigroupHandle, d: Pseudometric, a: Element, b: Element, t: Element, *, side: str
) -> Fraction:
    """d(at, bt) for side="right", d(ta, tb) for side="left"."""
    if side == "right":
        pairs = ((a, t, s.product(a, t)), (b, t, s.product(b, t)))
    else:
        pairs = ((t, a, s.product(t, a)), (t, b, s.product(t, b)))
    for left_factor, right_factor, p in pairs:
        if not d.covers(p):
            raise ProductOutsideWindow(left_factor, right_factor, p)
    return d.distance(pairs[0][2], pairs[1][2])


def ball_sample(s: SemigroupHandle, k: int) -> Window:
    """The first ``k`` enumerated points of a rational ball (or any handle)."""
    return enumerate_window(s, k)
