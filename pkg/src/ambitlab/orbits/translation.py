"""
Right translations, right orbits restricted to a probe window, and the map
φ(ν) = x -> ν(y -> f(xy)) on molecular measures.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING

from ..measures.molecular import MolecularMeasure
from ..semigroups.handles import SemigroupHandle, Window
from ..types import Element, Vector
from ..uniform.functions import WindowFunction

if TYPE_CHECKING:
    from .neighborhoods import BasicNeighborhood


def right_translate(
    s: SemigroupHandle, f: WindowFunction, x: Element, out_window: Window
) -> WindowFunction:
    """f^x on ``out_window``: g(z) = f(zx).

    Raises:
        InvalidElement: If x or a window point is not an element of ``s``.
        CoverageError: If some zx is neither in f's window nor covered by its default.
    """
    x = s.validate(x)
    return WindowFunction(
        out_window, {z: f(s.product(s.validate(z), x)) for z in out_window}, default=None
    )


@dataclass(frozen=True)
class OrbitTrace:
    """Distinct restrictions (f^x)|_F over a search window, in order of first appearance."""

    f: WindowFunction = field(compare=False)
    probe: Window
    vectors: tuple[Vector, ...]
    witnesses: dict[Vector, Element] = field(default_factory=dict, compare=False)

    def __contains__(self, vector: object) -> bool:
        return vector in self.witnesses

    def __len__(self) -> int:
        return len(self.vectors)


def _restriction(s: SemigroupHandle, f: WindowFunction, F: Window, x: Element) -> Vector:
    return tuple(f(s.product(z, x)) for z in F)


def orbit_trace(s: SemigroupHandle, f: WindowFunction, F: Window, search: Window) -> OrbitTrace:
    """Trace of the right orbit of f on the coordinates F.

    Raises:
        CoverageError: If a needed product is not covered by f.
    """
    witnesses: dict[Vector, Element] = {}
    for x in search:
        witnesses.setdefault(_restriction(s, f, F, x), x)
    return OrbitTrace(f=f, probe=F, vectors=tuple(witnesses), witnesses=witnesses)


def find_approximant(
    s: SemigroupHandle, f: WindowFunction, target: BasicNeighborhood, search: Window
) -> Element | None:
    """First x in ``search`` with |f(zx) - h(z)| < ε on F, or None if there is none."""
    goal = target.h.restrict(target.F)
    for x in search:
        vector = _restriction(s, f, target.F, x)
        if all(abs(v - g) < target.epsilon for v, g in zip(vector, goal)):
            return x
    return None


def phi_map(
    s: SemigroupHandle, f: WindowFunction, nu: MolecularMeasure, out_window: Window
) -> WindowFunction:
    """g(x) = Σ_j c_j f(x y_j) on ``out_window``; φ(δ_y) is the right translate f^y."""
    values = {
        x: sum((c * f(s.product(x, y)) for y, c in nu.terms), Fraction(0)) for x in out_window
    }
    return WindowFunction(out_window, values, default=None)
