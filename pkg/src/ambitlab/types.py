"""Project-local type aliases shared across modules.

Elements are plain hashable values whose meaning depends on the owning
semigroup handle: table indices and naturals are ``int``, free-semigroup words
are ``str``, and points of a rational ball are ``Fraction``.
"""

from __future__ import annotations

from collections.abc import Callable
from fractions import Fraction

Element = int | str | Fraction

# Token an element takes in a JSON document (int for indices/naturals, str otherwise).
ElementToken = int | str

# Action oracle m(x, y) of one semigroup on another carrier.
ActionOracle = Callable[[Element, Element], Element]

Vector = tuple[Fraction, ...]
