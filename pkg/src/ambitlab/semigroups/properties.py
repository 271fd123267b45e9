"""
Cancellativity-type properties on finite windows.

Property (1): for finite F, the set of z with xz != yz for all distinct x, y in F
is as large as the semigroup. Property (2): for small P, every preimage {x}^-1 P
is small. Both are cardinality statements about infinite sets, so the checkers
report window evidence, plus a closed-form verdict only for built-in families
where the answer follows from the defining law.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from ..types import Element
from .handles import (
    CayleyTable,
    FreeWords,
    LeftZero,
    NatPlus,
    NatTimes,
    RightZero,
    SemigroupHandle,
    Window,
)


@dataclass(frozen=True)
class ClosedFormVerdict:
    """A verdict that follows from the family's law rather than from a search."""

    holds: bool
    reason: str


@dataclass(frozen=True)
class Property1Report:
    qualifying: Window
    count: int
    searched: int
    verdict: ClosedFormVerdict | None = None


@dataclass(frozen=True)
class Property2Report:
    x: Element
    sizes: tuple[int, ...]
    window_sizes: tuple[int, ...]
    verdict: ClosedFormVerdict | None = None

    @property
    def fills_every_window(self) -> bool:
        return bool(self.sizes) and self.sizes == self.window_sizes

    @property
    def stabilized(self) -> bool:
        return len(self.sizes) >= 2 and self.sizes[-1] == self.sizes[-2]


@dataclass(frozen=True)
class Property2aReport:
    """|F^-1 P ∩ W| against the per-element bound Σ_x |{x}^-1 P ∩ W|."""

    union_size: int
    bound: int

    @property
    def consistent(self) -> bool:
        return self.union_size <= self.bound


@dataclass(frozen=True)
class TableProfile:
    left_cancellative: bool
    right_cancellative: bool
    identity: int | None

    @property
    def is_group(self) -> bool:
        return self.identity is not None and self.left_cancellative and self.right_cancellative


def preimage_set(
    s: SemigroupHandle,
    R: Iterable[Element],
    P: Iterable[Element],
    search: Window,
) -> Window:
    """R^-1 P restricted to ``search``: every x with rx in P for some r in R, in search order."""
    left = [s.validate(r) for r in R]
    targets = {s.validate(p) for p in P}
    hits = tuple(x for x in search if any(s.product(r, x) in targets for r in left))
    return Window(hits)


def _separates(s: SemigroupHandle, F: Sequence[Element], z: Element) -> bool:
    products = [s.product(x, z) for x in F]
    return len(set(products)) == len(products)


def property_1_verdict(s: SemigroupHandle) -> ClosedFormVerdict | None:
    if isinstance(s, (FreeWords, NatPlus)):
        return ClosedFormVerdict(True, "holds in any infinite right cancellative semigroup")
    if isinstance(s, NatTimes):
        return ClosedFormVerdict(True, "xz = yz with x != y forces z = 0; every z > 0 separates")
    if isinstance(s, LeftZero):
        return ClosedFormVerdict(True, "xz = x != y = yz for every z")
    if isinstance(s, RightZero) and (s.size is None or s.size >= 2):
        return ClosedFormVerdict(False, "xz = z = yz, so no z separates two elements")
    return None


def property_2_verdict(s: SemigroupHandle) -> ClosedFormVerdict | None:
    if isinstance(s, (FreeWords, NatPlus)):
        return ClosedFormVerdict(True, "holds in any infinite weakly left cancellative semigroup")
    if isinstance(s, RightZero):
        return ClosedFormVerdict(True, "{x}^-1 P = P for every x")
    if isinstance(s, NatTimes):
        return ClosedFormVerdict(False, "{0}^-1 {0} is the whole carrier")
    if isinstance(s, LeftZero) and (s.size is None or s.size >= 2):
        return ClosedFormVerdict(False, "{x}^-1 P is the whole carrier whenever x is in P")
    return None


def check_property_1(s: SemigroupHandle, F: Iterable[Element], search: Window) -> Property1Report:
    """Elements of ``search`` on which right multiplication separates F.

    A singleton F makes the condition vacuous, so every searched element qualifies.
    """
    members = [s.validate(x) for x in F]
    if not members:
        raise ValueError("F must be non-empty")
    qualifying = Window(tuple(z for z in search if _separates(s, members, z)))
    return Property1Report(
        qualifying=qualifying,
        count=len(qualifying),
        searched=len(search),
        verdict=property_1_verdict(s),
    )


def check_property_2(
    s: SemigroupHandle,
    x: Element,
    P: Iterable[Element],
    search_schedule: Sequence[Window],
) -> Property2Report:
    """|{x}^-1 P ∩ W_k| for each window of a growing schedule."""
    x = s.validate(x)
    targets = tuple(P)
    sizes = tuple(len(preimage_set(s, [x], targets, window)) for window in search_schedule)
    return Property2Report(
        x=x,
        sizes=sizes,
        window_sizes=tuple(len(window) for window in search_schedule),
        verdict=property_2_verdict(s),
    )


def check_property_2a(
    s: SemigroupHandle,
    F: Iterable[Element],
    P: Iterable[Element],
    window: Window,
) -> Property2aReport:
    members = list(F)
    targets = tuple(P)
    union = preimage_set(s, members, targets, window)
    bound = sum(len(preimage_set(s, [x], targets, window)) for x in members)
    return Property2aReport(union_size=len(union), bound=bound)


def table_profile(s: CayleyTable) -> TableProfile:
    """Cancellativity and identity of a finite table (rows and columns as bijections)."""
    n = s.size
    rows = s.table
    left = all(len(set(rows[x])) == n for x in range(n))
    right = all(len({rows[x][y] for x in range(n)}) == n for y in range(n))
    identity = next(
        (
            e
            for e in range(n)
            if all(rows[e][y] == y and rows[y][e] == y for y in range(n))
        ),
        None,
    )
    return TableProfile(left_cancellative=left, right_cancellative=right, identity=identity)


def growing_schedule(window: Window, steps: int = 4) -> list[Window]:
    """Prefixes of ``window`` at 1/steps, 2/steps, ... of its length."""
    n = len(window)
    cuts = sorted({max(1, (n * i) // steps) for i in range(1, steps + 1)}) if n else []
    return [
        Window(tuple(itertools.islice(window, cut)), is_prefix=window.is_prefix) for cut in cuts
    ]
