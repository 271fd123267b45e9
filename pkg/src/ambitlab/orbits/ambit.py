"""
Ambit witnesses: greedy selection of translates and the piecewise function.

For neighbourhoods U_1, U_2, ... the greedy scan picks, for each U in turn,
the first element x_U of the canonical enumeration such that z -> z x_U is
injective on F_U and F_U x_U misses every product set claimed so far. The
function f is then h_U(z) at z x_U and 0 elsewhere, so every translate
f^{x_U} reproduces h_U on F_U exactly.

Neighbourhoods are numbered from 1, the same position that indexes ε.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from ..config import DEFAULT_BUDGET
from ..errors import AmbitlabError, BudgetExhausted, IllFormedSelection
from ..reports import Report
from ..semigroups.handles import SemigroupHandle, Window
from ..types import Element
from ..uniform.functions import WindowFunction
from ..utils import format_rational
from .neighborhoods import BasicNeighborhood

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AmbitWitness:
    handle: SemigroupHandle
    neighborhoods: tuple[BasicNeighborhood, ...]
    selections: tuple[Element, ...]
    f: WindowFunction


def greedy_select(
    s: SemigroupHandle,
    neighborhoods: Sequence[BasicNeighborhood],
    budget: int = DEFAULT_BUDGET,
) -> list[Element]:
    """Select x_U for each neighbourhood in order.

    Each step rescans the enumeration from its start and gives up after
    ``budget`` candidates.

    Raises:
        BudgetExhausted: With the 1-based index of the first neighbourhood
            that has no admissible candidate within the budget.
    """
    if budget < 1:
        raise ValueError(f"budget must be positive, got {budget}")
    claimed: set[Element] = set()
    selections: list[Element] = []
    for index, U in enumerate(neighborhoods, start=1):
        for scanned, x in enumerate(itertools.islice(s.iter_elements(), budget), start=1):
            products = [s.product(z, x) for z in U.F]
            image = set(products)
            if len(image) == len(products) and claimed.isdisjoint(image):
                selections.append(x)
                claimed |= image
                logger.debug("neighborhood %d: x = %r after %d candidates", index, x, scanned)
                break
        else:
            raise BudgetExhausted(index, budget)
    return selections


def build_ambit_function(
    s: SemigroupHandle,
    neighborhoods: Sequence[BasicNeighborhood],
    selections: Sequence[Element],
) -> AmbitWitness:
    """Assemble f(z x_U) = h_U(z), f = 0 elsewhere.

    Raises:
        ValueError: If there is not exactly one selection per neighbourhood.
        IllFormedSelection: If some point would receive two values.
    """
    if len(neighborhoods) != len(selections):
        raise ValueError(
            f"{len(selections)} selections given for {len(neighborhoods)} neighborhoods"
        )
    owners: dict[Element, tuple[int, Element]] = {}
    values: dict[Element, Fraction] = {}
    for index, (U, x_u) in enumerate(zip(neighborhoods, selections), start=1):
        x_u = s.validate(x_u)
        for z in U.F:
            y = s.product(z, x_u)
            if y in owners:
                raise IllFormedSelection(y, owners[y], (index, z))
            owners[y] = (index, z)
            values[y] = U.h(z)
    f = WindowFunction(Window(tuple(owners)), values, default=0)
    return AmbitWitness(s, tuple(neighborhoods), tuple(s.validate(x) for x in selections), f)


def _product_sets(s: SemigroupHandle, w: AmbitWitness) -> list[list[Element]]:
    return [[s.product(z, x_u) for z in U.F] for U, x_u in zip(w.neighborhoods, w.selections)]


def verify_ambit(s: SemigroupHandle, w: AmbitWitness) -> Report:
    """Re-check a witness exhaustively; failures are report entries, never exceptions."""
    report = Report()
    n = len(w.neighborhoods)
    if len(w.selections) != n:
        report.add("selections", False, f"{len(w.selections)} selections for {n} neighborhoods")
        return report
    try:
        sets = _product_sets(s, w)
    except AmbitlabError as exc:
        report.add("selections", False, str(exc))
        return report

    bad = next((i for i, ys in enumerate(sets, start=1) if len(set(ys)) != len(ys)), None)
    report.add(
        "injective",
        bad is None,
        f"x -> x x_U injective on all {n} F_U" if bad is None else f"fails at neighborhood {bad}",
    )

    clash = None
    seen: dict[Element, int] = {}
    for i, ys in enumerate(sets, start=1):
        for y in set(ys):
            if y in seen and seen[y] != i:
                clash = (seen[y], i, y)
                break
            seen[y] = i
        if clash:
            break
    report.add(
        "disjoint",
        clash is None,
        "product sets pairwise disjoint"
        if clash is None
        else f"neighborhoods {clash[0]} and {clash[1]} both claim {s.format_element(clash[2])}",
    )

    claimed = set().union(*sets)
    formula_error = None
    if w.f.default is None:
        formula_error = "default is undefined, expected 0"
    elif w.f.default != 0:
        formula_error = f"default is {format_rational(w.f.default)}, expected 0"
    else:
        for x, value in w.f.as_dict().items():
            if x not in claimed and value != 0:
                formula_error = f"f({s.format_element(x)}) = {value} off the claimed support"
                break
    if formula_error is None and clash is not None:
        report.info("formula", "not evaluated: product sets overlap")
    else:
        if formula_error is None:
            for U, ys in zip(w.neighborhoods, sets):
                mismatch = next(((z, y) for z, y in zip(U.F, ys) if w.f(y) != U.h(z)), None)
                if mismatch:
                    z, y = mismatch
                    formula_error = f"f({s.format_element(y)}) != h({s.format_element(z)})"
                    break
        report.add(
            "formula", formula_error is None, formula_error or "f follows the piecewise rule"
        )

    worst = Fraction(0)
    exact = 0
    missed = None
    uncovered = None
    for index, (U, ys) in enumerate(zip(w.neighborhoods, sets), start=1):
        gap = next((y for y in ys if not w.f.covers(y)), None)
        if gap is not None:
            if uncovered is None:
                uncovered = (index, gap)
            continue
        deviation = max(abs(w.f(y) - U.h(z)) for z, y in zip(U.F, ys))
        worst = max(worst, deviation)
        exact += deviation == 0
        if deviation >= U.epsilon and missed is None:
            missed = index
    if uncovered is not None:
        index, gap = uncovered
        detail = f"f undefined at {s.format_element(gap)} in neighborhood {index}"
    elif missed is not None:
        detail = f"neighborhood {missed} missed; max deviation {format_rational(worst)}"
    elif exact == n:
        detail = f"all {n} neighborhoods matched exactly"
    else:
        detail = (
            f"{exact} of {n} neighborhoods matched exactly; "
            f"max deviation {format_rational(worst)}"
        )
    report.add("approximation", missed is None and uncovered is None, detail)
    return report
