"""
Exact rational simplex for programs in the form

    maximize   c . x
    subject to A x <= b,  x >= 0,  b >= 0.

With b non-negative the all-slack basis is feasible, so no phase one is
needed. Pivoting follows Bland's rule (smallest entering index, ratio ties to
the smallest basic index), which rules out cycling on degenerate vertices.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from ..errors import UnboundedProgram

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LPSolution:
    value: Fraction
    x: tuple[Fraction, ...]
    pivots: int


def _pivot(rows: list[list[Fraction]], objective: list[Fraction], r: int, col: int) -> None:
    pivot_row = rows[r]
    scale = pivot_row[col]
    rows[r] = pivot_row = [v / scale for v in pivot_row]
    for i, row in enumerate(rows):
        if i != r and row[col] != 0:
            factor = row[col]
            rows[i] = [v - factor * p for v, p in zip(row, pivot_row)]
    if objective[col] != 0:
        factor = objective[col]
        objective[:] = [v - factor * p for v, p in zip(objective, pivot_row)]


def maximize(
    c: Sequence[Fraction | int],
    A: Sequence[Sequence[Fraction | int]],
    b: Sequence[Fraction | int],
) -> LPSolution:
    """Solve the program exactly.

    Raises:
        ValueError: On shape mismatch or a negative entry of b.
        UnboundedProgram: If the objective grows without bound.
    """
    n = len(c)
    m = len(A)
    if len(b) != m or any(len(row) != n for row in A):
        raise ValueError("constraint matrix does not match c and b")
    if any(v < 0 for v in b):
        raise ValueError("right-hand side must be non-negative")

    # Each row is [A_i | I_i | b_i]; the objective row holds reduced costs and -value last.
    rows = [
        [Fraction(v) for v in A[i]] + [Fraction(int(i == k)) for k in range(m)] + [Fraction(b[i])]
        for i in range(m)
    ]
    objective = [-Fraction(v) for v in c] + [Fraction(0)] * (m + 1)
    basis = list(range(n, n + m))

    pivots = 0
    while True:
        col = next((j for j in range(n + m) if objective[j] < 0), None)
        if col is None:
            break
        best: tuple[Fraction, int, int] | None = None
        for i, row in enumerate(rows):
            if row[col] > 0:
                candidate = (row[-1] / row[col], basis[i], i)
                if best is None or candidate < best:
                    best = candidate
        if best is None:
            raise UnboundedProgram(col)
        r = best[2]
        _pivot(rows, objective, r, col)
        basis[r] = col
        pivots += 1

    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = rows[i][-1]
    logger.debug("simplex finished after %d pivots on %d x %d", pivots, m, n)
    return LPSolution(value=objective[-1], x=tuple(x), pivots=pivots)
