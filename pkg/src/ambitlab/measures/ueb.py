"""
UEB distance between molecular measures on a finite window.

    ueb(μ, ν) = max { |(μ - ν)(f)| : -1 <= f <= 1, |f(x) - f(x')| <= d(x, x') }

The feasible set is symmetric under f -> -f, so the absolute value can be
dropped and the program solved once. Substituting g = f + 1 puts it in
``maximize c.x, A x <= b, x >= 0`` form with b >= 0. Only support points enter
the program: a [-1, 1]-valued 1-Lipschitz function on the support extends to
the whole window (McShane extension, clipped), so the other window points do
not change the optimum.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from ..errors import WindowMismatch
from ..semigroups.handles import Window
from ..uniform.functions import Pseudometric
from .linprog import maximize
from .molecular import MolecularMeasure, linear_combine


def ueb_distance(
    mu: MolecularMeasure, nu: MolecularMeasure, d: Pseudometric, window: Window
) -> Fraction:
    """Exact UEB distance of μ and ν with respect to ``d`` restricted to ``window``.

    Raises:
        WindowMismatch: If a support point lies outside the window, or the
            metric does not cover the window.
        HandleMismatch: If μ and ν live on different semigroups.
    """
    for x in window:
        if not d.covers(x):
            raise WindowMismatch(f"{x!r} lies outside the metric window", element=x)
    for x in (*mu.support, *nu.support):
        if x not in window:
            raise WindowMismatch(f"support point {x!r} lies outside the window", element=x)
    diff = linear_combine(1, mu, -1, nu)
    if not diff.terms:
        return Fraction(0)

    points = [x for x, _ in diff.terms]
    weights = [c for _, c in diff.terms]
    n = len(points)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for i in range(n):
        rows.append([Fraction(int(k == i)) for k in range(n)])
        rhs.append(Fraction(2))
    for i, j in itertools.permutations(range(n), 2):
        bound = d.distance(points[i], points[j])
        if bound >= 2:
            continue  # implied by the range rows
        row = [Fraction(0)] * n
        row[i] = Fraction(1)
        row[j] = Fraction(-1)
        rows.append(row)
        rhs.append(bound)

    solution = maximize(weights, rows, rhs)
    return solution.value - sum(weights, Fraction(0))
