"""Tests for the exact simplex and the UEB distance.

The distance is checked against a brute-force oracle: every vertex of the
feasible polytope has coordinates of the form ±1 plus a signed sum of
distances, so maximizing over that finite grid over the whole window gives
the optimum independently of the simplex and of the support-only reduction.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from ambitlab.errors import HandleMismatch, UnboundedProgram, WindowMismatch
from ambitlab.measures import (
    MolecularMeasure,
    dirac,
    linear_combine,
    maximize,
    norm,
    ueb_distance,
)
from ambitlab.semigroups import FreeWords, NatPlus, Window
from ambitlab.uniform import Pseudometric, validate_pseudometric

NAT = NatPlus()
W2 = Window((0, 1))
W4 = Window((0, 1, 2, 3))
HALF = Fraction(1, 2)


def _hub_metric(x, y):
    if x == y:
        return Fraction(0)
    return Fraction(3, 2) if 0 in (x, y) else HALF


METRICS = [
    Pseudometric.discrete(),
    Pseudometric.from_function(W4, lambda x, y: Fraction(abs(x - y), 2)),
    Pseudometric.from_function(W4, _hub_metric),
]


def _candidate_values(d: Pseudometric, points) -> list[Fraction]:
    distances = {d.distance(x, y) for x, y in itertools.permutations(points, 2)}
    values = {Fraction(-1), Fraction(1)}
    for _ in range(len(points)):
        values |= {v + s * t for v in values for t in distances for s in (1, -1)}
        values = {v for v in values if -1 <= v <= 1}
    return sorted(values)


def _oracle(mu: MolecularMeasure, nu: MolecularMeasure, d: Pseudometric, window) -> Fraction:
    points = list(window)
    weights = [mu.coefficient(x) - nu.coefficient(x) for x in points]
    candidates = _candidate_values(d, points)
    best = Fraction(0)

    def extend(assigned: list[Fraction]) -> None:
        nonlocal best
        i = len(assigned)
        if i == len(points):
            best = max(best, sum(w * v for w, v in zip(weights, assigned)))
            return
        for v in candidates:
            if all(abs(v - u) <= d.distance(points[i], points[j]) for j, u in enumerate(assigned)):
                extend([*assigned, v])

    extend([])
    return best


def test_maximize_small_program():
    # max 3x + 2y, x + y <= 4, x + 3y <= 6, x <= 3
    solution = maximize([3, 2], [[1, 1], [1, 3], [1, 0]], [4, 6, 3])
    assert solution.value == 11
    assert solution.x == (3, 1)


def test_maximize_degenerate_vertex():
    solution = maximize([1, 1], [[1, 0], [0, 1], [1, 1]], [1, 1, 2])
    assert solution.value == 2


def test_maximize_zero_objective():
    solution = maximize([0, 0], [[1, 1]], [1])
    assert solution.value == 0
    assert solution.pivots == 0


def test_maximize_unbounded():
    with pytest.raises(UnboundedProgram):
        maximize([1, 0], [[0, 1]], [1])


@pytest.mark.parametrize(
    "A,b",
    [
        ([[1, 1]], [1, 2]),
        ([[1]], [1]),
        ([[1, 1]], [-1]),
    ],
)
def test_maximize_rejects_bad_input(A, b):
    with pytest.raises(ValueError):
        maximize([1, 1], A, b)


def test_equal_measures_are_at_distance_zero():
    mu = MolecularMeasure.from_terms(NAT, [(0, 2), (1, -1)])
    assert ueb_distance(mu, mu, Pseudometric.discrete(), W2) == 0


def test_point_masses_under_discrete_metric():
    assert ueb_distance(dirac(NAT, 0), dirac(NAT, 1), Pseudometric.discrete(), W2) == 1


def test_point_masses_capped_by_range():
    d = Pseudometric.table(W2, [[0, 3], [3, 0]])
    assert ueb_distance(dirac(NAT, 0), dirac(NAT, 1), d, W2) == 2


def test_point_masses_under_small_distance():
    d = Pseudometric.table(W2, [[0, Fraction(1, 4)], [Fraction(1, 4), 0]])
    assert ueb_distance(dirac(NAT, 0), dirac(NAT, 1), d, W2) == Fraction(1, 4)


def test_single_point_difference_uses_full_range():
    mu = MolecularMeasure.from_terms(NAT, [(2, Fraction(3, 2))])
    assert ueb_distance(mu, MolecularMeasure.zero(NAT), Pseudometric.discrete(), W4) == Fraction(
        3, 2
    )


def test_support_outside_window():
    with pytest.raises(WindowMismatch):
        ueb_distance(dirac(NAT, 0), dirac(NAT, 5), Pseudometric.discrete(), W4)


def test_window_outside_table_metric():
    d = Pseudometric.table(W2, [[0, 1], [1, 0]])
    with pytest.raises(WindowMismatch):
        ueb_distance(dirac(NAT, 0), dirac(NAT, 1), d, W4)


def test_mixed_handles():
    free = FreeWords(("a", "b"))
    with pytest.raises(HandleMismatch):
        ueb_distance(dirac(NAT, 0), dirac(free, "a"), Pseudometric.discrete(), Window((0, "a")))


def test_oracle_metrics_are_valid():
    for d in METRICS[1:]:
        assert validate_pseudometric(d).ok


@pytest.mark.parametrize("d", METRICS, ids=["discrete", "half-gap", "hub"])
def test_agrees_with_vertex_oracle(d):
    coefficients = (Fraction(-1), Fraction(0), HALF, Fraction(2))
    for weights in itertools.product(coefficients, repeat=4):
        mu = MolecularMeasure.from_terms(NAT, [(x, w) for x, w in zip(W4, weights) if w > 0])
        nu = MolecularMeasure.from_terms(NAT, [(x, -w) for x, w in zip(W4, weights) if w < 0])
        got = ueb_distance(mu, nu, d, W4)
        assert got == _oracle(mu, nu, d, W4), weights
        assert got <= norm(linear_combine(1, mu, -1, nu))
