"""Tests for right translations, orbit traces, φ and the neighbourhood stream."""

from __future__ import annotations

import logging
from fractions import Fraction

import pytest

from ambitlab.errors import CoverageError, InvalidNeighborhood
from ambitlab.measures import MolecularMeasure, dirac, linear_combine
from ambitlab.orbits import (
    BasicNeighborhood,
    EpsilonSchedule,
    WindowGrowth,
    enumerate_neighborhoods,
    find_approximant,
    orbit_trace,
    phi_map,
    right_translate,
)
from ambitlab.semigroups import (
    CayleyTable,
    FreeWords,
    NatPlus,
    RightZero,
    Window,
    enumerate_window,
)
from ambitlab.uniform import WindowFunction

NAT = NatPlus()
FREE = FreeWords(("a", "b"))
HALF = Fraction(1, 2)


def test_right_translate_on_naturals():
    f = WindowFunction.indicator([2])
    g = right_translate(NAT, f, 1, enumerate_window(NAT, 6))
    assert g.as_dict() == {0: 0, 1: 1, 2: 0, 3: 0, 4: 0, 5: 0}


def test_right_translate_on_words():
    f = WindowFunction.indicator(["ab"])
    g = right_translate(FREE, f, "b", enumerate_window(FREE, 6))
    assert [z for z, v in g.as_dict().items() if v] == ["a"]


def test_right_translate_by_identity():
    z3 = CayleyTable.cyclic(3)
    window = enumerate_window(z3, 3)
    f = WindowFunction(window, {0: Fraction(1, 3), 1: 1, 2: 0}, default=None)
    assert right_translate(z3, f, 0, window).as_dict() == f.as_dict()


def test_right_translate_needs_coverage():
    f = WindowFunction((0, 1, 2), {0: 0, 1: 1, 2: 0}, default=None)
    with pytest.raises(CoverageError):
        right_translate(NAT, f, 2, Window((0, 1)))


def test_orbit_of_zero_is_a_point():
    zero = WindowFunction.constant(0)
    trace = orbit_trace(FREE, zero, enumerate_window(FREE, 3), enumerate_window(FREE, 20))
    assert trace.vectors == ((0, 0, 0),)
    assert trace.witnesses[(0, 0, 0)] == "a"


def test_orbit_trace_on_right_zero_is_constant():
    s = RightZero()
    window = enumerate_window(s, 6)
    f = WindowFunction(window, {x: Fraction(x, 5) for x in window})
    trace = orbit_trace(s, f, Window((0, 1, 2)), window)
    assert len(trace) == 6
    assert all(len(set(vector)) == 1 for vector in trace.vectors)


def test_orbit_trace_keeps_first_witness():
    f = WindowFunction.indicator([3])
    trace = orbit_trace(NAT, f, Window((0, 1)), enumerate_window(NAT, 6))
    # x = 0, 1 give zero rows; x = 2 hits 1+2, x = 3 hits 0+3
    assert trace.vectors == ((0, 0), (0, 1), (1, 0))
    assert trace.witnesses[(0, 0)] == 0
    assert (1, 0) in trace


def test_find_approximant():
    F = Window(("a",))
    zero = WindowFunction.constant(0)
    ones = BasicNeighborhood.from_values(F, [1], HALF)
    zeros = BasicNeighborhood.from_values(F, [0], HALF)
    search = enumerate_window(FREE, 10)
    assert find_approximant(FREE, zero, ones, search) is None
    assert find_approximant(FREE, zero, zeros, search) == "a"


def test_phi_of_point_mass_is_right_translate():
    f = WindowFunction.tabulate(range(12), lambda x: Fraction(x % 3, 2))
    out = enumerate_window(NAT, 5)
    for x in range(6):
        assert phi_map(NAT, f, dirac(NAT, x), out) == right_translate(NAT, f, x, out)


def test_phi_of_zero_measure():
    f = WindowFunction.indicator([1, 2])
    g = phi_map(NAT, f, MolecularMeasure.zero(NAT), enumerate_window(NAT, 4))
    assert set(g.as_dict().values()) == {0}


def test_phi_expands_linearly():
    f = WindowFunction.indicator([3])
    nu = MolecularMeasure.from_terms(NAT, [(1, 1), (2, 1)])
    g = phi_map(NAT, f, nu, enumerate_window(NAT, 5))
    assert g.as_dict() == {0: 0, 1: 1, 2: 1, 3: 0, 4: 0}

    nu2 = MolecularMeasure.from_terms(NAT, [(0, Fraction(1, 2))])
    out = enumerate_window(NAT, 5)
    combined = phi_map(NAT, f, linear_combine(2, nu, -3, nu2), out)
    for z in out:
        expected = 2 * phi_map(NAT, f, nu, out)(z) - 3 * phi_map(NAT, f, nu2, out)(z)
        assert combined(z) == expected


@pytest.mark.parametrize(
    "F,values,epsilon",
    [
        ((), (), HALF),
        ((0,), (HALF,), 0),
        ((0,), (Fraction(3, 2),), HALF),
        ((0,), (Fraction(-1, 2),), HALF),
        ((0, 1), (HALF,), HALF),
    ],
)
def test_invalid_neighborhoods(F, values, epsilon):
    with pytest.raises(InvalidNeighborhood):
        BasicNeighborhood.from_values(Window(F), values, epsilon)


def test_first_neighborhood():
    (U,) = enumerate_neighborhoods(FREE, 1, grid_denominator=2)
    assert U.F.elements == ("a",)
    assert U.h("a") == 0
    assert U.epsilon == HALF


def test_dovetail_order():
    stream = enumerate_neighborhoods(NAT, 6, max_window=3, grid_denominator=2)
    assert [len(U.F) for U in stream] == [1, 1, 2, 1, 2, 3]
    assert [U.h.restrict(U.F) for U in stream[:3]] == [(0,), (HALF,), (0, 0)]
    assert [U.epsilon for U in stream] == [Fraction(1, 2**j) for j in range(1, 7)]


def test_harmonic_schedule_and_fixed_growth():
    stream = enumerate_neighborhoods(
        FREE,
        3,
        max_window=2,
        grid_denominator=4,
        epsilon_schedule=EpsilonSchedule.HARMONIC,
        growth=WindowGrowth.FIXED,
    )
    assert all(U.F.elements == ("a", "b") for U in stream)
    assert [U.epsilon for U in stream] == [1, HALF, Fraction(1, 3)]
    assert [U.h.restrict(U.F) for U in stream] == [(0, 0), (0, Fraction(1, 4)), (0, HALF)]


def test_stream_is_injective_and_prefix_stable():
    long = enumerate_neighborhoods(FREE, 120, max_window=4, grid_denominator=3)
    short = enumerate_neighborhoods(FREE, 40, max_window=4, grid_denominator=3)
    assert [U.key[:2] for U in long[:40]] == [U.key[:2] for U in short]
    assert len({U.key for U in long}) == 120
    assert len({U.key[:2] for U in long}) == 120


def test_stream_ends_early_on_small_carrier(caplog):
    z2 = CayleyTable.cyclic(2)
    with caplog.at_level(logging.WARNING):
        stream = enumerate_neighborhoods(z2, 50, max_window=8, grid_denominator=1)
    # 2 vectors on {0} and 4 on {0, 1}
    assert len(stream) == 6
    assert "ended after 6 of 50" in caplog.text


@pytest.mark.parametrize(
    "kwargs",
    [{"count": 0}, {"count": 3, "max_window": 0}, {"count": 3, "grid_denominator": 0}],
)
def test_stream_arguments_checked(kwargs):
    with pytest.raises(ValueError):
        enumerate_neighborhoods(NAT, **kwargs)
