"""Tests for semigroup handles, enumeration and the associativity guard."""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from ambitlab.errors import InvalidElement, InvariantError, MalformedTable, WindowTooLarge
from ambitlab.semigroups import (
    CayleyTable,
    FreeWords,
    LeftZero,
    NatPlus,
    NatTimes,
    RationalBall,
    RightZero,
    check_associativity,
    enumerate_window,
    from_builtin,
    make_window,
    product,
)

Z2 = [[0, 1], [1, 0]]
# (0*0)*1 = 1*1 = 0 but 0*(0*1) = 0*0 = 1
BROKEN = [[1, 0], [0, 0]]


def test_products_follow_each_law():
    assert product(CayleyTable.from_rows(Z2), 1, 1) == 0
    assert product(FreeWords(("a", "b")), "ab", "b") == "abb"
    assert product(LeftZero(), 3, 7) == 3
    assert product(RightZero(), 3, 7) == 7
    assert product(NatPlus(), 2, 5) == 7
    assert product(NatTimes(), 0, 9) == 0
    assert product(RationalBall(Fraction(1, 2)), Fraction(1, 3), Fraction(-1, 4)) == Fraction(
        -1, 12
    )


@pytest.mark.parametrize(
    "s,x",
    [
        (FreeWords(("a", "b")), ""),
        (FreeWords(("a", "b")), "abc"),
        (NatPlus(), -1),
        (NatPlus(), True),
        (LeftZero(3), 3),
        (CayleyTable.from_rows(Z2), 2),
        (RationalBall(Fraction(1, 2)), Fraction(1, 2)),
    ],
)
def test_foreign_elements_rejected(s, x):
    with pytest.raises(InvalidElement):
        s.product(x, x)


def test_closed_ball_keeps_boundary():
    ball = RationalBall(Fraction(1, 2), closed=True)
    assert ball.contains(Fraction(1, 2))
    assert not RationalBall(Fraction(1, 2)).contains(Fraction(1, 2))


@pytest.mark.parametrize(
    "s,k,expected",
    [
        (FreeWords(("a", "b")), 4, ("a", "b", "aa", "ab")),
        (NatPlus(), 3, (0, 1, 2)),
        (CayleyTable.from_rows(Z2), 2, (0, 1)),
        (RightZero(5), 5, (0, 1, 2, 3, 4)),
        (
            RationalBall(Fraction(1, 2)),
            5,
            (Fraction(0), Fraction(-1, 3), Fraction(1, 3), Fraction(-1, 4), Fraction(1, 4)),
        ),
    ],
)
def test_enumerate_window(s, k, expected):
    window = enumerate_window(s, k)
    assert window.elements == expected
    assert window.is_prefix


def test_enumeration_is_injective_and_ordered():
    free = FreeWords(("a", "b", "c"))
    words = list(itertools.islice(free.iter_elements(), 200))
    assert len(set(words)) == len(words)
    assert words == sorted(words, key=free.sort_key)

    ball = RationalBall(Fraction(1))
    points = list(itertools.islice(ball.iter_elements(), 100))
    assert len(set(points)) == len(points)
    assert all(abs(p) < 1 for p in points)


@pytest.mark.parametrize(
    "s",
    [
        FreeWords(("a", "b")),
        NatPlus(),
        NatTimes(),
        LeftZero(),
        RightZero(6),
        CayleyTable.cyclic(5),
        RationalBall(Fraction(1, 2), closed=True),
    ],
    ids=lambda s: s.name,
)
def test_enumeration_prefixes_nest(s):
    top = 12 if s.size is None else s.size
    windows = [enumerate_window(s, k).elements for k in range(top + 1)]
    for shorter, longer in zip(windows, windows[1:]):
        assert len(longer) == len(shorter) + 1
        assert longer[: len(shorter)] == shorter


def test_window_too_large_on_finite_carrier():
    with pytest.raises(WindowTooLarge) as exc:
        enumerate_window(CayleyTable.from_rows(Z2), 3)
    assert exc.value.requested == 3
    assert exc.value.size == 2


def test_make_window_detects_prefix():
    s = NatPlus()
    assert make_window(s, [0, 1, 2]).is_prefix
    assert not make_window(s, [0, 2]).is_prefix
    with pytest.raises(InvalidElement):
        make_window(s, [0, 0])


def test_check_associativity():
    assert check_associativity(Z2).ok
    assert check_associativity([[0]]).ok
    verdict = check_associativity(BROKEN)
    assert not verdict.ok
    assert verdict.counterexample == (0, 0, 1)


@pytest.mark.parametrize("rows", [[], [[0, 1]], [[0, 2], [1, 0]]])
def test_malformed_tables(rows):
    with pytest.raises(MalformedTable):
        check_associativity(rows)


def test_non_associative_table_refused_at_construction():
    with pytest.raises(InvariantError) as exc:
        CayleyTable.from_rows(BROKEN)
    assert exc.value.check == "associativity"
    assert "(0,0,1)" in exc.value.detail


def test_cayley_labels_parse_to_indices():
    s = CayleyTable.from_rows(Z2, labels=["e", "g"])
    assert s.parse_element("g") == 1
    assert s.parse_element(0) == 0
    assert s.parse_element("1") == 1
    with pytest.raises(InvalidElement):
        s.parse_element("h")


def test_digit_labels_must_name_their_own_index():
    assert CayleyTable.from_rows(Z2, labels=["0", "1"]).parse_element("1") == 1
    with pytest.raises(MalformedTable):
        CayleyTable.from_rows(Z2, labels=["1", "0"])


def test_cyclic_table():
    z6 = CayleyTable.cyclic(6)
    assert z6.size == 6
    assert z6.product(4, 5) == 3


@pytest.mark.parametrize(
    "name,expected",
    [
        ("free2", FreeWords(("a", "b"))),
        ("nat-plus", NatPlus()),
        ("nat-times", NatTimes()),
        ("left-zero", LeftZero()),
        ("right-zero:4", RightZero(4)),
        ("ball:1/2", RationalBall(Fraction(1, 2))),
        ("cyclic3", CayleyTable.cyclic(3)),
    ],
)
def test_from_builtin(name, expected):
    assert from_builtin(name) == expected


def test_unknown_builtin():
    with pytest.raises(KeyError):
        from_builtin("free3")


def test_handles_compare_by_value():
    assert RightZero(4) == RightZero(4)
    assert RightZero(4) != LeftZero(4)
    assert hash(FreeWords(("a", "b"))) == hash(FreeWords(("a", "b")))
