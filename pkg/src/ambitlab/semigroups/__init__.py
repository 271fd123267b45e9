"""
ambitlab semigroups package.

Discrete semigroups (finite tables and enumerable families), windows, and the
cancellativity-property checkers.
"""

from .handles import (
    AssociativityVerdict,
    CayleyTable,
    FreeWords,
    LeftZero,
    NatPlus,
    NatTimes,
    RationalBall,
    RightZero,
    SemigroupHandle,
    SemigroupKind,
    Window,
    check_associativity,
    enumerate_window,
    from_builtin,
    make_window,
    product,
)
from .properties import (
    ClosedFormVerdict,
    Property1Report,
    Property2aReport,
    Property2Report,
    TableProfile,
    check_property_1,
    check_property_2,
    check_property_2a,
    growing_schedule,
    preimage_set,
    table_profile,
)

__all__ = [
    "AssociativityVerdict",
    "CayleyTable",
    "ClosedFormVerdict",
    "FreeWords",
    "LeftZero",
    "NatPlus",
    "NatTimes",
    "Property1Report",
    "Property2Report",
    "Property2aReport",
    "RationalBall",
    "RightZero",
    "SemigroupHandle",
    "SemigroupKind",
    "TableProfile",
    "Window",
    "check_associativity",
    "check_property_1",
    "check_property_2",
    "check_property_2a",
    "enumerate_window",
    "from_builtin",
    "growing_schedule",
    "make_window",
    "preimage_set",
    "product",
    "table_profile",
]
