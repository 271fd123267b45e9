"""
ambitlab - exact convolution algebras of molecular measures on discrete semigroups.

Semigroup handles, rational pseudometrics, molecular measures with convolution
and the UEB distance, right orbits, and ambit-witness construction.
"""

from ambitlab.measures import (
    MolecularMeasure,
    action_convolve,
    convolve,
    dirac,
    evaluate,
    is_positive,
    linear_combine,
    norm,
    ueb_distance,
)
from ambitlab.orbits import (
    build_ambit_function,
    enumerate_neighborhoods,
    greedy_select,
    verify_ambit,
)
from ambitlab.semigroups import enumerate_window, from_builtin, make_window, product
from ambitlab.utils import get_version

__version__ = get_version()
__all__ = [
    "MolecularMeasure",
    "action_convolve",
    "build_ambit_function",
    "convolve",
    "dirac",
    "enumerate_neighborhoods",
    "enumerate_window",
    "evaluate",
    "from_builtin",
    "greedy_select",
    "is_positive",
    "linear_combine",
    "make_window",
    "norm",
    "product",
    "ueb_distance",
    "verify_ambit",
]
