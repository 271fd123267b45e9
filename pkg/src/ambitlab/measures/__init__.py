"""Molecular measures, convolution and the UEB distance."""

from .linprog import LPSolution, maximize
from .molecular import (
    Action,
    MolecularMeasure,
    action_convolve,
    convolve,
    dirac,
    evaluate,
    is_positive,
    linear_combine,
    norm,
    support,
    translation_action,
)
from .ueb import ueb_distance

__all__ = [
    "Action",
    "LPSolution",
    "MolecularMeasure",
    "action_convolve",
    "convolve",
    "dirac",
    "evaluate",
    "is_positive",
    "linear_combine",
    "maximize",
    "norm",
    "support",
    "translation_action",
    "ueb_distance",
]
