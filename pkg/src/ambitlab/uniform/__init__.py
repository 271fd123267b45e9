"""
ambitlab uniform package.

Finite-window pseudometrics, Lipschitz sets and equicontinuity moduli.
"""

from .equicontinuity import (
    EquicontinuityReport,
    ZeroDistanceViolation,
    ball_sample,
    equicontinuity_report,
)
from .functions import (
    LipVerdict,
    LipViolation,
    MetricKind,
    MetricVerdict,
    MetricViolation,
    Pseudometric,
    WindowFunction,
    lip_membership,
    validate_pseudometric,
)

__all__ = [
    "EquicontinuityReport",
    "LipVerdict",
    "LipViolation",
    "MetricKind",
    "MetricVerdict",
    "MetricViolation",
    "Pseudometric",
    "WindowFunction",
    "ZeroDistanceViolation",
    "ball_sample",
    "equicontinuity_report",
    "lip_membership",
    "validate_pseudometric",
]
