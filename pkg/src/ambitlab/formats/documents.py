"""
ambitlab document models.

Pydantic models for every JSON file the CLI reads or writes. Rationals travel
as "p/q" strings and become Fractions on validation; element tokens stay raw
(int or str) until a semigroup handle decodes them.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Annotated, Literal

from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    PlainSerializer,
    PositiveInt,
    StrictInt,
    StrictStr,
)

from ..errors import ParseError
from ..utils import format_rational, parse_rational


def _rational(value: object) -> Fraction:
    try:
        return parse_rational(value)  # type: ignore[arg-type]
    except ParseError as e:
        raise ValueError(str(e)) from e


Rational = Annotated[
    Fraction,
    BeforeValidator(_rational),
    PlainSerializer(format_rational, return_type=str),
]

Token = StrictInt | StrictStr


class _Document(BaseModel):
    model_config = ConfigDict(extra="forbid", arbitrary_types_allowed=True)


# ============================================================================
# SEMIGROUPS
# ============================================================================


class CayleyDocument(_Document):
    kind: Literal["cayley"] = "cayley"
    elements: list[str] | None = None  # labels; indices when omitted
    table: list[list[StrictInt]]


class FreeDocument(_Document):
    kind: Literal["free"] = "free"
    generators: list[str]


class NaturalsDocument(_Document):
    kind: Literal["nat-plus", "nat-times"]


class ZeroDocument(_Document):
    kind: Literal["left-zero", "right-zero"]
    size: PositiveInt | None = None  # countable when omitted


class BallDocument(_Document):
    kind: Literal["ball"] = "ball"
    radius: Rational
    closed: bool = False


SemigroupDocument = Annotated[
    CayleyDocument | FreeDocument | NaturalsDocument | ZeroDocument | BallDocument,
    Field(discriminator="kind"),
]


# ============================================================================
# METRICS AND FUNCTIONS
# ============================================================================


class DiscreteMetricDocument(_Document):
    kind: Literal["discrete"] = "discrete"


class AbsoluteMetricDocument(_Document):
    kind: Literal["absolute"] = "absolute"


class TableMetricDocument(_Document):
    kind: Literal["table"] = "table"
    window: list[Token]
    matrix: list[list[Rational]]


PseudometricDocument = Annotated[
    DiscreteMetricDocument | AbsoluteMetricDocument | TableMetricDocument,
    Field(discriminator="kind"),
]


class WindowFunctionDocument(_Document):
    window: list[Token] | None = None  # defaults to the keys of values, in order
    values: dict[str, Rational] = Field(default_factory=dict)
    default: Rational | None = Fraction(0)


# ============================================================================
# MEASURES AND WITNESSES
# ============================================================================


class MeasureDocument(_Document):
    semigroup: str | SemigroupDocument | None = None  # builtin name, file path, or inline
    terms: list[tuple[Token, Rational]] = Field(default_factory=list)


class NeighborhoodDocument(_Document):
    F: list[Token]
    h: dict[str, Rational]
    eps: Rational


class WitnessDocument(_Document):
    semigroup: SemigroupDocument | None = None
    neighborhoods: list[NeighborhoodDocument] = Field(default_factory=list)
    selections: list[Token] = Field(default_factory=list)
    f: WindowFunctionDocument = Field(default_factory=WindowFunctionDocument)
