"""
Semigroup handles: finite Cayley tables and enumerable built-in families.

A handle owns the encoding of its elements, the product law and the canonical
enumeration. Enumeration order is index order for tables, shortlex for words,
numeric order for naturals, and (denominator, numerator) for rational balls.
Every handle is immutable and compares by value.
"""

from __future__ import annotations

import itertools
import math
from abc import ABC, abstractmethod
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, ClassVar

from ..errors import InvalidElement, InvariantError, MalformedTable, WindowTooLarge
from ..types import Element, ElementToken
from ..utils import format_rational, parse_rational


class SemigroupKind(str, Enum):
    """Families a handle can belong to; values match the file format ``kind``."""

    CAYLEY = "cayley"
    FREE = "free"
    NAT_PLUS = "nat-plus"
    NAT_TIMES = "nat-times"
    LEFT_ZERO = "left-zero"
    RIGHT_ZERO = "right-zero"
    BALL = "ball"


@dataclass(frozen=True)
class AssociativityVerdict:
    """Outcome of an exhaustive associativity scan."""

    ok: bool
    counterexample: tuple[int, int, int] | None = None


class SemigroupHandle(ABC):
    """A discrete semigroup with a product oracle and a canonical enumeration."""

    kind: ClassVar[SemigroupKind]

    @property
    @abstractmethod
    def size(self) -> int | None:
        """Carrier size, or None for an infinite carrier."""

    @property
    @abstractmethod
    def name(self) -> str:
        """Short display name, also used for output file slugs."""

    @abstractmethod
    def contains(self, x: Any) -> bool:
        """True when ``x`` is a canonical encoding of an element."""

    @abstractmethod
    def _multiply(self, x: Element, y: Element) -> Element: ...

    @abstractmethod
    def iter_elements(self) -> Iterator[Element]:
        """Canonical enumeration; injective, possibly infinite."""

    @abstractmethod
    def sort_key(self, x: Element) -> Any:
        """Key that orders elements as the canonical enumeration does."""

    @abstractmethod
    def parse_element(self, token: ElementToken) -> Element:
        """Decode a document token; raises InvalidElement."""

    def format_element(self, x: Element) -> str:
        """String token used for JSON keys and measure terms."""
        return str(x)

    def element_json(self, x: Element) -> ElementToken:
        """Native JSON value used in element lists."""
        return x  # type: ignore[return-value]

    def validate(self, x: Any) -> Element:
        if not self.contains(x):
            raise InvalidElement(f"{x!r} is not an element of {self.name}", element=x)
        return x

    def product(self, x: Element, y: Element) -> Element:
        return self._multiply(self.validate(x), self.validate(y))

    @property
    def is_finite(self) -> bool:
        return self.size is not None


def _is_natural(x: Any) -> bool:
    return isinstance(x, int) and not isinstance(x, bool) and x >= 0


def _parse_natural(token: ElementToken, owner: str) -> int:
    if isinstance(token, bool):
        raise InvalidElement(f"{token!r} is not an element of {owner}", element=token)
    if isinstance(token, int):
        return token
    if isinstance(token, str) and token.strip().isdigit():
        return int(token.strip())
    raise InvalidElement(f"{token!r} is not an element of {owner}", element=token)


def check_associativity(table: Sequence[Sequence[int]]) -> AssociativityVerdict:
    """Scan all n³ triples for (xy)z = x(yz).

    Returns the lexicographically first failing triple, if any.

    Raises:
        MalformedTable: If the table is empty, not square, or has out-of-range entries.
    """
    n = len(table)
    if n == 0:
        raise MalformedTable("table is empty")
    for i, row in enumerate(table):
        if len(row) != n:
            raise MalformedTable(f"row {i} has {len(row)} entries, expected {n}")
        for j, entry in enumerate(row):
            if isinstance(entry, bool) or not isinstance(entry, int) or not 0 <= entry < n:
                raise MalformedTable(f"entry ({i},{j}) = {entry!r} is not an index below {n}")
    for x, y, z in itertools.product(range(n), repeat=3):
        if table[table[x][y]][z] != table[x][table[y][z]]:
            return AssociativityVerdict(ok=False, counterexample=(x, y, z))
    return AssociativityVerdict(ok=True)


@dataclass(frozen=True)
class CayleyTable(SemigroupHandle):
    """A finite semigroup given by its multiplication table over indices 0..n-1."""

    labels: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]

    kind: ClassVar[SemigroupKind] = SemigroupKind.CAYLEY

    def __post_init__(self):
        if len(self.labels) != len(self.table):
            raise MalformedTable(
                f"{len(self.labels)} labels for a table with {len(self.table)} rows"
            )
        if len(set(self.labels)) != len(self.labels):
            raise MalformedTable("element labels must be distinct")
        for i, label in enumerate(self.labels):
            # digit strings always parse as indices
            if label.strip().isdigit() and int(label) != i:
                raise MalformedTable(f"label {label!r} of element {i} reads as index {int(label)}")
        verdict = check_associativity(self.table)
        if not verdict.ok:
            x, y, z = verdict.counterexample  # type: ignore[misc]
            raise InvariantError(
                "associativity",
                f"({x},{y},{z}): ({x}*{y})*{z} != {x}*({y}*{z})",
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], labels: Sequence[str] | None = None):
        labels = list(labels) if labels is not None else [str(i) for i in range(len(rows))]
        return cls(tuple(labels), tuple(tuple(row) for row in rows))

    @classmethod
    def cyclic(cls, n: int) -> CayleyTable:
        """Z_n under addition mod n."""
        return cls.from_rows([[(i + j) % n for j in range(n)] for i in range(n)])

    @property
    def size(self) -> int:
        return len(self.table)

    @property
    def name(self) -> str:
        return f"cayley-{self.size}"

    def contains(self, x: Any) -> bool:
        return _is_natural(x) and x < len(self.table)

    def _multiply(self, x: int, y: int) -> int:  # type: ignore[override]
        return self.table[x][y]

    def iter_elements(self) -> Iterator[int]:
        return iter(range(len(self.table)))

    def sort_key(self, x: int) -> int:  # type: ignore[override]
        return x

    def parse_element(self, token: ElementToken) -> int:
        # Digit strings are indices; other strings are looked up as labels.
        if isinstance(token, str) and not token.strip().isdigit():
            if token in self.labels:
                return self.labels.index(token)
            raise InvalidElement(f"{token!r} is not a label of {self.name}", element=token)
        return self.validate(_parse_natural(token, self.name))


@dataclass(frozen=True)
class FreeWords(SemigroupHandle):
    """Free semigroup over single-character generators; the empty word is excluded."""

    generators: tuple[str, ...]

    kind: ClassVar[SemigroupKind] = SemigroupKind.FREE
    _positions: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not self.generators:
            raise InvalidElement("a free semigroup needs at least one generator")
        for g in self.generators:
            if not isinstance(g, str) or len(g) != 1:
                raise InvalidElement(f"generator {g!r} must be a single character", element=g)
        if len(set(self.generators)) != len(self.generators):
            raise InvalidElement("generators must be distinct")
        object.__setattr__(self, "_positions", {g: i for i, g in enumerate(self.generators)})

    @property
    def size(self) -> None:
        return None

    @property
    def name(self) -> str:
        return "free-" + "".join(self.generators)

    def contains(self, x: Any) -> bool:
        return isinstance(x, str) and len(x) > 0 and all(c in self._positions for c in x)

    def _multiply(self, x: str, y: str) -> str:  # type: ignore[override]
        return x + y

    def iter_elements(self) -> Iterator[str]:
        for length in itertools.count(1):
            for letters in itertools.product(self.generators, repeat=length):
                yield "".join(letters)

    def sort_key(self, x: str) -> tuple[int, tuple[int, ...]]:  # type: ignore[override]
        return (len(x), tuple(self._positions[c] for c in x))

    def parse_element(self, token: ElementToken) -> str:
        if not isinstance(token, str):
            raise InvalidElement(f"{token!r} is not a word over {self.name}", element=token)
        return self.validate(token)


@dataclass(frozen=True)
class _Naturals(SemigroupHandle):
    @property
    def size(self) -> None:
        return None

    def contains(self, x: Any) -> bool:
        return _is_natural(x)

    def iter_elements(self) -> Iterator[int]:
        return itertools.count(0)

    def sort_key(self, x: int) -> int:  # type: ignore[override]
        return x

    def parse_element(self, token: ElementToken) -> int:
        return self.validate(_parse_natural(token, self.name))


@dataclass(frozen=True)
class NatPlus(_Naturals):
    """(ℕ, +) with 0 included."""

    kind: ClassVar[SemigroupKind] = SemigroupKind.NAT_PLUS

    @property
    def name(self) -> str:
        return "nat-plus"

    def _multiply(self, x: int, y: int) -> int:  # type: ignore[override]
        return x + y


@dataclass(frozen=True)
class NatTimes(_Naturals):
    """(ℕ, ·) with 0 included, so 0 is absorbing."""

    kind: ClassVar[SemigroupKind] = SemigroupKind.NAT_TIMES

    @property
    def name(self) -> str:
        return "nat-times"

    def _multiply(self, x: int, y: int) -> int:  # type: ignore[override]
        return x * y


@dataclass(frozen=True)
class _ZeroSemigroup(SemigroupHandle):
    """Carrier 0..size-1, or all naturals when size is None."""

    carrier_size: int | None = None

    def __post_init__(self):
        if self.carrier_size is not None and self.carrier_size < 1:
            raise InvalidElement(f"carrier size must be positive, got {self.carrier_size}")

    @property
    def size(self) -> int | None:
        return self.carrier_size

    @property
    def name(self) -> str:
        suffix = f":{self.carrier_size}" if self.carrier_size is not None else ""
        return f"{self.kind.value}{suffix}"

    def contains(self, x: Any) -> bool:
        return _is_natural(x) and (self.carrier_size is None or x < self.carrier_size)

    def iter_elements(self) -> Iterator[int]:
        if self.carrier_size is None:
            return itertools.count(0)
        return iter(range(self.carrier_size))

    def sort_key(self, x: int) -> int:  # type: ignore[override]
        return x

    def parse_element(self, token: ElementToken) -> int:
        return self.validate(_parse_natural(token, self.name))


@dataclass(frozen=True)
class LeftZero(_ZeroSemigroup):
    """xy = x."""

    kind: ClassVar[SemigroupKind] = SemigroupKind.LEFT_ZERO

    def _multiply(self, x: int, y: int) -> int:  # type: ignore[override]
        return x


@dataclass(frozen=True)
class RightZero(_ZeroSemigroup):
    """xy = y."""

    kind: ClassVar[SemigroupKind] = SemigroupKind.RIGHT_ZERO

    def _multiply(self, x: int, y: int) -> int:  # type: ignore[override]
        return y


@dataclass(frozen=True)
class RationalBall(SemigroupHandle):
    """Rationals of absolute value below ``radius`` (or at most, when closed) under ``*``.

    For 0 < radius <= 1 the ball is closed under multiplication, so it is the
    rational trace of a ball in the normed algebra ℝ.
    """

    radius: Fraction
    closed: bool = False

    kind: ClassVar[SemigroupKind] = SemigroupKind.BALL

    def __post_init__(self):
        radius = Fraction(self.radius)
        if not 0 < radius <= 1:
            raise InvalidElement(f"ball radius must lie in (0, 1], got {radius}")
        object.__setattr__(self, "radius", radius)

    @property
    def size(self) -> None:
        return None

    @property
    def name(self) -> str:
        return f"ball-{format_rational(self.radius)}" + ("-closed" if self.closed else "")

    def contains(self, x: Any) -> bool:
        if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
            return False
        return abs(x) <= self.radius if self.closed else abs(x) < self.radius

    def validate(self, x: Any) -> Fraction:
        return Fraction(super().validate(x))

    def _multiply(self, x: Fraction, y: Fraction) -> Fraction:  # type: ignore[override]
        return x * y

    def iter_elements(self) -> Iterator[Fraction]:
        for q in itertools.count(1):
            bound = math.floor(self.radius * q)
            for p in range(-bound, bound + 1):
                if math.gcd(p, q) != 1:
                    continue
                x = Fraction(p, q)
                if self.contains(x):
                    yield x

    def sort_key(self, x: Fraction) -> tuple[int, int]:  # type: ignore[override]
        x = Fraction(x)
        return (x.denominator, x.numerator)

    def parse_element(self, token: ElementToken) -> Fraction:
        try:
            value = parse_rational(token)
        except Exception as e:
            raise InvalidElement(f"{token!r} is not a rational", element=token) from e
        return self.validate(value)

    def format_element(self, x: Element) -> str:
        return format_rational(Fraction(x))

    def element_json(self, x: Element) -> str:
        return format_rational(Fraction(x))


# ============================================================================
# WINDOWS
# ============================================================================


@dataclass(frozen=True)
class Window:
    """A finite ordered list of distinct elements."""

    elements: tuple[Element, ...]
    is_prefix: bool = False
    _members: frozenset = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        members = frozenset(self.elements)
        if len(members) != len(self.elements):
            raise InvalidElement("window elements must be distinct")
        object.__setattr__(self, "_members", members)

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self._members

    def __getitem__(self, i: int) -> Element:
        return self.elements[i]

    def issubset(self, other: Iterable[Element]) -> bool:
        other_set = other._members if isinstance(other, Window) else set(other)
        return self._members <= other_set


def make_window(s: SemigroupHandle, elements: Iterable[Any]) -> Window:
    """Validate elements against ``s`` and wrap them as a window.

    The prefix flag is set when the elements equal the first k of the
    canonical enumeration.
    """
    checked = tuple(s.validate(x) for x in elements)
    prefix = tuple(itertools.islice(s.iter_elements(), len(checked)))
    return Window(checked, is_prefix=checked == prefix)


def product(s: SemigroupHandle, x: Element, y: Element) -> Element:
    """xy per the handle's law or table."""
    return s.product(x, y)


def enumerate_window(s: SemigroupHandle, k: int) -> Window:
    """The first ``k`` elements in canonical order.

    Raises:
        WindowTooLarge: If ``s`` is finite and ``k`` exceeds its size.
    """
    if k < 0:
        raise ValueError(f"window size must be non-negative, got {k}")
    if s.size is not None and k > s.size:
        raise WindowTooLarge(k, s.size)
    return Window(tuple(itertools.islice(s.iter_elements(), k)), is_prefix=True)


def from_builtin(name: str) -> SemigroupHandle:
    """Resolve a builtin name (see ``config.BUILTIN_NAMES``).

    Raises:
        KeyError: If the name is unknown.
    """
    base, _, arg = name.strip().partition(":")
    if base == "free2" and not arg:
        return FreeWords(("a", "b"))
    if base == "nat-plus" and not arg:
        return NatPlus()
    if base == "nat-times" and not arg:
        return NatTimes()
    if base in ("left-zero", "right-zero"):
        size = None
        if arg:
            if not arg.isdigit():
                raise InvalidElement(f"carrier size in {name!r} must be a positive integer")
            size = int(arg)
        return LeftZero(size) if base == "left-zero" else RightZero(size)
    if base == "ball" and arg:
        return RationalBall(parse_rational(arg))
    if base.startswith("cyclic") and base[6:].isdigit():
        return CayleyTable.cyclic(int(base[6:]))
    raise KeyError(name)
