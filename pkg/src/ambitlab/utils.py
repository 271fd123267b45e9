"""
Shared utilities for ambitlab.

Common helpers used across multiple modules.
"""

import re
import unicodedata
from fractions import Fraction

from .errors import ParseError

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def get_version() -> str:
    """Get the package version from installed metadata."""
    try:
        from importlib.metadata import version

        return version("ambitlab")
    except Exception:
        return "0.1.0"


def sanitize_filename(name: str, max_length: int = 100) -> str:
    """Sanitize a string to be a safe, URL-friendly filename (slug style)."""
    # Convert to NFKD (separate characters from accents)
    name = unicodedata.normalize("NFKD", name)
    name = name.encode("ascii", "ignore").decode("ascii")
    name = re.sub(r"[^\w-]", " ", name)
    name = re.sub(r"[\s_.-]+", "_", name).strip("_").lower()
    return name[:max_length]


def parse_rational(value: str | int | Fraction, *, location: str | None = None) -> Fraction:
    """Parse ``"p/q"``, ``"n"`` or an int into an exact Fraction.

    Floats are refused: a document that carries one has already lost exactness.
    """
    if isinstance(value, bool):
        raise ParseError(f"expected a rational, got {value!r}", location=location)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL_RE.match(value)
        if match:
            numerator = int(match.group(1))
            denominator = int(match.group(2)) if match.group(2) is not None else 1
            if denominator == 0:
                raise ParseError(f"zero denominator in {value!r}", location=location)
            return Fraction(numerator, denominator)
    raise ParseError(f"expected a rational 'p/q', got {value!r}", location=location)


def format_rational(value: Fraction | int) -> str:
    """Lowest-terms ``"p/q"`` with q > 0; integers render as ``"n"``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
