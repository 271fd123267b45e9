"""
Molecular measures: finite rational combinations of point masses.

A measure is stored coalesced (one term per support element, no zero
coefficients) and sorted in the handle's canonical element order, so two
measures are equal exactly when their term tuples are equal. Convolution is the
bilinear extension of δ_x ⋆ δ_y = δ_{xy}.
"""

from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from ..config import ACTION_LAW_SAMPLES
from ..errors import ActionLawViolation, HandleMismatch
from ..semigroups.handles import SemigroupHandle
from ..types import ActionOracle, Element
from ..uniform.functions import WindowFunction

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MolecularMeasure:
    handle: SemigroupHandle
    terms: tuple[tuple[Element, Fraction], ...]

    @classmethod
    def from_terms(
        cls, handle: SemigroupHandle, pairs: Iterable[tuple[Element, Fraction | int]]
    ) -> MolecularMeasure:
        """Coalesce repeated elements, drop zeros, and sort canonically."""
        acc: dict[Element, Fraction] = defaultdict(Fraction)
        for x, c in pairs:
            acc[handle.validate(x)] += Fraction(c)
        kept = [(x, c) for x, c in acc.items() if c != 0]
        kept.sort(key=lambda term: handle.sort_key(term[0]))
        return cls(handle, tuple(kept))

    @classmethod
    def zero(cls, handle: SemigroupHandle) -> MolecularMeasure:
        return cls(handle, ())

    @property
    def support(self) -> tuple[Element, ...]:
        return tuple(x for x, _ in self.terms)

    def coefficient(self, x: Element) -> Fraction:
        return dict(self.terms).get(x, Fraction(0))

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: MolecularMeasure) -> MolecularMeasure:
        return linear_combine(1, self, 1, other)

    def __sub__(self, other: MolecularMeasure) -> MolecularMeasure:
        return linear_combine(1, self, -1, other)

    def __neg__(self) -> MolecularMeasure:
        return self.scale(-1)

    def scale(self, r: Fraction | int) -> MolecularMeasure:
        return MolecularMeasure.from_terms(self.handle, ((x, r * c) for x, c in self.terms))


@dataclass(frozen=True)
class Action:
    """A semigroup ``source`` acting on the carrier of ``target`` by ``apply``."""

    source: SemigroupHandle
    target: SemigroupHandle
    apply: ActionOracle
    name: str = "action"


def translation_action(s: SemigroupHandle) -> Action:
    """Left multiplication of ``s`` on itself; over nat-plus this is m(s, y) = s + y."""
    return Action(s, s, s.product, name=f"translation on {s.name}")


def _same_handle(mu: MolecularMeasure, nu: MolecularMeasure) -> None:
    if mu.handle != nu.handle:
        raise HandleMismatch(f"measures live on {mu.handle.name} and {nu.handle.name}")


def dirac(s: SemigroupHandle, x: Element) -> MolecularMeasure:
    """δ_x, the unit point mass."""
    return MolecularMeasure.from_terms(s, [(x, 1)])


def support(mu: MolecularMeasure) -> tuple[Element, ...]:
    return mu.support


def linear_combine(
    r: Fraction | int, mu: MolecularMeasure, t: Fraction | int, nu: MolecularMeasure
) -> MolecularMeasure:
    """rμ + tν, coalesced."""
    _same_handle(mu, nu)
    pairs = itertools.chain(
        ((x, Fraction(r) * c) for x, c in mu.terms),
        ((y, Fraction(t) * c) for y, c in nu.terms),
    )
    return MolecularMeasure.from_terms(mu.handle, pairs)


def evaluate(mu: MolecularMeasure, f: WindowFunction) -> Fraction:
    """The pairing μ(f) = Σ c_i f(x_i)."""
    return sum((c * f(x) for x, c in mu.terms), Fraction(0))


def convolve(mu: MolecularMeasure, nu: MolecularMeasure) -> MolecularMeasure:
    """μ ⋆ ν = Σ_i Σ_j a_i b_j δ_{x_i y_j}."""
    _same_handle(mu, nu)
    s = mu.handle
    result = MolecularMeasure.from_terms(
        s, ((s.product(x, y), a * b) for x, a in mu.terms for y, b in nu.terms)
    )
    logger.debug(
        "convolved %d x %d terms into %d on %s", len(mu), len(nu), len(result), s.name
    )
    return result


def _check_action_law(
    action: Action, mu: MolecularMeasure, nu: MolecularMeasure, samples: int
) -> None:
    source = action.source
    triples = itertools.product(mu.support, mu.support, nu.support)
    for s, s_prime, y in itertools.islice(triples, samples):
        if action.apply(s, action.apply(s_prime, y)) != action.apply(source.product(s, s_prime), y):
            raise ActionLawViolation(s, s_prime, y)


def action_convolve(
    mu: MolecularMeasure,
    nu: MolecularMeasure,
    action: Action,
    law_samples: int = ACTION_LAW_SAMPLES,
) -> MolecularMeasure:
    """Σ_i Σ_j a_i b_j δ_{m(x_i, y_j)} for μ on the acting semigroup and ν on the carrier.

    Up to ``law_samples`` triples from the supports are checked against
    m(s, m(s', y)) = m(ss', y) before the product is formed.

    Raises:
        HandleMismatch: If μ or ν does not live where the action expects.
        ActionLawViolation: If a sampled triple breaks the action law.
    """
    if mu.handle != action.source or nu.handle != action.target:
        raise HandleMismatch(
            f"{action.name} maps {action.source.name} x {action.target.name}, "
            f"got {mu.handle.name} x {nu.handle.name}"
        )
    _check_action_law(action, mu, nu, law_samples)
    target = action.target
    return MolecularMeasure.from_terms(
        target,
        ((target.validate(action.apply(x, y)), a * b) for x, a in mu.terms for y, b in nu.terms),
    )


def norm(mu: MolecularMeasure) -> Fraction:
    """Σ |c_i|; on a discrete carrier this is the dual norm against ℓ^∞."""
    return sum((abs(c) for _, c in mu.terms), Fraction(0))


def is_positive(mu: MolecularMeasure) -> bool:
    return all(c >= 0 for _, c in mu.terms)
