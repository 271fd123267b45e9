"""
Seeded property suites for the convolution algebra and the orbit machinery.

Each suite draws its instances from ``random.Random`` seeded with
``"<seed>:<suite>"``, so suites are independent of one another and of the
order they run in, and a fixed seed reproduces the same report byte for byte.
All comparisons are exact.
"""

from __future__ import annotations

import itertools
import logging
import random
from collections.abc import Callable, Sequence
from fractions import Fraction

from ..config import DEFAULT_SEED
from ..measures.molecular import (
    MolecularMeasure,
    convolve,
    dirac,
    evaluate,
    is_positive,
    linear_combine,
    norm,
)
from ..measures.ueb import ueb_distance
from ..orbits.translation import phi_map, right_translate
from ..reports import CheckResult, CheckStatus, Report
from ..semigroups.handles import (
    CayleyTable,
    FreeWords,
    LeftZero,
    NatPlus,
    RationalBall,
    RightZero,
    SemigroupHandle,
    Window,
    enumerate_window,
)
from ..types import Element
from ..uniform.equicontinuity import ball_sample, equicontinuity_report
from ..uniform.functions import Pseudometric, WindowFunction
from ..utils import format_rational

logger = logging.getLogger(__name__)

Carrier = tuple[SemigroupHandle, Sequence[Element]]


def carriers() -> list[Carrier]:
    """Z_6, words over {a, b} of length at most 4, and 0..50 under addition."""
    free = FreeWords(("a", "b"))
    words = list(itertools.islice(free.iter_elements(), 30))
    return [
        (CayleyTable.cyclic(6), list(range(6))),
        (free, words),
        (NatPlus(), list(range(51))),
    ]


# ============================================================================
# GENERATORS
# ============================================================================


def random_rational(rng: random.Random, bound: int = 3, max_den: int = 4) -> Fraction:
    q = rng.randint(1, max_den)
    return Fraction(rng.randint(-bound * q, bound * q), q)


def random_measure(
    rng: random.Random,
    s: SemigroupHandle,
    pool: Sequence[Element],
    max_support: int = 5,
    positive: bool = False,
) -> MolecularMeasure:
    """Up to ``max_support`` pool elements with coefficients in [-3, 3] (or (0, 3])."""
    k = rng.randint(0, min(max_support, len(pool)))
    points = rng.sample(list(pool), k)
    if positive:
        coefficients = [Fraction(rng.randint(1, 12), rng.randint(1, 4)) for _ in points]
        coefficients = [min(c, Fraction(3)) for c in coefficients]
    else:
        coefficients = [random_rational(rng) for _ in points]
    return MolecularMeasure.from_terms(s, zip(points, coefficients))


def random_function(
    rng: random.Random, window: Window, denominator: int = 8
) -> WindowFunction:
    """A [0, 1] grid-valued function on ``window``, 0 elsewhere."""
    return WindowFunction.tabulate(
        window, lambda _: Fraction(rng.randint(0, denominator), denominator), default=0
    )


def _product_window(s: SemigroupHandle, left: Sequence[Element], right: Sequence[Element]):
    seen = dict.fromkeys(s.product(x, y) for x in left for y in right)
    return Window(tuple(seen))


# ============================================================================
# SUITES
# ============================================================================


def _result(name: str, failure: str | None, detail: str) -> CheckResult:
    if failure is not None:
        return CheckResult(name, CheckStatus.FAIL, failure)
    return CheckResult(name, CheckStatus.PASS, detail)


def suite_associativity(rng: random.Random, instances: int = 1000) -> CheckResult:
    failure = None
    for s, pool in carriers():
        for i in range(instances):
            a, b, c = (random_measure(rng, s, pool) for _ in range(3))
            if convolve(convolve(a, b), c) != convolve(a, convolve(b, c)):
                failure = f"{s.name} instance {i}"
                break
        if failure:
            break
    if failure is None:
        z2 = CayleyTable.cyclic(2)
        signed = [
            MolecularMeasure.from_terms(z2, zip(support, signs))
            for support in ([0], [1], [0, 1])
            for signs in itertools.product((1, -1), repeat=len(support))
        ]
        for a, b, c in itertools.product(signed, repeat=3):
            if convolve(convolve(a, b), c) != convolve(a, convolve(b, c)):
                failure = f"cayley-2 exhaustive {a.terms} {b.terms} {c.terms}"
                break
    return _result(
        "associativity",
        failure,
        f"{instances} triples on each of 3 carriers; exhaustive on Z2",
    )


def suite_bilinearity(rng: random.Random, instances: int = 1000) -> CheckResult:
    failure = None
    for s, pool in carriers():
        for i in range(instances):
            mu, mu2, nu, nu2 = (random_measure(rng, s, pool) for _ in range(4))
            r = random_rational(rng)
            scaled = convolve(mu, nu).scale(r)
            if convolve(mu.scale(r), nu) != scaled or convolve(mu, nu.scale(r)) != scaled:
                failure = f"{s.name} instance {i}: scalar law"
            elif convolve(mu + mu2, nu) != convolve(mu, nu) + convolve(mu2, nu):
                failure = f"{s.name} instance {i}: left distributivity"
            elif convolve(mu, nu + nu2) != convolve(mu, nu) + convolve(mu, nu2):
                failure = f"{s.name} instance {i}: right distributivity"
            if failure:
                break
        if failure:
            break
    return _result("bilinearity", failure, f"{instances} instances on each of 3 carriers")


def suite_norm(rng: random.Random, instances: int = 1000) -> CheckResult:
    failure = None
    pools = carriers()
    strict = 0
    for i in range(instances):
        s, pool = pools[i % len(pools)]
        mu, nu = random_measure(rng, s, pool), random_measure(rng, s, pool)
        lhs, rhs = norm(convolve(mu, nu)), norm(mu) * norm(nu)
        if lhs > rhs:
            failure = f"{s.name} instance {i}: {format_rational(lhs)} > {format_rational(rhs)}"
            break
        strict += lhs < rhs

    if failure is None:
        z2 = CayleyTable.cyclic(2)
        collision = convolve(
            linear_combine(1, dirac(z2, 0), -1, dirac(z2, 1)),
            linear_combine(1, dirac(z2, 0), 1, dirac(z2, 1)),
        )
        if norm(collision) != 0:
            failure = "Z2 collision does not cancel"

    if failure is None:
        # Supports of fixed word lengths 2 and 3 never collide, so equality must hold.
        free = FreeWords(("a", "b"))
        twos = [w for w in itertools.islice(free.iter_elements(), 6) if len(w) == 2]
        threes = [w for w in itertools.islice(free.iter_elements(), 14) if len(w) == 3]
        for i in range(100):
            mu, nu = random_measure(rng, free, twos), random_measure(rng, free, threes)
            if norm(convolve(mu, nu)) != norm(mu) * norm(nu):
                failure = f"free-ab equality instance {i}"
                break
    return _result(
        "norm",
        failure,
        f"{instances} instances, {strict} strict; Z2 collision 0 < 4; equality on free words",
    )


def suite_positivity(rng: random.Random, instances: int = 500) -> CheckResult:
    failure = None
    pools = carriers()
    for i in range(instances):
        s, pool = pools[i % len(pools)]
        mu = random_measure(rng, s, pool, positive=True)
        nu = random_measure(rng, s, pool, positive=True)
        if not is_positive(convolve(mu, nu)):
            failure = f"{s.name} instance {i}"
            break
    return _result("positivity", failure, f"{instances} pairs of positive measures")


def suite_commutativity(rng: random.Random, instances: int = 500) -> CheckResult:
    s = NatPlus()
    pool = list(range(51))
    failure = None
    for i in range(instances):
        mu, nu = random_measure(rng, s, pool), random_measure(rng, s, pool)
        if convolve(mu, nu) != convolve(nu, mu):
            failure = f"nat-plus instance {i}"
            break
    return _result("commutativity", failure, f"{instances} pairs on nat-plus")


def suite_phi(rng: random.Random, instances: int = 200) -> CheckResult:
    """φ(δ_x) = f^x, linearity of φ, and the pairing bridge δ_x ⋆ ν(f) = ν(y -> f(xy))."""
    failure = None
    pools = carriers()
    for i in range(instances):
        s, pool = pools[i % len(pools)]
        out = Window(tuple(rng.sample(list(pool), min(6, len(pool)))))
        x = rng.choice(list(pool))
        nu, nu2 = random_measure(rng, s, pool), random_measure(rng, s, pool)
        support = list(dict.fromkeys([x, *nu.support, *nu2.support]))
        f = random_function(rng, _product_window(s, [*out, x], support))

        if phi_map(s, f, dirac(s, x), out).as_dict() != right_translate(s, f, x, out).as_dict():
            failure = f"{s.name} instance {i}: phi(delta_x) != f^x"
            break

        r, t = random_rational(rng), random_rational(rng)
        combined = phi_map(s, f, linear_combine(r, nu, t, nu2), out)
        parts = phi_map(s, f, nu, out), phi_map(s, f, nu2, out)
        if any(combined(z) != r * parts[0](z) + t * parts[1](z) for z in out):
            failure = f"{s.name} instance {i}: phi not linear"
            break

        translated = WindowFunction.tabulate(nu.support, lambda y: f(s.product(x, y)))
        if evaluate(convolve(dirac(s, x), nu), f) != evaluate(nu, translated):
            failure = f"{s.name} instance {i}: pairing bridge"
            break
    return _result("phi", failure, f"{instances} instances across 3 carriers")


def suite_ueb(rng: random.Random, instances: int = 200) -> CheckResult:
    """Symmetry, triangle inequality and ueb(μ, ν) <= ||μ - ν|| on a six-point window."""
    s = NatPlus()
    window = enumerate_window(s, 6)
    metrics = [
        Pseudometric.discrete(),
        Pseudometric.from_function(window, lambda x, y: Fraction(abs(x - y), 2)),
    ]
    failure = None
    for i in range(instances):
        d = metrics[i % len(metrics)]
        mu, nu, rho = (random_measure(rng, s, window, max_support=3) for _ in range(3))
        ab = ueb_distance(mu, nu, d, window)
        if ab != ueb_distance(nu, mu, d, window):
            failure = f"instance {i}: not symmetric"
        elif ab > ueb_distance(mu, rho, d, window) + ueb_distance(rho, nu, d, window):
            failure = f"instance {i}: triangle inequality"
        elif ab > norm(linear_combine(1, mu, -1, nu)):
            failure = f"instance {i}: exceeds the norm of the difference"
        if failure:
            break
    return _result("ueb", failure, f"{instances} triples, discrete and |x - y|/2 metrics")


def suite_equicontinuity(rng: random.Random, sample_size: int = 20) -> CheckResult:
    """Right translations of B_{1/2} contract by at most 1/2; finite carriers under
    the discrete metric record no zero-distance violations.
    """
    ball = RationalBall(Fraction(1, 2))
    report = equicontinuity_report(ball, Pseudometric.absolute(), ball_sample(ball, sample_size))
    failure = None
    if report.right_family_constant > Fraction(1, 2):
        failure = f"ball-1/2 constant {format_rational(report.right_family_constant)} > 1/2"
    else:
        for s in (CayleyTable.cyclic(6), LeftZero(4), RightZero(4)):
            table = equicontinuity_report(s, Pseudometric.discrete(), enumerate_window(s, s.size))
            if not table.zero_distance_ok or table.left_zero_distance_violations:
                failure = f"{s.name} has zero-distance violations"
                break
    return _result(
        "equicontinuity",
        failure,
        f"ball-1/2 right constant {format_rational(report.right_family_constant)} <= 1/2",
    )


SUITES: dict[str, Callable[[random.Random], CheckResult]] = {
    "associativity": suite_associativity,
    "bilinearity": suite_bilinearity,
    "norm": suite_norm,
    "positivity": suite_positivity,
    "commutativity": suite_commutativity,
    "phi": suite_phi,
    "ueb": suite_ueb,
    "equicontinuity": suite_equicontinuity,
}


def run_suites(seed: int = DEFAULT_SEED, names: Sequence[str] | None = None) -> Report:
    """Run the named suites (all by default) in registry order.

    Raises:
        KeyError: If a name is not a known suite.
    """
    selected = list(SUITES) if not names else [n for n in SUITES if n in names]
    unknown = set(names or ()) - set(SUITES)
    if unknown:
        raise KeyError(", ".join(sorted(unknown)))
    report = Report()
    for name in selected:
        logger.info("running suite %s with seed %d", name, seed)
        report.results.append(SUITES[name](random.Random(f"{seed}:{name}")))
    return report
