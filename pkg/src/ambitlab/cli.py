"""
Command-line interface for ambitlab.

Every command prints a line-oriented report (``CHECK <name> <STATUS> <detail>``)
to stdout and exits 0 when nothing failed, 1 when a check failed, and 2 when
the inputs could not be used at all.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Iterable
from pathlib import Path

from pydantic import BaseModel, ConfigDict, PositiveInt, ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape

from .config import (
    BUILTIN_NAMES,
    DEFAULT_BUDGET,
    DEFAULT_COUNT,
    DEFAULT_GRID,
    DEFAULT_MAX_WINDOW,
    DEFAULT_SEED,
    DEFAULT_WINDOW,
    WITNESS_DIR,
    ensure_directories,
)
from .errors import AmbitlabError, BudgetExhausted
from .formats.loaders import (
    load_measure,
    load_pseudometric,
    load_window_function,
    load_witness,
    measure_json,
    resolve_semigroup,
    write_measure,
    write_witness,
)
from .measures.molecular import MolecularMeasure, convolve, is_positive, linear_combine, norm
from .measures.ueb import ueb_distance
from .orbits.ambit import build_ambit_function, greedy_select, verify_ambit
from .orbits.neighborhoods import EpsilonSchedule, WindowGrowth, enumerate_neighborhoods
from .orbits.translation import orbit_trace
from .props.suites import SUITES, run_suites
from .reports import Report
from .semigroups.handles import (
    CayleyTable,
    SemigroupHandle,
    Window,
    check_associativity,
    enumerate_window,
)
from .semigroups.properties import (
    check_property_1,
    check_property_2,
    check_property_2a,
    growing_schedule,
    table_profile,
)
from .types import Element
from .uniform.functions import MetricKind, Pseudometric
from .utils import format_rational, get_version, sanitize_filename

# Reports go to stdout verbatim; diagnostics and logs go to stderr.
console = Console(highlight=False, markup=False, emoji=False, soft_wrap=True)
err_console = Console(stderr=True)

logger = logging.getLogger(__name__)

COMMANDS = {
    "check-semigroup": "Associativity and property (1)/(2) evidence on a window",
    "convolve": "Convolve two measure files",
    "norm": "Norm and positivity of a measure file",
    "ueb-distance": "Exact UEB distance between two measure files",
    "orbit-trace": "Distinct restrictions of right translates of a function",
    "ambit build": "Enumerate neighbourhoods, select translates, build and verify a witness",
    "ambit verify": "Re-verify a witness file",
    "props test": "Run the seeded property suites",
    "config": "Show or change persistent settings",
}


class CommandConfig(BaseModel):
    """Validated options for one invocation."""

    model_config = ConfigDict(extra="forbid")

    command: str
    semigroup: str | None = None
    inputs: list[Path] = []
    window: PositiveInt = DEFAULT_WINDOW
    count: PositiveInt = DEFAULT_COUNT
    grid: PositiveInt = DEFAULT_GRID
    budget: PositiveInt = DEFAULT_BUDGET
    max_window: PositiveInt = DEFAULT_MAX_WINDOW
    seed: PositiveInt = DEFAULT_SEED
    probe: PositiveInt = 2
    metric: str | None = None
    function: Path | None = None
    epsilon: EpsilonSchedule = EpsilonSchedule.GEOMETRIC
    growth: WindowGrowth = WindowGrowth.DOVETAIL
    suites: list[str] = []
    out: Path | None = None
    verbose: bool = False


# ============================================================================
# ENTRY POINT
# ============================================================================


def main(argv: list[str] | None = None) -> int:
    """Main entry point for the ambitlab CLI."""
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] in ("-h", "--help"):
        show_usage()
        return 0
    if argv[0] in ("-V", "--version"):
        console.print(f"ambitlab {get_version()}")
        return 0

    command, rest = argv[0], argv[1:]
    if command == "config":
        from .commands.config import handle_config

        return handle_config(rest)
    if command in ("ambit", "props"):
        if not rest:
            err_console.print(f"[red]error:[/red] '{command}' needs a subcommand")
            return 2
        command, rest = f"{command}-{rest[0]}", rest[1:]

    handler = _HANDLERS.get(command)
    if handler is None:
        err_console.print(f"[red]error:[/red] unknown command {command!r}")
        show_usage()
        return 2
    try:
        config = handler(rest)
    except ValidationError as e:
        first = e.errors()[0]
        err_console.print(f"[red]error:[/red] --{first['loc'][0]}: {first['msg']}")
        return 2
    code, text = run(config)
    console.print(text, end="")
    return code


def show_usage() -> None:
    err_console.print(f"[bold]ambitlab[/bold] {get_version()}\n")
    for name, summary in COMMANDS.items():
        err_console.print(f"  [cyan]{name:<16}[/cyan] {summary}")
    err_console.print("\n[dim]Builtin semigroups:[/dim]")
    for name, summary in BUILTIN_NAMES.items():
        err_console.print(f"  [cyan]{name:<16}[/cyan] {summary}")


def configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=err_console, show_time=False, show_path=False)],
        force=True,
    )


# ============================================================================
# ARGUMENT PARSING
# ============================================================================


def _parser(prog: str, description: str) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog=f"ambitlab {prog}", description=description)
    p.add_argument("--verbose", action="store_true", help="Log progress to stderr")
    return p


def _semigroup_arg(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument(
        "--semigroup",
        required=required,
        metavar="FILE|NAME",
        help="Semigroup file or builtin name (free2, nat-plus, left-zero:5, ...)",
    )


def _to_config(command: str, args: argparse.Namespace) -> CommandConfig:
    values = {k: v for k, v in vars(args).items() if v is not None}
    return CommandConfig(command=command, **values)


def _check_semigroup_args(argv: list[str]) -> CommandConfig:
    p = _parser("check-semigroup", COMMANDS["check-semigroup"])
    _semigroup_arg(p)
    p.add_argument("--window", type=int, help=f"Elements scanned (default: {DEFAULT_WINDOW})")
    return _to_config("check-semigroup", p.parse_args(argv))


def _convolve_args(argv: list[str]) -> CommandConfig:
    p = _parser("convolve", COMMANDS["convolve"])
    p.add_argument("inputs", nargs=2, type=Path, metavar="MEASURE")
    _semigroup_arg(p, required=False)
    p.add_argument("--out", type=Path, help="Write the product here (default: stdout)")
    return _to_config("convolve", p.parse_args(argv))


def _norm_args(argv: list[str]) -> CommandConfig:
    p = _parser("norm", COMMANDS["norm"])
    p.add_argument("inputs", nargs=1, type=Path, metavar="MEASURE")
    _semigroup_arg(p, required=False)
    return _to_config("norm", p.parse_args(argv))


def _ueb_args(argv: list[str]) -> CommandConfig:
    p = _parser("ueb-distance", COMMANDS["ueb-distance"])
    p.add_argument("inputs", nargs=2, type=Path, metavar="MEASURE")
    _semigroup_arg(p, required=False)
    p.add_argument("--metric", help="Pseudometric file, or 'discrete' (default)")
    p.add_argument("--window", type=int, help="Prefix window for non-table metrics")
    return _to_config("ueb-distance", p.parse_args(argv))


def _orbit_trace_args(argv: list[str]) -> CommandConfig:
    p = _parser("orbit-trace", COMMANDS["orbit-trace"])
    _semigroup_arg(p)
    p.add_argument("--function", type=Path, required=True, help="Window function file")
    p.add_argument("--probe", type=int, help="Size of the probe prefix F (default: 2)")
    p.add_argument("--window", type=int, help="Translates scanned")
    return _to_config("orbit-trace", p.parse_args(argv))


def _ambit_build_args(argv: list[str]) -> CommandConfig:
    p = _parser("ambit build", COMMANDS["ambit build"])
    _semigroup_arg(p)
    p.add_argument("--count", type=int, help=f"Neighbourhoods (default: {DEFAULT_COUNT})")
    p.add_argument("--grid", type=int, help=f"Grid denominator m (default: {DEFAULT_GRID})")
    p.add_argument("--budget", type=int, help="Candidates scanned per greedy step")
    p.add_argument("--max-window", type=int, help="Largest prefix used as F")
    p.add_argument("--epsilon", choices=[e.value for e in EpsilonSchedule])
    p.add_argument("--growth", choices=[g.value for g in WindowGrowth])
    p.add_argument("--out", type=Path, help="Witness path (default: under the witness dir)")
    return _to_config("ambit-build", p.parse_args(argv))


def _ambit_verify_args(argv: list[str]) -> CommandConfig:
    p = _parser("ambit verify", COMMANDS["ambit verify"])
    p.add_argument("inputs", nargs=1, type=Path, metavar="WITNESS")
    _semigroup_arg(p, required=False)
    return _to_config("ambit-verify", p.parse_args(argv))


def _props_test_args(argv: list[str]) -> CommandConfig:
    p = _parser("props test", COMMANDS["props test"])
    p.add_argument("--seed", type=int, help=f"Generator seed (default: {DEFAULT_SEED})")
    p.add_argument(
        "--suite",
        dest="suites",
        action="append",
        choices=list(SUITES),
        help="Run only this suite (repeatable)",
    )
    return _to_config("props-test", p.parse_args(argv))


_HANDLERS = {
    "check-semigroup": _check_semigroup_args,
    "convolve": _convolve_args,
    "norm": _norm_args,
    "ueb-distance": _ueb_args,
    "orbit-trace": _orbit_trace_args,
    "ambit-build": _ambit_build_args,
    "ambit-verify": _ambit_verify_args,
    "props-test": _props_test_args,
}


# ============================================================================
# RUNNING
# ============================================================================


def run(config: CommandConfig) -> tuple[int, str]:
    """Execute one command; returns the exit code and the report text.

    Input errors are printed to stderr and give exit code 2 with no report.
    """
    configure_logging(config.verbose)
    runner = _RUNNERS[config.command]
    logger.debug("running %s", config.command)
    try:
        report = runner(config)
    except (AmbitlabError, OSError) as e:
        err_console.print(f"[red]error:[/red] {escape(str(e))}", highlight=False)
        return 2, ""
    if isinstance(report, str):
        return 0, report
    return report.exit_code, report.render()


def _elements_text(s: SemigroupHandle, elements: Iterable[Element]) -> str:
    return "{" + ", ".join(s.format_element(x) for x in elements) + "}"


def _sizes_text(sizes: Iterable[int]) -> str:
    return ", ".join(str(n) for n in sizes)


def _handle(config: CommandConfig) -> SemigroupHandle | None:
    return resolve_semigroup(config.semigroup) if config.semigroup else None


def _run_check_semigroup(config: CommandConfig) -> Report:
    s = _handle(config)
    assert s is not None
    report = Report()
    if isinstance(s, CayleyTable):
        verdict = check_associativity(s.table)
        report.add("associativity", verdict.ok, f"all {s.size ** 3} triples")
        profile = table_profile(s)
        report.info(
            "table-profile",
            f"left cancellative {str(profile.left_cancellative).lower()}, "
            f"right cancellative {str(profile.right_cancellative).lower()}, "
            f"identity {profile.identity if profile.identity is not None else 'none'}, "
            f"group {str(profile.is_group).lower()}",
        )
    else:
        report.info("associativity", f"holds by the defining law of {s.name}")

    k = config.window if s.size is None else min(config.window, s.size)
    window = enumerate_window(s, k)
    F = Window(window.elements[: min(2, k)])
    p1 = check_property_1(s, F, window)
    if p1.count:
        report.add(
            "property-1",
            True,
            f"property (1) holds on window: {p1.count} of {p1.searched} elements separate "
            f"F = {_elements_text(s, F)}",
        )
    else:
        report.add(
            "property-1",
            False,
            f"property (1) fails on window: no element of {p1.searched} separates "
            f"F = {_elements_text(s, F)}; qualifying set {{}}",
        )
    if p1.verdict is not None:
        state = "holds" if p1.verdict.holds else "fails"
        report.info("property-1-closed-form", f"{state}: {p1.verdict.reason}")

    x = window[0]
    P = [x]
    if s.size is not None and len(P) >= s.size:
        report.info(
            "property-2",
            f"precondition card P < card X not met (card P = {len(P)}, card X = {s.size})",
        )
    else:
        p2 = check_property_2(s, x, P, growing_schedule(window))
        sizes = _sizes_text(p2.sizes)
        if p2.fills_every_window:
            report.add(
                "property-2",
                False,
                f"property (2) fails on window: {{{s.format_element(x)}}}^-1 "
                f"{_elements_text(s, P)} fills every window (sizes {sizes})",
            )
        else:
            report.add(
                "property-2",
                True,
                f"property (2) holds on window: |{{{s.format_element(x)}}}^-1 "
                f"{_elements_text(s, P)}| by window = {sizes}",
            )
        if p2.verdict is not None:
            state = "holds" if p2.verdict.holds else "fails"
            report.info("property-2-closed-form", f"{state}: {p2.verdict.reason}")

    p2a = check_property_2a(s, F, P, window)
    report.info("property-2a", f"|F^-1 P| = {p2a.union_size} <= {p2a.bound} on window")
    return report


def _measures(config: CommandConfig) -> list[MolecularMeasure]:
    s = _handle(config)
    return [load_measure(path, s) for path in config.inputs]


def _run_convolve(config: CommandConfig) -> Report | str:
    mu, nu = _measures(config)
    product = convolve(mu, nu)
    if config.out is None:
        return measure_json(product)
    write_measure(config.out, product)
    report = Report()
    report.info("convolve", f"wrote {len(product)} terms to {config.out}")
    reread = load_measure(config.out)
    report.add("round-trip", reread == product, "re-parsed output equals the product")
    return report


def _run_norm(config: CommandConfig) -> Report:
    (mu,) = _measures(config)
    report = Report()
    report.info("norm", format_rational(norm(mu)))
    report.info("positive", str(is_positive(mu)).lower())
    return report


def _metric(config: CommandConfig, s: SemigroupHandle) -> Pseudometric:
    if config.metric in (None, "discrete"):
        return Pseudometric.discrete()
    if config.metric == "absolute":
        return Pseudometric.absolute()
    return load_pseudometric(config.metric, s)


def _run_ueb(config: CommandConfig) -> Report:
    mu, nu = _measures(config)
    d = _metric(config, mu.handle)
    if d.kind == MetricKind.TABLE:
        window = d.window
    else:
        s = mu.handle
        k = config.window if s.size is None else min(config.window, s.size)
        prefix = enumerate_window(s, k)
        window = Window(tuple(dict.fromkeys([*prefix, *mu.support, *nu.support])))
    assert window is not None
    distance = ueb_distance(mu, nu, d, window)
    bound = norm(linear_combine(1, mu, -1, nu))
    report = Report()
    report.info("ueb-distance", format_rational(distance))
    report.add(
        "norm-bound",
        distance <= bound,
        f"{format_rational(distance)} <= {format_rational(bound)} = norm(mu - nu)",
    )
    return report


def _run_orbit_trace(config: CommandConfig) -> Report:
    s = _handle(config)
    assert s is not None and config.function is not None
    f = load_window_function(config.function, s)
    F = enumerate_window(s, config.probe)
    search = enumerate_window(s, config.window if s.size is None else min(config.window, s.size))
    trace = orbit_trace(s, f, F, search)
    report = Report()
    report.info(
        "orbit-trace",
        f"{len(trace)} distinct vectors on F = {_elements_text(s, F)} "
        f"over {len(search)} translates",
    )
    for vector in trace.vectors:
        values = ", ".join(format_rational(v) for v in vector)
        first = s.format_element(trace.witnesses[vector])
        report.info("vector", f"({values}) first at x = {first}")
    return report


def _witness_path(config: CommandConfig, s: SemigroupHandle) -> Path:
    if config.out is not None:
        return config.out
    ensure_directories()
    slug = sanitize_filename(f"{s.name}-n{config.count}-m{config.grid}-{config.epsilon.value}")
    return WITNESS_DIR / f"{slug}.json"


def _run_ambit_build(config: CommandConfig) -> Report:
    s = _handle(config)
    assert s is not None
    report = Report()
    neighborhoods = enumerate_neighborhoods(
        s,
        config.count,
        max_window=config.max_window,
        grid_denominator=config.grid,
        epsilon_schedule=config.epsilon,
        growth=config.growth,
    )
    report.info("neighborhoods", f"{len(neighborhoods)} enumerated on {s.name}")
    try:
        selections = greedy_select(s, neighborhoods, config.budget)
    except BudgetExhausted as e:
        report.add("greedy", False, str(e))
        return report
    report.add("greedy", True, f"{len(selections)} selections within {config.budget} candidates")
    witness = build_ambit_function(s, neighborhoods, selections)
    report.extend(verify_ambit(s, witness))
    path = write_witness(_witness_path(config, s), witness)
    report.info("witness", f"wrote {path}")
    return report


def _run_ambit_verify(config: CommandConfig) -> Report:
    witness = load_witness(config.inputs[0], _handle(config))
    return verify_ambit(witness.handle, witness)


def _run_props_test(config: CommandConfig) -> Report:
    return run_suites(config.seed, config.suites or None)


_RUNNERS = {
    "check-semigroup": _run_check_semigroup,
    "convolve": _run_convolve,
    "norm": _run_norm,
    "ueb-distance": _run_ueb,
    "orbit-trace": _run_orbit_trace,
    "ambit-build": _run_ambit_build,
    "ambit-verify": _run_ambit_verify,
    "props-test": _run_props_test,
}


if __name__ == "__main__":
    sys.exit(main())
