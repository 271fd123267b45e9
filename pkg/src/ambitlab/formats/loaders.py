"""
Reading and writing ambitlab documents.

Loaders turn JSON files into validated domain objects: syntax errors carry the
line and column, schema errors the field path, and construction-time checks
(associativity, pseudometric axioms) surface as InvariantError. Writers emit
canonical JSON (fixed key order, canonical element order, two-space indent,
trailing newline), so equal objects always produce identical bytes.
"""

from __future__ import annotations

import json
import logging
from collections.abc import Iterable
from pathlib import Path
from typing import Any

from pydantic import BaseModel, TypeAdapter, ValidationError

from ..errors import AmbitlabError, InvariantError, ParseError
from ..measures.molecular import MolecularMeasure
from ..orbits.ambit import AmbitWitness
from ..orbits.neighborhoods import BasicNeighborhood
from ..semigroups.handles import (
    CayleyTable,
    FreeWords,
    LeftZero,
    NatPlus,
    NatTimes,
    RationalBall,
    RightZero,
    SemigroupHandle,
    Window,
    from_builtin,
)
from ..types import Element
from ..uniform.functions import (
    Pseudometric,
    WindowFunction,
    validate_pseudometric,
)
from .documents import (
    AbsoluteMetricDocument,
    BallDocument,
    CayleyDocument,
    DiscreteMetricDocument,
    FreeDocument,
    MeasureDocument,
    NaturalsDocument,
    NeighborhoodDocument,
    PseudometricDocument,
    SemigroupDocument,
    WindowFunctionDocument,
    WitnessDocument,
    ZeroDocument,
)

logger = logging.getLogger(__name__)

_SEMIGROUP = TypeAdapter(SemigroupDocument)
_PSEUDOMETRIC = TypeAdapter(PseudometricDocument)


# ============================================================================
# PARSING HELPERS
# ============================================================================


def _read_json(path: Path) -> Any:
    text = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, source=str(path), location=f"{e.lineno}:{e.colno}") from e


def _validate(schema: TypeAdapter | type[BaseModel], data: Any, source: str | None):
    try:
        if isinstance(schema, TypeAdapter):
            return schema.validate_python(data)
        return schema.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or None
        raise ParseError(first["msg"], source=source, location=location) from e


def _elements(
    s: SemigroupHandle, tokens: Iterable[Any], source: str | None, where: str
) -> list[Element]:
    out = []
    for i, token in enumerate(tokens):
        try:
            out.append(s.parse_element(token))
        except AmbitlabError as e:
            raise ParseError(str(e), source=source, location=f"{where}.{i}") from e
    return out


def _dump(model: BaseModel, **kwargs) -> str:
    data = model.model_dump(mode="json", **kwargs)
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


# ============================================================================
# SEMIGROUPS
# ============================================================================


def handle_from_document(doc: SemigroupDocument) -> SemigroupHandle:
    """Build a handle; Cayley tables are checked for associativity here."""
    if isinstance(doc, CayleyDocument):
        return CayleyTable.from_rows(doc.table, doc.elements)
    if isinstance(doc, FreeDocument):
        return FreeWords(tuple(doc.generators))
    if isinstance(doc, NaturalsDocument):
        return NatPlus() if doc.kind == "nat-plus" else NatTimes()
    if isinstance(doc, ZeroDocument):
        return LeftZero(doc.size) if doc.kind == "left-zero" else RightZero(doc.size)
    return RationalBall(doc.radius, doc.closed)


def handle_to_document(s: SemigroupHandle) -> SemigroupDocument:
    if isinstance(s, CayleyTable):
        return CayleyDocument(elements=list(s.labels), table=[list(row) for row in s.table])
    if isinstance(s, FreeWords):
        return FreeDocument(generators=list(s.generators))
    if isinstance(s, (NatPlus, NatTimes)):
        return NaturalsDocument(kind=s.kind.value)
    if isinstance(s, (LeftZero, RightZero)):
        return ZeroDocument(kind=s.kind.value, size=s.size)
    if isinstance(s, RationalBall):
        return BallDocument(radius=s.radius, closed=s.closed)
    raise TypeError(f"no document form for {type(s).__name__}")


def load_semigroup(path: Path | str) -> SemigroupHandle:
    """Read a semigroup file.

    Raises:
        ParseError: Malformed JSON or an unknown/ill-typed field.
        InvariantError: The Cayley table is not associative.
    """
    source = str(path)
    doc = _validate(_SEMIGROUP, _read_json(Path(path)), source)
    try:
        return handle_from_document(doc)
    except InvariantError:
        raise
    except AmbitlabError as e:
        raise ParseError(str(e), source=source) from e


def resolve_semigroup(name_or_path: str, base_dir: Path | None = None) -> SemigroupHandle:
    """A builtin name, or else a semigroup file (relative paths against ``base_dir``)."""
    try:
        return from_builtin(name_or_path)
    except KeyError:
        pass
    path = Path(name_or_path).expanduser()
    if not path.is_absolute() and base_dir is not None:
        path = base_dir / path
    if not path.exists():
        raise ParseError(f"{name_or_path!r} is neither a builtin semigroup nor a file")
    return load_semigroup(path)


def write_semigroup(path: Path | str, s: SemigroupHandle) -> Path:
    path = Path(path)
    path.write_text(_dump(handle_to_document(s)), encoding="utf-8")  # type: ignore[arg-type]
    return path


# ============================================================================
# PSEUDOMETRICS AND WINDOW FUNCTIONS
# ============================================================================


def load_pseudometric(path: Path | str, s: SemigroupHandle) -> Pseudometric:
    """Read a pseudometric file; table metrics must satisfy the axioms on their window.

    Raises:
        ParseError: Malformed JSON, bad field, or a window element foreign to ``s``.
        InvariantError: The matrix breaks an axiom (named with its points).
    """
    source = str(path)
    doc = _validate(_PSEUDOMETRIC, _read_json(Path(path)), source)
    if isinstance(doc, DiscreteMetricDocument):
        return Pseudometric.discrete()
    if isinstance(doc, AbsoluteMetricDocument):
        return Pseudometric.absolute()
    window = Window(tuple(_elements(s, doc.window, source, "window")))
    try:
        d = Pseudometric.table(window, doc.matrix)
    except AmbitlabError as e:
        raise ParseError(str(e), source=source, location="matrix") from e
    verdict = validate_pseudometric(d)
    if not verdict.ok:
        v = verdict.violation
        assert v is not None
        points = ", ".join(s.format_element(x) for x in v.points)
        raise InvariantError("pseudometric", f"{v.rule} fails at ({points})")
    return d


def _function_from_document(
    doc: WindowFunctionDocument, s: SemigroupHandle, source: str | None, where: str
) -> WindowFunction:
    keys = list(doc.values)
    values = dict(zip(_elements(s, keys, source, f"{where}values"), doc.values.values()))
    if doc.window is None:
        window = Window(tuple(values))
    else:
        window = Window(tuple(_elements(s, doc.window, source, f"{where}window")))
    try:
        return WindowFunction(window, values, doc.default)
    except AmbitlabError as e:
        raise ParseError(str(e), source=source, location=f"{where}values") from e


def _function_to_document(f: WindowFunction, s: SemigroupHandle) -> WindowFunctionDocument:
    return WindowFunctionDocument(
        values={s.format_element(x): f.values[x] for x in f.window if x in f.values},
        default=f.default,
    )


def load_window_function(path: Path | str, s: SemigroupHandle) -> WindowFunction:
    source = str(path)
    doc = _validate(WindowFunctionDocument, _read_json(Path(path)), source)
    return _function_from_document(doc, s, source, "")


# ============================================================================
# MEASURES
# ============================================================================


def load_measure(path: Path | str, s: SemigroupHandle | None = None) -> MolecularMeasure:
    """Read a measure file, coalescing repeated support elements with a warning.

    ``s`` overrides the file's own ``semigroup`` entry.

    Raises:
        ParseError: Malformed JSON, bad field, foreign element, or no semigroup at all.
    """
    path = Path(path)
    source = str(path)
    doc = _validate(MeasureDocument, _read_json(path), source)
    if s is None:
        if doc.semigroup is None:
            raise ParseError("no semigroup given", source=source, location="semigroup")
        if isinstance(doc.semigroup, str):
            s = resolve_semigroup(doc.semigroup, base_dir=path.parent)
        else:
            s = handle_from_document(doc.semigroup)

    elements = _elements(s, (token for token, _ in doc.terms), source, "terms")
    if len(set(elements)) != len(elements):
        logger.warning(
            "%s: coalesced %d duplicate support entries",
            source,
            len(elements) - len(set(elements)),
        )
    return MolecularMeasure.from_terms(s, zip(elements, (c for _, c in doc.terms)))


def measure_to_document(mu: MolecularMeasure) -> MeasureDocument:
    s = mu.handle
    return MeasureDocument(
        semigroup=handle_to_document(s),
        terms=[(s.format_element(x), c) for x, c in mu.terms],
    )


def measure_json(mu: MolecularMeasure) -> str:
    """Canonical text of a measure file."""
    return _dump(measure_to_document(mu))


def write_measure(path: Path | str, mu: MolecularMeasure) -> Path:
    path = Path(path)
    path.write_text(measure_json(mu), encoding="utf-8")
    return path


# ============================================================================
# WITNESSES
# ============================================================================


def _neighborhood_from_document(
    doc: NeighborhoodDocument, s: SemigroupHandle, source: str, where: str
) -> BasicNeighborhood:
    F = Window(tuple(_elements(s, doc.F, source, f"{where}.F")))
    h_values = dict(zip(_elements(s, list(doc.h), source, f"{where}.h"), doc.h.values()))
    try:
        return BasicNeighborhood(F, WindowFunction(F, h_values, default=None), doc.eps)
    except AmbitlabError as e:
        raise ParseError(str(e), source=source, location=where) from e


def load_witness(path: Path | str, s: SemigroupHandle | None = None) -> AmbitWitness:
    """Read a witness; the embedded semigroup is used unless ``s`` is given.

    The witness is not checked here; that is what ``verify_ambit`` is for.
    """
    source = str(path)
    doc = _validate(WitnessDocument, _read_json(Path(path)), source)
    if s is None:
        if doc.semigroup is None:
            raise ParseError(
                "witness has no embedded semigroup; pass one", source=source, location="semigroup"
            )
        s = handle_from_document(doc.semigroup)
    neighborhoods = tuple(
        _neighborhood_from_document(n, s, source, f"neighborhoods.{i}")
        for i, n in enumerate(doc.neighborhoods)
    )
    selections = tuple(_elements(s, doc.selections, source, "selections"))
    f = _function_from_document(doc.f, s, source, "f.")
    return AmbitWitness(s, neighborhoods, selections, f)


def witness_to_document(w: AmbitWitness) -> WitnessDocument:
    s = w.handle
    return WitnessDocument(
        semigroup=handle_to_document(s),
        neighborhoods=[
            NeighborhoodDocument(
                F=[s.element_json(x) for x in U.F],
                h={s.format_element(x): U.h(x) for x in U.F},
                eps=U.epsilon,
            )
            for U in w.neighborhoods
        ],
        selections=[s.element_json(x) for x in w.selections],
        f=_function_to_document(w.f, s),
    )


def write_witness(path: Path | str, w: AmbitWitness) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(_dump(witness_to_document(w), exclude={"f": {"window"}}), encoding="utf-8")
    return path

