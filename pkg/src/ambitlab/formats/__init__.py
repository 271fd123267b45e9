"""JSON documents for semigroups, metrics, functions, measures and witnesses."""

from .loaders import (
    handle_from_document,
    handle_to_document,
    load_measure,
    load_pseudometric,
    load_semigroup,
    load_window_function,
    load_witness,
    measure_json,
    measure_to_document,
    resolve_semigroup,
    witness_to_document,
    write_measure,
    write_semigroup,
    write_witness,
)

__all__ = [
    "handle_from_document",
    "handle_to_document",
    "load_measure",
    "load_pseudometric",
    "load_semigroup",
    "load_window_function",
    "load_witness",
    "measure_json",
    "measure_to_document",
    "resolve_semigroup",
    "witness_to_document",
    "write_measure",
    "write_semigroup",
    "write_witness",
]
