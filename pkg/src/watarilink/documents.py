"""Low-level helpers for the canonical JSON document forms."""

from __future__ import annotations

import json
from typing import Any, List, Sequence, Tuple

from .errors import ParseError

Cell = Tuple[int, int]


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("MALFORMED_JSON", exc.msg,
                         location=f"line {exc.lineno} column {exc.colno}")


def dumps_canonical(obj: Any) -> str:
    """The canonical byte form: compact separators, insertion key order."""
    return json.dumps(obj, separators=(",", ":")) + "\n"


def require_object(value: Any, location: str) -> dict:
    if not isinstance(value, dict):
        raise ParseError("NOT_AN_OBJECT", "expected a JSON object", location)
    return value


def check_fields(obj: dict, required: Sequence[str], optional: Sequence[str],
                 location: str) -> None:
    for key in required:
        if key not in obj:
            raise ParseError("MISSING_FIELD", f"missing field {key!r}",
                             location)
    allowed = set(required) | set(optional)
    for key in obj:
        if key not in allowed:
            raise ParseError("UNKNOWN_FIELD", f"unknown field {key!r}",
                             location)


def as_int(value: Any, location: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError("NOT_AN_INTEGER", f"expected an integer, got "
                         f"{value!r}", location)
    return value


def as_cell(value: Any, location: str) -> Cell:
    if (not isinstance(value, list) or len(value) != 2):
        raise ParseError("NOT_A_CELL", f"expected [x, y], got {value!r}",
                         location)
    return (as_int(value[0], location + "[0]"),
            as_int(value[1], location + "[1]"))


def as_cells(value: Any, location: str) -> List[Cell]:
    if not isinstance(value, list):
        raise ParseError("NOT_A_LIST", "expected a list of cells", location)
    return [as_cell(v, f"{location}[{i}]") for i, v in enumerate(value)]


def as_list(value: Any, location: str) -> list:
    if not isinstance(value, list):
        raise ParseError("NOT_A_LIST", "expected a list", location)
    return value
