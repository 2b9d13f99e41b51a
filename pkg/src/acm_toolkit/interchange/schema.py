"""Envelope schema and per-kind element decoding.

An envelope is ``{"format_version", "notation", "elements"}`` where every
element record carries its ``kind`` next to the dataclass fields of that kind.
Records are validated with a pydantic ``TypeAdapter`` built once per kind.
"""

import json
from functools import cache
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, TypeAdapter, ValidationError

from ..core.exceptions import AcmError, ParseError, SchemaError
from ..core.types import Notation
from ..model import ELEMENT_KINDS
from ..model.base import Element
from ..model.document import FORMAT_VERSION


class Envelope(BaseModel):
    """Top level of an ``.acm.json`` document."""

    model_config = ConfigDict(extra="forbid")

    format_version: Literal["1.0"] = FORMAT_VERSION
    notation: Notation = Notation.SACM
    elements: list[dict[str, Any]] = []


def parse_json(data: bytes | str) -> Any:
    """Decode UTF-8 JSON; ParseError carries the line and column of the fault."""
    try:
        text = data.decode("utf-8") if isinstance(data, bytes) else data
    except UnicodeDecodeError as exc:
        raise ParseError(f"Input is not UTF-8: {exc.reason}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc


def json_path(prefix: str, loc: tuple[int | str, ...]) -> str:
    """``$.elements[3].name.lang`` style path for a pydantic error location."""
    path = prefix
    for part in loc:
        path += f"[{part}]" if isinstance(part, int) else f".{part}"
    return path


def schema_error(exc: ValidationError, prefix: str = "$") -> SchemaError:
    """SchemaError for the first error pydantic reports."""
    first = exc.errors()[0]
    return SchemaError(json_path(prefix, tuple(first["loc"])), first["msg"])


@cache
def element_adapter(kind: str) -> TypeAdapter[Element]:
    return TypeAdapter(ELEMENT_KINDS[kind])


def decode_envelope(data: Any) -> Envelope:
    if not isinstance(data, dict):
        raise SchemaError("$", "envelope must be a JSON object")
    try:
        return Envelope.model_validate(data)
    except ValidationError as exc:
        raise schema_error(exc) from exc


def decode_element(record: dict[str, Any], index: int, notation: Notation) -> Element:
    """Validate one element record against the dataclass of its kind."""
    prefix = f"$.elements[{index}]"
    fields = dict(record)
    kind = fields.pop("kind", None)
    if not isinstance(kind, str):
        raise SchemaError(f"{prefix}.kind", "missing element kind")
    cls = ELEMENT_KINDS.get(kind)
    if cls is None:
        raise SchemaError(f"{prefix}.kind", f"unknown kind {kind!r}")
    if cls.notation is not None and cls.notation != notation:
        raise SchemaError(f"{prefix}.kind", f"kind {kind} is not valid in a {notation} document")
    if not isinstance(fields.get("gid"), str) or not fields["gid"]:
        raise SchemaError(f"{prefix}.gid", "missing gid")
    try:
        return element_adapter(kind).validate_python(fields)
    except ValidationError as exc:
        raise schema_error(exc, prefix) from exc
    except AcmError as exc:
        raise SchemaError(prefix, str(exc)) from exc
