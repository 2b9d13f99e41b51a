"""Binding tables: values for roles and choices for decorated connectors.

JSON form::

    {"roles": {"System X": ["Trainset 7"]},
     "connectors": {"<gid>": {"count": 2} | {"chosen": false} | {"subset": ["<gid>", ...]}}}

A role value may be a single string; it is read as a one-element list.
"""

from collections.abc import Mapping, Sequence
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..core.exceptions import SchemaError
from ..interchange.codec import dumps
from ..interchange.schema import parse_json, schema_error


class RoleBinding(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    role: str = Field(min_length=1)
    values: list[str] = Field(min_length=1)


class ConnectorBinding(BaseModel):
    """Many count, Optional flag or Choice subset.

    A connector with several decorators may set several.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    count: int | None = Field(default=None, ge=0)
    chosen: bool | None = None
    subset: list[str] | None = None

    @model_validator(mode="after")
    def _something_chosen(self) -> "ConnectorBinding":
        if self.count is None and self.chosen is None and self.subset is None:
            raise ValueError("give count, chosen or subset")
        return self

    def to_json(self) -> dict[str, Any]:
        return self.model_dump(exclude_none=True)


class BindingTable(BaseModel):
    model_config = ConfigDict(extra="forbid")

    entries: list[RoleBinding] = []
    connectors: dict[str, ConnectorBinding] = {}

    @model_validator(mode="after")
    def _unique_roles(self) -> "BindingTable":
        seen: set[str] = set()
        for entry in self.entries:
            if entry.role in seen:
                raise ValueError(f"role {entry.role!r} bound twice")
            seen.add(entry.role)
        return self

    @property
    def roles(self) -> set[str]:
        return {entry.role for entry in self.entries}

    def values(self, role: str) -> list[str] | None:
        for entry in self.entries:
            if entry.role == role:
                return entry.values
        return None

    @classmethod
    def of(
        cls,
        roles: Mapping[str, str | Sequence[str]],
        connectors: Mapping[str, Mapping[str, Any]] | None = None,
    ) -> "BindingTable":
        entries = [
            {"role": role, "values": [values] if isinstance(values, str) else list(values)}
            for role, values in roles.items()
        ]
        return cls.model_validate({"entries": entries, "connectors": dict(connectors or {})})

    @classmethod
    def from_json(cls, data: bytes | str) -> "BindingTable":
        """Parse the JSON form; ParseError and SchemaError as for envelopes."""
        raw = parse_json(data)
        if not isinstance(raw, dict):
            raise SchemaError("$", "binding table must be a JSON object")
        unknown = sorted(set(raw) - {"roles", "connectors"})
        if unknown:
            raise SchemaError(f"$.{unknown[0]}", "unexpected key")
        roles = raw.get("roles", {})
        if not isinstance(roles, dict):
            raise SchemaError("$.roles", "roles must be an object")
        for role, values in roles.items():
            if not isinstance(values, (str, list)):
                raise SchemaError(f"$.roles.{role}", "expected a string or a list")
        connectors = raw.get("connectors", {})
        if not isinstance(connectors, dict):
            raise SchemaError("$.connectors", "connectors must be an object")
        try:
            return cls.of(roles, connectors)
        except ValidationError as exc:
            raise schema_error(exc) from exc

    def to_json(self) -> bytes:
        return dumps(
            {
                "roles": {entry.role: list(entry.values) for entry in self.entries},
                "connectors": {gid: c.to_json() for gid, c in self.connectors.items()},
            }
        )
