"""Canonical JSON reading and writing of model documents.

``save`` is byte-deterministic: UTF-8, LF line endings, two-space indentation,
object keys sorted, elements sorted by gid and a trailing newline. ``load``
accepts any formatting, so ``save(load(save(doc))) == save(doc)``.
"""

import dataclasses
import json
import logging
from pathlib import Path
from typing import Any

from filelock import FileLock, Timeout

from ..config import config
from ..core.exceptions import DanglingReference, InterchangeError, SchemaError
from ..model.base import Element
from ..model.document import ModelDocument
from .schema import decode_element, decode_envelope, parse_json

logger = logging.getLogger(__name__)

FILE_SUFFIX = ".acm.json"


def encode_element(element: Element) -> dict[str, Any]:
    record = dataclasses.asdict(element)
    record["kind"] = element.kind
    return record


def dumps(data: Any) -> bytes:
    """Canonical JSON bytes for any JSON-compatible value."""
    text = json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)
    return (text + "\n").encode("utf-8")


def save(doc: ModelDocument) -> bytes:
    envelope = {
        "format_version": doc.format_version,
        "notation": str(doc.notation),
        "elements": [encode_element(doc.elements[gid]) for gid in sorted(doc.elements)],
    }
    return dumps(envelope)


def _check_forest(doc: ModelDocument, order: dict[str, int]) -> None:
    for element in doc:
        seen = {element.gid}
        current = doc.find(element.owner_gid)
        while current is not None:
            if current.gid in seen:
                path = f"$.elements[{order[element.gid]}].owner_gid"
                raise SchemaError(path, f"ownership cycle through {current.gid}")
            seen.add(current.gid)
            current = doc.find(current.owner_gid)


def load(data: bytes | str, check_references: bool = True) -> ModelDocument:
    """Parse an envelope into a ModelDocument.

    Raises ParseError for malformed JSON, SchemaError for records that do not
    fit their kind, and DanglingReference listing every unresolved gid unless
    ``check_references`` is off.
    """
    envelope = decode_envelope(parse_json(data))
    doc = ModelDocument(notation=envelope.notation, format_version=envelope.format_version)
    order: dict[str, int] = {}
    for index, record in enumerate(envelope.elements):
        element = decode_element(record, index, envelope.notation)
        if element.gid in doc:
            raise SchemaError(f"$.elements[{index}].gid", f"duplicate gid {element.gid}")
        doc.elements[element.gid] = element
        order[element.gid] = index
    _check_forest(doc, order)
    if check_references:
        missing = [ref for _, _, ref in doc.dangling_references()]
        if missing:
            raise DanglingReference(missing)
    logger.debug(f"Loaded {len(doc)} {doc.notation} element(s)")
    return doc


def load_file(path: str | Path, check_references: bool = True) -> ModelDocument:
    """``load`` a file; relative artifact URIs then resolve against its directory."""
    path = Path(path)
    doc = load(path.read_bytes(), check_references=check_references)
    doc.base_dir = path.resolve().parent
    return doc


def write_bytes(path: str | Path, data: bytes) -> None:
    """Write ``data`` under a ``.lock`` sidecar so concurrent writers never interleave."""
    path = Path(path)
    try:
        with FileLock(str(path) + ".lock", timeout=config.lock_timeout):
            path.write_bytes(data)
    except Timeout as exc:
        raise InterchangeError(f"Lock timeout writing {path}") from exc


def save_file(doc: ModelDocument, path: str | Path) -> None:
    write_bytes(path, save(doc))
    logger.info(f"Saved {len(doc)} element(s) to {path}")
