"""Element-by-element mapping shared by the GSN and CAE transforms.

Results are built with the *source* gids in their reference fields; ``finish``
rewrites every reference (and owner) through the source-to-result map in one
pass, so elements can be emitted in document order without lookahead.
"""

import copy
import dataclasses
import logging
from typing import Any, TypeVar

from ..core.exceptions import DuplicateGid, PreconditionFailed
from ..core.types import Notation, Severity
from ..model.base import Element
from ..model.document import ModelDocument
from .trace import TraceLink, TransformResult

logger = logging.getLogger(__name__)

E = TypeVar("E", bound=Element)

COPY_RULE = "Copy"


def require_valid(doc: ModelDocument, notation: Notation) -> None:
    """Raise PreconditionFailed when ``doc`` is not a valid ``notation`` document."""
    from ..validate.rules import check

    if doc.notation != notation:
        raise PreconditionFailed(f"Expected a {notation} document, got {doc.notation}")
    errors = [d for d in check(doc) if d.severity == Severity.ERROR]
    if errors:
        raise PreconditionFailed(
            f"{len(errors)} validation error(s) block the transformation", errors
        )


def carry(source: Element, target_cls: type[E], **overrides: Any) -> E:
    """Build ``target_cls`` from the fields it shares with ``source``.

    The gid is never carried; pass it in ``overrides``.
    """
    names = {f.name for f in dataclasses.fields(target_cls) if f.init}
    kwargs = {
        name: copy.deepcopy(getattr(source, name))
        for name in names
        if name != "gid" and hasattr(source, name)
    }
    kwargs.update(overrides)
    return target_cls(**kwargs)


class ElementMapper:
    """Collects mapped elements and their trace links."""

    def __init__(self, source: ModelDocument) -> None:
        self.source = source
        self.elements: dict[str, Element] = {}
        self.links: list[TraceLink] = []
        self.warnings: list[str] = []
        self.gid_map: dict[str, str] = {}

    @staticmethod
    def result_gid(source_gid: str, role: str) -> str:
        return f"{source_gid}:{role}"

    def place(self, element: E) -> E:
        if element.gid in self.elements:
            raise DuplicateGid(element.gid)
        self.elements[element.gid] = element
        return element

    def emit(self, source_gid: str, element: E, rule: str) -> E:
        self.place(element)
        self.trace(source_gid, element.gid, rule)
        return element

    def trace(self, source_gid: str, result_gid: str, rule: str) -> None:
        self.links.append(TraceLink(source_gid, result_gid, rule))
        self.gid_map.setdefault(source_gid, result_gid)

    def copy(self, element: Element) -> Element:
        return self.emit(element.gid, copy.deepcopy(element), COPY_RULE)

    def warn(self, message: str) -> None:
        logger.warning(message)
        self.warnings.append(message)

    def remap(self, gid: str) -> str:
        return self.gid_map.get(gid, gid)

    def finish(self) -> TransformResult:
        for element in self.elements.values():
            if element.owner_gid is not None:
                element.owner_gid = self.remap(element.owner_gid)
            for name in element.ref_fields:
                value = getattr(element, name)
                if isinstance(value, str):
                    setattr(element, name, self.remap(value))
                elif isinstance(value, list):
                    mapped: list[str] = []
                    for gid in value:
                        if self.remap(gid) not in mapped:
                            mapped.append(self.remap(gid))
                    setattr(element, name, mapped)
        document = ModelDocument(
            notation=Notation.SACM, elements=self.elements, base_dir=self.source.base_dir
        )
        return TransformResult(document=document, links=self.links, warnings=self.warnings)
