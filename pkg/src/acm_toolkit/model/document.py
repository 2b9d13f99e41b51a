"""The in-memory model document: a flat gid index with owner links."""

import copy
import logging
from collections.abc import Iterator
from dataclasses import dataclass, field
from pathlib import Path
from typing import TypeVar

from ..core.exceptions import DuplicateGid, InvalidArgument, KindMismatch, MissingElement
from ..core.strings import LangString
from ..core.types import Notation
from .base import AssuranceCasePackage, Element, Package, PackageBinding, PackageInterface

logger = logging.getLogger(__name__)

FORMAT_VERSION = "1.0"
GROUP_KINDS = frozenset({"ArtifactGroup", "TerminologyGroup"})

T = TypeVar("T", bound=Element)


@dataclass
class ModelDocument:
    """All elements of one assurance case model, keyed by gid in document order.

    A document is used as a value: operations that change it are either given
    an exclusively owned document or work on ``copy()``. Sharing a document
    read-only between tasks is safe.
    """

    notation: Notation = Notation.SACM
    elements: dict[str, Element] = field(default_factory=dict)
    format_version: str = FORMAT_VERSION
    # Directory of the file the document was loaded from; relative URIs resolve here
    base_dir: Path | None = field(default=None, compare=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements.values())

    def __contains__(self, gid: object) -> bool:
        return gid in self.elements

    # ------------------------------------------------------------------
    # Lookup
    # ------------------------------------------------------------------
    def find(self, gid: str | None) -> Element | None:
        if gid is None:
            return None
        return self.elements.get(gid)

    def get(self, gid: str) -> Element:
        try:
            return self.elements[gid]
        except KeyError:
            raise MissingElement(gid) from None

    def require(self, gid: str, *kinds: type[T], role: str = "element") -> T:
        """Resolve ``gid`` and check it is an instance of one of ``kinds``."""
        element = self.get(gid)
        if kinds and not isinstance(element, kinds):
            expected = " or ".join(k.__name__ for k in kinds)
            raise KindMismatch(f"{role} {gid} is a {element.kind}, expected {expected}")
        return element  # type: ignore[return-value]

    def of_type(self, kind: type[T]) -> list[T]:
        return [e for e in self.elements.values() if isinstance(e, kind)]

    # ------------------------------------------------------------------
    # Mutation
    # ------------------------------------------------------------------
    def add(self, element: T, owner: str | Element | None = None) -> T:
        """Add ``element``; when ``owner`` is given it becomes the owning element."""
        if element.gid in self.elements:
            raise DuplicateGid(element.gid)
        if owner is not None:
            owner_gid = owner if isinstance(owner, str) else owner.gid
            self.get(owner_gid)
            element.owner_gid = owner_gid
        self.elements[element.gid] = element
        return element

    def replace(self, element: Element) -> None:
        """Store ``element`` in place of the element with the same gid."""
        self.get(element.gid)
        self.elements[element.gid] = element

    def remove(self, gid: str) -> Element:
        """Remove one element (not its subtree) and return it."""
        element = self.get(gid)
        del self.elements[gid]
        return element

    def copy(self) -> "ModelDocument":
        return copy.deepcopy(self)

    # ------------------------------------------------------------------
    # Containment
    # ------------------------------------------------------------------
    def owner(self, element: Element) -> Element | None:
        return self.find(element.owner_gid)

    def children(self, gid: str, kind: type[T] = Element) -> list[T]:  # type: ignore[assignment]
        return [
            e for e in self.elements.values() if e.owner_gid == gid and isinstance(e, kind)
        ]

    def roots(self) -> list[Element]:
        return [e for e in self.elements.values() if e.owner_gid is None]

    def subtree(self, gid: str) -> list[Element]:
        """``gid`` and everything it transitively owns, in document order."""
        members = {gid}
        changed = True
        while changed:
            changed = False
            for element in self.elements.values():
                if element.owner_gid in members and element.gid not in members:
                    members.add(element.gid)
                    changed = True
        return [e for e in self.elements.values() if e.gid in members]

    def owner_chain(self, element: Element) -> list[Element]:
        """Owners from the direct owner up to the root, stopping at a repeat."""
        chain: list[Element] = []
        seen = {element.gid}
        current = self.owner(element)
        while current is not None and current.gid not in seen:
            chain.append(current)
            seen.add(current.gid)
            current = self.owner(current)
        return chain

    def package_of(self, element: Element) -> Package | None:
        for owner in self.owner_chain(element):
            if isinstance(owner, Package):
                return owner
        return None

    def packages(self, gid: str, family: str | None = None) -> list[Package]:
        """Directly nested packages, optionally restricted to one family."""
        return [
            p
            for p in self.children(gid, Package)
            if family is None or p.family == family
        ]

    def argument_packages(self, gid: str) -> list[Package]:
        return self.packages(gid, "argument")

    def artifact_packages(self, gid: str) -> list[Package]:
        return self.packages(gid, "artifact")

    def terminology_packages(self, gid: str) -> list[Package]:
        return self.packages(gid, "terminology")

    def nested_assurance_case_packages(self, gid: str) -> list[Package]:
        return self.packages(gid, "assurance_case")

    def groups(self, gid: str) -> list[Element]:
        return [e for e in self.children(gid) if e.kind in GROUP_KINDS]

    def assets(self, gid: str) -> list[Element]:
        """Directly owned elements that are neither packages nor groups."""
        return [
            e
            for e in self.children(gid)
            if not isinstance(e, Package) and e.kind not in GROUP_KINDS
        ]

    def interfaces(self, gid: str) -> list[Package]:
        return [p for p in self.children(gid, Package) if isinstance(p, PackageInterface)]

    def bindings(self, gid: str) -> list[Package]:
        return [p for p in self.children(gid, Package) if isinstance(p, PackageBinding)]

    # ------------------------------------------------------------------
    # References
    # ------------------------------------------------------------------
    def dangling_references(self) -> list[tuple[str, str, str]]:
        """``(element gid, field, missing gid)`` for every unresolved reference."""
        dangling: list[tuple[str, str, str]] = []
        for element in self.elements.values():
            if element.owner_gid is not None and element.owner_gid not in self.elements:
                dangling.append((element.gid, "owner_gid", element.owner_gid))
            for name, ref in element.references():
                if ref not in self.elements:
                    dangling.append((element.gid, name, ref))
        return dangling


def create_model(root_name: str, gid: str | None = None, lang: str = "en") -> ModelDocument:
    """New document holding one empty AssuranceCasePackage named ``root_name``."""
    if not root_name or not root_name.strip():
        raise InvalidArgument("root_name must not be empty")
    doc = ModelDocument(notation=Notation.SACM)
    package = AssuranceCasePackage(name=LangString(lang=lang, content=root_name))
    if gid:
        package.gid = gid
    doc.add(package)
    logger.debug(f"Created model {package.gid} ({root_name})")
    return doc
