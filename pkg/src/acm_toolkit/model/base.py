"""Base and AssuranceCase components: identity, citation, abstraction, utility elements.

Every element is a keyword-only dataclass. Cross references (citations,
abstract forms, relationship endpoints, package participants) are stored as
gids, never as object links, so that packages can point across package
boundaries. Containment is recorded once, as ``owner_gid``.

Subclasses declare ``own_refs`` (fields holding gids) and ``own_texts``
(fields holding strings or LangStrings); the merged tuples ``ref_fields`` and
``text_fields`` are computed along the MRO when the class is created.
"""

import dataclasses
import uuid
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any, ClassVar

from pydantic import ConfigDict

from ..core.exceptions import InvalidArgument
from ..core.strings import LangString, MultiLangString
from ..core.types import Notation

# Concrete element classes by kind name, filled as classes are defined.
ELEMENT_KINDS: dict[str, type["Element"]] = {}


def new_gid() -> str:
    """Random gid for elements created without an authored one."""
    return str(uuid.uuid4())


@dataclass(kw_only=True)
class Element:
    """Root of every model element (SACMElement)."""

    __pydantic_config__: ClassVar[ConfigDict] = ConfigDict(extra="forbid")
    kind: ClassVar[str] = "Element"
    is_abstract_type: ClassVar[bool] = True
    # None means the kind is valid in every notation
    notation: ClassVar[Notation | None] = None
    ref_fields: ClassVar[tuple[str, ...]] = ()
    text_fields: ClassVar[tuple[str, ...]] = ()
    own_refs = ("cited_element", "abstract_form")

    gid: str = field(default_factory=new_gid)
    owner_gid: str | None = None
    is_citation: bool = False
    cited_element: str | None = None
    is_abstract: bool = False
    abstract_form: str | None = None

    def __init_subclass__(
        cls, abstract: bool = False, notation: Notation | None = None, **kwargs: Any
    ) -> None:
        super().__init_subclass__(**kwargs)
        cls.kind = cls.__name__
        cls.is_abstract_type = abstract
        if notation is not None:
            cls.notation = notation
        refs: list[str] = []
        texts: list[str] = []
        for klass in reversed(cls.__mro__):
            for name in klass.__dict__.get("own_refs", ()):
                if name not in refs:
                    refs.append(name)
            for name in klass.__dict__.get("own_texts", ()):
                if name not in texts:
                    texts.append(name)
        cls.ref_fields = tuple(refs)
        cls.text_fields = tuple(texts)
        if not abstract:
            ELEMENT_KINDS[cls.__name__] = cls

    def references(self) -> Iterator[tuple[str, str]]:
        """Yield ``(field name, gid)`` for every cross reference that is set."""
        for name in self.ref_fields:
            value = getattr(self, name)
            if isinstance(value, str):
                yield name, value
            elif isinstance(value, list):
                for gid in value:
                    yield name, gid

    def lang_strings(self) -> Iterator[LangString]:
        """Every LangString carried by this element, in field order."""
        for name in self.text_fields:
            value = getattr(self, name)
            if isinstance(value, LangString):
                yield value
            elif isinstance(value, MultiLangString):
                yield from value.values

    def texts(self) -> Iterator[tuple[str, str]]:
        """Yield ``(field name, text)`` for every text-bearing field."""
        for name in self.text_fields:
            value = getattr(self, name)
            if isinstance(value, str):
                yield name, value
            elif isinstance(value, LangString):
                yield name, value.content
            elif isinstance(value, MultiLangString):
                for entry in value.values:
                    yield name, entry.content

    def map_texts(self, fn: Callable[[str], str]) -> dict[str, Any]:
        """Field updates that apply ``fn`` to every text, for ``dataclasses.replace``."""

        def _map_lang(value: LangString) -> LangString:
            return value.with_content(fn(value.content))

        updates: dict[str, Any] = {}
        for name in self.text_fields:
            value = getattr(self, name)
            if isinstance(value, str):
                updates[name] = fn(value)
            elif isinstance(value, LangString):
                updates[name] = _map_lang(value)
            elif isinstance(value, MultiLangString):
                updates[name] = value.map_content(_map_lang)
            elif isinstance(value, list):
                updates[name] = [item.map_texts(fn) for item in value]
        return updates

    def evolve(self, **changes: Any) -> "Element":
        return dataclasses.replace(self, **changes)


# ---------------------------------------------------------------------------
# Utility elements
# ---------------------------------------------------------------------------
def _map_multi(value: MultiLangString, fn: Callable[[str], str]) -> MultiLangString:
    return value.map_content(lambda entry: entry.with_content(fn(entry.content)))


@dataclass
class ImplementationConstraint:
    """Instantiation rule text, in any natural or computer language."""

    __pydantic_config__: ClassVar[ConfigDict] = ConfigDict(extra="forbid")

    content: MultiLangString

    def __post_init__(self) -> None:
        if not self.content:
            raise InvalidArgument("ImplementationConstraint content must not be empty")

    def map_texts(self, fn: Callable[[str], str]) -> "ImplementationConstraint":
        return ImplementationConstraint(_map_multi(self.content, fn))


@dataclass
class Note:
    """Additional information other than the description."""

    __pydantic_config__: ClassVar[ConfigDict] = ConfigDict(extra="forbid")

    content: MultiLangString

    def __post_init__(self) -> None:
        if not self.content:
            raise InvalidArgument("Note content must not be empty")

    def map_texts(self, fn: Callable[[str], str]) -> "Note":
        return Note(_map_multi(self.content, fn))


@dataclass
class TaggedValue:
    """Key/value extension slot."""

    __pydantic_config__: ClassVar[ConfigDict] = ConfigDict(extra="forbid")

    key: str
    value: MultiLangString

    def __post_init__(self) -> None:
        if not self.key:
            raise InvalidArgument("TaggedValue key must not be empty")

    def map_texts(self, fn: Callable[[str], str]) -> "TaggedValue":
        return TaggedValue(self.key, _map_multi(self.value, fn))


@dataclass(kw_only=True)
class ModelElement(Element, abstract=True):
    """Element with a name, a description and utility elements."""

    own_texts = ("name", "description", "notes", "tagged_values")

    name: LangString | None = None
    description: MultiLangString | None = None
    implementation_constraints: list[ImplementationConstraint] = field(default_factory=list)
    notes: list[Note] = field(default_factory=list)
    tagged_values: list[TaggedValue] = field(default_factory=list)

    def label(self) -> str:
        """Name text, falling back to the gid."""
        return self.name.content if self.name is not None else self.gid

    def tag(self, key: str, lang: str = "en") -> str | None:
        for tagged in self.tagged_values:
            if tagged.key == key and tagged.value:
                return tagged.value.localize(lang)
        return None

    def set_tag(self, key: str, text: str, lang: str = "en") -> None:
        self.tagged_values = [t for t in self.tagged_values if t.key != key]
        self.tagged_values.append(TaggedValue(key, MultiLangString.of(text, lang)))

    def lang_strings(self) -> Iterator[LangString]:
        yield from super().lang_strings()
        for constraint in self.implementation_constraints:
            yield from constraint.content.values
        for note in self.notes:
            yield from note.content.values
        for tagged in self.tagged_values:
            yield from tagged.value.values

    def texts(self) -> Iterator[tuple[str, str]]:
        yield from super().texts()
        for note in self.notes:
            for entry in note.content.values:
                yield "notes", entry.content
        for tagged in self.tagged_values:
            for entry in tagged.value.values:
                yield "tagged_values", entry.content


@dataclass(kw_only=True)
class ArtifactElement(ModelElement, abstract=True):
    """Every ArtifactElement is itself an artifact that can be referenced."""


# ---------------------------------------------------------------------------
# Packages
# ---------------------------------------------------------------------------
class PackageRole(StrEnum):
    PACKAGE = "package"
    INTERFACE = "interface"
    BINDING = "binding"


@dataclass(kw_only=True)
class Package(ArtifactElement, abstract=True):
    """Modular container. ``family`` says which component the package belongs to."""

    family: ClassVar[str] = ""
    role: ClassVar[PackageRole] = PackageRole.PACKAGE


class PackageInterface:
    """Marker: an interface package holds citations only."""

    role: ClassVar[PackageRole] = PackageRole.INTERFACE


@dataclass(kw_only=True)
class PackageBinding:
    """Mixin for packages that bind two or more participant packages."""

    role: ClassVar[PackageRole] = PackageRole.BINDING
    own_refs = ("participant_packages",)

    participant_packages: list[str] = field(default_factory=list)


@dataclass(kw_only=True)
class AssuranceCasePackage(Package):
    family: ClassVar[str] = "assurance_case"


@dataclass(kw_only=True)
class AssuranceCasePackageInterface(PackageInterface, AssuranceCasePackage):
    pass


@dataclass(kw_only=True)
class AssuranceCasePackageBinding(PackageBinding, AssuranceCasePackage):
    pass
