"""SACM-compliant GSN metamodel, with the pattern decorators on connectors.

GSN connectors keep the drawing direction: ``source_ids`` holds the supported
element (above) and ``target_ids`` the supporting element (below). The
GSN to SACM transform flips them into bottom-up relationships.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from typing import ClassVar

from ..core.exceptions import InvalidArgument
from ..core.strings import MultiLangString
from ..core.types import Notation
from .argumentation import (
    ArgumentAsset,
    ArgumentPackage,
    ArgumentPackageBinding,
    ArgumentReasoning,
    AssertedContext,
    AssertedInference,
    AssertedRelationship,
    ArtifactReference,
    Claim,
    build_structure,
)
from .base import Element, ModelElement, TaggedValue
from .document import ModelDocument

logger = logging.getLogger(__name__)


@dataclass(kw_only=True)
class GsnModule(ArgumentPackage, notation=Notation.GSN):
    pass


@dataclass(kw_only=True)
class ContractModule(ArgumentPackageBinding, notation=Notation.GSN):
    pass


@dataclass(kw_only=True)
class Goal(Claim, notation=Notation.GSN):
    undeveloped: bool = False
    to_be_supported_by_contract: bool = False
    # deprecated, kept for import fidelity
    public: bool = False


@dataclass(kw_only=True)
class Assumption(Claim, notation=Notation.GSN):
    pass


@dataclass(kw_only=True)
class Justification(Claim, notation=Notation.GSN):
    pass


@dataclass(kw_only=True)
class AwayGoal(Claim, notation=Notation.GSN):
    """Citation of a goal in another module."""

    own_refs = ("module_ref",)

    module_ref: str | None = None


@dataclass(kw_only=True)
class Solution(ArtifactReference, notation=Notation.GSN):
    pass


@dataclass(kw_only=True)
class AwaySolution(ArtifactReference, notation=Notation.GSN):
    pass


@dataclass(kw_only=True)
class AwayContext(ArtifactReference, notation=Notation.GSN):
    pass


@dataclass(kw_only=True)
class ModuleReference(ArtifactReference, notation=Notation.GSN):
    pass


@dataclass(kw_only=True)
class ContractModuleReference(ArtifactReference, notation=Notation.GSN):
    pass


@dataclass(kw_only=True)
class Context(ArgumentAsset, notation=Notation.GSN):
    """A contextual statement, or a reference to contextual information."""

    own_refs = ("referenced_artifact",)
    own_texts = ("statement",)

    statement: str | None = None
    referenced_artifact: str | None = None

    def __post_init__(self) -> None:
        if not self.statement and self.referenced_artifact is None:
            raise InvalidArgument(
                f"Context {self.gid} needs a statement or a referenced artifact"
            )


@dataclass(kw_only=True)
class Strategy(ArgumentReasoning, notation=Notation.GSN):
    undeveloped: bool = False


@dataclass(frozen=True)
class ChoiceGroup:
    """m-of-n selection over the connectors sharing ``group_id``."""

    group_id: str
    min: int = 1
    max: int = 1

    def __post_init__(self) -> None:
        if not self.group_id:
            raise InvalidArgument("ChoiceGroup.group_id must not be empty")
        if self.min < 0 or self.max < self.min:
            raise InvalidArgument(
                f"ChoiceGroup {self.group_id}: invalid range {self.min}..{self.max}"
            )


@dataclass(kw_only=True)
class GsnConnector(AssertedRelationship, abstract=True, notation=Notation.GSN):
    """Single-source, single-target GSN connector with pattern decorators."""

    allowed_pairs: ClassVar[tuple[tuple[type[Element], tuple[type[Element], ...]], ...]] = ()

    many_label: str | None = None
    optional_flag: bool = False
    choice_group: ChoiceGroup | None = None

    @property
    def source_id(self) -> str:
        return self.source_ids[0]

    @property
    def target_id(self) -> str:
        return self.target_ids[0]

    @property
    def decorated(self) -> bool:
        return self.many_label is not None or self.optional_flag or self.choice_group is not None

    @classmethod
    def endpoint_problems(
        cls, doc: ModelDocument, source_ids: list[str], target_ids: list[str]
    ) -> list[str]:
        if len(source_ids) != 1 or len(target_ids) != 1:
            return [f"{cls.kind} needs exactly one source and one target"]
        source, target = doc.find(source_ids[0]), doc.find(target_ids[0])
        if source is None or target is None:
            return []
        for above, below in cls.allowed_pairs:
            if isinstance(source, above) and not isinstance(source, AwayGoal):
                if isinstance(target, below):
                    return []
        return [f"{cls.kind} from {source.kind} {source.gid} to {target.kind} {target.gid}"]


@dataclass(kw_only=True)
class SupportedBy(GsnConnector, AssertedInference):
    allowed_pairs = (
        (Goal, (Goal, AwayGoal, Strategy, Solution, AwaySolution)),
        (Strategy, (Goal, AwayGoal)),
    )


@dataclass(kw_only=True)
class InContextOf(GsnConnector, AssertedContext):
    allowed_pairs = (
        (Goal, (Context, Assumption, Justification, AwayContext)),
        (Strategy, (Context, Assumption, Justification, AwayContext)),
    )


GSN_NODE_TYPES = (
    Goal,
    Assumption,
    Justification,
    AwayGoal,
    Solution,
    AwaySolution,
    AwayContext,
    ModuleReference,
    ContractModuleReference,
    Context,
    Strategy,
)


def build_goal_structure(
    doc: ModelDocument,
    module: str | GsnModule,
    nodes: Iterable[Element],
    connectors: Iterable[GsnConnector],
) -> GsnModule:
    """Add ``nodes`` and ``connectors`` to ``module``; KindMismatch names the bad connector."""
    return build_structure(doc, module, GsnModule, nodes, connectors)  # type: ignore[return-value]


def supported_by(doc: ModelDocument, gid: str) -> list[SupportedBy]:
    """SupportedBy connectors drawn below ``gid``."""
    return [c for c in doc.of_type(SupportedBy) if c.source_ids == [gid]]


def supporting(doc: ModelDocument, gid: str) -> list[SupportedBy]:
    """SupportedBy connectors drawn above ``gid``."""
    return [c for c in doc.of_type(SupportedBy) if c.target_ids == [gid]]


def roots(doc: ModelDocument, module: str) -> list[str]:
    """Goals in ``module`` that no SupportedBy points down to, in document order."""
    members = doc.subtree(module)
    supported = {gid for c in members if isinstance(c, SupportedBy) for gid in c.target_ids}
    return [e.gid for e in members if isinstance(e, Goal) and e.gid not in supported]


MANY_TAG = "gsn:many"
OPTIONAL_TAG = "gsn:optional"
CHOICE_TAG = "gsn:choice"


@dataclass(frozen=True)
class Decorators:
    """Pattern decorators, either read off a GSN connector or off tagged values.

    Relationships produced from decorated GSN connectors carry the decorators
    as tagged values, so SACM patterns stay instantiable.
    """

    many_label: str | None = None
    optional: bool = False
    choice: ChoiceGroup | None = None

    def __bool__(self) -> bool:
        return self.many_label is not None or self.optional or self.choice is not None

    @classmethod
    def of(cls, element: Element) -> "Decorators":
        if isinstance(element, GsnConnector):
            return cls(element.many_label, element.optional_flag, element.choice_group)
        if not isinstance(element, ModelElement):
            return cls()
        choice = None
        choice_text = element.tag(CHOICE_TAG)
        if choice_text:
            group_id, _, bounds = choice_text.rpartition(" ")
            low, _, high = bounds.partition("..")
            try:
                choice = ChoiceGroup(group_id, int(low), int(high))
            except ValueError:
                raise InvalidArgument(
                    f"{element.gid}: malformed {CHOICE_TAG} tag {choice_text!r}"
                ) from None
        return cls(
            many_label=element.tag(MANY_TAG),
            optional=element.tag(OPTIONAL_TAG) == "true",
            choice=choice,
        )

    @classmethod
    def merge(cls, items: Iterable["Decorators"]) -> "Decorators":
        many, optional, choice = None, False, None
        for item in items:
            many = many if many is not None else item.many_label
            optional = optional or item.optional
            choice = choice if choice is not None else item.choice
        return cls(many, optional, choice)

    def to_tags(self) -> list[TaggedValue]:
        tags = []
        if self.many_label is not None:
            tags.append(TaggedValue(MANY_TAG, MultiLangString.of(self.many_label)))
        if self.optional:
            tags.append(TaggedValue(OPTIONAL_TAG, MultiLangString.of("true")))
        if self.choice is not None:
            text = f"{self.choice.group_id} {self.choice.min}..{self.choice.max}"
            tags.append(TaggedValue(CHOICE_TAG, MultiLangString.of(text)))
        return tags
