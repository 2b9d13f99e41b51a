"""Argumentation component: claims, asserted relationships, reasoning and references.

Relationships are Assertions themselves, so they carry a declaration and can
be the subject of meta-claims or the target of counter relationships.
Endpoints point from the supporting side (``source_ids``) to the supported
side (``target_ids``).
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import ClassVar

from ..core.exceptions import InvalidArgument, KindMismatch, SelfReference
from ..core.strings import LangString, MultiLangString
from ..core.types import Declaration, RelationshipKind
from .base import ArtifactElement, Element, Package, PackageBinding, PackageInterface
from .document import ModelDocument

logger = logging.getLogger(__name__)


@dataclass(kw_only=True)
class ArgumentPackage(Package):
    family: ClassVar[str] = "argument"


@dataclass(kw_only=True)
class ArgumentPackageInterface(PackageInterface, ArgumentPackage):
    pass


@dataclass(kw_only=True)
class ArgumentPackageBinding(PackageBinding, ArgumentPackage):
    pass


@dataclass(kw_only=True)
class ArgumentAsset(ArtifactElement, abstract=True):
    own_texts = ("content",)

    content: MultiLangString | None = None

    def text(self, lang: str = "en") -> str:
        """Content in ``lang``, else the name, else the gid."""
        if self.content:
            return self.content.localize(lang)
        return self.label()


@dataclass(kw_only=True)
class Assertion(ArgumentAsset, abstract=True):
    own_refs = ("meta_claims",)

    declaration: Declaration = Declaration.ASSERTED
    meta_claims: list[str] = field(default_factory=list)


@dataclass(kw_only=True)
class Claim(Assertion):
    pass


@dataclass(kw_only=True)
class ArtifactReference(ArgumentAsset):
    """Argument-side pointer to an ArtifactElement."""

    own_refs = ("referenced_artifact",)

    referenced_artifact: str | None = None


@dataclass(kw_only=True)
class ArgumentReasoning(ArgumentAsset):
    pass


EndpointTypes = tuple[type[Element], ...]


@dataclass(kw_only=True)
class AssertedRelationship(Assertion, abstract=True):
    """Many-to-many typed edge between argument assets."""

    own_refs = ("source_ids", "target_ids", "reasoning_id")
    source_types: ClassVar[EndpointTypes] = ()
    target_types: ClassVar[EndpointTypes] = ()

    source_ids: list[str] = field(default_factory=list)
    target_ids: list[str] = field(default_factory=list)
    is_counter: bool = False
    reasoning_id: str | None = None

    @classmethod
    def endpoint_problems(
        cls, doc: ModelDocument, source_ids: list[str], target_ids: list[str]
    ) -> list[str]:
        """Messages for endpoints whose kind the relationship does not allow.

        Unresolved gids are skipped; they are reported as dangling references.
        """
        problems = []
        if not source_ids:
            problems.append(f"{cls.kind} has no source")
        if not target_ids:
            problems.append(f"{cls.kind} has no target")
        for side, gids, allowed in (
            ("source", source_ids, cls.source_types),
            ("target", target_ids, cls.target_types),
        ):
            for gid in gids:
                element = doc.find(gid)
                if element is not None and not isinstance(element, allowed):
                    names = "/".join(t.__name__ for t in allowed)
                    problems.append(
                        f"{cls.kind} {side} {gid} is a {element.kind}, expected {names}"
                    )
        return problems

    def problems(self, doc: ModelDocument) -> list[str]:
        problems = self.endpoint_problems(doc, self.source_ids, self.target_ids)
        reasoning = doc.find(self.reasoning_id)
        if reasoning is not None and not isinstance(reasoning, ArgumentReasoning):
            problems.append(
                f"{self.kind} reasoning {reasoning.gid} is a {reasoning.kind}, "
                "expected ArgumentReasoning"
            )
        return problems


@dataclass(kw_only=True)
class AssertedInference(AssertedRelationship):
    source_types = (Assertion,)
    target_types = (Assertion,)


@dataclass(kw_only=True)
class AssertedEvidence(AssertedRelationship):
    source_types = (ArtifactReference,)
    target_types = (Assertion,)


@dataclass(kw_only=True)
class AssertedContext(AssertedRelationship):
    source_types = (Assertion, ArtifactReference)
    target_types = (Assertion, ArgumentReasoning)


@dataclass(kw_only=True)
class AssertedArtifactSupport(AssertedRelationship):
    source_types = (ArtifactReference,)
    target_types = (ArtifactReference,)


@dataclass(kw_only=True)
class AssertedArtifactContext(AssertedRelationship):
    source_types = (ArtifactReference,)
    target_types = (ArtifactReference,)


RELATIONSHIP_CLASSES: dict[RelationshipKind, type[AssertedRelationship]] = {
    RelationshipKind.INFERENCE: AssertedInference,
    RelationshipKind.EVIDENCE: AssertedEvidence,
    RelationshipKind.CONTEXT: AssertedContext,
    RelationshipKind.ARTIFACT_SUPPORT: AssertedArtifactSupport,
    RelationshipKind.ARTIFACT_CONTEXT: AssertedArtifactContext,
}


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------
def add_claim(
    doc: ModelDocument,
    pkg: str,
    name: str,
    description: str | None = None,
    declaration: Declaration | str = Declaration.ASSERTED,
    lang: str = "en",
    gid: str | None = None,
) -> str:
    """Create a Claim; ``description`` becomes the claim's content."""
    try:
        decl = Declaration(declaration)
    except ValueError:
        raise InvalidArgument(f"Unknown declaration: {declaration!r}") from None
    doc.require(pkg, ArgumentPackage, role="package")
    claim = Claim(
        name=LangString(lang=lang, content=name),
        content=MultiLangString.of(description, lang) if description else None,
        declaration=decl,
    )
    if gid:
        claim.gid = gid
    doc.add(claim, owner=pkg)
    return claim.gid


def add_artifact_reference(
    doc: ModelDocument, pkg: str, artifact: str, name: str | None = None, lang: str = "en"
) -> str:
    doc.require(pkg, ArgumentPackage, role="package")
    doc.require(artifact, ArtifactElement, role="referenced_artifact")
    ref = ArtifactReference(
        name=LangString(lang=lang, content=name) if name else None,
        referenced_artifact=artifact,
    )
    doc.add(ref, owner=pkg)
    return ref.gid


def add_reasoning(doc: ModelDocument, pkg: str, text: str, lang: str = "en") -> str:
    doc.require(pkg, ArgumentPackage, role="package")
    reasoning = ArgumentReasoning(content=MultiLangString.of(text, lang))
    doc.add(reasoning, owner=pkg)
    return reasoning.gid


def add_relationship(
    doc: ModelDocument,
    pkg: str,
    kind: RelationshipKind | str,
    source_ids: list[str],
    target_ids: list[str],
    is_counter: bool = False,
) -> str:
    """Create an asserted relationship after checking its endpoint kinds."""
    try:
        cls = RELATIONSHIP_CLASSES[RelationshipKind(kind)]
    except ValueError:
        raise InvalidArgument(f"Unknown relationship kind: {kind!r}") from None
    doc.require(pkg, ArgumentPackage, role="package")
    for gid in [*source_ids, *target_ids]:
        doc.get(gid)
    problems = cls.endpoint_problems(doc, source_ids, target_ids)
    if problems:
        raise KindMismatch("; ".join(problems), rule=cls.kind)
    rel = cls(source_ids=list(source_ids), target_ids=list(target_ids), is_counter=is_counter)
    doc.add(rel, owner=pkg)
    return rel.gid


def attach_reasoning(doc: ModelDocument, rel: str, reasoning: str) -> ModelDocument:
    relationship = doc.require(rel, AssertedRelationship, role="relationship")
    doc.require(reasoning, ArgumentReasoning, role="reasoning")
    if relationship.reasoning_id not in (None, reasoning):
        logger.warning(
            f"Replacing reasoning {relationship.reasoning_id} of {rel} with {reasoning}"
        )
    relationship.reasoning_id = reasoning
    return doc


def attach_meta_claim(doc: ModelDocument, assertion: str, meta: str) -> ModelDocument:
    if assertion == meta:
        raise SelfReference(f"Assertion {assertion} cannot be its own meta-claim")
    target = doc.require(assertion, Assertion, role="assertion")
    doc.require(meta, Claim, role="meta-claim")
    if meta not in target.meta_claims:
        target.meta_claims.append(meta)
    return doc


def build_structure(
    doc: ModelDocument,
    module: str | ArgumentPackage,
    module_type: type[ArgumentPackage],
    nodes: Iterable[Element],
    connectors: Iterable[AssertedRelationship],
) -> ArgumentPackage:
    """Add ``nodes`` and ``connectors`` to ``module`` after checking every connector.

    Nothing is added when a connector fails; KindMismatch carries its index.
    """
    if isinstance(module, ArgumentPackage):
        if module.gid not in doc:
            doc.add(module)
        target = doc.require(module.gid, module_type, role="module")
    else:
        target = doc.require(module, module_type, role="module")
    nodes = list(nodes)
    connectors = list(connectors)
    view = ModelDocument(
        notation=doc.notation, elements={**doc.elements, **{n.gid: n for n in nodes}}
    )
    for index, connector in enumerate(connectors):
        ends = [*connector.source_ids, *connector.target_ids]
        missing = [gid for gid in ends if gid not in view]
        if missing:
            raise KindMismatch(f"unresolved endpoint(s) {', '.join(missing)}", index=index)
        problems = connector.endpoint_problems(view, connector.source_ids, connector.target_ids)
        if problems:
            raise KindMismatch("; ".join(problems), rule=connector.kind, index=index)
    for element in [*nodes, *connectors]:
        doc.add(element, owner=element.owner_gid or target.gid)
    logger.debug(f"Module {target.gid}: +{len(nodes)} nodes, +{len(connectors)} connectors")
    return target
