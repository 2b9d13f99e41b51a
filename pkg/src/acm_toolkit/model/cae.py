"""SACM-compliant CAE (Claims-Arguments-Evidence) metamodel.

CAE connectors point upward: ``source_ids`` holds the sub-claim, argument or
evidence and ``target_ids`` the claim it bears on.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass

from ..core.types import Declaration, Notation
from .argumentation import (
    ArgumentPackage,
    ArgumentPackageBinding,
    ArgumentPackageInterface,
    ArgumentReasoning,
    AssertedEvidence,
    AssertedInference,
    AssertedRelationship,
    ArtifactReference,
    Claim,
    build_structure,
)
from .base import Element
from .document import ModelDocument

logger = logging.getLogger(__name__)


@dataclass(kw_only=True)
class CAEModule(ArgumentPackage, notation=Notation.CAE):
    pass


@dataclass(kw_only=True)
class CAEModuleInterface(ArgumentPackageInterface, notation=Notation.CAE):
    pass


@dataclass(kw_only=True)
class CAEModuleBinding(ArgumentPackageBinding, notation=Notation.CAE):
    pass


@dataclass(kw_only=True)
class CAEClaim(Claim, notation=Notation.CAE):
    pass


@dataclass(kw_only=True)
class CaeAssumption(Claim, notation=Notation.CAE):
    declaration: Declaration = Declaration.ASSUMED


@dataclass(kw_only=True)
class Argument(ArgumentReasoning, notation=Notation.CAE):
    pass


@dataclass(kw_only=True)
class Evidence(ArtifactReference, notation=Notation.CAE):
    pass


@dataclass(kw_only=True)
class CaeConnector(AssertedRelationship, abstract=True, notation=Notation.CAE):
    @classmethod
    def endpoint_problems(
        cls, doc: ModelDocument, source_ids: list[str], target_ids: list[str]
    ) -> list[str]:
        if len(source_ids) != 1 or len(target_ids) != 1:
            return [f"{cls.kind} needs exactly one source and one target"]
        return super().endpoint_problems(doc, source_ids, target_ids)

    @property
    def source_id(self) -> str:
        return self.source_ids[0]

    @property
    def target_id(self) -> str:
        return self.target_ids[0]


@dataclass(kw_only=True)
class IsEvidenceFor(CaeConnector, AssertedEvidence):
    source_types = (Evidence,)
    target_types = (CAEClaim,)


@dataclass(kw_only=True)
class IsSubClaimOf(CaeConnector, AssertedInference):
    source_types = (CAEClaim, CaeAssumption)
    target_types = (CAEClaim,)


@dataclass(kw_only=True)
class Supports(CaeConnector, AssertedInference):
    source_types = (Argument,)
    target_types = (CAEClaim,)


CAE_NODE_TYPES = (CAEClaim, CaeAssumption, Argument, Evidence)


def build_cae_structure(
    doc: ModelDocument,
    module: str | CAEModule,
    nodes: Iterable[Element],
    connectors: Iterable[CaeConnector],
) -> CAEModule:
    return build_structure(doc, module, CAEModule, nodes, connectors)  # type: ignore[return-value]


def supports_of(doc: ModelDocument, claim: str) -> list[Supports]:
    """Supports edges whose target is ``claim``."""
    return [s for s in doc.of_type(Supports) if s.target_ids == [claim]]
