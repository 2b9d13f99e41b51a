"""CAE to SACM transformation.

An Argument, the Supports edge(s) from it and the IsSubClaimOf edges of its
sub-claims collapse into one ArgumentReasoning attached to one merged
AssertedInference. An IsSubClaimOf edge belongs to an Argument when its
``reasoning_id`` names the Argument, or, when unset, when its parent claim is
supported by exactly one Argument.
"""

import logging

from ..core.exceptions import ArgumentDangling
from ..core.types import Declaration, Notation
from ..model.argumentation import (
    ArgumentPackage,
    ArgumentPackageBinding,
    ArgumentPackageInterface,
    ArgumentReasoning,
    AssertedEvidence,
    AssertedInference,
    ArtifactReference,
    Claim,
)
from ..model.base import Element
from ..model.cae import (
    Argument,
    CAEClaim,
    CAEModule,
    CAEModuleBinding,
    CAEModuleInterface,
    CaeAssumption,
    Evidence,
    IsEvidenceFor,
    IsSubClaimOf,
    Supports,
)
from ..model.document import ModelDocument
from .mapping import ElementMapper, carry, require_valid
from .trace import TransformResult

logger = logging.getLogger(__name__)

NODE_RULES: dict[type[Element], tuple[type[Element], str, str]] = {
    CAEModuleInterface: (ArgumentPackageInterface, "interface", "CAEModuleInterface2Interface"),
    CAEModuleBinding: (ArgumentPackageBinding, "binding", "CAEModuleBinding2Binding"),
    CAEModule: (ArgumentPackage, "package", "CAEModule2ArgumentPackage"),
    CAEClaim: (Claim, "claim", "CAEClaim2Claim"),
    Evidence: (ArtifactReference, "reference", "Evidence2ArtifactReference"),
}


def sub_claim_owners(doc: ModelDocument) -> dict[str, str]:
    """IsSubClaimOf gid to the Argument it belongs to."""
    arguments_of: dict[str, list[str]] = {}
    for edge in doc.of_type(Supports):
        arguments_of.setdefault(edge.target_id, []).append(edge.source_id)
    owners: dict[str, str] = {}
    for edge in doc.of_type(IsSubClaimOf):
        if edge.reasoning_id is not None:
            if isinstance(doc.find(edge.reasoning_id), Argument):
                owners[edge.gid] = edge.reasoning_id
        elif len(arguments_of.get(edge.target_id, [])) == 1:
            owners[edge.gid] = arguments_of[edge.target_id][0]
    return owners


def cae_to_sacm(doc: ModelDocument) -> TransformResult:
    """Transform every CAE element of ``doc``; other elements are copied as they are.

    Raises PreconditionFailed on validation errors and ArgumentDangling when
    an Argument has no Supports edge.
    """
    require_valid(doc, Notation.CAE)
    supports: dict[str, list[Supports]] = {}
    for edge in doc.of_type(Supports):
        supports.setdefault(edge.source_id, []).append(edge)
    owners = sub_claim_owners(doc)
    sub_edges: dict[str, list[IsSubClaimOf]] = {}
    for edge in doc.of_type(IsSubClaimOf):
        if edge.gid in owners:
            sub_edges.setdefault(owners[edge.gid], []).append(edge)
    for argument in doc.of_type(Argument):
        if not supports.get(argument.gid):
            raise ArgumentDangling(argument.gid)

    mapper = ElementMapper(doc)
    for element in doc:
        gid = element.gid
        if isinstance(element, Argument):
            _collapse_argument(mapper, element, supports[gid], sub_edges.get(gid, []))
        elif isinstance(element, Supports) or gid in owners:
            continue
        elif isinstance(element, IsSubClaimOf):
            inference = carry(element, AssertedInference, gid=mapper.result_gid(gid, "inference"))
            mapper.emit(gid, inference, "IsSubClaimOf2AssertedInference")
        elif isinstance(element, IsEvidenceFor):
            evidence = carry(element, AssertedEvidence, gid=mapper.result_gid(gid, "evidence"))
            mapper.emit(gid, evidence, "IsEvidenceFor2AssertedEvidence")
        elif isinstance(element, CaeAssumption):
            claim = carry(element, Claim, gid=mapper.result_gid(gid, "claim"))
            if claim.declaration == Declaration.ASSERTED:
                claim.declaration = Declaration.ASSUMED
            mapper.emit(gid, claim, "CaeAssumption2Claim")
        elif type(element) in NODE_RULES:
            target_cls, role, rule = NODE_RULES[type(element)]
            mapper.emit(gid, carry(element, target_cls, gid=mapper.result_gid(gid, role)), rule)
        else:
            mapper.copy(element)
    result = mapper.finish()
    logger.info(f"CAE to SACM: {len(doc)} elements in, {len(result.document)} out")
    return result


def _collapse_argument(
    mapper: ElementMapper,
    argument: Argument,
    supports: list[Supports],
    sub_edges: list[IsSubClaimOf],
) -> None:
    reasoning_gid = mapper.result_gid(argument.gid, "reasoning")
    reasoning = carry(argument, ArgumentReasoning, gid=reasoning_gid)
    mapper.emit(argument.gid, reasoning, "Argument2ArgumentReasoning")
    if not sub_edges:
        mapper.warn(f"Argument {argument.gid} has no sub-claims; no inference produced")
        for edge in supports:
            mapper.trace(edge.gid, reasoning.gid, "Supports2ArgumentReasoning")
        return

    sources: list[str] = []
    for edge in sub_edges:
        if edge.source_id not in sources:
            sources.append(edge.source_id)
    targets: list[str] = []
    for edge in supports:
        if edge.target_id not in targets:
            targets.append(edge.target_id)
    edges = [*supports, *sub_edges]
    inference = AssertedInference(
        gid=mapper.result_gid(argument.gid, "inference"),
        owner_gid=argument.owner_gid,
        source_ids=sources,
        target_ids=targets,
        reasoning_id=argument.gid,
        is_counter=any(e.is_counter for e in supports),
        is_abstract=argument.is_abstract or any(e.is_abstract for e in edges),
    )
    mapper.place(inference)
    for edge in edges:
        mapper.trace(edge.gid, inference.gid, "Argument2AssertedInference")
