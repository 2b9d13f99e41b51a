"""GSN to SACM transformation.

Every GSN element becomes the SACM element its GSN type extends. Connectors
are flipped from GSN's top-down drawing direction into SACM's bottom-up
inference. Each Strategy collapses, together with the SupportedBy connectors
around it, into one ArgumentReasoning attached to one merged AssertedInference
whose sources are the goals below the strategy and whose targets are the goals
above it.
"""

import logging

from ..core.exceptions import StrategyDangling
from ..core.strings import MultiLangString
from ..core.types import Declaration, Notation
from ..model.argumentation import (
    ArgumentPackage,
    ArgumentPackageBinding,
    ArgumentReasoning,
    AssertedContext,
    AssertedEvidence,
    AssertedInference,
    ArtifactReference,
    Claim,
)
from ..model.base import Element, TaggedValue
from ..model.document import ModelDocument
from ..model.gsn import (
    Assumption,
    AwayGoal,
    AwaySolution,
    Context,
    ContractModule,
    Decorators,
    Goal,
    GsnConnector,
    GsnModule,
    InContextOf,
    Justification,
    Solution,
    Strategy,
    SupportedBy,
)
from .mapping import ElementMapper, carry, require_valid
from .trace import TransformResult

logger = logging.getLogger(__name__)


def _tags(element: GsnConnector | Strategy, decorators: Decorators) -> list[TaggedValue]:
    return [*element.tagged_values, *decorators.to_tags()]


def gsn_to_sacm(doc: ModelDocument) -> TransformResult:
    """Transform every GSN element of ``doc``; other elements are copied as they are.

    Raises PreconditionFailed when ``doc`` has validation errors and
    StrategyDangling when a Strategy has no SupportedBy above it.
    """
    require_valid(doc, Notation.GSN)
    connectors = doc.of_type(SupportedBy)
    above: dict[str, list[SupportedBy]] = {}
    below: dict[str, list[SupportedBy]] = {}
    for connector in connectors:
        below.setdefault(connector.source_id, []).append(connector)
        above.setdefault(connector.target_id, []).append(connector)
    strategies = {s.gid for s in doc.of_type(Strategy)}
    for gid in strategies:
        if not above.get(gid):
            raise StrategyDangling(gid)
    collapsed = {
        c.gid for c in connectors if c.source_id in strategies or c.target_id in strategies
    }

    mapper = ElementMapper(doc)
    for element in doc:
        if isinstance(element, Strategy):
            _collapse_strategy(mapper, element, above[element.gid], below.get(element.gid, []))
        elif isinstance(element, SupportedBy):
            if element.gid not in collapsed:
                _map_supported_by(mapper, doc, element)
        elif isinstance(element, InContextOf):
            rel = carry(
                element,
                AssertedContext,
                gid=mapper.result_gid(element.gid, "context"),
                source_ids=[element.target_id],
                target_ids=[element.source_id],
                tagged_values=_tags(element, Decorators.of(element)),
            )
            mapper.emit(element.gid, rel, "InContextOf2AssertedContext")
        elif element.notation == Notation.GSN:
            _map_node(mapper, element)
        else:
            mapper.copy(element)
    result = mapper.finish()
    logger.info(f"GSN to SACM: {len(doc)} elements in, {len(result.document)} out")
    return result


def _map_node(mapper: ElementMapper, element: Element) -> None:
    gid = element.gid
    claim_gid = mapper.result_gid(gid, "claim")
    if isinstance(element, GsnModule):
        package = carry(element, ArgumentPackage, gid=mapper.result_gid(gid, "package"))
        mapper.emit(gid, package, "GsnModule2ArgumentPackage")
    elif isinstance(element, ContractModule):
        binding = carry(element, ArgumentPackageBinding, gid=mapper.result_gid(gid, "binding"))
        mapper.emit(gid, binding, "ContractModule2ArgumentPackageBinding")
    elif isinstance(element, Goal):
        declaration = Declaration.NEEDS_SUPPORT if element.undeveloped else element.declaration
        claim = carry(element, Claim, gid=claim_gid, declaration=declaration)
        mapper.emit(gid, claim, "Goal2Claim")
    elif isinstance(element, Assumption):
        claim = carry(element, Claim, gid=claim_gid, declaration=Declaration.ASSUMED)
        mapper.emit(gid, claim, "Assumption2Claim")
    elif isinstance(element, Justification):
        claim = carry(element, Claim, gid=claim_gid, declaration=Declaration.AXIOMATIC)
        mapper.emit(gid, claim, "Justification2Claim")
    elif isinstance(element, AwayGoal):
        claim = carry(
            element, Claim, gid=claim_gid, declaration=Declaration.AS_CITED, is_citation=True
        )
        if element.module_ref:
            claim.set_tag("gsn:module", element.module_ref)
        mapper.emit(gid, claim, "AwayGoal2Claim")
    elif isinstance(element, Context):
        content = element.content
        if not content and element.statement:
            content = MultiLangString.of(element.statement)
        if element.referenced_artifact is not None:
            ref_gid = mapper.result_gid(gid, "reference")
            ref = carry(element, ArtifactReference, gid=ref_gid, content=content)
            mapper.emit(gid, ref, "Context2ArtifactReference")
        else:
            claim = carry(
                element, Claim, gid=claim_gid, content=content, declaration=Declaration.AXIOMATIC
            )
            mapper.emit(gid, claim, "Context2Claim")
    elif isinstance(element, ArtifactReference):
        ref = carry(element, ArtifactReference, gid=mapper.result_gid(gid, "reference"))
        mapper.emit(gid, ref, f"{element.kind}2ArtifactReference")
    else:
        mapper.copy(element)


def _map_supported_by(mapper: ElementMapper, doc: ModelDocument, connector: SupportedBy) -> None:
    below = doc.get(connector.target_id)
    gid = connector.gid
    flipped = {
        "source_ids": [connector.target_id],
        "target_ids": [connector.source_id],
        "tagged_values": _tags(connector, Decorators.of(connector)),
    }
    if isinstance(below, (Solution, AwaySolution)):
        evidence_gid = mapper.result_gid(gid, "evidence")
        mapper.emit(
            gid,
            carry(connector, AssertedEvidence, gid=evidence_gid, **flipped),
            "SupportedBy2AssertedEvidence",
        )
    else:
        inference_gid = mapper.result_gid(gid, "inference")
        mapper.emit(
            gid,
            carry(connector, AssertedInference, gid=inference_gid, **flipped),
            "SupportedBy2AssertedInference",
        )


def _collapse_strategy(
    mapper: ElementMapper,
    strategy: Strategy,
    parents: list[SupportedBy],
    children: list[SupportedBy],
) -> None:
    reasoning_gid = mapper.result_gid(strategy.gid, "reasoning")
    reasoning = carry(strategy, ArgumentReasoning, gid=reasoning_gid)
    if strategy.undeveloped:
        reasoning.set_tag("gsn:undeveloped", "true")
    mapper.emit(strategy.gid, reasoning, "Strategy2ArgumentReasoning")
    if not children:
        mapper.warn(f"Strategy {strategy.gid} supports nothing; no inference produced")
        for connector in parents:
            mapper.trace(connector.gid, reasoning.gid, "SupportedBy2ArgumentReasoning")
        return

    targets: list[str] = []
    for connector in parents:
        if connector.source_id not in targets:
            targets.append(connector.source_id)
    edges = [*parents, *children]
    inference = AssertedInference(
        gid=mapper.result_gid(strategy.gid, "inference"),
        owner_gid=strategy.owner_gid,
        source_ids=[c.target_id for c in children],
        target_ids=targets,
        reasoning_id=strategy.gid,
        is_counter=any(c.is_counter for c in children),
        is_abstract=strategy.is_abstract or any(c.is_abstract for c in edges),
        tagged_values=Decorators.merge(Decorators.of(c) for c in edges).to_tags(),
    )
    mapper.place(inference)
    for connector in edges:
        mapper.trace(connector.gid, inference.gid, "Strategy2AssertedInference")
