"""Argument status evaluation: bottom-up propagation of evidence validity.

A claim *holds* when its status is supported, assumed or axiomatic. An
asserted claim is supported when it has at least one supporting edge and
every non-counter inference or evidence edge into it has only holding
sources (evidence sources must be marked valid). A counter edge whose sources
all hold defeats its target, whatever the target's declaration, unless the
target is a citation; citations take the status of the claim they cite.
Meta-claims do not take part.
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field

from ..core.exceptions import AcmError, PreconditionFailed
from ..core.types import ClaimStatus, Declaration, Notation
from ..model.argumentation import (
    AssertedEvidence,
    AssertedInference,
    AssertedRelationship,
    Assertion,
    ArtifactReference,
    Claim,
)
from ..model.citation import resolve_citation
from ..model.document import ModelDocument
from .diagnostics import has_errors
from .rules import check

logger = logging.getLogger(__name__)

HOLDS = frozenset({ClaimStatus.SUPPORTED, ClaimStatus.ASSUMED, ClaimStatus.AXIOMATIC})

DECLARED = {
    Declaration.AXIOMATIC: ClaimStatus.AXIOMATIC,
    Declaration.ASSUMED: ClaimStatus.ASSUMED,
    Declaration.NEEDS_SUPPORT: ClaimStatus.UNSUPPORTED,
    Declaration.DEFEATED: ClaimStatus.DEFEATED,
}


@dataclass
class Evaluation:
    """Claim statuses in document order, plus the evidence that had no entry."""

    statuses: dict[str, ClaimStatus] = field(default_factory=dict)
    unknown_evidence: list[str] = field(default_factory=list)
    roots: list[str] = field(default_factory=list)

    @property
    def roots_hold(self) -> bool:
        return all(self.statuses[gid] in HOLDS for gid in self.roots)

    def to_dict(self) -> dict[str, object]:
        return {
            "statuses": {gid: str(status) for gid, status in self.statuses.items()},
            "unknown_evidence": list(self.unknown_evidence),
            "roots": list(self.roots),
        }


class _Propagator:
    def __init__(self, doc: ModelDocument, evidence: Mapping[str, bool]) -> None:
        self.doc = doc
        self.evidence = evidence
        self.unknown: set[str] = set()
        self.memo: dict[str, ClaimStatus] = {}
        self.visiting: set[str] = set()
        self.support: dict[str, list[AssertedRelationship]] = {}
        self.counters: dict[str, list[AssertedRelationship]] = {}
        for rel in doc.of_type(AssertedRelationship):
            if rel.is_counter:
                for gid in rel.target_ids:
                    self.counters.setdefault(gid, []).append(rel)
            elif isinstance(rel, (AssertedInference, AssertedEvidence)):
                for gid in rel.target_ids:
                    self.support.setdefault(gid, []).append(rel)

    def evidence_valid(self, gid: str) -> bool:
        if gid not in self.evidence:
            if gid not in self.unknown:
                logger.warning(f"No evidence status for {gid}; treating it as invalid")
            self.unknown.add(gid)
            return False
        return bool(self.evidence[gid])

    def source_holds(self, gid: str) -> bool:
        element = self.doc.get(gid)
        if isinstance(element, ArtifactReference):
            return self.evidence_valid(gid)
        if isinstance(element, Assertion):
            return self.status(gid) in HOLDS
        return False

    def edge_holds(self, rel: AssertedRelationship) -> bool:
        return bool(rel.source_ids) and all(self.source_holds(g) for g in rel.source_ids)

    def defeated(self, gid: str) -> bool:
        return any(self.edge_holds(rel) for rel in self.counters.get(gid, []))

    def status(self, gid: str) -> ClaimStatus:
        if gid in self.memo:
            return self.memo[gid]
        if gid in self.visiting:
            return ClaimStatus.UNSUPPORTED
        self.visiting.add(gid)
        try:
            result = self._status(self.doc.get(gid))
        finally:
            self.visiting.discard(gid)
        self.memo[gid] = result
        return result

    def _status(self, element: object) -> ClaimStatus:
        assert isinstance(element, Assertion)
        if element.is_citation or element.declaration == Declaration.AS_CITED:
            terminal, _ = resolve_citation(element.gid, self.doc)
            if terminal == element.gid or not isinstance(self.doc.get(terminal), Assertion):
                return ClaimStatus.UNSUPPORTED
            return self.status(terminal)
        if self.defeated(element.gid):
            return ClaimStatus.DEFEATED
        if element.declaration in DECLARED:
            return DECLARED[element.declaration]
        if isinstance(element, AssertedRelationship):
            return ClaimStatus.SUPPORTED
        edges = [
            rel for rel in self.support.get(element.gid, []) if self.status(rel.gid) in HOLDS
        ]
        if edges and all(self.edge_holds(rel) for rel in edges):
            return ClaimStatus.SUPPORTED
        return ClaimStatus.UNSUPPORTED


def root_claims(doc: ModelDocument) -> list[str]:
    """Claims that support nothing, in document order."""
    supporting = {
        gid
        for rel in doc.of_type(AssertedRelationship)
        if not rel.is_counter and isinstance(rel, (AssertedInference, AssertedEvidence))
        for gid in rel.source_ids
    }
    return [c.gid for c in doc.of_type(Claim) if c.gid not in supporting]


def evaluate(doc: ModelDocument, evidence_status: Mapping[str, bool]) -> Evaluation:
    """Status of every Claim given the validity of the evidence references.

    GSN and CAE documents are transformed first; keys on both sides use the
    original gids. Raises PreconditionFailed when ``check`` reports errors or
    a citation chain does not resolve.
    """
    if doc.notation != Notation.SACM:
        return _evaluate_notation(doc, evidence_status)
    diagnostics = check(doc)
    if has_errors(diagnostics):
        raise PreconditionFailed(
            "Validation errors block evaluation", [d for d in diagnostics if d.is_error]
        )
    propagator = _Propagator(doc, evidence_status)
    statuses: dict[str, ClaimStatus] = {}
    try:
        for claim in doc.of_type(Claim):
            statuses[claim.gid] = propagator.status(claim.gid)
    except AcmError as exc:
        raise PreconditionFailed(f"Cannot evaluate: {exc}") from exc
    result = Evaluation(
        statuses=statuses, unknown_evidence=sorted(propagator.unknown), roots=root_claims(doc)
    )
    logger.info(
        f"Evaluated {len(statuses)} claims, {len(result.unknown_evidence)} unknown evidence"
    )
    return result


def _evaluate_notation(doc: ModelDocument, evidence_status: Mapping[str, bool]) -> Evaluation:
    from ..transform import cae_to_sacm, gsn_to_sacm

    transformed = gsn_to_sacm(doc) if doc.notation == Notation.GSN else cae_to_sacm(doc)
    back: dict[str, str] = {}
    for link in transformed.links:
        back.setdefault(link.result_gid, link.source_gid)
    forward = {source: result for result, source in back.items()}
    evidence = {forward.get(gid, gid): valid for gid, valid in evidence_status.items()}
    inner = evaluate(transformed.document, evidence)

    statuses = {}
    for element in doc.of_type(Claim):
        result_gid = forward.get(element.gid)
        if result_gid in inner.statuses:
            statuses[element.gid] = inner.statuses[result_gid]
    return Evaluation(
        statuses=statuses,
        unknown_evidence=sorted(back.get(gid, gid) for gid in inner.unknown_evidence),
        roots=[back.get(gid, gid) for gid in inner.roots if back.get(gid, gid) in statuses],
    )
