"""Tests for claims, relationships and reasoning."""

import logging

import pytest

from acm_toolkit.core.exceptions import (
    InvalidArgument,
    KindMismatch,
    MissingElement,
    SelfReference,
)
from acm_toolkit.core.types import Declaration, RelationshipKind
from acm_toolkit.model import (
    Artifact,
    ArtifactPackage,
    AssertedEvidence,
    AssertedInference,
    Claim,
    add_artifact_reference,
    add_claim,
    add_reasoning,
    add_relationship,
    attach_meta_claim,
    attach_reasoning,
)

from .corpus import ls, sacm_base


@pytest.fixture
def doc():
    """Case with claims C1 and C2 and artifact A1."""
    doc = sacm_base()
    add_claim(doc, "AP", "C1", "All hazards have been mitigated", gid="C1")
    add_claim(doc, "AP", "C2", "Hazard H1 has been mitigated", gid="C2")
    doc.add(ArtifactPackage(gid="EV", name=ls("Evidence")), owner="ACP")
    doc.add(Artifact(gid="A1", name=ls("Hazard log")), owner="EV")
    return doc


class TestAddClaim:
    """Tests for add_claim."""

    def test_description_becomes_content(self, doc):
        """The description is stored as the claim's content."""
        claim = doc.get("C1")
        assert isinstance(claim, Claim)
        assert claim.name.content == "C1"
        assert claim.text() == "All hazards have been mitigated"
        assert claim.declaration == Declaration.ASSERTED

    def test_declaration_by_value(self, doc):
        """Declarations may be given by their wire value."""
        gid = add_claim(doc, "AP", "C3", declaration="needsSupport")
        assert doc.get(gid).declaration == Declaration.NEEDS_SUPPORT
        assert doc.get(gid).content is None

    def test_unknown_declaration(self, doc):
        """Unknown declarations are rejected."""
        with pytest.raises(InvalidArgument):
            add_claim(doc, "AP", "C3", declaration="probable")

    def test_package_kind(self, doc):
        """Claims belong in argument packages."""
        with pytest.raises(KindMismatch):
            add_claim(doc, "EV", "C3")


class TestAddRelationship:
    """Tests for add_relationship."""

    def test_inference(self, doc):
        """An inference joins a sub-claim to the claim it supports."""
        gid = add_relationship(doc, "AP", "AssertedInference", ["C2"], ["C1"])
        rel = doc.get(gid)
        assert isinstance(rel, AssertedInference)
        assert (rel.source_ids, rel.target_ids) == (["C2"], ["C1"])
        assert rel.owner_gid == "AP"
        assert rel.is_counter is False

    def test_evidence_from_reference(self, doc):
        """Evidence comes from artifact references."""
        ref = add_artifact_reference(doc, "AP", "A1", name="Hazard log")
        gid = add_relationship(doc, "AP", RelationshipKind.EVIDENCE, [ref], ["C1"])
        assert isinstance(doc.get(gid), AssertedEvidence)

    def test_evidence_from_claim(self, doc):
        """A claim cannot be evidence."""
        with pytest.raises(KindMismatch) as exc:
            add_relationship(doc, "AP", "AssertedEvidence", ["C2"], ["C1"])
        assert exc.value.rule == "AssertedEvidence"
        assert len(doc.of_type(AssertedEvidence)) == 0

    def test_missing_endpoint(self, doc):
        """Endpoints must resolve."""
        with pytest.raises(MissingElement):
            add_relationship(doc, "AP", "AssertedInference", ["C9"], ["C1"])

    def test_empty_side(self, doc):
        """Both sides need at least one endpoint."""
        with pytest.raises(KindMismatch):
            add_relationship(doc, "AP", "AssertedInference", [], ["C1"])

    def test_unknown_kind(self, doc):
        """Unknown relationship kinds are rejected."""
        with pytest.raises(InvalidArgument):
            add_relationship(doc, "AP", "AssertedRebuttal", ["C2"], ["C1"])

    def test_reference_must_resolve(self, doc):
        """Artifact references point at existing elements."""
        with pytest.raises(MissingElement):
            add_artifact_reference(doc, "AP", "A9")


class TestAttach:
    """Tests for attach_reasoning and attach_meta_claim."""

    def test_attach_reasoning(self, doc):
        """Reasoning is recorded on the relationship."""
        rel = add_relationship(doc, "AP", "AssertedInference", ["C2"], ["C1"])
        reasoning = add_reasoning(doc, "AP", "Argument over all identified hazards")
        attach_reasoning(doc, rel, reasoning)
        assert doc.get(rel).reasoning_id == reasoning

    def test_replace_reasoning_warns(self, doc, caplog):
        """Replacing reasoning logs a warning."""
        rel = add_relationship(doc, "AP", "AssertedInference", ["C2"], ["C1"])
        first = add_reasoning(doc, "AP", "first")
        second = add_reasoning(doc, "AP", "second")
        attach_reasoning(doc, rel, first)
        with caplog.at_level(logging.WARNING):
            attach_reasoning(doc, rel, second)
        assert doc.get(rel).reasoning_id == second
        assert "Replacing reasoning" in caplog.text

    def test_reasoning_kind(self, doc):
        """Only ArgumentReasoning can be attached."""
        rel = add_relationship(doc, "AP", "AssertedInference", ["C2"], ["C1"])
        with pytest.raises(KindMismatch):
            attach_reasoning(doc, rel, "C2")

    def test_meta_claim(self, doc):
        """Meta-claims are recorded once."""
        add_claim(doc, "AP", "M1", "The hazard log is complete", gid="M1")
        attach_meta_claim(doc, "C1", "M1")
        attach_meta_claim(doc, "C1", "M1")
        assert doc.get("C1").meta_claims == ["M1"]

    def test_meta_claim_on_relationship(self, doc):
        """Relationships are assertions too."""
        rel = add_relationship(doc, "AP", "AssertedInference", ["C2"], ["C1"])
        attach_meta_claim(doc, rel, "C2")
        assert doc.get(rel).meta_claims == ["C2"]

    def test_meta_claim_self(self, doc):
        """An assertion cannot be its own meta-claim."""
        with pytest.raises(SelfReference):
            attach_meta_claim(doc, "C1", "C1")
