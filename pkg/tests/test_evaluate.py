"""Tests for argument status evaluation."""

import itertools

import pytest

from acm_toolkit.core.exceptions import PreconditionFailed
from acm_toolkit.core.types import ClaimStatus, Declaration
from acm_toolkit.model import AssertedInference
from acm_toolkit.validate import HOLDS, evaluate, root_claims

from .corpus import (
    ETCS_EVIDENCE,
    SEEDED,
    WELL_FORMED,
    cae_r2,
    claim,
    etcs,
    evidence_tree,
    gsn_declarations,
    seeded_sacm_w4,
)

TREE, LEAVES = evidence_tree()
EVIDENCE_GIDS = [gid for refs in LEAVES.values() for gid in refs]


def assignments():
    for values in itertools.product([False, True], repeat=len(EVIDENCE_GIDS)):
        yield dict(zip(EVIDENCE_GIDS, values, strict=True))


class TestEvidenceTree:
    """Truth table over the six evidence references of the tree."""

    def test_truth_table(self):
        """A claim is supported exactly when all evidence beneath it is valid."""
        for evidence in assignments():
            result = evaluate(TREE, evidence)
            for sub, refs in LEAVES.items():
                expected = all(evidence[r] for r in refs)
                assert (result.statuses[sub] == ClaimStatus.SUPPORTED) is expected
            assert result.roots_hold is all(evidence.values())
            assert result.unknown_evidence == []

    def test_monotone(self):
        """Making more evidence valid never loses a holding claim."""
        for evidence in assignments():
            before = evaluate(TREE, evidence).statuses
            for gid in EVIDENCE_GIDS:
                if evidence[gid]:
                    continue
                after = evaluate(TREE, {**evidence, gid: True}).statuses
                for claim_gid, status in before.items():
                    if status in HOLDS:
                        assert after[claim_gid] in HOLDS

    def test_roots(self):
        """Only the top claim supports nothing."""
        assert root_claims(TREE) == ["ROOT"]
        assert evaluate(TREE, {}).roots == ["ROOT"]


class TestDeclarations:
    """Declared statuses and counter relationships."""

    def test_unknown_evidence_is_invalid(self, caplog):
        """Missing evidence entries count as invalid and are listed."""
        doc = WELL_FORMED["evidenced"]()
        result = evaluate(doc, {})
        assert result.statuses["C1"] == ClaimStatus.UNSUPPORTED
        assert result.unknown_evidence == ["S1"]
        assert "No evidence status for S1" in caplog.text
        assert evaluate(doc, {"S1": True}).statuses["C1"] == ClaimStatus.SUPPORTED

    def test_counter_defeats(self):
        """A holding counter inference defeats its target."""
        result = evaluate(WELL_FORMED["countered"](), {})
        assert result.statuses == {"C1": ClaimStatus.DEFEATED, "C2": ClaimStatus.AXIOMATIC}
        assert result.roots == ["C1", "C2"]
        assert not result.roots_hold

    def test_counter_beats_declaration(self):
        """An axiomatic claim is still defeated by a holding counter."""
        doc = WELL_FORMED["inferred"]()
        doc.get("C1").declaration = Declaration.AXIOMATIC
        doc.get("C2").declaration = Declaration.ASSUMED
        doc.get("R1").is_counter = True
        assert evaluate(doc, {}).statuses["C1"] == ClaimStatus.DEFEATED

    def test_failed_counter(self):
        """A counter whose source does not hold has no effect."""
        doc = WELL_FORMED["inferred"]()
        doc.get("C1").declaration = Declaration.ASSUMED
        doc.get("R1").is_counter = True
        assert evaluate(doc, {}).statuses["C1"] == ClaimStatus.ASSUMED

    def test_needs_support(self):
        """needsSupport claims are unsupported even with support."""
        doc = WELL_FORMED["inferred"]()
        doc.get("C1").declaration = Declaration.NEEDS_SUPPORT
        doc.get("C2").declaration = Declaration.AXIOMATIC
        assert evaluate(doc, {}).statuses["C1"] == ClaimStatus.UNSUPPORTED

    def test_unsupported_leaf(self):
        """An asserted claim with nothing beneath it is unsupported."""
        result = evaluate(WELL_FORMED["inferred"](), {})
        assert result.statuses == {
            "C1": ClaimStatus.UNSUPPORTED,
            "C2": ClaimStatus.UNSUPPORTED,
        }

    def test_citation_takes_cited_status(self):
        """Citations take the status of the claim they cite."""
        doc = WELL_FORMED["cited"]()
        doc.get("C2").declaration = Declaration.AXIOMATIC
        result = evaluate(doc, {})
        assert result.statuses["C1"] == ClaimStatus.SUPPORTED
        assert result.statuses["API.C1"] == ClaimStatus.SUPPORTED

    def test_defeated_relationship_cuts_support(self):
        """A support edge that is itself defeated does not count."""
        doc = WELL_FORMED["inferred"]()
        doc.get("C2").declaration = Declaration.AXIOMATIC
        doc.add(claim("C3", declaration=Declaration.AXIOMATIC), owner="AP")
        rebuttal = AssertedInference(
            gid="R2", source_ids=["C3"], target_ids=["R1"], is_counter=True
        )
        doc.add(rebuttal, owner="AP")
        assert evaluate(doc, {}).statuses["C1"] == ClaimStatus.UNSUPPORTED


class TestIntegratedCase:
    """Evaluation across packages."""

    def test_etcs_roots_hold(self):
        """With both component tests valid the integrated claim holds."""
        result = evaluate(etcs(), ETCS_EVIDENCE)
        assert result.statuses["APB1.G1"] == ClaimStatus.SUPPORTED
        assert result.statuses["APB1.G2"] == ClaimStatus.SUPPORTED
        assert result.roots_hold

    def test_etcs_one_component_fails(self):
        """A failing component test propagates through the citations."""
        result = evaluate(etcs(), {**ETCS_EVIDENCE, "TS.AP.E1": False})
        assert result.statuses["TS.API.G3"] == ClaimStatus.UNSUPPORTED
        assert result.statuses["APB1.G3"] == ClaimStatus.UNSUPPORTED
        assert result.statuses["APB1.G1"] == ClaimStatus.UNSUPPORTED
        assert result.statuses["OB.AP.G2"] == ClaimStatus.SUPPORTED
        assert not result.roots_hold

    def test_to_dict(self):
        """Statuses serialise as their wire values."""
        data = evaluate(etcs(), ETCS_EVIDENCE).to_dict()
        assert data["statuses"]["APB1.G1"] == "supported"
        assert data["unknown_evidence"] == []
        assert "APB1.G1" in data["roots"]


class TestPreconditions:
    """Documents that cannot be evaluated."""

    def test_validation_errors(self):
        """Validation errors block evaluation."""
        with pytest.raises(PreconditionFailed) as exc:
            evaluate(SEEDED["SACM-E1"](), {})
        assert exc.value.diagnostics[0].rule_id == "SACM-E1"

    def test_citation_cycle(self):
        """A citation cycle cannot be resolved."""
        with pytest.raises(PreconditionFailed):
            evaluate(seeded_sacm_w4(), {})


class TestOtherNotations:
    """GSN and CAE documents are evaluated through their SACM form."""

    @pytest.mark.parametrize("sn1,sn2", list(itertools.product([False, True], repeat=2)))
    def test_r1(self, r1, sn1, sn2):
        """G1 holds exactly when both solutions are valid."""
        result = evaluate(r1, {"Sn1": sn1, "Sn2": sn2})
        assert set(result.statuses) == {"G1", "G2", "G3"}
        assert (result.statuses["G2"] == ClaimStatus.SUPPORTED) is sn1
        assert (result.statuses["G1"] == ClaimStatus.SUPPORTED) is (sn1 and sn2)
        assert result.roots == ["G1"]

    def test_r1_unknown_evidence(self, r1):
        """Unknown evidence is reported under its GSN gid."""
        assert evaluate(r1, {"Sn1": True}).unknown_evidence == ["Sn2"]

    def test_declarations(self):
        """GSN declarations carry over; undeveloped goals are unsupported."""
        statuses = evaluate(gsn_declarations(), {}).statuses
        assert statuses["G2"] == ClaimStatus.UNSUPPORTED
        assert statuses["A1"] == ClaimStatus.ASSUMED
        assert statuses["J1"] == ClaimStatus.AXIOMATIC
        assert statuses["AG1"] == ClaimStatus.UNSUPPORTED

    def test_r2(self):
        """CAE evidence keys use the CAE gids."""
        result = evaluate(cae_r2(), {"E1": True, "E2": True})
        assert result.statuses["C1"] == ClaimStatus.SUPPORTED
        assert result.roots == ["C1"]
        assert evaluate(cae_r2(), {"E1": True, "E2": False}).roots_hold is False
