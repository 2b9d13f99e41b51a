"""Hand-built documents shared by the tests.

``SEEDED`` holds one document per catalog rule, each violating exactly that
rule. ``WELL_FORMED`` holds documents that must check clean. The reference
structures (R1, R2, ETCS, the pattern) are built by their own functions.
"""

from collections.abc import Callable

from acm_toolkit.core.strings import ExpressionLangString, LangString, MultiLangString
from acm_toolkit.core.types import Declaration, Notation
from acm_toolkit.model import (
    Argument,
    ArgumentPackage,
    ArgumentPackageBinding,
    ArgumentPackageInterface,
    ArgumentReasoning,
    Artifact,
    ArtifactGroup,
    ArtifactPackage,
    ArtifactReference,
    AssertedContext,
    AssertedEvidence,
    AssertedInference,
    Assumption,
    AssuranceCasePackage,
    AssuranceCasePackageBinding,
    AwayGoal,
    CAEClaim,
    CAEModule,
    Category,
    ChoiceGroup,
    Claim,
    Context,
    Evidence,
    Expression,
    Goal,
    GsnModule,
    InContextOf,
    IsEvidenceFor,
    IsSubClaimOf,
    Justification,
    ModelDocument,
    Solution,
    Strategy,
    SupportedBy,
    Supports,
    Term,
    TerminologyPackage,
    build_cae_structure,
    build_goal_structure,
    create_model,
    relate_assets,
    set_external_resource,
)


def ls(text: str, lang: str = "en") -> LangString:
    return LangString(lang=lang, content=text)


def ml(text: str, lang: str = "en") -> MultiLangString:
    return MultiLangString.of(text, lang)


def claim(gid: str, text: str = "", **fields) -> Claim:
    return Claim(gid=gid, name=ls(gid), content=ml(text or f"Claim {gid}"), **fields)


def sacm_base() -> ModelDocument:
    """Assurance case ``ACP`` holding argument package ``AP``."""
    doc = create_model("Case", gid="ACP")
    doc.add(ArgumentPackage(gid="AP", name=ls("Argument")), owner="ACP")
    return doc


def gsn_base() -> ModelDocument:
    doc = ModelDocument(notation=Notation.GSN)
    doc.add(GsnModule(gid="M", name=ls("Module")))
    return doc


def _goal(gid: str, text: str = "", **fields) -> Goal:
    return Goal(gid=gid, name=ls(gid), content=ml(text or f"Goal {gid}"), **fields)


# =============================================================================
# Seeded violations, one rule each
# =============================================================================
def seeded_gsn_e1() -> ModelDocument:
    doc = gsn_base()
    doc.add(_goal("G1"), owner="M")
    doc.add(Strategy(gid="S1", content=ml("Argument over hazards")), owner="M")
    doc.add(Solution(gid="Sn1", content=ml("Test report")), owner="M")
    doc.add(SupportedBy(gid="SB1", source_ids=["G1"], target_ids=["S1"]), owner="M")
    # Solution above a Strategy
    doc.add(SupportedBy(gid="SB2", source_ids=["Sn1"], target_ids=["S1"]), owner="M")
    return doc


def seeded_gsn_e2() -> ModelDocument:
    doc = gsn_base()
    doc.add(_goal("G1"), owner="M")
    doc.add(_goal("G2"), owner="M")
    doc.add(InContextOf(gid="IC1", source_ids=["G1"], target_ids=["G2"]), owner="M")
    return doc


def seeded_gsn_e3() -> ModelDocument:
    doc = gsn_base()
    doc.add(_goal("G1", undeveloped=True), owner="M")
    doc.add(_goal("G2"), owner="M")
    doc.add(SupportedBy(gid="SB1", source_ids=["G1"], target_ids=["G2"]), owner="M")
    return doc


def seeded_gsn_e4() -> ModelDocument:
    doc = gsn_base()
    doc.add(_goal("G1"), owner="M")
    doc.add(AwayGoal(gid="AG1", content=ml("The component is safe")), owner="M")
    doc.add(SupportedBy(gid="SB1", source_ids=["G1"], target_ids=["AG1"]), owner="M")
    return doc


def seeded_sacm_e1() -> ModelDocument:
    doc = sacm_base()
    doc.add(claim("C1"), owner="AP")
    doc.add(claim("C2"), owner="AP")
    doc.add(AssertedEvidence(gid="R1", source_ids=["C2"], target_ids=["C1"]), owner="AP")
    return doc


def seeded_sacm_e2() -> ModelDocument:
    doc = sacm_base()
    doc.add(claim("C1"), owner="AP")
    doc.add(AssertedInference(gid="R1", source_ids=["C9"], target_ids=["C1"]), owner="AP")
    return doc


def seeded_sacm_w3() -> ModelDocument:
    doc = sacm_base()
    doc.add(claim("C1", is_citation=True), owner="AP")
    return doc


def seeded_sacm_w4() -> ModelDocument:
    doc = sacm_base()
    cited = Declaration.AS_CITED
    doc.add(claim("A", is_citation=True, cited_element="B", declaration=cited), owner="AP")
    doc.add(claim("B", is_citation=True, cited_element="A", declaration=cited), owner="AP")
    return doc


def seeded_sacm_w5() -> ModelDocument:
    doc = sacm_base()
    doc.add(claim("C1"), owner="AP")
    doc.add(claim("C2"), owner="AP")
    doc.add(AssertedInference(gid="R1", source_ids=["C2"], target_ids=["C1"]), owner="AP")
    doc.add(AssertedInference(gid="R2", source_ids=["C1"], target_ids=["C2"]), owner="AP")
    return doc


def seeded_sacm_w6() -> ModelDocument:
    doc = sacm_base()
    for gid in ("C1", "C2", "C3"):
        doc.add(claim(gid), owner="AP")
    doc.add(
        AssertedInference(gid="R1", source_ids=["C3"], target_ids=["C1", "C2"]), owner="AP"
    )
    return doc


def seeded_sacm_w7() -> ModelDocument:
    doc = sacm_base()
    doc.add(ArtifactPackage(gid="EV", name=ls("Evidence")), owner="ACP")
    doc.add(Artifact(gid="A1", name=ls("Hazard log")), owner="EV")
    relate_assets(doc, ["A1"], ["A1"])
    return doc


def seeded_sacm_w8() -> ModelDocument:
    doc = sacm_base()
    doc.add(claim("C1"), owner="AP")
    doc.add(TerminologyPackage(gid="TP", name=ls("Terms")), owner="ACP")
    term = Term(
        gid="T1", name=ls("C1"), value="C1", external_reference="hazardLog.model", origin="C1"
    )
    doc.add(term, owner="TP")
    return doc


def seeded_sacm_w9() -> ModelDocument:
    doc = sacm_base()
    doc.add(claim("C2"), owner="AP")
    text = ExpressionLangString(lang="en", content="Hazard H1 is mitigated", expression_ref="C2")
    doc.add(Claim(gid="C1", content=MultiLangString([text])), owner="AP")
    return doc


def seeded_sacm_w10() -> ModelDocument:
    doc = sacm_base()
    doc.add(claim("C1", declaration=Declaration.DEFEATED), owner="AP")
    return doc


def seeded_sacm_w11() -> ModelDocument:
    doc = sacm_base()
    doc.add(ArgumentPackageInterface(gid="API", name=ls("Interface")), owner="ACP")
    doc.add(claim("C1"), owner="API")
    return doc


def seeded_sacm_w12() -> ModelDocument:
    doc = sacm_base()
    binding = ArgumentPackageBinding(gid="APB", participant_packages=["AP"])
    doc.add(binding, owner="ACP")
    return doc


def seeded_sacm_w13() -> ModelDocument:
    doc = sacm_base()
    doc.add(ArtifactPackage(gid="EV", name=ls("Evidence")), owner="ACP")
    doc.add(ArtifactGroup(gid="GR1", member_ids=["GR2"]), owner="EV")
    doc.add(ArtifactGroup(gid="GR2", member_ids=["GR1"]), owner="EV")
    return doc


def seeded_sacm_w14() -> ModelDocument:
    doc = sacm_base()
    doc.add(claim("C1"), owner="AP")
    doc.add(TerminologyPackage(gid="TP", name=ls("Terms")), owner="ACP")
    doc.add(Category(gid="CAT1", name=ls("Hazard"), member_ids=["C1"]), owner="TP")
    return doc


def seeded_sacm_w15() -> ModelDocument:
    doc = sacm_base()
    doc.add(TerminologyPackage(gid="TP", name=ls("Terms")), owner="ACP")
    doc.add(Expression(gid="X1", value="{System X} is safe"), owner="TP")
    return doc


SEEDED: dict[str, Callable[[], ModelDocument]] = {
    "GSN-E1": seeded_gsn_e1,
    "GSN-E2": seeded_gsn_e2,
    "GSN-E3": seeded_gsn_e3,
    "GSN-E4": seeded_gsn_e4,
    "SACM-E1": seeded_sacm_e1,
    "SACM-E2": seeded_sacm_e2,
    "SACM-W3": seeded_sacm_w3,
    "SACM-W4": seeded_sacm_w4,
    "SACM-W5": seeded_sacm_w5,
    "SACM-W6": seeded_sacm_w6,
    "SACM-W7": seeded_sacm_w7,
    "SACM-W8": seeded_sacm_w8,
    "SACM-W9": seeded_sacm_w9,
    "SACM-W10": seeded_sacm_w10,
    "SACM-W11": seeded_sacm_w11,
    "SACM-W12": seeded_sacm_w12,
    "SACM-W13": seeded_sacm_w13,
    "SACM-W14": seeded_sacm_w14,
    "SACM-W15": seeded_sacm_w15,
}


# =============================================================================
# Well-formed documents
# =============================================================================
def inferred_claim() -> ModelDocument:
    """C1 inferred from C2."""
    doc = sacm_base()
    doc.add(claim("C1", "All hazards have been mitigated"), owner="AP")
    doc.add(claim("C2", "Hazard H1 has been mitigated"), owner="AP")
    doc.add(AssertedInference(gid="R1", source_ids=["C2"], target_ids=["C1"]), owner="AP")
    return doc


def evidenced_claim() -> ModelDocument:
    """Artifact reference S1 provides evidence for C1."""
    doc = sacm_base()
    doc.add(ArtifactPackage(gid="EV", name=ls("Evidence")), owner="ACP")
    doc.add(Artifact(gid="A1", name=ls("System test report")), owner="EV")
    set_external_resource(doc, "A1", "reports/system-test.pdf")
    doc.add(claim("C1", "The system is tested"), owner="AP")
    doc.add(ArtifactReference(gid="S1", referenced_artifact="A1"), owner="AP")
    doc.add(AssertedEvidence(gid="R1", source_ids=["S1"], target_ids=["C1"]), owner="AP")
    return doc


def countered_claim() -> ModelDocument:
    """C1 defeated by a counter inference from C2."""
    doc = sacm_base()
    doc.add(claim("C1", "Hazard H1 is mitigated", declaration=Declaration.DEFEATED), owner="AP")
    rebuttal = claim("C2", "Mitigation M1 fails", declaration=Declaration.AXIOMATIC)
    doc.add(rebuttal, owner="AP")
    rel = AssertedInference(gid="R1", source_ids=["C2"], target_ids=["C1"], is_counter=True)
    doc.add(rel, owner="AP")
    return doc


def reasoned_inference() -> ModelDocument:
    """An inference with reasoning attached and a context claim."""
    doc = inferred_claim()
    reasoning = ArgumentReasoning(gid="S1", content=ml("Argument over all identified hazards"))
    doc.add(reasoning, owner="AP")
    doc.get("R1").reasoning_id = "S1"
    context = claim("C3", "All hazards have been identified", declaration=Declaration.ASSUMED)
    doc.add(context, owner="AP")
    doc.add(AssertedContext(gid="R2", source_ids=["C3"], target_ids=["S1"]), owner="AP")
    return doc


def cited_claim() -> ModelDocument:
    """An interface exposing a citation of C1."""
    doc = inferred_claim()
    doc.add(ArgumentPackageInterface(gid="API", name=ls("Interface")), owner="ACP")
    cited = Claim(
        gid="API.C1",
        is_citation=True,
        cited_element="C1",
        declaration=Declaration.AS_CITED,
    )
    doc.add(cited, owner="API")
    return doc


WELL_FORMED: dict[str, Callable[[], ModelDocument]] = {
    "inferred": inferred_claim,
    "evidenced": evidenced_claim,
    "countered": countered_claim,
    "reasoned": reasoned_inference,
    "cited": cited_claim,
}


# =============================================================================
# Reference structures
# =============================================================================
def gsn_r1() -> ModelDocument:
    """Goal, Strategy, two sub-goals, two solutions and one context."""
    doc = ModelDocument(notation=Notation.GSN)
    doc.add(ArtifactPackage(gid="EV", name=ls("Evidence")))
    doc.add(Artifact(gid="A1", name=ls("Hazard H1 analysis")), owner="EV")
    doc.add(Artifact(gid="A2", name=ls("Hazard H2 analysis")), owner="EV")
    nodes = [
        _goal("G1", "The system is acceptably safe"),
        Strategy(gid="S1", name=ls("S1"), content=ml("Argument over each identified hazard")),
        _goal("G2", "Hazard H1 is mitigated"),
        _goal("G3", "Hazard H2 is mitigated"),
        Solution(gid="Sn1", content=ml("H1 analysis"), referenced_artifact="A1"),
        Solution(gid="Sn2", content=ml("H2 analysis"), referenced_artifact="A2"),
        Context(gid="C1", statement="Operating context of the system"),
    ]
    connectors = [
        SupportedBy(gid="SB1", source_ids=["G1"], target_ids=["S1"]),
        SupportedBy(gid="SB2", source_ids=["S1"], target_ids=["G2"]),
        SupportedBy(gid="SB3", source_ids=["S1"], target_ids=["G3"]),
        SupportedBy(gid="SB4", source_ids=["G2"], target_ids=["Sn1"]),
        SupportedBy(gid="SB5", source_ids=["G3"], target_ids=["Sn2"]),
        InContextOf(gid="IC1", source_ids=["G1"], target_ids=["C1"]),
    ]
    build_goal_structure(doc, GsnModule(gid="M1", name=ls("R1")), nodes, connectors)
    return doc


def gsn_declarations() -> ModelDocument:
    """One GSN element per declaration equivalence."""
    doc = ModelDocument(notation=Notation.GSN)
    build_goal_structure(doc, GsnModule(gid="M2", name=ls("Component")), [_goal("M2.G1")], [])
    nodes = [
        _goal("G1", "The system is safe"),
        _goal("G2", "Hazard H1 is mitigated", undeveloped=True),
        Assumption(gid="A1", content=ml("All hazards have been identified")),
        Justification(gid="J1", content=ml("The hazard analysis method is accepted")),
        Context(gid="C1", statement="Operating context"),
        AwayGoal(
            gid="AG1",
            content=ml("The component is safe"),
            is_citation=True,
            cited_element="M2.G1",
            module_ref="M2",
        ),
    ]
    connectors = [
        SupportedBy(gid="SB1", source_ids=["G1"], target_ids=["G2"]),
        SupportedBy(gid="SB2", source_ids=["G1"], target_ids=["AG1"]),
        InContextOf(gid="IC1", source_ids=["G1"], target_ids=["A1"]),
        InContextOf(gid="IC2", source_ids=["G1"], target_ids=["J1"]),
        InContextOf(gid="IC3", source_ids=["G1"], target_ids=["C1"]),
    ]
    build_goal_structure(doc, GsnModule(gid="M1", name=ls("System")), nodes, connectors)
    return doc


def cae_r2() -> ModelDocument:
    """Claim supported by an Argument over two evidenced sub-claims."""
    doc = ModelDocument(notation=Notation.CAE)
    doc.add(ArtifactPackage(gid="EV", name=ls("Evidence")))
    doc.add(Artifact(gid="A1", name=ls("Brake test")), owner="EV")
    doc.add(Artifact(gid="A2", name=ls("Door test")), owner="EV")
    nodes = [
        CAEClaim(gid="C1", content=ml("The train is safe")),
        Argument(gid="Arg1", content=ml("Argument over subsystems")),
        CAEClaim(gid="C2", content=ml("Braking is safe")),
        CAEClaim(gid="C3", content=ml("Door control is safe")),
        Evidence(gid="E1", referenced_artifact="A1"),
        Evidence(gid="E2", referenced_artifact="A2"),
    ]
    connectors = [
        Supports(gid="SU1", source_ids=["Arg1"], target_ids=["C1"]),
        IsSubClaimOf(gid="SC1", source_ids=["C2"], target_ids=["C1"]),
        IsSubClaimOf(gid="SC2", source_ids=["C3"], target_ids=["C1"]),
        IsEvidenceFor(gid="EF1", source_ids=["E1"], target_ids=["C2"]),
        IsEvidenceFor(gid="EF2", source_ids=["E2"], target_ids=["C3"]),
    ]
    build_cae_structure(doc, CAEModule(gid="M1", name=ls("R2")), nodes, connectors)
    return doc


def _component(doc: ModelDocument, prefix: str, name: str, top: str, text: str) -> None:
    """A component assurance case exposing its top claim through an interface."""
    acp, ap, api, ev = prefix, f"{prefix}.AP", f"{prefix}.API", f"{prefix}.EV"
    doc.add(AssuranceCasePackage(gid=acp, name=ls(name)))
    doc.add(ArgumentPackage(gid=ap, name=ls(f"{name} argument")), owner=acp)
    doc.add(ArgumentPackageInterface(gid=api, name=ls(f"{name} interface")), owner=acp)
    doc.add(ArtifactPackage(gid=ev, name=ls(f"{name} evidence")), owner=acp)
    doc.add(Artifact(gid=f"{ev}.A1", name=ls(f"{name} test report")), owner=ev)
    set_external_resource(doc, f"{ev}.A1", f"{prefix.lower()}-tests.pdf")
    doc.add(claim(f"{ap}.{top}", text), owner=ap)
    doc.add(ArtifactReference(gid=f"{ap}.E1", referenced_artifact=f"{ev}.A1"), owner=ap)
    evidence = AssertedEvidence(
        gid=f"{ap}.R1", source_ids=[f"{ap}.E1"], target_ids=[f"{ap}.{top}"]
    )
    doc.add(evidence, owner=ap)
    citation = Claim(
        gid=f"{api}.{top}",
        is_citation=True,
        cited_element=f"{ap}.{top}",
        declaration=Declaration.AS_CITED,
    )
    doc.add(citation, owner=api)


def etcs() -> ModelDocument:
    """On-board and track-side assurance cases integrated through a binding."""
    doc = ModelDocument(notation=Notation.SACM)
    _component(doc, "OB", "On-Board ACP", "G2", "The on-board component is safe")
    _component(doc, "TS", "Track-Side ACP", "G3", "The track-side component is safe")
    doc.add(TerminologyPackage(gid="OB.TP", name=ls("On-board terms")), owner="OB")
    term = Term(gid="OB.T1", name=ls("H1"), value="H1", external_reference="hazardLog.model")
    doc.add(term, owner="OB.TP")

    doc.add(AssuranceCasePackage(gid="INT", name=ls("Integration ACP")))
    binding = AssuranceCasePackageBinding(
        gid="INT.ACPB", name=ls("Integration ACPB"), participant_packages=["OB", "TS"]
    )
    doc.add(binding, owner="INT")
    apb = ArgumentPackageBinding(
        gid="APB1", name=ls("APB1"), participant_packages=["OB.API", "TS.API"]
    )
    doc.add(apb, owner="INT.ACPB")
    doc.add(claim("APB1.G1", "ETCS is acceptably safe"), owner="APB1")
    for top, component in (("G2", "OB"), ("G3", "TS")):
        cited = Claim(
            gid=f"APB1.{top}",
            is_citation=True,
            cited_element=f"{component}.API.{top}",
            declaration=Declaration.AS_CITED,
        )
        doc.add(cited, owner="APB1")
    inference = AssertedInference(
        gid="APB1.R1", source_ids=["APB1.G2", "APB1.G3"], target_ids=["APB1.G1"]
    )
    doc.add(inference, owner="APB1")
    return doc


ETCS_EVIDENCE = {"OB.AP.E1": True, "TS.AP.E1": True}


def gsn_pattern() -> ModelDocument:
    """Abstract module P: "{System X} is safe", argued over each {function}.

    SB2 carries a Many decorator and IC2 an Optional one.
    """
    doc = ModelDocument(notation=Notation.GSN)
    nodes = [
        _goal("G1", "{System X} is safe", is_abstract=True),
        Strategy(
            gid="S1", content=ml("Argument over each function of {System X}"), is_abstract=True
        ),
        _goal("G2", "{function} of {System X} is safe", is_abstract=True),
        Solution(gid="Sn1", content=ml("Test report for {function}"), is_abstract=True),
        Context(gid="C1", statement="{System X} operating context", is_abstract=True),
        Assumption(
            gid="A1", content=ml("{System X} stays within its operating limits"), is_abstract=True
        ),
    ]
    connectors = [
        SupportedBy(gid="SB1", source_ids=["G1"], target_ids=["S1"]),
        SupportedBy(
            gid="SB2",
            source_ids=["S1"],
            target_ids=["G2"],
            many_label="n = number of functions",
        ),
        SupportedBy(gid="SB3", source_ids=["G2"], target_ids=["Sn1"]),
        InContextOf(gid="IC1", source_ids=["G1"], target_ids=["C1"]),
        InContextOf(gid="IC2", source_ids=["G1"], target_ids=["A1"], optional_flag=True),
    ]
    module = GsnModule(gid="P", name=ls("Safety pattern"), is_abstract=True)
    build_goal_structure(doc, module, nodes, connectors)
    return doc


PATTERN_BINDINGS = {
    "roles": {"System X": ["Trainset 7"], "function": ["Braking", "Door Control"]},
    "connectors": {"SB2": {"count": 2}, "IC2": {"chosen": True}},
}


def choice_pattern() -> ModelDocument:
    """Abstract module Q whose goal is supported by one of two solutions."""
    doc = ModelDocument(notation=Notation.GSN)
    group = ChoiceGroup("evidence", 1, 1)
    nodes = [
        _goal("QG1", "{System X} is safe", is_abstract=True),
        Solution(gid="QSn1", content=ml("Test report")),
        Solution(gid="QSn2", content=ml("Formal proof")),
    ]
    connectors = [
        SupportedBy(gid="QSB1", source_ids=["QG1"], target_ids=["QSn1"], choice_group=group),
        SupportedBy(gid="QSB2", source_ids=["QG1"], target_ids=["QSn2"], choice_group=group),
    ]
    build_goal_structure(doc, GsnModule(gid="Q", is_abstract=True), nodes, connectors)
    return doc


def evidence_tree() -> tuple[ModelDocument, dict[str, list[str]]]:
    """Root claim over three sub-claims, each resting on two evidence references.

    Returns the document and, per sub-claim, its evidence reference gids.
    """
    doc = sacm_base()
    doc.add(ArtifactPackage(gid="EV", name=ls("Evidence")), owner="ACP")
    doc.add(claim("ROOT", "The system is safe"), owner="AP")
    leaves: dict[str, list[str]] = {}
    subs = []
    for i in range(1, 4):
        sub = f"C{i}"
        subs.append(sub)
        doc.add(claim(sub), owner="AP")
        leaves[sub] = []
        for j in range(1, 3):
            artifact, ref = f"A{i}{j}", f"E{i}{j}"
            doc.add(Artifact(gid=artifact, name=ls(f"Report {i}.{j}")), owner="EV")
            doc.add(ArtifactReference(gid=ref, referenced_artifact=artifact), owner="AP")
            edge = AssertedEvidence(gid=f"R{i}{j}", source_ids=[ref], target_ids=[sub])
            doc.add(edge, owner="AP")
            leaves[sub].append(ref)
    doc.add(AssertedInference(gid="R0", source_ids=subs, target_ids=["ROOT"]), owner="AP")
    return doc, leaves
