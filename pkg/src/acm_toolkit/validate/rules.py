"""Well-formedness checks over SACM, GSN and CAE documents."""

import logging
from collections.abc import Callable, Iterator

import networkx as nx

from ..core.exceptions import UnbalancedBraces
from ..core.strings import ExpressionLangString
from ..core.types import Declaration
from ..model.argumentation import AssertedInference, AssertedRelationship, Assertion
from ..model.artifact import ArtifactAsset, ArtifactAssetRelationship, ArtifactGroup
from ..model.base import ArtifactElement, Element, Package, PackageBinding, PackageInterface
from ..model.document import ModelDocument
from ..model.gsn import AwayGoal, Goal, GsnConnector, InContextOf, Strategy, SupportedBy
from ..model.terminology import (
    Category,
    Expression,
    ExpressionElement,
    TerminologyAsset,
    TerminologyGroup,
    TerminologyPackage,
    Term,
    placeholder_mismatch,
)
from .diagnostics import (
    GSN_E1,
    GSN_E2,
    GSN_E3,
    GSN_E4,
    SACM_E1,
    SACM_E2,
    SACM_W3,
    SACM_W4,
    SACM_W5,
    SACM_W6,
    SACM_W7,
    SACM_W8,
    SACM_W9,
    SACM_W10,
    SACM_W11,
    SACM_W12,
    SACM_W13,
    SACM_W14,
    SACM_W15,
    Diagnostic,
    sort_diagnostics,
)

logger = logging.getLogger(__name__)

Check = Callable[[ModelDocument], Iterator[Diagnostic]]


def supported_ends(rel: AssertedRelationship) -> list[str]:
    """The supported side of a relationship, whatever its drawing direction."""
    return rel.source_ids if isinstance(rel, GsnConnector) else rel.target_ids


def supporting_ends(rel: AssertedRelationship) -> list[str]:
    return rel.target_ids if isinstance(rel, GsnConnector) else rel.source_ids


def inference_graph(doc: ModelDocument) -> nx.DiGraph:
    """Supporting element -> supported element, over every AssertedInference."""
    graph = nx.DiGraph()
    for rel in doc.of_type(AssertedInference):
        for below in supporting_ends(rel):
            for above in supported_ends(rel):
                graph.add_edge(below, above)
    return graph


def check_connectors(doc: ModelDocument) -> Iterator[Diagnostic]:
    for connector in doc.of_type(GsnConnector):
        if not isinstance(connector, (SupportedBy, InContextOf)):
            continue
        rule = GSN_E1 if isinstance(connector, SupportedBy) else GSN_E2
        problems = connector.endpoint_problems(doc, connector.source_ids, connector.target_ids)
        if problems:
            yield rule.at(connector.gid, "; ".join(problems))


def check_undeveloped(doc: ModelDocument) -> Iterator[Diagnostic]:
    for element in doc:
        if isinstance(element, (Goal, Strategy)) and element.undeveloped:
            below = [c.gid for c in doc.of_type(SupportedBy) if c.source_ids == [element.gid]]
            if below:
                yield GSN_E3.at(
                    [element.gid, *below],
                    f"undeveloped {element.kind} {element.gid} is supported by {len(below)} "
                    "connector(s)",
                )


def check_away_goals(doc: ModelDocument) -> Iterator[Diagnostic]:
    for away in doc.of_type(AwayGoal):
        if not away.is_citation or away.cited_element is None:
            yield GSN_E4.at(away.gid, f"AwayGoal {away.gid} does not cite a goal")


def check_relationship_kinds(doc: ModelDocument) -> Iterator[Diagnostic]:
    for rel in doc.of_type(AssertedRelationship):
        if isinstance(rel, GsnConnector):
            continue
        problems = rel.problems(doc)
        if problems:
            yield SACM_E1.at(rel.gid, "; ".join(problems))
    for asset_rel in doc.of_type(ArtifactAssetRelationship):
        problems = []
        if not asset_rel.source_ids or not asset_rel.target_ids:
            problems.append("ArtifactAssetRelationship needs a source and a target")
        for gid in [*asset_rel.source_ids, *asset_rel.target_ids]:
            element = doc.find(gid)
            if element is not None and not isinstance(element, ArtifactAsset):
                problems.append(f"endpoint {gid} is a {element.kind}, expected ArtifactAsset")
        if problems:
            yield SACM_E1.at(asset_rel.gid, "; ".join(problems))


def check_references(doc: ModelDocument) -> Iterator[Diagnostic]:
    missing: dict[str, list[str]] = {}
    for gid, name, ref in doc.dangling_references():
        missing.setdefault(gid, []).append(f"{name} -> {ref}")
    for gid, refs in missing.items():
        yield SACM_E2.at(gid, "unresolved " + ", ".join(refs))


def check_citations(doc: ModelDocument) -> Iterator[Diagnostic]:
    graph = nx.DiGraph()
    for element in doc:
        if element.is_citation and element.cited_element is None:
            yield SACM_W3.at(element.gid, f"{element.kind} {element.gid} cites nothing")
        elif element.is_citation and element.cited_element in doc:
            graph.add_edge(element.gid, element.cited_element)
    for cycle in nx.simple_cycles(graph):
        start = cycle.index(min(cycle))
        ordered = cycle[start:] + cycle[:start]
        yield SACM_W4.at(ordered, "citation cycle " + " -> ".join([*ordered, ordered[0]]))


def check_inference_cycles(doc: ModelDocument) -> Iterator[Diagnostic]:
    graph = inference_graph(doc)
    for component in nx.strongly_connected_components(graph):
        members = sorted(component)
        if len(members) > 1 or graph.has_edge(members[0], members[0]):
            yield SACM_W5.at(members, f"inference cycle over {len(members)} element(s)")


def check_multi_target(doc: ModelDocument) -> Iterator[Diagnostic]:
    for rel in doc.of_type(AssertedInference):
        if len(rel.target_ids) > 1:
            yield SACM_W6.at(rel.gid, f"inference has {len(rel.target_ids)} targets")


def check_asset_self_relations(doc: ModelDocument) -> Iterator[Diagnostic]:
    for rel in doc.of_type(ArtifactAssetRelationship):
        overlap = sorted(set(rel.source_ids) & set(rel.target_ids))
        if overlap:
            yield SACM_W7.at([rel.gid, *overlap], f"asset(s) related to themselves: {overlap}")


def check_terms(doc: ModelDocument) -> Iterator[Diagnostic]:
    for term in doc.of_type(Term):
        if term.external_reference and term.origin:
            yield SACM_W8.at(term.gid, "term has both external_reference and origin")


def _in_terminology(doc: ModelDocument, element: Element) -> bool:
    return any(isinstance(o, TerminologyPackage) for o in doc.owner_chain(element))


def check_expression_refs(doc: ModelDocument) -> Iterator[Diagnostic]:
    for element in doc:
        for text in element.lang_strings():
            if not isinstance(text, ExpressionLangString) or text.expression_ref is None:
                continue
            target = doc.find(text.expression_ref)
            if not isinstance(target, Expression) or not _in_terminology(doc, target):
                message = f"expression_ref {text.expression_ref} is not a packaged Expression"
                yield SACM_W9.at(element.gid, message)


def check_defeated(doc: ModelDocument) -> Iterator[Diagnostic]:
    countered = {
        gid
        for rel in doc.of_type(AssertedRelationship)
        if rel.is_counter
        for gid in supported_ends(rel)
    }
    for assertion in doc.of_type(Assertion):
        if assertion.declaration == Declaration.DEFEATED and assertion.gid not in countered:
            yield SACM_W10.at(assertion.gid, "defeated, but no counter relationship targets it")


def check_packages(doc: ModelDocument) -> Iterator[Diagnostic]:
    for package in doc.of_type(Package):
        if isinstance(package, PackageInterface):
            for child in doc.children(package.gid):
                if not child.is_citation:
                    yield SACM_W11.at(
                        [package.gid, child.gid], f"interface holds non-citation {child.gid}"
                    )
        if isinstance(package, PackageBinding):
            participants = set(package.participant_packages)
            if len(participants) < 2:
                yield SACM_W12.at(package.gid, f"binding has {len(participants)} participant(s)")


# Group kind -> kind its members must have
GROUP_MEMBERS: dict[type[Element], type[Element]] = {
    ArtifactGroup: ArtifactElement,
    TerminologyGroup: TerminologyAsset,
    Category: ExpressionElement,
}


def check_groups(doc: ModelDocument) -> Iterator[Diagnostic]:
    graph = nx.DiGraph()
    for group in doc:
        if not isinstance(group, (ArtifactGroup, TerminologyGroup, Category)):
            continue
        member_kind = GROUP_MEMBERS[type(group)]
        for gid in group.member_ids:
            member = doc.find(gid)
            if member is None:
                continue
            graph.add_edge(group.gid, gid)
            if not isinstance(member, member_kind):
                message = f"member {gid} is a {member.kind}, expected {member_kind.__name__}"
                yield SACM_W14.at([group.gid, gid], message)
    for cycle in nx.simple_cycles(graph):
        start = cycle.index(min(cycle))
        ordered = cycle[start:] + cycle[:start]
        yield SACM_W13.at(ordered, "group cycle " + " -> ".join([*ordered, ordered[0]]))


def check_expression_placeholders(doc: ModelDocument) -> Iterator[Diagnostic]:
    for expr in doc.of_type(Expression):
        try:
            unmatched, unused = placeholder_mismatch(doc, expr)
        except UnbalancedBraces:
            yield SACM_W15.at(expr.gid, f"unbalanced braces in {expr.value!r}")
            continue
        problems = [f"no element_ref for {{{label}}}" for label in unmatched]
        problems += [f"element_ref {gid} matches no placeholder" for gid in unused]
        if problems:
            yield SACM_W15.at(expr.gid, "; ".join(problems))


CHECKS: tuple[Check, ...] = (
    check_connectors,
    check_undeveloped,
    check_away_goals,
    check_relationship_kinds,
    check_references,
    check_citations,
    check_inference_cycles,
    check_multi_target,
    check_asset_self_relations,
    check_terms,
    check_expression_refs,
    check_defeated,
    check_packages,
    check_groups,
    check_expression_placeholders,
)


def check(doc: ModelDocument) -> list[Diagnostic]:
    """Run every rule; the result is ordered by (rule_id, first gid)."""
    diagnostics = [d for rule in CHECKS for d in rule(doc)]
    logger.debug(f"check: {len(diagnostics)} diagnostic(s) over {len(doc)} elements")
    return sort_diagnostics(diagnostics)
