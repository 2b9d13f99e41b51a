"""Pattern instantiation.

``instantiate`` copies a pattern package next to the original, substitutes
role placeholders from a BindingTable and expands the decorated connectors:

- an Optional connector that is not chosen, or a Many connector with a count
  of zero, is dropped with everything that depends on it;
- only the chosen connectors of a Choice group are kept;
- the dependent subtree of a Many connector is copied once per value, and the
  i-th copy takes the i-th value of every list-valued role.

The dependent subtree of a connector is everything reachable from its
supporting end through further relationships, never through the supported end.
GSN connectors are replicated one per copy; SACM relationships get a single
copy whose supporting end lists every replica.

Every copy is concrete and points back to its original through
``abstract_form``. Implementation constraints stay on the pattern.
"""

import copy
import dataclasses
import logging
from collections.abc import Callable
from dataclasses import dataclass, field

from ..core.exceptions import ChoiceOutOfRange, CountMismatch, MissingBinding, UnbalancedBraces
from ..core.strings import substitute_roles
from ..model.argumentation import AssertedRelationship
from ..model.base import Element, ModelElement, Package
from ..model.document import ModelDocument
from ..model.gsn import CHOICE_TAG, MANY_TAG, OPTIONAL_TAG, Decorators, GsnConnector
from ..transform.trace import TraceLink, trace_lookup
from ..validate.diagnostics import INST_E1, INST_E2, INST_E3, Diagnostic, sort_diagnostics
from ..validate.rules import supported_ends, supporting_ends
from .bindings import BindingTable
from .roles import element_roles, extract_roles

logger = logging.getLogger(__name__)

INSTANTIATE_RULE = "Instantiate"
DECORATOR_TAGS = frozenset({MANY_TAG, OPTIONAL_TAG, CHOICE_TAG})

# (Many connector gid, zero-based replica index, replica count), outermost first
Replica = tuple[str, int, int]
Env = tuple[Replica, ...]


@dataclass
class InstantiationResult:
    """The document holding the new concrete package, and its trace."""

    document: ModelDocument
    package_gid: str
    links: list[TraceLink] = field(default_factory=list)

    def copies_of(self, pattern_gid: str) -> list[str]:
        return trace_lookup(self.links, pattern_gid)


class _Instantiator:
    def __init__(
        self, doc: ModelDocument, pattern: str, table: BindingTable, suffix: str
    ) -> None:
        self.doc = doc
        self.pattern = doc.require(pattern, Package, role="pattern")
        self.table = table
        self.suffix = suffix
        self.members = doc.subtree(pattern)
        self.member_ids = {e.gid for e in self.members}
        self.relationships = [e for e in self.members if isinstance(e, AssertedRelationship)]
        self.children: dict[str, list[AssertedRelationship]] = {}
        for rel in self.relationships:
            for gid in supported_ends(rel):
                self.children.setdefault(gid, []).append(rel)
        self.decorations = {
            rel.gid: dec for rel in self.relationships if (dec := Decorators.of(rel))
        }
        self.chosen: dict[str, set[str]] = {}
        self.copies: dict[tuple[str, Env], Element] = {}
        self.copied: set[str] = set()
        self.links: list[TraceLink] = []

    # ------------------------------------------------------------------
    # Bindings
    # ------------------------------------------------------------------
    def check_bindings(self) -> None:
        missing = sorted(extract_roles(self.doc, self.pattern.gid) - self.table.roles)
        if missing:
            raise MissingBinding(missing[0])
        groups: dict[str, list[str]] = {}
        bounds = {}
        for gid, dec in self.decorations.items():
            if dec.choice is not None:
                groups.setdefault(dec.choice.group_id, []).append(gid)
                bounds[dec.choice.group_id] = dec.choice
        for group_id, alternatives in groups.items():
            entry = self.table.connectors.get(group_id)
            for gid in alternatives:
                entry = entry or self.table.connectors.get(gid)
            if entry is None or entry.subset is None:
                raise MissingBinding(group_id)
            subset = list(dict.fromkeys(entry.subset))
            group = bounds[group_id]
            outside = [gid for gid in subset if gid not in alternatives]
            if outside or not group.min <= len(subset) <= group.max:
                raise ChoiceOutOfRange(group_id, len(subset), group.min, group.max)
            self.chosen[group_id] = set(subset)
        for rel in self.relationships:
            self.included(rel)
            self.replica_count(rel)

    def included(self, rel: AssertedRelationship) -> bool:
        dec = self.decorations.get(rel.gid)
        if dec is None:
            return True
        if dec.optional:
            entry = self.table.connectors.get(rel.gid)
            if entry is None or (entry.chosen is None and entry.count is None):
                raise MissingBinding(rel.gid)
            if entry.chosen is False:
                return False
        if dec.choice is not None:
            return rel.gid in self.chosen[dec.choice.group_id]
        return True

    def replica_count(self, rel: AssertedRelationship) -> int | None:
        dec = self.decorations.get(rel.gid)
        if dec is None or dec.many_label is None:
            return None
        entry = self.table.connectors.get(rel.gid)
        if entry is None or entry.count is None:
            raise MissingBinding(rel.gid)
        return entry.count

    def lookup(self, env: Env) -> Callable[[str], str | None]:
        def _value(label: str) -> str | None:
            values = self.table.values(label)
            if values is None:
                return None
            if len(values) == 1:
                return values[0]
            if not env:
                return ", ".join(values)
            connector, index, count = env[-1]
            if len(values) != count:
                raise CountMismatch(connector, count, len(values))
            return values[index]

        return _value

    # ------------------------------------------------------------------
    # Copying
    # ------------------------------------------------------------------
    def copy_gid(self, gid: str, env: Env) -> str:
        return f"{gid}:{self.suffix}" + "".join(f".{index + 1}" for _, index, _ in env)

    def clone(self, original: Element, env: Env) -> Element:
        lookup = self.lookup(env)
        updates = original.map_texts(lambda text: substitute_roles(text, lookup, original.gid))
        clone = dataclasses.replace(copy.deepcopy(original), **updates)
        clone.gid = self.copy_gid(original.gid, env)
        clone.is_abstract = False
        clone.abstract_form = original.gid
        if isinstance(clone, ModelElement):
            clone.implementation_constraints = []
            clone.tagged_values = [t for t in clone.tagged_values if t.key not in DECORATOR_TAGS]
        if isinstance(clone, GsnConnector):
            clone.many_label = None
            clone.optional_flag = False
            clone.choice_group = None
        self.copies[(original.gid, env)] = clone
        self.copied.add(original.gid)
        self.links.append(TraceLink(original.gid, clone.gid, INSTANTIATE_RULE))
        return clone

    def copy_of(self, gid: str, env: Env) -> str:
        if gid not in self.member_ids:
            return gid
        if (gid, env) in self.copies:
            return self.copies[(gid, env)].gid
        clone = self.clone(self.doc.get(gid), env)
        self.expand_below(gid, env)
        return clone.gid

    def expand_below(self, gid: str, env: Env) -> None:
        for rel in self.children.get(gid, []):
            self.expand(rel, env)

    def expand(self, rel: AssertedRelationship, env: Env) -> None:
        if not self.included(rel):
            return
        count = self.replica_count(rel)
        if count == 0:
            return
        envs = [env] if count is None else [(*env, (rel.gid, i, count)) for i in range(count)]
        if isinstance(rel, GsnConnector):
            above = self.copy_of(rel.source_id, env)
            for sub in envs:
                if (rel.gid, sub) in self.copies:
                    continue
                connector = self.clone(rel, sub)
                connector.source_ids = [above]
                connector.target_ids = [self.copy_of(rel.target_id, sub)]
                self.expand_below(rel.gid, sub)
            return
        if (rel.gid, env) in self.copies:
            return
        relationship = self.clone(rel, env)
        assert isinstance(relationship, AssertedRelationship)
        relationship.target_ids = [self.copy_of(gid, env) for gid in rel.target_ids]
        sources = [self.copy_of(gid, sub) for sub in envs for gid in rel.source_ids]
        relationship.source_ids = list(dict.fromkeys(sources))
        if rel.reasoning_id is not None:
            relationship.reasoning_id = self.copy_of(rel.reasoning_id, env)
        self.expand_below(rel.gid, env)

    def governed(self) -> set[str]:
        """Members in the dependent subtree of some decorated relationship."""
        result: set[str] = set()
        for rel in self.relationships:
            if rel.gid not in self.decorations:
                continue
            stop = set(supported_ends(rel))
            stack = [rel.gid]
            while stack:
                gid = stack.pop()
                if gid in result or gid in stop or gid not in self.member_ids:
                    continue
                result.add(gid)
                element = self.doc.get(gid)
                if isinstance(element, AssertedRelationship):
                    stack.extend(supporting_ends(element))
                    if element.reasoning_id is not None:
                        stack.append(element.reasoning_id)
                stack.extend(r.gid for r in self.children.get(gid, []))
        return result

    def remap(self, gid: str, env: Env) -> str:
        if gid not in self.member_ids:
            return gid
        for depth in range(len(env), -1, -1):
            clone = self.copies.get((gid, env[:depth]))
            if clone is not None:
                return clone.gid
        return gid

    def run(self) -> str:
        self.check_bindings()
        package = self.clone(self.pattern, ())
        package.owner_gid = self.pattern.owner_gid
        for element in self.members:
            if isinstance(element, Package) and element.gid != self.pattern.gid:
                self.copy_of(element.gid, ())
        below = {gid for rel in self.relationships for gid in supporting_ends(rel)}
        below |= {rel.reasoning_id for rel in self.relationships if rel.reasoning_id}
        for element in self.members:
            if not isinstance(element, AssertedRelationship) and element.gid not in below:
                self.copy_of(element.gid, ())
        governed = self.governed()
        for element in self.members:
            if element.gid not in self.copied and element.gid not in governed:
                self.copy_of(element.gid, ())

        for (_, env), clone in self.copies.items():
            if clone is not package and clone.owner_gid is not None:
                clone.owner_gid = self.remap(clone.owner_gid, env)
            for name in clone.ref_fields:
                value = getattr(clone, name)
                if name == "abstract_form":
                    continue
                if isinstance(value, str):
                    setattr(clone, name, self.remap(value, env))
                elif isinstance(value, list):
                    setattr(clone, name, list(dict.fromkeys(self.remap(g, env) for g in value)))
        for clone in self.copies.values():
            self.doc.add(clone)
        return package.gid


def instantiate(
    doc: ModelDocument, pattern: str, table: BindingTable, suffix: str = "inst"
) -> InstantiationResult:
    """Instantiate the pattern package ``pattern`` into a copy of ``doc``.

    The concrete package is placed beside the pattern and named
    ``<pattern>:<suffix>``. Raises MissingBinding, CountMismatch,
    ChoiceOutOfRange or UnbalancedBraces; ``doc`` is never modified.
    """
    work = doc.copy()
    engine = _Instantiator(work, pattern, table, suffix)
    package_gid = engine.run()
    logger.info(
        f"Instantiated {pattern} as {package_gid}: {len(engine.links)} element(s) created"
    )
    return InstantiationResult(document=work, package_gid=package_gid, links=engine.links)


def verify_instantiation(doc: ModelDocument, concrete: str, pattern: str) -> list[Diagnostic]:
    """INST diagnostics for the concrete package ``concrete`` built from ``pattern``."""
    pattern_ids = {e.gid for e in doc.subtree(pattern)}
    diagnostics: list[Diagnostic] = []
    for element in doc.subtree(concrete):
        try:
            labels = element_roles(element)
        except UnbalancedBraces as exc:
            diagnostics.append(INST_E1.at(element.gid, f"unbalanced braces in {exc.text!r}"))
            labels = []
        if labels:
            placeholders = ", ".join("{" + label + "}" for label in labels)
            diagnostics.append(INST_E1.at(element.gid, f"residual placeholder(s) {placeholders}"))
        if element.is_abstract:
            diagnostics.append(INST_E2.at(element.gid, f"{element.kind} is still abstract"))
        if element.abstract_form is None:
            diagnostics.append(INST_E3.at(element.gid, "no abstract_form"))
        elif element.abstract_form not in pattern_ids:
            message = f"abstract_form {element.abstract_form} is not in {pattern}"
            diagnostics.append(INST_E3.at(element.gid, message))
    return sort_diagnostics(diagnostics)
