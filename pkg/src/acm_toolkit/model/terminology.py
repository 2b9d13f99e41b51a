"""Terminology component: controlled vocabulary used in argument text.

An Expression's ``value`` may contain ``{label}`` placeholders. Each label is
matched to one of the Expression's ``element_refs`` by the referenced
element's name, falling back to its value.
"""

import logging
from dataclasses import dataclass, field
from typing import ClassVar

from ..config import config
from ..core.exceptions import ExpressionDepthExceeded, InvalidArgument
from ..core.strings import LangString, role_labels, substitute_roles
from .base import ArtifactElement, Package, PackageBinding, PackageInterface
from .document import ModelDocument

logger = logging.getLogger(__name__)


@dataclass(kw_only=True)
class TerminologyPackage(Package):
    family: ClassVar[str] = "terminology"


@dataclass(kw_only=True)
class TerminologyInterface(PackageInterface, TerminologyPackage):
    pass


@dataclass(kw_only=True)
class TerminologyPackageBinding(PackageBinding, TerminologyPackage):
    pass


@dataclass(kw_only=True)
class TerminologyGroup(ArtifactElement):
    own_refs = ("member_ids",)

    member_ids: list[str] = field(default_factory=list)


@dataclass(kw_only=True)
class TerminologyAsset(ArtifactElement, abstract=True):
    pass


@dataclass(kw_only=True)
class ExpressionElement(TerminologyAsset, abstract=True):
    own_texts = ("value",)

    value: str = ""

    def label(self) -> str:
        if self.name is not None:
            return self.name.content
        return self.value or self.gid


@dataclass(kw_only=True)
class Term(ExpressionElement):
    """A defined term; ``origin`` may point at the model element it names."""

    own_refs = ("origin",)

    external_reference: str | None = None
    origin: str | None = None


@dataclass(kw_only=True)
class Expression(ExpressionElement):
    """A phrase or sentence built from Terms and other Expressions."""

    own_refs = ("element_refs",)

    element_refs: list[str] = field(default_factory=list)


@dataclass(kw_only=True)
class Category(TerminologyAsset):
    own_refs = ("member_ids",)

    member_ids: list[str] = field(default_factory=list)
    external_reference: str | None = None


def define_term(
    doc: ModelDocument,
    pkg: str,
    value: str,
    external_reference: str | None = None,
    origin: str | None = None,
    name: str | None = None,
    lang: str = "en",
) -> str:
    """Create a Term in ``pkg``; ``name`` defaults to ``value``."""
    if not value or not value.strip():
        raise InvalidArgument("Term value must not be empty")
    doc.require(pkg, TerminologyPackage, role="package")
    if origin is not None:
        doc.get(origin)
    term = Term(
        name=LangString(lang=lang, content=name or value),
        value=value,
        external_reference=external_reference,
        origin=origin,
    )
    doc.add(term, owner=pkg)
    return term.gid


def define_expression(
    doc: ModelDocument,
    pkg: str,
    value: str,
    element_refs: list[str],
    name: str | None = None,
    lang: str = "en",
) -> str:
    if not value:
        raise InvalidArgument("Expression value must not be empty")
    doc.require(pkg, TerminologyPackage, role="package")
    for ref in element_refs:
        doc.require(ref, ExpressionElement, role="element_ref")
    expr = Expression(
        name=LangString(lang=lang, content=name) if name else None,
        value=value,
        element_refs=list(element_refs),
    )
    unmatched, unused = placeholder_mismatch(doc, expr)
    if unmatched:
        raise InvalidArgument(f"No element_ref for placeholder {{{unmatched[0]}}}")
    if unused:
        raise InvalidArgument(f"element_ref {unused[0]} matches no placeholder")
    doc.add(expr, owner=pkg)
    return expr.gid


def placeholder_mismatch(doc: ModelDocument, expr: Expression) -> tuple[list[str], list[str]]:
    """Labels in ``value`` no element_ref matches, and element_refs no label names.

    Dangling element_refs are left to the reference checks.
    """
    labels = role_labels(expr.value, expr.gid)
    matched: set[str] = set()
    unused: list[str] = []
    for ref in expr.element_refs:
        element = doc.find(ref)
        if element is None:
            continue
        hits: set[str] = set()
        if isinstance(element, ExpressionElement):
            hits = {element.label(), element.value} & set(labels)
        if not hits:
            unused.append(ref)
        matched |= hits
    return [label for label in labels if label not in matched], unused


def placeholder_table(doc: ModelDocument, expr: Expression) -> dict[str, ExpressionElement]:
    """Label to referenced element, resolving every element_ref."""
    table: dict[str, ExpressionElement] = {}
    for ref in expr.element_refs:
        element = doc.require(ref, ExpressionElement, role="element_ref")
        table.setdefault(element.label(), element)
        if element.value:
            table.setdefault(element.value, element)
    return table


def render_expression(doc: ModelDocument, expr: str, depth_limit: int | None = None) -> str:
    """Render an Expression, substituting concrete Terms and nested Expressions.

    Placeholders bound to abstract elements (or to nothing) stay as ``{label}``.
    """
    limit = depth_limit if depth_limit is not None else config.expression_depth_limit
    root = doc.require(expr, Expression, role="expression")
    return _render(doc, root, 0, limit)


def _render(doc: ModelDocument, expr: Expression, depth: int, limit: int) -> str:
    if depth >= limit:
        raise ExpressionDepthExceeded(expr.gid, limit)
    table = placeholder_table(doc, expr)

    def lookup(label: str) -> str | None:
        element = table.get(label)
        if element is None:
            logger.warning(f"Expression {expr.gid} has no element_ref for {{{label}}}")
            return None
        if element.is_abstract:
            return None
        if isinstance(element, Expression):
            return _render(doc, element, depth + 1, limit)
        return element.value

    return substitute_roles(expr.value, lookup, expr.gid, unescape=True)
