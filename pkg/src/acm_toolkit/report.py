"""Human-readable assurance case reports (Markdown or plain text).

One section per package, in gid order, listing the claims, relationships,
terminology, artifacts and remaining elements that the package holds
directly. Every element gid appears exactly once in the body; the optional
diagnostics appendix comes after it.
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Literal

from .config import config
from .core.exceptions import AcmError, InvalidArgument
from .core.strings import MultiLangString
from .core.types import ClaimStatus
from .model.argumentation import ArgumentAsset, AssertedRelationship, Claim
from .model.artifact import ArtifactAsset, ArtifactAssetRelationship, Property
from .model.base import Element, ModelElement, Package
from .model.document import ModelDocument
from .model.terminology import Category, Expression, ExpressionElement, Term, render_expression
from .validate.rules import check

logger = logging.getLogger(__name__)

ReportFormat = Literal["md", "txt"]
FORMATS = ("md", "txt")


@dataclass(frozen=True)
class ReportOptions:
    lang: str = field(default_factory=lambda: config.default_lang)
    format: ReportFormat = "md"
    include_diagnostics: bool = False
    include_terminology: bool = True
    # Claim gid to status; claims without an entry show "-"
    statuses: Mapping[str, ClaimStatus] | None = None

    def __post_init__(self) -> None:
        if self.format not in FORMATS:
            raise InvalidArgument(f"Unknown report format {self.format!r}; use md or txt")
        if not self.lang:
            raise InvalidArgument("Report language must not be empty")


class _Writer:
    """Markdown and plain text differ only in headings, code spans and tables."""

    def __init__(self, fmt: ReportFormat) -> None:
        self.md = fmt == "md"
        self.lines: list[str] = []

    def heading(self, level: int, text: str) -> None:
        if self.lines:
            self.lines.append("")
        if self.md:
            self.lines.append("#" * level + " " + text)
        else:
            self.lines.append(text)
            self.lines.append(("=" if level == 1 else "-" if level == 2 else "~") * len(text))
        self.lines.append("")

    def code(self, gid: str) -> str:
        return f"`{gid}`" if self.md else gid

    def cell(self, text: str) -> str:
        text = " ".join(text.split())
        return text.replace("|", "\\|") if self.md else text

    def table(self, header: list[str], rows: list[list[str]]) -> None:
        if self.md:
            self.lines.append("| " + " | ".join(header) + " |")
            self.lines.append("|" + "---|" * len(header))
            for row in rows:
                self.lines.append("| " + " | ".join(self.cell(c) for c in row) + " |")
            return
        cells = [header, *[[self.cell(c) for c in row] for row in rows]]
        widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
        for row in cells:
            padded = [c.ljust(w) for c, w in zip(row, widths, strict=True)]
            self.lines.append("  ".join(padded).rstrip())

    def item(self, text: str, depth: int = 0) -> None:
        self.lines.append("  " * depth + "- " + text)

    def text(self, text: str) -> None:
        self.lines.append(text)

    def render(self) -> bytes:
        return ("\n".join(self.lines).rstrip("\n") + "\n").encode("utf-8")


def _name(element: Element) -> str:
    if isinstance(element, ModelElement) and element.name is not None:
        return element.name.content
    return ""


def _text(element: Element, lang: str) -> str:
    """Content, else description, else name."""
    if isinstance(element, ArgumentAsset) and element.content:
        return element.content.localize(lang)
    if isinstance(element, ModelElement) and isinstance(element.description, MultiLangString):
        if element.description:
            return element.description.localize(lang)
    return _name(element)


def _quoted(text: str) -> str:
    return f' "{text}"' if text else ""


class _Report:
    def __init__(self, doc: ModelDocument, options: ReportOptions) -> None:
        self.doc = doc
        self.options = options
        self.out = _Writer(options.format)
        self.lang = options.lang
        self.by_package: dict[str | None, list[Element]] = {}
        self.properties: dict[str, list[Property]] = {}
        for element in doc:
            if isinstance(element, Package):
                continue
            owner = doc.owner(element)
            if isinstance(element, Property) and isinstance(owner, ArtifactAsset):
                self.properties.setdefault(owner.gid, []).append(element)
                continue
            package = doc.package_of(element)
            self.by_package.setdefault(package.gid if package else None, []).append(element)

    def status(self, gid: str) -> str:
        statuses = self.options.statuses or {}
        return str(statuses[gid]) if gid in statuses else "-"

    def run(self) -> bytes:
        roots = [p for p in self.doc.roots() if isinstance(p, Package)]
        title = _name(roots[0]) if len(roots) == 1 else ""
        self.out.heading(1, title or "Assurance case report")
        self.out.text(f"Notation: {self.doc.notation}, elements: {len(self.doc)}")
        packages = sorted(self.doc.of_type(Package), key=lambda p: p.gid)
        for package in packages:
            self.package_section(package)
        if self.by_package.get(None):
            self.out.heading(2, "Unpackaged elements")
            self.contents(self.by_package[None])
        if self.options.include_diagnostics:
            self.diagnostics()
        return self.out.render()

    def package_section(self, package: Package) -> None:
        out = self.out
        label = _name(package) or package.gid
        out.heading(2, label)
        out.text(f"{out.code(package.gid)} {package.kind}")
        description = _text(package, self.lang)
        if description and description != label:
            out.text(description)
        if package.owner_gid is not None:
            out.text(f"Within {out.code(package.owner_gid)}")
        self.contents(self.by_package.get(package.gid, []))

    def contents(self, elements: list[Element]) -> None:
        elements = sorted(elements, key=lambda e: e.gid)
        claims = [e for e in elements if isinstance(e, Claim)]
        relationships = [
            e for e in elements if isinstance(e, (AssertedRelationship, ArtifactAssetRelationship))
        ]
        terminology = [
            e
            for e in elements
            if self.options.include_terminology and isinstance(e, (ExpressionElement, Category))
        ]
        artifacts = [
            e
            for e in elements
            if isinstance(e, ArtifactAsset) and not isinstance(e, ArtifactAssetRelationship)
        ]
        listed = {e.gid for e in [*claims, *relationships, *terminology, *artifacts]}
        others = [e for e in elements if e.gid not in listed]
        if claims:
            self.claims(claims)
        if relationships:
            self.relationships(relationships)
        if terminology:
            self.terminology(terminology)
        if artifacts:
            self.artifacts(artifacts)
        if others:
            self.out.heading(3, "Other elements")
            for element in others:
                text = _quoted(_text(element, self.lang))
                self.out.item(f"{self.out.code(element.gid)} {element.kind}{text}")

    def claims(self, claims: list[Claim]) -> None:
        self.out.heading(3, "Claims")
        rows = [
            [
                self.out.code(c.gid),
                _name(c),
                str(c.declaration),
                self.status(c.gid),
                c.text(self.lang) if c.content else "",
            ]
            for c in claims
        ]
        self.out.table(["gid", "name", "declaration", "status", "text"], rows)

    def relationships(self, relationships: list[Element]) -> None:
        out = self.out
        out.heading(3, "Relationships")
        for rel in relationships:
            assert isinstance(rel, (AssertedRelationship, ArtifactAssetRelationship))
            sources = ", ".join(out.code(g) for g in rel.source_ids) or "-"
            targets = ", ".join(out.code(g) for g in rel.target_ids) or "-"
            line = f"{out.code(rel.gid)} {rel.kind}: {sources} -> {targets}"
            if isinstance(rel, AssertedRelationship):
                if rel.is_counter:
                    line += " (counter)"
                if rel.reasoning_id is not None:
                    line += f", reasoning {out.code(rel.reasoning_id)}"
            out.item(line)
            self.asset_properties(rel.gid)

    def terminology(self, elements: list[Element]) -> None:
        out = self.out
        out.heading(3, "Terminology")
        for element in elements:
            line = f"{out.code(element.gid)} {element.kind}"
            if isinstance(element, ExpressionElement):
                line += _quoted(element.value)
            else:
                line += _quoted(_name(element))
            if isinstance(element, Expression):
                try:
                    line += f": {render_expression(self.doc, element.gid)}"
                except AcmError as exc:
                    logger.warning(f"Cannot render {element.gid}: {exc}")
            details = []
            if isinstance(element, (Term, Category)) and element.external_reference:
                details.append(f"external reference: {element.external_reference}")
            if isinstance(element, Term) and element.origin:
                details.append(f"origin: {out.code(element.origin)}")
            if details:
                line += f" ({'; '.join(details)})"
            out.item(line)

    def artifacts(self, assets: list[Element]) -> None:
        out = self.out
        out.heading(3, "Artifacts")
        for asset in assets:
            out.item(f"{out.code(asset.gid)} {asset.kind}{_quoted(_name(asset))}")
            self.asset_properties(asset.gid)

    def asset_properties(self, gid: str) -> None:
        for prop in sorted(self.properties.get(gid, []), key=lambda p: p.gid):
            self.out.item(f"{self.out.code(prop.gid)} {_name(prop)}: {prop.value(self.lang)}", 1)

    def diagnostics(self) -> None:
        self.out.heading(2, "Diagnostics")
        found = check(self.doc)
        if not found:
            self.out.text("No diagnostics.")
        for diagnostic in found:
            self.out.item(diagnostic.to_line())


def render(doc: ModelDocument, options: ReportOptions | None = None) -> bytes:
    """Deterministic report bytes for ``doc``."""
    return _Report(doc, options or ReportOptions()).run()
