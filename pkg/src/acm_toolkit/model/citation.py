"""Citations: elements standing in for other elements across package boundaries."""

import logging

from ..core.exceptions import CitationCycle, KindMismatch, MissingElement
from ..core.types import Declaration
from .argumentation import ArtifactReference, Claim
from .base import ArtifactElement, Element, Package
from .document import ModelDocument

logger = logging.getLogger(__name__)


def citation_compatible(citing: Element, cited: Element) -> bool:
    """Whether ``citing`` may cite ``cited``.

    Claims cite Claims, ArtifactReferences cite any ArtifactElement, packages
    cite packages of the same family, and every other element cites its own kind.
    """
    if isinstance(citing, Claim):
        return isinstance(cited, Claim)
    if isinstance(citing, ArtifactReference):
        return isinstance(cited, ArtifactElement)
    if isinstance(citing, Package):
        return isinstance(cited, Package) and cited.family == citing.family
    return type(citing) is type(cited)


def cite(citing: str, cited: str, model: ModelDocument) -> ModelDocument:
    """Make ``citing`` a citation of ``cited``; citing Claims become asCited."""
    missing = [gid for gid in (citing, cited) if gid not in model]
    if missing:
        raise MissingElement(missing)
    source = model.get(citing)
    target = model.get(cited)
    if not citation_compatible(source, target):
        raise KindMismatch(f"{source.kind} {citing} cannot cite {target.kind} {cited}")
    source.is_citation = True
    source.cited_element = cited
    if isinstance(source, Claim):
        source.declaration = Declaration.AS_CITED
    logger.debug(f"{citing} now cites {cited}")
    return model


def resolve_citation(start: str, model: ModelDocument) -> tuple[str, list[str]]:
    """Follow cited_element links to the first non-citation element.

    Returns the terminal gid and the chain including ``start``.
    """
    chain = [start]
    current = model.get(start)
    while current.is_citation:
        nxt = current.cited_element
        if nxt is None:
            raise MissingElement(current.gid, f"{current.gid} is a citation without cited_element")
        if nxt in chain:
            raise CitationCycle(chain[chain.index(nxt) :] + [nxt])
        chain.append(nxt)
        current = model.get(nxt)
    return current.gid, chain
