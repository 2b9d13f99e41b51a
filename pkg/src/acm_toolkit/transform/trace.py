"""Transformation provenance."""

from collections.abc import Iterable
from dataclasses import dataclass, field

from ..model.document import ModelDocument


@dataclass(frozen=True, order=True)
class TraceLink:
    """One produced element and the rule that produced it from ``source_gid``."""

    source_gid: str
    result_gid: str
    rule: str

    def to_dict(self) -> dict[str, str]:
        return {"source_gid": self.source_gid, "result_gid": self.result_gid, "rule": self.rule}


def trace_lookup(links: Iterable[TraceLink], source_gid: str) -> list[str]:
    """All results produced from ``source_gid``, in production order."""
    results: list[str] = []
    for link in links:
        if link.source_gid == source_gid and link.result_gid not in results:
            results.append(link.result_gid)
    return results


def trace_sources(links: Iterable[TraceLink], result_gid: str) -> list[str]:
    """Inverse of trace_lookup."""
    sources: list[str] = []
    for link in links:
        if link.result_gid == result_gid and link.source_gid not in sources:
            sources.append(link.source_gid)
    return sources


@dataclass
class TransformResult:
    """Transformed document plus its trace."""

    document: ModelDocument
    links: list[TraceLink] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def lookup(self, source_gid: str) -> list[str]:
        return trace_lookup(self.links, source_gid)

    def package_for(self, module_gid: str) -> str | None:
        results = self.lookup(module_gid)
        return results[0] if results else None

    def trace_dict(self) -> dict[str, object]:
        return {"links": [link.to_dict() for link in self.links]}
