"""MCP tools over envelope documents.

Every tool takes the ``.acm.json`` text of a document and returns a dict.
Failures come back as ``{"error": ...}`` (plus diagnostics when validation
blocked the operation) rather than as exceptions.
"""

import asyncio
import logging
from typing import Any, Literal

from ..core.exceptions import AcmError, PreconditionFailed
from ..core.types import Notation
from ..instantiate import BindingTable, instantiate, verify_instantiation
from ..interchange import load, save
from ..report import ReportOptions, render
from ..transform import cae_to_sacm, gsn_to_sacm
from ..validate import check, evaluate

logger = logging.getLogger(__name__)


def _failure(exc: AcmError) -> dict[str, Any]:
    result: dict[str, Any] = {"error": str(exc), "type": type(exc).__name__}
    if isinstance(exc, PreconditionFailed):
        result["diagnostics"] = [d.to_dict() for d in exc.diagnostics]
    return result


# =============================================================================
# Tool 1: validate_model
# =============================================================================
async def validate_model(document: str) -> dict[str, Any]:
    """
    Run every well-formedness rule over a document.

    Args:
        document: Envelope JSON text

    Returns:
        Diagnostics with error and warning counts
    """
    try:
        doc = load(document, check_references=False)
    except AcmError as exc:
        return _failure(exc)
    diagnostics = await asyncio.to_thread(check, doc)
    errors = sum(1 for d in diagnostics if d.is_error)
    return {
        "notation": str(doc.notation),
        "errors": errors,
        "warnings": len(diagnostics) - errors,
        "diagnostics": [d.to_dict() for d in diagnostics],
    }


# =============================================================================
# Tool 2: transform_model
# =============================================================================
async def transform_model(document: str, source: Literal["gsn", "cae"]) -> dict[str, Any]:
    """
    Transform a GSN or CAE document into SACM.

    Args:
        document: Envelope JSON text
        source: Notation the document is expected to use

    Returns:
        The SACM envelope text, its trace links and any warnings
    """
    try:
        doc = load(document)
        if doc.notation != Notation(source):
            return {"error": f"Document notation is {doc.notation}, not {source}"}
        transform = gsn_to_sacm if source == "gsn" else cae_to_sacm
        result = await asyncio.to_thread(transform, doc)
    except AcmError as exc:
        return _failure(exc)
    return {
        "document": save(result.document).decode("utf-8"),
        "trace": result.trace_dict(),
        "warnings": result.warnings,
    }


# =============================================================================
# Tool 3: instantiate_pattern
# =============================================================================
async def instantiate_pattern(
    document: str, pattern: str, bindings: str, suffix: str = "inst"
) -> dict[str, Any]:
    """
    Instantiate a pattern package with a binding table.

    Args:
        document: Envelope JSON text holding the pattern
        pattern: gid of the pattern package
        bindings: Binding table JSON ({"roles": ..., "connectors": ...})
        suffix: Suffix for the concrete package gid

    Returns:
        The document with the concrete package, its gid, trace and INST diagnostics
    """
    try:
        doc = load(document)
        table = BindingTable.from_json(bindings)
        result = await asyncio.to_thread(instantiate, doc, pattern, table, suffix)
    except AcmError as exc:
        return _failure(exc)
    diagnostics = verify_instantiation(result.document, result.package_gid, pattern)
    return {
        "document": save(result.document).decode("utf-8"),
        "package": result.package_gid,
        "trace": {"links": [link.to_dict() for link in result.links]},
        "diagnostics": [d.to_dict() for d in diagnostics],
    }


# =============================================================================
# Tool 4: evaluate_model
# =============================================================================
async def evaluate_model(document: str, evidence: dict[str, bool]) -> dict[str, Any]:
    """
    Propagate evidence validity up the argument.

    Args:
        document: Envelope JSON text
        evidence: Evidence gid to validity

    Returns:
        Status per claim, root claims and evidence that had no entry
    """
    try:
        doc = load(document)
        evaluation = await asyncio.to_thread(evaluate, doc, evidence)
    except AcmError as exc:
        return _failure(exc)
    return {**evaluation.to_dict(), "roots_hold": evaluation.roots_hold}


# =============================================================================
# Tool 5: render_report
# =============================================================================
async def render_report(
    document: str,
    lang: str | None = None,
    format: Literal["md", "txt"] = "md",
    include_diagnostics: bool = False,
    include_terminology: bool = True,
    evidence: dict[str, bool] | None = None,
) -> dict[str, Any]:
    """
    Render a human-readable report.

    Args:
        document: Envelope JSON text
        lang: Language tag for localized strings
        format: md or txt
        include_diagnostics: Append the diagnostics of check()
        include_terminology: List Terms and Expressions
        evidence: When given, claim statuses are evaluated and shown

    Returns:
        The report text
    """
    try:
        doc = load(document)
        statuses = None
        if evidence is not None:
            statuses = (await asyncio.to_thread(evaluate, doc, evidence)).statuses
        options = ReportOptions(
            format=format,
            include_diagnostics=include_diagnostics,
            include_terminology=include_terminology,
            statuses=statuses,
            **({"lang": lang} if lang else {}),
        )
        text = await asyncio.to_thread(render, doc, options)
    except AcmError as exc:
        return _failure(exc)
    return {"report": text.decode("utf-8")}
