"""acm-toolkit MCP server - second front end next to the ``acm`` command.

This module defines the MCP server and registers the model tools.
"""

import logging
from typing import Any

from mcp.server.fastmcp import FastMCP
from starlette.requests import Request
from starlette.responses import JSONResponse, Response

from . import __version__
from .audit import audit_event
from .config import config, configure_logging
from .tools import core

logger = logging.getLogger(__name__)

mcp = FastMCP(
    config.server_name,
    host=config.server_host,
    port=config.server_port,
)


# =============================================================================
# Health Check
# =============================================================================
@mcp.custom_route(path="/health", methods=["GET"])
async def health_check(request: Request) -> Response:
    """HTTP health-check endpoint for load balancers."""
    return JSONResponse({"status": "healthy", "version": __version__})


@mcp.tool()
def ping() -> str:
    """Health check - returns 'pong' if server is running."""
    return "pong"


# =============================================================================
# Model Tools
# =============================================================================
@mcp.tool()
async def validate_model(document: str) -> dict[str, Any]:
    """
    Check a SACM, GSN or CAE document against the rule catalog.

    Args:
        document: Envelope JSON text (.acm.json content)

    Returns:
        Diagnostics with error and warning counts
    """
    audit_event("tool_call", tool="validate")
    return await core.validate_model(document)


@mcp.tool()
async def transform_model(document: str, source: str = "gsn") -> dict[str, Any]:
    """
    Transform a GSN or CAE document into SACM.

    Args:
        document: Envelope JSON text
        source: gsn or cae

    Returns:
        SACM envelope text with trace links
    """
    audit_event("tool_call", tool="transform", source=source)
    if source not in ("gsn", "cae"):
        return {"error": f"Unknown source notation {source!r}; use gsn or cae"}
    return await core.transform_model(document, source)  # type: ignore[arg-type]


@mcp.tool()
async def instantiate_pattern(
    document: str, pattern: str, bindings: str, suffix: str = "inst"
) -> dict[str, Any]:
    """
    Instantiate a pattern package.

    Args:
        document: Envelope JSON text holding the pattern
        pattern: gid of the pattern package
        bindings: Binding table JSON
        suffix: Suffix for the concrete package gid

    Returns:
        Document with the concrete package plus verification diagnostics
    """
    audit_event("tool_call", tool="instantiate", pattern=pattern)
    return await core.instantiate_pattern(document, pattern, bindings, suffix)


@mcp.tool()
async def evaluate_model(document: str, evidence: dict[str, bool]) -> dict[str, Any]:
    """
    Evaluate claim statuses from evidence validity.

    Args:
        document: Envelope JSON text
        evidence: Evidence gid to validity

    Returns:
        Claim statuses and root verdict
    """
    audit_event("tool_call", tool="evaluate", evidence=len(evidence))
    return await core.evaluate_model(document, evidence)


@mcp.tool()
async def render_report(
    document: str,
    lang: str | None = None,
    format: str = "md",
    include_diagnostics: bool = False,
    evidence: dict[str, bool] | None = None,
) -> dict[str, Any]:
    """
    Render an assurance case report.

    Args:
        document: Envelope JSON text
        lang: Language tag
        format: md or txt
        include_diagnostics: Append validation diagnostics
        evidence: Optional evidence map used to fill claim statuses

    Returns:
        Report text
    """
    audit_event("tool_call", tool="report", format=format)
    if format not in ("md", "txt"):
        return {"error": f"Unknown report format {format!r}; use md or txt"}
    return await core.render_report(
        document,
        lang=lang,
        format=format,  # type: ignore[arg-type]
        include_diagnostics=include_diagnostics,
        evidence=evidence,
    )


# =============================================================================
# Entry Point
# =============================================================================
def main() -> None:
    """Run the acm-toolkit MCP server."""
    configure_logging()
    logger.info(f"Starting {config.server_name} v{__version__}")
    logger.info(f"Transport: {config.transport}")
    mcp.run(transport=config.transport)


if __name__ == "__main__":
    main()
