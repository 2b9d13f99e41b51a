"""Structured audit events for CLI commands and MCP tool calls.

One JSON line per event on stderr, and nothing at all unless
``config.audit_log`` is set.
"""

import sys
from typing import Any

import structlog

from .config import config


def _audit_logger() -> Any:
    # Bound per call so redirected stderr (tests, daemons) is honoured
    return structlog.wrap_logger(
        structlog.PrintLogger(file=sys.stderr),
        processors=[
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso", utc=True),
            structlog.processors.JSONRenderer(sort_keys=True),
        ],
    )


def audit_event(event: str, **fields: Any) -> None:
    """Log a structured audit event (no-op if audit_log is disabled)."""
    if not config.audit_log:
        return
    _audit_logger().info(event, **fields)
