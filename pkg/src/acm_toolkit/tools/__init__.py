"""MCP tool implementations."""

from .core import (
    evaluate_model,
    instantiate_pattern,
    render_report,
    transform_model,
    validate_model,
)

__all__ = [
    "evaluate_model",
    "instantiate_pattern",
    "render_report",
    "transform_model",
    "validate_model",
]
