"""Rule checks over model documents and argument status evaluation."""

from .diagnostics import RULES, Diagnostic, Rule, has_errors, sort_diagnostics
from .evaluate import HOLDS, Evaluation, evaluate, root_claims
from .rules import check, inference_graph, supported_ends, supporting_ends

__all__ = [
    "HOLDS",
    "RULES",
    "Diagnostic",
    "Evaluation",
    "Rule",
    "check",
    "evaluate",
    "has_errors",
    "inference_graph",
    "root_claims",
    "sort_diagnostics",
    "supported_ends",
    "supporting_ends",
]
