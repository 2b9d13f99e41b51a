"""Core building blocks shared by every acm-toolkit module."""

from .exceptions import (
    AcmError,
    CitationCycle,
    InvalidArgument,
    KindMismatch,
    MissingElement,
)
from .strings import ExpressionLangString, LangString, MultiLangString, localize
from .types import ClaimStatus, Declaration, Notation, Severity

__all__ = [
    "AcmError",
    "CitationCycle",
    "ClaimStatus",
    "Declaration",
    "ExpressionLangString",
    "InvalidArgument",
    "KindMismatch",
    "LangString",
    "MissingElement",
    "MultiLangString",
    "Notation",
    "Severity",
    "localize",
]
