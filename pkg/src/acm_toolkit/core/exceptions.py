"""Custom exceptions for acm-toolkit."""

from collections.abc import Iterable, Sequence
from typing import Any


class AcmError(Exception):
    """Base exception for acm-toolkit errors."""

    pass


class InvalidArgument(AcmError):
    """An operation received an argument outside its domain."""

    pass


class EmptyString(AcmError):
    """A MultiLangString with no entries was asked for text."""

    pass


class SelfReference(AcmError):
    """An element was linked to itself where that is forbidden."""

    pass


class DuplicateGid(AcmError):
    """Two elements in one document share a gid."""

    def __init__(self, gid: str) -> None:
        super().__init__(f"Duplicate gid: {gid}")
        self.gid = gid


class MissingElement(AcmError):
    """One or more gids do not resolve in the document."""

    def __init__(self, gids: str | Iterable[str], message: str | None = None) -> None:
        self.gids = [gids] if isinstance(gids, str) else list(gids)
        super().__init__(message or f"Unresolved element(s): {', '.join(self.gids)}")


class KindMismatch(AcmError):
    """An element has the wrong kind for the role it is used in."""

    def __init__(self, message: str, rule: str | None = None, index: int | None = None) -> None:
        prefix = f"connector {index}: " if index is not None else ""
        super().__init__(prefix + message)
        self.rule = rule
        self.index = index


class CitationCycle(AcmError):
    """Following cited_element links returned to an element already visited."""

    def __init__(self, cycle: Sequence[str]) -> None:
        super().__init__(f"Citation cycle: {' -> '.join(cycle)}")
        self.cycle = list(cycle)


class NoUriProperty(AcmError):
    """An artifact asset carries no URI property."""

    def __init__(self, gid: str) -> None:
        super().__init__(f"Asset {gid} has no URI property")
        self.gid = gid


class ExpressionDepthExceeded(AcmError):
    """Nested Expression rendering went deeper than the configured limit."""

    def __init__(self, gid: str, limit: int) -> None:
        super().__init__(f"Expression {gid} nests deeper than {limit} levels")
        self.gid = gid
        self.limit = limit


# ---------------------------------------------------------------------------
# Transformation / evaluation
# ---------------------------------------------------------------------------
class PreconditionFailed(AcmError):
    """Validation errors block the requested operation."""

    def __init__(self, message: str, diagnostics: Sequence[Any] = ()) -> None:
        super().__init__(message)
        self.diagnostics = list(diagnostics)


class StrategyDangling(AcmError):
    """A GSN Strategy has no incoming SupportedBy."""

    def __init__(self, gid: str) -> None:
        super().__init__(f"Strategy {gid} has no incoming SupportedBy")
        self.gid = gid


class ArgumentDangling(AcmError):
    """A CAE Argument has no Supports edge."""

    def __init__(self, gid: str) -> None:
        super().__init__(f"Argument {gid} has no Supports edge")
        self.gid = gid


# ---------------------------------------------------------------------------
# Pattern instantiation
# ---------------------------------------------------------------------------
class InstantiationError(AcmError):
    """Error while instantiating a pattern."""

    pass


class UnbalancedBraces(InstantiationError):
    """A text has an unmatched or nested role brace."""

    def __init__(self, gid: str, text: str) -> None:
        super().__init__(f"Unbalanced braces in {gid}: {text!r}")
        self.gid = gid
        self.text = text


class MissingBinding(InstantiationError):
    """A role (or decorated connector) has no entry in the binding table."""

    def __init__(self, role: str) -> None:
        super().__init__(f"No binding for {role!r}")
        self.role = role


class CountMismatch(InstantiationError):
    """A list-valued role does not have as many values as its Many connector."""

    def __init__(self, connector: str, expected: int, got: int) -> None:
        super().__init__(f"Connector {connector}: expected {expected} value(s), got {got}")
        self.connector = connector
        self.expected = expected
        self.got = got


class ChoiceOutOfRange(InstantiationError):
    """A choice subset violates its group's bounds or membership."""

    def __init__(self, group: str, size: int, low: int, high: int) -> None:
        super().__init__(f"Choice {group}: {size} selected, allowed {low}..{high}")
        self.group = group
        self.size = size
        self.low = low
        self.high = high


# ---------------------------------------------------------------------------
# Interchange
# ---------------------------------------------------------------------------
class InterchangeError(AcmError):
    """Error reading or writing an envelope document."""

    pass


class ParseError(InterchangeError):
    """The input is not valid UTF-8 JSON."""

    def __init__(self, message: str, line: int = 0, col: int = 0) -> None:
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


class SchemaError(InterchangeError):
    """The JSON does not match the envelope schema."""

    def __init__(self, path: str, message: str) -> None:
        super().__init__(f"{path}: {message}")
        self.path = path


class DanglingReference(InterchangeError):
    """Cross-reference gids that do not resolve within the document."""

    def __init__(self, gids: Iterable[str]) -> None:
        self.gids = sorted(set(gids))
        super().__init__(f"Dangling reference(s): {', '.join(self.gids)}")
