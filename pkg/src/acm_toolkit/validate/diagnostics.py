"""Rule catalog and diagnostic values.

Every rule is a module-level ``Rule`` registered in ``RULES`` when it is
created. Diagnostics are values, never raised.
"""

from dataclasses import dataclass, field
from typing import Final

from ..core.types import Severity

RULES: dict[str, "Rule"] = {}


@dataclass(frozen=True)
class Rule:
    rule_id: str
    severity: Severity
    description: str

    def __post_init__(self) -> None:
        RULES[self.rule_id] = self

    def __str__(self) -> str:
        return f"<Rule {self.rule_id}>"

    def at(self, gids: list[str] | str, message: str) -> "Diagnostic":
        element_gids = [gids] if isinstance(gids, str) else list(gids)
        return Diagnostic(self.rule_id, self.severity, element_gids, message)


GSN_E1: Final = Rule("GSN-E1", Severity.ERROR, "SupportedBy endpoint pair not permitted")
GSN_E2: Final = Rule("GSN-E2", Severity.ERROR, "InContextOf endpoints not permitted")
GSN_E3: Final = Rule("GSN-E3", Severity.ERROR, "Undeveloped element with a supporting connector")
GSN_E4: Final = Rule("GSN-E4", Severity.ERROR, "AwayGoal that is not a resolvable citation")
SACM_E1: Final = Rule("SACM-E1", Severity.ERROR, "Relationship endpoint kind violation")
SACM_E2: Final = Rule("SACM-E2", Severity.ERROR, "Dangling gid reference")
SACM_W3: Final = Rule("SACM-W3", Severity.WARNING, "Citation without cited element")
SACM_W4: Final = Rule("SACM-W4", Severity.WARNING, "Citation cycle")
SACM_W5: Final = Rule("SACM-W5", Severity.WARNING, "Cycle in the inference graph")
SACM_W6: Final = Rule("SACM-W6", Severity.WARNING, "Inference with several targets")
SACM_W7: Final = Rule("SACM-W7", Severity.WARNING, "Artifact asset related to itself")
SACM_W8: Final = Rule("SACM-W8", Severity.WARNING, "Term with both external reference and origin")
SACM_W9: Final = Rule("SACM-W9", Severity.WARNING, "Dangling expression reference")
SACM_W10: Final = Rule("SACM-W10", Severity.WARNING, "Defeated without a counter relationship")
SACM_W11: Final = Rule("SACM-W11", Severity.WARNING, "Interface holds a non-citation element")
SACM_W12: Final = Rule("SACM-W12", Severity.WARNING, "Binding with fewer than two participants")
SACM_W13: Final = Rule("SACM-W13", Severity.WARNING, "Group membership cycle")
SACM_W14: Final = Rule("SACM-W14", Severity.WARNING, "Group member of the wrong kind")
SACM_W15: Final = Rule(
    "SACM-W15", Severity.WARNING, "Expression placeholders and element_refs disagree"
)
INST_E1: Final = Rule("INST-E1", Severity.ERROR, "Residual role placeholder")
INST_E2: Final = Rule("INST-E2", Severity.ERROR, "Abstract element in a concrete package")
INST_E3: Final = Rule("INST-E3", Severity.ERROR, "abstract_form missing or outside the pattern")


@dataclass(frozen=True)
class Diagnostic:
    """One finding: rule, severity, offending element gids and a message."""

    rule_id: str
    severity: Severity
    element_gids: list[str] = field(default_factory=list)
    message: str = ""

    @property
    def is_error(self) -> bool:
        return self.severity == Severity.ERROR

    def sort_key(self) -> tuple[str, str]:
        return self.rule_id, self.element_gids[0] if self.element_gids else ""

    def to_line(self) -> str:
        """``<severity> <rule_id> <gid,...> <message>``"""
        gids = ",".join(self.element_gids) or "-"
        return f"{self.severity} {self.rule_id} {gids} {self.message}"

    def to_dict(self) -> dict[str, object]:
        return {
            "rule_id": self.rule_id,
            "severity": str(self.severity),
            "element_gids": list(self.element_gids),
            "message": self.message,
        }


def sort_diagnostics(diagnostics: list[Diagnostic]) -> list[Diagnostic]:
    return sorted(diagnostics, key=lambda d: (*d.sort_key(), d.message))


def has_errors(diagnostics: list[Diagnostic]) -> bool:
    return any(d.is_error for d in diagnostics)
