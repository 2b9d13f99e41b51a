"""Shared enumerations."""

from enum import IntEnum, StrEnum


class Notation(StrEnum):
    """Document notations understood by the interchange format."""

    SACM = "sacm"
    GSN = "gsn"
    CAE = "cae"


class Declaration(StrEnum):
    """Assertion declarations."""

    ASSERTED = "asserted"  # default
    NEEDS_SUPPORT = "needsSupport"
    ASSUMED = "assumed"
    AXIOMATIC = "axiomatic"
    DEFEATED = "defeated"
    AS_CITED = "asCited"


class AssetKind(StrEnum):
    """Kinds accepted by add_asset."""

    ARTIFACT = "Artifact"
    ACTIVITY = "Activity"
    EVENT = "Event"
    PARTICIPANT = "Participant"
    TECHNIQUE = "Technique"
    RESOURCE = "Resource"


class RelationshipKind(StrEnum):
    """SACM asserted relationship kinds."""

    INFERENCE = "AssertedInference"
    EVIDENCE = "AssertedEvidence"
    CONTEXT = "AssertedContext"
    ARTIFACT_SUPPORT = "AssertedArtifactSupport"
    ARTIFACT_CONTEXT = "AssertedArtifactContext"


class Severity(StrEnum):
    """Diagnostic severities."""

    ERROR = "error"
    WARNING = "warning"


class ClaimStatus(StrEnum):
    """Result of argument evaluation for one claim."""

    SUPPORTED = "supported"
    UNSUPPORTED = "unsupported"
    ASSUMED = "assumed"
    AXIOMATIC = "axiomatic"
    DEFEATED = "defeated"


class ExitCode(IntEnum):
    """Process exit codes of the acm command."""

    SUCCESS = 0
    VALIDATION_ERRORS = 1
    USAGE_ERROR = 2
    OPERATION_FAILED = 3
