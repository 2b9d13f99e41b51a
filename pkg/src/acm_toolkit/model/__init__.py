"""Element metamodels: SACM components plus the GSN and CAE extensions.

Importing this package registers every concrete element kind in
``ELEMENT_KINDS``.
"""

from .argumentation import (
    ArgumentAsset,
    ArgumentPackage,
    ArgumentPackageBinding,
    ArgumentPackageInterface,
    ArgumentReasoning,
    AssertedArtifactContext,
    AssertedArtifactSupport,
    AssertedContext,
    AssertedEvidence,
    AssertedInference,
    AssertedRelationship,
    Assertion,
    ArtifactReference,
    Claim,
    add_artifact_reference,
    add_claim,
    add_reasoning,
    add_relationship,
    attach_meta_claim,
    attach_reasoning,
)
from .artifact import (
    Activity,
    Artifact,
    ArtifactAsset,
    ArtifactAssetRelationship,
    ArtifactGroup,
    ArtifactPackage,
    ArtifactPackageBinding,
    ArtifactPackageInterface,
    Event,
    Participant,
    Property,
    Resource,
    ResourceReport,
    Technique,
    add_asset,
    relate_assets,
    resolve_external_resource,
    resolve_external_resources,
    set_external_query,
    set_external_resource,
)
from .base import (
    ELEMENT_KINDS,
    ArtifactElement,
    AssuranceCasePackage,
    AssuranceCasePackageBinding,
    AssuranceCasePackageInterface,
    Element,
    ImplementationConstraint,
    ModelElement,
    Note,
    Package,
    PackageBinding,
    PackageInterface,
    TaggedValue,
    new_gid,
)
from .cae import (
    Argument,
    CAEClaim,
    CAEModule,
    CAEModuleBinding,
    CAEModuleInterface,
    CaeAssumption,
    Evidence,
    IsEvidenceFor,
    IsSubClaimOf,
    Supports,
    build_cae_structure,
)
from .citation import cite, resolve_citation
from .document import ModelDocument, create_model
from .gsn import (
    Assumption,
    AwayContext,
    AwayGoal,
    AwaySolution,
    ChoiceGroup,
    Context,
    ContractModule,
    ContractModuleReference,
    Decorators,
    Goal,
    GsnConnector,
    GsnModule,
    InContextOf,
    Justification,
    ModuleReference,
    Solution,
    Strategy,
    SupportedBy,
    build_goal_structure,
    roots,
)
from .terminology import (
    Category,
    Expression,
    ExpressionElement,
    Term,
    TerminologyAsset,
    TerminologyGroup,
    TerminologyInterface,
    TerminologyPackage,
    TerminologyPackageBinding,
    define_expression,
    define_term,
    render_expression,
)

__all__ = [
    "ELEMENT_KINDS",
    "Activity",
    "Argument",
    "ArgumentAsset",
    "ArgumentPackage",
    "ArgumentPackageBinding",
    "ArgumentPackageInterface",
    "ArgumentReasoning",
    "Artifact",
    "ArtifactAsset",
    "ArtifactAssetRelationship",
    "ArtifactElement",
    "ArtifactGroup",
    "ArtifactPackage",
    "ArtifactPackageBinding",
    "ArtifactPackageInterface",
    "ArtifactReference",
    "AssertedArtifactContext",
    "AssertedArtifactSupport",
    "AssertedContext",
    "AssertedEvidence",
    "AssertedInference",
    "AssertedRelationship",
    "Assertion",
    "Assumption",
    "AssuranceCasePackage",
    "AssuranceCasePackageBinding",
    "AssuranceCasePackageInterface",
    "AwayContext",
    "AwayGoal",
    "AwaySolution",
    "CAEClaim",
    "CAEModule",
    "CAEModuleBinding",
    "CAEModuleInterface",
    "CaeAssumption",
    "Category",
    "ChoiceGroup",
    "Claim",
    "Context",
    "ContractModule",
    "ContractModuleReference",
    "Decorators",
    "Element",
    "Event",
    "Evidence",
    "Expression",
    "ExpressionElement",
    "Goal",
    "GsnConnector",
    "GsnModule",
    "ImplementationConstraint",
    "InContextOf",
    "IsEvidenceFor",
    "IsSubClaimOf",
    "Justification",
    "ModelDocument",
    "ModelElement",
    "ModuleReference",
    "Note",
    "Package",
    "PackageBinding",
    "PackageInterface",
    "Participant",
    "Property",
    "Resource",
    "ResourceReport",
    "Solution",
    "Strategy",
    "SupportedBy",
    "Supports",
    "TaggedValue",
    "Technique",
    "Term",
    "TerminologyAsset",
    "TerminologyGroup",
    "TerminologyInterface",
    "TerminologyPackage",
    "TerminologyPackageBinding",
    "add_artifact_reference",
    "add_asset",
    "add_claim",
    "add_reasoning",
    "add_relationship",
    "attach_meta_claim",
    "attach_reasoning",
    "build_cae_structure",
    "build_goal_structure",
    "cite",
    "create_model",
    "define_expression",
    "define_term",
    "new_gid",
    "relate_assets",
    "render_expression",
    "resolve_citation",
    "resolve_external_resource",
    "resolve_external_resources",
    "roots",
    "set_external_query",
    "set_external_resource",
]
