"""Artifact component: evidence and provenance assets.

External material is referenced through Properties attached to an asset. A
Property named ``URI`` holds a location (file path or URI) in its description;
a Property named ``QUERY`` holds a query text selecting elements inside that
resource. Query text is stored verbatim and never executed.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import ClassVar
from urllib.parse import unquote, urlparse

from ..core.exceptions import InvalidArgument, NoUriProperty
from ..core.strings import LangString, MultiLangString
from ..core.types import AssetKind
from .base import ArtifactElement, Package, PackageBinding, PackageInterface
from .document import ModelDocument

logger = logging.getLogger(__name__)

URI_PROPERTY = "URI"
QUERY_PROPERTY = "QUERY"
PURPOSE_PROPERTY = "purpose"


@dataclass(kw_only=True)
class ArtifactPackage(Package):
    family: ClassVar[str] = "artifact"


@dataclass(kw_only=True)
class ArtifactPackageInterface(PackageInterface, ArtifactPackage):
    pass


@dataclass(kw_only=True)
class ArtifactPackageBinding(PackageBinding, ArtifactPackage):
    pass


@dataclass(kw_only=True)
class ArtifactGroup(ArtifactElement):
    """Selective grouping of ArtifactElements."""

    own_refs = ("member_ids",)

    member_ids: list[str] = field(default_factory=list)


@dataclass(kw_only=True)
class ArtifactAsset(ArtifactElement, abstract=True):
    """Asset that carries Properties (owned through owner_gid)."""


@dataclass(kw_only=True)
class Artifact(ArtifactAsset):
    pass


@dataclass(kw_only=True)
class Activity(ArtifactAsset):
    pass


@dataclass(kw_only=True)
class Event(ArtifactAsset):
    pass


@dataclass(kw_only=True)
class Participant(ArtifactAsset):
    pass


@dataclass(kw_only=True)
class Technique(ArtifactAsset):
    pass


@dataclass(kw_only=True)
class Resource(ArtifactAsset):
    pass


@dataclass(kw_only=True)
class Property(ArtifactElement):
    """Named attribute of an asset; the value is the description."""

    def __post_init__(self) -> None:
        if self.name is None or not self.name.content:
            raise InvalidArgument("Property name must not be empty")

    def value(self, lang: str = "en") -> str:
        return self.description.localize(lang) if self.description else ""


@dataclass(kw_only=True)
class ArtifactAssetRelationship(ArtifactAsset):
    """Links ArtifactAssets, e.g. an Activity to the Participants performing it."""

    own_refs = ("source_ids", "target_ids")

    source_ids: list[str] = field(default_factory=list)
    target_ids: list[str] = field(default_factory=list)


ASSET_CLASSES: dict[AssetKind, type[ArtifactAsset]] = {
    AssetKind.ARTIFACT: Artifact,
    AssetKind.ACTIVITY: Activity,
    AssetKind.EVENT: Event,
    AssetKind.PARTICIPANT: Participant,
    AssetKind.TECHNIQUE: Technique,
    AssetKind.RESOURCE: Resource,
}


@dataclass(frozen=True)
class ResourceReport:
    """Outcome of probing one asset's external resource."""

    asset: str
    uri: str
    path: Path | None
    exists: bool
    query: str | None = None

    def to_dict(self) -> dict[str, object]:
        return {
            "asset": self.asset,
            "uri": self.uri,
            "path": str(self.path) if self.path is not None else None,
            "exists": self.exists,
            "query": self.query,
        }


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------
def add_asset(
    doc: ModelDocument, pkg: str, kind: AssetKind | str, name: str, lang: str = "en"
) -> str:
    """Create an asset of ``kind`` owned by the ArtifactPackage ``pkg``."""
    try:
        asset_kind = AssetKind(kind)
    except ValueError:
        raise InvalidArgument(f"Unknown artifact asset kind: {kind!r}") from None
    doc.require(pkg, ArtifactPackage, role="package")
    asset = ASSET_CLASSES[asset_kind](name=LangString(lang=lang, content=name))
    doc.add(asset, owner=pkg)
    logger.debug(f"Added {asset.kind} {asset.gid} to {pkg}")
    return asset.gid


def properties(doc: ModelDocument, asset: str) -> list[Property]:
    return doc.children(asset, Property)


def find_property(doc: ModelDocument, asset: str, name: str) -> Property | None:
    for prop in properties(doc, asset):
        if prop.name is not None and prop.name.content == name:
            return prop
    return None


def _set_property(doc: ModelDocument, asset: str, name: str, text: str, lang: str) -> Property:
    for prop in properties(doc, asset):
        if prop.name is not None and prop.name.content == name:
            doc.remove(prop.gid)
    prop = Property(
        name=LangString(lang=lang, content=name),
        description=MultiLangString.of(text, lang),
    )
    return doc.add(prop, owner=asset)


def set_external_resource(
    doc: ModelDocument, asset: str, uri: str, lang: str = "en"
) -> ModelDocument:
    """Attach (or replace) the asset's URI Property."""
    doc.require(asset, ArtifactAsset, role="asset")
    _set_property(doc, asset, URI_PROPERTY, uri, lang)
    return doc


def set_external_query(
    doc: ModelDocument, asset: str, query: str, lang: str = "en"
) -> ModelDocument:
    """Attach (or replace) the asset's QUERY Property. The text is never executed."""
    doc.require(asset, ArtifactAsset, role="asset")
    _set_property(doc, asset, QUERY_PROPERTY, query, lang)
    return doc


def _local_path(uri: str, base_dir: Path) -> Path | None:
    parsed = urlparse(uri)
    if parsed.scheme == "file":
        return Path(unquote(parsed.path))
    # Single-letter schemes are Windows drive letters
    if parsed.scheme and len(parsed.scheme) > 1:
        return None
    path = Path(uri)
    return path if path.is_absolute() else base_dir / path


def resolve_external_resource(
    doc: ModelDocument, asset: str, base_dir: str | Path | None = None
) -> ResourceReport:
    """Report whether the asset's URI names an existing local file.

    Relative URIs are joined to ``base_dir``, defaulting to the directory the
    document was loaded from. Non-file URIs are reported as not existing.
    """
    doc.require(asset, ArtifactAsset, role="asset")
    uri_prop = find_property(doc, asset, URI_PROPERTY)
    if uri_prop is None or not uri_prop.value():
        raise NoUriProperty(asset)
    uri = uri_prop.value()
    root = Path(base_dir) if base_dir is not None else (doc.base_dir or Path.cwd())
    path = _local_path(uri, root)
    exists = path is not None and path.is_file()
    query_prop = find_property(doc, asset, QUERY_PROPERTY)
    query = query_prop.value() if query_prop is not None else None
    if not exists:
        logger.info(f"External resource of {asset} not found: {uri}")
    return ResourceReport(asset=asset, uri=uri, path=path, exists=exists, query=query)


def resolve_external_resources(
    doc: ModelDocument, base_dir: str | Path | None = None
) -> list[ResourceReport]:
    """One report per asset carrying a URI Property, in gid order."""
    reports = []
    for asset in sorted(doc.of_type(ArtifactAsset), key=lambda a: a.gid):
        if find_property(doc, asset.gid, URI_PROPERTY) is not None:
            reports.append(resolve_external_resource(doc, asset.gid, base_dir))
    return reports


def relate_assets(
    doc: ModelDocument,
    src_ids: list[str],
    tgt_ids: list[str],
    purpose: str | None = None,
    pkg: str | None = None,
    lang: str = "en",
) -> str:
    """Create an ArtifactAssetRelationship between existing assets.

    The relationship is owned by ``pkg``, or by the package of the first source.
    """
    if not src_ids or not tgt_ids:
        raise InvalidArgument("relate_assets needs at least one source and one target")
    for gid in [*src_ids, *tgt_ids]:
        doc.require(gid, ArtifactAsset, role="endpoint")
    if pkg is None:
        owner = doc.package_of(doc.get(src_ids[0]))
        if owner is None:
            raise InvalidArgument(f"Asset {src_ids[0]} is not inside a package")
        pkg = owner.gid
    rel = ArtifactAssetRelationship(source_ids=list(src_ids), target_ids=list(tgt_ids))
    doc.add(rel, owner=pkg)
    if purpose:
        _set_property(doc, rel.gid, PURPOSE_PROPERTY, purpose, lang)
    return rel.gid
