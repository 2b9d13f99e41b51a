"""Role placeholders of a pattern package."""

from ..core.strings import role_labels
from ..model.base import Element
from ..model.document import ModelDocument


def element_roles(element: Element) -> list[str]:
    """Role labels in the texts of one element; UnbalancedBraces names the element."""
    labels: list[str] = []
    for _, text in element.texts():
        for label in role_labels(text, element.gid):
            if label not in labels:
                labels.append(label)
    return labels


def extract_roles(doc: ModelDocument, pattern: str) -> set[str]:
    """Union of the role labels in every abstract element of the pattern package."""
    doc.get(pattern)
    roles: set[str] = set()
    for element in doc.subtree(pattern):
        if element.is_abstract:
            roles.update(element_roles(element))
    return roles
