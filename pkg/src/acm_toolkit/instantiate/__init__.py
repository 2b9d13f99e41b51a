"""Pattern instantiation: roles, binding tables and the expansion engine."""

from .bindings import BindingTable, ConnectorBinding, RoleBinding
from .engine import INSTANTIATE_RULE, InstantiationResult, instantiate, verify_instantiation
from .roles import element_roles, extract_roles

__all__ = [
    "INSTANTIATE_RULE",
    "BindingTable",
    "ConnectorBinding",
    "InstantiationResult",
    "RoleBinding",
    "element_roles",
    "extract_roles",
    "instantiate",
    "verify_instantiation",
]
