"""GSN and CAE to SACM transformations."""

from .cae import cae_to_sacm
from .gsn import gsn_to_sacm
from .trace import TraceLink, TransformResult, trace_lookup, trace_sources

__all__ = [
    "TraceLink",
    "TransformResult",
    "cae_to_sacm",
    "gsn_to_sacm",
    "trace_lookup",
    "trace_sources",
]
