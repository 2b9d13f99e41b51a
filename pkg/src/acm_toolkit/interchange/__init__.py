"""Canonical JSON interchange (``.acm.json``) for SACM, GSN and CAE documents."""

from .codec import FILE_SUFFIX, dumps, load, load_file, save, save_file, write_bytes
from .schema import Envelope, parse_json

__all__ = [
    "FILE_SUFFIX",
    "Envelope",
    "dumps",
    "load",
    "load_file",
    "parse_json",
    "save",
    "save_file",
    "write_bytes",
]
