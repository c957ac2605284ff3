"""Utility modules for etheta."""

from etheta.utils.config import load_config
from etheta.utils.documents import (
    load_map,
    load_space,
    parse_set_literal,
    save_space,
    serialize_space,
    space_from_document,
    space_to_document,
)

__all__ = [
    "load_config",
    "load_space",
    "save_space",
    "load_map",
    "serialize_space",
    "space_to_document",
    "space_from_document",
    "parse_set_literal",
]
