"""Space and map documents: parsing, serialization and set literals."""

import json
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional

from etheta.errors import DocumentError, NotASubset
from etheta.maps.space_map import SpaceMap, map_from_labels
from etheta.space.finite_space import FiniteSpace, validate_topology
from etheta.space.pointset import PointSet


def space_to_document(space: FiniteSpace) -> Dict[str, Any]:
    """Canonical document: ∅ and X included, opens in canonical order."""
    return {
        "points": list(space.point_names),
        "opens": space.opens.to_labels(space.point_names),
    }


def space_from_document(document: Mapping[str, Any]) -> FiniteSpace:
    """
    Build a validated space from a parsed document.

    ∅ and the ground set are implied when absent.

    Raises:
        DocumentError: If keys are missing or have the wrong shape.
        TopologyError: If the family breaks a topology law.
    """
    if not isinstance(document, Mapping):
        raise DocumentError("space document must be an object")
    points = document.get("points")
    opens = document.get("opens", [])
    if not isinstance(points, list) or not all(isinstance(p, str) for p in points):
        raise DocumentError("'points' must be an array of label strings")
    if not isinstance(opens, list) or not all(isinstance(member, list) for member in opens):
        raise DocumentError("'opens' must be an array of label arrays")
    index = {label: i for i, label in enumerate(points)}
    masks = [0, (1 << len(points)) - 1]
    for member in opens:
        mask = 0
        for label in member:
            if label not in index:
                raise NotASubset(f"unknown point {label!r}")
            mask |= 1 << index[label]
        masks.append(mask)
    return validate_topology(points, masks)


def map_to_document(f: SpaceMap) -> Dict[str, Any]:
    return {
        "domain": space_to_document(f.domain),
        "codomain": space_to_document(f.codomain),
        "map": f.to_labels(),
    }


def map_from_document(
    document: Mapping[str, Any],
    base_dir: Optional[Path] = None,
) -> SpaceMap:
    """
    Build a map from a document whose ends are inline spaces or file paths.

    Args:
        document: Object with ``domain``, ``codomain`` and ``map`` keys.
        base_dir: Directory that relative file references resolve against.

    Raises:
        DocumentError: If a key is missing or malformed.
        DomainMismatch: If the table is not a total function.
    """
    if not isinstance(document, Mapping):
        raise DocumentError("map document must be an object")
    for key in ("domain", "codomain", "map"):
        if key not in document:
            raise DocumentError(f"map document is missing {key!r}")
    table = document["map"]
    if not isinstance(table, Mapping):
        raise DocumentError("'map' must be an object of label pairs")
    domain = _space_reference(document["domain"], base_dir)
    codomain = _space_reference(document["codomain"], base_dir)
    return map_from_labels(domain, codomain, table)


def _space_reference(value: Any, base_dir: Optional[Path]) -> FiniteSpace:
    if isinstance(value, str):
        path = Path(value)
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        return load_space(str(path))
    return space_from_document(value)


def parse_json(text: str) -> Any:
    """
    Parse document text.

    Raises:
        DocumentError: With the line and column of the first syntax error.
    """
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(e.msg, e.lineno, e.colno) from None


def parse_space(text: str) -> FiniteSpace:
    return space_from_document(parse_json(text))


def serialize_space(space: FiniteSpace) -> str:
    """Single-line canonical text; parse then serialize is the identity on it."""
    return json.dumps(space_to_document(space), ensure_ascii=False)


def load_space(path: str) -> FiniteSpace:
    """
    Load a space document from file.

    Raises:
        FileNotFoundError: If the file does not exist.
        DocumentError: If it cannot be parsed.
    """
    path_obj = Path(path)
    if not path_obj.exists():
        raise FileNotFoundError(f"Space document not found: {path}")
    return parse_space(path_obj.read_text(encoding="utf-8"))


def save_space(space: FiniteSpace, path: str) -> None:
    Path(path).write_text(serialize_space(space) + "\n", encoding="utf-8")


def load_map(path: str) -> SpaceMap:
    path_obj = Path(path)
    if not path_obj.exists():
        raise FileNotFoundError(f"Map document not found: {path}")
    return map_from_document(parse_json(path_obj.read_text(encoding="utf-8")), path_obj.parent)


def parse_set_literal(space: FiniteSpace, text: str) -> PointSet:
    """
    Comma-joined labels, no braces; the empty string is ∅.

    Raises:
        DocumentError: If a label is not a point of the space.
    """
    labels = [part.strip() for part in text.split(",")] if text.strip() else []
    try:
        return space.point_set(labels)
    except NotASubset as e:
        raise DocumentError(str(e)) from None


def parse_map_literal(text: str) -> Dict[str, str]:
    """``a:c,b:c`` → ``{"a": "c", "b": "c"}``."""
    table: Dict[str, str] = {}
    column = 1
    for part in text.split(","):
        source, sep, target = part.partition(":")
        if not sep or not source.strip() or not target.strip():
            raise DocumentError(f"expected source:target, got {part!r}", 1, column)
        table[source.strip()] = target.strip()
        column += len(part) + 1
    return table


def format_set(labels: List[str]) -> str:
    return "{" + ",".join(labels) + "}"


__all__ = [
    "space_to_document",
    "space_from_document",
    "map_to_document",
    "map_from_document",
    "parse_json",
    "parse_space",
    "serialize_space",
    "load_space",
    "save_space",
    "load_map",
    "parse_set_literal",
    "parse_map_literal",
    "format_set",
]
