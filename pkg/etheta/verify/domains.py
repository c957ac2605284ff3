"""Quantifier domains: lazily enumerated instances, their descriptions and rebuilds."""

import itertools
import logging
from typing import Any, Dict, Iterator, List

from etheta.maps.space_map import enumerate_maps
from etheta.space.finite_space import FiniteSpace
from etheta.space.preorder import enumerate_spaces_up_to
from etheta.utils.documents import (
    map_from_document,
    map_to_document,
    space_from_document,
    space_to_document,
)
from etheta.verify.claims import Bounds, ClaimSpec, Domain

logger = logging.getLogger(__name__)


def _spaces(max_points: int, min_points: int = 1) -> List[FiniteSpace]:
    if min_points > max_points:
        return []
    return list(enumerate_spaces_up_to(max_points, min_points))


def _maps(sources: List[FiniteSpace], targets: List[FiniteSpace]) -> Iterator[Any]:
    for x, y in itertools.product(sources, targets):
        yield from enumerate_maps(x, y)


def _chains(spaces: List[FiniteSpace], min_points: int) -> Iterator[Any]:
    for x in spaces:
        if x.size < min_points:
            continue
        for y, z in itertools.product(spaces, spaces):
            # The second maps are reused for every first map.
            seconds = list(enumerate_maps(y, z))
            for f in enumerate_maps(x, y):
                yield from zip(itertools.repeat(f), seconds)


def instances(spec: ClaimSpec, bounds: Bounds) -> Iterator[Any]:
    """
    Every instance of a claim's domain, in canonical search order.

    Spaces come in enumeration order, maps in lexicographic image order
    inside each ordered (domain, codomain) pair. A stratified claim under
    ``strata="top"`` keeps only carriers of exactly the bound size.

    Instances are generated on demand; only the underlying space lists
    are held in memory.
    """
    limit = bounds.limit(spec.bound)
    if spec.domain is Domain.GOLDEN:
        return iter([None])
    if spec.domain is Domain.SPACES:
        return iter(_spaces(limit, spec.min_points))
    if spec.domain is Domain.SPACE_PAIRS:
        spaces = _spaces(limit, spec.min_points)
        return itertools.product(spaces, spaces)
    if spec.domain is Domain.MAPS:
        floor = limit if spec.stratified and bounds.strata == "top" else 1
        sources = _spaces(limit, max(floor, spec.min_points))
        targets = _spaces(limit, floor)
        logger.debug("%s: maps over %d x %d spaces", spec.id, len(sources), len(targets))
        return _maps(sources, targets)
    if spec.domain is Domain.MAP_CHAINS:
        return _chains(_spaces(limit), spec.min_points)
    raise ValueError(f"unsupported domain: {spec.domain}")


def describe(domain: Domain, instance: Any) -> Dict[str, Any]:
    """JSON-ready description that ``rebuild`` turns back into the instance."""
    if domain is Domain.GOLDEN:
        return {}
    if domain is Domain.SPACES:
        return {"space": space_to_document(instance)}
    if domain is Domain.SPACE_PAIRS:
        return {"spaces": [space_to_document(s) for s in instance]}
    if domain is Domain.MAPS:
        return {"map": map_to_document(instance)}
    if domain is Domain.MAP_CHAINS:
        return {"maps": [map_to_document(f) for f in instance]}
    raise ValueError(f"unsupported domain: {domain}")


def rebuild(domain: Domain, description: Dict[str, Any]) -> Any:
    if domain is Domain.GOLDEN:
        return None
    if domain is Domain.SPACES:
        return space_from_document(description["space"])
    if domain is Domain.SPACE_PAIRS:
        first, second = description["spaces"]
        return space_from_document(first), space_from_document(second)
    if domain is Domain.MAPS:
        return map_from_document(description["map"])
    if domain is Domain.MAP_CHAINS:
        first, second = description["maps"]
        return map_from_document(first), map_from_document(second)
    raise ValueError(f"unsupported domain: {domain}")
