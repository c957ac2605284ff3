"""Finite topological spaces and their enumeration."""

from etheta.space.pointset import PointSet, SetFamily, minimal_members, popcount, iter_bits
from etheta.space.finite_space import (
    FiniteSpace,
    closure,
    generate_topology,
    interior,
    product,
    subspace,
    validate_topology,
)
from etheta.space.preorder import (
    Preorder,
    enumerate_preorders,
    enumerate_spaces_up_to,
    enumerate_topologies,
)
from etheta.space import library

__all__ = [
    "PointSet",
    "SetFamily",
    "FiniteSpace",
    "Preorder",
    "validate_topology",
    "generate_topology",
    "closure",
    "interior",
    "subspace",
    "product",
    "enumerate_preorders",
    "enumerate_topologies",
    "enumerate_spaces_up_to",
    "minimal_members",
    "popcount",
    "iter_bits",
    "library",
]
