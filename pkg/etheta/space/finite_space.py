"""Finite topological spaces: validation, generation, subspaces and products."""

import logging
from typing import Iterable, List, Optional, Sequence, Tuple

from etheta.errors import (
    CarrierTooLarge,
    DuplicateLabel,
    EmptyCarrier,
    MissingEmpty,
    MissingFull,
    NotASubset,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
)
from etheta.space.pointset import (
    MaskLike,
    PointSet,
    SetFamily,
    as_mask,
    family_or_masks,
    iter_bits,
)

logger = logging.getLogger(__name__)

DEFAULT_POINT_LIMIT = 16


class FiniteSpace:
    """
    A finite topological space.

    The ground set is ``point_names`` (position = bit index) and ``opens`` is
    the topology. The constructor trusts its input; use
    :func:`validate_topology` to build a checked space. Instances are
    immutable and hashable.
    """

    __slots__ = ("point_names", "opens", "_min_nbhd", "_hash")

    def __init__(self, point_names: Sequence[str], opens: SetFamily) -> None:
        object.__setattr__(self, "point_names", tuple(point_names))
        object.__setattr__(self, "opens", opens)
        full = (1 << len(self.point_names)) - 1
        neighbourhoods = []
        for x in range(len(self.point_names)):
            bit = 1 << x
            nbhd = full
            for u in opens.masks:
                if u & bit:
                    nbhd &= u
            neighbourhoods.append(nbhd)
        object.__setattr__(self, "_min_nbhd", tuple(neighbourhoods))
        object.__setattr__(self, "_hash", hash((self.point_names, opens.masks)))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("FiniteSpace is immutable")

    def __reduce__(self):
        return (FiniteSpace, (self.point_names, self.opens))

    @property
    def size(self) -> int:
        return len(self.point_names)

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def minimal_neighbourhood(self, x: int) -> int:
        """Smallest open set containing point ``x``."""
        return self._min_nbhd[x]

    def closure_bits(self, mask: int) -> int:
        """Points whose minimal neighbourhood meets ``mask``."""
        result = 0
        for x, nbhd in enumerate(self._min_nbhd):
            if nbhd & mask:
                result |= 1 << x
        return result

    def interior_bits(self, mask: int) -> int:
        """Points whose minimal neighbourhood lies inside ``mask``."""
        result = 0
        for x, nbhd in enumerate(self._min_nbhd):
            if nbhd & ~mask == 0:
                result |= 1 << x
        return result

    def closure(self, subset: MaskLike) -> PointSet:
        return PointSet(self.closure_bits(as_mask(subset)), self.size)

    def interior(self, subset: MaskLike) -> PointSet:
        return PointSet(self.interior_bits(as_mask(subset)), self.size)

    def is_open(self, subset: MaskLike) -> bool:
        return as_mask(subset) in self.opens

    def is_closed(self, subset: MaskLike) -> bool:
        return self.full ^ as_mask(subset) in self.opens

    def closed_sets(self) -> SetFamily:
        return self.opens.complements()

    def point_index(self, label: str) -> int:
        try:
            return self.point_names.index(label)
        except ValueError:
            raise NotASubset(f"unknown point {label!r}") from None

    def point_set(self, labels: Iterable[str]) -> PointSet:
        """Build a PointSet from point labels."""
        return PointSet.from_indices((self.point_index(lab) for lab in labels), self.size)

    def labels_of(self, subset: MaskLike) -> List[str]:
        return [self.point_names[i] for i in iter_bits(as_mask(subset))]

    def specialization_preorder(self):
        """Preorder with x ≤ y exactly when y lies in every open set containing x."""
        from etheta.space.preorder import Preorder

        return Preorder(self._min_nbhd)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteSpace):
            return NotImplemented
        return self.point_names == other.point_names and self.opens == other.opens

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"FiniteSpace(points={list(self.point_names)}, opens={self.opens.to_labels(self.point_names)})"


def _check_labels(points: Sequence[str], point_limit: int) -> Tuple[str, ...]:
    seen = set()
    for label in points:
        if label in seen:
            raise DuplicateLabel(label)
        seen.add(label)
    if len(points) > point_limit:
        raise CarrierTooLarge(len(points), point_limit)
    return tuple(points)


def validate_topology(
    points: Sequence[str],
    family: Iterable[MaskLike],
    point_limit: int = DEFAULT_POINT_LIMIT,
) -> FiniteSpace:
    """
    Check the topology laws and build a FiniteSpace.

    Args:
        points: Distinct point labels; position defines the bit index.
        family: Candidate open sets (SetFamily, PointSets or masks).
        point_limit: Largest accepted carrier.

    Returns:
        The validated space.

    Raises:
        DuplicateLabel, NotASubset, MissingEmpty, MissingFull,
        NotClosedUnderUnion, NotClosedUnderIntersection: the first violated law,
            with the offending pair in canonical order.
    """
    names = _check_labels(points, point_limit)
    width = len(names)
    fam = family_or_masks(width, family)
    if fam.width != width:
        raise NotASubset(f"family over {fam.width} points, ground set has {width}")
    full = (1 << width) - 1
    if 0 not in fam:
        raise MissingEmpty()
    if full not in fam:
        raise MissingFull()
    masks = fam.masks
    for i, u in enumerate(masks):
        for v in masks[i + 1:]:
            if u | v not in fam:
                raise NotClosedUnderUnion(PointSet(u, width), PointSet(v, width))
    for i, u in enumerate(masks):
        for v in masks[i + 1:]:
            if u & v not in fam:
                raise NotClosedUnderIntersection(PointSet(u, width), PointSet(v, width))
    return FiniteSpace(names, fam)


def union_closure(masks: Iterable[int]) -> set:
    """All unions of the given masks, including the empty union."""
    result = {0}
    for b in set(masks):
        if b in result:
            continue
        result |= {u | b for u in result}
    return result


def generate_topology(
    points: Sequence[str],
    subbasis: Iterable[MaskLike],
    point_limit: int = DEFAULT_POINT_LIMIT,
) -> FiniteSpace:
    """
    Smallest topology containing a subbasis.

    Finite intersections are formed first (the empty intersection is the
    ground set), then arbitrary unions (the empty union is ∅).

    Args:
        points: Distinct point labels.
        subbasis: Generating subsets.
        point_limit: Largest accepted carrier.

    Returns:
        The generated space; never rejects a subbasis.
    """
    names = _check_labels(points, point_limit)
    width = len(names)
    full = (1 << width) - 1
    basis = {full}
    frontier = set(family_or_masks(width, subbasis).masks)
    while frontier:
        basis |= frontier
        frontier = {a & b for a in basis for b in frontier} - basis
    return FiniteSpace(names, SetFamily(width, union_closure(basis)))


def closure(space: FiniteSpace, subset: MaskLike) -> PointSet:
    """Smallest closed superset of ``subset``."""
    return space.closure(subset)


def interior(space: FiniteSpace, subset: MaskLike) -> PointSet:
    """Union of all open subsets of ``subset``."""
    return space.interior(subset)


def compress(mask: int, carrier: int) -> int:
    """Re-index the members of ``mask`` inside ``carrier`` to consecutive bits."""
    result = 0
    for position, index in enumerate(iter_bits(carrier)):
        if mask >> index & 1:
            result |= 1 << position
    return result


def subspace(space: FiniteSpace, subset: MaskLike) -> FiniteSpace:
    """
    Subspace topology on a nonempty subset.

    Args:
        space: Ambient space.
        subset: Carrier of the subspace.

    Returns:
        Space whose opens are the traces U ∩ A, re-indexed onto A.

    Raises:
        EmptyCarrier: If the subset is empty.
    """
    carrier = as_mask(subset)
    if carrier & ~space.full:
        raise NotASubset(f"mask {carrier:#b} on {space.size} points")
    if carrier == 0:
        raise EmptyCarrier("subspace")
    names = [space.point_names[i] for i in iter_bits(carrier)]
    traces = {compress(u & carrier, carrier) for u in space.opens.masks}
    return FiniteSpace(names, SetFamily(len(names), traces))


def product(
    space_x: FiniteSpace,
    space_y: FiniteSpace,
    point_limit: int = DEFAULT_POINT_LIMIT,
) -> FiniteSpace:
    """
    Product topology generated by open rectangles.

    Point (i, j) sits at index ``i * |Y| + j`` and is labelled ``"x.y"``.

    Raises:
        CarrierTooLarge: If |X|·|Y| exceeds ``point_limit``.
    """
    m = space_y.size
    size = space_x.size * m
    if size > point_limit:
        raise CarrierTooLarge(size, point_limit)
    names = [f"{x}.{y}" for x in space_x.point_names for y in space_y.point_names]
    rectangles = {
        rectangle(u, v, m) for u in space_x.opens.masks for v in space_y.opens.masks
    }
    logger.debug("product of %d and %d points: %d rectangles", space_x.size, m, len(rectangles))
    return FiniteSpace(names, SetFamily(size, union_closure(rectangles)))


def rectangle(u: int, v: int, width_y: int) -> int:
    """Mask of U × V inside a product whose second factor has ``width_y`` points."""
    result = 0
    for i in iter_bits(u):
        result |= v << (i * width_y)
    return result


def discrete_opens(width: int) -> SetFamily:
    return SetFamily.power_set(width)


def default_labels(n: int) -> List[str]:
    """Point labels ``a, b, c, …`` used for generated spaces."""
    if n <= 26:
        return [chr(ord("a") + i) for i in range(n)]
    return [f"p{i}" for i in range(n)]


def check_point_limit(space: FiniteSpace, limit: Optional[int]) -> None:
    if limit is not None and space.size > limit:
        raise CarrierTooLarge(space.size, limit)
