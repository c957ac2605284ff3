"""Bit-vector subsets and canonically ordered set families."""

from functools import total_ordering
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from etheta.errors import NotASubset

MaskLike = Union["PointSet", int]


def popcount(mask: int) -> int:
    """Number of members of a bit-vector subset."""
    return bin(mask).count("1")


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the member indices of a mask in ascending order."""
    index = 0
    while mask:
        if mask & 1:
            yield index
        mask >>= 1
        index += 1


def canonical_key(mask: int) -> Tuple[int, int]:
    """Sort key of the canonical family order: cardinality, then numeric value."""
    return (popcount(mask), mask)


def minimal_members(masks: Iterable[int]) -> Tuple[int, ...]:
    """
    Inclusion-minimal members of a collection of masks.

    Args:
        masks: Candidate subsets.

    Returns:
        The antichain of minimal members, in canonical order.
    """
    kept: List[int] = []
    for mask in sorted(set(masks), key=canonical_key):
        if not any(k & mask == k for k in kept):
            kept.append(mask)
    return tuple(kept)


def as_mask(value: MaskLike) -> int:
    """Accept a PointSet or a raw mask."""
    if isinstance(value, PointSet):
        return value.bits
    return int(value)


@total_ordering
class PointSet:
    """
    A subset of a ground set of ``width`` points.

    Bit i is set exactly when point i is a member. Instances are immutable
    and compare in canonical order (cardinality, then numeric value).
    """

    __slots__ = ("bits", "width")

    def __init__(self, bits: int, width: int) -> None:
        if bits < 0 or bits >> width:
            raise NotASubset(f"mask {bits:#b} on {width} points")
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "width", width)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("PointSet is immutable")

    def __reduce__(self) -> Tuple[type, Tuple[int, int]]:
        return (PointSet, (self.bits, self.width))

    @classmethod
    def empty(cls, width: int) -> "PointSet":
        return cls(0, width)

    @classmethod
    def full(cls, width: int) -> "PointSet":
        return cls((1 << width) - 1, width)

    @classmethod
    def from_indices(cls, indices: Iterable[int], width: int) -> "PointSet":
        bits = 0
        for index in indices:
            if not 0 <= index < width:
                raise NotASubset(f"point index {index} on {width} points")
            bits |= 1 << index
        return cls(bits, width)

    @property
    def full_mask(self) -> int:
        return (1 << self.width) - 1

    def complement(self) -> "PointSet":
        return PointSet(self.full_mask ^ self.bits, self.width)

    def issubset(self, other: MaskLike) -> bool:
        return self.bits & ~as_mask(other) == 0

    def isdisjoint(self, other: MaskLike) -> bool:
        return self.bits & as_mask(other) == 0

    def sort_key(self) -> Tuple[int, int]:
        return canonical_key(self.bits)

    def _coerce(self, other: MaskLike) -> int:
        if isinstance(other, PointSet) and other.width != self.width:
            raise NotASubset(f"widths {self.width} and {other.width} differ")
        return as_mask(other)

    def __or__(self, other: MaskLike) -> "PointSet":
        return PointSet(self.bits | self._coerce(other), self.width)

    def __and__(self, other: MaskLike) -> "PointSet":
        return PointSet(self.bits & self._coerce(other), self.width)

    def __sub__(self, other: MaskLike) -> "PointSet":
        return PointSet(self.bits & ~self._coerce(other), self.width)

    def __xor__(self, other: MaskLike) -> "PointSet":
        return PointSet(self.bits ^ self._coerce(other), self.width)

    def __invert__(self) -> "PointSet":
        return self.complement()

    def __contains__(self, index: int) -> bool:
        return bool(self.bits >> index & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.bits == other.bits and self.width == other.width

    def __lt__(self, other: "PointSet") -> bool:
        return self.sort_key() < other.sort_key()

    def __hash__(self) -> int:
        return hash((self.bits, self.width))

    def __repr__(self) -> str:
        return f"PointSet({sorted(self)}, width={self.width})"


class SetFamily:
    """
    A duplicate-free collection of subsets in canonical order.

    Members are stored as masks; membership tests are O(1).
    """

    __slots__ = ("width", "_masks", "_index")

    def __init__(self, width: int, masks: Iterable[MaskLike] = ()) -> None:
        full = (1 << width) - 1
        index = set()
        for value in masks:
            mask = as_mask(value)
            if mask < 0 or mask & ~full:
                raise NotASubset(f"mask {mask:#b} on {width} points")
            index.add(mask)
        self.width = width
        self._masks: Tuple[int, ...] = tuple(sorted(index, key=canonical_key))
        self._index = frozenset(index)

    @classmethod
    def power_set(cls, width: int) -> "SetFamily":
        return cls(width, range(1 << width))

    @property
    def masks(self) -> Tuple[int, ...]:
        return self._masks

    @property
    def members(self) -> Tuple[PointSet, ...]:
        return tuple(PointSet(m, self.width) for m in self._masks)

    @property
    def full_mask(self) -> int:
        return (1 << self.width) - 1

    def containing(self, mask: MaskLike) -> Tuple[int, ...]:
        """Members that are supersets of ``mask``, in canonical order."""
        m = as_mask(mask)
        return tuple(u for u in self._masks if u & m == m)

    def complements(self) -> "SetFamily":
        full = self.full_mask
        return SetFamily(self.width, (full ^ m for m in self._masks))

    def intersection(self, other: "SetFamily") -> "SetFamily":
        return SetFamily(self.width, self._index & other._index)

    def issubset(self, other: "SetFamily") -> bool:
        return self._index <= other._index

    def missing_from_power_set(self) -> Tuple[int, ...]:
        """Masks of the power set that are not members, in canonical order."""
        return tuple(
            m for m in sorted(range(1 << self.width), key=canonical_key) if m not in self._index
        )

    def to_labels(self, names: Sequence[str]) -> List[List[str]]:
        return [[names[i] for i in iter_bits(m)] for m in self._masks]

    def __contains__(self, item: object) -> bool:
        if isinstance(item, PointSet) and item.width != self.width:
            raise NotASubset(f"widths {self.width} and {item.width} differ")
        if isinstance(item, (PointSet, int)):
            return as_mask(item) in self._index
        return False

    def __iter__(self) -> Iterator[PointSet]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self._masks)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.width == other.width and self._masks == other._masks

    def __hash__(self) -> int:
        return hash((self.width, self._masks))

    def __repr__(self) -> str:
        return f"SetFamily(width={self.width}, size={len(self._masks)})"


def family_or_masks(width: int, family: Optional[Iterable[MaskLike]]) -> SetFamily:
    """Coerce an iterable of masks/PointSets into a SetFamily."""
    if isinstance(family, SetFamily):
        return family
    return SetFamily(width, family or ())
