"""Total functions between finite spaces."""

import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, Mapping, Tuple

from etheta.errors import DomainMismatch, NotASubset
from etheta.space.finite_space import FiniteSpace, product, subspace
from etheta.space.pointset import MaskLike, PointSet, as_mask, iter_bits


@dataclass(frozen=True)
class SpaceMap:
    """
    A function ``domain → codomain``.

    ``images[i]`` is the codomain index of domain point ``i``.
    """

    domain: FiniteSpace
    codomain: FiniteSpace
    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.domain.size:
            raise DomainMismatch(
                f"map has {len(self.images)} images for {self.domain.size} domain points"
            )
        for value in self.images:
            if not 0 <= value < self.codomain.size:
                raise DomainMismatch(f"image index {value} outside the codomain")

    def __call__(self, x: int) -> int:
        return self.images[x]

    def image(self, subset: MaskLike) -> int:
        """f[A] as a codomain mask."""
        result = 0
        for x in iter_bits(as_mask(subset)):
            result |= 1 << self.images[x]
        return result

    def preimage(self, subset: MaskLike) -> int:
        """f⁻¹[B] as a domain mask."""
        target = as_mask(subset)
        result = 0
        for x, y in enumerate(self.images):
            if target >> y & 1:
                result |= 1 << x
        return result

    def graph(self) -> PointSet:
        """G(f) inside the carrier of X × Y (point (x, y) at x·|Y| + y)."""
        width = self.codomain.size
        bits = 0
        for x, y in enumerate(self.images):
            bits |= 1 << (x * width + y)
        return PointSet(bits, self.domain.size * width)

    def is_surjective(self) -> bool:
        return len(set(self.images)) == self.codomain.size

    def is_injective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def to_labels(self) -> Dict[str, str]:
        return {
            self.domain.point_names[x]: self.codomain.point_names[y]
            for x, y in enumerate(self.images)
        }


def identity_map(space: FiniteSpace) -> SpaceMap:
    return SpaceMap(space, space, tuple(range(space.size)))


def constant_map(domain: FiniteSpace, codomain: FiniteSpace, label: str) -> SpaceMap:
    value = codomain.point_index(label)
    return SpaceMap(domain, codomain, (value,) * domain.size)


def map_from_labels(
    domain: FiniteSpace,
    codomain: FiniteSpace,
    table: Mapping[str, str],
) -> SpaceMap:
    """
    Build a map from a label association table.

    Raises:
        DomainMismatch: If the table is not total on the domain or names
            labels outside either ground set.
    """
    extra = set(table) - set(domain.point_names)
    if extra:
        raise DomainMismatch(f"unknown domain points: {sorted(extra)}")
    images = []
    for label in domain.point_names:
        if label not in table:
            raise DomainMismatch(f"no image for domain point {label!r}")
        try:
            images.append(codomain.point_index(table[label]))
        except NotASubset as e:
            raise DomainMismatch(str(e)) from None
    return SpaceMap(domain, codomain, tuple(images))


def enumerate_maps(domain: FiniteSpace, codomain: FiniteSpace) -> Iterator[SpaceMap]:
    """All |Y|^|X| maps in lexicographic image order."""
    for images in itertools.product(range(codomain.size), repeat=domain.size):
        yield SpaceMap(domain, codomain, images)


def compose(f: SpaceMap, g: SpaceMap) -> SpaceMap:
    """
    g ∘ f.

    Raises:
        DomainMismatch: If the codomain of ``f`` is not the domain of ``g``.
    """
    if f.codomain != g.domain:
        raise DomainMismatch("codomain of the first map is not the domain of the second")
    return SpaceMap(f.domain, g.codomain, tuple(g.images[y] for y in f.images))


def restrict(f: SpaceMap, subset: MaskLike) -> SpaceMap:
    """
    f restricted to a nonempty subspace of its domain.

    Raises:
        EmptyCarrier: If the subset is empty.
    """
    carrier = as_mask(subset)
    domain = subspace(f.domain, carrier)
    return SpaceMap(domain, f.codomain, tuple(f.images[x] for x in iter_bits(carrier)))


def product_projections(space_x: FiniteSpace, space_y: FiniteSpace) -> Tuple[SpaceMap, SpaceMap]:
    """The two coordinate projections of X × Y."""
    joint = product(space_x, space_y)
    width = space_y.size
    first = SpaceMap(joint, space_x, tuple(i // width for i in range(joint.size)))
    second = SpaceMap(joint, space_y, tuple(i % width for i in range(joint.size)))
    return first, second
