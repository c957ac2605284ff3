"""Preorders and the enumeration of labeled finite topologies.

Finite topologies on n points correspond bijectively to preorders on n
points: the open sets are the up-sets. Enumerating preorders row by row
with pairwise transitivity pruning is much cheaper than filtering all
2^(2^n) set families.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from etheta.errors import CarrierTooLarge, EmptyCarrier
from etheta.space.finite_space import FiniteSpace, default_labels
from etheta.space.pointset import SetFamily, iter_bits

logger = logging.getLogger(__name__)

MAX_ENUMERATION_POINTS = 5


@dataclass(frozen=True)
class Preorder:
    """
    A reflexive, transitive relation on ``range(size)``.

    ``rows[i]`` is the mask of all j with i ≤ j.
    """

    rows: Tuple[int, ...]

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[bool]]) -> "Preorder":
        """
        Build a preorder from a boolean matrix, checking the laws.

        Raises:
            ValueError: If the relation is not reflexive or not transitive.
        """
        rows = []
        for i, row in enumerate(matrix):
            mask = 0
            for j, flag in enumerate(row):
                if flag:
                    mask |= 1 << j
            rows.append(mask)
        preorder = cls(tuple(rows))
        for i, mask in enumerate(preorder.rows):
            if not mask >> i & 1:
                raise ValueError(f"relation is not reflexive at {i}")
            for j in iter_bits(mask):
                if preorder.rows[j] & ~mask:
                    raise ValueError(f"relation is not transitive through {i} ≤ {j}")
        return preorder

    @property
    def size(self) -> int:
        return len(self.rows)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    @property
    def matrix(self) -> Tuple[Tuple[bool, ...], ...]:
        return tuple(tuple(self.leq(i, j) for j in range(self.size)) for i in range(self.size))

    def is_partial_order(self) -> bool:
        """Antisymmetric: no two distinct points are mutually related."""
        graph = self.to_digraph()
        return all(len(c) == 1 for c in nx.strongly_connected_components(graph))

    def to_digraph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.size))
        graph.add_edges_from(
            (i, j) for i in range(self.size) for j in iter_bits(self.rows[i]) if i != j
        )
        return graph

    def hasse_edges(self) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
        """
        Covering relation between the equivalence classes of the preorder.

        Returns:
            Sorted (lower class, upper class) pairs; each class is a sorted
            tuple of point indices.
        """
        condensed = nx.condensation(self.to_digraph())
        reduced = nx.transitive_reduction(condensed)
        members = {
            node: tuple(sorted(condensed.nodes[node]["members"])) for node in condensed.nodes
        }
        return sorted((members[a], members[b]) for a, b in reduced.edges)

    def up_sets(self) -> SetFamily:
        """All up-closed subsets: the open sets of the associated topology."""
        n = self.size
        opens = []
        for mask in range(1 << n):
            if all(self.rows[i] & ~mask == 0 for i in iter_bits(mask)):
                opens.append(mask)
        return SetFamily(n, opens)

    def to_space(self, labels: Optional[Sequence[str]] = None) -> FiniteSpace:
        names = list(labels) if labels is not None else default_labels(self.size)
        return FiniteSpace(names, self.up_sets())


def enumerate_preorders(
    n: int,
    t0_only: bool = False,
) -> Iterator[Preorder]:
    """
    Yield every preorder on n points exactly once, in lexicographic row order.

    Args:
        n: Number of points.
        t0_only: Restrict to partial orders.
    """
    rows: List[int] = [0] * n

    def candidates(i: int) -> Iterator[int]:
        bit = 1 << i
        for mask in range(1 << n):
            if mask & bit:
                yield mask

    def compatible(i: int, mask: int) -> bool:
        for j in range(i):
            row_j = rows[j]
            if mask >> j & 1:
                if row_j & ~mask:
                    return False
                if t0_only and row_j >> i & 1:
                    return False
            if row_j >> i & 1 and mask & ~row_j:
                return False
        return True

    def extend(i: int) -> Iterator[Preorder]:
        if i == n:
            yield Preorder(tuple(rows))
            return
        for mask in candidates(i):
            if compatible(i, mask):
                rows[i] = mask
                yield from extend(i + 1)
        rows[i] = 0

    yield from extend(0)


def enumerate_topologies(
    n: int,
    t0_only: bool = False,
    max_points: int = MAX_ENUMERATION_POINTS,
) -> Iterator[FiniteSpace]:
    """
    Yield each labeled topology on n points exactly once.

    Spaces come in the canonical order of their preorders, with points
    labelled ``a, b, …``.

    Raises:
        EmptyCarrier: For n < 1.
        CarrierTooLarge: For n above ``max_points``.
    """
    if n < 1:
        raise EmptyCarrier("enumeration")
    if n > max_points:
        raise CarrierTooLarge(n, max_points)
    labels = default_labels(n)
    count = 0
    for preorder in enumerate_preorders(n, t0_only):
        count += 1
        yield preorder.to_space(labels)
    logger.debug("enumerated %d topologies on %d points (t0_only=%s)", count, n, t0_only)


def enumerate_spaces_up_to(
    max_points: int,
    min_points: int = 1,
    t0_only: bool = False,
) -> Iterator[FiniteSpace]:
    """All spaces with ``min_points`` ≤ n ≤ ``max_points``, smaller carriers first."""
    for n in range(min_points, max_points + 1):
        yield from enumerate_topologies(n, t0_only)
