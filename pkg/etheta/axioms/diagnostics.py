"""Neighbourhoods, cc-points, kernels and the regular-space characterizations."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from etheta.axioms.separation import AxiomKind, holds
from etheta.errors import InternalCharacterizationMismatch
from etheta.operators.kinds import FamilyKind
from etheta.operators.table import operator_table
from etheta.space.finite_space import FiniteSpace
from etheta.space.pointset import MaskLike, PointSet, SetFamily, as_mask, minimal_members

logger = logging.getLogger(__name__)


def is_quasi_theta_closed(space: FiniteSpace, subset: MaskLike) -> bool:
    """Every e*-θ-open superset of ``subset`` contains its e*-θ-closure."""
    return operator_table(space).is_quasi_theta_closed(as_mask(subset))


def theta_neighbourhoods(space: FiniteSpace, x: int) -> SetFamily:
    """
    All e*-θ-neighbourhoods of a point.

    Args:
        space: The space.
        x: Point index.

    Returns:
        Every N with x ∈ U ⊆ N for some e*-θ-open U.
    """
    table = operator_table(space)
    cores = minimal_members(table.family_at(FamilyKind.ESTAR_THETA_OPEN, x))
    return SetFamily(
        space.size,
        (n for n in range(space.full + 1) if any(u & ~n == 0 for u in cores)),
    )


def cc_points(space: FiniteSpace) -> PointSet:
    """Points whose only e*-θ-neighbourhood is the whole space."""
    table = operator_table(space)
    bits = 0
    for x in range(space.size):
        if table.family_at(FamilyKind.ESTAR_THETA_OPEN, x) == (space.full,):
            bits |= 1 << x
    return PointSet(bits, space.size)


@dataclass
class KernelReport:
    """Singleton kernels next to the slightly-R0 decision."""

    kernels: Dict[str, List[str]] = field(default_factory=dict)
    slightly_r0: bool = False
    proper_kernels: bool = False


def kernel_diagnostics(space: FiniteSpace) -> KernelReport:
    """
    Per-point e*-θ-kernels of singletons.

    The space is slightly e*-θ-R0 exactly when no singleton kernel is the
    whole space; both sides are computed independently.

    Raises:
        InternalCharacterizationMismatch: If the two sides disagree.
    """
    table = operator_table(space)
    estar = table.estar
    kernels: Dict[str, List[str]] = {}
    proper = True
    meet = space.full
    for x in range(space.size):
        kernel = estar.theta_kernel(1 << x)
        kernels[space.point_names[x]] = space.labels_of(kernel)
        proper = proper and kernel != space.full
        meet &= estar.theta_closure(1 << x)
    slightly_r0 = meet == 0
    if slightly_r0 != proper:
        raise InternalCharacterizationMismatch(
            "kernel characterization of slightly R0",
            {"space": repr(space), "kernels": kernels},
        )
    return KernelReport(kernels=kernels, slightly_r0=slightly_r0, proper_kernels=proper)


def regular_space_forms(space: FiniteSpace) -> Tuple[bool, bool, bool]:
    """
    Three formulations of the e*-regular space property.

    Returns:
        (closed-set separation, shrinking inside open neighbourhoods,
        e*-regular bases of e*-open sets).
    """
    table = operator_table(space)
    estar = table.estar
    regular = table.family(FamilyKind.ESTAR_REGULAR)

    separation = holds(space, AxiomKind.ESTAR_REGULAR_SPACE).holds

    shrinking = all(
        any(estar.closure(v) & ~space.minimal_neighbourhood(x) == 0 for v in estar.neighbourhoods(x))
        for x in range(space.size)
    )

    regular_base = all(
        any(v >> x & 1 and v & ~u == 0 for v in regular.masks)
        for x in range(space.size)
        for u in estar.neighbourhoods(x)
    )
    return separation, shrinking, regular_base
