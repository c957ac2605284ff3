"""Per-space operator table with memoized families and operator values."""

import logging
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

from etheta.errors import CarrierTooLarge, InternalCharacterizationMismatch
from etheta.operators.kinds import FamilyKind, OperatorKind
from etheta.space.finite_space import DEFAULT_POINT_LIMIT, FiniteSpace
from etheta.space.pointset import (
    MaskLike,
    PointSet,
    SetFamily,
    as_mask,
    minimal_members,
)

logger = logging.getLogger(__name__)


class GeneralizedOpenSets:
    """
    Closure machinery for a union-closed family of generalized open sets.

    ``is_member`` decides membership of a mask; everything else (closure,
    interior, θ-closure, kernels, regular and θ-families) is derived from
    the members. Used for both the e*-open and the β-open family.
    """

    def __init__(self, space: FiniteSpace, name: str, is_member: Callable[[int], bool]) -> None:
        self.space = space
        self.name = name
        full = space.full
        self.full = full
        self.opens = SetFamily(space.size, (m for m in range(full + 1) if is_member(m)))
        self.closed = self.opens.complements()
        self._neighbourhoods: Optional[Tuple[Tuple[int, ...], ...]] = None
        self._blockers: Optional[Tuple[Tuple[int, ...], ...]] = None
        self._closure: Dict[int, int] = {}
        self._theta_closure: Dict[int, int] = {}
        self._regular: Optional[SetFamily] = None
        self._theta_closed: Optional[SetFamily] = None
        self._theta_open: Optional[SetFamily] = None

    def neighbourhoods(self, x: int) -> Tuple[int, ...]:
        """Minimal members containing ``x``, in canonical order."""
        if self._neighbourhoods is None:
            self._neighbourhoods = tuple(
                minimal_members(u for u in self.opens.masks if u >> p & 1)
                for p in range(self.space.size)
            )
        return self._neighbourhoods[x]

    def closure(self, mask: int) -> int:
        """Points all of whose neighbourhoods meet ``mask``."""
        cached = self._closure.get(mask)
        if cached is not None:
            return cached
        result = 0
        for x in range(self.space.size):
            if all(u & mask for u in self.neighbourhoods(x)):
                result |= 1 << x
        self._closure[mask] = result
        return result

    def closure_by_intersection(self, mask: int) -> int:
        """Intersection of all closed members containing ``mask``."""
        result = self.full
        for f in self.closed.masks:
            if f & mask == mask:
                result &= f
        return result

    def interior(self, mask: int) -> int:
        return self.full ^ self.closure(self.full ^ mask)

    def blockers(self, x: int) -> Tuple[int, ...]:
        """Minimal closures of the neighbourhoods of ``x``."""
        if self._blockers is None:
            self._blockers = tuple(
                minimal_members(self.closure(u) for u in self.neighbourhoods(p))
                for p in range(self.space.size)
            )
        return self._blockers[x]

    def theta_closure(self, mask: int) -> int:
        """θ-cluster points: every neighbourhood's closure meets ``mask``."""
        cached = self._theta_closure.get(mask)
        if cached is not None:
            return cached
        result = 0
        for x in range(self.space.size):
            if all(c & mask for c in self.blockers(x)):
                result |= 1 << x
        self._theta_closure[mask] = result
        return result

    def theta_interior(self, mask: int) -> int:
        return self.full ^ self.theta_closure(self.full ^ mask)

    def regular(self) -> SetFamily:
        if self._regular is None:
            self._regular = self.opens.intersection(self.closed)
        return self._regular

    def theta_closed(self) -> SetFamily:
        if self._theta_closed is None:
            self._theta_closed = SetFamily(
                self.space.size,
                (m for m in range(self.full + 1) if self.theta_closure(m) == m),
            )
        return self._theta_closed

    def theta_open(self) -> SetFamily:
        if self._theta_open is None:
            self._theta_open = self.theta_closed().complements()
        return self._theta_open

    def theta_kernel(self, mask: int) -> int:
        """Intersection of the θ-open supersets; X when none is proper."""
        result = self.full
        for u in self.theta_open().masks:
            if u & mask == mask:
                result &= u
        return result


class OperatorTable:
    """
    All generalized open-set families and operators of one space.

    Families are built on first use and memoized; operator values are
    memoized per (kind, subset). Cached values always equal a fresh
    recomputation.
    """

    def __init__(self, space: FiniteSpace, point_limit: int = DEFAULT_POINT_LIMIT) -> None:
        if space.size > point_limit:
            raise CarrierTooLarge(space.size, point_limit)
        self.space = space
        self.size = space.size
        self.full = space.full
        self._families: Dict[FamilyKind, SetFamily] = {}
        self._values: Dict[Tuple[OperatorKind, int], int] = {}
        self._estar: Optional[GeneralizedOpenSets] = None
        self._beta: Optional[GeneralizedOpenSets] = None
        self._regular_open: Optional[SetFamily] = None
        self._delta_nbhd = tuple(
            space.interior_bits(space.closure_bits(space.minimal_neighbourhood(x)))
            for x in range(space.size)
        )

    # -- base topology -------------------------------------------------

    def closure(self, mask: int) -> int:
        return self.space.closure_bits(mask)

    def interior(self, mask: int) -> int:
        return self.space.interior_bits(mask)

    def regular_open(self) -> SetFamily:
        if self._regular_open is None:
            self._regular_open = SetFamily(
                self.size,
                (m for m in range(self.full + 1) if self.interior(self.closure(m)) == m),
            )
        return self._regular_open

    def delta_cl(self, mask: int) -> int:
        """x with int(cl(U)) ∩ A ≠ ∅ for every open U ∋ x."""
        result = 0
        for x, nbhd in enumerate(self._delta_nbhd):
            if nbhd & mask:
                result |= 1 << x
        return result

    def delta_int(self, mask: int) -> int:
        """Union of the regular open sets inside ``mask``."""
        result = 0
        for u in self.regular_open().masks:
            if u & ~mask == 0:
                result |= u
        return result

    # -- generalized families -------------------------------------------

    @property
    def estar(self) -> GeneralizedOpenSets:
        if self._estar is None:
            self._estar = GeneralizedOpenSets(
                self.space,
                "e*",
                lambda m: m & ~self.closure(self.interior(self.delta_cl(m))) == 0,
            )
            logger.debug("built e*-open family: %d members", len(self._estar.opens))
        return self._estar

    @property
    def beta(self) -> GeneralizedOpenSets:
        if self._beta is None:
            self._beta = GeneralizedOpenSets(
                self.space,
                "beta",
                lambda m: m & ~self.closure(self.interior(self.closure(m))) == 0,
            )
        return self._beta

    def is_quasi_theta_closed(self, mask: int) -> bool:
        """Every e*-θ-open superset of ``mask`` contains its e*-θ-closure."""
        closure = self.estar.theta_closure(mask)
        for u in self.estar.theta_open().masks:
            if u & mask == mask and closure & ~u:
                return False
        return True

    def dsets(self) -> SetFamily:
        """Differences U ∖ V of e*-θ-open sets with U ≠ X."""
        opens = self.estar.theta_open().masks
        return SetFamily(
            self.size,
            {u & ~v for u in opens if u != self.full for v in opens},
        )

    def family(self, kind: FamilyKind) -> SetFamily:
        """Exact family of the given kind, evaluated over all subsets."""
        cached = self._families.get(kind)
        if cached is not None:
            return cached
        result = self._build_family(kind)
        self._families[kind] = result
        return result

    def _build_family(self, kind: FamilyKind) -> SetFamily:
        n = self.size
        if kind is FamilyKind.OPEN:
            return self.space.opens
        if kind is FamilyKind.CLOSED:
            return self.space.closed_sets()
        if kind is FamilyKind.REGULAR_OPEN:
            return self.regular_open()
        if kind is FamilyKind.REGULAR_CLOSED:
            return SetFamily(n, (m for m in range(self.full + 1) if self.closure(self.interior(m)) == m))
        if kind is FamilyKind.DELTA_OPEN:
            return SetFamily(n, (m for m in range(self.full + 1) if self.delta_int(m) == m))
        if kind is FamilyKind.DELTA_CLOSED:
            family = SetFamily(n, (m for m in range(self.full + 1) if self.delta_cl(m) == m))
            if family != self.family(FamilyKind.DELTA_OPEN).complements():
                raise InternalCharacterizationMismatch(
                    "delta-closure", {"space": repr(self.space)}
                )
            return family
        if kind is FamilyKind.ESTAR_OPEN:
            return self.estar.opens
        if kind is FamilyKind.ESTAR_CLOSED:
            return self.estar.closed
        if kind is FamilyKind.ESTAR_REGULAR:
            return self.estar.regular()
        if kind is FamilyKind.ESTAR_THETA_OPEN:
            return self.estar.theta_open()
        if kind is FamilyKind.ESTAR_THETA_CLOSED:
            return self.estar.theta_closed()
        if kind is FamilyKind.BETA_OPEN:
            return self.beta.opens
        if kind is FamilyKind.BETA_CLOSED:
            return self.beta.closed
        if kind is FamilyKind.BETA_REGULAR:
            return self.beta.regular()
        if kind is FamilyKind.BETA_THETA_OPEN:
            return self.beta.theta_open()
        if kind is FamilyKind.BETA_THETA_CLOSED:
            return self.beta.theta_closed()
        if kind is FamilyKind.DSET:
            return self.dsets()
        if kind is FamilyKind.THETA_C_ESTAR_OPEN:
            closures = {self.estar.theta_closure(m) for m in range(self.full + 1)}
            return SetFamily(n, (self.full ^ c for c in closures))
        if kind is FamilyKind.QUASI_ESTAR_THETA_CLOSED:
            return SetFamily(
                n, (m for m in range(self.full + 1) if self.is_quasi_theta_closed(m))
            )
        raise ValueError(f"unsupported family kind: {kind}")

    def family_at(self, kind: FamilyKind, x: int) -> Tuple[int, ...]:
        """Members of a family that contain point ``x``."""
        return tuple(m for m in self.family(kind).masks if m >> x & 1)

    def value(self, kind: OperatorKind, mask: int) -> int:
        """Operator value on a raw mask."""
        key = (kind, mask)
        cached = self._values.get(key)
        if cached is not None:
            return cached
        result = self._operators[kind](self, mask)
        self._values[key] = result
        return result

    def apply(self, kind: OperatorKind, subset: MaskLike) -> PointSet:
        return PointSet(self.value(kind, as_mask(subset)), self.size)

    _operators: Dict[OperatorKind, Callable[["OperatorTable", int], int]] = {
        OperatorKind.CL: lambda t, m: t.closure(m),
        OperatorKind.INT: lambda t, m: t.interior(m),
        OperatorKind.DELTA_CL: lambda t, m: t.delta_cl(m),
        OperatorKind.DELTA_INT: lambda t, m: t.delta_int(m),
        OperatorKind.ESTAR_CL: lambda t, m: t.estar.closure(m),
        OperatorKind.ESTAR_INT: lambda t, m: t.estar.interior(m),
        OperatorKind.ESTAR_CL_THETA: lambda t, m: t.estar.theta_closure(m),
        OperatorKind.ESTAR_INT_THETA: lambda t, m: t.estar.theta_interior(m),
        OperatorKind.ESTAR_KER_THETA: lambda t, m: t.estar.theta_kernel(m),
        OperatorKind.BETA_CL: lambda t, m: t.beta.closure(m),
        OperatorKind.BETA_INT: lambda t, m: t.beta.interior(m),
        OperatorKind.BETA_CL_THETA: lambda t, m: t.beta.theta_closure(m),
        OperatorKind.BETA_KER_THETA: lambda t, m: t.beta.theta_kernel(m),
    }

    def singleton_theta_closures(self) -> List[int]:
        return [self.estar.theta_closure(1 << x) for x in range(self.size)]


@lru_cache(maxsize=2048)
def operator_table(space: FiniteSpace) -> OperatorTable:
    """Shared, memoized table for a space (one per process)."""
    return OperatorTable(space)


def family(space: FiniteSpace, kind: FamilyKind) -> SetFamily:
    """Exact family of the given kind."""
    return operator_table(space).family(kind)


def apply(space: FiniteSpace, kind: OperatorKind, subset: MaskLike) -> PointSet:
    """Value of an operator on a subset."""
    return operator_table(space).apply(kind, subset)


def family_at(space: FiniteSpace, kind: FamilyKind, x: int) -> SetFamily:
    """Pointed family: members of ``kind`` containing point ``x``."""
    return SetFamily(space.size, operator_table(space).family_at(kind, x))


__all__ = [
    "GeneralizedOpenSets",
    "OperatorTable",
    "operator_table",
    "family",
    "family_at",
    "apply",
]
