"""Space-level separation predicates built on the generalized families."""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

from etheta.errors import NotASubset
from etheta.operators.kinds import FamilyKind
from etheta.operators.table import GeneralizedOpenSets, OperatorTable, operator_table
from etheta.space.finite_space import FiniteSpace
from etheta.space.pointset import minimal_members

logger = logging.getLogger(__name__)


class AxiomKind(Enum):
    """Every space-level predicate the axioms module decides."""

    ESTAR_THETA_D0 = "e*-theta-D0"
    ESTAR_THETA_D1 = "e*-theta-D1"
    ESTAR_THETA_D2 = "e*-theta-D2"
    ESTAR_THETA_T0 = "e*-theta-T0"
    ESTAR_THETA_T1 = "e*-theta-T1"
    ESTAR_THETA_T2 = "e*-theta-T2"
    ESTAR_THETA_T_HALF = "e*-theta-T1/2"
    SLIGHTLY_ESTAR_THETA_R0 = "slightly-e*-theta-R0"
    SLIGHTLY_BETA_THETA_R0 = "slightly-beta-theta-R0"
    ESTAR_R1 = "e*-R1"
    BETA_R1 = "beta-R1"
    ESTAR_T1 = "e*-T1"
    ESTAR_REGULAR_SPACE = "e*-regular-space"

    @classmethod
    def parse(cls, text: str) -> "AxiomKind":
        for kind in cls:
            if text in (kind.value, kind.name, kind.name.lower()):
                return kind
        raise ValueError(f"unknown axiom: {text}")


@dataclass(frozen=True)
class AxiomResult:
    """Decision for one axiom; ``witness`` certifies a failure."""

    holds: bool
    witness: Optional[Dict[str, Any]] = None


def _pairs(n: int) -> Iterator[Tuple[int, int]]:
    for i in range(n):
        for j in range(i + 1, n):
            yield i, j


def _separates(masks: Tuple[int, ...], x: int, y: int) -> bool:
    """Some member contains x but not y."""
    return any(m >> x & 1 and not m >> y & 1 for m in masks)


def _disjoint_around(masks: Tuple[int, ...], a: int, b: int) -> bool:
    """Disjoint members U ⊇ a and V ⊇ b exist (checked on minimal supersets)."""
    around_a = minimal_members(m for m in masks if m & a == a)
    around_b = minimal_members(m for m in masks if m & b == b)
    return any(u & v == 0 for u in around_a for v in around_b)


def _weak(masks: Tuple[int, ...], x: int, y: int) -> bool:
    return _separates(masks, x, y) or _separates(masks, y, x)


def _strong(masks: Tuple[int, ...], x: int, y: int) -> bool:
    return _separates(masks, x, y) and _separates(masks, y, x)


def _hausdorff(masks: Tuple[int, ...], x: int, y: int) -> bool:
    return _disjoint_around(masks, 1 << x, 1 << y)


def _r1_pair(sets: GeneralizedOpenSets, x: int, y: int) -> bool:
    cx = sets.closure(1 << x)
    cy = sets.closure(1 << y)
    if cx == cy:
        return True
    return _disjoint_around(sets.opens.masks, cx, cy)


PairTest = Callable[[OperatorTable, int, int], bool]

_PAIR_TESTS: Dict[AxiomKind, PairTest] = {
    AxiomKind.ESTAR_THETA_D0: lambda t, x, y: _weak(t.family(FamilyKind.DSET).masks, x, y),
    AxiomKind.ESTAR_THETA_D1: lambda t, x, y: _strong(t.family(FamilyKind.DSET).masks, x, y),
    AxiomKind.ESTAR_THETA_D2: lambda t, x, y: _hausdorff(t.family(FamilyKind.DSET).masks, x, y),
    AxiomKind.ESTAR_THETA_T0: lambda t, x, y: _weak(t.estar.theta_open().masks, x, y),
    AxiomKind.ESTAR_THETA_T1: lambda t, x, y: _strong(t.estar.theta_open().masks, x, y),
    AxiomKind.ESTAR_THETA_T2: lambda t, x, y: _hausdorff(t.estar.theta_open().masks, x, y),
    AxiomKind.ESTAR_T1: lambda t, x, y: _strong(t.estar.opens.masks, x, y),
    AxiomKind.ESTAR_R1: lambda t, x, y: _r1_pair(t.estar, x, y),
    AxiomKind.BETA_R1: lambda t, x, y: _r1_pair(t.beta, x, y),
}


_D_AXIOMS = frozenset(
    {AxiomKind.ESTAR_THETA_D0, AxiomKind.ESTAR_THETA_D1, AxiomKind.ESTAR_THETA_D2}
)


def _covered_by_dset(table: OperatorTable, x: int) -> bool:
    return any(m >> x & 1 for m in table.family(FamilyKind.DSET).masks)


def _labels(space: FiniteSpace, mask: int) -> List[str]:
    return space.labels_of(mask)


def _pair_axiom(space: FiniteSpace, table: OperatorTable, axiom: AxiomKind) -> AxiomResult:
    if axiom in _D_AXIOMS and space.size == 1:
        # A lone point needs a D-set around it, and U ≠ X leaves only ∅.
        if not _covered_by_dset(table, 0):
            return AxiomResult(False, {"points": [space.point_names[0]]})
        return AxiomResult(True)
    test = _PAIR_TESTS[axiom]
    for x, y in _pairs(space.size):
        if not test(table, x, y):
            return AxiomResult(False, {"points": [space.point_names[x], space.point_names[y]]})
    return AxiomResult(True)


def _singleton_theta_meet(sets: GeneralizedOpenSets, n: int) -> int:
    meet = sets.full
    for x in range(n):
        meet &= sets.theta_closure(1 << x)
    return meet


def _slightly_r0(space: FiniteSpace, sets: GeneralizedOpenSets) -> AxiomResult:
    meet = _singleton_theta_meet(sets, space.size)
    if meet:
        return AxiomResult(False, {"intersection": _labels(space, meet)})
    return AxiomResult(True)


def _t_half(space: FiniteSpace, table: OperatorTable) -> AxiomResult:
    theta_closed = table.family(FamilyKind.ESTAR_THETA_CLOSED)
    for mask in table.family(FamilyKind.QUASI_ESTAR_THETA_CLOSED).masks:
        if mask not in theta_closed:
            return AxiomResult(False, {"set": _labels(space, mask)})
    return AxiomResult(True)


def _regular_space_pair(table: OperatorTable, closed: int, x: int) -> bool:
    return _disjoint_around(table.estar.opens.masks, 1 << x, closed)


def _regular_space(space: FiniteSpace, table: OperatorTable) -> AxiomResult:
    for closed in space.closed_sets().masks:
        for x in range(space.size):
            if closed >> x & 1:
                continue
            if not _regular_space_pair(table, closed, x):
                return AxiomResult(
                    False,
                    {"closed": _labels(space, closed), "point": space.point_names[x]},
                )
    return AxiomResult(True)


def holds(space: FiniteSpace, axiom: AxiomKind) -> AxiomResult:
    """
    Decide one axiom exactly.

    Args:
        space: The space to test.
        axiom: Which predicate.

    Returns:
        AxiomResult; failing results carry the first witness in canonical
        order (a point pair, a set, or a closed set with a point).
    """
    table = operator_table(space)
    if axiom in _PAIR_TESTS:
        return _pair_axiom(space, table, axiom)
    if axiom is AxiomKind.ESTAR_THETA_T_HALF:
        return _t_half(space, table)
    if axiom is AxiomKind.SLIGHTLY_ESTAR_THETA_R0:
        return _slightly_r0(space, table.estar)
    if axiom is AxiomKind.SLIGHTLY_BETA_THETA_R0:
        return _slightly_r0(space, table.beta)
    if axiom is AxiomKind.ESTAR_REGULAR_SPACE:
        return _regular_space(space, table)
    raise ValueError(f"unsupported axiom: {axiom}")


def recheck_witness(space: FiniteSpace, axiom: AxiomKind, witness: Dict[str, Any]) -> bool:
    """
    Re-evaluate a failure witness directly.

    Returns:
        True when the witness really breaks the axiom on ``space``.

    Raises:
        NotASubset: If the witness names unknown points.
    """
    table = operator_table(space)
    if axiom in _PAIR_TESTS:
        points = [space.point_index(label) for label in witness["points"]]
        if len(points) == 1:
            return axiom in _D_AXIOMS and not _covered_by_dset(table, points[0])
        x, y = points
        return not _PAIR_TESTS[axiom](table, x, y)
    if axiom is AxiomKind.ESTAR_THETA_T_HALF:
        mask = space.point_set(witness["set"]).bits
        return table.is_quasi_theta_closed(mask) and table.estar.theta_closure(mask) != mask
    if axiom in (AxiomKind.SLIGHTLY_ESTAR_THETA_R0, AxiomKind.SLIGHTLY_BETA_THETA_R0):
        sets = table.estar if axiom is AxiomKind.SLIGHTLY_ESTAR_THETA_R0 else table.beta
        claimed = space.point_set(witness["intersection"]).bits
        return claimed != 0 and claimed == _singleton_theta_meet(sets, space.size)
    if axiom is AxiomKind.ESTAR_REGULAR_SPACE:
        closed = space.point_set(witness["closed"]).bits
        x = space.point_index(witness["point"])
        if not space.is_closed(closed) or closed >> x & 1:
            raise NotASubset(f"witness is not a closed set missing its point: {witness}")
        return not _regular_space_pair(table, closed, x)
    raise ValueError(f"unsupported axiom: {axiom}")

