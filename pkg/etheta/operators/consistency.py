"""Exhaustive cross-checks between the closure operators of one space."""

import logging
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

from etheta.errors import CarrierTooLarge
from etheta.operators.kinds import FamilyKind, OperatorKind
from etheta.operators.table import OperatorTable, operator_table
from etheta.space.finite_space import FiniteSpace
from etheta.space.pointset import canonical_key

logger = logging.getLogger(__name__)

CROSS_CHECK_POINT_LIMIT = 12


class ConsistencyResult:
    """Result of a cross-check run."""

    def __init__(
        self,
        passed: bool,
        message: str,
        details: Optional[List[str]] = None,
        failure: Optional[Dict[str, Any]] = None,
    ) -> None:
        self.passed = passed
        self.message = message
        self.details = details or []
        self.failure = failure


def _intersection_of_supersets(masks: Tuple[int, ...], mask: int, full: int) -> int:
    result = full
    for v in masks:
        if v & mask == mask:
            result &= v
    return result


def _subset_checks(table: OperatorTable) -> List[Tuple[str, Callable[[int], bool]]]:
    estar = table.estar
    full = table.full
    regular = table.family(FamilyKind.ESTAR_REGULAR)
    theta_closed = table.family(FamilyKind.ESTAR_THETA_CLOSED)
    estar_open = table.family(FamilyKind.ESTAR_OPEN)

    def kapanis(m: int) -> bool:
        value = estar.theta_closure(m)
        return (
            value == _intersection_of_supersets(regular.masks, m, full)
            and value == _intersection_of_supersets(theta_closed.masks, m, full)
        )

    def idempotent(m: int) -> bool:
        value = estar.theta_closure(m)
        return estar.theta_closure(value) == value

    def regular_forms(m: int) -> bool:
        member = m in regular
        return (
            member == (estar.closure(estar.interior(m)) == m)
            and member == (estar.interior(estar.closure(m)) == m)
        )

    def closure_below_theta(m: int) -> bool:
        closure = estar.closure(m)
        theta = estar.theta_closure(m)
        if closure & ~theta:
            return False
        return m not in estar_open or closure == theta

    def cluster_formula(m: int) -> bool:
        return estar.closure(m) == estar.closure_by_intersection(m) and (
            table.beta.closure(m) == table.beta.closure_by_intersection(m)
        )

    def dualities(m: int) -> bool:
        for kind in OperatorKind:
            dual = kind.dual
            if dual is None or kind.is_closure_type:
                continue
            if table.value(kind, m) != full ^ table.value(dual, full ^ m):
                return False
        return True

    return [
        ("theta-closure equals intersection of regular and theta-closed supersets", kapanis),
        ("theta-closure is idempotent", idempotent),
        ("regular sets are fixed by cl∘int and int∘cl", regular_forms),
        ("closure lies inside theta-closure, equal on e*-open sets", closure_below_theta),
        ("cluster formula agrees with intersection of closed supersets", cluster_formula),
        ("interiors are dual to closures", dualities),
    ]


def _family_checks(table: OperatorTable) -> Iterator[Tuple[str, bool]]:
    regular = table.family(FamilyKind.ESTAR_REGULAR)
    theta_open = table.family(FamilyKind.ESTAR_THETA_OPEN)
    theta_closed = table.family(FamilyKind.ESTAR_THETA_CLOSED)
    estar_open = table.family(FamilyKind.ESTAR_OPEN)
    yield "regular equals theta-open ∩ theta-closed", regular == theta_open.intersection(theta_closed)
    yield "regular ⊆ theta-open ⊆ e*-open", regular.issubset(theta_open) and theta_open.issubset(estar_open)


def cross_check_closures(space: FiniteSpace) -> ConsistencyResult:
    """
    Check the closure identities on every subset of a space.

    Args:
        space: Space with at most 12 points.

    Returns:
        ConsistencyResult; on failure ``failure`` names the check and the
        first subset (canonical order) where it breaks.

    Raises:
        CarrierTooLarge: For spaces above 12 points.
    """
    if space.size > CROSS_CHECK_POINT_LIMIT:
        raise CarrierTooLarge(space.size, CROSS_CHECK_POINT_LIMIT)
    table = operator_table(space)
    checks = _subset_checks(table)

    for name, ok in _family_checks(table):
        if not ok:
            return ConsistencyResult(False, f"failed: {name}", [name], {"check": name})

    for mask in sorted(range(table.full + 1), key=canonical_key):
        for name, check in checks:
            if not check(mask):
                logger.warning("cross-check %r failed on %s", name, space.labels_of(mask))
                return ConsistencyResult(
                    False,
                    f"failed: {name}",
                    [name],
                    {"check": name, "subset": space.labels_of(mask)},
                )

    names = [name for name, _ in checks] + [name for name, _ in _family_checks(table)]
    return ConsistencyResult(True, f"{len(names)} checks passed on {table.full + 1} subsets", names)
