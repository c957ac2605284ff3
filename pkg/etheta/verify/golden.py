"""Worked examples as single-instance claims."""

from typing import Any, Dict, List

from etheta.axioms.separation import AxiomKind, holds
from etheta.maps.properties import MapPropertyKind, property_of
from etheta.maps.space_map import constant_map
from etheta.operators.kinds import FamilyKind
from etheta.operators.table import operator_table
from etheta.space import library
from etheta.space.finite_space import FiniteSpace
from etheta.space.pointset import SetFamily
from etheta.verify.claims import Outcome, always


def _masks(space: FiniteSpace, labels: List[List[str]]) -> SetFamily:
    return SetFamily(space.size, (space.point_set(member) for member in labels))


def _all_but(space: FiniteSpace, excluded: List[List[str]]) -> SetFamily:
    dropped = {space.point_set(member).bits for member in excluded}
    return SetFamily(space.size, (m for m in range(space.full + 1) if m not in dropped))


def _report(checks: Dict[str, bool]) -> Outcome:
    failed = [name for name, ok in checks.items() if not ok]
    return always(not failed, {"failed": failed} if failed else None)


def union_counterexample(_: Any) -> Outcome:
    space = library.example2_space()
    theta_closed = operator_table(space).family(FamilyKind.ESTAR_THETA_CLOSED)
    return _report(
        {
            "{1} e*-theta-closed": space.point_set(["1"]) in theta_closed,
            "{2} e*-theta-closed": space.point_set(["2"]) in theta_closed,
            "{1,2} not e*-theta-closed": space.point_set(["1", "2"]) not in theta_closed,
        }
    )


def example4_dsets(_: Any) -> Outcome:
    space = library.example4_space()
    table = operator_table(space)
    theta_open = table.family(FamilyKind.ESTAR_THETA_OPEN)
    dsets = table.family(FamilyKind.DSET)
    b = space.point_set(["b"])
    return _report(
        {
            "e*-theta-open = 2^X without {b}": theta_open == _all_but(space, [["b"]]),
            "D-sets = 2^X without X": dsets == _all_but(space, [["a", "b", "c", "d"]]),
            "{b} is a D-set that is not e*-theta-open": b in dsets and b not in theta_open,
        }
    )


def example5_kernels(_: Any) -> Outcome:
    space = library.example5_space()
    table = operator_table(space)
    power = SetFamily.power_set(space.size)
    trivial = SetFamily(space.size, [0, space.full])
    beta_open = _masks(
        space,
        [[], ["a", "b", "c", "d"], ["a"], ["a", "b"], ["a", "c"], ["a", "d"],
         ["a", "b", "c"], ["a", "b", "d"], ["a", "c", "d"]],
    )
    ab = space.point_set(["a", "b"]).bits
    return _report(
        {
            "e*-regular = 2^X": table.family(FamilyKind.ESTAR_REGULAR) == power,
            "e*-theta-open = 2^X": table.family(FamilyKind.ESTAR_THETA_OPEN) == power,
            "e*-open = 2^X": table.family(FamilyKind.ESTAR_OPEN) == power,
            "beta-regular = {∅, X}": table.family(FamilyKind.BETA_REGULAR) == trivial,
            "beta-theta-open = {∅, X}": table.family(FamilyKind.BETA_THETA_OPEN) == trivial,
            "beta-open has the nine listed members": table.family(FamilyKind.BETA_OPEN) == beta_open,
            "e*-kernel of {a,b} is {a,b}": table.estar.theta_kernel(ab) == ab,
            "beta-kernel of {a,b} is X": table.beta.theta_kernel(ab) == space.full,
        }
    )


def example5_slightly_r0(_: Any) -> Outcome:
    space = library.example5_space()
    return _report(
        {
            "slightly e*-theta-R0": holds(space, AxiomKind.SLIGHTLY_ESTAR_THETA_R0).holds,
            "not slightly beta-theta-R0": not holds(space, AxiomKind.SLIGHTLY_BETA_THETA_R0).holds,
        }
    )


def constant_map_continuity(_: Any) -> Outcome:
    space = library.example4_space()
    f = constant_map(space, space, "c")
    return _report(
        {
            "S-e*-continuous": property_of(f, MapPropertyKind.S_ESTAR_CONTINUOUS).holds,
            "not S-continuous": not property_of(f, MapPropertyKind.S_CONTINUOUS).holds,
        }
    )


def example4_r1(_: Any) -> Outcome:
    space = library.example4_space()
    return _report(
        {
            "e*-R1": holds(space, AxiomKind.ESTAR_R1).holds,
            "not beta-R1": not holds(space, AxiomKind.BETA_R1).holds,
        }
    )
