"""Space-level statements: each check takes one space (or pair) and returns an Outcome."""

from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Optional, Tuple

from etheta.axioms.diagnostics import cc_points, regular_space_forms
from etheta.axioms.separation import AxiomKind, holds
from etheta.maps.properties import MapPropertyKind, property_of
from etheta.maps.space_map import enumerate_maps, product_projections
from etheta.operators.consistency import cross_check_closures
from etheta.operators.kinds import FamilyKind
from etheta.operators.table import operator_table
from etheta.space.finite_space import FiniteSpace, product
from etheta.space.pointset import SetFamily, canonical_key, iter_bits
from etheta.space.preorder import enumerate_topologies
from etheta.verify.claims import Outcome, always, implies


def first_failing_subset(space: FiniteSpace, predicate: Callable[[int], bool]) -> Optional[int]:
    """First subset in canonical order where ``predicate`` is false."""
    for mask in sorted(range(space.full + 1), key=canonical_key):
        if not predicate(mask):
            return mask
    return None


def _every_subset(space: FiniteSpace, predicate: Callable[[int], bool]) -> Outcome:
    mask = first_failing_subset(space, predicate)
    if mask is None:
        return always(True)
    return always(False, {"subset": space.labels_of(mask)})


def _meet_of_supersets(masks: Iterable[int], mask: int, full: int) -> int:
    result = full
    for v in masks:
        if v & mask == mask:
            result &= v
    return result


def _join_of_subsets(masks: Iterable[int], mask: int) -> int:
    result = 0
    for u in masks:
        if u & ~mask == 0:
            result |= u
    return result


def _union_gap(family: SetFamily) -> Optional[Tuple[int, int]]:
    for u, v in combinations(family.masks, 2):
        if u | v not in family:
            return u, v
    return None


def _intersection_gap(family: SetFamily) -> Optional[Tuple[int, int]]:
    for u, v in combinations(family.masks, 2):
        if u & v not in family:
            return u, v
    return None


def _pair_detail(space: FiniteSpace, pair: Tuple[int, int]) -> dict:
    return {"sets": [space.labels_of(pair[0]), space.labels_of(pair[1])]}


def _axiom(space: FiniteSpace, kind: AxiomKind) -> bool:
    return holds(space, kind).holds


# -- regularity, closures and kernels of e*-θ sets ----------------------


def open_iff_closure_regular(space: FiniteSpace) -> Outcome:
    estar = operator_table(space).estar
    regular = estar.regular()
    return _every_subset(
        space,
        lambda m: (m in estar.opens) == (estar.closure(m) in regular)
        and (m in estar.closed) == (estar.interior(m) in regular),
    )


def theta_open_regular_base(space: FiniteSpace) -> Outcome:
    estar = operator_table(space).estar
    regular = estar.regular().masks
    theta_open = estar.theta_open()

    def based(m: int) -> bool:
        return all(
            any(u >> x & 1 and u & ~m == 0 for u in regular) for x in iter_bits(m)
        )

    outcome = _every_subset(space, lambda m: (m in theta_open) == based(m))
    if not outcome.conclusion:
        return outcome
    gap = _union_gap(theta_open)
    return always(gap is None, _pair_detail(space, gap) if gap else None)


def estar_open_closure_agrees(space: FiniteSpace) -> Outcome:
    table = operator_table(space)
    estar = table.estar
    if estar.regular() != estar.theta_open().intersection(estar.theta_closed()):
        return always(False, {"failed": "e*-regular = e*-theta-open ∩ e*-theta-closed"})
    return _every_subset(
        space, lambda m: m not in estar.opens or estar.closure(m) == estar.theta_closure(m)
    )


def regular_space_equivalence(space: FiniteSpace) -> Outcome:
    forms = regular_space_forms(space)
    return always(len(set(forms)) == 1, {"forms": list(forms)})


def regular_theta_open_open_chain(space: FiniteSpace) -> Outcome:
    estar = operator_table(space).estar
    if not estar.regular().issubset(estar.theta_open()):
        return always(False, {"failed": "e*-regular ⊆ e*-theta-open"})
    if not estar.theta_open().issubset(estar.opens):
        return always(False, {"failed": "e*-theta-open ⊆ e*-open"})
    return always(True)


def kapanis(space: FiniteSpace) -> Outcome:
    estar = operator_table(space).estar
    full = space.full
    theta_closed = estar.theta_closed().masks
    regular = estar.regular().masks
    return _every_subset(
        space,
        lambda m: estar.theta_closure(m)
        == _meet_of_supersets(theta_closed, m, full)
        == _meet_of_supersets(regular, m, full),
    )


def theta_closed_intersections(space: FiniteSpace) -> Outcome:
    theta_closed = operator_table(space).estar.theta_closed()
    if 0 not in theta_closed or space.full not in theta_closed:
        return always(False, {"failed": "∅ and X are e*-theta-closed"})
    gap = _intersection_gap(theta_closed)
    return always(gap is None, _pair_detail(space, gap) if gap else None)


def regular_characterizations(space: FiniteSpace) -> Outcome:
    estar = operator_table(space).estar
    regular = estar.regular()
    return _every_subset(
        space,
        lambda m: (m in regular)
        == (m == estar.closure(estar.interior(m)))
        == (m == estar.interior(estar.closure(m))),
    )


def theta_closure_idempotent(space: FiniteSpace) -> Outcome:
    estar = operator_table(space).estar
    return _every_subset(
        space, lambda m: estar.theta_closure(estar.theta_closure(m)) == estar.theta_closure(m)
    )


def union_closure(space: FiniteSpace) -> Outcome:
    table = operator_table(space)
    for name, family in (
        ("e*-open", table.estar.opens),
        ("beta-open", table.beta.opens),
        ("e*-theta-open", table.estar.theta_open()),
        ("beta-theta-open", table.beta.theta_open()),
    ):
        gap = _union_gap(family)
        if gap is not None:
            return always(False, {"family": name, **_pair_detail(space, gap)})
    for name, family in (
        ("e*-theta-closed", table.estar.theta_closed()),
        ("beta-theta-closed", table.beta.theta_closed()),
    ):
        gap = _intersection_gap(family)
        if gap is not None:
            return always(False, {"family": name, **_pair_detail(space, gap)})
    return always(True)


def cross_check(space: FiniteSpace) -> Outcome:
    result = cross_check_closures(space)
    return always(result.passed, result.failure)


def projections_continuous(pair: Tuple[FiniteSpace, FiniteSpace]) -> Outcome:
    for p in product_projections(*pair):
        for kind in (MapPropertyKind.CONTINUOUS, MapPropertyKind.OPEN_MAP):
            result = property_of(p, kind)
            if not result.holds:
                return always(False, {"property": kind.value, "witness": result.witness})
    return always(True)


def interior_of_theta_closure(space: FiniteSpace) -> Outcome:
    estar = operator_table(space).estar
    theta_open = estar.theta_open()
    return _every_subset(
        space,
        lambda m: m not in estar.opens or estar.interior(estar.theta_closure(m)) in theta_open,
    )


def theta_open_equals_regular(space: FiniteSpace) -> Outcome:
    estar = operator_table(space).estar
    regular = estar.regular()
    coincide = estar.theta_open() == regular
    closures_regular = all(estar.theta_closure(m) in regular for m in range(space.full + 1))
    return always(
        coincide == closures_regular,
        {"families_coincide": coincide, "closures_regular": closures_regular},
    )


def theta_open_union_of_regular(space: FiniteSpace) -> Outcome:
    estar = operator_table(space).estar
    theta_open = estar.theta_open()
    regular = estar.regular().masks
    return _every_subset(
        space, lambda m: m not in theta_open or _join_of_subsets(regular, m) == m
    )


def theta_c_open_equivalence(space: FiniteSpace) -> Outcome:
    table = operator_table(space)
    return always(
        table.family(FamilyKind.THETA_C_ESTAR_OPEN) == table.family(FamilyKind.ESTAR_THETA_OPEN)
    )


def theta_closed_intersection_of_regular(space: FiniteSpace) -> Outcome:
    estar = operator_table(space).estar
    theta_closed = estar.theta_closed()
    regular = estar.regular().masks
    return _every_subset(
        space,
        lambda m: m not in theta_closed or _meet_of_supersets(regular, m, space.full) == m,
    )


# -- D-sets and separation ---------------------------------------------------


def theta_open_is_dset(space: FiniteSpace) -> Outcome:
    table = operator_table(space)
    dsets = table.family(FamilyKind.DSET)
    for u in table.family(FamilyKind.ESTAR_THETA_OPEN).masks:
        if u != space.full and u not in dsets:
            return always(False, {"set": space.labels_of(u)})
    return always(True)


_DIAGRAM = [
    (AxiomKind.ESTAR_THETA_T2, AxiomKind.ESTAR_THETA_T1),
    (AxiomKind.ESTAR_THETA_T1, AxiomKind.ESTAR_THETA_T0),
    (AxiomKind.ESTAR_THETA_D2, AxiomKind.ESTAR_THETA_D1),
    (AxiomKind.ESTAR_THETA_D1, AxiomKind.ESTAR_THETA_D0),
    (AxiomKind.ESTAR_THETA_T2, AxiomKind.ESTAR_THETA_D2),
    (AxiomKind.ESTAR_THETA_T1, AxiomKind.ESTAR_THETA_D1),
    (AxiomKind.ESTAR_THETA_T0, AxiomKind.ESTAR_THETA_D0),
]

_SEPARATION = [
    AxiomKind.ESTAR_THETA_D0,
    AxiomKind.ESTAR_THETA_D1,
    AxiomKind.ESTAR_THETA_D2,
    AxiomKind.ESTAR_THETA_T0,
    AxiomKind.ESTAR_THETA_T1,
    AxiomKind.ESTAR_THETA_T2,
]


def separation_diagram(space: FiniteSpace) -> Outcome:
    for premise, conclusion in _DIAGRAM:
        if _axiom(space, premise) and not _axiom(space, conclusion):
            return always(False, {"arrow": [premise.value, conclusion.value]})
    return always(True)


def t0_implies_t2(space: FiniteSpace) -> Outcome:
    return implies(
        _axiom(space, AxiomKind.ESTAR_THETA_T0),
        lambda: _axiom(space, AxiomKind.ESTAR_THETA_T2),
    )


def d0_implies_t0(space: FiniteSpace) -> Outcome:
    return implies(
        _axiom(space, AxiomKind.ESTAR_THETA_D0),
        lambda: _axiom(space, AxiomKind.ESTAR_THETA_T0),
    )


def separation_equivalence(space: FiniteSpace) -> Outcome:
    values = {kind.value: _axiom(space, kind) for kind in _SEPARATION}
    return always(len(set(values.values())) == 1, {"values": values})


def d1_no_cc_point(space: FiniteSpace) -> Outcome:
    return implies(
        _axiom(space, AxiomKind.ESTAR_THETA_D1),
        lambda: not cc_points(space),
    )


def cluster_via_regular_neighbourhoods(space: FiniteSpace) -> Outcome:
    estar = operator_table(space).estar
    regular = estar.regular().masks

    def agrees(m: int) -> bool:
        closure = estar.theta_closure(m)
        return all(
            bool(closure >> x & 1) == all(u & m for u in regular if u >> x & 1)
            for x in range(space.size)
        )

    return _every_subset(space, agrees)


def singleton_symmetry(space: FiniteSpace) -> Outcome:
    table = operator_table(space)
    closures = table.singleton_theta_closures()
    for x in range(space.size):
        for y in range(space.size):
            if closures[y] >> x & 1 and not closures[x] >> y & 1:
                return always(False, {"points": [space.point_names[x], space.point_names[y]]})
    for x in range(space.size):
        if not table.is_quasi_theta_closed(1 << x):
            return always(False, {"singleton": space.point_names[x]})
    return always(True)


def t_half_iff_t1(space: FiniteSpace) -> Outcome:
    t_half = _axiom(space, AxiomKind.ESTAR_THETA_T_HALF)
    t1 = _axiom(space, AxiomKind.ESTAR_THETA_T1)
    return always(t_half == t1, {"T1/2": t_half, "T1": t1})


@lru_cache(maxsize=None)
def _d1_spaces_up_to(n: int) -> Tuple[FiniteSpace, ...]:
    return tuple(
        y
        for size in range(1, n + 1)
        for y in enumerate_topologies(size)
        if _axiom(y, AxiomKind.ESTAR_THETA_D1)
    )


def d1_characterization(space: FiniteSpace) -> Outcome:
    """D1 iff every pair is split by a weakly e*-irresolute surjection onto a D1 space."""
    d1 = _axiom(space, AxiomKind.ESTAR_THETA_D1)
    candidates = [
        f
        for y in _d1_spaces_up_to(space.size)
        for f in enumerate_maps(space, y)
        if f.is_surjective()
        and property_of(f, MapPropertyKind.WEAKLY_ESTAR_IRRESOLUTE).holds
    ]
    split = all(
        any(f(a) != f(b) for f in candidates)
        for a, b in combinations(range(space.size), 2)
    )
    return always(d1 == split, {"D1": d1, "split_by_maps": split})


# -- kernels and R0 / R1 ------------------------------------------------------


def kernel_characterization(space: FiniteSpace) -> Outcome:
    estar = operator_table(space).estar
    closures = [estar.theta_closure(1 << x) for x in range(space.size)]

    def by_closures(m: int) -> int:
        return sum(1 << x for x, c in enumerate(closures) if c & m)

    return _every_subset(space, lambda m: estar.theta_kernel(m) == by_closures(m))


def slightly_r0_iff_kernels(space: FiniteSpace) -> Outcome:
    estar = operator_table(space).estar
    r0 = _axiom(space, AxiomKind.SLIGHTLY_ESTAR_THETA_R0)
    proper = all(estar.theta_kernel(1 << x) != space.full for x in range(space.size))
    return always(r0 == proper, {"slightly_r0": r0, "proper_kernels": proper})


def product_slightly_r0(pair: Tuple[FiniteSpace, FiniteSpace]) -> Outcome:
    first, second = pair
    return implies(
        _axiom(first, AxiomKind.SLIGHTLY_ESTAR_THETA_R0),
        lambda: _axiom(product(first, second), AxiomKind.SLIGHTLY_ESTAR_THETA_R0),
    )


def r1_iff_closures_agree(space: FiniteSpace) -> Outcome:
    estar = operator_table(space).estar
    r1 = _axiom(space, AxiomKind.ESTAR_R1)
    agree = all(
        estar.theta_closure(1 << x) == estar.closure(1 << x) for x in range(space.size)
    )
    return always(r1 == agree, {"R1": r1, "closures_agree": agree})


def r1_iff_open_contains_closures(space: FiniteSpace) -> Outcome:
    estar = operator_table(space).estar
    r1 = _axiom(space, AxiomKind.ESTAR_R1)
    contained = all(
        estar.theta_closure(1 << x) & ~a == 0
        for a in estar.opens.masks
        for x in iter_bits(a)
    )
    return always(r1 == contained, {"R1": r1, "closures_inside_opens": contained})
