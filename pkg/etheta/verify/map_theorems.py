"""Map-level statements over single maps and composable pairs."""

from functools import lru_cache
from typing import Tuple

from etheta.axioms.separation import AxiomKind, holds
from etheta.maps.properties import (
    MapPropertyKind,
    graph_forms,
    preimage_dset,
    property_of,
    theta_s_characterization,
    theta_s_corollary,
    weak_irresolute_forms,
)
from etheta.maps.space_map import SpaceMap, compose, restrict
from etheta.operators.kinds import FamilyKind
from etheta.operators.table import operator_table
from etheta.space.pointset import canonical_key
from etheta.verify.claims import Outcome, always, implies

Chain = Tuple[SpaceMap, SpaceMap]


@lru_cache(maxsize=1 << 16)
def _has(f: SpaceMap, kind: MapPropertyKind) -> bool:
    """Memoized per process."""
    return property_of(f, kind).holds


def _weakly_irresolute(f: SpaceMap) -> bool:
    return _has(f, MapPropertyKind.WEAKLY_ESTAR_IRRESOLUTE)


def _theta_s(f: SpaceMap) -> bool:
    return _has(f, MapPropertyKind.THETA_S_ESTAR_CONTINUOUS)


def weakly_irresolute_equivalence(f: SpaceMap) -> Outcome:
    pointwise, theta_open, _, closure_image = weak_irresolute_forms(f)
    return always(
        pointwise == theta_open == closure_image,
        {"pointwise": pointwise, "theta_open_preimages": theta_open, "closure_image": closure_image},
    )


def weakly_irresolute_theta_closed(f: SpaceMap) -> Outcome:
    pointwise, _, theta_closed, _ = weak_irresolute_forms(f)
    return always(
        pointwise == theta_closed,
        {"pointwise": pointwise, "theta_closed_preimages": theta_closed},
    )


def dset_preimage(f: SpaceMap) -> Outcome:
    def pulled_back() -> bool:
        for a in operator_table(f.codomain).family(FamilyKind.DSET).masks:
            if not preimage_dset(f, a).holds:
                return False
        return True

    return implies(f.is_surjective() and _weakly_irresolute(f), pulled_back)


def d1_pullback(f: SpaceMap) -> Outcome:
    return implies(
        f.is_surjective()
        and f.is_injective()
        and _weakly_irresolute(f)
        and holds(f.codomain, AxiomKind.ESTAR_THETA_D1).holds,
        lambda: holds(f.domain, AxiomKind.ESTAR_THETA_D1).holds,
    )


def continuity_diagram(f: SpaceMap) -> Outcome:
    s_estar = _has(f, MapPropertyKind.S_ESTAR_CONTINUOUS)
    if _theta_s(f) and not s_estar:
        return always(False, {"arrow": ["theta-S-e*-continuous", "S-e*-continuous"]})
    if _has(f, MapPropertyKind.S_CONTINUOUS) and not s_estar:
        return always(False, {"arrow": ["S-continuous", "S-e*-continuous"]})
    return always(True)


def s_estar_and_estar_open(f: SpaceMap) -> Outcome:
    return implies(
        _has(f, MapPropertyKind.S_ESTAR_CONTINUOUS) and _has(f, MapPropertyKind.ESTAR_OPEN_MAP),
        lambda: _theta_s(f),
    )


def graph_lemma(f: SpaceMap) -> Outcome:
    rectangle_form, image_form = graph_forms(f)
    return always(
        rectangle_form == image_form,
        {"rectangle_form": rectangle_form, "image_form": image_form},
    )


def graph_theorem(f: SpaceMap) -> Outcome:
    return implies(
        _theta_s(f)
        and _weakly_irresolute(f)
        and holds(f.codomain, AxiomKind.ESTAR_T1).holds,
        lambda: _has(f, MapPropertyKind.STRONGLY_ESTAR_THETA_CLOSED_GRAPH),
    )


def theta_s_closed_set_form(f: SpaceMap) -> Outcome:
    return implies(
        _weakly_irresolute(f),
        lambda: _theta_s(f) == theta_s_characterization(f),
    )


def theta_s_closure_form(f: SpaceMap) -> Outcome:
    return implies(
        _weakly_irresolute(f),
        lambda: _theta_s(f) == theta_s_corollary(f),
    )


def restriction(f: SpaceMap) -> Outcome:
    if not _theta_s(f):
        return Outcome(False, True)
    for subset in sorted(range(1, f.domain.full + 1), key=canonical_key):
        if not _theta_s(restrict(f, subset)):
            return always(False, {"subset": f.domain.labels_of(subset)})
    return always(True)


def r1_surjection(f: SpaceMap) -> Outcome:
    return implies(
        _theta_s(f) and f.is_surjective(),
        lambda: holds(f.codomain, AxiomKind.ESTAR_R1).holds,
    )


def s_estar_without_theta_s(f: SpaceMap) -> Outcome:
    """Hypothesis S-e*-continuous, conclusion θ-S-e*-continuous."""
    if not _has(f, MapPropertyKind.S_ESTAR_CONTINUOUS):
        return Outcome(False, True)
    witness = property_of(f, MapPropertyKind.THETA_S_ESTAR_CONTINUOUS).witness
    return always(witness is None, witness)


def composition(chain: Chain) -> Outcome:
    f, g = chain
    return implies(
        _has(f, MapPropertyKind.CONTINUOUS) and _theta_s(g),
        lambda: _theta_s(compose(f, g)),
    )


def open_surjection_quotient(chain: Chain) -> Outcome:
    f, g = chain
    return implies(
        f.is_surjective() and _has(f, MapPropertyKind.OPEN_MAP) and _theta_s(compose(f, g)),
        lambda: _theta_s(g),
    )
