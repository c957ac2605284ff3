"""Function-level predicates: continuity variants, irresoluteness and graphs."""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, Optional, Tuple

from etheta.errors import InternalCharacterizationMismatch, PreconditionUnmet
from etheta.maps.space_map import SpaceMap
from etheta.operators.kinds import FamilyKind
from etheta.operators.table import OperatorTable, operator_table
from etheta.space.finite_space import rectangle
from etheta.space.pointset import MaskLike, PointSet, as_mask

logger = logging.getLogger(__name__)


class MapPropertyKind(Enum):
    """Every map predicate the maps module decides."""

    CONTINUOUS = "continuous"
    OPEN_MAP = "open"
    ESTAR_OPEN_MAP = "e*-open"
    ESTAR_IRRESOLUTE = "e*-irresolute"
    WEAKLY_ESTAR_IRRESOLUTE = "weakly-e*-irresolute"
    STRONGLY_ESTAR_IRRESOLUTE = "strongly-e*-irresolute"
    S_CONTINUOUS = "S-continuous"
    S_ESTAR_CONTINUOUS = "S-e*-continuous"
    THETA_S_ESTAR_CONTINUOUS = "theta-S-e*-continuous"
    STRONGLY_ESTAR_THETA_CLOSED_GRAPH = "strongly-e*-theta-closed-graph"


@dataclass(frozen=True)
class MapPropertyResult:
    """Decision for one map predicate; ``witness`` certifies a failure."""

    holds: bool
    witness: Optional[Dict[str, Any]] = None


class _MapContext:
    """Tables of both ends of a map."""

    def __init__(self, f: SpaceMap) -> None:
        self.f = f
        self.source: OperatorTable = operator_table(f.domain)
        self.target: OperatorTable = operator_table(f.codomain)

    def target_neighbourhoods(self, x: int) -> Tuple[int, ...]:
        """Minimal e*-open sets around f(x)."""
        return self.target.estar.neighbourhoods(self.f(x))

    def point_witness(self, x: int, v: int) -> Dict[str, Any]:
        return {
            "point": self.f.domain.point_names[x],
            "set": self.f.codomain.labels_of(v),
        }


def _preimages_in(
    ctx: _MapContext, target_family: Tuple[int, ...], source_kind: FamilyKind
) -> MapPropertyResult:
    source = ctx.source.family(source_kind)
    for v in target_family:
        if ctx.f.preimage(v) not in source:
            return MapPropertyResult(False, {"set": ctx.f.codomain.labels_of(v)})
    return MapPropertyResult(True)


def _images_in(ctx: _MapContext, target_kind: FamilyKind) -> MapPropertyResult:
    target = ctx.target.family(target_kind)
    for u in ctx.f.domain.opens.masks:
        if ctx.f.image(u) not in target:
            return MapPropertyResult(False, {"set": ctx.f.domain.labels_of(u)})
    return MapPropertyResult(True)


def _pointwise(
    ctx: _MapContext,
    sources: Callable[[int], Tuple[int, ...]],
    condition: Callable[[int, int], bool],
) -> MapPropertyResult:
    """∀x ∀ minimal e*-open V ∋ f(x) ∃ U in ``sources(x)`` with condition(U, V)."""
    for x in range(ctx.f.domain.size):
        for v in ctx.target_neighbourhoods(x):
            if not any(condition(u, v) for u in sources(x)):
                return MapPropertyResult(False, ctx.point_witness(x, v))
    return MapPropertyResult(True)


def _open_around(ctx: _MapContext) -> Callable[[int], Tuple[int, ...]]:
    return lambda x: (ctx.f.domain.minimal_neighbourhood(x),)


def _estar_around(ctx: _MapContext) -> Callable[[int], Tuple[int, ...]]:
    return ctx.source.estar.neighbourhoods


def _weakly_irresolute_pointwise(ctx: _MapContext) -> MapPropertyResult:
    closure = ctx.target.estar.closure
    return _pointwise(
        ctx, _estar_around(ctx), lambda u, v: ctx.f.image(u) & ~closure(v) == 0
    )


def _strongly_irresolute(ctx: _MapContext) -> MapPropertyResult:
    closure = ctx.source.estar.closure
    return _pointwise(
        ctx, _estar_around(ctx), lambda u, v: ctx.f.image(closure(u)) & ~v == 0
    )


def _s_family(ctx: _MapContext, closure: Callable[[int], int]) -> MapPropertyResult:
    return _pointwise(
        ctx, _open_around(ctx), lambda u, v: closure(ctx.f.image(u)) & ~v == 0
    )


def _graph_pairs(ctx: _MapContext):
    f = ctx.f
    for x in range(f.domain.size):
        for y in range(f.codomain.size):
            if y != f(x):
                yield x, y


def _graph_rectangle(ctx: _MapContext) -> MapPropertyResult:
    """(e*-cl(U) × V) ∩ G(f) = ∅ for some U ∈ e*O(X,x), V ∈ e*θO(Y,y)."""
    f = ctx.f
    graph = f.graph().bits
    width = f.codomain.size
    estar = ctx.source.estar
    theta_open = ctx.target.estar.theta_open().masks
    for x, y in _graph_pairs(ctx):
        around_y = [v for v in theta_open if v >> y & 1]
        if not any(
            rectangle(estar.closure(u), v, width) & graph == 0
            for u in estar.neighbourhoods(x)
            for v in around_y
        ):
            return MapPropertyResult(
                False, {"pair": [f.domain.point_names[x], f.codomain.point_names[y]]}
            )
    return MapPropertyResult(True)


def _graph_lemma(ctx: _MapContext) -> MapPropertyResult:
    """f[e*-cl(U)] ∩ V = ∅ for some U ∈ e*O(X,x), V ∈ e*θO(Y,y)."""
    f = ctx.f
    estar = ctx.source.estar
    theta_open = ctx.target.estar.theta_open().masks
    for x, y in _graph_pairs(ctx):
        around_y = [v for v in theta_open if v >> y & 1]
        if not any(
            f.image(estar.closure(u)) & v == 0
            for u in estar.neighbourhoods(x)
            for v in around_y
        ):
            return MapPropertyResult(
                False, {"pair": [f.domain.point_names[x], f.codomain.point_names[y]]}
            )
    return MapPropertyResult(True)


def weak_irresolute_forms(f: SpaceMap) -> Tuple[bool, bool, bool, bool]:
    """
    Four formulations of weak e*-irresoluteness.

    Returns:
        (pointwise definition, θ-open preimages, θ-closed preimages,
        f[e*-cl(A)] ⊆ e*-cl_θ(f[A]) for every A).
    """
    ctx = _MapContext(f)
    pointwise = _weakly_irresolute_pointwise(ctx).holds
    theta_open = _preimages_in(
        ctx, ctx.target.family(FamilyKind.ESTAR_THETA_OPEN).masks, FamilyKind.ESTAR_THETA_OPEN
    ).holds
    theta_closed = _preimages_in(
        ctx,
        ctx.target.family(FamilyKind.ESTAR_THETA_CLOSED).masks,
        FamilyKind.ESTAR_THETA_CLOSED,
    ).holds
    source, target = ctx.source.estar, ctx.target.estar
    closure_image = all(
        f.image(source.closure(a)) & ~target.theta_closure(f.image(a)) == 0
        for a in range(f.domain.full + 1)
    )
    return pointwise, theta_open, theta_closed, closure_image


def graph_forms(f: SpaceMap) -> Tuple[bool, bool]:
    """(rectangle form, image form) of the strongly e*-θ-closed graph property."""
    ctx = _MapContext(f)
    return _graph_rectangle(ctx).holds, _graph_lemma(ctx).holds


def theta_s_characterization(f: SpaceMap) -> bool:
    """
    Closed-set form of θ-S-e*-continuity.

    For each x and e*-closed F ∌ f(x) some open U ∋ x and e*-θ-open V ⊇ F
    have f[e*-cl(U)] ∩ V = ∅.
    """
    ctx = _MapContext(f)
    closure = ctx.source.estar.closure
    theta_open = ctx.target.estar.theta_open().masks
    for x in range(f.domain.size):
        u = f.domain.minimal_neighbourhood(x)
        blocked = f.image(closure(u))
        for closed in ctx.target.estar.closed.masks:
            if closed >> f(x) & 1:
                continue
            if not any(v & closed == closed and v & blocked == 0 for v in theta_open):
                return False
    return True


def theta_s_corollary(f: SpaceMap) -> bool:
    """e*-cl_θ(f[e*-cl(U)]) ⊆ V form of θ-S-e*-continuity."""
    ctx = _MapContext(f)
    closure = ctx.source.estar.closure
    theta_closure = ctx.target.estar.theta_closure
    return _pointwise(
        ctx,
        _open_around(ctx),
        lambda u, v: theta_closure(f.image(closure(u))) & ~v == 0,
    ).holds


def _decide(ctx: _MapContext, kind: MapPropertyKind) -> MapPropertyResult:
    if kind is MapPropertyKind.CONTINUOUS:
        return _preimages_in(ctx, ctx.f.codomain.opens.masks, FamilyKind.OPEN)
    if kind is MapPropertyKind.OPEN_MAP:
        return _images_in(ctx, FamilyKind.OPEN)
    if kind is MapPropertyKind.ESTAR_OPEN_MAP:
        return _images_in(ctx, FamilyKind.ESTAR_OPEN)
    if kind is MapPropertyKind.ESTAR_IRRESOLUTE:
        return _preimages_in(ctx, ctx.target.estar.opens.masks, FamilyKind.ESTAR_OPEN)
    if kind is MapPropertyKind.WEAKLY_ESTAR_IRRESOLUTE:
        result = _weakly_irresolute_pointwise(ctx)
        by_preimages = _preimages_in(
            ctx,
            ctx.target.family(FamilyKind.ESTAR_THETA_OPEN).masks,
            FamilyKind.ESTAR_THETA_OPEN,
        )
        if result.holds != by_preimages.holds:
            raise InternalCharacterizationMismatch(
                "weak e*-irresoluteness", {"map": ctx.f.to_labels()}
            )
        return result
    if kind is MapPropertyKind.STRONGLY_ESTAR_IRRESOLUTE:
        return _strongly_irresolute(ctx)
    if kind is MapPropertyKind.S_CONTINUOUS:
        return _s_family(ctx, ctx.target.closure)
    if kind is MapPropertyKind.S_ESTAR_CONTINUOUS:
        return _s_family(ctx, ctx.target.estar.closure)
    if kind is MapPropertyKind.THETA_S_ESTAR_CONTINUOUS:
        return _s_family(ctx, ctx.target.estar.theta_closure)
    if kind is MapPropertyKind.STRONGLY_ESTAR_THETA_CLOSED_GRAPH:
        result = _graph_rectangle(ctx)
        if result.holds != _graph_lemma(ctx).holds:
            raise InternalCharacterizationMismatch(
                "strongly e*-theta-closed graph", {"map": ctx.f.to_labels()}
            )
        return result
    raise ValueError(f"unsupported map property: {kind}")


def property_of(f: SpaceMap, kind: MapPropertyKind) -> MapPropertyResult:
    """
    Decide one map predicate exactly.

    Args:
        f: The map.
        kind: Which predicate.

    Returns:
        MapPropertyResult; pointwise predicates report the first failing
        (point, minimal e*-open V) pair, family predicates the first set.

    Raises:
        CarrierTooLarge: If either carrier exceeds the point limit.
        InternalCharacterizationMismatch: If two equivalent forms disagree.
    """
    return _decide(_MapContext(f), kind)


def property_table(f: SpaceMap) -> Dict[MapPropertyKind, MapPropertyResult]:
    """Every MapPropertyKind, in declaration order."""
    ctx = _MapContext(f)
    return {kind: _decide(ctx, kind) for kind in MapPropertyKind}


@dataclass(frozen=True)
class PreimageDset:
    """A D-set preimage together with the decomposition that certifies it."""

    holds: bool
    preimage: PointSet
    decomposition: Tuple[PointSet, PointSet]


def preimage_dset(f: SpaceMap, subset: MaskLike) -> PreimageDset:
    """
    Pull an e*-θ-D-set back along a weakly e*-irresolute surjection.

    The first decomposition A = U ∖ V of the codomain (canonical order) is
    pulled back to (f⁻¹[U], f⁻¹[V]).

    Raises:
        PreconditionUnmet: If f is not a weakly e*-irresolute surjection or
            A is not an e*-θ-D-set of the codomain.
    """
    ctx = _MapContext(f)
    target = as_mask(subset)
    if not f.is_surjective():
        raise PreconditionUnmet("map is not surjective")
    if not _decide(ctx, MapPropertyKind.WEAKLY_ESTAR_IRRESOLUTE).holds:
        raise PreconditionUnmet("map is not weakly e*-irresolute")
    if target not in ctx.target.family(FamilyKind.DSET):
        raise PreconditionUnmet(
            f"{f.codomain.labels_of(target)} is not an e*-theta-D-set of the codomain"
        )
    theta_open = ctx.target.estar.theta_open().masks
    full = f.codomain.full
    u, v = next(
        (u, v)
        for u in theta_open
        if u != full
        for v in theta_open
        if u & ~v == target
    )
    pre_u, pre_v = f.preimage(u), f.preimage(v)
    pre_a = f.preimage(target)
    source_theta_open = ctx.source.family(FamilyKind.ESTAR_THETA_OPEN)
    valid = (
        pre_u in source_theta_open
        and pre_v in source_theta_open
        and pre_u != f.domain.full
        and pre_u & ~pre_v == pre_a
    )
    width = f.domain.size
    return PreimageDset(
        holds=valid and pre_a in ctx.source.family(FamilyKind.DSET),
        preimage=PointSet(pre_a, width),
        decomposition=(PointSet(pre_u, width), PointSet(pre_v, width)),
    )
