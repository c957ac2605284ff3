"""Claim registry and the default catalog of statements."""

from functools import lru_cache
from pathlib import Path
from typing import Any, Callable, Dict, Iterator, List, Tuple

from etheta.errors import UnknownClaim
from etheta.verify import golden, map_theorems, theorems
from etheta.verify.claims import Bound, ClaimSpec, Domain, Outcome, Tier

MANIFEST_PATH = Path(__file__).parent / "claims_manifest.txt"


class ClaimCatalog:
    """
    Ordered registry of ClaimSpecs.

    Iteration follows registration order, which is the manifest order.
    """

    def __init__(self) -> None:
        self._claims: Dict[str, ClaimSpec] = {}

    def add_claim(
        self,
        claim_id: str,
        tier: Tier,
        domain: Domain,
        check: Callable[[Any], Outcome],
        citation: str = "",
        bound: Bound = Bound.POINTS,
        min_points: int = 1,
        stratified: bool = False,
    ) -> ClaimSpec:
        """
        Register a claim.

        Args:
            claim_id: Stable identifier.
            tier: Core, new or question tier.
            domain: Quantifier domain.
            check: Instance → Outcome.
            citation: Statement text for reports and the manifest.
            bound: Which carrier limit applies.
            min_points: Smallest carrier quantified over.
            stratified: Restrict a map search to the top size stratum by default.

        Raises:
            ValueError: If the id is already registered.
        """
        if claim_id in self._claims:
            raise ValueError(f"Duplicate claim id: {claim_id}")
        spec = ClaimSpec(
            id=claim_id,
            tier=tier,
            domain=domain,
            check=check,
            citation=citation,
            bound=bound,
            min_points=min_points,
            stratified=stratified,
        )
        self._claims[claim_id] = spec
        return spec

    def get(self, claim_id: str) -> ClaimSpec:
        try:
            return self._claims[claim_id]
        except KeyError:
            raise UnknownClaim(claim_id) from None

    def ids(self) -> List[str]:
        return list(self._claims)

    def manifest_lines(self) -> List[str]:
        """``id<TAB>tier<TAB>citation`` per claim."""
        return [f"{c.id}\t{c.tier.value}\t{c.citation}" for c in self]

    def __iter__(self) -> Iterator[ClaimSpec]:
        return iter(self._claims.values())

    def __len__(self) -> int:
        return len(self._claims)

    def __contains__(self, claim_id: object) -> bool:
        return claim_id in self._claims


def read_manifest(path: Path = MANIFEST_PATH) -> List[Tuple[str, str, str]]:
    """Checked-in (id, tier, citation) rows, comments and blanks skipped."""
    rows = []
    for line in path.read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        claim_id, tier, citation = line.split("\t", 2)
        rows.append((claim_id, tier, citation))
    return rows


def create_default_catalog(catalog: ClaimCatalog) -> None:
    """Register every statement, worked example and internal invariant."""
    core, new = Tier.CORE, Tier.NEW
    spaces, pairs, maps, chains, golden_ = (
        Domain.SPACES,
        Domain.SPACE_PAIRS,
        Domain.MAPS,
        Domain.MAP_CHAINS,
        Domain.GOLDEN,
    )
    add = catalog.add_claim

    add("T2.1-open-iff-closure-regular", core, spaces, theorems.open_iff_closure_regular,
        "A is e*-open iff e*-cl(A) is e*-regular; A is e*-closed iff e*-int(A) is e*-regular")
    add("C2.2-theta-open-regular-base", core, spaces, theorems.theta_open_regular_base,
        "A is e*-theta-open iff each point of A has an e*-regular U with x ∈ U ⊆ A; "
        "unions of e*-theta-open sets are e*-theta-open")
    add("T2.3-estar-open-closure-agrees", core, spaces, theorems.estar_open_closure_agrees,
        "e*-cl(A) = e*-cl_theta(A) for e*-open A; e*-regular = e*-theta-open and e*-theta-closed")
    add("T2.5-regular-space-equivalence", core, spaces, theorems.regular_space_equivalence,
        "e*-regular space iff open neighbourhoods shrink to e*-closures iff e*-regular sets "
        "form a base of the e*-open sets")
    add("T2.6-weakly-irresolute-equivalence", core, maps,
        map_theorems.weakly_irresolute_equivalence,
        "weakly e*-irresolute iff f[e*-cl(A)] ⊆ e*-cl_theta(f[A]) iff preimages of "
        "e*-theta-open sets are e*-theta-open", bound=Bound.MAP_POINTS)
    add("R2.7-regular-theta-open-open-chain", core, spaces,
        theorems.regular_theta_open_open_chain,
        "e*-regular ⇒ e*-theta-open ⇒ e*-open")
    add("T2.8-kapanis", core, spaces, theorems.kapanis,
        "e*-cl_theta(A) is the intersection of the e*-theta-closed supersets and of the "
        "e*-regular supersets of A")
    add("R2.9-theta-closed-intersections", core, spaces, theorems.theta_closed_intersections,
        "intersections of e*-theta-closed sets are e*-theta-closed; ∅ and X are e*-theta-closed")
    add("EX2.12-union-counterexample", core, golden_, golden.union_counterexample,
        "in X={1,2,3}, τ={∅,X,{1},{2},{1,2}}, {1} and {2} are e*-theta-closed but {1,2} is not")
    add("T2.11-regular-characterizations", core, spaces, theorems.regular_characterizations,
        "A is e*-regular iff A = e*-cl(e*-int(A)) iff A = e*-int(e*-cl(A))")
    add("T2.13-theta-closure-idempotent", core, spaces, theorems.theta_closure_idempotent,
        "e*-cl_theta(e*-cl_theta(A)) = e*-cl_theta(A)")
    add("INV-union-closure", core, spaces, theorems.union_closure,
        "e*-open, beta-open and both theta-open families are closed under finite unions; "
        "both theta-closed families are closed under finite intersections")
    add("INV-cross-check-closures", core, spaces, theorems.cross_check,
        "closure formulas, dualities and family identities agree on every subset")
    add("INV-projections-continuous", core, pairs, theorems.projections_continuous,
        "both projections of a product are continuous open maps", bound=Bound.CHAIN_POINTS)

    add("T3.1-interior-of-theta-closure", new, spaces, theorems.interior_of_theta_closure,
        "if A is e*-open then e*-int(e*-cl_theta(A)) is e*-theta-open")
    add("T3.2-theta-open-equals-regular", new, spaces, theorems.theta_open_equals_regular,
        "e*-theta-open coincides with e*-regular iff every e*-cl_theta(A) is e*-regular")
    add("T3.3-theta-open-union-of-regular", new, spaces, theorems.theta_open_union_of_regular,
        "every e*-theta-open set is a union of e*-regular sets")
    add("T3.4-theta-c-open-equivalence", new, spaces, theorems.theta_c_open_equivalence,
        "theta-c-e*-open sets are exactly the e*-theta-open sets")
    add("C3.5-theta-closed-intersection-of-regular", new, spaces,
        theorems.theta_closed_intersection_of_regular,
        "every e*-theta-closed set is an intersection of e*-regular sets")

    add("R4.3-theta-open-is-dset", new, spaces, theorems.theta_open_is_dset,
        "every e*-theta-open set other than X is an e*-theta-D-set")
    add("EX4.5-golden-dsets", new, golden_, golden.example4_dsets,
        "in τ={∅,X,{a},{c},{a,c},{c,d},{a,c,d}}, e*θO = 2^X∖{{b}} and e*θD = 2^X∖{X}")
    add("D4.2-diagram", new, spaces, theorems.separation_diagram,
        "T2 ⇒ T1 ⇒ T0, D2 ⇒ D1 ⇒ D0 and Ti ⇒ Di for the e*-theta axioms", min_points=2)
    add("T4.4-T0-implies-T2", new, spaces, theorems.t0_implies_t2,
        "if X is e*theta-T0 then it is e*theta-T2")
    add("T4.7-D0-implies-T0", new, spaces, theorems.d0_implies_t0,
        "if X is e*-theta-D0 then it is e*theta-T0")
    add("C4.8-separation-equivalence", new, spaces, theorems.separation_equivalence,
        "the six e*-theta separation axioms are equivalent", min_points=2)
    add("T4.9-D1-no-cc-point", new, spaces, theorems.d1_no_cc_point,
        "an e*-theta-D1 space has no e*-theta-cc-point")
    add("L4.10-cluster-via-regular-neighbourhoods", new, spaces,
        theorems.cluster_via_regular_neighbourhoods,
        "x ∈ e*-cl_theta(A) iff every e*-regular U ∋ x meets A")
    add("T4.11-singleton-symmetry", new, spaces, theorems.singleton_symmetry,
        "x ∈ e*-cl_theta({y}) implies y ∈ e*-cl_theta({x}); singletons are quasi e*-theta-closed")
    add("T4.14-Thalf-iff-T1", new, spaces, theorems.t_half_iff_t1,
        "e*-theta-T1/2 iff e*theta-T1")
    add("R4.6-weakly-irresolute-theta-closed-preimages", new, maps,
        map_theorems.weakly_irresolute_theta_closed,
        "weakly e*-irresolute iff preimages of e*-theta-closed sets are e*-theta-closed",
        bound=Bound.MAP_POINTS)
    add("T4.15-dset-preimage", new, maps, map_theorems.dset_preimage,
        "preimages of e*-theta-D-sets under weakly e*-irresolute surjections are "
        "e*-theta-D-sets", bound=Bound.MAP_POINTS)
    add("T4.16-D1-pullback", new, maps, map_theorems.d1_pullback,
        "a weakly e*-irresolute bijection onto an e*-theta-D1 space has an e*-theta-D1 domain",
        bound=Bound.MAP_POINTS)
    add("T4.17-D1-characterization", new, spaces, theorems.d1_characterization,
        "X is e*-theta-D1 iff every pair of points is split by a weakly e*-irresolute "
        "surjection onto an e*-theta-D1 space", bound=Bound.MAP_POINTS, min_points=2)

    add("T5.2-kernel-characterization", new, spaces, theorems.kernel_characterization,
        "e*-ker_theta(A) = {x : e*-cl_theta({x}) ∩ A ≠ ∅}")
    add("EX5.3-golden-kernels", new, golden_, golden.example5_kernels,
        "in τ={∅,X,{a},{a,b},{a,b,c}}, e*R = e*θO = e*O = 2^X, βR = βθO = {∅,X}, "
        "e*-ker_theta({a,b}) = {a,b} and beta-ker_theta({a,b}) = X")
    add("T5.5-slightly-R0-iff-kernels", new, spaces, theorems.slightly_r0_iff_kernels,
        "slightly e*-theta-R0 iff e*-ker_theta({x}) ≠ X for every x")
    add("EX5.6-golden-slightly-R0", new, golden_, golden.example5_slightly_r0,
        "τ={∅,X,{a},{a,b},{a,b,c}} is slightly e*-theta-R0 but not slightly beta-theta-R0")
    add("T5.7-product-slightly-R0", new, pairs, theorems.product_slightly_r0,
        "if X is slightly e*-theta-R0 then X × Y is slightly e*-theta-R0",
        bound=Bound.MAP_POINTS)
    add("R5.9-continuity-diagram", new, maps, map_theorems.continuity_diagram,
        "theta-S-e*-continuous ⇒ S-e*-continuous ⇐ S-continuous", bound=Bound.MAP_POINTS)
    add("EX5.10-golden-constant-map", new, golden_, golden.constant_map_continuity,
        "the constant map to c on τ={∅,X,{a},{c},{a,c},{c,d},{a,c,d}} is S-e*-continuous "
        "but not S-continuous")
    add("T5.11-S-estar-and-estar-open", new, maps, map_theorems.s_estar_and_estar_open,
        "S-e*-continuous e*-open maps are theta-S-e*-continuous", bound=Bound.MAP_POINTS)
    add("L5.13-graph-lemma", new, maps, map_theorems.graph_lemma,
        "strongly e*-theta-closed graph iff f[e*-cl(U)] ∩ V = ∅ for some U ∈ e*O(X,x), "
        "V ∈ e*θO(Y,y) at each point off the graph", bound=Bound.MAP_POINTS)
    add("T5.14-graph-theorem", new, maps, map_theorems.graph_theorem,
        "theta-S-e*-continuous weakly e*-irresolute maps into e*-T1 spaces have strongly "
        "e*-theta-closed graphs", bound=Bound.MAP_POINTS)
    add("T5.15-theta-s-characterization", new, maps, map_theorems.theta_s_closed_set_form,
        "for weakly e*-irresolute f: theta-S-e*-continuous iff e*-closed F ∌ f(x) is "
        "separated from f[e*-cl(U)] by an e*-theta-open V ⊇ F", bound=Bound.MAP_POINTS)
    add("C5.16-theta-s-corollary", new, maps, map_theorems.theta_s_closure_form,
        "for weakly e*-irresolute f: theta-S-e*-continuous iff "
        "e*-cl_theta(f[e*-cl(U)]) ⊆ V", bound=Bound.MAP_POINTS)
    add("T5.17-composition", new, chains, map_theorems.composition,
        "g ∘ f is theta-S-e*-continuous when f is continuous and g is "
        "theta-S-e*-continuous", bound=Bound.CHAIN_POINTS)
    add("T5.18-open-surjection-quotient", new, chains, map_theorems.open_surjection_quotient,
        "g is theta-S-e*-continuous when g ∘ f is and f is an open surjection",
        bound=Bound.CHAIN_POINTS)
    add("T5.19-restriction", new, maps, map_theorems.restriction,
        "restrictions of theta-S-e*-continuous maps are theta-S-e*-continuous",
        bound=Bound.MAP_POINTS)

    add("EX6.1-golden-R1", new, golden_, golden.example4_r1,
        "τ={∅,X,{a},{c},{a,c},{c,d},{a,c,d}} is e*-R1 but not beta-R1")
    add("T6.2-R1-iff-closures-agree", new, spaces, theorems.r1_iff_closures_agree,
        "e*-R1 iff e*-cl_theta({x}) = e*-cl({x}) for every x")
    add("T6.3-R1-iff-open-contains-closures", new, spaces,
        theorems.r1_iff_open_contains_closures,
        "e*-R1 iff e*-cl_theta({x}) ⊆ A for every e*-open A and x ∈ A")
    add("T6.4-R1-surjection", new, maps, map_theorems.r1_surjection,
        "the codomain of a theta-S-e*-continuous surjection is e*-R1", bound=Bound.MAP_POINTS)

    add("Q5.1-open-question", Tier.QUESTION, maps, map_theorems.s_estar_without_theta_s,
        "Is there any S-e*-continuous function which is not theta-S-e*-continuous?",
        bound=Bound.MAP_POINTS, stratified=True)


@lru_cache(maxsize=1)
def default_catalog() -> ClaimCatalog:
    catalog = ClaimCatalog()
    create_default_catalog(catalog)
    return catalog
