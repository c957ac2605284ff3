"""Bounded exhaustive verification of the claim catalog."""

from etheta.verify.claims import (
    Bound,
    Bounds,
    ClaimReport,
    ClaimSpec,
    Domain,
    Outcome,
    Status,
    Tier,
)
from etheta.verify.catalog import ClaimCatalog, create_default_catalog, default_catalog, read_manifest
from etheta.verify.domains import describe, instances, rebuild
from etheta.verify.engine import (
    SuiteReport,
    recheck,
    run_claim,
    run_suite,
    search_question,
)

__all__ = [
    "Bound",
    "Bounds",
    "ClaimCatalog",
    "ClaimReport",
    "ClaimSpec",
    "Domain",
    "Outcome",
    "Status",
    "SuiteReport",
    "Tier",
    "create_default_catalog",
    "default_catalog",
    "read_manifest",
    "instances",
    "describe",
    "rebuild",
    "run_claim",
    "run_suite",
    "search_question",
    "recheck",
]
