"""Exhaustive claim checking over partitioned instance domains."""

import itertools
import logging
import multiprocessing
import time
from dataclasses import dataclass, field
from typing import Any, Dict, Generator, Iterable, Iterator, List, Optional, Sequence, Tuple

from etheta.errors import BudgetExceeded
from etheta.monitoring.alerting import (
    AlertManager,
    create_claim_error_alert,
    create_refutation_alert,
)
from etheta.monitoring.metrics import VerificationMonitor
from etheta.verify.catalog import ClaimCatalog, default_catalog
from etheta.verify.claims import Bounds, ClaimReport, ClaimSpec, Status, Tier
from etheta.verify.domains import describe, instances, rebuild

logger = logging.getLogger(__name__)

QUESTION_ID = "Q5.1-open-question"

# Chunks queued per worker at a time.
POOL_WINDOW = 4

Job = Tuple[ClaimSpec, int, Sequence[Any], bool]


@dataclass(frozen=True)
class ChunkResult:
    """Evaluation of one contiguous slice of the domain."""

    start: int
    evaluated: int
    vacuous: int
    last: bool = False
    failure: Optional[int] = None
    instance: Optional[Dict[str, Any]] = None
    detail: Optional[Dict[str, Any]] = None


def evaluate_chunk(job: Job) -> ChunkResult:
    """
    Evaluate instances in order, stopping at the first counterexample.

    ``failure`` is the absolute index of that counterexample and
    ``instance`` its description.
    """
    spec, start, chunk, last = job
    vacuous = 0
    for offset, instance in enumerate(chunk):
        outcome = spec.check(instance)
        if outcome.counterexample:
            return ChunkResult(
                start,
                offset + 1,
                vacuous,
                last,
                start + offset,
                describe(spec.domain, instance),
                outcome.detail,
            )
        if not outcome.hypothesis:
            vacuous += 1
    return ChunkResult(start, len(chunk), vacuous, last)


def _jobs(spec: ClaimSpec, domain: Iterable[Any], start: int, chunk_size: int) -> Iterator[Job]:
    """Consecutive chunks from ``start``; each knows whether it ends the domain."""
    remaining = itertools.islice(domain, start, None)
    chunk = list(itertools.islice(remaining, chunk_size))
    offset = start
    while chunk:
        following = list(itertools.islice(remaining, chunk_size))
        yield spec, offset, chunk, not following
        offset += len(chunk)
        chunk = following


def _results(jobs: Iterator[Job], bounds: Bounds) -> Generator[ChunkResult, None, None]:
    if bounds.workers <= 1:
        for job in jobs:
            yield evaluate_chunk(job)
        return
    window = bounds.workers * POOL_WINDOW
    with multiprocessing.Pool(bounds.workers) as pool:
        while True:
            batch = list(itertools.islice(jobs, window))
            if not batch:
                return
            # imap keeps chunk order, so the first failure seen is the canonical one.
            yield from pool.imap(evaluate_chunk, batch)


def _resume_point(
    spec: ClaimSpec, bounds: Bounds, cursor: Optional[Dict[str, Any]]
) -> Tuple[int, int, int]:
    if not cursor:
        return 0, 0, 0
    if cursor.get("claim") != spec.id:
        raise ValueError(f"cursor belongs to {cursor.get('claim')}, not {spec.id}")
    if cursor.get("bounds") != bounds.domain_key():
        raise ValueError("cursor was written under different bounds")
    return int(cursor["next_index"]), int(cursor["instances"]), int(cursor["vacuous"])


def _cursor(spec: ClaimSpec, bounds: Bounds, next_index: int, count: int, vacuous: int) -> Dict[str, Any]:
    return {
        "claim": spec.id,
        "bounds": bounds.domain_key(),
        "next_index": next_index,
        "instances": count,
        "vacuous": vacuous,
    }


def _exhausted_status(spec: ClaimSpec) -> Status:
    if spec.tier is Tier.QUESTION:
        return Status.EXHAUSTED_NO_WITNESS
    return Status.CONFIRMED


def run_claim(
    claim_id: str,
    bounds: Optional[Bounds] = None,
    catalog: Optional[ClaimCatalog] = None,
    cursor: Optional[Dict[str, Any]] = None,
    monitor: Optional[VerificationMonitor] = None,
    alerts: Optional[AlertManager] = None,
    strict: bool = False,
) -> ClaimReport:
    """
    Evaluate hypothesis ⇒ conclusion on every instance of a claim's domain.

    Args:
        claim_id: Catalog id.
        bounds: Carrier limits and execution settings.
        catalog: Registry to look the claim up in (default catalog if None).
        cursor: Cursor from an interrupted run of the same claim and bounds.
        monitor: Optional metrics sink.
        alerts: Optional alert sink; refutations are emitted there.
        strict: Raise instead of returning a BUDGET_EXCEEDED report.

    Returns:
        ClaimReport. Counts and witness do not depend on the worker count.

    Raises:
        UnknownClaim: If the id is not in the catalog.
        BudgetExceeded: In strict mode, when a budget stops the run.
    """
    catalog = catalog or default_catalog()
    spec = catalog.get(claim_id)
    bounds = bounds or Bounds()
    started = time.perf_counter()

    next_index, count, vacuous = _resume_point(spec, bounds, cursor)
    logger.info("%s: searching from index %d", spec.id, next_index)
    jobs = _jobs(spec, instances(spec, bounds), next_index, bounds.chunk_size)

    report = ClaimReport(spec.id, spec.tier, _exhausted_status(spec))
    this_run = 0
    results = _results(jobs, bounds)
    try:
        for result in results:
            count += result.evaluated
            this_run += result.evaluated
            vacuous += result.vacuous
            if monitor:
                monitor.record_instances(result.evaluated)
            if result.failure is not None:
                report.status = Status.REFUTED
                report.witness = {
                    "index": result.failure,
                    "instance": result.instance,
                    "detail": result.detail,
                }
                break
            if result.last:
                break
            next_index = result.start + result.evaluated
            over_instances = (
                bounds.instance_budget is not None and this_run >= bounds.instance_budget
            )
            over_time = (
                bounds.time_budget is not None
                and time.perf_counter() - started > bounds.time_budget
            )
            if over_instances or over_time:
                report.status = Status.BUDGET_EXCEEDED
                report.cursor = _cursor(spec, bounds, next_index, count, vacuous)
                report.message = f"stopped after {count} instances"
                break
    finally:
        # Stops the worker pool, if any.
        results.close()

    report.instances = count
    report.vacuous = vacuous
    report.wall_time = time.perf_counter() - started
    logger.info("%s: %s after %d instances", spec.id, report.status.value, count)

    if monitor:
        monitor.record_claim(report.status.value, report.wall_time)
    if alerts and report.status is Status.REFUTED:
        alerts.emit(create_refutation_alert(spec.id, spec.tier.value, report.witness or {}))
    if strict and report.status is Status.BUDGET_EXCEEDED:
        raise BudgetExceeded(report.message, report.cursor)
    return report


def search_question(
    bounds: Optional[Bounds] = None,
    cursor: Optional[Dict[str, Any]] = None,
    monitor: Optional[VerificationMonitor] = None,
    alerts: Optional[AlertManager] = None,
    strict: bool = False,
) -> ClaimReport:
    """
    Search all maps for one that is S-e*-continuous but not θ-S-e*-continuous.

    REFUTED carries the first such map; otherwise the report is
    EXHAUSTED_NO_WITNESS with the exact number of maps examined.
    """
    return run_claim(
        QUESTION_ID, bounds, cursor=cursor, monitor=monitor, alerts=alerts, strict=strict
    )


@dataclass
class SuiteReport:
    """Result of running a whole catalog."""

    passed: bool
    reports: List[ClaimReport] = field(default_factory=list)
    core_refuted: List[str] = field(default_factory=list)
    errors: List[str] = field(default_factory=list)
    budget_exceeded: List[str] = field(default_factory=list)
    duration_seconds: float = 0.0

    @property
    def exit_code(self) -> int:
        """0 passed, 2 core refutation or error, 3 stopped by a budget."""
        if not self.passed:
            return 2
        if self.budget_exceeded:
            return 3
        return 0


def run_suite(
    bounds: Optional[Bounds] = None,
    catalog: Optional[ClaimCatalog] = None,
    claim_ids: Optional[Sequence[str]] = None,
    monitor: Optional[VerificationMonitor] = None,
    alerts: Optional[AlertManager] = None,
) -> SuiteReport:
    """
    Run every claim (or the given ids) in catalog order.

    A claim that raises is reported with status ERROR and the suite goes
    on. The suite fails when a core claim is refuted or any claim errors.
    """
    catalog = catalog or default_catalog()
    bounds = bounds or Bounds()
    started = time.perf_counter()
    reports: List[ClaimReport] = []
    core_refuted: List[str] = []
    errors: List[str] = []
    budget: List[str] = []

    for claim_id in claim_ids or catalog.ids():
        spec = catalog.get(claim_id)
        try:
            report = run_claim(
                claim_id, bounds, catalog, monitor=monitor, alerts=alerts
            )
        except Exception as e:
            logger.error("%s raised: %s", claim_id, e)
            report = ClaimReport(claim_id, spec.tier, Status.ERROR, message=str(e))
            errors.append(claim_id)
            if monitor:
                monitor.record_claim(Status.ERROR.value, 0.0)
            if alerts:
                alerts.emit(create_claim_error_alert(claim_id, str(e)))
        reports.append(report)
        if report.status is Status.REFUTED and spec.tier is Tier.CORE:
            core_refuted.append(claim_id)
        if report.status is Status.BUDGET_EXCEEDED:
            budget.append(claim_id)

    return SuiteReport(
        passed=not core_refuted and not errors,
        reports=reports,
        core_refuted=core_refuted,
        errors=errors,
        budget_exceeded=budget,
        duration_seconds=time.perf_counter() - started,
    )


def recheck(report: ClaimReport, catalog: Optional[ClaimCatalog] = None) -> bool:
    """
    Rebuild a REFUTED report's witness and evaluate it again.

    Returns:
        True when the rebuilt instance is still a counterexample.

    Raises:
        ValueError: If the report carries no witness.
    """
    if report.witness is None:
        raise ValueError(f"{report.claim_id} has no witness to recheck")
    spec = (catalog or default_catalog()).get(report.claim_id)
    instance = rebuild(spec.domain, report.witness["instance"])
    return spec.check(instance).counterexample
