"""Tests for the verify package."""

import itertools
from typing import Iterator

import pytest

from etheta.errors import BudgetExceeded, CarrierTooLarge, UnknownClaim
from etheta.monitoring import AlertManager, AlertSeverity, VerificationMonitor
from etheta.verify import (
    Bound,
    Bounds,
    ClaimCatalog,
    Domain,
    Status,
    Tier,
    default_catalog,
    describe,
    instances,
    read_manifest,
    rebuild,
    recheck,
    run_claim,
    run_suite,
    search_question,
)
from etheta.space import SetFamily, library
from etheta.space.preorder import enumerate_spaces_up_to
from etheta.verify import theorems
from etheta.verify.claims import always, implies


def _fails_on_three_points(space):
    return always(space.size < 3, {"size": space.size})


def _never(space):
    return always(False)


def _raises(space):
    raise RuntimeError("broken check")


def _only_discrete(space):
    return implies(len(space.opens) == 1 << space.size, lambda: True)


def _catalog(*entries):
    catalog = ClaimCatalog()
    for claim_id, tier, check in entries:
        catalog.add_claim(claim_id, tier, Domain.SPACES, check)
    return catalog


class TestCatalog:
    """Test the claim registry."""

    def test_manifest_matches_catalog(self) -> None:
        catalog = default_catalog()
        assert read_manifest() == [(c.id, c.tier.value, c.citation) for c in catalog]
        assert catalog.manifest_lines()[0].startswith("T2.1-open-iff-closure-regular\tcore\t")

    def test_every_tier_is_present(self) -> None:
        tiers = {c.tier for c in default_catalog()}
        assert tiers == {Tier.CORE, Tier.NEW, Tier.QUESTION}

    def test_unknown_claim(self) -> None:
        with pytest.raises(UnknownClaim):
            default_catalog().get("T9.9")
        with pytest.raises(UnknownClaim):
            run_claim("T9.9")

    def test_duplicate_id(self) -> None:
        catalog = _catalog(("dup", Tier.CORE, _never))
        with pytest.raises(ValueError):
            catalog.add_claim("dup", Tier.CORE, Domain.SPACES, _never)


class TestBounds:
    """Test run bounds."""

    def test_validation(self) -> None:
        with pytest.raises(CarrierTooLarge):
            Bounds(max_points=6)
        with pytest.raises(CarrierTooLarge):
            Bounds(max_map_points=5)
        with pytest.raises(ValueError):
            Bounds(workers=0)
        with pytest.raises(ValueError):
            Bounds(strata="middle")

    def test_from_config(self) -> None:
        config = {"verify": {"max_points": 2, "workers": 3, "chunk_size": 5}}
        bounds = Bounds.from_config(config, max_points=None, strata="all")
        assert bounds.max_points == 2
        assert bounds.workers == 3
        assert bounds.chunk_size == 5
        assert bounds.strata == "all"

    def test_domain_key_ignores_execution_settings(self) -> None:
        assert Bounds(workers=1).domain_key() == Bounds(workers=4, chunk_size=3).domain_key()
        assert Bounds().limit(Bound.CHAIN_POINTS) == 3


class TestDomains:
    """Test instance enumeration and descriptions."""

    def test_space_domain_size(self) -> None:
        spec = default_catalog().get("T2.8-kapanis")
        assert sum(1 for _ in instances(spec, Bounds(max_points=3))) == 34

    def test_min_points(self) -> None:
        spec = default_catalog().get("D4.2-diagram")
        assert sum(1 for _ in instances(spec, Bounds(max_points=2))) == 4

    def test_describe_rebuild(self) -> None:
        spec = default_catalog().get("Q5.1-open-question")
        first = next(itertools.islice(instances(spec, Bounds(max_map_points=2)), 5, None))
        assert rebuild(Domain.MAPS, describe(Domain.MAPS, first)) == first

    def test_chain_domain_is_generated_on_demand(self) -> None:
        spec = default_catalog().get("T5.17-composition")
        domain = instances(spec, Bounds(max_chain_points=3))
        assert isinstance(domain, Iterator)
        head = list(itertools.islice(domain, 10))
        assert len(head) == 10
        for f, g in head:
            assert f.codomain == g.domain
        f, g = head[0]
        assert f.domain.size == g.codomain.size == 1


class TestRunClaim:
    """Test exhaustive claim runs."""

    def test_golden_claims_confirmed(self) -> None:
        for spec in default_catalog():
            if spec.domain is Domain.GOLDEN:
                report = run_claim(spec.id)
                assert report.status is Status.CONFIRMED, report
                assert report.instances == 1

    def test_kapanis_counts(self) -> None:
        report = run_claim("T2.8-kapanis", Bounds(max_points=3))
        assert report.status is Status.CONFIRMED
        assert report.instances == 34
        assert report.vacuous == 0

    def test_vacuous_on_one_point(self) -> None:
        report = run_claim("T4.7-D0-implies-T0", Bounds(max_points=1))
        assert report.status is Status.CONFIRMED
        assert report.instances == 1
        assert report.vacuous == 1
        assert report.substantive == 0

    def test_question_top_stratum(self) -> None:
        report = search_question(Bounds(max_map_points=2))
        assert report.status is Status.EXHAUSTED_NO_WITNESS
        assert report.instances == 64

    def test_question_all_strata(self) -> None:
        report = search_question(Bounds(max_map_points=2, strata="all"))
        assert report.status is Status.EXHAUSTED_NO_WITNESS
        assert report.instances == 77

    def test_refutation_and_recheck(self) -> None:
        catalog = _catalog(("small-only", Tier.NEW, _fails_on_three_points))
        alerts = AlertManager()
        report = run_claim("small-only", Bounds(max_points=3), catalog, alerts=alerts)
        assert report.status is Status.REFUTED
        assert report.witness["index"] == 5
        assert report.witness["detail"] == {"size": 3}
        assert report.instances == 6
        assert recheck(report, catalog)
        assert alerts.get_recent_alerts()[0].severity is AlertSeverity.WARNING

    def test_recheck_needs_witness(self) -> None:
        report = run_claim("T2.8-kapanis", Bounds(max_points=1))
        with pytest.raises(ValueError):
            recheck(report)

    def test_vacuous_count_from_custom_claim(self) -> None:
        catalog = _catalog(("discrete", Tier.CORE, _only_discrete))
        report = run_claim("discrete", Bounds(max_points=2), catalog)
        assert report.instances == 5
        assert report.vacuous == 3

    def test_worker_count_does_not_change_result(self) -> None:
        catalog = _catalog(("small-only", Tier.NEW, _fails_on_three_points))
        serial = run_claim("small-only", Bounds(max_points=3, chunk_size=2), catalog)
        pooled = run_claim("small-only", Bounds(max_points=3, chunk_size=2, workers=2), catalog)
        assert serial.to_dict() == pooled.to_dict()

        serial = run_claim("T2.8-kapanis", Bounds(max_points=3, chunk_size=4))
        pooled = run_claim("T2.8-kapanis", Bounds(max_points=3, chunk_size=4, workers=2))
        assert serial.to_dict() == pooled.to_dict()

    def test_resume_matches_uninterrupted_run(self) -> None:
        bounds = Bounds(max_points=3, chunk_size=8, instance_budget=8)
        report = run_claim("T2.8-kapanis", bounds)
        stops = 0
        while report.status is Status.BUDGET_EXCEEDED:
            stops += 1
            assert report.instances < 34
            report = run_claim("T2.8-kapanis", bounds, cursor=report.cursor)
        assert stops == 4
        assert report.status is Status.CONFIRMED
        assert report.instances == 34
        assert report.vacuous == 0

    def test_cursor_must_match_bounds(self) -> None:
        bounds = Bounds(max_points=3, chunk_size=8, instance_budget=8)
        report = run_claim("T2.8-kapanis", bounds)
        with pytest.raises(ValueError):
            run_claim("T2.8-kapanis", Bounds(max_points=4), cursor=report.cursor)
        with pytest.raises(ValueError):
            run_claim("T2.13-theta-closure-idempotent", bounds, cursor=report.cursor)

    def test_chain_budget_stops_early_at_three_points(self) -> None:
        bounds = Bounds(max_chain_points=3, chunk_size=8, instance_budget=10)
        report = run_claim("T5.17-composition", bounds)
        assert report.status is Status.BUDGET_EXCEEDED
        assert report.instances == 16
        assert report.cursor["next_index"] == 16

        resumed = run_claim("T5.17-composition", bounds, cursor=report.cursor)
        assert resumed.status is Status.BUDGET_EXCEEDED
        assert resumed.instances == 32
        assert resumed.cursor["next_index"] == 32

    def test_strict_budget_raises(self) -> None:
        bounds = Bounds(max_points=3, chunk_size=8, instance_budget=8)
        with pytest.raises(BudgetExceeded):
            run_claim("T2.8-kapanis", bounds, strict=True)

    def test_monitor_counts(self) -> None:
        monitor = VerificationMonitor()
        run_claim("T2.8-kapanis", Bounds(max_points=3), monitor=monitor)
        assert monitor.instances == 34
        assert monitor.claims == {"CONFIRMED": 1}

    def test_report_dict(self) -> None:
        report = run_claim("T2.8-kapanis", Bounds(max_points=2))
        data = report.to_dict()
        assert data == {
            "claim": "T2.8-kapanis",
            "tier": "core",
            "status": "CONFIRMED",
            "instances": 5,
            "vacuous": 0,
        }
        assert "wall_time" in report.to_dict(timings=True)


class TestRunSuite:
    """Test whole-catalog runs."""

    def test_core_refutation_fails_suite(self) -> None:
        catalog = _catalog(("ok", Tier.CORE, _only_discrete), ("bad", Tier.CORE, _never))
        suite = run_suite(Bounds(max_points=2), catalog)
        assert not suite.passed
        assert suite.core_refuted == ["bad"]
        assert suite.exit_code == 2
        assert [r.claim_id for r in suite.reports] == ["ok", "bad"]

    def test_new_tier_refutation_does_not_fail_suite(self) -> None:
        catalog = _catalog(("bad", Tier.NEW, _never))
        suite = run_suite(Bounds(max_points=2), catalog)
        assert suite.passed
        assert suite.exit_code == 0

    def test_raising_claim_is_error(self) -> None:
        catalog = _catalog(("boom", Tier.NEW, _raises), ("ok", Tier.CORE, _only_discrete))
        alerts = AlertManager()
        monitor = VerificationMonitor()
        suite = run_suite(Bounds(max_points=2), catalog, monitor=monitor, alerts=alerts)
        assert suite.errors == ["boom"]
        assert suite.reports[0].status is Status.ERROR
        assert "broken check" in suite.reports[0].message
        assert suite.reports[1].status is Status.CONFIRMED
        assert suite.exit_code == 2
        assert monitor.claims["ERROR"] == 1
        assert alerts.get_recent_alerts()[0].severity is AlertSeverity.CRITICAL

    def test_budget_exit_code(self) -> None:
        catalog = _catalog(("ok", Tier.CORE, _only_discrete))
        suite = run_suite(Bounds(max_points=3, chunk_size=4, instance_budget=4), catalog)
        assert suite.passed
        assert suite.budget_exceeded == ["ok"]
        assert suite.exit_code == 3

    def test_selected_claims(self) -> None:
        suite = run_suite(
            Bounds(max_points=2), claim_ids=["T2.8-kapanis", "EX2.12-union-counterexample"]
        )
        assert suite.passed
        assert [r.status for r in suite.reports] == [Status.CONFIRMED, Status.CONFIRMED]


def _closed_table(mocker):
    power = SetFamily.power_set(2)
    table = mocker.Mock()
    for part in (table.estar, table.beta):
        part.opens = power
        part.theta_open.return_value = power
        part.theta_closed.return_value = power
    return table


class TestUnionClosure:
    """Test the union and intersection closure invariant."""

    def test_holds_on_small_spaces(self, small_spaces) -> None:
        for space in small_spaces:
            assert not theorems.union_closure(space).counterexample

    @pytest.mark.parametrize(
        "part,method,masks,name",
        [
            ("beta", "theta_open", [0, 1, 2], "beta-theta-open"),
            ("estar", "theta_closed", [1, 2, 3], "e*-theta-closed"),
            ("beta", "theta_closed", [1, 2, 3], "beta-theta-closed"),
        ],
    )
    def test_reports_gap(self, mocker, part, method, masks, name) -> None:
        space = library.discrete(2)
        table = _closed_table(mocker)
        getattr(getattr(table, part), method).return_value = SetFamily(2, masks)
        mocker.patch("etheta.verify.theorems.operator_table", return_value=table)
        outcome = theorems.union_closure(space)
        assert outcome.counterexample
        assert outcome.detail == {
            "family": name,
            "sets": [space.labels_of(1), space.labels_of(2)],
        }


@pytest.fixture(scope="module")
def default_suite():
    return run_suite(Bounds(workers=4))


@pytest.mark.slow
class TestDefaultBounds:
    """The whole catalog at the default bounds."""

    def test_every_claim_holds(self, default_suite) -> None:
        assert len(default_suite.reports) == 53
        assert default_suite.exit_code == 0
        for report in default_suite.reports:
            if report.tier is Tier.QUESTION:
                assert report.status is Status.EXHAUSTED_NO_WITNESS
            else:
                assert report.status is Status.CONFIRMED, report.claim_id

    def test_question_top_stratum_size(self, default_suite) -> None:
        (question,) = [r for r in default_suite.reports if r.claim_id == "Q5.1-open-question"]
        assert question.instances == 22707

    def test_chain_claims_cover_three_points(self, default_suite) -> None:
        chains = [r for r in default_suite.reports if r.claim_id.startswith(("T5.17", "T5.18"))]
        sizes = [space.size for space in enumerate_spaces_up_to(3)]
        expected = sum(y**x * z**y for x, y, z in itertools.product(sizes, repeat=3))
        assert len(chains) == 2
        assert all(r.instances == expected for r in chains)

    def test_worker_count_does_not_change_suite(self, default_suite) -> None:
        other = run_suite(Bounds(workers=2))
        assert [r.to_dict() for r in other.reports] == [
            r.to_dict() for r in default_suite.reports
        ]
