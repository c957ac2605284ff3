"""Tests for monitoring module."""

import pytest

from etheta.monitoring import (
    PROMETHEUS_AVAILABLE,
    Alert,
    AlertManager,
    AlertSeverity,
    VerificationMonitor,
    create_claim_error_alert,
    create_refutation_alert,
)


class TestVerificationMonitor:
    """Test VerificationMonitor class."""

    def test_counts(self) -> None:
        monitor = VerificationMonitor()
        monitor.record_instances(10)
        monitor.record_instances(5)
        monitor.record_claim("CONFIRMED", 0.5)
        monitor.record_claim("REFUTED", 0.1)
        monitor.record_claim("CONFIRMED", 0.2)
        assert monitor.instances == 15
        assert monitor.claims == {"CONFIRMED": 2, "REFUTED": 1}

    def test_monitors_are_independent(self) -> None:
        first = VerificationMonitor()
        second = VerificationMonitor()
        first.record_instances(3)
        assert second.instances == 0

    def test_export_metrics(self) -> None:
        monitor = VerificationMonitor()
        monitor.record_instances(7)
        data = monitor.export_metrics()
        assert isinstance(data, bytes)
        if PROMETHEUS_AVAILABLE:
            assert b"etheta_instances_total" in data


class TestAlerting:
    """Test alert management."""

    def test_alert_creation(self) -> None:
        alert = Alert(
            name="test",
            message="Test message",
            severity=AlertSeverity.WARNING,
        )
        assert alert.severity == AlertSeverity.WARNING
        assert alert.details == {}

    def test_manager_handlers(self, mocker) -> None:
        manager = AlertManager()
        handler = mocker.Mock()
        manager.add_handler(handler)
        alert = create_claim_error_alert("T2.8-kapanis", "boom")
        manager.emit(alert)
        handler.assert_called_once_with(alert)
        assert manager.get_recent_alerts() == [alert]

    def test_failing_handler_does_not_stop_others(self, mocker) -> None:
        manager = AlertManager()
        broken = mocker.Mock(side_effect=RuntimeError("down"))
        working = mocker.Mock()
        manager.add_handler(broken)
        manager.add_handler(working)
        manager.emit(create_claim_error_alert("x", "y"))
        working.assert_called_once()

    def test_recent_alerts_limit(self) -> None:
        manager = AlertManager()
        for i in range(5):
            manager.emit(create_claim_error_alert(f"c{i}", "e"))
        recent = manager.get_recent_alerts(limit=2)
        assert [a.details["claim"] for a in recent] == ["c3", "c4"]

    @pytest.mark.parametrize(
        "tier,severity",
        [
            ("core", AlertSeverity.ERROR),
            ("new", AlertSeverity.WARNING),
            ("question", AlertSeverity.INFO),
        ],
    )
    def test_refutation_severity(self, tier, severity) -> None:
        alert = create_refutation_alert("claim", tier, {"index": 0})
        assert alert.severity is severity
        assert alert.details["witness"] == {"index": 0}

    def test_error_alert_is_critical(self) -> None:
        alert = create_claim_error_alert("claim", "boom")
        assert alert.severity is AlertSeverity.CRITICAL
        assert alert.details["error"] == "boom"
