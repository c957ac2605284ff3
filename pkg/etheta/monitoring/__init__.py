"""Monitoring module for verification runs."""

from etheta.monitoring.alerting import (
    Alert,
    AlertManager,
    AlertSeverity,
    create_claim_error_alert,
    create_refutation_alert,
)
from etheta.monitoring.metrics import PROMETHEUS_AVAILABLE, VerificationMonitor

__all__ = [
    "Alert",
    "AlertManager",
    "AlertSeverity",
    "VerificationMonitor",
    "PROMETHEUS_AVAILABLE",
    "create_refutation_alert",
    "create_claim_error_alert",
]
