"""Alerts raised by verification runs."""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, List

logger = logging.getLogger(__name__)


class AlertSeverity(Enum):
    """Alert severity levels."""

    INFO = "info"
    WARNING = "warning"
    ERROR = "error"
    CRITICAL = "critical"


@dataclass
class Alert:
    """Represents an alert event."""

    name: str
    message: str
    severity: AlertSeverity
    details: Dict[str, Any] = field(default_factory=dict)


class AlertManager:
    """Collects alerts and fans them out to handlers."""

    def __init__(self) -> None:
        self._handlers: List[Callable[[Alert], None]] = []
        self._alerts: List[Alert] = []

    def add_handler(self, handler: Callable[[Alert], None]) -> None:
        """Add alert handler (e.g. a stderr printer)."""
        self._handlers.append(handler)

    def emit(self, alert: Alert) -> None:
        """Emit alert to all handlers; a failing handler does not stop the rest."""
        self._alerts.append(alert)
        for h in self._handlers:
            try:
                h(alert)
            except Exception:
                logger.exception("alert handler failed for %s", alert.name)

    def get_recent_alerts(self, limit: int = 100) -> List[Alert]:
        return self._alerts[-limit:]


def create_refutation_alert(claim_id: str, tier: str, witness: Dict[str, Any]) -> Alert:
    """
    Alert for a refuted claim.

    Core claims raise ERROR, new claims WARNING and a question witness INFO.
    """
    severity = {
        "core": AlertSeverity.ERROR,
        "new": AlertSeverity.WARNING,
    }.get(tier, AlertSeverity.INFO)
    return Alert(
        name="claim_refuted",
        message=f"{claim_id} refuted",
        severity=severity,
        details={"claim": claim_id, "tier": tier, "witness": witness},
    )


def create_claim_error_alert(claim_id: str, error: str) -> Alert:
    """Create alert for a claim that raised."""
    return Alert(
        name="claim_error",
        message=f"{claim_id} failed to run",
        severity=AlertSeverity.CRITICAL,
        details={"claim": claim_id, "error": error},
    )
