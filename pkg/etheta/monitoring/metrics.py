"""Prometheus metrics for verification runs."""

from typing import Any, Dict, Optional

try:
    from prometheus_client import (
        CollectorRegistry,
        Counter,
        Histogram,
        generate_latest,
    )
    PROMETHEUS_AVAILABLE = True
except ImportError:
    PROMETHEUS_AVAILABLE = False


class VerificationMonitor:
    """
    Counts instances and claim outcomes of verification runs.

    Metrics are kept in a private registry unless one is passed in, so
    several monitors can live in one process.
    """

    def __init__(self, registry: Optional[Any] = None) -> None:
        """
        Initialize monitor.

        Args:
            registry: Prometheus CollectorRegistry (a fresh one if None).
        """
        if PROMETHEUS_AVAILABLE and registry is None:
            registry = CollectorRegistry()
        self._registry = registry
        self.instances = 0
        self.claims: Dict[str, int] = {}
        self._init_metrics()

    def _init_metrics(self) -> None:
        if not PROMETHEUS_AVAILABLE:
            self._instances_total = None
            self._claims_total = None
            self._claim_duration = None
            return

        registry = self._registry
        self._instances_total = Counter(
            "etheta_instances_total",
            "Instances evaluated across all claims",
            registry=registry,
        )
        self._claims_total = Counter(
            "etheta_claims_total",
            "Claims run, by final status",
            ["status"],
            registry=registry,
        )
        self._claim_duration = Histogram(
            "etheta_claim_duration_seconds",
            "Wall time of one claim run",
            registry=registry,
        )

    def record_instances(self, count: int) -> None:
        self.instances += count
        if self._instances_total:
            self._instances_total.inc(count)

    def record_claim(self, status: str, duration: float) -> None:
        """
        Record a finished claim.

        Args:
            status: Final status value (e.g. ``CONFIRMED``).
            duration: Wall time in seconds.
        """
        self.claims[status] = self.claims.get(status, 0) + 1
        if self._claims_total:
            self._claims_total.labels(status=status).inc()
        if self._claim_duration:
            self._claim_duration.observe(duration)

    def export_metrics(self) -> bytes:
        """
        Export metrics in Prometheus format.

        Returns:
            Prometheus text format bytes, empty without prometheus-client.
        """
        if not PROMETHEUS_AVAILABLE:
            return b""
        return generate_latest(self._registry)
