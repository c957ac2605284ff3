"""Claim specifications, run bounds and claim reports."""

import os
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Callable, Dict, Optional

from etheta.errors import CarrierTooLarge

MAX_ENUMERATION_POINTS = 5
MAX_MAP_POINTS = 4
MAX_CHAIN_POINTS = 3


class Tier(Enum):
    """How a refutation is treated by the suite."""

    CORE = "core"
    NEW = "new"
    QUESTION = "question"


class Domain(Enum):
    """Quantifier domain of a claim."""

    SPACES = "spaces"
    SPACE_PAIRS = "space-pairs"
    MAPS = "maps"
    MAP_CHAINS = "map-chains"
    GOLDEN = "golden"


class Bound(Enum):
    """Which Bounds field caps the carriers of a claim's instances."""

    POINTS = "points"
    MAP_POINTS = "map_points"
    CHAIN_POINTS = "chain_points"


class Status(Enum):
    CONFIRMED = "CONFIRMED"
    REFUTED = "REFUTED"
    EXHAUSTED_NO_WITNESS = "EXHAUSTED_NO_WITNESS"
    BUDGET_EXCEEDED = "BUDGET_EXCEEDED"
    ERROR = "ERROR"


@dataclass(frozen=True)
class Outcome:
    """Hypothesis and conclusion of a claim on one instance."""

    hypothesis: bool
    conclusion: bool
    detail: Optional[Dict[str, Any]] = None

    @property
    def counterexample(self) -> bool:
        return self.hypothesis and not self.conclusion


def always(conclusion: bool, detail: Optional[Dict[str, Any]] = None) -> Outcome:
    """Outcome of an unconditional statement."""
    return Outcome(True, conclusion, detail)


def implies(
    hypothesis: bool,
    conclusion: Callable[[], bool],
    detail: Optional[Dict[str, Any]] = None,
) -> Outcome:
    """Outcome of ``hypothesis ⇒ conclusion``; the conclusion is only computed when needed."""
    if not hypothesis:
        return Outcome(False, True, detail)
    return Outcome(True, conclusion(), detail)


@dataclass(frozen=True)
class Bounds:
    """
    Size limits and execution settings of a run.

    Only the carrier limits and ``strata`` shape the instance domain;
    workers, chunking and budgets never change a result.
    """

    max_points: int = 4
    max_map_points: int = 3
    max_chain_points: int = 3
    workers: int = 1
    chunk_size: int = 64
    time_budget: Optional[float] = None
    instance_budget: Optional[int] = None
    strata: str = "top"

    def __post_init__(self) -> None:
        if not 1 <= self.max_points <= MAX_ENUMERATION_POINTS:
            raise CarrierTooLarge(self.max_points, MAX_ENUMERATION_POINTS)
        if not 1 <= self.max_map_points <= MAX_MAP_POINTS:
            raise CarrierTooLarge(self.max_map_points, MAX_MAP_POINTS)
        if not 1 <= self.max_chain_points <= MAX_CHAIN_POINTS:
            raise CarrierTooLarge(self.max_chain_points, MAX_CHAIN_POINTS)
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        if self.chunk_size < 1:
            raise ValueError("chunk_size must be at least 1")
        if self.strata not in ("top", "all"):
            raise ValueError(f"unknown strata selection: {self.strata}")

    @classmethod
    def from_config(cls, config: Dict[str, Any], **overrides: Any) -> "Bounds":
        """
        Bounds from the ``verify`` section of a loaded config.

        Args:
            config: Output of ``load_config``.
            **overrides: Fields to force; ``None`` values are ignored.

        Returns:
            Bounds with config values, then overrides applied.
        """
        section = config.get("verify", {})
        workers = section.get("workers") or os.cpu_count() or 1
        bounds = cls(
            max_points=section.get("max_points", 4),
            max_map_points=section.get("max_map_points", 3),
            max_chain_points=section.get("max_chain_points", 3),
            workers=workers,
            chunk_size=section.get("chunk_size", 64),
            time_budget=section.get("time_budget"),
        )
        return bounds.with_overrides(**overrides)

    def with_overrides(self, **overrides: Any) -> "Bounds":
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})

    def limit(self, bound: Bound) -> int:
        if bound is Bound.MAP_POINTS:
            return self.max_map_points
        if bound is Bound.CHAIN_POINTS:
            return self.max_chain_points
        return self.max_points

    def domain_key(self) -> Dict[str, Any]:
        """The fields a resume cursor must agree on."""
        return {
            "max_points": self.max_points,
            "max_map_points": self.max_map_points,
            "max_chain_points": self.max_chain_points,
            "strata": self.strata,
        }


@dataclass(frozen=True)
class ClaimSpec:
    """
    One machine-checkable statement.

    ``check`` maps an instance of the quantifier domain to an Outcome and
    must be a module-level callable so that worker processes can receive it.
    """

    id: str
    tier: Tier
    domain: Domain
    check: Callable[[Any], Outcome]
    citation: str = ""
    bound: Bound = Bound.POINTS
    min_points: int = 1
    stratified: bool = False


@dataclass
class ClaimReport:
    """Outcome of running one claim over its domain."""

    claim_id: str
    tier: Tier
    status: Status
    instances: int = 0
    vacuous: int = 0
    witness: Optional[Dict[str, Any]] = None
    message: str = ""
    wall_time: Optional[float] = None
    cursor: Optional[Dict[str, Any]] = field(default=None, repr=False)

    @property
    def substantive(self) -> int:
        return self.instances - self.vacuous

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        """JSON-ready form; wall-time only when ``timings`` is set."""
        result: Dict[str, Any] = {
            "claim": self.claim_id,
            "tier": self.tier.value,
            "status": self.status.value,
            "instances": self.instances,
            "vacuous": self.vacuous,
        }
        if self.witness is not None:
            result["witness"] = self.witness
        if self.message:
            result["message"] = self.message
        if self.cursor is not None:
            result["cursor"] = self.cursor
        if timings and self.wall_time is not None:
            result["wall_time"] = round(self.wall_time, 6)
        return result
