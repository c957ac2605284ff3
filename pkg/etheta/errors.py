"""Exception hierarchy for etheta."""

from typing import Any, Dict, Optional


class EthetaError(Exception):
    """Base class for all etheta errors."""


class TopologyError(EthetaError, ValueError):
    """A candidate family violates one of the topology laws."""


class MissingEmpty(TopologyError):
    """The empty set is not a member of the family."""

    def __init__(self) -> None:
        super().__init__("family does not contain the empty set")


class MissingFull(TopologyError):
    """The full ground set is not a member of the family."""

    def __init__(self) -> None:
        super().__init__("family does not contain the ground set")


class NotClosedUnderUnion(TopologyError):
    """Two members whose union is missing."""

    def __init__(self, first: Any, second: Any) -> None:
        self.first = first
        self.second = second
        super().__init__(f"family is not closed under union: {first} | {second}")


class NotClosedUnderIntersection(TopologyError):
    """Two members whose intersection is missing."""

    def __init__(self, first: Any, second: Any) -> None:
        self.first = first
        self.second = second
        super().__init__(f"family is not closed under intersection: {first} & {second}")


class DuplicateLabel(TopologyError):
    """A point label occurs twice in the ground set."""

    def __init__(self, label: str) -> None:
        self.label = label
        super().__init__(f"duplicate point label: {label!r}")


class NotASubset(TopologyError):
    """A set mentions points outside the ground set."""

    def __init__(self, detail: str) -> None:
        super().__init__(f"not a subset of the ground set: {detail}")


class EmptyCarrier(EthetaError, ValueError):
    """An operation needs a nonempty ground set."""

    def __init__(self, what: str = "space") -> None:
        super().__init__(f"{what} must have a nonempty carrier")


class CarrierTooLarge(EthetaError, ValueError):
    """A carrier exceeds the configured point limit."""

    def __init__(self, size: int, limit: int) -> None:
        self.size = size
        self.limit = limit
        super().__init__(f"carrier of {size} points exceeds the limit of {limit}")


class DomainMismatch(EthetaError, ValueError):
    """Two maps cannot be composed, or a map does not fit its spaces."""


class PreconditionUnmet(EthetaError, ValueError):
    """A theorem-level operation was called outside its hypotheses."""


class UnknownClaim(EthetaError, KeyError):
    """A claim id is not in the catalog."""

    def __init__(self, claim_id: str) -> None:
        self.claim_id = claim_id
        super().__init__(f"unknown claim: {claim_id}")

    def __str__(self) -> str:
        return f"unknown claim: {self.claim_id}"


class BudgetExceeded(EthetaError):
    """A run stopped before its domain was exhausted."""

    def __init__(self, message: str, cursor: Optional[Dict[str, Any]] = None) -> None:
        self.cursor = cursor or {}
        super().__init__(message)


class DocumentError(EthetaError, ValueError):
    """A space or map document could not be parsed."""

    def __init__(self, message: str, line: int = 0, column: int = 0) -> None:
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line else ""
        super().__init__(f"{message}{where}")


class InternalCharacterizationMismatch(EthetaError, AssertionError):
    """Two computations that must agree by theorem disagree on an instance."""

    def __init__(self, what: str, detail: Optional[Dict[str, Any]] = None) -> None:
        self.what = what
        self.detail = detail or {}
        super().__init__(f"characterization mismatch in {what}: {self.detail}")
