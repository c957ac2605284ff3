"""Tags for set families and set operators."""

from enum import Enum
from typing import Optional


class FamilyKind(Enum):
    """Every family of subsets the operator table can produce."""

    OPEN = "open"
    CLOSED = "closed"
    REGULAR_OPEN = "regular-open"
    REGULAR_CLOSED = "regular-closed"
    DELTA_OPEN = "delta-open"
    DELTA_CLOSED = "delta-closed"
    ESTAR_OPEN = "e*-open"
    ESTAR_CLOSED = "e*-closed"
    ESTAR_REGULAR = "e*-regular"
    ESTAR_THETA_OPEN = "e*-theta-open"
    ESTAR_THETA_CLOSED = "e*-theta-closed"
    BETA_OPEN = "beta-open"
    BETA_CLOSED = "beta-closed"
    BETA_REGULAR = "beta-regular"
    BETA_THETA_OPEN = "beta-theta-open"
    BETA_THETA_CLOSED = "beta-theta-closed"
    DSET = "e*-theta-d-set"
    THETA_C_ESTAR_OPEN = "theta-c-e*-open"
    QUASI_ESTAR_THETA_CLOSED = "quasi-e*-theta-closed"

    @classmethod
    def parse(cls, text: str) -> "FamilyKind":
        """Accept either the value (``e*-regular``) or the name (``ESTAR_REGULAR``)."""
        for kind in cls:
            if text in (kind.value, kind.name, kind.name.lower()):
                return kind
        raise ValueError(f"unknown family kind: {text}")


class OperatorKind(Enum):
    """Closure-, interior- and kernel-type operators on subsets."""

    CL = "cl"
    INT = "int"
    DELTA_CL = "delta-cl"
    DELTA_INT = "delta-int"
    ESTAR_CL = "e*-cl"
    ESTAR_INT = "e*-int"
    ESTAR_CL_THETA = "e*-cl_theta"
    ESTAR_INT_THETA = "e*-int_theta"
    ESTAR_KER_THETA = "e*-ker_theta"
    BETA_CL = "beta-cl"
    BETA_INT = "beta-int"
    BETA_CL_THETA = "beta-cl_theta"
    BETA_KER_THETA = "beta-ker_theta"

    @classmethod
    def parse(cls, text: str) -> "OperatorKind":
        for kind in cls:
            if text in (kind.value, kind.name, kind.name.lower()):
                return kind
        raise ValueError(f"unknown operator: {text}")

    @property
    def is_closure_type(self) -> bool:
        """Monotone increasing (closures and kernels)."""
        return self not in _INTERIORS

    @property
    def dual(self) -> Optional["OperatorKind"]:
        """Operator related by A ↦ X ∖ op(X ∖ A), if any."""
        return _DUALS.get(self)


_PAIRS = [
    (OperatorKind.CL, OperatorKind.INT),
    (OperatorKind.DELTA_CL, OperatorKind.DELTA_INT),
    (OperatorKind.ESTAR_CL, OperatorKind.ESTAR_INT),
    (OperatorKind.ESTAR_CL_THETA, OperatorKind.ESTAR_INT_THETA),
    (OperatorKind.BETA_CL, OperatorKind.BETA_INT),
]
_DUALS = {**{a: b for a, b in _PAIRS}, **{b: a for a, b in _PAIRS}}
_INTERIORS = frozenset(b for _, b in _PAIRS)
