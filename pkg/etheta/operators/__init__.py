"""Generalized open-set families and closure operators."""

from etheta.operators.kinds import FamilyKind, OperatorKind
from etheta.operators.table import (
    GeneralizedOpenSets,
    OperatorTable,
    apply,
    family,
    family_at,
    operator_table,
)
from etheta.operators.consistency import ConsistencyResult, cross_check_closures

__all__ = [
    "FamilyKind",
    "OperatorKind",
    "GeneralizedOpenSets",
    "OperatorTable",
    "operator_table",
    "family",
    "family_at",
    "apply",
    "ConsistencyResult",
    "cross_check_closures",
]
