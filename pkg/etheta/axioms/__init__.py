"""Separation axioms, kernels and neighbourhood structure of finite spaces."""

from etheta.axioms.separation import AxiomKind, AxiomResult, holds, recheck_witness
from etheta.axioms.diagnostics import (
    KernelReport,
    cc_points,
    is_quasi_theta_closed,
    kernel_diagnostics,
    regular_space_forms,
    theta_neighbourhoods,
)
from etheta.axioms.report import AxiomReport, evaluate_all

__all__ = [
    "AxiomKind",
    "AxiomResult",
    "AxiomReport",
    "KernelReport",
    "holds",
    "recheck_witness",
    "evaluate_all",
    "is_quasi_theta_closed",
    "theta_neighbourhoods",
    "cc_points",
    "kernel_diagnostics",
    "regular_space_forms",
]
