"""
etheta - A laboratory for e*-θ-open sets on finite topological spaces.

Computes generalized open-set families, separation axioms and map properties,
and checks published claims about them by bounded exhaustive enumeration.
"""

__version__ = "1.0.0"

from etheta.space import FiniteSpace
from etheta.operators import operator_table
from etheta.axioms import evaluate_all
from etheta.maps import SpaceMap
from etheta.verify import run_claim, run_suite

__all__ = [
    "__version__",
    "FiniteSpace",
    "SpaceMap",
    "operator_table",
    "evaluate_all",
    "run_claim",
    "run_suite",
]
