"""Axiom table for one space."""

from dataclasses import dataclass, field
from typing import Any, Dict, List

from etheta.axioms.diagnostics import cc_points
from etheta.axioms.separation import AxiomKind, AxiomResult, holds
from etheta.space.finite_space import FiniteSpace


@dataclass
class AxiomReport:
    """Every AxiomKind decided on one space, plus its cc-points."""

    points: List[str]
    results: Dict[AxiomKind, AxiomResult] = field(default_factory=dict)
    cc_points: List[str] = field(default_factory=list)

    def holds(self, axiom: AxiomKind) -> bool:
        return self.results[axiom].holds

    def to_dict(self) -> Dict[str, Any]:
        return {
            "points": list(self.points),
            "axioms": {
                kind.value: {"holds": result.holds, "witness": result.witness}
                for kind, result in self.results.items()
            },
            "cc_points": list(self.cc_points),
        }


def evaluate_all(space: FiniteSpace) -> AxiomReport:
    """Decide all thirteen axioms in declaration order."""
    return AxiomReport(
        points=list(space.point_names),
        results={kind: holds(space, kind) for kind in AxiomKind},
        cc_points=space.labels_of(cc_points(space)),
    )
