"""Tests for the axioms package."""

import pytest

from etheta.axioms import (
    AxiomKind,
    cc_points,
    evaluate_all,
    holds,
    is_quasi_theta_closed,
    kernel_diagnostics,
    recheck_witness,
    regular_space_forms,
    theta_neighbourhoods,
)
from etheta.errors import NotASubset
from etheta.space import library

D_AXIOMS = [AxiomKind.ESTAR_THETA_D0, AxiomKind.ESTAR_THETA_D1, AxiomKind.ESTAR_THETA_D2]
T_AXIOMS = [AxiomKind.ESTAR_THETA_T0, AxiomKind.ESTAR_THETA_T1, AxiomKind.ESTAR_THETA_T2]


class TestAxiomKind:
    """Test axiom tags."""

    def test_parse(self) -> None:
        assert AxiomKind.parse("e*-R1") is AxiomKind.ESTAR_R1
        assert AxiomKind.parse("beta_r1") is AxiomKind.BETA_R1
        with pytest.raises(ValueError):
            AxiomKind.parse("R2")


class TestGoldenAxioms:
    """Worked examples."""

    def test_example4_r1(self, example4) -> None:
        assert holds(example4, AxiomKind.ESTAR_R1).holds
        result = holds(example4, AxiomKind.BETA_R1)
        assert not result.holds
        assert len(result.witness["points"]) == 2
        assert recheck_witness(example4, AxiomKind.BETA_R1, result.witness)

    def test_example5_slightly_r0(self, example5) -> None:
        assert holds(example5, AxiomKind.SLIGHTLY_ESTAR_THETA_R0).holds
        result = holds(example5, AxiomKind.SLIGHTLY_BETA_THETA_R0)
        assert not result.holds
        assert result.witness["intersection"]
        assert recheck_witness(example5, AxiomKind.SLIGHTLY_BETA_THETA_R0, result.witness)

    def test_example5_regular_forms(self, example5) -> None:
        assert regular_space_forms(example5) == (True, True, True)


class TestDegenerateSpaces:
    """One-point and discrete spaces."""

    @pytest.mark.parametrize("axiom", D_AXIOMS)
    def test_point_space_fails_d_axioms(self, point, axiom) -> None:
        result = holds(point, axiom)
        assert not result.holds
        assert result.witness == {"points": ["x"]}
        assert recheck_witness(point, axiom, result.witness)

    def test_point_space_other_axioms(self, point) -> None:
        for axiom in T_AXIOMS + [AxiomKind.ESTAR_THETA_T_HALF, AxiomKind.ESTAR_REGULAR_SPACE]:
            assert holds(point, axiom).holds, axiom
        assert not holds(point, AxiomKind.SLIGHTLY_ESTAR_THETA_R0).holds
        assert cc_points(point).bits == 1

    def test_discrete_space_satisfies_everything(self) -> None:
        report = evaluate_all(library.discrete(3))
        assert all(result.holds for result in report.results.values())
        assert report.cc_points == []

    def test_indiscrete_space_is_slightly_r0(self) -> None:
        assert holds(library.indiscrete(2), AxiomKind.SLIGHTLY_ESTAR_THETA_R0).holds


class TestDiagnostics:
    """Neighbourhoods, kernels and quasi-θ-closed sets."""

    def test_theta_neighbourhoods(self, example5) -> None:
        around_a = theta_neighbourhoods(example5, 0)
        assert len(around_a) == 8
        assert all(m & 1 for m in around_a.masks)

    def test_quasi_theta_closed_in_discrete_space(self) -> None:
        space = library.discrete(2)
        assert all(is_quasi_theta_closed(space, m) for m in range(4))

    def test_kernel_diagnostics(self, example5) -> None:
        report = kernel_diagnostics(example5)
        assert report.slightly_r0
        assert report.proper_kernels
        assert report.kernels == {"a": ["a"], "b": ["b"], "c": ["c"], "d": ["d"]}

    def test_kernel_diagnostics_agree_on_small_spaces(self, small_spaces) -> None:
        for space in small_spaces:
            report = kernel_diagnostics(space)
            assert report.slightly_r0 == holds(space, AxiomKind.SLIGHTLY_ESTAR_THETA_R0).holds

    def test_bad_regular_space_witness(self) -> None:
        space = library.discrete(2)
        with pytest.raises(NotASubset):
            recheck_witness(
                space, AxiomKind.ESTAR_REGULAR_SPACE, {"closed": ["a"], "point": "a"}
            )


class TestReport:
    """The full axiom table."""

    def test_evaluate_all_order_and_dict(self, example4) -> None:
        report = evaluate_all(example4)
        assert list(report.results) == list(AxiomKind)
        data = report.to_dict()
        assert data["points"] == ["a", "b", "c", "d"]
        assert data["axioms"]["e*-R1"] == {"holds": True, "witness": None}
        assert data["axioms"]["beta-R1"]["holds"] is False
        assert report.holds(AxiomKind.ESTAR_R1)

    def test_witnesses_recheck_on_small_spaces(self, small_spaces) -> None:
        for space in small_spaces:
            for axiom, result in evaluate_all(space).results.items():
                if not result.holds:
                    assert recheck_witness(space, axiom, result.witness), (space, axiom)
