"""Tests for the closed-form objective values."""

from fractions import Fraction

import pytest

from cpt_aggregation.analysis.formulas import (
    approximation_ratio,
    balanced_optimum,
    central_binomial_bound,
    even_case_inequality,
    odd_case_inequality,
    symmetric_input_objective,
    tkn_input_objective,
    tkn_input_objective_by_overlap,
    tkn_optimum,
    tkn_trivial_ratio,
    unit_configuration_optimum,
)
from cpt_aggregation.errors import ParameterError


class TestTknFormulas:
    """Test the T^{k,n} closed forms."""

    @pytest.mark.parametrize("n,k,expected", [(3, 2, 4), (4, 2, 24), (5, 2, 96), (4, 3, 8)])
    def test_optimum(self, n, k, expected):
        assert tkn_optimum(n, k) == expected

    @pytest.mark.parametrize("n,k,expected", [(3, 2, 6), (4, 2, 36), (5, 2, 144), (4, 3, 14)])
    def test_input_objective(self, n, k, expected):
        assert tkn_input_objective(n, k) == expected

    def test_overlap_sum_collapses(self):
        for n in range(3, 12):
            for k in range(2, n):
                assert tkn_input_objective_by_overlap(n, k) == tkn_input_objective(n, k)

    def test_trivial_ratio_independent_of_n(self):
        for k in range(2, 8):
            for n in range(k + 1, k + 5):
                assert Fraction(tkn_input_objective(n, k), tkn_optimum(n, k)) == tkn_trivial_ratio(k)

    def test_trivial_ratio_values(self):
        assert tkn_trivial_ratio(2) == Fraction(3, 2)
        assert tkn_trivial_ratio(3) == Fraction(7, 4)
        assert tkn_trivial_ratio(20) < 2


class TestSymmetricFormulas:
    """Test the symmetric disjoint closed forms."""

    @pytest.mark.parametrize("n,t,expected", [(4, 3, 6), (5, 3, 12), (5, 4, 20), (6, 5, 50), (2, 1, 0), (3, 2, 2)])
    def test_balanced_optimum(self, n, t, expected):
        assert balanced_optimum(n, t) == expected

    @pytest.mark.parametrize("n,t,expected", [(4, 3, 8), (5, 3, 16), (5, 4, 24), (6, 5, 64)])
    def test_input_objective(self, n, t, expected):
        assert symmetric_input_objective(n, t) == expected

    def test_balanced_scales_unit_configuration(self):
        for t in range(1, 12):
            for n in range(t + 1, t + 4):
                assert balanced_optimum(n, t) == unit_configuration_optimum(t) * (1 << (n - t - 1))

    def test_trivial_within_four_thirds(self):
        for t in range(3, 21):
            ratio = Fraction(symmetric_input_objective(t + 1, t), balanced_optimum(t + 1, t))
            assert 1 <= ratio <= Fraction(4, 3)
        assert Fraction(symmetric_input_objective(4, 3), balanced_optimum(4, 3)) == Fraction(4, 3)

    @pytest.mark.parametrize("n,t", [(4, 0), (4, 4), (3, 5)])
    def test_bounds(self, n, t):
        with pytest.raises(ParameterError):
            balanced_optimum(n, t)


class TestInequalities:
    """Test the binomial inequalities behind the 4/3 bound."""

    @pytest.mark.parametrize("c", range(2, 31))
    def test_odd_case(self, c):
        assert odd_case_inequality(c)

    @pytest.mark.parametrize("c", range(2, 31))
    def test_even_case(self, c):
        assert even_case_inequality(c)

    @pytest.mark.parametrize("d", range(1, 31))
    def test_central_binomial(self, d):
        assert central_binomial_bound(d)


class TestApproximationRatio:
    """Test exact ratios."""

    def test_exact(self):
        assert approximation_ratio(6, 4) == Fraction(3, 2)
        assert approximation_ratio(144, 96) == Fraction(3, 2)

    def test_zero_over_zero(self):
        assert approximation_ratio(0, 0) == 1

    def test_positive_over_zero(self):
        with pytest.raises(ValueError):
            approximation_ratio(1, 0)
