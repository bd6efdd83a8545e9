"""
Tests for threshold formulas and the theorem hypothesis check.
"""

import math
from fractions import Fraction

import pytest

from spanhyper.errors import PreconditionError
from spanhyper.generators import build_family, hamilton_cycle
from spanhyper.thresholds import (
    check_riordan_conditions,
    clique_count_estimate,
    expectation_lower_threshold,
    expectation_threshold,
    factor_threshold_lower_bound,
    family_threshold,
    gamma,
    gamma_closed_form,
    kr_graph_probability,
    regular_gamma_bounds,
    sharp_threshold_regular,
    universality_threshold,
)


class TestClosedForms:
    """Closed-form gamma values agree with the exact computation."""

    @pytest.mark.parametrize(
        "family,params",
        [
            ("tight-hamilton", {"n": 8, "r": 3}),
            ("loose-hamilton", {"n": 8, "r": 3}),
            ("hamilton", {"n": 8, "r": 4, "ell": 2}),
            ("cube", {"r": 3, "d": 2}),
            ("complete", {"n": 6, "r": 3}),
        ],
    )
    def test_matches_exact_gamma(self, family, params):
        assert gamma_closed_form(family, **params) == gamma(build_family(family, **params)).gamma

    def test_sphere(self):
        assert gamma_closed_form("sphere", n=10) == 2

    def test_power_leading_term(self):
        assert gamma_closed_form("power", r=3, i=2) == 3

    def test_invalid_parameters(self):
        with pytest.raises(PreconditionError):
            gamma_closed_form("hamilton", n=7, r=3, ell=1)
        with pytest.raises(PreconditionError):
            gamma_closed_form("kfactor", n=8, r=3, t=4)


class TestThresholdValues:
    def test_expectation_threshold(self):
        assert expectation_threshold(Fraction(2), 100) == pytest.approx(0.1)

    def test_expectation_threshold_rejects_zero_gamma(self):
        with pytest.raises(PreconditionError):
            expectation_threshold(0, 100)

    def test_lower_below_upper(self):
        g = Fraction(3, 2)
        assert expectation_lower_threshold(g, 1000, 0.1) == pytest.approx(
            0.9 * (math.e / 1000) ** (2 / 3)
        )

    def test_lower_rejects_bad_epsilon(self):
        with pytest.raises(PreconditionError):
            expectation_lower_threshold(1, 100, 1.0)

    def test_sharp_threshold_regular(self):
        assert sharp_threshold_regular(100, 3, 3) == pytest.approx(0.01)

    def test_regular_gamma_bounds(self):
        lower, upper = regular_gamma_bounds(3, 4)
        assert lower == pytest.approx(4 / 3)
        assert upper == pytest.approx(4.0)
        assert regular_gamma_bounds(3, 1)[1] == math.inf

    def test_family_threshold_shapes(self):
        assert family_threshold("tight-hamilton", 100, r=3) == pytest.approx(0.01)
        assert family_threshold("lattice", 100) == pytest.approx(0.1)
        with pytest.raises(PreconditionError):
            family_threshold("loose-hamilton", 100, r=3)

    def test_universality_threshold(self):
        n = 1000
        assert universality_threshold(n, 2) == pytest.approx(math.sqrt(math.log(n) / n))
        assert kr_graph_probability(n, 3, 2) == pytest.approx((math.log(n) / n) ** 0.25)

    def test_clique_count_estimate(self):
        assert clique_count_estimate(10, 3, 0.5) == pytest.approx(1000 / 8)

    def test_factor_lower_bound(self):
        assert factor_threshold_lower_bound(100, 3, 3) == pytest.approx(math.log(100) / 100**2)
        with pytest.raises(PreconditionError):
            factor_threshold_lower_bound(100, 3, 2)


class TestRiordanConditions:
    def test_tight_cycle(self):
        h = hamilton_cycle(8, 3, 2)
        report = check_riordan_conditions(h, 0.5)
        assert report.gamma == Fraction(4, 3)
        assert report.delta == 3
        assert report.edge_condition is True
        assert report.edge_slack == pytest.approx(8 - 8 / 3)
        assert report.growth_value == pytest.approx(8 * 0.5 ** (4 / 3) / 81)
        assert report.binomial_value == pytest.approx(0.5 * 56)

    def test_gamma_override(self):
        report = check_riordan_conditions(hamilton_cycle(8, 3, 2), 0.5, Fraction(2))
        assert report.to_dict()["gamma"] == "2"

    def test_matching_fails_edge_condition(self):
        report = check_riordan_conditions(build_family("matching", n=9, r=3), 0.5)
        assert report.edge_condition is False

    def test_rejects_bad_probability(self):
        with pytest.raises(PreconditionError):
            check_riordan_conditions(hamilton_cycle(6, 3, 2), -0.1)
