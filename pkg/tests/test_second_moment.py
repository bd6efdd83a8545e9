"""
Tests for the exact second-moment diagnostics in H(n, m).
"""

from fractions import Fraction

import pytest

from spanhyper.core import Hypergraph, complete
from spanhyper.errors import OracleLimitError, PreconditionError
from spanhyper.generators import hamilton_cycle, perfect_matching
from spanhyper.thresholds import (
    automorphism_count,
    chebyshev_check,
    count_copies,
    enumerate_copies,
    host_enumeration_oracle,
    second_moment_ratio,
)


class TestAutomorphisms:
    def test_complete(self):
        assert automorphism_count(complete(4, 3)) == 24

    def test_tight_cycle_is_dihedral(self):
        assert automorphism_count(hamilton_cycle(6, 3, 2)) == 12

    def test_matching(self):
        assert automorphism_count(perfect_matching(6, 3)) == 72

    def test_isolated_vertices_contribute_factorial(self):
        h = Hypergraph(3, 5, ((1, 2, 3),))
        assert automorphism_count(h) == 6 * 2

    def test_cap(self):
        with pytest.raises(OracleLimitError):
            automorphism_count(hamilton_cycle(15, 3, 2), max_vertices=12)


class TestCopies:
    def test_count_matches_enumeration(self):
        pattern = perfect_matching(6, 3)
        assert count_copies(pattern, 6) == 10
        assert len(enumerate_copies(pattern, 6)) == 10

    def test_pattern_larger_than_host(self):
        with pytest.raises(PreconditionError):
            count_copies(complete(5, 3), 4)


class TestSecondMoment:
    """Pair-sum moments agree with full host enumeration."""

    def setup_method(self):
        self.pattern = perfect_matching(6, 3)

    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_matches_host_enumeration(self, m):
        report = second_moment_ratio(self.pattern, 6, m)
        oracle = host_enumeration_oracle(self.pattern, 6, m)
        assert report.ex == oracle.ex
        assert report.ex2 == oracle.ex2
        assert isinstance(report.ex, Fraction)

    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_chebyshev_bound_holds(self, m):
        report = second_moment_ratio(self.pattern, 6, m)
        check = chebyshev_check(report)
        assert check.moments_match
        if report.f is not None and report.f > 1:
            assert check.p_zero <= report.f - 1
            assert check.holds is True

    def test_expectation_for_two_edges(self):
        # 10 copies, each present with probability 1 / C(20, 2)
        report = second_moment_ratio(self.pattern, 6, 2)
        assert report.ex == Fraction(10, 190)

    def test_m_below_pattern_size_gives_zero(self):
        report = second_moment_ratio(self.pattern, 6, 1)
        assert report.ex == 0
        assert report.f is None

    def test_m_out_of_range(self):
        with pytest.raises(PreconditionError):
            second_moment_ratio(self.pattern, 6, 21)

    def test_universe_cap(self):
        with pytest.raises(OracleLimitError):
            second_moment_ratio(perfect_matching(9, 3), 9, 3)

    def test_automorphism_cap(self):
        with pytest.raises(OracleLimitError):
            second_moment_ratio(self.pattern, 6, 3, automorphism_cap=5)

    def test_to_dict(self):
        data = second_moment_ratio(self.pattern, 6, 3).to_dict()
        assert data["model"] == {"n": 6, "r": 3, "m": 3}
        assert data["copies"] == 10
