"""
Tests for the spanning families and the random models.
"""

from itertools import combinations
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spanhyper.errors import PreconditionError
from spanhyper.generators import (
    FAMILIES,
    build_family,
    cube_hypergraph,
    derive_seed,
    edge_variates,
    expected_edge_count,
    family_size,
    gnm,
    gnp,
    hamilton_cycle,
    hypergraph_below,
    kfactor,
    lattice,
    list_families,
    perfect_matching,
    power_hamilton_cycle,
    rng_for,
    sample_bounded_degree,
    sphere_apollonian,
    validate_sphere,
)


# ---- Family Tests ----


class TestFamilyCounts:
    """Vertex and edge counts of the deterministic families."""

    @pytest.mark.parametrize("r", [2, 3, 4])
    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_cube(self, r, d):
        h = cube_hypergraph(r, d)
        assert h.n == r**d
        assert h.m == d * r ** (d - 1)
        assert all(h.degree(v) == d for v in h.vertices)

    def test_cube_r3_d2(self):
        h = cube_hypergraph(3, 2)
        assert (h.n, h.m) == (9, 6)

    def test_hamilton_cycles(self):
        for r in range(2, 6):
            for ell in range(r):
                step = r - ell
                for n in range(r, 25):
                    if n % step or (ell > 0 and (n == r or n // step < 3)):
                        continue
                    assert hamilton_cycle(n, r, ell).m == n // step

    def test_hamilton_invalid(self):
        with pytest.raises(PreconditionError):
            hamilton_cycle(7, 3, 1)
        with pytest.raises(PreconditionError):
            hamilton_cycle(6, 3, 3)

    def test_hamilton_needs_three_windows(self):
        # two windows would overlap in more than ell vertices
        for n, r, ell in [(4, 3, 1), (4, 4, 2), (6, 5, 2)]:
            with pytest.raises(PreconditionError):
                hamilton_cycle(n, r, ell)
        assert hamilton_cycle(6, 3, 1).m == 3
        assert hamilton_cycle(4, 3, 2).m == 4
        assert hamilton_cycle(4, 2, 0).m == 2

    def test_tight_cycle_is_two_regular_per_pair(self):
        h = hamilton_cycle(8, 3, 2)
        assert all(h.degree(v) == 3 for v in h.vertices)

    @pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
    def test_lattice_r3(self, k):
        h = lattice(3, k)
        assert h.n == (k + 1) ** 2
        assert h.m == 2 * (k - 1) * (k + 1)

    def test_sphere_edge_counts(self):
        for n in range(4, 51):
            h = sphere_apollonian(n, seed=n)
            assert h.m == 2 * n - 4
            assert validate_sphere(h)

    def test_sphere_is_seeded(self):
        assert sphere_apollonian(20, seed=5) == sphere_apollonian(20, seed=5)

    def test_validate_sphere_rejects_tight_cycle(self):
        assert not validate_sphere(hamilton_cycle(6, 3, 2))

    def test_power_cycles(self):
        for r in (2, 3, 4):
            for i in (1, 2, 3):
                for n in range(2 * (r + i - 2) + 1, 31):
                    h = power_hamilton_cycle(n, r, i)
                    assert h.m == n * comb(r + i - 2, r - 1)

    def test_power_cycle_too_small(self):
        with pytest.raises(PreconditionError):
            power_hamilton_cycle(6, 3, 2)

    def test_kfactor_and_matching(self):
        assert kfactor(8, 3, 4).m == 2 * comb(4, 3)
        assert perfect_matching(6, 3).m == 2
        with pytest.raises(PreconditionError):
            kfactor(7, 3, 4)


class TestFamilyRegistry:
    """Test the name registry used by the CLI and curves."""

    def test_list_families_sorted(self):
        names = list_families()
        assert names == sorted(FAMILIES)
        assert "tight-hamilton" in names

    def test_build_family(self):
        assert build_family("cube", r=3, d=2) == cube_hypergraph(3, 2)
        assert build_family("tight-hamilton", n=9, r=3) == hamilton_cycle(9, 3, 2)

    def test_build_family_missing_param(self):
        with pytest.raises(PreconditionError):
            build_family("power", n=10, r=3)

    def test_build_unknown_family(self):
        with pytest.raises(PreconditionError):
            build_family("moebius", n=10)

    @pytest.mark.parametrize(
        "name,params",
        [
            ("hamilton", {"n": 12, "r": 4, "ell": 2}),
            ("loose-hamilton", {"n": 10, "r": 3}),
            ("cube", {"r": 3, "d": 3}),
            ("lattice", {"r": 3, "k": 4}),
            ("power", {"n": 11, "r": 3, "i": 2}),
            ("kfactor", {"n": 12, "r": 3, "t": 4}),
            ("complete", {"n": 7, "r": 3}),
        ],
    )
    def test_size_and_edge_count_helpers(self, name, params):
        h = build_family(name, **params)
        assert h.n == family_size(name, **params)
        assert h.m == expected_edge_count(name, **params)


# ---- Random Model Tests ----


class TestRandomModels:
    """Test seeding, coupling and the three random models."""

    def test_gnp_is_deterministic(self):
        assert gnp(10, 3, 0.4, 11) == gnp(10, 3, 0.4, 11)

    def test_gnp_extremes(self):
        assert gnp(7, 3, 0.0, 1).m == 0
        assert gnp(7, 3, 1.0, 1).m == comb(7, 3)

    def test_gnp_rejects_bad_probability(self):
        with pytest.raises(PreconditionError):
            gnp(7, 3, 1.5, 1)

    def test_gnp_mean_edge_count(self):
        # 20 possible triples at p = 0.3: six edges on average
        counts = [gnp(6, 3, 0.3, seed).m for seed in range(1000)]
        assert abs(np.mean(counts) - 6.0) < 0.3

    def test_gnm_edges_equally_likely(self):
        # five of the ten triples on five vertices: every triple appears half the time
        hits = dict.fromkeys(combinations(range(1, 6), 3), 0)
        seeds = 4000
        for seed in range(seeds):
            for edge in gnm(5, 3, 5, seed).edges:
                hits[edge] += 1
        for count in hits.values():
            assert abs(count / seeds - 0.5) < 0.04

    def test_gnm_exact_count(self):
        h = gnm(9, 3, 20, seed=4)
        assert h.m == 20

    def test_gnm_rejects_too_many_edges(self):
        with pytest.raises(PreconditionError):
            gnm(5, 3, 11, seed=0)

    def test_negative_seed_rejected(self):
        with pytest.raises(PreconditionError):
            rng_for(-1)

    def test_derive_seed_depends_on_keys(self):
        assert derive_seed(5, 1) == derive_seed(5, 1)
        assert derive_seed(5, 1) != derive_seed(5, 2)
        assert 0 <= derive_seed(5, 1) < 2**64

    def test_bounded_degree_respects_delta(self):
        h = sample_bounded_degree(30, 3, 2, seed=9)
        assert h.max_degree <= 2
        assert h.m > 0

    def test_bounded_degree_tiny_n(self):
        assert sample_bounded_degree(2, 3, 2, seed=0).m == 0

    @settings(max_examples=40, deadline=None)
    @given(
        n=st.integers(min_value=3, max_value=10),
        p1=st.floats(min_value=0.0, max_value=1.0),
        p2=st.floats(min_value=0.0, max_value=1.0),
        seed=st.integers(min_value=0, max_value=2**63),
    )
    def test_coupled_hosts_are_nested(self, n, p1, p2, seed):
        low, high = sorted((p1, p2))
        assert gnp(n, 3, low, seed).edge_set <= gnp(n, 3, high, seed).edge_set

    def test_hypergraph_below_uses_shared_variates(self):
        variates = edge_variates(6, 3, seed=2)
        assert isinstance(variates, np.ndarray)
        assert hypergraph_below(6, 3, variates, 0.5) == gnp(6, 3, 0.5, 2)

    @settings(max_examples=30, deadline=None)
    @given(
        n=st.integers(min_value=3, max_value=25),
        delta=st.integers(min_value=1, max_value=4),
        seed=st.integers(min_value=0, max_value=2**32),
    )
    def test_bounded_degree_property(self, n, delta, seed):
        assert sample_bounded_degree(n, 3, delta, seed).max_degree <= delta

    def test_bounded_degree_zero_rejections_is_empty(self):
        assert sample_bounded_degree(12, 3, 2, seed=4, max_rejections=0).m == 0

    def test_bounded_degree_budget_counts_rejections(self):
        # a larger rejection budget replays the same proposals and keeps going
        for seed in range(5):
            short = sample_bounded_degree(15, 3, 2, seed, max_rejections=3)
            long = sample_bounded_degree(15, 3, 2, seed, max_rejections=300)
            assert short.edge_set <= long.edge_set

    def test_bounded_degree_rejection_factor(self):
        assert sample_bounded_degree(15, 3, 2, 7, rejection_factor=1) == sample_bounded_degree(
            15, 3, 2, 7, max_rejections=30
        )

    def test_bounded_degree_saturates_matching(self):
        # two disjoint triples cover 6 vertices; 300 rejections almost surely find the second
        h = sample_bounded_degree(6, 3, 1, seed=11)
        assert h.m == 2
