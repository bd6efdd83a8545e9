"""
Tests for the hypergraph type and structural notions.
"""

import math

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spanhyper.core import (
    Graph,
    Hypergraph,
    as_graph,
    ball,
    complete,
    components,
    degree,
    distance,
    is_t_independent,
    link,
    make_hypergraph,
    neighborhood,
    neighborhood_of_set,
    shadow,
)
from spanhyper.errors import HypergraphError, PreconditionError
from spanhyper.generators import gnp, hamilton_cycle


# ---- Hypergraph Tests ----


class TestHypergraph:
    """Test construction and derived indexes."""

    def test_edges_are_normalized(self):
        h = Hypergraph(3, 5, ((3, 1, 2), (5, 4, 1)))
        assert h.edges == ((1, 2, 3), (1, 4, 5))
        assert h.m == 2

    def test_equal_edge_sets_compare_equal(self):
        a = Hypergraph(3, 4, ((1, 2, 3), (2, 3, 4)))
        b = Hypergraph(3, 4, ((4, 3, 2), (3, 2, 1)))
        assert a == b

    def test_wrong_edge_size(self):
        with pytest.raises(HypergraphError):
            Hypergraph(3, 5, ((1, 2),))

    def test_repeated_vertex_in_edge(self):
        with pytest.raises(HypergraphError):
            Hypergraph(3, 5, ((1, 1, 2),))

    def test_vertex_out_of_range(self):
        with pytest.raises(HypergraphError):
            Hypergraph(3, 4, ((1, 2, 5),))

    def test_duplicate_edge(self):
        with pytest.raises(HypergraphError):
            Hypergraph(3, 4, ((1, 2, 3), (3, 2, 1)))

    def test_uniformity_below_two(self):
        with pytest.raises(HypergraphError):
            Hypergraph(1, 3, ())

    def test_degrees(self):
        h = Hypergraph(3, 5, ((1, 2, 3), (1, 4, 5)))
        assert degree(h, 1) == 2
        assert degree(h, 4) == 1
        assert h.max_degree == 2

    def test_degree_outside_vertex_set(self):
        h = Hypergraph(3, 3, ((1, 2, 3),))
        with pytest.raises(PreconditionError):
            h.degree(4)

    def test_completions(self):
        h = Hypergraph(3, 5, ((1, 2, 3), (1, 2, 4)))
        assert h.completing_vertices((2, 1)) == frozenset({3, 4})
        assert h.completing_vertices((4, 5)) == frozenset()

    def test_relabel(self):
        h = Hypergraph(3, 4, ((1, 2, 3),))
        moved = h.relabel({1: 4, 2: 3, 3: 2, 4: 1})
        assert moved.edges == ((2, 3, 4),)

    def test_relabel_rejects_non_permutation(self):
        h = Hypergraph(3, 4, ((1, 2, 3),))
        with pytest.raises(PreconditionError):
            h.relabel({1: 1, 2: 1, 3: 2, 4: 3})

    def test_induced(self):
        h = complete(5, 3)
        sub, label = h.induced([2, 4, 5])
        assert sub.n == 3
        assert sub.m == 1
        assert label == {2: 1, 4: 2, 5: 3}

    def test_make_hypergraph_returns_graph_for_r2(self):
        g = make_hypergraph(2, 3, [(1, 2)])
        assert isinstance(g, Graph)
        assert g.neighbors(1) == frozenset({2})

    def test_as_graph_rejects_r3(self):
        with pytest.raises(PreconditionError):
            as_graph(complete(4, 3))

    def test_complete_edge_count(self):
        assert complete(6, 3).m == 20
        assert complete(2, 3).m == 0


# ---- Structure Tests ----


class TestStructure:
    """Test shadow, components, distances and links."""

    def setup_method(self):
        # Loose cycle on 6 vertices: 1-2-3, 3-4-5, 5-6-1
        self.loose = hamilton_cycle(6, 3, 1)

    def test_shadow_of_single_edge(self):
        g = shadow(Hypergraph(3, 4, ((1, 2, 3),)))
        assert g.edges == ((1, 2), (1, 3), (2, 3))

    def test_components_with_isolated_vertex(self):
        h = Hypergraph(3, 7, ((1, 2, 3), (4, 5, 6)))
        assert components(h) == [frozenset({1, 2, 3}), frozenset({4, 5, 6}), frozenset({7})]

    def test_distance(self):
        h = Hypergraph(3, 7, ((1, 2, 3), (3, 4, 5)))
        assert distance(h, 1, 1) == 0
        assert distance(h, 1, 2) == 1
        assert distance(h, 1, 5) == 2
        assert distance(h, 1, 7) == math.inf

    def test_ball(self):
        h = Hypergraph(3, 7, ((1, 2, 3), (3, 4, 5)))
        assert ball(h, 1, 1) == {1: 0, 2: 1, 3: 1}
        assert set(ball(h, 1, 2)) == {1, 2, 3, 4, 5}

    def test_t_independent(self):
        h = Hypergraph(3, 7, ((1, 2, 3), (3, 4, 5)))
        assert is_t_independent(h, [1, 5], 1)
        assert not is_t_independent(h, [1, 5], 2)
        assert is_t_independent(h, [], 3)

    def test_link(self):
        assert link(self.loose, 1) == frozenset({(2, 3), (5, 6)})
        assert link(self.loose, 2) == frozenset({(1, 3)})

    def test_neighborhoods(self):
        assert neighborhood(self.loose, 1) == (2, 3, 5, 6)
        assert neighborhood_of_set(self.loose, [2, 4]) == (1, 3, 5)


# ---- Property Tests ----


class TestStructureProperties:
    @settings(max_examples=40, deadline=None)
    @given(
        n=st.integers(min_value=3, max_value=12),
        p=st.floats(min_value=0.0, max_value=1.0),
        seed=st.integers(min_value=0, max_value=2**32),
    )
    def test_degree_sum(self, n, p, seed):
        h = gnp(n, 3, p, seed)
        assert sum(h.degree(v) for v in h.vertices) == 3 * h.m

    @settings(max_examples=40, deadline=None)
    @given(
        n=st.integers(min_value=3, max_value=10),
        seed=st.integers(min_value=0, max_value=2**32),
    )
    def test_distance_is_symmetric(self, n, seed):
        h = gnp(n, 3, 0.2, seed)
        for u in h.vertices:
            for v in h.vertices:
                assert distance(h, u, v) == distance(h, v, u)

    @settings(max_examples=30, deadline=None)
    @given(
        n=st.integers(min_value=3, max_value=10),
        seed=st.integers(min_value=0, max_value=2**32),
    )
    def test_components_partition_vertices(self, n, seed):
        h = gnp(n, 3, 0.1, seed)
        comps = components(h)
        assert sorted(v for c in comps for v in c) == list(h.vertices)

    @settings(max_examples=30, deadline=None)
    @given(
        n=st.integers(min_value=3, max_value=9),
        p=st.floats(min_value=0.0, max_value=0.6),
        seed=st.integers(min_value=0, max_value=2**32),
    )
    def test_shadow_edges_are_distance_one(self, n, p, seed):
        h = gnp(n, 3, p, seed)
        g = shadow(h)
        for u in h.vertices:
            for v in h.vertices:
                if u != v:
                    assert g.has_edge((u, v)) == (distance(h, u, v) == 1)

    @settings(max_examples=30, deadline=None)
    @given(
        n=st.integers(min_value=3, max_value=12),
        seed=st.integers(min_value=0, max_value=2**32),
    )
    def test_components_match_shadow_components(self, n, seed):
        h = gnp(n, 3, 0.08, seed)
        expected = sorted(
            (frozenset(c) for c in nx.connected_components(shadow(h).to_networkx())), key=min
        )
        assert components(h) == expected
