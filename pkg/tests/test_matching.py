"""
Tests for auxiliary bipartite graphs and Hall matchings.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spanhyper.core import Hypergraph, complete
from spanhyper.embedder import build_aux, family_vertices, hall_matching, max_bipartite_matching
from spanhyper.embedder.aux_graph import joint_adjacency
from spanhyper.errors import DisjointnessError


def brute_matching_size(adjacency: list[frozenset[int]]) -> int:
    def best(i: int, used: frozenset[int]) -> int:
        if i == len(adjacency):
            return 0
        top = best(i + 1, used)
        for w in adjacency[i] - used:
            top = max(top, 1 + best(i + 1, used | {w}))
            if top == len(adjacency) - i:
                break
        return top

    return best(0, frozenset())


class TestBuildAux:
    """Test adjacency and the disjointness checks."""

    def setup_method(self):
        # Edges 1-2-5, 3-4-5, 1-2-6
        self.h = Hypergraph(3, 6, ((1, 2, 5), (3, 4, 5), (1, 2, 6)))

    def test_adjacency(self):
        b = build_aux(self.h, [[(1, 2)], [(3, 4)]], [5, 6])
        assert b.adjacency == (frozenset({5, 6}), frozenset({5}))
        assert b.edge_count() == 3
        assert b.neighbors_of([0, 1]) == frozenset({5, 6})

    def test_empty_family_sees_everything(self):
        b = build_aux(self.h, [[]], [5, 6])
        assert b.adjacency == (frozenset({5, 6}),)

    def test_shared_set_rejected(self):
        with pytest.raises(DisjointnessError):
            build_aux(self.h, [[(1, 2)], [(2, 1)]], [5])

    def test_right_side_meets_families(self):
        with pytest.raises(DisjointnessError):
            build_aux(self.h, [[(1, 2)]], [2, 5])

    def test_wrong_set_size(self):
        with pytest.raises(DisjointnessError):
            build_aux(self.h, [[(1, 2, 3)]], [5])

    def test_family_vertices(self):
        b = build_aux(self.h, [[(1, 2)], [(3, 4)]], [5, 6])
        assert family_vertices(b.left) == frozenset({1, 2, 3, 4})


class TestHallMatching:
    def test_perfect(self):
        result = hall_matching([{1, 2}, {2}, {3}])
        assert result.saturated
        assert result.matching == {0: 1, 1: 2, 2: 3}

    def test_violator(self):
        result = hall_matching([{1}, {1}, {2, 3}])
        assert not result.saturated
        assert set(result.violator) == {0, 1}
        assert result.violator_neighbors == frozenset({1})

    def test_empty_left(self):
        result = hall_matching([])
        assert result.saturated
        assert result.matching == {}

    def test_isolated_left_vertex(self):
        result = hall_matching([set(), {1}])
        assert not result.saturated
        assert result.violator == (0,)
        assert result.violator_neighbors == frozenset()

    def test_aux_graph_matching(self):
        h = complete(7, 3)
        b = build_aux(h, [[(1, 2)], [(3, 4)]], [5, 6, 7])
        result = max_bipartite_matching(b)
        assert result.saturated
        assert len(set(result.matching.values())) == 2

    def test_joint_adjacency(self):
        h = complete(7, 3)
        a = build_aux(h, [[(1, 2)]], [5, 6])
        b = build_aux(h, [[(3, 4)]], [7])
        assert joint_adjacency([a, b]) == [frozenset({5, 6}), frozenset({7})]

    def test_to_dict(self):
        data = hall_matching([{1}, {1}]).to_dict()
        assert data["saturated"] is False
        assert data["size"] == 1
        assert data["violator_neighbors"] == [1]


class TestHallProperties:
    @settings(max_examples=500, deadline=None)
    @given(
        adjacency=st.lists(
            st.frozensets(st.integers(min_value=0, max_value=8), max_size=6), max_size=8
        )
    )
    def test_agrees_with_exhaustive_search(self, adjacency):
        result = hall_matching(adjacency)
        assert len(result.matching) == brute_matching_size(adjacency)
        assert len(set(result.matching.values())) == len(result.matching)
        for i, w in result.matching.items():
            assert w in adjacency[i]
        if not result.saturated:
            neighbours = frozenset().union(*(adjacency[i] for i in result.violator))
            assert neighbours == result.violator_neighbors
            assert len(neighbours) < len(result.violator)
