"""
Auxiliary bipartite graphs B(H, L, W) and left-saturating matchings.

A left vertex is a family L of (r-1)-sets of host vertices; it is adjacent to
w in W when every member of L completes with w to a host edge, i.e.
L is contained in link_H(w). An empty family is adjacent to all of W.

Matchings come from Hopcroft-Karp. When the left side cannot be saturated an
alternating-path search from an unmatched left vertex yields a Hall violator:
a left set U with |N(U)| = |U| - 1.
"""

import logging
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx

from spanhyper.core.hypergraph import Edge, Hypergraph
from spanhyper.errors import DisjointnessError

logger = logging.getLogger(__name__)

Family = frozenset[Edge]


@dataclass
class AuxBipartite:
    left: tuple[Family, ...]
    right: tuple[int, ...]
    adjacency: tuple[frozenset[int], ...]

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency)

    def neighbors_of(self, indices: Iterable[int]) -> frozenset[int]:
        return frozenset().union(*(self.adjacency[i] for i in indices))


@dataclass
class MatchingResult:
    matching: dict[int, int] = field(default_factory=dict)
    saturated: bool = True
    violator: tuple[int, ...] = ()
    violator_neighbors: frozenset[int] = frozenset()

    def to_dict(self) -> dict:
        return {
            "saturated": self.saturated,
            "size": len(self.matching),
            "violator": list(self.violator),
            "violator_neighbors": sorted(self.violator_neighbors),
        }


def _normalise(lfamily: Iterable[Iterable[Iterable[int]]]) -> tuple[Family, ...]:
    return tuple(frozenset(tuple(sorted(part)) for part in family) for family in lfamily)


def family_vertices(lfamily: Iterable[Family]) -> frozenset[int]:
    """V(L): every host vertex used by some member of some family."""
    return frozenset(v for family in lfamily for part in family for v in part)


def build_aux(
    h: Hypergraph, lfamily: Iterable[Iterable[Iterable[int]]], w: Iterable[int]
) -> AuxBipartite:
    """B(h, lfamily, w) with exact adjacency.

    Raises DisjointnessError when two families share an (r-1)-set or when w
    meets V(lfamily).
    """
    left = _normalise(lfamily)
    right = tuple(sorted(set(w)))
    for family in left:
        for part in family:
            if len(part) != h.r - 1 or len(set(part)) != h.r - 1:
                raise DisjointnessError(f"{part} is not an ({h.r - 1})-set")

    seen: dict[Edge, int] = {}
    for i, family in enumerate(left):
        for part in family:
            if part in seen:
                raise DisjointnessError(f"Families {seen[part]} and {i} share the set {part}")
            seen[part] = i
    clash = family_vertices(left) & set(right)
    if clash:
        raise DisjointnessError(f"Right side meets V(L) in {sorted(clash)}")

    rightset = frozenset(right)
    adjacency = []
    for family in left:
        if not family:
            adjacency.append(rightset)
            continue
        pools = sorted((h.completing_vertices(part) for part in family), key=len)
        adjacency.append(rightset.intersection(*pools))
    return AuxBipartite(left, right, tuple(adjacency))


def hall_matching(adjacency: Sequence[Iterable[int]]) -> MatchingResult:
    """Maximum matching of left indices 0..k-1 into right labels, with a violator on failure."""
    adjacency = [frozenset(a) for a in adjacency]
    graph = nx.Graph()
    left_nodes = [("L", i) for i in range(len(adjacency))]
    graph.add_nodes_from(left_nodes, bipartite=0)
    for i, nbrs in enumerate(adjacency):
        for w in nbrs:
            graph.add_edge(("L", i), ("R", w))

    raw = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=left_nodes) if left_nodes else {}
    matching = {node[1]: raw[node][1] for node in left_nodes if node in raw}
    if len(matching) == len(adjacency):
        return MatchingResult(matching=matching, saturated=True)

    owner = {w: i for i, w in matching.items()}
    start = next(i for i in range(len(adjacency)) if i not in matching)
    reached = {start}
    frontier = [start]
    reached_right: set[int] = set()
    while frontier:
        nxt = []
        for i in frontier:
            for w in adjacency[i]:
                if w in reached_right:
                    continue
                reached_right.add(w)
                # Maximality: every right vertex reached from an unmatched start is matched.
                j = owner[w]
                if j not in reached:
                    reached.add(j)
                    nxt.append(j)
        frontier = nxt

    violator = tuple(sorted(reached))
    neighbours = frozenset().union(*(adjacency[i] for i in violator))
    logger.debug("Hall violator of size %d with %d neighbours", len(violator), len(neighbours))
    return MatchingResult(
        matching=matching, saturated=False, violator=violator, violator_neighbors=neighbours
    )


def max_bipartite_matching(b: AuxBipartite) -> MatchingResult:
    """Left-saturating matching of b, or a Hall violator certificate."""
    return hall_matching(b.adjacency)


def joint_adjacency(parts: Sequence[AuxBipartite]) -> list[frozenset[int]]:
    """Left sides of several auxiliary graphs stacked in order, for one joint matching."""
    return [nbrs for part in parts for nbrs in part.adjacency]
