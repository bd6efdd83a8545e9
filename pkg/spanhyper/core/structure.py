"""
Structural notions on hypergraphs: shadow graph, components, distance,
t-independence, links and neighbourhoods.

Hypergraph path length equals path length in the shadow graph, so distances
and components are computed on the shadow with networkx.
"""

import math
from typing import Iterable, Union

import networkx as nx

from spanhyper.core.hypergraph import Edge, Graph, Hypergraph

Distance = Union[int, float]


def shadow(h: Hypergraph) -> Graph:
    """Graph on V(h) whose edges are the pairs covered by some hyperedge."""
    pairs = set()
    for v in h.vertices:
        for w in h.adjacency[v]:
            if v < w:
                pairs.add((v, w))
    return Graph(h.n, sorted(pairs))


def components(h: Hypergraph) -> list[frozenset[int]]:
    """Connected components, isolated vertices as singletons, ordered by least vertex."""
    comps = [frozenset(c) for c in nx.connected_components(h.to_networkx())]
    return sorted(comps, key=min)


def distance(h: Hypergraph, u: int, v: int) -> Distance:
    """Length of a shortest vertex-edge path from u to v; math.inf across components."""
    h.check_vertex(u)
    h.check_vertex(v)
    if u == v:
        return 0
    seen = {u}
    frontier = [u]
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for x in frontier:
            for y in h.adjacency[x]:
                if y == v:
                    return depth
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return math.inf


def ball(h: Hypergraph, v: int, radius: int) -> dict[int, int]:
    """Vertices within shadow distance `radius` of v, mapped to their distance."""
    h.check_vertex(v)
    dist = {v: 0}
    frontier = [v]
    for depth in range(1, radius + 1):
        nxt = []
        for x in frontier:
            for y in h.adjacency[x]:
                if y not in dist:
                    dist[y] = depth
                    nxt.append(y)
        frontier = nxt
    return dist


def is_t_independent(h: Hypergraph, w: Iterable[int], t: int) -> bool:
    """True iff distinct members of w are pairwise at distance at least t + 1."""
    members = set(w)
    for v in members:
        h.check_vertex(v)
    for v in members:
        near = ball(h, v, t)
        if any(x in members and x != v for x in near):
            return False
    return True


def link(h: Hypergraph, v: int) -> frozenset[Edge]:
    """The (r-1)-sets completing an edge with v."""
    h.check_vertex(v)
    return frozenset(
        tuple(x for x in h.edges[idx] if x != v) for idx in h.incidence[v]
    )


def neighborhood(h: Hypergraph, v: int) -> tuple[int, ...]:
    h.check_vertex(v)
    return tuple(sorted(h.adjacency[v]))


def neighborhood_of_set(h: Hypergraph, w: Iterable[int]) -> tuple[int, ...]:
    """Union of the neighbourhoods of the members of w."""
    out: set[int] = set()
    for v in w:
        h.check_vertex(v)
        out |= h.adjacency[v]
    return tuple(sorted(out))
