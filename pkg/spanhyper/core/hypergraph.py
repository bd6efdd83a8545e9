"""
Immutable r-uniform hypergraphs over vertices 1..n.

Edges are stored as sorted tuples and the edge list is sorted
lexicographically, so two hypergraphs with the same edge set compare equal
and serialise identically. Derived indexes (incidence, shadow adjacency,
completion index) are computed lazily and cached on the instance.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence, Union

import networkx as nx

from spanhyper.errors import HypergraphError, PreconditionError

Edge = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform hypergraph with vertex set 1..n."""

    r: int
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.r < 2:
            raise HypergraphError(f"Uniformity must be at least 2, got {self.r}")
        if self.n < 0:
            raise HypergraphError(f"Vertex count must be non-negative, got {self.n}")

        normalized = []
        for raw in self.edges:
            edge = tuple(sorted(int(v) for v in raw))
            if len(edge) != self.r or len(set(edge)) != self.r:
                raise HypergraphError(f"Edge {tuple(raw)} is not a set of {self.r} vertices")
            if edge[0] < 1 or edge[-1] > self.n:
                raise HypergraphError(f"Edge {edge} has a vertex outside 1..{self.n}")
            normalized.append(edge)
        normalized.sort()
        for a, b in zip(normalized, normalized[1:]):
            if a == b:
                raise HypergraphError(f"Duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(normalized))

    # ---- Basic accessors ----

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise PreconditionError(f"Vertex {v} outside 1..{self.n}")

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """incidence[v] lists the indices of edges containing v; index 0 is unused."""
        lists: list[list[int]] = [[] for _ in range(self.n + 1)]
        for idx, edge in enumerate(self.edges):
            for v in edge:
                lists[v].append(idx)
        return tuple(tuple(lst) for lst in lists)

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self.incidence[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(lst) for lst in self.incidence)

    @cached_property
    def max_degree(self) -> int:
        return max(self.degrees[1:], default=0)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def has_edge(self, vertices: Iterable[int]) -> bool:
        return tuple(sorted(vertices)) in self.edge_set

    def is_empty(self) -> bool:
        return not self.edges

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Shadow-graph neighbourhoods; adjacency[v] never contains v."""
        nbrs: list[set[int]] = [set() for _ in range(self.n + 1)]
        for edge in self.edges:
            for v in edge:
                nbrs[v].update(edge)
        for v, s in enumerate(nbrs):
            s.discard(v)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def completions(self) -> dict[Edge, frozenset[int]]:
        """Map each sorted (r-1)-set S to the vertices w with S + {w} an edge."""
        index: dict[Edge, set[int]] = {}
        for edge in self.edges:
            for i, v in enumerate(edge):
                rest = edge[:i] + edge[i + 1:]
                index.setdefault(rest, set()).add(v)
        return {key: frozenset(val) for key, val in index.items()}

    def completing_vertices(self, part: Iterable[int]) -> frozenset[int]:
        return self.completions.get(tuple(sorted(part)), frozenset())

    # ---- Derived hypergraphs ----

    def relabel(self, perm: Union[Mapping[int, int], Sequence[int]]) -> "Hypergraph":
        """Apply a permutation of 1..n given as a mapping or as a 0-indexed sequence."""
        if not isinstance(perm, Mapping):
            perm = {v: perm[v - 1] for v in self.vertices}
        if sorted(perm.get(v, 0) for v in self.vertices) != list(self.vertices):
            raise PreconditionError("Relabeling is not a permutation of the vertex set")
        return make_hypergraph(self.r, self.n, (tuple(perm[v] for v in e) for e in self.edges))

    def induced(self, vertices: Iterable[int]) -> tuple["Hypergraph", dict[int, int]]:
        """H[W] relabelled to 1..|W| in ascending order, with the old->new label map."""
        keep = sorted(set(vertices))
        for v in keep:
            self.check_vertex(v)
        label = {v: i + 1 for i, v in enumerate(keep)}
        edges = (
            tuple(label[v] for v in e) for e in self.edges if all(v in label for v in e)
        )
        return make_hypergraph(self.r, len(keep), edges), label

    def to_networkx(self) -> nx.Graph:
        """The shadow graph as a networkx graph, isolated vertices included."""
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        for edge in self.edges:
            g.add_edges_from(combinations(edge, 2))
        return g


class Graph(Hypergraph):
    """A simple graph: a 2-uniform hypergraph with adjacency lookups."""

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        super().__init__(2, n, tuple(edges))

    def neighbors(self, v: int) -> frozenset[int]:
        self.check_vertex(v)
        return self.adjacency[v]


def as_graph(h: Hypergraph) -> Graph:
    """View a 2-uniform hypergraph as a Graph."""
    if isinstance(h, Graph):
        return h
    if h.r != 2:
        raise PreconditionError(f"Expected a 2-uniform hypergraph, got r={h.r}")
    return Graph(h.n, h.edges)


def complete(n: int, r: int) -> Hypergraph:
    """K^(r)_n: every r-subset of 1..n."""
    if n < 0 or r < 2:
        raise PreconditionError(f"Invalid complete hypergraph parameters n={n}, r={r}")
    return make_hypergraph(r, n, combinations(range(1, n + 1), r))


def make_hypergraph(r: int, n: int, edges: Iterable[Edge]) -> Hypergraph:
    """Build a Hypergraph, or a Graph when r == 2."""
    if r == 2:
        return Graph(n, edges)
    return Hypergraph(r, n, tuple(edges))
