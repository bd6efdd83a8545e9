"""
Exact subhypergraph containment by backtracking.

Pattern vertices are placed in a connected, most-constrained-first order.
Candidates for the next vertex come from the host's completion index when an
edge closes at that vertex, otherwise from the shadow neighbourhoods of the
images of its placed neighbours; host degree must dominate pattern degree.
Isolated pattern vertices are placed last on any unused host vertex.

Search nodes are counted against a budget so an exhausted search reports
BUDGET_EXHAUSTED instead of a false NOT_FOUND.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Optional

from spanhyper.config import default_budget
from spanhyper.core.hypergraph import Hypergraph
from spanhyper.errors import BudgetExhaustedError, PreconditionError
from spanhyper.generators.random_models import rng_for

logger = logging.getLogger(__name__)


class SearchStatus(str, Enum):
    FOUND = "found"
    NOT_FOUND = "not_found"
    BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True, eq=True)
class Embedding:
    """Injective map from pattern vertices to host vertices."""

    mapping: dict[int, int] = field(default_factory=dict)

    def __hash__(self):
        return hash(tuple(sorted(self.mapping.items())))

    def image(self, v: int) -> int:
        return self.mapping[v]

    def to_dict(self) -> dict:
        return {str(k): v for k, v in sorted(self.mapping.items())}


@dataclass
class SearchResult:
    status: SearchStatus
    embedding: Optional[Embedding] = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status == SearchStatus.FOUND

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "nodes": self.nodes,
            "embedding": self.embedding.to_dict() if self.embedding else None,
        }


def search_order(pattern: Hypergraph) -> list[int]:
    """Connected, max-degree-first order; isolated vertices last."""
    degrees = pattern.degrees
    remaining = {v for v in pattern.vertices if degrees[v] > 0}
    placed: set[int] = set()
    order: list[int] = []

    def closing(v: int) -> int:
        return sum(
            1
            for idx in pattern.incidence[v]
            if all(u == v or u in placed for u in pattern.edges[idx])
        )

    while remaining:
        frontier = [v for v in remaining if pattern.adjacency[v] & placed]
        if not frontier:
            nxt = max(remaining, key=lambda v: (degrees[v], -v))
        else:
            nxt = max(
                frontier,
                key=lambda v: (closing(v), len(pattern.adjacency[v] & placed), degrees[v], -v),
            )
        order.append(nxt)
        placed.add(nxt)
        remaining.discard(nxt)
    order.extend(v for v in pattern.vertices if degrees[v] == 0)
    return order


class NodeCounter:
    """Search-node budget that several searches can share."""

    def __init__(self, limit: Optional[int] = None):
        self.limit = default_budget() if limit is None else limit
        self.count = 0

    def tick(self) -> None:
        self.count += 1
        if self.count > self.limit:
            raise BudgetExhaustedError(f"Search exceeded {self.limit} nodes", self.count)


class EmbeddingSearch:
    """Backtracking enumerator of embeddings of pattern into host.

    allowed restricts the host vertices that may be used; order_seed shuffles
    candidate order (the search stays exhaustive); counter shares a node budget
    with other searches.
    """

    def __init__(
        self,
        host: Hypergraph,
        pattern: Hypergraph,
        allowed: Optional[Iterable[int]] = None,
        budget: Optional[int] = None,
        order_seed: Optional[int] = None,
        counter: Optional[NodeCounter] = None,
    ):
        if host.r != pattern.r:
            raise PreconditionError(f"Uniformity mismatch: host r={host.r}, pattern r={pattern.r}")
        self.host = host
        self.pattern = pattern
        self.allowed = None if allowed is None else frozenset(allowed)
        self.counter = counter if counter is not None else NodeCounter(budget)
        self.order = search_order(pattern)
        self._rng = None if order_seed is None else rng_for(order_seed)

        position = {v: i for i, v in enumerate(self.order)}
        self._closing: list[list[tuple[int, ...]]] = []
        self._earlier_nbrs: list[list[int]] = []
        for i, x in enumerate(self.order):
            edges = []
            for idx in pattern.incidence[x]:
                others = tuple(u for u in pattern.edges[idx] if u != x)
                if all(position[u] < i for u in others):
                    edges.append(others)
            self._closing.append(edges)
            self._earlier_nbrs.append(
                sorted(u for u in pattern.adjacency[x] if position[u] < i)
            )

    @property
    def nodes(self) -> int:
        return self.counter.count

    @property
    def budget(self) -> int:
        return self.counter.limit

    def _pool(self) -> Iterable[int]:
        if self.allowed is not None:
            return self.allowed
        return self.host.vertices

    def _candidates(self, i: int, phi: dict[int, int], used: set[int]) -> list[int]:
        host = self.host
        x = self.order[i]
        need = self.pattern.degrees[x]
        closing = self._closing[i]
        nbrs = self._earlier_nbrs[i]

        if closing:
            pools = sorted(
                (host.completing_vertices(phi[u] for u in others) for others in closing), key=len
            )
            cands = set(pools[0]).intersection(*pools[1:])
        elif nbrs:
            pools = sorted((host.adjacency[phi[u]] for u in nbrs), key=len)
            cands = set(pools[0]).intersection(*pools[1:])
        else:
            cands = set(self._pool())

        if self.allowed is not None:
            cands &= self.allowed
        cands -= used
        images = [phi[u] for u in nbrs]
        out = [
            w
            for w in cands
            if host.degrees[w] >= need and all(w in host.adjacency[y] for y in images)
        ]
        out.sort()
        if self._rng is not None and len(out) > 1:
            out = [out[j] for j in self._rng.permutation(len(out))]
        return out

    def __iter__(self) -> Iterator[Embedding]:
        if self.allowed is not None and len(self.allowed) < self.pattern.n:
            return
        phi: dict[int, int] = {}
        used: set[int] = set()
        yield from self._extend(0, phi, used)

    def _extend(self, i: int, phi: dict[int, int], used: set[int]) -> Iterator[Embedding]:
        if i == len(self.order):
            yield Embedding(dict(phi))
            return
        x = self.order[i]
        for w in self._candidates(i, phi, used):
            self.counter.tick()
            phi[x] = w
            used.add(w)
            yield from self._extend(i + 1, phi, used)
            used.discard(w)
            del phi[x]


def iter_embeddings(
    host: Hypergraph,
    pattern: Hypergraph,
    allowed: Optional[Iterable[int]] = None,
    spanning: bool = False,
    budget: Optional[int] = None,
    order_seed: Optional[int] = None,
) -> Iterator[Embedding]:
    """Lazily yield embeddings; raises BudgetExhaustedError when the budget runs out."""
    _check_sizes(host, pattern, spanning)
    return iter(EmbeddingSearch(host, pattern, allowed, budget, order_seed))


def _check_sizes(host: Hypergraph, pattern: Hypergraph, spanning: bool) -> None:
    if host.r != pattern.r:
        raise PreconditionError(f"Uniformity mismatch: host r={host.r}, pattern r={pattern.r}")
    if pattern.n > host.n:
        raise PreconditionError(f"Pattern has {pattern.n} vertices, host only {host.n}")
    if spanning and pattern.n != host.n:
        raise PreconditionError(
            f"Spanning containment needs equal vertex counts ({pattern.n} != {host.n})"
        )


def _degree_dominated(host: Hypergraph, pattern: Hypergraph) -> bool:
    hd = sorted(host.degrees[1:], reverse=True)
    pd = sorted(pattern.degrees[1:], reverse=True)
    return all(p <= h for p, h in zip(pd, hd))


def find_embedding(
    host: Hypergraph,
    pattern: Hypergraph,
    spanning: bool = False,
    budget: Optional[int] = None,
    order_seed: Optional[int] = None,
) -> SearchResult:
    """Decide whether pattern embeds into host, returning an embedding when it does."""
    _check_sizes(host, pattern, spanning)
    if pattern.m > host.m or not _degree_dominated(host, pattern):
        return SearchResult(SearchStatus.NOT_FOUND, None, 0)

    search = EmbeddingSearch(host, pattern, None, budget, order_seed)
    try:
        emb = next(iter(search), None)
    except BudgetExhaustedError:
        logger.info("find_embedding: budget of %d nodes exhausted", search.budget)
        return SearchResult(SearchStatus.BUDGET_EXHAUSTED, None, search.nodes)
    if emb is None:
        return SearchResult(SearchStatus.NOT_FOUND, None, search.nodes)
    return SearchResult(SearchStatus.FOUND, emb, search.nodes)


def validate_embedding(host: Hypergraph, pattern: Hypergraph, emb: Embedding) -> bool:
    """True iff emb is an injective map on V(pattern) sending every edge onto a host edge."""
    mapping = emb.mapping
    if set(mapping) != set(pattern.vertices):
        return False
    images = list(mapping.values())
    if len(set(images)) != len(images):
        return False
    if any(not 1 <= w <= host.n for w in images):
        return False
    return all(host.has_edge(mapping[v] for v in e) for e in pattern.edges)
