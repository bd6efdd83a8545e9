"""
Hitting graphs and the hitting number sigma.

A graph G hits a hypergraph F when every hyperedge of F contains an edge of
G. sigma(F) is the least maximum degree over all hitting graphs; it is at
most Delta(F), since in an edge-minimal hitting graph every edge has a
private hyperedge and so deg_G(v) <= deg_F(v).
"""

import logging
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from spanhyper.config import DEFAULT_LIMITS
from spanhyper.core.hypergraph import Edge, Graph, Hypergraph
from spanhyper.errors import BoundViolationError, OracleLimitError
from spanhyper.search.embedding import NodeCounter

logger = logging.getLogger(__name__)


@dataclass
class HittingGraph:
    graph: Graph
    certificate: dict[Edge, Edge] = field(default_factory=dict)

    @property
    def max_degree(self) -> int:
        return self.graph.max_degree

    def hits(self, f: Hypergraph) -> bool:
        """Every hyperedge of f has its certificate pair, and that pair is a graph edge."""
        for e in f.edges:
            pair = self.certificate.get(e)
            if pair is None or not set(pair) <= set(e) or not self.graph.has_edge(pair):
                return False
        return True

    def to_dict(self) -> dict:
        return {
            "n": self.graph.n,
            "max_degree": self.max_degree,
            "edges": [list(e) for e in self.graph.edges],
            "certificate": {
                " ".join(map(str, e)): list(pair) for e, pair in self.certificate.items()
            },
        }


def _certify(f: Hypergraph, pairs: set[Edge]) -> dict[Edge, Edge]:
    certificate = {}
    for e in f.edges:
        certificate[e] = next(pair for pair in combinations(e, 2) if pair in pairs)
    return certificate


def _loads(n: int, pairs: set[Edge]) -> list[int]:
    load = [0] * (n + 1)
    for a, b in pairs:
        load[a] += 1
        load[b] += 1
    return load


def _greedy(f: Hypergraph) -> set[Edge]:
    """Per unhit hyperedge, add the pair whose larger endpoint load is smallest."""
    pairs: set[Edge] = set()
    load = [0] * (f.n + 1)
    for e in f.edges:
        if any(pair in pairs for pair in combinations(e, 2)):
            continue
        best = min(combinations(e, 2), key=lambda ab: (max(load[ab[0]], load[ab[1]]), ab))
        pairs.add(best)
        load[best[0]] += 1
        load[best[1]] += 1
    return pairs


def _repair(f: Hypergraph, pairs: set[Edge], limit: int, rounds: int = 3) -> set[Edge]:
    """Move pairs off vertices whose load exceeds limit where another pair still hits."""
    pairs = set(pairs)
    for _ in range(rounds):
        load = _loads(f.n, pairs)
        hot = [v for v in f.vertices if load[v] > limit]
        if not hot:
            break
        for v in hot:
            for pair in sorted(p for p in pairs if v in p):
                if _loads(f.n, pairs)[v] <= limit:
                    break
                trial = pairs - {pair}
                unhit = [e for e in f.edges if set(pair) <= set(e) and not _hit(e, trial)]
                replacement = set()
                for e in unhit:
                    cands = [q for q in combinations(e, 2) if v not in q]
                    trial_load = _loads(f.n, trial | replacement)
                    q = min(cands, key=lambda ab: (max(trial_load[ab[0]], trial_load[ab[1]]), ab))
                    replacement.add(q)
                pairs = trial | replacement
    return pairs


def _hit(e: Edge, pairs: set[Edge]) -> bool:
    return any(pair in pairs for pair in combinations(e, 2))


def _prune(f: Hypergraph, pairs: set[Edge]) -> set[Edge]:
    """Drop pairs, heaviest endpoints first, while every hyperedge stays hit."""
    pairs = set(pairs)
    load = _loads(f.n, pairs)
    for pair in sorted(pairs, key=lambda ab: (-max(load[ab[0]], load[ab[1]]), ab)):
        trial = pairs - {pair}
        if all(_hit(e, trial) for e in f.edges if set(pair) <= set(e)):
            pairs = trial
    return pairs


def _bounded_search(f: Hypergraph, limit: int, counter: NodeCounter) -> Optional[set[Edge]]:
    """A hitting pair set with every load <= limit, or None when none exists."""
    edges = sorted(f.edges, key=lambda e: (-sum(f.degrees[v] for v in e), e))
    load = [0] * (f.n + 1)
    pairs: set[Edge] = set()

    def extend(i: int) -> bool:
        while i < len(edges) and _hit(edges[i], pairs):
            i += 1
        if i == len(edges):
            return True
        for a, b in combinations(edges[i], 2):
            if load[a] >= limit or load[b] >= limit:
                continue
            counter.tick()
            pairs.add((a, b))
            load[a] += 1
            load[b] += 1
            if extend(i + 1):
                return True
            pairs.discard((a, b))
            load[a] -= 1
            load[b] -= 1
        return False

    return set(pairs) if extend(0) else None


def hitting_graph(f: Hypergraph, budget: Optional[int] = None) -> HittingGraph:
    """A graph hitting f with maximum degree at most Delta(f)."""
    limit = f.max_degree
    pairs = _prune(f, _repair(f, _greedy(f), limit))
    if max(_loads(f.n, pairs), default=0) > limit:
        logger.warning("greedy hitting graph exceeds Delta(F) = %d; searching exhaustively", limit)
        counter = NodeCounter(budget)
        found = _bounded_search(f, limit, counter)
        if found is None:
            raise BoundViolationError(f"No hitting graph with maximum degree {limit}")
        pairs = found

    hg = HittingGraph(Graph(f.n, sorted(pairs)), _certify(f, pairs))
    if not hg.hits(f) or hg.max_degree > limit:
        raise BoundViolationError("Hitting graph failed its certificate or degree bound")
    return hg


def sigma_exact(
    f: Hypergraph, budget: Optional[int] = None, max_vertices: Optional[int] = None
) -> int:
    """sigma(f) by increasing-limit feasibility search.

    Raises OracleLimitError above the vertex cap and BudgetExhaustedError when
    the shared node budget runs out.
    """
    cap = max_vertices or DEFAULT_LIMITS["sigma_vertex_cap"]
    if f.n > cap:
        raise OracleLimitError(f"sigma_exact on {f.n} vertices (cap {cap})")
    if f.m == 0:
        return 0
    counter = NodeCounter(budget)
    for limit in range(1, f.max_degree + 1):
        if _bounded_search(f, limit, counter) is not None:
            logger.debug("sigma = %d after %d nodes", limit, counter.count)
            return limit
    raise BoundViolationError(f"No hitting graph with maximum degree {f.max_degree}")


@dataclass
class SigmaProbe:
    sigma: int
    conjectured: int
    holds: bool

    def to_dict(self) -> dict:
        return {"sigma": self.sigma, "conjectured": self.conjectured, "holds": self.holds}


def sigma_conjecture_probe(
    f: Hypergraph, budget: Optional[int] = None, max_vertices: Optional[int] = None
) -> SigmaProbe:
    """sigma(f) next to ceil(2 Delta / r); evidence only."""
    sigma = sigma_exact(f, budget, max_vertices)
    conjectured = math.ceil(2 * f.max_degree / f.r)
    if sigma > conjectured:
        logger.warning("sigma = %d exceeds ceil(2 Delta / r) = %d", sigma, conjectured)
    return SigmaProbe(sigma, conjectured, sigma <= conjectured)
