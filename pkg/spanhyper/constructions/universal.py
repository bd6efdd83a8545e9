"""
Universal hypergraphs built from graphs, and sampled universality checks.

H_r(G) takes every r-set containing an edge of G; K_r(G) takes the vertex
sets of the r-cliques of G. If G contains the shadow of F, K_r(G) contains F,
which gives the shadow-lift path used by verify_universal_sampled.
"""

import logging
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

import networkx as nx

from spanhyper.core.hypergraph import Graph, Hypergraph, as_graph
from spanhyper.core.structure import shadow
from spanhyper.errors import BoundViolationError, PreconditionError
from spanhyper.generators.random_models import derive_seed, sample_bounded_degree
from spanhyper.parallel import parallel_map
from spanhyper.search.embedding import (
    SearchResult,
    SearchStatus,
    find_embedding,
    validate_embedding,
)
from spanhyper.thresholds.formulas import clique_count_estimate

logger = logging.getLogger(__name__)


def hr_construction(g: Hypergraph, r: int) -> Hypergraph:
    """All r-sets of V(g) that contain at least one edge of g."""
    g = as_graph(g)
    if r < 3:
        raise PreconditionError(f"H_r(G) needs r >= 3, got {r}")
    if g.n < r:
        raise PreconditionError(f"H_r(G) needs at least r = {r} vertices, got {g.n}")
    edges = set()
    for a, b in g.edges:
        others = [v for v in g.vertices if v != a and v != b]
        for rest in combinations(others, r - 2):
            edges.add(tuple(sorted((a, b, *rest))))
    h = Hypergraph(r, g.n, tuple(edges))
    bound = g.m * g.n ** (r - 2)
    if h.m > bound:
        raise BoundViolationError(f"H_r(G) has {h.m} edges, above e(G) n^(r-2) = {bound}")
    return h


def kr_construction(g: Hypergraph, r: int) -> Hypergraph:
    """One hyperedge per r-clique of g."""
    g = as_graph(g)
    if r < 3:
        raise PreconditionError(f"K_r(G) needs r >= 3, got {r}")
    edges = set()
    for clique in nx.find_cliques(g.to_networkx()):
        if len(clique) >= r:
            edges.update(combinations(sorted(clique), r))
    h = Hypergraph(r, g.n, tuple(edges))
    bound = g.m * g.max_degree ** (r - 2)
    if h.m > bound:
        raise BoundViolationError(f"K_r(G) has {h.m} edges, above e(G) Delta(G)^(r-2) = {bound}")
    return h


def universality_lower_bound(n: int, r: int, delta: int) -> float:
    """n^(r - r/Delta): growth order of the edge count of any universal hypergraph."""
    if delta < 1:
        raise PreconditionError(f"delta must be at least 1, got {delta}")
    return float(n) ** (r - r / delta)


def random_universal_edge_estimate(n: int, r: int, delta: int) -> float:
    """n^(r - 1/Delta) (ln n)^(1/Delta): edge order of the random universal hypergraph."""
    if delta < 1:
        raise PreconditionError(f"delta must be at least 1, got {delta}")
    return float(n) ** (r - 1 / delta) * math.log(n) ** (1 / delta)


@dataclass
class CliqueReport:
    n: int
    r: int
    p: float
    measured: int
    estimate: float

    @property
    def ratio(self) -> Optional[float]:
        return self.measured / self.estimate if self.estimate else None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "p": self.p,
            "measured": self.measured,
            "estimate": self.estimate,
            "ratio": self.ratio,
        }


def clique_report(g: Hypergraph, r: int, p: float) -> CliqueReport:
    """Measured r-clique count of g next to n^r p^C(r,2)."""
    measured = kr_construction(g, r).m
    return CliqueReport(g.n, r, p, measured, clique_count_estimate(g.n, r, p))


def shadow_lift(g: Graph, f: Hypergraph, budget: Optional[int] = None) -> SearchResult:
    """Embed the shadow of f into g; the same map embeds f into K_r(g)."""
    return find_embedding(g, shadow(f), spanning=False, budget=budget)


@dataclass
class SampleOutcome:
    sample: int
    seed: int
    edges: int
    status: SearchStatus
    lifted: bool = False


@dataclass
class UniversalityReport:
    n: int
    r: int
    delta: int
    seed: int
    outcomes: list[SampleOutcome] = field(default_factory=list)

    @property
    def samples(self) -> int:
        return len(self.outcomes)

    @property
    def successes(self) -> int:
        return sum(o.status == SearchStatus.FOUND for o in self.outcomes)

    @property
    def fraction(self) -> float:
        return self.successes / self.samples if self.samples else 0.0

    @property
    def exhausted(self) -> int:
        return sum(o.status == SearchStatus.BUDGET_EXHAUSTED for o in self.outcomes)

    def failures(self) -> list[SampleOutcome]:
        return [o for o in self.outcomes if o.status != SearchStatus.FOUND]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "delta": self.delta,
            "seed": self.seed,
            "samples": self.samples,
            "successes": self.successes,
            "fraction": self.fraction,
            "budget_exhausted": self.exhausted,
            "lifted": sum(o.lifted for o in self.outcomes),
            "failures": [
                {"sample": o.sample, "seed": o.seed, "edges": o.edges, "status": o.status.value}
                for o in self.failures()
            ],
        }


@dataclass(frozen=True)
class _SampleTask:
    host: Hypergraph
    graph: Optional[Graph]
    n: int
    delta: int
    sample: int
    seed: int
    budget: Optional[int]
    rejection_factor: Optional[int] = None


def _check_sample(task: _SampleTask) -> SampleOutcome:
    host = task.host
    f = sample_bounded_degree(
        task.n, host.r, task.delta, task.seed, rejection_factor=task.rejection_factor
    )
    if task.graph is not None:
        lifted = shadow_lift(task.graph, f, task.budget)
        if lifted.found:
            if not validate_embedding(host, f, lifted.embedding):
                raise BoundViolationError(f"Sample {task.sample}: lifted embedding is invalid")
            return SampleOutcome(task.sample, task.seed, f.m, SearchStatus.FOUND, lifted=True)
    result = find_embedding(host, f, spanning=False, budget=task.budget)
    return SampleOutcome(task.sample, task.seed, f.m, result.status)


def verify_universal_sampled(
    h_univ: Hypergraph,
    n: int,
    r: int,
    delta: int,
    samples: int,
    seed: int,
    graph: Optional[Hypergraph] = None,
    budget: Optional[int] = None,
    jobs: Optional[int] = 1,
    rejection_factor: Optional[int] = None,
) -> UniversalityReport:
    """Containment of sampled members of F^(r)(n, delta) in h_univ.

    When graph is given, h_univ is taken to be K_r(graph) and the shadow-lift
    path is tried before direct search.
    """
    if h_univ.r != r:
        raise PreconditionError(f"Host has r={h_univ.r}, expected r={r}")
    if h_univ.n < n:
        raise PreconditionError(f"Host has {h_univ.n} vertices, fewer than n={n}")
    if samples < 1:
        raise PreconditionError(f"samples must be at least 1, got {samples}")
    g = None if graph is None else as_graph(graph)
    if g is not None and g.n != h_univ.n:
        raise PreconditionError(f"Graph has {g.n} vertices, host {h_univ.n}")

    tasks = [
        _SampleTask(h_univ, g, n, delta, s, derive_seed(seed, s), budget, rejection_factor)
        for s in range(samples)
    ]
    report = UniversalityReport(n, r, delta, seed, parallel_map(_check_sample, tasks, jobs))
    logger.info(
        "universality: %d/%d samples embedded (%d budget-exhausted)",
        report.successes, report.samples, report.exhausted,
    )
    return report
