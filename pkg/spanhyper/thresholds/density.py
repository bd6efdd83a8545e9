"""
Exact density parameters.

e_sub(h, v) is the largest number of edges spanned by v vertices of h, found
by branch-and-bound over vertex subsets. gamma(h) maximises e_sub(h, v)/(v-2)
over r+1 <= v <= n. fractional_density_m1 is the maximum of e/(v-1) over
subhypergraphs with at least r vertices. Everything is exact (Fraction).
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional

from spanhyper.config import DEFAULT_LIMITS
from spanhyper.core.hypergraph import Hypergraph
from spanhyper.core.structure import components
from spanhyper.errors import BudgetExhaustedError, OracleLimitError, PreconditionError

logger = logging.getLogger(__name__)


@dataclass
class DensityReport:
    gamma: Fraction
    argmax_v: int
    e_sub_table: dict[int, int] = field(default_factory=dict)
    alpha: Fraction = Fraction(0)

    def ratios(self) -> dict[int, Fraction]:
        return {v: Fraction(e, v - 2) for v, e in self.e_sub_table.items()}

    def to_dict(self) -> dict:
        return {
            "gamma": str(self.gamma),
            "gamma_float": float(self.gamma),
            "argmax_v": self.argmax_v,
            "alpha": str(self.alpha),
            "e_sub_table": {str(v): e for v, e in self.e_sub_table.items()},
        }


@dataclass
class SubgraphStats:
    k1: int
    kr: int
    rweight: int
    ecount: int

    def to_dict(self) -> dict:
        return {"k1": self.k1, "kr": self.kr, "rweight": self.rweight, "ecount": self.ecount}


class _DensestSearch:
    """Branch-and-bound for the densest v-vertex subset of one hypergraph."""

    def __init__(self, h: Hypergraph, budget: Optional[int]):
        self.h = h
        self.budget = budget
        self.nodes = 0
        self.order = sorted(h.vertices, key=lambda v: (-h.degrees[v], v))

    def _greedy_lower_bound(self, v: int) -> int:
        """Peel minimum-degree vertices until v remain."""
        alive = set(self.h.vertices)
        live_edges = [set(e) for e in self.h.edges]
        while len(alive) > v:
            deg = {x: 0 for x in alive}
            for e in live_edges:
                for x in e:
                    deg[x] += 1
            victim = min(alive, key=lambda x: (deg[x], -x))
            alive.discard(victim)
            live_edges = [e for e in live_edges if victim not in e]
        return len(live_edges)

    def run(self, v: int) -> int:
        self.best = self._greedy_lower_bound(v)
        self.cap = comb(v, self.h.r)
        self.v = v
        self.excluded: set[int] = set()
        self._descend(0, set(), 0)
        return self.best

    def _live_degree(self, u: int) -> int:
        h = self.h
        return sum(
            1 for idx in h.incidence[u] if not any(x in self.excluded for x in h.edges[idx])
        )

    def _descend(self, idx: int, chosen: set[int], current: int) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExhaustedError(f"e_sub exceeded {self.budget} nodes", self.nodes)

        slots = self.v - len(chosen)
        if slots == 0:
            if current > self.best:
                self.best = current
            return
        remaining = self.order[idx:]
        if len(remaining) < slots:
            return

        live = sorted((self._live_degree(u) for u in remaining), reverse=True)
        bound = current + min(sum(live[:slots]), self.cap - current)
        if bound <= self.best:
            return

        u = self.order[idx]
        gained = sum(
            1 for i in self.h.incidence[u] if all(x == u or x in chosen for x in self.h.edges[i])
        )
        chosen.add(u)
        self._descend(idx + 1, chosen, current + gained)
        chosen.discard(u)

        self.excluded.add(u)
        self._descend(idx + 1, chosen, current)
        self.excluded.discard(u)


def e_sub(h: Hypergraph, v: int, budget: Optional[int] = None) -> int:
    """Maximum number of edges of h spanned by any v vertices."""
    if not h.r <= v <= h.n:
        raise PreconditionError(f"v must lie in {h.r}..{h.n}, got {v}")
    if v == h.n:
        return h.m
    if h.m == 0:
        return 0
    search = _DensestSearch(h, budget)
    result = search.run(v)
    logger.debug("e_sub(v=%d) = %d after %d nodes", v, result, search.nodes)
    return result


def gamma(h: Hypergraph, budget: Optional[int] = None) -> DensityReport:
    """gamma(H) = max over r+1 <= v <= n of e_H(v) / (v - 2), with the full table."""
    if h.n < h.r + 1:
        raise PreconditionError(f"gamma needs n >= r + 1, got n={h.n}, r={h.r}")
    table = {v: e_sub(h, v, budget) for v in range(h.r + 1, h.n + 1)}
    best_v = max(table, key=lambda v: (Fraction(table[v], v - 2), -v))
    return DensityReport(
        gamma=Fraction(table[best_v], best_v - 2),
        argmax_v=best_v,
        e_sub_table=table,
        alpha=Fraction(h.m, comb(h.n, h.r)),
    )


def subgraph_stats(f: Hypergraph) -> SubgraphStats:
    """Isolated vertices, non-trivial components and the weight n - k1 - (r-1) kr."""
    comps = components(f)
    k1 = sum(1 for c in comps if len(c) == 1 and f.degrees[next(iter(c))] == 0)
    kr = len(comps) - k1
    return SubgraphStats(k1=k1, kr=kr, rweight=f.n - k1 - (f.r - 1) * kr, ecount=f.m)


def fractional_density_m1(h: Hypergraph, max_vertices: Optional[int] = None) -> Fraction:
    """max e(F')/(v(F')-1) over subhypergraphs F' with at least r vertices.

    Induced subhypergraphs on the non-isolated vertices dominate, so subsets of
    those are enumerated. Subsets of size s are skipped once C(s, r)/(s - 1)
    cannot beat the best value found.
    """
    if h.m == 0:
        return Fraction(0)
    cap = max_vertices or DEFAULT_LIMITS["m1_vertex_cap"]
    support = [v for v in h.vertices if h.degrees[v] > 0]
    if len(support) > cap:
        raise OracleLimitError(f"m1 enumeration over {len(support)} vertices (cap {cap})")

    best = Fraction(0)
    for size in range(h.r, len(support) + 1):
        if Fraction(min(comb(size, h.r), h.m), size - 1) <= best:
            continue
        for subset in combinations(support, size):
            inside = set(subset)
            count = sum(1 for e in h.edges if inside.issuperset(e))
            value = Fraction(count, size - 1)
            if value > best:
                best = value
    return best
