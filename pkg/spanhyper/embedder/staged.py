"""
Staged embedding of a bounded-degree pattern into a host.

Stage 0 places the closed neighbourhood structure of every x in X_t into V_0
as vertex-disjoint copies, which embeds X_0 = N(X_t). Stage i = 1..t embeds
X_i through a left-saturating matching in B(host, L_i, V_i*), where L(x) holds
the images of the already embedded (r-1)-sets of link(x) and V_i* is
V_0 u ... u V_i minus the vertices used so far. Since every edge of the
pattern meets X_i at most once, each matched pair closes exactly the edges
whose other vertices were embedded earlier.

With lookahead, each stage i < t is matched jointly with L_t over the unused
vertices, so the stage never takes a vertex the zero-slack last stage needs.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from spanhyper.core.hypergraph import Hypergraph
from spanhyper.core.profiles import profile
from spanhyper.core.structure import link
from spanhyper.embedder.aux_graph import (
    MatchingResult,
    build_aux,
    hall_matching,
    joint_adjacency,
    max_bipartite_matching,
)
from spanhyper.embedder.host import HostPartition
from spanhyper.embedder.partition import EmbedPartition
from spanhyper.embedder.placement import place_profile_copies
from spanhyper.errors import EmbeddingInvariantError, PreconditionError
from spanhyper.generators.random_models import derive_seed
from spanhyper.search.embedding import Embedding, validate_embedding

logger = logging.getLogger(__name__)


@dataclass
class StageRecord:
    stage: int
    size: int
    available: int
    matched: bool
    witness: Optional[dict] = None

    def to_dict(self) -> dict:
        return {
            "stage": self.stage,
            "size": self.size,
            "available": self.available,
            "matched": self.matched,
            "witness": self.witness,
        }


@dataclass
class EmbedTrace:
    stages: list[StageRecord] = field(default_factory=list)
    success: bool = False
    embedding: Optional[Embedding] = None
    failure: Optional[str] = None
    failed_stage: Optional[int] = None
    attempt: int = 0
    seed: int = 0

    def to_dict(self) -> dict:
        return {
            "success": self.success,
            "failure": self.failure,
            "failed_stage": self.failed_stage,
            "attempt": self.attempt,
            "seed": self.seed,
            "stages": [s.to_dict() for s in self.stages],
            "embedding": self.embedding.to_dict() if self.embedding else None,
        }


def _check_inputs(host: Hypergraph, f: Hypergraph, hp: HostPartition, ep: EmbedPartition):
    if host.r != f.r:
        raise PreconditionError(f"Uniformity mismatch: host r={host.r}, pattern r={f.r}")
    if host.n != f.n:
        raise PreconditionError(f"Spanning embedding needs equal orders ({f.n} != {host.n})")
    if hp.n != host.n or hp.violations():
        raise PreconditionError(f"Host partition is invalid: {hp.violations() or 'wrong n'}")
    if hp.t != ep.t:
        raise PreconditionError(f"Host partition has t={hp.t}, pattern partition t={ep.t}")
    problems = ep.violations(f)
    if problems:
        raise PreconditionError(f"Pattern partition is invalid: {'; '.join(problems)}")


class _Run:
    """One attempt of the staged procedure."""

    def __init__(self, host, f, hp, ep, seed, budget, lookahead):
        self.host = host
        self.f = f
        self.hp = hp
        self.ep = ep
        self.seed = seed
        self.budget = budget
        self.lookahead = lookahead
        self.phi: dict[int, int] = {}
        self.trace = EmbedTrace(seed=seed)

    def family(self, x: int) -> frozenset[tuple[int, ...]]:
        """L(x): images of the fully embedded (r-1)-sets of link(x)."""
        phi = self.phi
        return frozenset(
            tuple(sorted(phi[u] for u in part))
            for part in link(self.f, x)
            if all(u in phi for u in part)
        )

    def fail(self, kind: str, stage: int) -> EmbedTrace:
        self.trace.failure = kind
        self.trace.failed_stage = stage
        logger.info("embedding failed at stage %d (%s)", stage, kind)
        return self.trace

    def stage_zero(self) -> bool:
        centers = sorted(self.ep.xt)
        placement = place_profile_copies(
            self.host, self.f, centers, self.hp.v0, self.seed, self.budget, with_center=True
        )
        record = StageRecord(0, len(self.ep.x0), len(self.hp.v0), placement.complete)
        self.trace.stages.append(record)
        if not placement.complete:
            record.witness = placement.to_dict()
            return False
        for x, copy in zip(centers, placement.copies):
            for z, image in zip(profile(self.f, x).zvertices, copy.zimages):
                self.phi[z] = image
        return True

    def check_slack(self, i: int, available: int, size: int) -> None:
        if not self.hp.conformant or i >= self.ep.t:
            return
        floor_ = Fraction(9, 10) * self.ep.epsilon * self.f.n
        if available - size < floor_:
            raise EmbeddingInvariantError(
                f"Stage {i}: |V_i*| - |X_i| = {available - size} < 9/10 eps n = {floor_}"
            )

    def stage(self, i: int) -> bool:
        used = set(self.phi.values())
        available = self.hp.upto(i) - used
        xs = sorted(self.ep.classes[i])
        self.check_slack(i, len(available), len(xs))

        aux = build_aux(self.host, [self.family(x) for x in xs], available)
        labels = list(xs)
        if self.lookahead and i < self.ep.t:
            finals = sorted(self.ep.xt)
            unused = frozenset(self.host.vertices) - used
            aux_t = build_aux(self.host, [self.family(y) for y in finals], unused)
            result = hall_matching(joint_adjacency([aux, aux_t]))
            labels += finals
        else:
            result = max_bipartite_matching(aux)

        record = StageRecord(i, len(xs), len(available), result.saturated)
        self.trace.stages.append(record)
        if not result.saturated:
            record.witness = self._witness(result, labels)
            return False

        for k, x in enumerate(xs):
            w = result.matching[k]
            if w in used:
                raise EmbeddingInvariantError(f"Stage {i} reused host vertex {w}")
            used.add(w)
            self.phi[x] = w
        return True

    @staticmethod
    def _witness(result: MatchingResult, labels: list[int]) -> dict:
        return {
            "violator": [labels[j] for j in result.violator],
            "neighbours": sorted(result.violator_neighbors),
            "matched": len(result.matching),
        }

    def run(self) -> EmbedTrace:
        if not self.stage_zero():
            return self.fail("placement", 0)
        for i in range(1, self.ep.t + 1):
            if not self.stage(i):
                return self.fail("hall", i)

        embedding = Embedding(dict(self.phi))
        if not validate_embedding(self.host, self.f, embedding):
            raise EmbeddingInvariantError("Staged embedding failed validation")
        self.trace.success = True
        self.trace.embedding = embedding
        return self.trace


def embed_universal(
    host: Hypergraph,
    f: Hypergraph,
    hp: HostPartition,
    ep: EmbedPartition,
    seed: int = 0,
    attempts: int = 3,
    lookahead: bool = True,
    budget: Optional[int] = None,
) -> EmbedTrace:
    """Embed f into host stage by stage; the returned trace records the attempt used.

    Attempts differ only in the seed driving stage-0 placement. A failed run
    returns the trace of the last attempt.
    """
    _check_inputs(host, f, hp, ep)
    if attempts < 1:
        raise PreconditionError(f"attempts must be at least 1, got {attempts}")

    trace = EmbedTrace(seed=seed)
    for attempt in range(attempts):
        run = _Run(host, f, hp, ep, derive_seed(seed, attempt), budget, lookahead)
        trace = run.run()
        trace.attempt = attempt
        if trace.success:
            logger.info("embedded %d vertices on attempt %d", f.n, attempt)
            break
    return trace
