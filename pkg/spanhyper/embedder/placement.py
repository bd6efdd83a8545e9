"""
Vertex-disjoint placement of profile copies in a host.

A profile (Z, E_1, E_2) becomes a small pattern on Z (plus, optionally, a
centre vertex joined to every link set). Copies are placed one after another
with EmbeddingSearch restricted to the still-unused allowed vertices; when a
copy cannot be placed the previous copy moves to its next embedding. All
searches share one node budget.
"""

import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from spanhyper.core.hypergraph import Hypergraph
from spanhyper.core.profiles import Profile, profile
from spanhyper.errors import BudgetExhaustedError
from spanhyper.generators.random_models import derive_seed
from spanhyper.search.embedding import EmbeddingSearch, NodeCounter

logger = logging.getLogger(__name__)


def profile_pattern(p: Profile, r: int, with_center: bool = False) -> Hypergraph:
    """The profile as a hypergraph on 1..k (Z), with the centre as k + 1 when requested."""
    k = p.size
    edges = [tuple(i + 1 for i in e) for e in p.e1]
    if with_center:
        edges.extend(tuple(i + 1 for i in part) + (k + 1,) for part in p.e2)
        return Hypergraph(r, k + 1, tuple(edges))
    return Hypergraph(r, k, tuple(edges))


def reference_profiles(r: int, delta: int) -> list[Profile]:
    """k-star profiles for k = 1..delta: k disjoint link sets and no edge inside Z."""
    out = []
    for k in range(1, delta + 1):
        size = k * (r - 1)
        e2 = tuple(tuple(range(j * (r - 1), (j + 1) * (r - 1))) for j in range(k))
        out.append(Profile(center=0, zvertices=tuple(range(1, size + 1)), e1=(), e2=e2))
    return out


@dataclass
class PlacedCopy:
    """One placed copy: the images of Z (in profile order) and its link images."""

    zimages: tuple[int, ...]
    link: frozenset[tuple[int, ...]]
    witness: Optional[int] = None


@dataclass
class Placement:
    copies: list[PlacedCopy] = field(default_factory=list)
    complete: bool = False
    requested: int = 0
    nodes: int = 0
    budget_exhausted: bool = False

    @property
    def used(self) -> frozenset[int]:
        return frozenset(v for c in self.copies for v in c.zimages)

    def link_family(self) -> list[frozenset[tuple[int, ...]]]:
        return [c.link for c in self.copies]

    def to_dict(self) -> dict:
        return {
            "requested": self.requested,
            "placed": len(self.copies),
            "complete": self.complete,
            "nodes": self.nodes,
            "budget_exhausted": self.budget_exhausted,
        }


def _copy_from(p: Profile, mapping: dict[int, int], with_center: bool) -> PlacedCopy:
    zimages = tuple(mapping[i + 1] for i in range(p.size))
    link = frozenset(tuple(sorted(zimages[i] for i in part)) for part in p.e2)
    witness = mapping.get(p.size + 1) if with_center else None
    return PlacedCopy(zimages, link, witness)


def place_pattern_copies(
    host: Hypergraph,
    profiles: Sequence[Profile],
    allowed: Iterable[int],
    seed: int = 0,
    budget: Optional[int] = None,
    with_center: bool = False,
) -> Placement:
    """Vertex-disjoint copies of each profile in order, inside allowed.

    A centre witness, when requested, may be any allowed vertex outside the
    Z images; witnesses are not reserved. On failure the longest prefix
    placed is returned with complete=False.
    """
    allowed = frozenset(allowed)
    patterns = [profile_pattern(p, host.r, with_center) for p in profiles]
    counter = NodeCounter(budget)
    best: list[PlacedCopy] = []
    stack: list[PlacedCopy] = []

    def extend(i: int, used: frozenset[int]) -> bool:
        nonlocal best
        if len(stack) > len(best):
            best = list(stack)
        if i == len(patterns):
            return True
        pool = allowed - used
        search = EmbeddingSearch(
            host, patterns[i], pool, counter=counter, order_seed=derive_seed(seed, i)
        )
        for emb in search:
            placed = _copy_from(profiles[i], emb.mapping, with_center)
            stack.append(placed)
            if extend(i + 1, used | frozenset(placed.zimages)):
                return True
            stack.pop()
        return False

    exhausted = False
    try:
        complete = extend(0, frozenset())
    except BudgetExhaustedError:
        complete, exhausted = False, True
        logger.info("profile placement ran out of budget after %d nodes", counter.count)

    copies = list(stack) if complete else best
    return Placement(
        copies=copies,
        complete=complete,
        requested=len(patterns),
        nodes=counter.count,
        budget_exhausted=exhausted,
    )


def place_profile_copies(
    host: Hypergraph,
    f: Hypergraph,
    centers: Sequence[int],
    allowed: Iterable[int],
    seed: int = 0,
    budget: Optional[int] = None,
    with_center: bool = False,
) -> Placement:
    """Disjoint copies of the profiles of f's centres, in the order given."""
    return place_pattern_copies(
        host, [profile(f, x) for x in centers], allowed, seed, budget, with_center
    )
