"""
Partition of a pattern into 3-independent classes X_0, ..., X_t.

The third power of the shadow graph is greedily coloured; colour classes are
3-independent in the pattern. Classes are sorted by size and padded at the
front with empty classes up to t - 1. From the largest class, floor(eps n)
vertices sharing the most frequent canonical profile form X_t, their
neighbourhood forms X_0, and X_0 (and X_t) are removed from the colour classes.

Without a t override the lemma's bound eps <= 1 / (|P| (t - 1)) applies, with
|P| the number of distinct profile classes found in the pattern and
t = r^3 Delta^3. With an override, t is raised to (colours + 1) when the
colouring needs more than t - 1 colours.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Optional, Union

import networkx as nx

from spanhyper.core.hypergraph import Hypergraph
from spanhyper.core.profiles import CanonicalProfile, canonical_profile_of, profile_classes
from spanhyper.core.structure import is_t_independent, neighborhood_of_set
from spanhyper.errors import PartitionError, PreconditionError

logger = logging.getLogger(__name__)

COLORING_STRATEGIES = (
    "largest_first",
    "saturation_largest_first",
    "smallest_last",
    "independent_set",
    "connected_sequential_bfs",
)


@dataclass
class EmbedPartition:
    classes: tuple[frozenset[int], ...]
    t: int
    epsilon: Fraction
    profile: Optional[CanonicalProfile]
    colors: int = 0
    strategy: str = ""
    t_requested: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def x0(self) -> frozenset[int]:
        return self.classes[0]

    @property
    def xt(self) -> frozenset[int]:
        return self.classes[self.t]

    def violations(self, f: Hypergraph) -> list[str]:
        """Invariant violations of this partition with respect to f (empty when valid)."""
        problems = []
        seen: set[int] = set()
        for i, cls in enumerate(self.classes):
            if seen & cls:
                problems.append(f"class {i} overlaps an earlier class")
            seen |= cls
        if seen != set(f.vertices):
            problems.append("classes do not cover V(F)")
        if len(self.xt) != floor(self.epsilon * f.n):
            problems.append(f"|X_t| = {len(self.xt)} != floor(eps n)")
        if set(self.x0) != set(neighborhood_of_set(f, self.xt)):
            problems.append("X_0 is not N(X_t)")
        for x in self.xt:
            if canonical_profile_of(f, x) != self.profile:
                problems.append(f"vertex {x} of X_t has a different profile")
        for i in range(1, self.t + 1):
            if not is_t_independent(f, self.classes[i], 3):
                problems.append(f"class {i} is not 3-independent")
        return problems

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "t_requested": self.t_requested,
            "epsilon": str(self.epsilon),
            "colors": self.colors,
            "strategy": self.strategy,
            "profile": self.profile.describe() if self.profile else None,
            "class_sizes": [len(c) for c in self.classes],
            "classes": [sorted(c) for c in self.classes],
            "notes": list(self.notes),
        }


def lemma_epsilon_bound(profile_count: int, t: int) -> Fraction:
    return Fraction(1, max(profile_count, 1) * (t - 1))


def _colour_classes(g3: nx.Graph, strategy: str) -> list[frozenset[int]]:
    colouring = nx.greedy_color(g3, strategy=strategy)
    groups: dict[int, set[int]] = {}
    for v, c in colouring.items():
        groups.setdefault(c, set()).add(v)
    return sorted((frozenset(g) for g in groups.values()), key=lambda g: (len(g), -min(g)))


def partition_pattern(
    f: Hypergraph,
    delta: int,
    epsilon: Union[Fraction, float, str],
    t_override: Optional[int] = None,
) -> EmbedPartition:
    """Split V(f) into X_0, ..., X_t with 3-independent X_1..X_t and a uniform-profile X_t."""
    if not isinstance(epsilon, Fraction):
        epsilon = Fraction(epsilon).limit_denominator(10**9)
    if f.max_degree > delta:
        raise PreconditionError(f"Pattern has maximum degree {f.max_degree} > delta = {delta}")
    if not 0 < epsilon <= 1:
        raise PreconditionError(f"epsilon must lie in (0, 1], got {epsilon}")
    if t_override is not None and t_override < 2:
        raise PreconditionError(f"t must be at least 2, got {t_override}")

    t_requested = t_override if t_override is not None else f.r**3 * delta**3
    if t_override is None:
        bound = lemma_epsilon_bound(len(profile_classes(f)), t_requested)
        if epsilon > bound:
            raise PreconditionError(
                f"epsilon = {epsilon} exceeds the partition bound {bound}; pass t_override"
            )

    size = floor(epsilon * f.n)
    g3 = nx.power(f.to_networkx(), 3)

    best = None
    for strategy in COLORING_STRATEGIES:
        ordered = _colour_classes(g3, strategy)
        largest = ordered[-1] if ordered else frozenset()
        counts = profile_classes(f, largest)
        chosen = next(iter(counts.items()), (None, []))
        fits = len(chosen[1]) >= size
        rank = (not fits, len(ordered) > t_requested - 1, len(ordered))
        if best is None or rank < best[0]:
            best = (rank, strategy, ordered, chosen, counts)

    _, strategy, ordered, (profile, members), counts = best
    if len(members) < size:
        raise PartitionError(
            f"No profile class of size {size} in the largest colour class "
            f"(largest available: {len(members)})",
            {p.describe(): len(vs) for p, vs in counts.items()},
        )

    notes = []
    t = t_requested
    if len(ordered) > t - 1:
        t = len(ordered) + 1
        notes.append(f"t raised from {t_requested} to {t}: colouring needs {len(ordered)} colours")
        logger.info(notes[-1])

    xt = frozenset(members[:size])
    x0 = frozenset(neighborhood_of_set(f, xt))
    padded = [frozenset()] * (t - 1 - len(ordered)) + list(ordered)
    middle = [cls - x0 for cls in padded[:-1]]
    middle.append(padded[-1] - x0 - xt if padded else frozenset())

    classes = (x0, *middle, xt)
    partition = EmbedPartition(
        classes=classes,
        t=t,
        epsilon=epsilon,
        profile=profile,
        colors=len(ordered),
        strategy=strategy,
        t_requested=t_requested,
        notes=notes,
    )
    logger.debug("partition: %s", partition.to_dict()["class_sizes"])
    return partition
