"""Partition of the host's vertices into a reservoir V_0 and t small classes."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Optional, Union

from spanhyper.errors import PreconditionError
from spanhyper.generators.random_models import rng_for

logger = logging.getLogger(__name__)


@dataclass
class HostPartition:
    classes: tuple[frozenset[int], ...]
    t: int
    epsilon: Fraction
    n: int
    # True when |V_i| = eps n / (10 t) holds without rounding.
    conformant: bool = False

    @property
    def v0(self) -> frozenset[int]:
        return self.classes[0]

    def upto(self, i: int) -> frozenset[int]:
        """V_0 u ... u V_i."""
        return frozenset().union(*self.classes[: i + 1])

    def violations(self) -> list[str]:
        problems = []
        seen: set[int] = set()
        for i, cls in enumerate(self.classes):
            if seen & cls:
                problems.append(f"class {i} overlaps an earlier class")
            seen |= cls
        if seen != set(range(1, self.n + 1)):
            problems.append(f"classes do not cover 1..{self.n}")
        if len(self.classes) != self.t + 1:
            problems.append(f"expected {self.t + 1} classes, got {len(self.classes)}")
        return problems

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "epsilon": str(self.epsilon),
            "conformant": self.conformant,
            "class_sizes": [len(c) for c in self.classes],
            "classes": [sorted(c) for c in self.classes],
        }


def host_partition(
    n: int,
    t: int,
    epsilon: Union[Fraction, float, str],
    class_size: Optional[int] = None,
    seed: Optional[int] = None,
) -> HostPartition:
    """V_1..V_t of size floor(eps n / (10 t)) (or class_size), V_0 the rest.

    Without a seed V_0 is the low block of labels and V_t the high block; with
    a seed the labels are shuffled first.
    """
    if not isinstance(epsilon, Fraction):
        epsilon = Fraction(epsilon).limit_denominator(10**9)
    if t < 1:
        raise PreconditionError(f"t must be at least 1, got {t}")
    if not 0 < epsilon <= 1:
        raise PreconditionError(f"epsilon must lie in (0, 1], got {epsilon}")
    exact = epsilon * n / (10 * t)
    size = floor(exact) if class_size is None else class_size
    if size < 0 or size * t > n:
        raise PreconditionError(f"{t} classes of size {size} do not fit in {n} vertices")

    labels = list(range(1, n + 1))
    if seed is not None:
        labels = [labels[i] for i in rng_for(seed).permutation(n)]
    reservoir = n - size * t
    classes = [frozenset(labels[:reservoir])]
    for i in range(t):
        start = reservoir + i * size
        classes.append(frozenset(labels[start : start + size]))

    conformant = class_size is None and exact.denominator == 1
    logger.debug("host partition n=%d t=%d: |V_0|=%d, |V_i|=%d", n, t, reservoir, size)
    return HostPartition(tuple(classes), t, epsilon, n, conformant)
