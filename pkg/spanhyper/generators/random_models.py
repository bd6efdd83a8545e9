"""
Seeded random hypergraph models.

All randomness is derived from a 64-bit seed through numpy SeedSequence, so
a (seed, keys...) pair always names the same stream. gnp draws one uniform
variate per possible edge in lexicographic edge order and keeps the edges
whose variate falls below p; two calls with the same seed and p1 < p2 give
nested hosts.
"""

import logging
from itertools import combinations
from math import comb
from typing import Optional

import numpy as np

from spanhyper.config import DEFAULT_LIMITS
from spanhyper.core.hypergraph import Hypergraph, make_hypergraph
from spanhyper.errors import PreconditionError

logger = logging.getLogger(__name__)

SEED_LIMIT = 2**64


def _check_seed(seed: int) -> int:
    seed = int(seed)
    if not 0 <= seed < SEED_LIMIT:
        raise PreconditionError(f"Seed must be a 64-bit unsigned integer, got {seed}")
    return seed


def rng_for(seed: int, *keys: int) -> np.random.Generator:
    """Generator for the stream named by (seed, keys)."""
    sequence = np.random.SeedSequence(_check_seed(seed), spawn_key=tuple(int(k) for k in keys))
    return np.random.default_rng(sequence)


def derive_seed(seed: int, *keys: int) -> int:
    """A child seed that is a pure function of (seed, keys)."""
    sequence = np.random.SeedSequence(_check_seed(seed), spawn_key=tuple(int(k) for k in keys))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def _check_size(n: int, r: int) -> None:
    if r < 2:
        raise PreconditionError(f"Uniformity must be at least 2, got {r}")
    if n < r:
        raise PreconditionError(f"Need n >= r, got n={n}, r={r}")


def edge_variates(n: int, r: int, seed: int) -> np.ndarray:
    """One uniform in [0, 1) per possible edge, in lexicographic edge order."""
    _check_size(n, r)
    return rng_for(seed).random(comb(n, r))


def hypergraph_below(n: int, r: int, variates: np.ndarray, p: float) -> Hypergraph:
    """Edges whose variate is below p; the coupling used by gnp and threshold curves."""
    keep = variates < p
    edges = [e for e, flag in zip(combinations(range(1, n + 1), r), keep) if flag]
    return make_hypergraph(r, n, edges)


def gnp(n: int, r: int, p: float, seed: int) -> Hypergraph:
    """H^(r)(n, p): each of the C(n, r) possible edges independently with probability p."""
    if not 0.0 <= p <= 1.0:
        raise PreconditionError(f"Probability must lie in [0, 1], got {p}")
    return hypergraph_below(n, r, edge_variates(n, r, seed), p)


def gnm(n: int, r: int, m: int, seed: int) -> Hypergraph:
    """H^(r)(n, m): a uniformly random m-subset of the possible edges."""
    _check_size(n, r)
    total = comb(n, r)
    if not 0 <= m <= total:
        raise PreconditionError(f"Edge count must lie in 0..{total}, got {m}")
    chosen = set(rng_for(seed).choice(total, size=m, replace=False).tolist())
    edges = [e for i, e in enumerate(combinations(range(1, n + 1), r)) if i in chosen]
    return make_hypergraph(r, n, edges)


def sample_bounded_degree(
    n: int,
    r: int,
    delta: int,
    seed: int,
    rejection_factor: Optional[int] = None,
    max_rejections: Optional[int] = None,
) -> Hypergraph:
    """A random member of F^(r)(n, delta) by degree-capped edge proposals.

    Uniform random r-sets are proposed and accepted while every vertex stays
    below degree delta. Sampling stops once max_rejections proposals have been
    turned down, by default rejection_factor * n * delta with the factor taken
    from the settings (50).
    """
    if delta < 1:
        raise PreconditionError(f"Maximum degree must be at least 1, got {delta}")
    if r < 2:
        raise PreconditionError(f"Uniformity must be at least 2, got {r}")
    if n < r:
        return make_hypergraph(r, max(n, 0), ())

    if max_rejections is None:
        factor = rejection_factor or DEFAULT_LIMITS["rejection_factor"]
        max_rejections = factor * n * delta
    rng = rng_for(seed)
    degree = np.zeros(n + 1, dtype=np.int64)
    edges: set[tuple[int, ...]] = set()
    rejections = 0

    # at most n * delta / r acceptances
    while rejections < max_rejections:
        edge = tuple(sorted((rng.choice(n, size=r, replace=False) + 1).tolist()))
        if edge in edges or any(degree[v] >= delta for v in edge):
            rejections += 1
            continue
        edges.add(edge)
        for v in edge:
            degree[v] += 1

    logger.debug(
        "sample_bounded_degree n=%d r=%d delta=%d: %d edges, %d rejections",
        n, r, delta, len(edges), rejections,
    )
    return make_hypergraph(r, n, edges)
