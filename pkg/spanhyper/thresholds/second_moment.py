"""
Exact second-moment diagnostics for the uniform edge-count model H(n, m).

X counts copies of a pattern F in a random host with exactly m of the
N = C(n, r) possible edges. With h(u) = C(N-u, m-u)/C(N, m), the probability
that u fixed edges are all present,

    E(X)   = sum over copies A of h(e(A))
    E(X^2) = sum over pairs (A, B) of h(|E(A) u E(B)|)

and f = E(X^2)/E(X)^2 bounds P(X = 0) <= f - 1. Both moments are also
available from a full enumeration of hosts, which is the test oracle.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from math import comb, factorial, perm
from typing import Optional

from spanhyper.config import DEFAULT_LIMITS
from spanhyper.core.hypergraph import Hypergraph
from spanhyper.errors import OracleLimitError, PreconditionError

logger = logging.getLogger(__name__)

Copy = tuple[frozenset[int], frozenset[tuple[int, ...]]]


def automorphism_count(h: Hypergraph, max_vertices: Optional[int] = None) -> int:
    """|Aut(h)| by backtracking over the non-isolated vertices.

    Isolated vertices contribute a factorial factor and are not searched.
    """
    cap = max_vertices or DEFAULT_LIMITS["automorphism_vertex_cap"]
    support = [v for v in h.vertices if h.degrees[v] > 0]
    isolated = h.n - len(support)
    if len(support) > cap:
        raise OracleLimitError(f"Automorphism search over {len(support)} vertices (cap {cap})")

    order = sorted(support, key=lambda v: (-h.degrees[v], v))
    # Each edge is checked once its last vertex in `order` is placed.
    position = {v: i for i, v in enumerate(order)}
    closing: dict[int, list[tuple[int, ...]]] = {v: [] for v in order}
    for e in h.edges:
        closing[max(e, key=position.__getitem__)].append(e)

    image: dict[int, int] = {}
    used: set[int] = set()
    count = 0

    def extend(i: int) -> None:
        nonlocal count
        if i == len(order):
            count += 1
            return
        x = order[i]
        for y in support:
            if y in used or h.degrees[y] != h.degrees[x]:
                continue
            image[x] = y
            if all(h.has_edge(image[u] for u in e) for e in closing[x]):
                used.add(y)
                extend(i + 1)
                used.discard(y)
            del image[x]

    extend(0)
    return count * factorial(isolated)


def count_copies(pattern: Hypergraph, n: int, max_vertices: Optional[int] = None) -> int:
    """X_F(K^(r)_n) = n! / (|Aut(F)| (n - v(F))!)."""
    if pattern.n > n:
        raise PreconditionError(f"Pattern has {pattern.n} vertices, more than n={n}")
    aut = automorphism_count(pattern, max_vertices)
    return factorial(n) // (aut * factorial(n - pattern.n))


def enumerate_copies(pattern: Hypergraph, n: int, max_maps: int = 2_000_000) -> list[Copy]:
    """All distinct copies of pattern in K^(r)_n as (vertex set, edge set) pairs."""
    if pattern.n > n:
        raise PreconditionError(f"Pattern has {pattern.n} vertices, more than n={n}")
    maps = perm(n, pattern.n)
    if maps > max_maps:
        raise OracleLimitError(f"Copy enumeration needs {maps} injective maps (cap {max_maps})")
    seen: set[Copy] = set()
    for images in permutations(range(1, n + 1), pattern.n):
        edges = frozenset(tuple(sorted(images[v - 1] for v in e)) for e in pattern.edges)
        seen.add((frozenset(images), edges))
    return sorted(seen, key=lambda c: (sorted(c[0]), sorted(c[1])))


@dataclass
class SecondMomentReport:
    model: tuple[int, int, int]
    copies: int
    ex: Fraction
    ex2: Fraction
    f: Optional[Fraction]
    chebyshev_bound: Optional[Fraction]
    pattern: Optional[Hypergraph] = field(default=None, repr=False)

    def to_dict(self) -> dict:
        n, r, m = self.model
        return {
            "model": {"n": n, "r": r, "m": m},
            "copies": self.copies,
            "ex": str(self.ex),
            "ex2": str(self.ex2),
            "f": None if self.f is None else str(self.f),
            "f_float": None if self.f is None else float(self.f),
            "chebyshev_bound": None if self.chebyshev_bound is None else str(self.chebyshev_bound),
        }


def _check_universe(pattern: Hypergraph, n: int, cap: Optional[int]) -> int:
    universe = comb(n, pattern.r)
    cap = cap or DEFAULT_LIMITS["pair_universe_cap"]
    if universe > cap:
        raise OracleLimitError(f"C({n},{pattern.r}) = {universe} exceeds the cap {cap}")
    return universe


def second_moment_ratio(
    pattern: Hypergraph,
    n: int,
    m: int,
    universe_cap: Optional[int] = None,
    copies_cap: Optional[int] = None,
    automorphism_cap: Optional[int] = None,
) -> SecondMomentReport:
    """Exact E(X), E(X^2) and f for copies of pattern in H(n, m)."""
    total = _check_universe(pattern, n, universe_cap)
    if not 0 <= m <= total:
        raise PreconditionError(f"m must lie in 0..{total}, got {m}")
    copies = enumerate_copies(pattern, n)
    cap = copies_cap or DEFAULT_LIMITS["copies_cap"]
    if len(copies) > cap:
        raise OracleLimitError(f"{len(copies)} copies exceed the cap {cap}")
    expected = count_copies(pattern, n, automorphism_cap)
    if expected != len(copies):
        raise PreconditionError(
            f"Copy count mismatch: automorphisms give {expected}, enumeration {len(copies)}"
        )

    denominator = comb(total, m)

    def present(u: int) -> Fraction:
        return Fraction(comb(total - u, m - u), denominator) if u <= m else Fraction(0)

    ex = len(copies) * present(pattern.m)
    unions = Counter(len(a[1] | b[1]) for a in copies for b in copies)
    ex2 = sum((count * present(u) for u, count in unions.items()), Fraction(0))

    f = ex2 / ex**2 if ex else None
    logger.debug("second moment n=%d m=%d: E=%s E2=%s f=%s", n, m, ex, ex2, f)
    return SecondMomentReport(
        model=(n, pattern.r, m),
        copies=len(copies),
        ex=ex,
        ex2=ex2,
        f=f,
        chebyshev_bound=None if f is None else f - 1,
        pattern=pattern,
    )


@dataclass
class HostEnumeration:
    hosts: int
    ex: Fraction
    ex2: Fraction
    p_zero: Fraction


def host_enumeration_oracle(
    pattern: Hypergraph, n: int, m: int, host_cap: Optional[int] = None
) -> HostEnumeration:
    """E(X), E(X^2) and P(X = 0) over every host with exactly m edges."""
    all_edges = list(combinations(range(1, n + 1), pattern.r))
    hosts = comb(len(all_edges), m)
    cap = host_cap or DEFAULT_LIMITS["host_enumeration_cap"]
    if hosts > cap:
        raise OracleLimitError(f"Host enumeration over {hosts} hosts (cap {cap})")

    bit = {e: 1 << i for i, e in enumerate(all_edges)}
    masks = [sum(bit[e] for e in copy[1]) for copy in enumerate_copies(pattern, n)]

    total = total_sq = zeros = 0
    for chosen in combinations(range(len(all_edges)), m):
        host = 0
        for i in chosen:
            host |= 1 << i
        x = sum(1 for mask in masks if mask & host == mask)
        total += x
        total_sq += x * x
        zeros += x == 0
    return HostEnumeration(
        hosts=hosts,
        ex=Fraction(total, hosts),
        ex2=Fraction(total_sq, hosts),
        p_zero=Fraction(zeros, hosts),
    )


@dataclass
class ChebyshevReport:
    p_zero: Fraction
    bound: Optional[Fraction]
    holds: Optional[bool]
    moments_match: bool
    hosts: int

    def to_dict(self) -> dict:
        return {
            "p_zero": str(self.p_zero),
            "bound": None if self.bound is None else str(self.bound),
            "holds": self.holds,
            "moments_match": self.moments_match,
            "hosts": self.hosts,
        }


def chebyshev_check(report: SecondMomentReport, host_cap: Optional[int] = None) -> ChebyshevReport:
    """Exact P(X = 0) by host enumeration, compared with the bound f - 1."""
    if report.pattern is None:
        raise PreconditionError("The report does not carry its pattern")
    n, _, m = report.model
    oracle = host_enumeration_oracle(report.pattern, n, m, host_cap)
    bound = report.chebyshev_bound
    holds = None if bound is None else oracle.p_zero <= bound
    if holds is False:
        logger.error("P(X=0) = %s exceeds f - 1 = %s", oracle.p_zero, bound)
    return ChebyshevReport(
        p_zero=oracle.p_zero,
        bound=bound,
        holds=holds,
        moments_match=(oracle.ex == report.ex and oracle.ex2 == report.ex2),
        hosts=oracle.hosts,
    )
