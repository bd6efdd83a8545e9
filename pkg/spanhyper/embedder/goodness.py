"""
Finite-instance check of the three goodness properties of a host.

Given a host partition V_0, ..., V_t, an edge probability p and a degree
bound Delta:

1. For every profile, V_0 holds floor(eps n) vertex-disjoint copies of its
   (Z, E_1) part; their link images form a family F_2, and every W outside
   V(F_2) with |W| <= (p/2)^-Delta / 2 reaches at least
   (p/2)^Delta |W| floor(eps n) / 4 members of F_2.
2. For k = 1..Delta, every collection L of disjoint k-families of (r-1)-sets
   with |L| <= (p/2)^-k / 2 and V(L) outside V_i has at least
   (p/2)^k |L| |V_i| / 4 neighbours in V_i.
3. For k = 1..Delta and s = ceil((k(r-1) + 2)(p/2)^-k ln n), every L and W of
   size s (W outside V(L)) span at least one edge of B(H, L, W).

Exhaustive mode enumerates every W or L up to the caps and refuses with
OracleLimitError when the count exceeds Settings.exhaustive_goodness_cap.
Sampled mode draws a fixed number of sets per group from per-sample derived
seeds, so reports are reproducible and independent of the worker count.
"""

import logging
import math
from dataclasses import dataclass, field
from itertools import combinations
from math import comb, floor
from typing import Iterator, Optional, Sequence

import numpy as np

from spanhyper.config import DEFAULT_LIMITS
from spanhyper.core.hypergraph import Edge, Hypergraph
from spanhyper.core.profiles import Profile, canonical_profile
from spanhyper.embedder.aux_graph import build_aux, family_vertices
from spanhyper.embedder.host import HostPartition
from spanhyper.embedder.placement import place_pattern_copies, reference_profiles
from spanhyper.errors import OracleLimitError, PreconditionError
from spanhyper.generators.random_models import derive_seed, rng_for
from spanhyper.parallel import parallel_map

logger = logging.getLogger(__name__)

MODES = ("exhaustive", "sampled")

PROPERTY_NAMES = {
    1: "disjoint profile copies with expansion",
    2: "small-family expansion into V_i",
    3: "large pairs span an edge",
}


@dataclass
class PropertyResult:
    name: str
    passed: bool
    checked: int = 0
    witness: Optional[dict] = None
    vacuous: bool = False

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "vacuous": self.vacuous,
            "witness": self.witness,
        }


@dataclass
class GoodnessReport:
    mode: str
    p: float
    delta: int
    seed: int
    samples: int
    properties: list[PropertyResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(prop.passed for prop in self.properties)

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "p": self.p,
            "delta": self.delta,
            "seed": self.seed,
            "samples": self.samples if self.mode == "sampled" else None,
            "passed": self.passed,
            "properties": [prop.to_dict() for prop in self.properties],
        }


@dataclass
class _Outcome:
    checked: int = 0
    witness: Optional[dict] = None
    vacuous: bool = False


@dataclass(frozen=True)
class _GroupTask:
    prop: int
    host: Hypergraph
    hp: HostPartition
    p: float
    delta: int
    mode: str
    samples: int
    seed: int
    cap: int
    budget: Optional[int]
    k: int = 0
    index: int = 0
    profile: Optional[Profile] = None


# ---- Set helpers ----


def _rsets(vertices: Sequence[int], size: int) -> list[Edge]:
    return list(combinations(sorted(vertices), size))


def _families(sets: Sequence[Edge], k: int, size: int) -> Iterator[tuple[frozenset, ...]]:
    """Every collection of `size` pairwise disjoint k-families drawn from sets."""
    blocks = list(combinations(sets, k))
    for combo in combinations(blocks, size):
        parts = [s for block in combo for s in block]
        if len(set(parts)) == len(parts):
            yield tuple(frozenset(block) for block in combo)


def _family_count(sets: int, k: int, upto: int) -> int:
    blocks = comb(sets, k)
    return sum(comb(blocks, s) for s in range(1, upto + 1))


def _sample_family(
    rng: np.random.Generator, vertices: Sequence[int], r: int, k: int, size: int
) -> Optional[tuple[frozenset, ...]]:
    """size disjoint k-families of distinct (r-1)-subsets of vertices, or None if too few."""
    need = k * size
    total = comb(len(vertices), r - 1)
    if need == 0 or total < need:
        return None
    if total <= 4 * need or total <= 20_000:
        pool = _rsets(vertices, r - 1)
        picked = [pool[j] for j in rng.choice(total, need, replace=False)]
    else:
        seen: set[Edge] = set()
        picked = []
        arr = np.asarray(sorted(vertices))
        while len(picked) < need:
            part = tuple(sorted(int(v) for v in rng.choice(arr, r - 1, replace=False)))
            if part not in seen:
                seen.add(part)
                picked.append(part)
    return tuple(frozenset(picked[j * k : (j + 1) * k]) for j in range(size))


def _as_lists(lfamily: Sequence[frozenset]) -> list[list[list[int]]]:
    return [sorted(list(part) for part in family) for family in lfamily]


def _check_cap(count: int, cap: int, what: str) -> None:
    if count > cap:
        raise OracleLimitError(f"Exhaustive {what} needs {count} checks (cap {cap})")


# ---- Property 1 ----


def _property_one(task: _GroupTask) -> _Outcome:
    h, hp, p, delta = task.host, task.hp, task.p, task.delta
    need = floor(hp.epsilon * h.n)
    described = canonical_profile(task.profile).describe()
    placement = place_pattern_copies(
        h,
        [task.profile] * need,
        hp.v0,
        seed=derive_seed(task.seed, 1, task.index),
        budget=task.budget,
    )
    if not placement.complete:
        return _Outcome(
            checked=1,
            witness={
                "profile": described,
                "placed": len(placement.copies),
                "requested": need,
                "budget_exhausted": placement.budget_exhausted,
            },
        )

    f2 = placement.link_family()
    outside = sorted(set(h.vertices) - family_vertices(f2))
    aux = build_aux(h, f2, outside)
    reach: dict[int, set[int]] = {w: set() for w in outside}
    for idx, nbrs in enumerate(aux.adjacency):
        for w in nbrs:
            reach[w].add(idx)

    cap_w = min(floor((2 / p) ** delta / 2), len(outside))
    factor = (p / 2) ** delta * need / 4

    def violates(ws: Sequence[int]) -> Optional[dict]:
        hit = set().union(*(reach[w] for w in ws))
        required = factor * len(ws)
        if len(hit) < required:
            return {
                "profile": described,
                "W": sorted(ws),
                "neighbours": len(hit),
                "required": required,
            }
        return None

    if cap_w < 1:
        return _Outcome(checked=1, vacuous=True)
    checked = 1
    if task.mode == "exhaustive":
        _check_cap(sum(comb(len(outside), s) for s in range(1, cap_w + 1)), task.cap, "W sets")
        for s in range(1, cap_w + 1):
            for ws in combinations(outside, s):
                checked += 1
                witness = violates(ws)
                if witness:
                    return _Outcome(checked, witness)
        return _Outcome(checked)

    for sample in range(task.samples):
        rng = rng_for(task.seed, 1, task.index, sample)
        s = int(rng.integers(1, cap_w + 1))
        ws = [int(w) for w in rng.choice(outside, s, replace=False)]
        checked += 1
        witness = violates(ws)
        if witness:
            return _Outcome(checked, witness)
    return _Outcome(checked)


# ---- Property 2 ----


def _property_two(task: _GroupTask) -> _Outcome:
    h, hp, p, k, i = task.host, task.hp, task.p, task.k, task.index
    target = hp.classes[i]
    pool = sorted(set(h.vertices) - target)
    cap_l = floor((2 / p) ** k / 2)
    factor = (p / 2) ** k * len(target) / 4

    def violates(lfamily: tuple[frozenset, ...]) -> Optional[dict]:
        aux = build_aux(h, lfamily, target)
        reached = aux.neighbors_of(range(len(lfamily)))
        required = factor * len(lfamily)
        if len(reached) < required:
            return {
                "k": k,
                "class": i,
                "families": _as_lists(lfamily),
                "neighbours": len(reached),
                "required": required,
            }
        return None

    sets_available = comb(len(pool), h.r - 1)
    cap_l = min(cap_l, sets_available // k)
    if cap_l < 1:
        return _Outcome(vacuous=True)

    checked = 0
    if task.mode == "exhaustive":
        _check_cap(_family_count(sets_available, k, cap_l), task.cap, "families")
        sets = _rsets(pool, h.r - 1)
        for size in range(1, cap_l + 1):
            for lfamily in _families(sets, k, size):
                checked += 1
                witness = violates(lfamily)
                if witness:
                    return _Outcome(checked, witness)
        return _Outcome(checked)

    for sample in range(task.samples):
        rng = rng_for(task.seed, 2, k, i, sample)
        size = int(rng.integers(1, cap_l + 1))
        lfamily = _sample_family(rng, pool, h.r, k, size)
        checked += 1
        witness = violates(lfamily)
        if witness:
            return _Outcome(checked, witness)
    return _Outcome(checked)


# ---- Property 3 ----


def property_three_size(n: int, r: int, p: float, k: int) -> int:
    """ceil((k(r-1) + 2)(p/2)^-k ln n), at least 1."""
    return max(1, math.ceil((k * (r - 1) + 2) * (2 / p) ** k * math.log(max(n, 1))))


def _property_three(task: _GroupTask) -> _Outcome:
    h, k = task.host, task.k
    s = property_three_size(h.n, h.r, task.p, k)
    rest = h.n - s
    if rest < h.r - 1 or comb(rest, h.r - 1) < s * k:
        return _Outcome(vacuous=True)

    def violates(lfamily: tuple[frozenset, ...], ws: Sequence[int]) -> Optional[dict]:
        if build_aux(h, lfamily, ws).edge_count() == 0:
            return {"k": k, "size": s, "families": _as_lists(lfamily), "W": sorted(ws)}
        return None

    checked = 0
    if task.mode == "exhaustive":
        _check_cap(comb(h.n, s) * _family_count(comb(rest, h.r - 1), k, s), task.cap, "pairs")
        for ws in combinations(h.vertices, s):
            sets = _rsets(sorted(set(h.vertices) - set(ws)), h.r - 1)
            for lfamily in _families(sets, k, s):
                checked += 1
                witness = violates(lfamily, ws)
                if witness:
                    return _Outcome(checked, witness)
        return _Outcome(checked)

    vertices = np.arange(1, h.n + 1)
    for sample in range(task.samples):
        rng = rng_for(task.seed, 3, k, sample)
        ws = sorted(int(w) for w in rng.choice(vertices, s, replace=False))
        others = sorted(set(h.vertices) - set(ws))
        lfamily = _sample_family(rng, others, h.r, k, s)
        checked += 1
        witness = violates(lfamily, ws)
        if witness:
            return _Outcome(checked, witness)
    return _Outcome(checked)


_CHECKERS = {1: _property_one, 2: _property_two, 3: _property_three}


def _run_group(task: _GroupTask) -> _Outcome:
    return _CHECKERS[task.prop](task)


def check_goodness(
    h: Hypergraph,
    hp: HostPartition,
    p: float,
    delta: int,
    mode: str = "sampled",
    samples: int = 200,
    seed: int = 0,
    profiles: Optional[Sequence[Profile]] = None,
    budget: Optional[int] = None,
    cap: Optional[int] = None,
    jobs: Optional[int] = 1,
) -> GoodnessReport:
    """Check properties (1)-(3) on h under the partition hp.

    Property (1) is only as strong as its reference set. profiles defaults to
    reference_profiles(h.r, delta), the k-star profiles for k = 1..delta with
    no induced edges, which says nothing about patterns whose profiles carry
    edges inside N(x). Pass the profiles of a concrete pattern to check
    property (1) for that pattern.
    """
    if mode not in MODES:
        raise PreconditionError(f"mode must be one of {', '.join(MODES)}, got {mode!r}")
    if not 0.0 < p <= 1.0:
        raise PreconditionError(f"p must lie in (0, 1], got {p}")
    if delta < 1:
        raise PreconditionError(f"delta must be at least 1, got {delta}")
    if samples < 1:
        raise PreconditionError(f"samples must be at least 1, got {samples}")
    if hp.n != h.n or hp.violations():
        raise PreconditionError(f"Host partition does not fit the host: {hp.violations()}")
    cap = cap or DEFAULT_LIMITS["exhaustive_goodness_cap"]
    profiles = list(profiles) if profiles is not None else reference_profiles(h.r, delta)

    common = dict(
        host=h, hp=hp, p=p, delta=delta, mode=mode, samples=samples, seed=seed, cap=cap,
        budget=budget,
    )
    tasks = [_GroupTask(prop=1, index=j, profile=pr, **common) for j, pr in enumerate(profiles)]
    tasks += [
        _GroupTask(prop=2, k=k, index=i, **common)
        for k in range(1, delta + 1)
        for i in range(1, hp.t + 1)
        if hp.classes[i]
    ]
    tasks += [_GroupTask(prop=3, k=k, **common) for k in range(1, delta + 1)]

    outcomes = parallel_map(_run_group, tasks, jobs)

    report = GoodnessReport(mode=mode, p=p, delta=delta, seed=seed, samples=samples)
    for prop in (1, 2, 3):
        group = [o for t, o in zip(tasks, outcomes) if t.prop == prop]
        witness = next((o.witness for o in group if o.witness), None)
        report.properties.append(
            PropertyResult(
                name=PROPERTY_NAMES[prop],
                passed=witness is None,
                checked=sum(o.checked for o in group),
                witness=witness,
                vacuous=all(o.vacuous for o in group),
            )
        )
    logger.info(
        "goodness (%s): %s", mode, ", ".join(f"{r.name}={r.passed}" for r in report.properties)
    )
    return report

