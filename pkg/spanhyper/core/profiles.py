"""
Vertex profiles and their canonical forms.

The profile of v is (N(v), H[N(v)], link(v)) written in local coordinates
0..k-1 over the sorted neighbourhood. Two profiles are equivalent when one
relabeling of the local vertices maps both the induced edges and the link of
one onto the other. canonical_profile splits a profile into connected
components, canonises each by individualisation-refinement with prefix and
twin pruning, and lays the components out in sorted order, so equivalent
profiles produce byte-identical keys.
"""

import json
from dataclasses import dataclass
from typing import Iterable, Optional

from spanhyper.core.hypergraph import Edge, Hypergraph
from spanhyper.core.structure import link, neighborhood
from spanhyper.errors import OracleLimitError

MAX_SEARCH_NODES = 1_000_000


@dataclass(frozen=True)
class Profile:
    """Local structure around a vertex, with neighbourhood indices 0..k-1."""

    center: int
    zvertices: tuple[int, ...]
    e1: tuple[Edge, ...]
    e2: tuple[Edge, ...]

    @property
    def size(self) -> int:
        return len(self.zvertices)


@dataclass(frozen=True, order=True)
class CanonicalProfile:
    """Canonical (size, link, induced edges) triple; equal iff profiles are equivalent."""

    size: int
    e2: tuple[Edge, ...]
    e1: tuple[Edge, ...]

    @property
    def key(self) -> bytes:
        return json.dumps([self.size, self.e2, self.e1], separators=(",", ":")).encode()

    def is_empty(self) -> bool:
        return self.size == 0

    def describe(self) -> str:
        return f"k={self.size} link={list(self.e2)} induced={list(self.e1)}"


def profile(h: Hypergraph, v: int) -> Profile:
    zvertices = neighborhood(h, v)
    local = {z: i for i, z in enumerate(zvertices)}
    e1 = sorted(
        tuple(local[x] for x in edge) for edge in h.edges if all(x in local for x in edge)
    )
    e2 = sorted(tuple(local[x] for x in part) for part in link(h, v))
    return Profile(center=v, zvertices=zvertices, e1=tuple(e1), e2=tuple(e2))


def _rank(signatures: list) -> list[int]:
    order = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
    return [order[sig] for sig in signatures]


def _refine(
    k: int, e1: tuple[Edge, ...], e2: tuple[Edge, ...], initial: Optional[list] = None
) -> list[int]:
    """Colour refinement over both edge families; colours are invariant under relabeling.

    ``initial`` seeds the colouring, which is how individualised vertices are
    kept apart from the rest of their cell.
    """
    deg1 = [0] * k
    deg2 = [0] * k
    for e in e1:
        for x in e:
            deg1[x] += 1
    for e in e2:
        for x in e:
            deg2[x] += 1
    seed = initial or [0] * k
    colour = _rank([(seed[x], deg2[x], deg1[x]) for x in range(k)])

    while True:
        signatures = []
        for x in range(k):
            around2 = sorted(tuple(sorted(colour[y] for y in e if y != x)) for e in e2 if x in e)
            around1 = sorted(tuple(sorted(colour[y] for y in e if y != x)) for e in e1 if x in e)
            signatures.append((colour[x], tuple(around2), tuple(around1)))
        refined = _rank(signatures)
        if len(set(refined)) == len(set(colour)):
            return refined
        colour = refined


def _encode(labels: dict[int, int], family: tuple[Edge, ...]) -> tuple[Edge, ...]:
    return tuple(sorted(tuple(sorted(labels[x] for x in e)) for e in family))


def _components(k: int, edges: Iterable[Edge]) -> list[list[int]]:
    parent = list(range(k))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        root = find(e[0])
        for y in e[1:]:
            parent[find(y)] = root
    groups: dict[int, list[int]] = {}
    for x in range(k):
        groups.setdefault(find(x), []).append(x)
    return list(groups.values())


def _restrict(members: list[int], family: tuple[Edge, ...]) -> tuple[Edge, ...]:
    local = {x: i for i, x in enumerate(members)}
    return tuple(tuple(local[x] for x in e) for e in family if e[0] in local)


class _Canonizer:
    """Individualisation-refinement search for the least labelling of one component.

    Labels are handed out in order 0, 1, ... and the form is the list of
    blocks, block j holding the edges whose largest label is j. A partial
    labelling therefore fixes a prefix of the form, and any branch whose
    prefix is already larger than the best one is cut.
    """

    def __init__(self, k: int, e1: tuple[Edge, ...], e2: tuple[Edge, ...], max_nodes: int):
        self.k = k
        self.e1 = e1
        self.e2 = e2
        self.max_nodes = max_nodes
        self.nodes = 0
        self.families = [frozenset(frozenset(e) for e in e2), frozenset(frozenset(e) for e in e1)]
        self.incident2 = [[e for e in e2 if x in e] for x in range(k)]
        self.incident1 = [[e for e in e1 if x in e] for x in range(k)]
        self.base = _refine(k, e1, e2)
        self.best: Optional[list] = None
        self.best_order: list[int] = []

    def run(self) -> tuple[int, tuple[Edge, ...], tuple[Edge, ...]]:
        self._descend([], {}, [])
        labels = {x: i for i, x in enumerate(self.best_order)}
        return self.k, _encode(labels, self.e2), _encode(labels, self.e1)

    def _swappable(self, x: int, y: int) -> bool:
        # the transposition (x y) maps both families onto themselves
        for family in self.families:
            for e in family:
                if x in e and y not in e and (e - {x}) | {y} not in family:
                    return False
                if y in e and x not in e and (e - {y}) | {x} not in family:
                    return False
        return True

    def _candidates(self, pos: dict[int, int]) -> list[int]:
        initial = [(0, pos[x]) if x in pos else (1, self.base[x]) for x in range(self.k)]
        colour = _refine(self.k, self.e1, self.e2, initial)
        free = [x for x in range(self.k) if x not in pos]
        lowest = min(colour[x] for x in free)
        picked: list[int] = []
        for x in free:
            if colour[x] == lowest and not any(self._swappable(x, y) for y in picked):
                picked.append(x)
        return picked

    def _block(self, x: int, pos: dict[int, int]) -> tuple:
        def part(edges: list[Edge]) -> tuple[Edge, ...]:
            closed = (e for e in edges if all(y in pos for y in e))
            return tuple(sorted(tuple(sorted(pos[y] for y in e)) for e in closed))

        return part(self.incident2[x]), part(self.incident1[x])

    def _descend(self, order: list[int], pos: dict[int, int], prefix: list) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise OracleLimitError(
                f"Profile canonicalization exceeded {self.max_nodes} search nodes"
            )
        depth = len(order)
        if depth == self.k:
            if self.best is None or prefix < self.best:
                self.best = list(prefix)
                self.best_order = list(order)
            return
        for x in self._candidates(pos):
            pos[x] = depth
            order.append(x)
            prefix.append(self._block(x, pos))
            if self.best is None or prefix <= self.best[: depth + 1]:
                self._descend(order, pos, prefix)
            prefix.pop()
            order.pop()
            del pos[x]


def canonical_profile(p: Profile, max_nodes: int = MAX_SEARCH_NODES) -> CanonicalProfile:
    k = p.size
    if k == 0:
        return CanonicalProfile(0, (), ())

    # Components are canonised on their own and laid out in sorted order.
    parts = []
    for members in _components(k, p.e1 + p.e2):
        e1 = _restrict(members, p.e1)
        e2 = _restrict(members, p.e2)
        parts.append(_Canonizer(len(members), e1, e2, max_nodes).run())
    parts.sort()

    link_edges: list[Edge] = []
    induced: list[Edge] = []
    offset = 0
    for size, e2, e1 in parts:
        link_edges.extend(tuple(x + offset for x in e) for e in e2)
        induced.extend(tuple(x + offset for x in e) for e in e1)
        offset += size
    return CanonicalProfile(k, tuple(sorted(link_edges)), tuple(sorted(induced)))


def canonical_profile_of(h: Hypergraph, v: int) -> CanonicalProfile:
    return canonical_profile(profile(h, v))


def profile_classes(
    h: Hypergraph, vertices: Optional[Iterable[int]] = None
) -> dict[CanonicalProfile, list[int]]:
    """Bucket vertices by canonical profile, largest classes first."""
    buckets: dict[CanonicalProfile, list[int]] = {}
    for v in sorted(h.vertices if vertices is None else vertices):
        buckets.setdefault(canonical_profile_of(h, v), []).append(v)
    ordered = sorted(buckets.items(), key=lambda item: (-len(item[1]), item[0].key))
    return dict(ordered)
