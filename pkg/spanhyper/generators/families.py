"""
Deterministic spanning families.

Every builder returns vertex ids 1..n with the vertex and edge counts of the
family's definition. The registry at the bottom maps the family names used by
the CLI and the threshold curves to builders taking keyword parameters.
"""

from collections import Counter
from itertools import combinations
from math import comb
from typing import Callable, Optional

from spanhyper.core.hypergraph import Hypergraph, complete, make_hypergraph
from spanhyper.errors import PreconditionError
from spanhyper.generators.random_models import rng_for


def hamilton_cycle(n: int, r: int, ell: int) -> Hypergraph:
    """The ell-overlapping Hamilton cycle C^(r, ell) on 1..n.

    Edges are the cyclic windows of r consecutive vertices starting at
    1, 1 + (r - ell), 1 + 2(r - ell), ...
    """
    if r < 2:
        raise PreconditionError(f"Uniformity must be at least 2, got {r}")
    if not 0 <= ell < r:
        raise PreconditionError(f"Overlap must satisfy 0 <= ell < r, got ell={ell}, r={r}")
    if n < r:
        raise PreconditionError(f"Need n >= r, got n={n}, r={r}")
    step = r - ell
    if n % step:
        raise PreconditionError(f"r - ell = {step} must divide n = {n}")
    if ell > 0 and (n == r or n // step < 3):
        raise PreconditionError(
            f"A cycle with ell = {ell} needs at least 3 edges and n > r, got n={n}, r={r}"
        )
    edges = [
        tuple((k * step + j) % n + 1 for j in range(r)) for k in range(n // step)
    ]
    return make_hypergraph(r, n, edges)


def cube_hypergraph(r: int, d: int) -> Hypergraph:
    """Q^(r)(d): vertices [r]^d, edges the r-sets differing in exactly one coordinate.

    A point (x_0, ..., x_{d-1}) has id 1 + sum x_j * r^j.
    """
    if r < 2 or d < 1:
        raise PreconditionError(f"Need r >= 2 and d >= 1, got r={r}, d={d}")
    n = r**d
    edges = []
    for j in range(d):
        stride = r**j
        for base in range(n):
            if (base // stride) % r == 0:
                edges.append(tuple(base + a * stride + 1 for a in range(r)))
    return make_hypergraph(r, n, edges)


def lattice(r: int, k: int) -> Hypergraph:
    """The hyperlattice with overlap r - 1: runs of r cells on an m x m grid, m = k - 2 + r.

    Cell (i, j) has id 1 + i * m + j.
    """
    if r < 2 or k < 2:
        raise PreconditionError(f"Need r >= 2 and k >= 2, got r={r}, k={k}")
    m = k - 2 + r
    edges = []
    for i in range(m):
        for j in range(m - r + 1):
            edges.append(tuple(1 + i * m + j + a for a in range(r)))
            edges.append(tuple(1 + (j + a) * m + i for a in range(r)))
    return make_hypergraph(r, m * m, edges)


def sphere_apollonian(n: int, seed: int) -> Hypergraph:
    """A random stacked triangulation of the sphere as a 3-uniform hypergraph.

    Starts from the tetrahedron boundary and inserts vertex v = 5..n into a
    seed-chosen face, replacing it by three faces.
    """
    if n < 4:
        raise PreconditionError(f"A sphere needs at least 4 vertices, got {n}")
    faces = [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
    rng = rng_for(seed)
    for v in range(5, n + 1):
        idx = int(rng.integers(len(faces)))
        a, b, c = faces[idx]
        faces[idx] = (a, b, v)
        faces.append((a, c, v))
        faces.append((b, c, v))
    return make_hypergraph(3, n, faces)


def validate_sphere(h: Hypergraph) -> bool:
    """Necessary conditions for h to be a sphere with r-gonal faces.

    Checks Euler's relation 2 v - 4 = (r - 2) e; for r = 3 additionally that
    every shadow edge lies in exactly two faces. Face cycles are not recoverable
    from r-sets when r > 3, so only Euler's relation applies there.
    """
    if h.r < 3 or 2 * h.n - 4 != (h.r - 2) * h.m:
        return False
    if h.r > 3:
        return True
    cover = Counter(pair for edge in h.edges for pair in combinations(edge, 2))
    return all(count == 2 for count in cover.values())


def power_hamilton_cycle(n: int, r: int, i: int) -> Hypergraph:
    """C^(r)(i): all r-sets whose cyclic span is at most r + i - 2."""
    if r < 2 or i < 1:
        raise PreconditionError(f"Need r >= 2 and i >= 1, got r={r}, i={i}")
    width = r + i - 2
    if n <= 2 * width:
        raise PreconditionError(f"Need n > 2(r + i - 2) = {2 * width}, got n={n}")
    edges = []
    for left in range(n):
        for rest in combinations(range(1, width + 1), r - 1):
            edges.append(tuple((left + off) % n + 1 for off in (0, *rest)))
    return make_hypergraph(r, n, edges)


def kfactor(n: int, r: int, t: int) -> Hypergraph:
    """n / t disjoint copies of K^(r)_t on consecutive blocks."""
    if r < 2 or t < r:
        raise PreconditionError(f"Need t >= r >= 2, got r={r}, t={t}")
    if n % t:
        raise PreconditionError(f"t = {t} must divide n = {n}")
    edges = []
    for start in range(0, n, t):
        edges.extend(combinations(range(start + 1, start + t + 1), r))
    return make_hypergraph(r, n, edges)


def perfect_matching(n: int, r: int) -> Hypergraph:
    return kfactor(n, r, r)


FAMILIES: dict[str, Callable[..., Hypergraph]] = {
    "hamilton": lambda n, r, ell, **_: hamilton_cycle(n, r, ell),
    "loose-hamilton": lambda n, r, **_: hamilton_cycle(n, r, 1),
    "tight-hamilton": lambda n, r, **_: hamilton_cycle(n, r, r - 1),
    "cube": lambda r, d, **_: cube_hypergraph(r, d),
    "lattice": lambda r, k, **_: lattice(r, k),
    "sphere": lambda n, seed=0, **_: sphere_apollonian(n, seed),
    "power": lambda n, r, i, **_: power_hamilton_cycle(n, r, i),
    "kfactor": lambda n, r, t, **_: kfactor(n, r, t),
    "matching": lambda n, r, **_: perfect_matching(n, r),
    "complete": lambda n, r, **_: complete(n, r),
}

FAMILY_PARAMS = {
    "hamilton": ("n", "r", "ell"),
    "loose-hamilton": ("n", "r"),
    "tight-hamilton": ("n", "r"),
    "cube": ("r", "d"),
    "lattice": ("r", "k"),
    "sphere": ("n",),
    "power": ("n", "r", "i"),
    "kfactor": ("n", "r", "t"),
    "matching": ("n", "r"),
    "complete": ("n", "r"),
}


def list_families() -> list[str]:
    return sorted(FAMILIES)


def build_family(name: str, seed: Optional[int] = None, **params) -> Hypergraph:
    """Build a named family; missing parameters raise PreconditionError."""
    if name not in FAMILIES:
        raise PreconditionError(f"Unknown family {name!r}; available: {', '.join(list_families())}")
    missing = [p for p in FAMILY_PARAMS[name] if params.get(p) is None]
    if missing:
        raise PreconditionError(f"Family {name!r} needs parameter(s): {', '.join(missing)}")
    params = {k: v for k, v in params.items() if v is not None}
    if seed is not None:
        params["seed"] = seed
    return FAMILIES[name](**params)


def family_size(name: str, **params) -> int:
    """Vertex count of a family instance without building it."""
    if name == "cube":
        return params["r"] ** params["d"]
    if name == "lattice":
        return (params["k"] - 2 + params["r"]) ** 2
    return params["n"]


def expected_edge_count(name: str, **params) -> int:
    """Edge count given by each family's definition."""
    if name == "hamilton":
        return params["n"] // (params["r"] - params["ell"])
    if name == "loose-hamilton":
        return params["n"] // (params["r"] - 1)
    if name == "tight-hamilton":
        return params["n"]
    if name == "cube":
        return params["d"] * params["r"] ** (params["d"] - 1)
    if name == "lattice":
        return 2 * (params["k"] - 1) * (params["k"] - 2 + params["r"])
    if name == "sphere":
        return 2 * params["n"] - 4
    if name == "power":
        return params["n"] * comb(params["r"] + params["i"] - 2, params["r"] - 1)
    if name == "kfactor":
        return (params["n"] // params["t"]) * comb(params["t"], params["r"])
    if name == "matching":
        return params["n"] // params["r"]
    if name == "complete":
        return comb(params["n"], params["r"])
    raise PreconditionError(f"Unknown family {name!r}")
