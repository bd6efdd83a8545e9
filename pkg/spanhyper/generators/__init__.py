"""
Structure generators: the deterministic spanning families and the seeded
random models H^(r)(n, p), H^(r)(n, m) and the bounded-degree family.
"""

from spanhyper.generators.families import (
    FAMILIES,
    build_family,
    cube_hypergraph,
    expected_edge_count,
    family_size,
    hamilton_cycle,
    kfactor,
    lattice,
    list_families,
    perfect_matching,
    power_hamilton_cycle,
    sphere_apollonian,
    validate_sphere,
)
from spanhyper.generators.random_models import (
    derive_seed,
    edge_variates,
    gnm,
    gnp,
    hypergraph_below,
    rng_for,
    sample_bounded_degree,
)

__all__ = [
    "FAMILIES",
    "build_family",
    "cube_hypergraph",
    "derive_seed",
    "edge_variates",
    "expected_edge_count",
    "family_size",
    "gnm",
    "gnp",
    "hamilton_cycle",
    "hypergraph_below",
    "kfactor",
    "lattice",
    "list_families",
    "perfect_matching",
    "power_hamilton_cycle",
    "rng_for",
    "sample_bounded_degree",
    "sphere_apollonian",
    "validate_sphere",
]
