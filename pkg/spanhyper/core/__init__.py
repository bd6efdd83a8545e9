"""
Core hypergraph types, the .hg file format, structural notions and profiles.
"""

from spanhyper.core.hgfile import (
    atomic_write_text,
    format_hypergraph,
    parse_hypergraph,
    read_hypergraph,
    write_hypergraph,
)
from spanhyper.core.hypergraph import Edge, Graph, Hypergraph, as_graph, complete, make_hypergraph
from spanhyper.core.profiles import (
    CanonicalProfile,
    Profile,
    canonical_profile,
    canonical_profile_of,
    profile,
    profile_classes,
)
from spanhyper.core.structure import (
    ball,
    components,
    distance,
    is_t_independent,
    link,
    neighborhood,
    neighborhood_of_set,
    shadow,
)


def degree(h: Hypergraph, v: int) -> int:
    return h.degree(v)


__all__ = [
    "Edge",
    "Graph",
    "Hypergraph",
    "CanonicalProfile",
    "Profile",
    "as_graph",
    "atomic_write_text",
    "ball",
    "canonical_profile",
    "canonical_profile_of",
    "complete",
    "components",
    "degree",
    "distance",
    "format_hypergraph",
    "is_t_independent",
    "link",
    "make_hypergraph",
    "neighborhood",
    "neighborhood_of_set",
    "parse_hypergraph",
    "profile",
    "profile_classes",
    "read_hypergraph",
    "shadow",
    "write_hypergraph",
]
