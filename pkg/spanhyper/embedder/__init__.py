"""Universality embedder: pattern partition, host goodness and staged Hall matchings."""

from spanhyper.embedder.aux_graph import (
    AuxBipartite,
    MatchingResult,
    build_aux,
    family_vertices,
    hall_matching,
    max_bipartite_matching,
)
from spanhyper.embedder.goodness import GoodnessReport, PropertyResult, check_goodness
from spanhyper.embedder.host import HostPartition, host_partition
from spanhyper.embedder.partition import EmbedPartition, lemma_epsilon_bound, partition_pattern
from spanhyper.embedder.placement import (
    Placement,
    place_pattern_copies,
    place_profile_copies,
    profile_pattern,
    reference_profiles,
)
from spanhyper.embedder.staged import EmbedTrace, StageRecord, embed_universal

__all__ = [
    "AuxBipartite",
    "MatchingResult",
    "build_aux",
    "family_vertices",
    "hall_matching",
    "max_bipartite_matching",
    "GoodnessReport",
    "PropertyResult",
    "check_goodness",
    "HostPartition",
    "host_partition",
    "EmbedPartition",
    "lemma_epsilon_bound",
    "partition_pattern",
    "Placement",
    "place_pattern_copies",
    "place_profile_copies",
    "profile_pattern",
    "reference_profiles",
    "EmbedTrace",
    "StageRecord",
    "embed_universal",
]
