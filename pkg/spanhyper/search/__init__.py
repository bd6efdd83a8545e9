"""
Exact containment search and Monte Carlo threshold curves.
"""

from spanhyper.search.curves import (
    CURVE_COLUMNS,
    CurveRow,
    ThresholdCurve,
    monte_carlo_curve,
    p_grid,
    wilson_interval,
)
from spanhyper.search.embedding import (
    Embedding,
    EmbeddingSearch,
    NodeCounter,
    SearchResult,
    SearchStatus,
    find_embedding,
    iter_embeddings,
    search_order,
    validate_embedding,
)

__all__ = [
    "CURVE_COLUMNS",
    "CurveRow",
    "Embedding",
    "EmbeddingSearch",
    "NodeCounter",
    "SearchResult",
    "SearchStatus",
    "ThresholdCurve",
    "find_embedding",
    "iter_embeddings",
    "monte_carlo_curve",
    "p_grid",
    "search_order",
    "validate_embedding",
    "wilson_interval",
]
