"""
Density parameters, threshold formulas and exact second-moment diagnostics.
"""

from spanhyper.thresholds.density import (
    DensityReport,
    SubgraphStats,
    e_sub,
    fractional_density_m1,
    gamma,
    subgraph_stats,
)
from spanhyper.thresholds.formulas import (
    RiordanReport,
    check_riordan_conditions,
    clique_count_estimate,
    expectation_lower_threshold,
    expectation_threshold,
    factor_threshold_lower_bound,
    family_threshold,
    gamma_closed_form,
    kr_graph_probability,
    regular_gamma_bounds,
    sharp_threshold_regular,
    universality_threshold,
)
from spanhyper.thresholds.second_moment import (
    ChebyshevReport,
    HostEnumeration,
    SecondMomentReport,
    automorphism_count,
    chebyshev_check,
    count_copies,
    enumerate_copies,
    host_enumeration_oracle,
    second_moment_ratio,
)

__all__ = [
    "ChebyshevReport",
    "DensityReport",
    "HostEnumeration",
    "RiordanReport",
    "SecondMomentReport",
    "SubgraphStats",
    "automorphism_count",
    "chebyshev_check",
    "check_riordan_conditions",
    "clique_count_estimate",
    "count_copies",
    "e_sub",
    "enumerate_copies",
    "expectation_lower_threshold",
    "expectation_threshold",
    "factor_threshold_lower_bound",
    "family_threshold",
    "fractional_density_m1",
    "gamma",
    "gamma_closed_form",
    "host_enumeration_oracle",
    "kr_graph_probability",
    "regular_gamma_bounds",
    "second_moment_ratio",
    "sharp_threshold_regular",
    "subgraph_stats",
    "universality_threshold",
]
