"""Universal hypergraphs from graphs, hitting graphs and sampled universality checks."""

from spanhyper.constructions.hitting import (
    HittingGraph,
    SigmaProbe,
    hitting_graph,
    sigma_conjecture_probe,
    sigma_exact,
)
from spanhyper.constructions.universal import (
    CliqueReport,
    UniversalityReport,
    clique_report,
    hr_construction,
    kr_construction,
    random_universal_edge_estimate,
    shadow_lift,
    universality_lower_bound,
    verify_universal_sampled,
)

__all__ = [
    "HittingGraph",
    "SigmaProbe",
    "hitting_graph",
    "sigma_conjecture_probe",
    "sigma_exact",
    "CliqueReport",
    "UniversalityReport",
    "clique_report",
    "hr_construction",
    "kr_construction",
    "random_universal_edge_estimate",
    "shadow_lift",
    "universality_lower_bound",
    "verify_universal_sampled",
]
