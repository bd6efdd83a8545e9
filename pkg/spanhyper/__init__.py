"""
spanhyper: spanning structures in random r-uniform hypergraphs.

Structure generators, Riordan-type density thresholds, exact second-moment
diagnostics, Monte Carlo containment curves, the staged Hall-matching
universality embedder and sparse universal constructions.
"""

__version__ = "0.1.0"
__all__ = ["core", "generators", "thresholds", "search", "embedder", "constructions"]
