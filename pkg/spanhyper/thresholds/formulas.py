"""
Threshold formulas and the hypothesis check for the general containment theorem.

Closed-form gamma values per family, the expectation and sharp-threshold
probabilities, and the family-specific threshold shapes, all evaluated at a
concrete n. Asymptotic conditions are reported as numbers with slack, never
as booleans, except where the condition is a plain inequality at fixed n.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional, Union

from spanhyper.core.hypergraph import Hypergraph
from spanhyper.errors import PreconditionError
from spanhyper.thresholds.density import gamma as exact_gamma

Number = Union[int, float, Fraction]


def _lattice_gamma(r: int, k: int) -> Fraction:
    """Best e/(v-2) over axis-parallel sub-rectangles of the m x m run grid."""
    m = k - 2 + r
    best = Fraction(0)
    for a in range(1, m + 1):
        for b in range(1, m + 1):
            if a * b < r + 1:
                continue
            runs = a * max(b - r + 1, 0) + b * max(a - r + 1, 0)
            best = max(best, Fraction(runs, a * b - 2))
    return best


def gamma_closed_form(family: str, **params) -> Fraction:
    """The family's gamma value; for power cycles the leading term C(r+i-2, r-1)."""
    if family in ("hamilton", "tight-hamilton", "loose-hamilton"):
        n, r = params["n"], params["r"]
        ell = {"tight-hamilton": r - 1, "loose-hamilton": 1}.get(family, params.get("ell"))
        if ell is None or not 0 <= ell < r or n % (r - ell) or n < r + 1:
            raise PreconditionError(f"Invalid Hamilton cycle parameters {params}")
        return Fraction(n, (r - ell) * (n - 2))
    if family == "lattice":
        r, k = params["r"], params["k"]
        if r < 2 or k < 2:
            raise PreconditionError(f"Invalid lattice parameters {params}")
        return _lattice_gamma(r, k)
    if family == "sphere":
        r = params.get("r", 3)
        if r < 3:
            raise PreconditionError("Spheres need r >= 3")
        return Fraction(2, r - 2)
    if family == "power":
        r, i = params["r"], params["i"]
        return Fraction(comb(r + i - 2, r - 1))
    if family == "cube":
        r, d = params["r"], params["d"]
        if r**d < r + 1:
            raise PreconditionError(f"Q^({r})({d}) is too small for gamma")
        return Fraction(d * r ** (d - 1), r**d - 2)
    if family == "complete":
        n, r = params["n"], params["r"]
        if n < r + 1:
            raise PreconditionError("K^(r)_n needs n >= r + 1 for gamma")
        return Fraction(comb(n, r), n - 2)
    raise PreconditionError(f"No closed form for family {family!r}")


def expectation_threshold(gamma: Number, n: int) -> float:
    """n^(-1/gamma): above it the expected copy count forces containment."""
    if gamma <= 0:
        raise PreconditionError(f"gamma must be positive, got {gamma}")
    return n ** (-1.0 / float(gamma))


def expectation_lower_threshold(gamma: Number, n: int, epsilon: float) -> float:
    """(1 - eps)(e/n)^(1/gamma) with e Euler's number: below it, no copy a.a.s."""
    if gamma <= 0:
        raise PreconditionError(f"gamma must be positive, got {gamma}")
    if not 0 < epsilon < 1:
        raise PreconditionError(f"epsilon must lie in (0, 1), got {epsilon}")
    return (1 - epsilon) * (math.e / n) ** (1.0 / float(gamma))


def sharp_threshold_regular(n: int, r: int, delta: int) -> float:
    """n^(-r/Delta) for Delta-regular spanning structures."""
    if delta < 1:
        raise PreconditionError(f"delta must be at least 1, got {delta}")
    return n ** (-r / delta)


def regular_gamma_bounds(r: int, delta: int) -> tuple[float, float]:
    """Delta/r <= gamma <= (Delta/r)(D+1)/(D-1) with D = Delta^(1/(r-1))."""
    if delta < 1 or r < 2:
        raise PreconditionError(f"Need delta >= 1 and r >= 2, got delta={delta}, r={r}")
    lower = delta / r
    root = delta ** (1.0 / (r - 1))
    if root <= 1.0:
        return lower, math.inf
    return lower, lower * (root + 1) / (root - 1)


def family_threshold(family: str, n: int, **params) -> float:
    """Threshold shape of each spanning family evaluated at n (constants dropped)."""
    if family in ("hamilton", "tight-hamilton"):
        r = params["r"]
        ell = r - 1 if family == "tight-hamilton" else params["ell"]
        if ell < 2:
            raise PreconditionError("The n^(ell-r) threshold applies to ell >= 2")
        return float(n) ** (ell - r)
    if family == "cube":
        return float(params["r"]) ** (-params["r"])
    if family == "lattice":
        return n**-0.5
    if family == "sphere":
        r, delta = params.get("r", 3), params["delta"]
        return float(delta) ** (2 * r - 4) * n ** (-(r - 2) / 2)
    if family == "power":
        r, i = params["r"], params["i"]
        return n ** (-1.0 / comb(r + i - 2, r - 1))
    raise PreconditionError(f"No threshold shape for family {family!r}")


def universality_threshold(n: int, delta: int, c: float = 1.0) -> float:
    """c (ln n / n)^(1/Delta): edge probability for F^(r)(n, Delta)-universality."""
    if delta < 1:
        raise PreconditionError(f"delta must be at least 1, got {delta}")
    return c * (math.log(n) / n) ** (1.0 / delta)


def kr_graph_probability(n: int, r: int, delta: int, c: float = 1.0) -> float:
    """c (ln n / n)^(1/((r-1)Delta)): graph density whose K_r-hypergraph is universal."""
    if delta < 1 or r < 2:
        raise PreconditionError(f"Need delta >= 1 and r >= 2, got delta={delta}, r={r}")
    return c * (math.log(n) / n) ** (1.0 / ((r - 1) * delta))


def clique_count_estimate(n: int, r: int, p: float) -> float:
    """n^r p^C(r,2): order of the number of K_r in G(n, p)."""
    return float(n) ** r * p ** comb(r, 2)


def factor_threshold_lower_bound(n: int, r: int, t: int) -> float:
    """(ln n)^(1/C(t,r)) n^(-(t-1)/C(t,r)): lower bound from K^(r)_t-factors."""
    if t < r:
        raise PreconditionError(f"Need t >= r, got t={t}, r={r}")
    edges = comb(t, r)
    return math.log(n) ** (1.0 / edges) * n ** (-(t - 1) / edges)


@dataclass
class RiordanReport:
    n: int
    r: int
    delta: int
    p: float
    gamma: Fraction
    alpha: Fraction
    edge_count: int
    edge_floor: float
    edge_condition: bool
    edge_slack: float
    binomial_value: float
    growth_value: float

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "delta": self.delta,
            "p": self.p,
            "gamma": str(self.gamma),
            "alpha": str(self.alpha),
            "edge_count": self.edge_count,
            "edge_floor": self.edge_floor,
            "edge_condition": self.edge_condition,
            "edge_slack": self.edge_slack,
            "binomial_value": self.binomial_value,
            "growth_value": self.growth_value,
        }


def check_riordan_conditions(
    h: Hypergraph, p: float, gamma: Optional[Fraction] = None
) -> RiordanReport:
    """Evaluate both hypotheses of the general spanning-threshold theorem at (n, p).

    The edge condition alpha C(n, r) > n / r is a plain inequality. The growth
    condition n p^gamma Delta^-4 -> infinity is reported as its value, together
    with p C(n, r). gamma is computed exactly when not supplied.
    """
    if not 0.0 <= p <= 1.0:
        raise PreconditionError(f"Probability must lie in [0, 1], got {p}")
    n, r = h.n, h.r
    if gamma is None:
        gamma = exact_gamma(h).gamma if h.m else Fraction(0)
    gamma = Fraction(gamma)
    alpha = Fraction(h.m, comb(n, r))
    floor = n / r
    delta = h.max_degree
    growth = n * p ** float(gamma) * delta**-4 if delta else math.inf
    return RiordanReport(
        n=n,
        r=r,
        delta=delta,
        p=p,
        gamma=gamma,
        alpha=alpha,
        edge_count=h.m,
        edge_floor=floor,
        edge_condition=h.m > floor,
        edge_slack=h.m - floor,
        binomial_value=p * comb(n, r),
        growth_value=growth,
    )
