"""
Monte Carlo containment curves.

For each trial a host is drawn from H^(r)(n, p) at every grid point and the
family instance is searched for as a spanning subhypergraph. With coupling
(the default) one vector of per-edge uniforms is drawn per trial and shared
across the grid, so hosts are nested in p and so is containment: a trial's
embedding at p is re-validated at the next grid point before any new search.

Curves are pandas DataFrames on disk: a "# key=value" metadata block, then
CSV with columns p,trials,successes,phat,ci_low,ci_high.
"""

import io
import logging
import math
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional, Sequence, Union

import numpy as np
import pandas as pd

from spanhyper import __version__
from spanhyper.core.hgfile import atomic_write_text
from spanhyper.core.hypergraph import Hypergraph
from spanhyper.errors import PreconditionError
from spanhyper.generators.families import build_family
from spanhyper.generators.random_models import derive_seed, edge_variates, hypergraph_below
from spanhyper.parallel import parallel_map
from spanhyper.search.embedding import SearchStatus, find_embedding, validate_embedding

logger = logging.getLogger(__name__)

CURVE_COLUMNS = ["p", "trials", "successes", "phat", "ci_low", "ci_high"]
Z_95 = 1.959963984540054


def wilson_interval(successes: int, trials: int, z: float = Z_95) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if trials <= 0:
        raise PreconditionError("Wilson interval needs at least one trial")
    phat = successes / trials
    denom = 1 + z * z / trials
    centre = (phat + z * z / (2 * trials)) / denom
    half = z * math.sqrt(phat * (1 - phat) / trials + z * z / (4 * trials * trials)) / denom
    return max(0.0, min(centre - half, phat)), min(1.0, max(centre + half, phat))


@dataclass
class CurveRow:
    p: float
    trials: int
    successes: int
    phat: float
    ci_low: float
    ci_high: float


@dataclass
class ThresholdCurve:
    rows: list[CurveRow] = field(default_factory=list)
    metadata: dict[str, object] = field(default_factory=dict)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [[getattr(row, c) for c in CURVE_COLUMNS] for row in self.rows], columns=CURVE_COLUMNS
        )

    def to_csv_text(self) -> str:
        header = "".join(f"# {k}={v}\n" for k, v in self.metadata.items())
        return header + self.to_frame().to_csv(index=False, float_format="%.10g")

    def to_csv(self, path: Union[str, Path]) -> Path:
        return atomic_write_text(path, self.to_csv_text())

    @classmethod
    def from_csv(cls, path: Union[str, Path]) -> "ThresholdCurve":
        text = Path(path).read_text()
        metadata = {}
        for line in text.splitlines():
            if not line.startswith("#"):
                break
            key, _, value = line[1:].strip().partition("=")
            metadata[key] = value
        frame = pd.read_csv(io.StringIO(text), comment="#")
        rows = [
            CurveRow(
                p=float(rec["p"]),
                trials=int(rec["trials"]),
                successes=int(rec["successes"]),
                phat=float(rec["phat"]),
                ci_low=float(rec["ci_low"]),
                ci_high=float(rec["ci_high"]),
            )
            for rec in frame.to_dict("records")
        ]
        return cls(rows=rows, metadata=metadata)


@dataclass(frozen=True)
class _TrialTask:
    pattern: Hypergraph
    n: int
    r: int
    grid: tuple[float, ...]
    trial: int
    seed: int
    coupled: bool
    budget: Optional[int]


def _run_trial(task: _TrialTask) -> tuple[list[bool], int]:
    """Outcomes along the (ascending) grid for one trial, plus budget-exhausted count."""
    outcomes: list[bool] = []
    unknown = 0
    previous = None
    if task.coupled:
        variates = edge_variates(task.n, task.r, derive_seed(task.seed, task.trial))
    for j, p in enumerate(task.grid):
        if not task.coupled:
            variates = edge_variates(task.n, task.r, derive_seed(task.seed, j, task.trial))
        host = hypergraph_below(task.n, task.r, variates, p)
        reuse = task.coupled and previous is not None
        if reuse and validate_embedding(host, task.pattern, previous):
            outcomes.append(True)
            continue
        result = find_embedding(host, task.pattern, spanning=True, budget=task.budget)
        if result.status == SearchStatus.BUDGET_EXHAUSTED:
            unknown += 1
        outcomes.append(result.found)
        previous = result.embedding if result.found else None
    return outcomes, unknown


def p_grid(pmin: float, pmax: float, steps: int) -> list[float]:
    if steps < 1:
        raise PreconditionError("A grid needs at least one step")
    if not 0.0 <= pmin <= pmax <= 1.0:
        raise PreconditionError(f"Need 0 <= pmin <= pmax <= 1, got {pmin}, {pmax}")
    if steps == 1:
        return [pmin]
    return [float(x) for x in np.round(np.linspace(pmin, pmax, steps), 12)]


def monte_carlo_curve(
    family: str,
    n: int,
    r: int,
    grid: Sequence[float],
    trials: int,
    seed: int,
    params: Optional[dict] = None,
    coupled: bool = True,
    budget: Optional[int] = None,
    jobs: Optional[int] = 1,
    stamp: bool = False,
) -> ThresholdCurve:
    """Estimate P(family instance is contained in H^(r)(n, p)) along a p-grid.

    stamp adds a UTC timestamp to the metadata; it is off by default so equal
    arguments give byte-identical CSV.
    """
    if trials < 1:
        raise PreconditionError(f"trials must be at least 1, got {trials}")
    if any(not 0.0 <= p <= 1.0 for p in grid):
        raise PreconditionError("Every grid probability must lie in [0, 1]")
    params = dict(params or {})
    pattern = build_family(family, n=n, r=r, **params)
    if pattern.n != n or pattern.r != r:
        raise PreconditionError(
            f"Family {family!r} built n={pattern.n}, r={pattern.r}; expected n={n}, r={r}"
        )

    ordered = sorted(set(float(p) for p in grid))
    tasks = [
        _TrialTask(pattern, n, r, tuple(ordered), t, seed, coupled, budget) for t in range(trials)
    ]
    results = parallel_map(_run_trial, tasks, jobs)

    successes = [0] * len(ordered)
    unknown = 0
    for outcomes, exhausted in results:
        unknown += exhausted
        for j, ok in enumerate(outcomes):
            successes[j] += ok

    rows = []
    for p, s in zip(ordered, successes):
        low, high = wilson_interval(s, trials)
        rows.append(CurveRow(p, trials, s, s / trials, low, high))

    metadata = {
        "family": family,
        "n": n,
        "r": r,
        "seed": seed,
        "trials": trials,
        "coupled": coupled,
        "budget_exhausted": unknown,
        "version": __version__,
    }
    if stamp:
        metadata["timestamp"] = datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
    metadata.update({f"param.{k}": v for k, v in sorted(params.items())})
    logger.info("curve %s n=%d r=%d: %s", family, n, r, [row.phat for row in rows])
    return ThresholdCurve(rows=rows, metadata=metadata)
