"""
Budgets, oracle caps and environment overrides.

Every exact procedure in spanhyper takes its limits from a Settings instance.
The defaults below are the desk-scale values; SPANHYPER_BUDGET and
SPANHYPER_LEDGER override the search budget and the run ledger location.
"""

import os
from dataclasses import asdict, dataclass, replace
from pathlib import Path
from typing import Mapping, Optional

from spanhyper.errors import ConfigError

DEFAULT_LIMITS = {
    "search_budget": 10**7,
    "copies_cap": 500,
    "pair_universe_cap": 25,
    "host_enumeration_cap": 250_000,
    "automorphism_vertex_cap": 12,
    "sigma_vertex_cap": 12,
    "m1_vertex_cap": 20,
    "exhaustive_goodness_cap": 100_000,
    "rejection_factor": 50,
}

ENV_BUDGET = "SPANHYPER_BUDGET"
ENV_LEDGER = "SPANHYPER_LEDGER"


@dataclass(frozen=True)
class Settings:
    """Caps and budgets for the exact oracles and searches."""

    search_budget: int = DEFAULT_LIMITS["search_budget"]
    copies_cap: int = DEFAULT_LIMITS["copies_cap"]
    pair_universe_cap: int = DEFAULT_LIMITS["pair_universe_cap"]
    host_enumeration_cap: int = DEFAULT_LIMITS["host_enumeration_cap"]
    automorphism_vertex_cap: int = DEFAULT_LIMITS["automorphism_vertex_cap"]
    sigma_vertex_cap: int = DEFAULT_LIMITS["sigma_vertex_cap"]
    m1_vertex_cap: int = DEFAULT_LIMITS["m1_vertex_cap"]
    exhaustive_goodness_cap: int = DEFAULT_LIMITS["exhaustive_goodness_cap"]
    rejection_factor: int = DEFAULT_LIMITS["rejection_factor"]
    ledger_path: Optional[Path] = None

    def __post_init__(self):
        for name in DEFAULT_LIMITS:
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ConfigError(f"{name} must be a positive integer, got {value!r}", [name])

    def to_dict(self) -> dict:
        data = asdict(self)
        data["ledger_path"] = str(self.ledger_path) if self.ledger_path else None
        return data


def load_settings(env: Optional[Mapping[str, str]] = None, **overrides) -> Settings:
    """Build Settings from defaults, then the environment, then explicit overrides."""
    env = os.environ if env is None else env
    settings = Settings()

    raw_budget = env.get(ENV_BUDGET)
    if raw_budget:
        try:
            budget = int(raw_budget)
        except ValueError:
            raise ConfigError(f"{ENV_BUDGET} must be an integer, got {raw_budget!r}", [ENV_BUDGET])
        settings = replace(settings, search_budget=budget)

    raw_ledger = env.get(ENV_LEDGER)
    if raw_ledger:
        settings = replace(settings, ledger_path=Path(raw_ledger).expanduser())

    overrides = {k: v for k, v in overrides.items() if v is not None}
    if overrides:
        unknown = sorted(set(overrides) - set(Settings.__dataclass_fields__))
        if unknown:
            raise ConfigError(f"Unknown settings: {', '.join(unknown)}", unknown)
        settings = replace(settings, **overrides)
    return settings


def default_budget() -> int:
    """Search node budget after applying SPANHYPER_BUDGET."""
    return load_settings().search_budget
