"""
spanhyper: Command Line Interface

Usage:
    spanhyper gen --type cube --r 3 --d 2 --out q.hg
    spanhyper gamma q.hg --table
    spanhyper fratio matching.hg --n 6 --m 3 --chebyshev
    spanhyper conditions cycle.hg --p 0.5
    spanhyper contain host.hg pattern.hg --spanning
    spanhyper threshold --family tight-hamilton --n 9 --r 3 --trials 300 --out curve.csv
    spanhyper embed host.hg pattern.hg --delta 2 --t 8 --epsilon 1/30 --trace trace.json
    spanhyper goodness host.hg --p 0.8 --delta 2 --mode sampled --samples 200
    spanhyper construct --method kr graph.g --r 3 --out h.hg
    spanhyper sigma f.hg --exact
    spanhyper verify-universal h.hg --n 20 --r 3 --delta 2 --samples 20
    spanhyper thresholds --family power --n 1000 --r 3 --i 2
    spanhyper run config.json
    spanhyper runs list

Every command builds a RunConfig document and hands it to run(), so
`spanhyper run` replays any recorded invocation exactly. Exit codes: 0 on
success (a negative answer such as "not contained" is still a success), 1 on
a domain failure, 2 on a usage error.
"""

import json
import logging
import sys
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional

import click

from spanhyper import __version__
from spanhyper.config import Settings, load_settings
from spanhyper.constructions import (
    clique_report,
    hitting_graph,
    hr_construction,
    kr_construction,
    random_universal_edge_estimate,
    sigma_conjecture_probe,
    universality_lower_bound,
    verify_universal_sampled,
)
from spanhyper.core.hgfile import atomic_write_text, read_hypergraph, write_hypergraph
from spanhyper.core.profiles import profile, profile_classes
from spanhyper.embedder import (
    check_goodness,
    embed_universal,
    host_partition,
    lemma_epsilon_bound,
    partition_pattern,
)
from spanhyper.errors import ConfigError, ParseError, PreconditionError, SpanHyperError
from spanhyper.generators import build_family, gnm, gnp, list_families, sample_bounded_degree
from spanhyper.reports import ReportRenderer
from spanhyper.runs import DEFAULT_LEDGER, RunStatus, RunTracker
from spanhyper.search import SearchStatus, find_embedding, monte_carlo_curve, p_grid
from spanhyper.thresholds import (
    chebyshev_check,
    check_riordan_conditions,
    expectation_lower_threshold,
    expectation_threshold,
    factor_threshold_lower_bound,
    family_threshold,
    fractional_density_m1,
    gamma,
    gamma_closed_form,
    kr_graph_probability,
    regular_gamma_bounds,
    second_moment_ratio,
    sharp_threshold_regular,
    universality_threshold,
)

logger = logging.getLogger(__name__)

RANDOM_TYPES = ("gnp", "gnm", "bounded")


# ---- Run documents ----


@dataclass(frozen=True)
class Field:
    kind: type
    required: bool = False
    default: object = None
    choices: Optional[tuple] = None


def _family_fields() -> dict[str, Field]:
    return {name: Field(int) for name in ("ell", "d", "k", "i", "t")}


SCHEMAS: dict[str, dict[str, Field]] = {
    "gen": {
        "type": Field(str, True, choices=tuple(sorted(RANDOM_TYPES + tuple(list_families())))),
        "n": Field(int),
        "r": Field(int),
        **_family_fields(),
        "delta": Field(int),
        "p": Field(float),
        "m": Field(int),
        "out": Field(str, True),
    },
    "gamma": {
        "file": Field(str, True),
        "table": Field(bool, default=False),
        "m1": Field(bool, default=False),
        "budget": Field(int),
    },
    "fratio": {
        "file": Field(str, True),
        "n": Field(int, True),
        "m": Field(int, True),
        "chebyshev": Field(bool, default=False),
        "out": Field(str),
    },
    "conditions": {
        "file": Field(str, True),
        "p": Field(float, True),
        "gamma": Field(str),
        "out": Field(str),
    },
    "contain": {
        "host": Field(str, True),
        "pattern": Field(str, True),
        "spanning": Field(bool, default=False),
        "budget": Field(int),
        "out": Field(str),
    },
    "threshold": {
        "family": Field(str, True, choices=tuple(list_families())),
        "n": Field(int, True),
        "r": Field(int, True),
        **_family_fields(),
        "pmin": Field(float, default=0.1),
        "pmax": Field(float, default=0.9),
        "steps": Field(int, default=9),
        "trials": Field(int, default=100),
        "coupled": Field(bool, default=True),
        "budget": Field(int),
        "out": Field(str),
    },
    "embed": {
        "host": Field(str, True),
        "pattern": Field(str, True),
        "delta": Field(int, True),
        "t": Field(int),
        "epsilon": Field(str),
        "class_size": Field(int),
        "attempts": Field(int, default=3),
        "lookahead": Field(bool, default=True),
        "budget": Field(int),
        "trace": Field(str),
    },
    "goodness": {
        "host": Field(str, True),
        "p": Field(float, True),
        "delta": Field(int, True),
        "mode": Field(str, default="sampled", choices=("exhaustive", "sampled")),
        "samples": Field(int, default=200),
        "t": Field(int),
        "epsilon": Field(str),
        "class_size": Field(int),
        "pattern": Field(str),
        "budget": Field(int),
        "out": Field(str),
    },
    "construct": {
        "method": Field(str, True, choices=("hr", "kr")),
        "graph": Field(str, True),
        "r": Field(int, True),
        "p": Field(float),
        "out": Field(str, True),
    },
    "sigma": {
        "file": Field(str, True),
        "exact": Field(bool, default=False),
        "budget": Field(int),
        "out": Field(str),
    },
    "verify-universal": {
        "host": Field(str, True),
        "n": Field(int, True),
        "r": Field(int, True),
        "delta": Field(int, True),
        "samples": Field(int, default=20),
        "graph": Field(str),
        "budget": Field(int),
        "out": Field(str),
    },
    "thresholds": {
        "family": Field(str, True, choices=tuple(list_families())),
        "n": Field(int, True),
        "r": Field(int, True),
        **_family_fields(),
        "delta": Field(int),
        "epsilon": Field(float, default=0.1),
        "c": Field(float, default=1.0),
    },
}


def _type_ok(value, kind: type) -> bool:
    if kind is bool:
        return isinstance(value, bool)
    if kind is int:
        return isinstance(value, int) and not isinstance(value, bool)
    if kind is float:
        return isinstance(value, (int, float)) and not isinstance(value, bool)
    return isinstance(value, kind)


def validate_params(command: str, params: dict) -> dict:
    """Check params against the command's schema; returns them with defaults filled in."""
    if command not in SCHEMAS:
        raise ConfigError(f"Unknown command {command!r}", ["command"])
    schema = SCHEMAS[command]
    problems: list[str] = []
    for name in sorted(set(params) - set(schema)):
        problems.append(f"params.{name}")
    checked = {}
    for name, spec in schema.items():
        value = params.get(name)
        if value is None:
            if spec.required:
                problems.append(f"params.{name}")
            elif spec.default is not None:
                checked[name] = spec.default
            continue
        if not _type_ok(value, spec.kind) or (spec.choices and value not in spec.choices):
            problems.append(f"params.{name}")
            continue
        checked[name] = float(value) if spec.kind is float else value
    if problems:
        raise ConfigError(f"Invalid {command} parameters: {', '.join(problems)}", problems)
    return checked


@dataclass
class RunConfig:
    """Declarative document for one command run."""

    command: str
    params: dict = field(default_factory=dict)
    seed: Optional[int] = None
    jobs: Optional[int] = None
    version: str = __version__

    def to_dict(self, with_jobs: bool = True) -> dict:
        data = {
            "command": self.command,
            "params": dict(sorted(self.params.items())),
            "seed": self.seed,
            "version": self.version,
        }
        if with_jobs:
            data["jobs"] = self.jobs
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        if not isinstance(data, dict):
            raise ConfigError("A run document must be a JSON object", ["$"])
        problems = []
        command = data.get("command")
        if not isinstance(command, str) or command not in SCHEMAS:
            problems.append("command")
        params = data.get("params", {})
        if not isinstance(params, dict):
            problems.append("params")
        for name in ("seed", "jobs"):
            value = data.get(name)
            if value is not None and not _type_ok(value, int):
                problems.append(name)
        unknown = sorted(set(data) - {"command", "params", "seed", "jobs", "version"})
        problems.extend(unknown)
        if problems:
            raise ConfigError(f"Invalid run document: {', '.join(problems)}", problems)
        return cls(
            command=command,
            params=dict(params),
            seed=data.get("seed"),
            jobs=data.get("jobs"),
            version=data.get("version", __version__),
        )

    @classmethod
    def from_json(cls, text: str) -> "RunConfig":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"Run document is not valid JSON: {exc}", ["$"])
        return cls.from_dict(data)

    def embedded(self) -> dict:
        """The document as carried in output metadata; jobs never affects outputs."""
        return self.to_dict(with_jobs=False)


@dataclass
class CommandResult:
    exit_code: int = 0
    data: dict = field(default_factory=dict)
    text: str = ""
    artifacts: list[str] = field(default_factory=list)
    error: Optional[str] = None

    @property
    def summary(self) -> str:
        if self.error:
            return self.error
        return self.text.splitlines()[0] if self.text else ""


# ---- Command handlers ----


def _seed(config: RunConfig) -> int:
    return 0 if config.seed is None else config.seed


def _budget(params: dict, settings: Settings) -> int:
    return params.get("budget") or settings.search_budget


def _family_params(params: dict) -> dict:
    return {k: params.get(k) for k in ("n", "r", "ell", "d", "k", "i", "t")}


def _fraction(text: Optional[str], name: str) -> Optional[Fraction]:
    if text is None:
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise PreconditionError(f"{name} must be a rational such as 1/30, got {text!r}")


def _compact(config: RunConfig) -> str:
    return json.dumps(config.embedded(), sort_keys=True, separators=(",", ":"))


def _json_out(result: CommandResult, params: dict) -> CommandResult:
    if params.get("out"):
        path = atomic_write_text(params["out"], json.dumps(result.data, indent=2, sort_keys=True))
        result.artifacts.append(str(path))
    return result


def _cmd_gen(params: dict, config: RunConfig, settings: Settings) -> CommandResult:
    kind, seed = params["type"], _seed(config)
    n, r = params.get("n"), params.get("r")
    if kind in RANDOM_TYPES and (n is None or r is None):
        raise PreconditionError(f"--type {kind} needs --n and --r")
    if kind == "gnp":
        if params.get("p") is None:
            raise PreconditionError("--type gnp needs --p")
        h = gnp(n, r, params["p"], seed)
    elif kind == "gnm":
        if params.get("m") is None:
            raise PreconditionError("--type gnm needs --m")
        h = gnm(n, r, params["m"], seed)
    elif kind == "bounded":
        if params.get("delta") is None:
            raise PreconditionError("--type bounded needs --delta")
        h = sample_bounded_degree(
            n, r, params["delta"], seed, rejection_factor=settings.rejection_factor
        )
    else:
        h = build_family(kind, seed=seed if kind == "sphere" else None, **_family_params(params))

    metadata = {"command": "gen", "type": kind, "seed": seed, "version": __version__}
    metadata["config"] = _compact(config)
    path = write_hypergraph(h, params["out"], metadata)
    data = {"file": str(path), "r": h.r, "n": h.n, "m": h.m, "max_degree": h.max_degree}
    data["config"] = config.embedded()
    text = f"Wrote {path}: r={h.r}, {h.n} vertices, {h.m} edges, max degree {h.max_degree}\n"
    return CommandResult(0, data, text, [str(path)])


def _cmd_gamma(params: dict, config: RunConfig, settings: Settings) -> CommandResult:
    h = read_hypergraph(params["file"])
    if h.m == 0:
        raise PreconditionError("gamma needs at least one edge")
    report = gamma(h, budget=_budget(params, settings))
    threshold = expectation_threshold(report.gamma, h.n) if report.gamma > 0 else None
    data = report.to_dict()
    if not params["table"]:
        data.pop("e_sub_table")
    data["expectation_threshold"] = threshold
    data["config"] = config.embedded()
    text = ReportRenderer().gamma(report, threshold, table=params["table"])
    if params["m1"]:
        m1 = fractional_density_m1(h, max_vertices=settings.m1_vertex_cap)
        data["m1"] = str(m1)
        text += f"m1 = {m1}\n"
    return CommandResult(0, data, text)


def _cmd_fratio(params: dict, config: RunConfig, settings: Settings) -> CommandResult:
    pattern = read_hypergraph(params["file"])
    report = second_moment_ratio(
        pattern,
        params["n"],
        params["m"],
        universe_cap=settings.pair_universe_cap,
        copies_cap=settings.copies_cap,
        automorphism_cap=settings.automorphism_vertex_cap,
    )
    check = None
    if params["chebyshev"]:
        check = chebyshev_check(report, host_cap=settings.host_enumeration_cap)
    data = report.to_dict()
    data["chebyshev"] = check.to_dict() if check else None
    data["config"] = config.embedded()
    result = CommandResult(0, data, ReportRenderer().fratio(report, check))
    return _json_out(result, params)


def _cmd_conditions(params: dict, config: RunConfig, settings: Settings) -> CommandResult:
    h = read_hypergraph(params["file"])
    report = check_riordan_conditions(h, params["p"], _fraction(params.get("gamma"), "gamma"))
    data = report.to_dict()
    data["config"] = config.embedded()
    return _json_out(CommandResult(0, data, ReportRenderer().conditions(report)), params)


def _cmd_contain(params: dict, config: RunConfig, settings: Settings) -> CommandResult:
    host = read_hypergraph(params["host"])
    pattern = read_hypergraph(params["pattern"])
    result = find_embedding(
        host, pattern, spanning=params["spanning"], budget=_budget(params, settings)
    )
    data = result.to_dict()
    data["config"] = config.embedded()
    if result.status == SearchStatus.FOUND:
        pairs = ", ".join(f"{k}->{v}" for k, v in result.embedding.to_dict().items())
        text = f"contained ({result.nodes} search nodes)\n{pairs}\n"
    elif result.status == SearchStatus.NOT_FOUND:
        text = f"not contained ({result.nodes} search nodes)\n"
    else:
        text = f"undecided: search budget exhausted after {result.nodes} nodes\n"
    code = 1 if result.status == SearchStatus.BUDGET_EXHAUSTED else 0
    return _json_out(CommandResult(code, data, text), params)


def _cmd_threshold(params: dict, config: RunConfig, settings: Settings) -> CommandResult:
    extra = {k: params[k] for k in ("ell", "d", "k", "i", "t") if params.get(k) is not None}
    curve = monte_carlo_curve(
        params["family"],
        params["n"],
        params["r"],
        p_grid(params["pmin"], params["pmax"], params["steps"]),
        params["trials"],
        _seed(config),
        params=extra,
        coupled=params["coupled"],
        budget=_budget(params, settings),
        jobs=config.jobs,
    )
    curve.metadata["config"] = json.dumps(config.embedded(), sort_keys=True)
    data = {"metadata": curve.metadata, "rows": curve.to_frame().to_dict("records")}
    artifacts = []
    if params.get("out"):
        artifacts.append(str(curve.to_csv(params["out"])))
        text = f"Wrote {artifacts[0]} ({len(curve.rows)} grid points)\n"
    else:
        text = curve.to_csv_text()
    return CommandResult(0, data, text, artifacts)


def _cmd_embed(params: dict, config: RunConfig, settings: Settings) -> CommandResult:
    host = read_hypergraph(params["host"])
    f = read_hypergraph(params["pattern"])
    delta, t = params["delta"], params.get("t")
    epsilon = _fraction(params.get("epsilon"), "epsilon")
    if epsilon is None:
        epsilon = lemma_epsilon_bound(len(profile_classes(f)), t or f.r**3 * delta**3)
    ep = partition_pattern(f, delta, epsilon, t_override=t)
    hp = host_partition(host.n, ep.t, ep.epsilon, class_size=params.get("class_size"))
    trace = embed_universal(
        host,
        f,
        hp,
        ep,
        seed=_seed(config),
        attempts=params["attempts"],
        lookahead=params["lookahead"],
        budget=_budget(params, settings),
    )
    data = trace.to_dict()
    data["partition"] = ep.to_dict()
    data["host_partition"] = {"class_sizes": [len(c) for c in hp.classes]}
    data["config"] = config.embedded()
    artifacts = []
    if params.get("trace"):
        path = atomic_write_text(params["trace"], json.dumps(data, indent=2, sort_keys=True))
        artifacts.append(str(path))
    text = ReportRenderer().embed_trace(trace)
    return CommandResult(0 if trace.success else 1, data, text, artifacts)


def _cmd_goodness(params: dict, config: RunConfig, settings: Settings) -> CommandResult:
    host = read_hypergraph(params["host"])
    delta = params["delta"]
    t = params.get("t") or host.r**3 * delta**3
    epsilon = _fraction(params.get("epsilon"), "epsilon") or Fraction(1, host.r * delta)
    hp = host_partition(host.n, t, epsilon, class_size=params.get("class_size"))
    profiles = None
    if params.get("pattern"):
        f = read_hypergraph(params["pattern"])
        profiles = [profile(f, vs[0]) for vs in profile_classes(f).values()]
    report = check_goodness(
        host,
        hp,
        params["p"],
        delta,
        mode=params["mode"],
        samples=params["samples"],
        seed=_seed(config),
        profiles=profiles,
        budget=_budget(params, settings),
        cap=settings.exhaustive_goodness_cap,
        jobs=config.jobs,
    )
    data = report.to_dict()
    data["config"] = config.embedded()
    return _json_out(CommandResult(0, data, ReportRenderer().goodness(report)), params)


def _cmd_construct(params: dict, config: RunConfig, settings: Settings) -> CommandResult:
    g = read_hypergraph(params["graph"])
    r = params["r"]
    build = hr_construction if params["method"] == "hr" else kr_construction
    h = build(g, r)
    metadata = {"command": "construct", "method": params["method"], "version": __version__}
    metadata["config"] = _compact(config)
    path = write_hypergraph(h, params["out"], metadata)
    data = {"file": str(path), "r": r, "n": h.n, "m": h.m, "graph_edges": g.m}
    data["config"] = config.embedded()
    text = f"Wrote {path}: {params['method'].upper()}-construction with {h.m} edges\n"
    if params.get("p") is not None and params["method"] == "kr":
        report = clique_report(g, r, params["p"])
        data["cliques"] = report.to_dict()
        text += f"measured K_{r} count {report.measured}, n^r p^C(r,2) = {report.estimate:.6g}\n"
    return CommandResult(0, data, text, [str(path)])


def _cmd_sigma(params: dict, config: RunConfig, settings: Settings) -> CommandResult:
    f = read_hypergraph(params["file"])
    budget = _budget(params, settings)
    hg = hitting_graph(f, budget=budget)
    data = {"hitting_graph": hg.to_dict(), "delta": f.max_degree, "config": config.embedded()}
    text = f"hitting graph: {hg.graph.m} edges, max degree {hg.max_degree} <= Delta(F) = "
    text += f"{f.max_degree}\n"
    if params["exact"]:
        probe = sigma_conjecture_probe(f, budget=budget, max_vertices=settings.sigma_vertex_cap)
        data["sigma"] = probe.to_dict()
        text += f"sigma(F) = {probe.sigma}; ceil(2 Delta / r) = {probe.conjectured}\n"
    if params.get("out"):
        path = write_hypergraph(
            hg.graph, params["out"], {"command": "sigma", "config": _compact(config)}
        )
        return CommandResult(0, data, text, [str(path)])
    return CommandResult(0, data, text)


def _cmd_verify_universal(params: dict, config: RunConfig, settings: Settings) -> CommandResult:
    h = read_hypergraph(params["host"])
    graph = read_hypergraph(params["graph"]) if params.get("graph") else None
    report = verify_universal_sampled(
        h,
        params["n"],
        params["r"],
        params["delta"],
        params["samples"],
        _seed(config),
        graph=graph,
        budget=_budget(params, settings),
        jobs=config.jobs,
        rejection_factor=settings.rejection_factor,
    )
    data = report.to_dict()
    data["config"] = config.embedded()
    return _json_out(CommandResult(0, data, ReportRenderer().universal(report)), params)


def _safely(fn: Callable[[], object]):
    try:
        return fn()
    except (PreconditionError, KeyError, TypeError, ValueError, ZeroDivisionError):
        return None


def _cmd_thresholds(params: dict, config: RunConfig, settings: Settings) -> CommandResult:
    family, n, r = params["family"], params["n"], params["r"]
    fam = {k: v for k, v in _family_params(params).items() if v is not None}
    delta = params.get("delta")
    g = _safely(lambda: gamma_closed_form(family, **fam))
    values = {
        "gamma": None if g is None else str(g),
        "expectation_threshold": _safely(lambda: expectation_threshold(g, n)),
        "expectation_lower_threshold": _safely(
            lambda: expectation_lower_threshold(g, n, params["epsilon"])
        ),
        "family_threshold": _safely(
            lambda: family_threshold(
                family, n, **{k: v for k, v in fam.items() if k != "n"}, delta=delta
            )
        ),
    }
    if delta is not None:
        values.update(
            {
                "sharp_threshold_regular": _safely(lambda: sharp_threshold_regular(n, r, delta)),
                "regular_gamma_bounds": _safely(lambda: list(regular_gamma_bounds(r, delta))),
                "universality_threshold": _safely(
                    lambda: universality_threshold(n, delta, params["c"])
                ),
                "kr_graph_probability": _safely(
                    lambda: kr_graph_probability(n, r, delta, params["c"])
                ),
                "universality_lower_bound": _safely(
                    lambda: universality_lower_bound(n, r, delta)
                ),
                "random_universal_edge_estimate": _safely(
                    lambda: random_universal_edge_estimate(n, r, delta)
                ),
            }
        )
    if params.get("t") is not None:
        values["factor_threshold_lower_bound"] = _safely(
            lambda: factor_threshold_lower_bound(n, r, params["t"])
        )
    text = "".join(
        f"{name:32s} {'n/a' if value is None else value}\n" for name, value in values.items()
    )
    values["config"] = config.embedded()
    return CommandResult(0, values, text)


HANDLERS: dict[str, Callable[[dict, RunConfig, Settings], CommandResult]] = {
    "gen": _cmd_gen,
    "gamma": _cmd_gamma,
    "fratio": _cmd_fratio,
    "conditions": _cmd_conditions,
    "contain": _cmd_contain,
    "threshold": _cmd_threshold,
    "embed": _cmd_embed,
    "goodness": _cmd_goodness,
    "construct": _cmd_construct,
    "sigma": _cmd_sigma,
    "verify-universal": _cmd_verify_universal,
    "thresholds": _cmd_thresholds,
}


def run(config: RunConfig, settings: Optional[Settings] = None) -> CommandResult:
    """Validate config and dispatch it; errors become exit codes, never exceptions."""
    try:
        settings = settings or load_settings()
        params = validate_params(config.command, config.params)
        return HANDLERS[config.command](params, config, settings)
    except (ParseError, ConfigError, PreconditionError, FileNotFoundError) as exc:
        return CommandResult(exit_code=2, error=str(exc))
    except SpanHyperError as exc:
        return CommandResult(exit_code=1, error=f"{type(exc).__name__}: {exc}")


# ---- Click surface ----


def _now() -> datetime:
    return datetime.now(timezone.utc).replace(tzinfo=None)


def _ledger_path(ctx: click.Context) -> Optional[Path]:
    explicit = ctx.obj.get("ledger") if ctx.obj else None
    if explicit:
        return Path(explicit)
    try:
        return load_settings().ledger_path
    except ConfigError:
        return None


def _execute(ctx: click.Context, config: RunConfig, as_json: bool = False) -> None:
    started = _now()
    result = run(config)
    if result.error:
        click.echo(f"Error: {result.error}", err=True)
    elif as_json:
        click.echo(json.dumps(result.data, indent=2, sort_keys=True, default=str))
    else:
        click.echo(result.text, nl=False)

    ledger = _ledger_path(ctx)
    if ledger:
        record_id = RunTracker(ledger).record(
            config.command,
            config.to_dict(),
            result.exit_code,
            summary=result.summary,
            artifacts=result.artifacts,
            seed=config.seed,
            started_at=started,
            finished_at=_now(),
        )
        logger.info("recorded run %d in %s", record_id, ledger)
    sys.exit(result.exit_code)


def _config(command: str, seed=None, jobs=None, **params) -> RunConfig:
    return RunConfig(
        command=command,
        params={k: v for k, v in params.items() if v is not None},
        seed=seed,
        jobs=jobs,
    )


def _family_options(fn):
    for name, help_text in reversed(
        [
            ("--ell", "Overlap of consecutive edges (hamilton)"),
            ("--d", "Dimension (cube)"),
            ("--k", "Side parameter (lattice)"),
            ("--i", "Power (power)"),
            ("--t", "Block size (kfactor)"),
        ]
    ):
        fn = click.option(name, type=int, default=None, help=help_text)(fn)
    return fn


json_option = click.option("--json", "as_json", is_flag=True, help="Print the result as JSON")
seed_option = click.option("--seed", type=int, default=None, help="Root seed (default 0)")
jobs_option = click.option(
    "--jobs", type=int, default=None, help="Worker processes (default: all cores)"
)
budget_option = click.option("--budget", type=int, default=None, help="Search node budget")


@click.group()
@click.version_option(version=__version__)
@click.option("--ledger", default=None, type=click.Path(dir_okay=False), help="Record runs here")
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG logging")
@click.pass_context
def cli(ctx, ledger, verbose):
    """Spanning structures in random hypergraphs.

    Generators, density parameters and thresholds, exact containment search,
    Monte Carlo curves, the staged universality embedder and sparse
    universal constructions.
    """
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("spanhyper").setLevel(level)
    ctx.ensure_object(dict)
    ctx.obj["ledger"] = ledger


@cli.command("gen")
@click.option("--type", "kind", required=True, help="gnp, gnm, bounded or a family name")
@click.option("--n", type=int, default=None, help="Number of vertices")
@click.option("--r", type=int, default=None, help="Uniformity")
@_family_options
@click.option("--delta", type=int, default=None, help="Maximum degree (bounded)")
@click.option("--p", type=float, default=None, help="Edge probability (gnp)")
@click.option("--m", type=int, default=None, help="Edge count (gnm)")
@seed_option
@click.option("--out", required=True, help="Output .hg file")
@json_option
@click.pass_context
def gen(ctx, kind, n, r, ell, d, k, i, t, delta, p, m, seed, out, as_json):
    """Generate a hypergraph and write it as .hg."""
    config = _config(
        "gen", seed=seed, type=kind, n=n, r=r, ell=ell, d=d, k=k, i=i, t=t, delta=delta,
        p=p, m=m, out=out,
    )
    _execute(ctx, config, as_json)


@cli.command("gamma")
@click.argument("file", type=click.Path())
@click.option("--table", is_flag=True, help="Show the full e_H(v) table")
@click.option("--m1", is_flag=True, help="Also report m1(H) = max e/(v-1)")
@budget_option
@json_option
@click.pass_context
def gamma_cmd(ctx, file, table, m1, budget, as_json):
    """Exact gamma(H) = max e_H(v)/(v-2)."""
    _execute(ctx, _config("gamma", file=file, table=table, m1=m1, budget=budget), as_json)


@cli.command("fratio")
@click.argument("file", type=click.Path())
@click.option("--n", type=int, required=True, help="Host order")
@click.option("--m", type=int, required=True, help="Host edge count")
@click.option("--chebyshev", is_flag=True, help="Compare with exact P(X = 0)")
@click.option("--out", default=None, help="Write the JSON result here")
@json_option
@click.pass_context
def fratio(ctx, file, n, m, chebyshev, out, as_json):
    """Second-moment ratio E(X^2)/E(X)^2 in H(n, m)."""
    config = _config("fratio", file=file, n=n, m=m, chebyshev=chebyshev, out=out)
    _execute(ctx, config, as_json)


@cli.command("conditions")
@click.argument("file", type=click.Path())
@click.option("--p", type=float, required=True, help="Edge probability")
@click.option("--gamma", "gamma_value", default=None, help="Use this gamma (e.g. 3/2)")
@click.option("--out", default=None, help="Write the JSON result here")
@json_option
@click.pass_context
def conditions(ctx, file, p, gamma_value, out, as_json):
    """Evaluate the containment theorem's hypotheses at (n, p)."""
    config = _config("conditions", file=file, p=p, gamma=gamma_value, out=out)
    _execute(ctx, config, as_json)


@cli.command("contain")
@click.argument("host", type=click.Path())
@click.argument("pattern", type=click.Path())
@click.option("--spanning", is_flag=True, help="Require equal vertex counts")
@budget_option
@click.option("--out", default=None, help="Write the JSON result here")
@json_option
@click.pass_context
def contain(ctx, host, pattern, spanning, budget, out, as_json):
    """Decide whether PATTERN embeds into HOST."""
    config = _config(
        "contain", host=host, pattern=pattern, spanning=spanning, budget=budget, out=out
    )
    _execute(ctx, config, as_json)


@cli.command("threshold")
@click.option("--family", required=True, help="Family name")
@click.option("--n", type=int, required=True, help="Number of vertices")
@click.option("--r", type=int, required=True, help="Uniformity")
@_family_options
@click.option("--pmin", type=float, default=0.1, show_default=True)
@click.option("--pmax", type=float, default=0.9, show_default=True)
@click.option("--steps", type=int, default=9, show_default=True)
@click.option("--trials", type=int, default=100, show_default=True)
@click.option("--uncoupled", is_flag=True, help="Independent hosts per grid point")
@budget_option
@seed_option
@jobs_option
@click.option("--out", default=None, help="Output CSV (stdout when omitted)")
@json_option
@click.pass_context
def threshold(
    ctx, family, n, r, ell, d, k, i, t, pmin, pmax, steps, trials, uncoupled, budget, seed,
    jobs, out, as_json,
):
    """Monte Carlo containment curve over a p-grid."""
    config = _config(
        "threshold", seed=seed, jobs=jobs, family=family, n=n, r=r, ell=ell, d=d, k=k, i=i,
        t=t, pmin=pmin, pmax=pmax, steps=steps, trials=trials, coupled=not uncoupled,
        budget=budget, out=out,
    )
    _execute(ctx, config, as_json)


@cli.command("embed")
@click.argument("host", type=click.Path())
@click.argument("pattern", type=click.Path())
@click.option("--delta", type=int, required=True, help="Degree bound of the pattern")
@click.option("--t", type=int, default=None, help="Number of classes (default r^3 Delta^3)")
@click.option("--epsilon", default=None, help="Rational epsilon, e.g. 1/30")
@click.option("--class-size", type=int, default=None, help="Size of V_1..V_t")
@click.option("--attempts", type=int, default=3, show_default=True)
@click.option("--no-lookahead", is_flag=True, help="Match each stage on its own")
@budget_option
@seed_option
@click.option("--trace", "trace_path", default=None, help="Write the trace JSON here")
@json_option
@click.pass_context
def embed(
    ctx, host, pattern, delta, t, epsilon, class_size, attempts, no_lookahead, budget, seed,
    trace_path, as_json,
):
    """Staged Hall-matching embedding of PATTERN into HOST."""
    config = _config(
        "embed", seed=seed, host=host, pattern=pattern, delta=delta, t=t, epsilon=epsilon,
        class_size=class_size, attempts=attempts, lookahead=not no_lookahead, budget=budget,
        trace=trace_path,
    )
    _execute(ctx, config, as_json)


@cli.command("goodness")
@click.argument("host", type=click.Path())
@click.option("--p", type=float, required=True, help="Edge probability")
@click.option("--delta", type=int, required=True, help="Degree bound")
@click.option("--mode", type=click.Choice(["exhaustive", "sampled"]), default="sampled")
@click.option("--samples", type=int, default=200, show_default=True)
@click.option("--t", type=int, default=None, help="Number of classes (default r^3 Delta^3)")
@click.option("--epsilon", default=None, help="Rational epsilon (default 1/(r Delta))")
@click.option("--class-size", type=int, default=None, help="Size of V_1..V_t")
@click.option("--pattern", default=None, type=click.Path(), help="Check this pattern's profiles")
@budget_option
@seed_option
@jobs_option
@click.option("--out", default=None, help="Write the JSON result here")
@json_option
@click.pass_context
def goodness(
    ctx, host, p, delta, mode, samples, t, epsilon, class_size, pattern, budget, seed, jobs,
    out, as_json,
):
    """Check the three goodness properties of HOST."""
    config = _config(
        "goodness", seed=seed, jobs=jobs, host=host, p=p, delta=delta, mode=mode,
        samples=samples, t=t, epsilon=epsilon, class_size=class_size, pattern=pattern,
        budget=budget, out=out,
    )
    _execute(ctx, config, as_json)


@cli.command("construct")
@click.option("--method", type=click.Choice(["hr", "kr"]), required=True)
@click.argument("graph", type=click.Path())
@click.option("--r", type=int, required=True, help="Uniformity")
@click.option("--p", type=float, default=None, help="Report clique counts against this p")
@click.option("--out", required=True, help="Output .hg file")
@json_option
@click.pass_context
def construct(ctx, method, graph, r, p, out, as_json):
    """Build H_r(G) or K_r(G) from a graph file."""
    _execute(ctx, _config("construct", method=method, graph=graph, r=r, p=p, out=out), as_json)


@cli.command("sigma")
@click.argument("file", type=click.Path())
@click.option("--exact", is_flag=True, help="Also compute sigma(F) exactly")
@budget_option
@click.option("--out", default=None, help="Write the hitting graph as .hg")
@json_option
@click.pass_context
def sigma(ctx, file, exact, budget, out, as_json):
    """Hitting graph with maximum degree at most Delta(F)."""
    _execute(ctx, _config("sigma", file=file, exact=exact, budget=budget, out=out), as_json)


@cli.command("verify-universal")
@click.argument("host", type=click.Path())
@click.option("--n", type=int, required=True, help="Order of the sampled hypergraphs")
@click.option("--r", type=int, required=True, help="Uniformity")
@click.option("--delta", type=int, required=True, help="Degree bound")
@click.option("--samples", type=int, default=20, show_default=True)
@click.option("--graph", default=None, type=click.Path(), help="HOST is K_r of this graph")
@budget_option
@seed_option
@jobs_option
@click.option("--out", default=None, help="Write the JSON result here")
@json_option
@click.pass_context
def verify_universal(ctx, host, n, r, delta, samples, graph, budget, seed, jobs, out, as_json):
    """Sampled universality check of HOST for F^(r)(n, Delta)."""
    config = _config(
        "verify-universal", seed=seed, jobs=jobs, host=host, n=n, r=r, delta=delta,
        samples=samples, graph=graph, budget=budget, out=out,
    )
    _execute(ctx, config, as_json)


@cli.command("thresholds")
@click.option("--family", required=True, help="Family name")
@click.option("--n", type=int, required=True, help="Number of vertices")
@click.option("--r", type=int, required=True, help="Uniformity")
@_family_options
@click.option("--delta", type=int, default=None, help="Degree bound")
@click.option("--epsilon", type=float, default=0.1, show_default=True)
@click.option("--c", type=float, default=1.0, show_default=True, help="Leading constant")
@json_option
@click.pass_context
def thresholds(ctx, family, n, r, ell, d, k, i, t, delta, epsilon, c, as_json):
    """Threshold formulas evaluated for a family at n."""
    config = _config(
        "thresholds", family=family, n=n, r=r, ell=ell, d=d, k=k, i=i, t=t, delta=delta,
        epsilon=epsilon, c=c,
    )
    _execute(ctx, config, as_json)


@cli.command("run")
@click.argument("config_file", type=click.Path())
@json_option
@click.pass_context
def run_cmd(ctx, config_file, as_json):
    """Execute a RunConfig JSON document."""
    try:
        config = RunConfig.from_json(Path(config_file).read_text(encoding="utf-8"))
    except FileNotFoundError:
        click.echo(f"Error: no such file: {config_file}", err=True)
        sys.exit(2)
    except ConfigError as exc:
        click.echo(f"Error: {exc}", err=True)
        sys.exit(2)
    _execute(ctx, config, as_json)


# ---- Ledger ----


@cli.group()
@click.pass_context
def runs(ctx):
    """Query the run ledger."""
    pass


def _tracker(ctx: click.Context) -> RunTracker:
    return RunTracker(_ledger_path(ctx) or DEFAULT_LEDGER)


@runs.command("list")
@click.option("--status", type=click.Choice([s.value for s in RunStatus]), default=None)
@click.option("--command", "command_name", default=None, help="Only runs of this command")
@click.pass_context
def runs_list(ctx, status, command_name):
    """List recorded runs, newest first."""
    records = _tracker(ctx).get_all(RunStatus(status) if status else None, command_name)
    if records:
        for r in records:
            click.echo(f"  [{r['id']}] [{r['status']:14s}] {r['command']:16s} {r['summary'] or ''}")
    else:
        click.echo("No runs recorded yet.")


@runs.command("show")
@click.argument("record_id", type=int)
@click.pass_context
def runs_show(ctx, record_id):
    """Show one run as JSON."""
    record = _tracker(ctx).get_by_id(record_id)
    if record is None:
        click.echo(f"Run not found: {record_id}")
        sys.exit(1)
    click.echo(json.dumps(record, indent=2))


@runs.command("stats")
@click.pass_context
def runs_stats(ctx):
    """Counts by status and command."""
    click.echo(json.dumps(_tracker(ctx).get_stats(), indent=2))


@runs.command("export")
@click.option("--out", default=None, help="Output JSON file (stdout when omitted)")
@click.pass_context
def runs_export(ctx, out):
    """Export every run as JSON."""
    data = _tracker(ctx).export_json(out)
    if out:
        click.echo(f"Exported to: {out}")
    else:
        click.echo(data)


def main():
    cli()


if __name__ == "__main__":
    main()
