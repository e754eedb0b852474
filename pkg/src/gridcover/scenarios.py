"""Scenario generation and experiment campaigns.

Instances place agents uniformly at random (with replacement) on the grid
using the SplitMix64 stream derived from (seed, trial_index), so every row
any campaign emits is reproducible from the configuration alone.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field, replace
from typing import List, Sequence, Union

from . import rng
from .baselines import isolated_greedy, sequential_greedy
from .grid import ACTIONS, AgentSpec, World
from .objective import BudgetExceededError, CoverageModel, brute_force_opt, check_axioms
from .sim import run_rag
from .topology import Topology, build_from_range, overlap_exact

ALGORITHMS = ("rag", "sequential", "isolated")

VERIFY_MAX_AGENTS = 6

CSV_COLUMNS = (
    "trial", "algorithm", "objective", "comm_rounds", "iterations",
    "total_evals", "gain_msgs", "action_msgs", "payload_bytes",
)

SWEEP_COLUMNS = (
    "comm_range", "objective", "comm_rounds", "iterations",
    "total_evals", "gain_msgs", "action_msgs", "payload_bytes",
)


class ConfigError(ValueError):
    """Invalid scenario configuration; carries the offending field name."""

    def __init__(self, fieldname: str, message: str):
        super().__init__(f"{fieldname}: {message}")
        self.fieldname = fieldname


@dataclass(frozen=True)
class ScenarioConfig:
    grid_w: int = 50
    grid_h: int = 50
    n_agents: int = 10
    sense_radius: float = 10.0
    comm_range: Union[float, tuple[float, ...]] = 15.0
    seed: int = 0
    trials: int = 1
    algorithm: str = "rag"

    def __post_init__(self):
        if self.grid_w < 1:
            raise ConfigError("grid_w", "must be >= 1")
        if self.grid_h < 1:
            raise ConfigError("grid_h", "must be >= 1")
        if self.n_agents < 1:
            raise ConfigError("n_agents", "must be >= 1")
        if self.sense_radius <= 0:
            raise ConfigError("sense_radius", "must be > 0")
        if self.trials < 1:
            raise ConfigError("trials", "must be >= 1")
        if self.algorithm not in ALGORITHMS:
            raise ConfigError("algorithm", f"must be one of {ALGORITHMS}")
        ranges = self.comm_ranges()
        if len(ranges) != self.n_agents:
            raise ConfigError("comm_range", f"need 1 or {self.n_agents} values, got {len(ranges)}")
        if any(r < 0 for r in ranges):
            raise ConfigError("comm_range", "must be >= 0")

    def comm_ranges(self) -> tuple[float, ...]:
        if isinstance(self.comm_range, (int, float)):
            return (float(self.comm_range),) * self.n_agents
        return tuple(float(r) for r in self.comm_range)


@dataclass(frozen=True)
class TrialRow:
    trial: int
    algorithm: str
    objective: int
    comm_rounds: int
    iterations: int
    total_evals: int
    gain_msgs: int
    action_msgs: int
    payload_bytes: int


def generate_scenario(cfg: ScenarioConfig, trial_index: int) -> tuple[World, list[AgentSpec], Topology]:
    """Deterministic instance for (cfg.seed, trial_index)."""
    world = World(cfg.grid_w, cfg.grid_h)
    gen = rng.stream(cfg.seed, trial_index)
    ranges = cfg.comm_ranges()
    agents = []
    for i in range(cfg.n_agents):
        pos = (gen.randrange(cfg.grid_w), gen.randrange(cfg.grid_h))
        agents.append(AgentSpec(i, pos, cfg.sense_radius, ranges[i]))
    return world, agents, build_from_range(agents)


def _run_one(cfg: ScenarioConfig, trial_index: int) -> TrialRow:
    world, agents, topo = generate_scenario(cfg, trial_index)
    if cfg.algorithm == "rag":
        sel, metrics = run_rag(world, agents, topo)
        return TrialRow(trial_index, "rag", metrics.objective, metrics.comm_rounds,
                        metrics.iterations, metrics.total_evals, metrics.gain_msgs,
                        metrics.action_msgs, metrics.payload_bytes)
    model = CoverageModel(world, agents)
    if cfg.algorithm == "sequential":
        sel, evals = sequential_greedy(world, agents)
    else:
        sel = isolated_greedy(world, agents)
        evals = len(ACTIONS) * cfg.n_agents
    # Baselines are evaluated as solvers only; their transport is not modeled.
    return TrialRow(trial_index, cfg.algorithm, model.value(sel), 0,
                    cfg.n_agents, evals, 0, 0, 0)


def run_trials(cfg: ScenarioConfig) -> List[TrialRow]:
    """One row per trial, in trial order."""
    return [_run_one(cfg, t) for t in range(cfg.trials)]


def summarize(rows: Sequence[TrialRow]) -> dict:
    """Means of every numeric column, rounded for stable serialization."""
    if not rows:
        return {}
    out = {"trials": len(rows)}
    for col in CSV_COLUMNS[2:]:
        out[f"mean_{col}"] = round(sum(getattr(r, col) for r in rows) / len(rows), 6)
    return out


def run_sweep(cfg: ScenarioConfig, ranges: Sequence[float]) -> List[dict]:
    """Mean metrics per uniform communication range, over cfg.trials each.

    The placement stream does not depend on the range, so every range sees
    the same instances.
    """
    if not ranges:
        raise ConfigError("ranges", "must be nonempty")
    out = []
    for r in ranges:
        rows = run_trials(replace(cfg, comm_range=float(r)))
        entry = {"comm_range": float(r)}
        summary = summarize(rows)
        for col in SWEEP_COLUMNS[1:]:
            entry[col] = summary[f"mean_{col}"]
        out.append(entry)
    return out


@dataclass
class VerifyReport:
    """Suboptimality-bound and axiom checks over small exhaustive instances."""

    trials: list = field(default_factory=list)
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"ok": self.ok, "trials": self.trials, "violations": self.violations}


def run_verify(cfg: ScenarioConfig, axiom_trials: int = 50) -> VerifyReport:
    """Per trial: check 2*f(greedy) >= f(opt) - sum of per-agent overlap terms
    (integers, so the comparison is exact), plus sampled axiom checks."""
    if cfg.n_agents > VERIFY_MAX_AGENTS:
        raise ConfigError("n_agents", f"verify requires <= {VERIFY_MAX_AGENTS} agents")
    report = VerifyReport()
    for t in range(cfg.trials):
        world, agents, topo = generate_scenario(cfg, t)
        sel, metrics = run_rag(world, agents, topo)
        try:
            _, opt_value = brute_force_opt(world, agents)
            overlaps = [overlap_exact(world, agents, topo, i) for i in range(cfg.n_agents)]
        except BudgetExceededError as exc:
            raise ConfigError("n_agents", str(exc)) from exc
        bound_ok = 2 * metrics.objective >= opt_value - sum(overlaps)
        axioms = check_axioms(world, agents, rng_seed=rng.mix64(cfg.seed) ^ t, trials=axiom_trials)
        entry = {
            "trial": t,
            "objective": metrics.objective,
            "opt": opt_value,
            "overlap_sum": sum(overlaps),
            "bound_ok": bound_ok,
            "axioms_ok": axioms.ok,
        }
        report.trials.append(entry)
        if not bound_ok:
            report.violations.append(
                {"trial": t, "kind": "bound", "seed": cfg.seed,
                 "objective": metrics.objective, "opt": opt_value, "overlap_sum": sum(overlaps)})
        if not axioms.ok:
            report.violations.append(
                {"trial": t, "kind": "axioms", "seed": cfg.seed, "detail": axioms.counterexample})
    return report


def run_compare(cfg: ScenarioConfig) -> dict:
    """All three algorithms over the same instances."""
    rows: List[TrialRow] = []
    summaries = {}
    for algo in ALGORITHMS:
        algo_rows = run_trials(replace(cfg, algorithm=algo))
        rows.extend(algo_rows)
        summaries[algo] = summarize(algo_rows)
    rows.sort(key=lambda r: (r.trial, ALGORITHMS.index(r.algorithm)))
    return {"rows": rows, "summaries": summaries}


def rows_to_dicts(rows: Sequence[TrialRow]) -> List[dict]:
    return [asdict(r) for r in rows]
