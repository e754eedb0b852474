"""Coverage objective: union-of-disks point counting over the grid.

The objective of a joint selection is the number of grid points within the
sensing disk of at least one assigned agent, evaluated at the position the
agent's action moves it to.  This is a normalized, non-decreasing submodular
set function over (agent, action) pairs, and additionally satisfies the
second-order diminishing-returns inequality; :func:`check_axioms` samples
all of these properties empirically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Optional

from .grid import ACTIONS, Action, AgentSpec, Selection, World, apply_action, check_agents, disk_points
from .rng import SplitMix64

# Exhaustive enumeration is rejected beyond this many objective evaluations.
BRUTE_FORCE_BUDGET = 10**7


class InvalidSelectionError(ValueError):
    """A selection references an unknown or already-assigned agent."""


class BudgetExceededError(RuntimeError):
    """An exhaustive enumeration would exceed the evaluation budget."""

    def __init__(self, size: int, budget: int = BRUTE_FORCE_BUDGET):
        super().__init__(f"enumeration size {size} exceeds budget {budget}")
        self.size = size
        self.budget = budget


class CoverageModel:
    """Precomputed per-(agent, action) footprints for fast repeated evaluation."""

    def __init__(self, world: World, agents: list[AgentSpec]):
        check_agents(world, agents)
        self.world = world
        self.agents = {a.id: a for a in agents}
        self._footprints: dict[tuple[int, Action], frozenset] = {}

    def footprint(self, agent_id: int, action: Action) -> frozenset:
        """Covered points when ``agent_id`` executes ``action``."""
        if agent_id not in self.agents:
            raise InvalidSelectionError(f"unknown agent id {agent_id}")
        key = (agent_id, action)
        fp = self._footprints.get(key)
        if fp is None:
            spec = self.agents[agent_id]
            pos = apply_action(spec.position, action, self.world)
            fp = disk_points(self.world, pos, spec.sense_radius)
            self._footprints[key] = fp
        return fp

    def value(self, sel: Selection) -> int:
        """Number of points covered by the union of the selected footprints."""
        if not sel:
            return 0
        covered: set = set()
        for agent_id, action in sel.items():
            covered |= self.footprint(agent_id, action)
        return len(covered)

    def gain(self, sel: Selection, agent_id: int, action: Action) -> int:
        """Marginal coverage of adding ``agent_id -> action`` to ``sel``."""
        if agent_id in sel:
            raise InvalidSelectionError(f"agent {agent_id} already assigned")
        fp = self.footprint(agent_id, action)
        if not sel:
            return len(fp)
        covered: set = set()
        for other_id, other_action in sel.items():
            covered |= self.footprint(other_id, other_action)
        return len(fp - covered)


def coverage_value(world: World, agents: list[AgentSpec], sel: Selection) -> int:
    return CoverageModel(world, agents).value(sel)


def marginal_gain(world: World, agents: list[AgentSpec], sel: Selection, agent_id: int, action: Action) -> int:
    return CoverageModel(world, agents).gain(sel, agent_id, action)


def brute_force_opt(world: World, agents: list[AgentSpec]) -> tuple[Selection, int]:
    """Exact optimum by full product-space enumeration.

    Ties resolve to the lexicographically smallest action tuple (agents in
    ascending id, actions in declaration order), which product order yields
    for free by keeping the first strict improvement.
    """
    model = CoverageModel(world, agents)
    ids = sorted(model.agents)
    size = len(ACTIONS) ** len(ids)
    if size > BRUTE_FORCE_BUDGET:
        raise BudgetExceededError(size)
    best_sel: Selection = {}
    best_val = 0
    for combo in itertools.product(ACTIONS, repeat=len(ids)):
        sel = dict(zip(ids, combo))
        val = model.value(sel)
        if val > best_val or not best_sel:
            best_sel, best_val = sel, val
    return best_sel, best_val


@dataclass
class AxiomReport:
    """Outcome of randomized set-function axiom checks."""

    trials: int
    ok: bool
    counterexample: Optional[str] = None


def check_axioms(
    world: World,
    agents: list[AgentSpec],
    rng_seed: int,
    trials: int,
    value_fn: Optional[Callable[[Selection], float]] = None,
) -> AxiomReport:
    """Sample (A, B, s) triples and test normalization, monotonicity,
    submodularity, and the second-order diminishing-returns inequality
    f(s) - f(s|A) >= f(s|B) - f(s|A+B) for disjoint A, B.

    ``value_fn`` overrides the coverage objective (used to confirm the checks
    do catch non-submodular functions).  Returns the first counterexample.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    model = CoverageModel(world, agents)
    f = value_fn if value_fn is not None else model.value
    if f({}) != 0:
        return AxiomReport(0, False, "normalization: f(empty) != 0")
    ids = sorted(model.agents)
    rng = SplitMix64(rng_seed)

    def fgain(s_id: int, s_act: Action, ctx: Selection) -> float:
        joined = dict(ctx)
        joined[s_id] = s_act
        return f(joined) - f(ctx)

    for t in range(trials):
        pool = list(ids)
        rng.shuffle(pool)
        s_id = pool[0]
        s_act = rng.choice(ACTIONS)
        rest = pool[1:]
        ka = rng.randrange(len(rest) + 1)
        kb = rng.randrange(len(rest) - ka + 1)
        sel_a = {i: rng.choice(ACTIONS) for i in rest[:ka]}
        sel_b = {i: rng.choice(ACTIONS) for i in rest[ka:ka + kb]}
        sel_ab = {**sel_a, **sel_b}

        if f(sel_a) > f(sel_ab):
            return AxiomReport(t + 1, False, f"monotonicity: f({sel_a}) > f(A+B) with B={sel_b}")
        g_a = fgain(s_id, s_act, sel_a)
        g_b = fgain(s_id, s_act, sel_b)
        g_ab = fgain(s_id, s_act, sel_ab)
        g_0 = fgain(s_id, s_act, {})
        if g_a < g_ab - 1e-9:
            return AxiomReport(t + 1, False, f"submodularity: f(s|A) < f(s|A+B) for s=({s_id},{s_act}), A={sel_a}, B={sel_b}")
        if g_0 - g_a < g_b - g_ab - 1e-9:
            return AxiomReport(t + 1, False, f"2nd order: violated for s=({s_id},{s_act}), A={sel_a}, B={sel_b}")
    return AxiomReport(trials, True)
