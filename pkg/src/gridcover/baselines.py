"""Reference solvers: classical sequential greedy and no-communication greedy."""

from __future__ import annotations

from .grid import ACTIONS, AgentSpec, Selection, World
from .objective import CoverageModel


def sequential_greedy(
    world: World, agents: list[AgentSpec], order: list[int] | None = None
) -> tuple[Selection, int]:
    """Agents pick in ``order`` (default ascending id), each maximizing its
    marginal gain given all previous picks.  Classical 1/2-approximation.

    Returns the selection and the number of objective evaluations (4 per
    agent).  Ties go to the first action in declaration order.
    """
    model = CoverageModel(world, agents)
    ids = sorted(model.agents)
    if order is None:
        order = ids
    if sorted(order) != ids:
        raise ValueError("order must be a permutation of all agent ids")
    sel: Selection = {}
    evals = 0
    for i in order:
        best_action, best_gain = ACTIONS[0], -1
        for action in ACTIONS:
            gain = model.gain(sel, i, action)
            if gain > best_gain:
                best_action, best_gain = action, gain
        evals += len(ACTIONS)
        sel[i] = best_action
    return sel, evals


def isolated_greedy(world: World, agents: list[AgentSpec]) -> Selection:
    """Every agent independently picks its best action against the empty
    context; identical to running the distributed protocol on the empty graph."""
    model = CoverageModel(world, agents)
    sel: Selection = {}
    for i in sorted(model.agents):
        best_action, best_gain = ACTIONS[0], -1
        for action in ACTIONS:
            gain = model.gain({}, i, action)
            if gain > best_gain:
                best_action, best_gain = action, gain
        sel[i] = best_action
    return sel
