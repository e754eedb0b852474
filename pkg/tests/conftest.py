"""Shared independent oracles: deliberately naive re-implementations used to
cross-check the package's optimized paths."""

from __future__ import annotations

import itertools

import pytest

from gridcover.grid import ACTIONS, apply_action


def naive_coverage(world, agents, sel):
    """Point-by-point scan over the whole grid; no footprint caching."""
    by_id = {a.id: a for a in agents}
    count = 0
    for x in range(world.width):
        for y in range(world.height):
            for agent_id, action in sel.items():
                spec = by_id[agent_id]
                px, py = apply_action(spec.position, action, world)
                if (x - px) ** 2 + (y - py) ** 2 <= spec.sense_radius**2:
                    count += 1
                    break
    return count


def naive_opt(world, agents):
    """Exhaustive optimum using the naive coverage evaluator."""
    ids = sorted(a.id for a in agents)
    best_val, best_sel = -1, None
    for combo in itertools.product(ACTIONS, repeat=len(ids)):
        sel = dict(zip(ids, combo))
        val = naive_coverage(world, agents, sel)
        if val > best_val:
            best_val, best_sel = val, sel
    return best_sel, best_val


def reference_protocol(world, agents, topo):
    """Straight-line re-interpretation of the round-synchronous protocol:
    no caches, no agent objects, gains recomputed from scratch each iteration.
    Returns (selection, comm_rounds, iterations, gain_msgs, action_msgs)."""
    from gridcover.objective import CoverageModel

    model = CoverageModel(world, agents)
    n = topo.n
    chosen = {}
    known = {i: {} for i in range(n)}  # actions of selected in-neighbors
    observed = {i: set() for i in range(n)}
    comm_rounds = iterations = gain_msgs = action_msgs = 0

    while len(chosen) < n:
        iterations += 1
        gains = {}
        for i in range(n):
            if i in chosen:
                continue
            best_gain = max(
                model.value({**known[i], i: a}) - model.value(known[i])
                for a in ACTIONS
            )
            for a in ACTIONS:
                if model.value({**known[i], i: a}) - model.value(known[i]) == best_gain:
                    gains[i] = (best_gain, a)
                    break
        sent = 0
        for i in gains:
            sent += sum(1 for j in topo.out_adj[i] if j not in observed[i])
        if sent:
            comm_rounds += 1
            gain_msgs += sent
        winners = []
        for i in gains:
            g_i, a_i = gains[i]
            rivals = [j for j in topo.in_adj[i] if j in gains]
            if all((g_i, -i) > (gains[j][0], -j) for j in rivals):
                winners.append(i)
                chosen[i] = a_i
        sent = 0
        for i in winners:
            for j in topo.out_adj[i]:
                if j in observed[i]:
                    continue
                sent += 1
                if j not in chosen and i in topo.in_adj[j]:
                    known[j][i] = chosen[i]
                    observed[j].add(i)
        if sent:
            comm_rounds += 1
            action_msgs += sent
    return chosen, comm_rounds, iterations, gain_msgs, action_msgs


@pytest.fixture
def small_world():
    from gridcover.grid import World

    return World(15, 15)
