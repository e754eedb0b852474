import pytest

from gridcover.baselines import isolated_greedy, sequential_greedy
from gridcover.grid import ACTIONS, AgentSpec, World
from gridcover.objective import brute_force_opt, coverage_value
from gridcover.rng import SplitMix64
from gridcover.sim import run_rag
from gridcover.topology import build_from_range


def random_agents(seed, n, size, r_s=3.0, r_c=0.0):
    rng = SplitMix64(seed)
    return [AgentSpec(i, (rng.randrange(size), rng.randrange(size)), r_s, r_c) for i in range(n)]


class TestSequentialGreedy:
    def test_single_agent_is_isolated_best(self):
        world = World(11, 11)
        agents = [AgentSpec(0, (5, 2), 3.0)]
        sel, evals = sequential_greedy(world, agents)
        assert evals == 4
        assert sel == isolated_greedy(world, agents)

    def test_invalid_permutation(self):
        world = World(11, 11)
        agents = [AgentSpec(0, (5, 5), 2.0), AgentSpec(1, (2, 2), 2.0)]
        with pytest.raises(ValueError):
            sequential_greedy(world, agents, order=[0, 0])
        with pytest.raises(ValueError):
            sequential_greedy(world, agents, order=[0])

    def test_disjoint_agents_optimal(self):
        world = World(40, 11)
        agents = [AgentSpec(0, (5, 5), 2.0), AgentSpec(1, (34, 5), 2.0)]
        sel, _ = sequential_greedy(world, agents)
        _, opt = brute_force_opt(world, agents)
        assert coverage_value(world, agents, sel) == opt

    def test_half_optimal_on_small_instances(self, small_world):
        for seed in range(20):
            agents = random_agents(500 + seed, 4, 15)
            sel, _ = sequential_greedy(small_world, agents)
            _, opt = brute_force_opt(small_world, agents)
            assert 2 * coverage_value(small_world, agents, sel) >= opt

    def test_half_optimal_matches_connected_rag(self, small_world):
        for seed in range(20):
            agents = random_agents(600 + seed, 4, 15, r_c=100.0)
            topo = build_from_range(agents)
            _, metrics = run_rag(small_world, agents, topo)
            _, opt = brute_force_opt(small_world, agents)
            assert 2 * metrics.objective >= opt


class TestIsolatedGreedy:
    def test_equals_rag_on_empty_topology(self):
        for seed in range(30):
            world = World(20, 20)
            agents = random_agents(700 + seed, 5, 20, r_c=0.0)
            topo = build_from_range(agents)
            sel, _ = run_rag(world, agents, topo)
            assert sel == isolated_greedy(world, agents)

    def test_colocated_agents_pick_identically(self):
        world = World(21, 21)
        agents = [AgentSpec(0, (10, 10), 2.0), AgentSpec(1, (10, 10), 2.0)]
        sel = isolated_greedy(world, agents)
        assert sel[0] == sel[1]

    def test_coordination_helps_on_average(self):
        # statistical ordering of means, not per instance
        world = World(30, 30)
        iso_total = rag_total = 0
        for seed in range(40):
            agents = random_agents(800 + seed, 6, 30, r_s=5.0, r_c=45.0)
            topo = build_from_range(agents)
            _, metrics = run_rag(world, agents, topo)
            rag_total += metrics.objective
            iso_total += coverage_value(world, agents, isolated_greedy(world, agents))
        assert rag_total >= iso_total
