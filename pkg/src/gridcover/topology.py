"""Directed communication graph and information-overlap oracles.

An edge (j, i) exists when agent j is within agent i's communication range:
the receiver's range governs its in-neighborhood, so heterogeneous ranges
give a directed graph and uniform ranges an undirected one.  Disconnected
graphs, including the empty graph, are legal.

The module also quantifies how much sensing information an agent shares
with the agents *outside* its in-neighborhood ("non-neighbors"): exactly by
brute-force enumeration (:func:`overlap_exact`), and via closed-form ring
bounds that depend only on the communication and sensing radii.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional

from .grid import ACTIONS, AgentSpec, Coord, World, euclidean
from .objective import BRUTE_FORCE_BUDGET, BudgetExceededError, CoverageModel


@dataclass(frozen=True)
class Topology:
    """Directed graph over agent ids 0..n-1 as in/out adjacency tuples."""

    n: int
    in_adj: tuple[tuple[int, ...], ...]
    out_adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.in_adj) != self.n or len(self.out_adj) != self.n:
            raise ValueError("adjacency length must equal agent count")
        for i in range(self.n):
            if i in self.in_adj[i] or i in self.out_adj[i]:
                raise ValueError(f"self-loop at agent {i}")
            for j in self.in_adj[i]:
                if i not in self.out_adj[j]:
                    raise ValueError(f"inconsistent adjacency for edge ({j},{i})")
            for j in self.out_adj[i]:
                if i not in self.in_adj[j]:
                    raise ValueError(f"inconsistent adjacency for edge ({i},{j})")

    def non_neighbors(self, i: int) -> frozenset[int]:
        """All agents outside i's in-neighborhood (and not i itself)."""
        return frozenset(range(self.n)) - set(self.in_adj[i]) - {i}


@dataclass(frozen=True)
class NonNeighborhood:
    """An agent's non-neighbor set with the minimum distance to it.

    ``distance`` is None when the non-neighborhood is empty (the agent hears
    from everyone), rather than a sentinel number.
    """

    ids: frozenset[int]
    distance: Optional[float]


def build_from_range(agents: list[AgentSpec]) -> Topology:
    """Edge (j, i) iff dist(i, j) <= comm_range of receiver i."""
    ids = sorted(a.id for a in agents)
    if ids != list(range(len(agents))):
        raise ValueError("agent ids must be exactly 0..n-1")
    by_id = {a.id: a for a in agents}
    n = len(agents)
    in_adj = []
    for i in range(n):
        rx = by_id[i]
        # zero range means no communication even for coincident agents
        in_adj.append(tuple(
            j for j in range(n)
            if j != i and rx.comm_range > 0
            and euclidean(rx.position, by_id[j].position) <= rx.comm_range
        ))
    out_adj = [tuple(i for i in range(n) if j in in_adj[i]) for j in range(n)]
    return Topology(n, tuple(in_adj), tuple(out_adj))


def non_neighborhood(topo: Topology, agents: list[AgentSpec], i: int) -> NonNeighborhood:
    ids = topo.non_neighbors(i)
    by_id = {a.id: a for a in agents}
    if not ids:
        return NonNeighborhood(ids, None)
    dist = min(euclidean(by_id[i].position, by_id[j].position) for j in sorted(ids))
    return NonNeighborhood(ids, dist)


def overlap_exact(world: World, agents: list[AgentSpec], topo: Topology, i: int) -> int:
    """Worst-case coverage overlap between agent i and its non-neighbors.

    Maximizes f({i:a}) - [f(S_c + {i:a}) - f(S_c)] over i's actions and all
    joint non-neighbor action tuples S_c, by exhaustive enumeration.  This is
    the verification oracle for the suboptimality bound; it is not available
    to agents at run time.
    """
    model = CoverageModel(world, agents)
    nc = sorted(topo.non_neighbors(i))
    if not nc:
        return 0
    size = len(ACTIONS) ** (len(nc) + 1)
    if size > BRUTE_FORCE_BUDGET:
        raise BudgetExceededError(size)
    own_value = {a: model.value({i: a}) for a in ACTIONS}
    best = 0
    for combo in itertools.product(ACTIONS, repeat=len(nc)):
        sel_c = dict(zip(nc, combo))
        f_c = model.value(sel_c)
        for a in ACTIONS:
            joined = dict(sel_c)
            joined[i] = a
            overlap = own_value[a] - (model.value(joined) - f_c)
            if overlap > best:
                best = overlap
    return best


def coin_ring_bound_continuous(r_i: float, r_s: float) -> float:
    """Closed-form area bound on the overlap: max(0, pi*(r_s^2 - (r_i - r_s)^2)).

    Zero from r_i = 2*r_s on, where the sensing disks of an agent and any
    non-neighbor can no longer intersect.
    """
    if r_s <= 0:
        raise ValueError("r_s must be > 0")
    if r_i < 0:
        raise ValueError("r_i must be >= 0")
    return max(0.0, math.pi * (r_s * r_s - (r_i - r_s) * (r_i - r_s)))


def coin_ring_bound_discrete(world: World, position: Coord, r_i: float, r_s: float) -> int:
    """Lattice analogue of the continuous ring bound for the point-counting
    objective: the number of lattice points within r_s of ``position`` that a
    disk centered at distance >= r_i can still reach.

    Counted on the unclipped lattice (translation invariant), so it remains an
    upper bound after the world's boundary clipping shrinks the true overlap.
    """
    if r_s <= 0:
        raise ValueError("r_s must be > 0")
    if r_i >= 2 * r_s:
        return 0
    inner2 = (r_i - r_s) * (r_i - r_s) if r_i > r_s else -1.0
    outer2 = r_s * r_s
    r = int(r_s)
    count = 0
    for dx in range(-r, r + 1):
        for dy in range(-r, r + 1):
            d2 = dx * dx + dy * dy
            if d2 <= outer2 and d2 > inner2:
                count += 1
    return count
