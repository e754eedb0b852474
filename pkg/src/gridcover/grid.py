"""Grid world, agents, and the discrete action set.

The environment is a finite integer lattice {0..w-1} x {0..h-1}.  Each agent
sits on a grid point, senses a Euclidean disk of radius ``sense_radius``, and
can move one point in any of four directions.  Moves that would leave the
grid are clamped to the boundary, so every action is always applicable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Dict, Tuple

Coord = Tuple[int, int]


class Action(enum.Enum):
    """Unit move on the grid. Enum order is the canonical tie-break order."""

    FORWARD = (0, 1)
    BACKWARD = (0, -1)
    LEFT = (-1, 0)
    RIGHT = (1, 0)

    @property
    def dx(self) -> int:
        return self.value[0]

    @property
    def dy(self) -> int:
        return self.value[1]


ACTIONS: Tuple[Action, ...] = tuple(Action)

# A (partial) joint assignment of one action per agent id.
Selection = Dict[int, Action]


@dataclass(frozen=True)
class World:
    """Rectangular grid of coverable points."""

    width: int
    height: int

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError("world dimensions must be >= 1")

    def contains(self, pos: Coord) -> bool:
        x, y = pos
        return 0 <= x < self.width and 0 <= y < self.height


@dataclass(frozen=True)
class AgentSpec:
    """One agent: identity, start position, sensing disk, communication range."""

    id: int
    position: Coord
    sense_radius: float
    comm_range: float = 0.0

    def __post_init__(self):
        if self.sense_radius <= 0:
            raise ValueError(f"agent {self.id}: sense_radius must be > 0")
        if self.comm_range < 0:
            raise ValueError(f"agent {self.id}: comm_range must be >= 0")


def apply_action(position: Coord, action: Action, world: World) -> Coord:
    """Move one point in the action's direction, clamped to the grid."""
    x = min(max(position[0] + action.dx, 0), world.width - 1)
    y = min(max(position[1] + action.dy, 0), world.height - 1)
    return (x, y)


def disk_points(world: World, center: Coord, radius: float) -> frozenset[Coord]:
    """Grid points of the world within Euclidean distance ``radius`` of center."""
    cx, cy = center
    r = int(radius)
    r2 = radius * radius
    pts = []
    for x in range(max(0, cx - r), min(world.width, cx + r + 1)):
        dx2 = (x - cx) ** 2
        for y in range(max(0, cy - r), min(world.height, cy + r + 1)):
            if dx2 + (y - cy) ** 2 <= r2:
                pts.append((x, y))
    return frozenset(pts)


def euclidean(a: Coord, b: Coord) -> float:
    return ((a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2) ** 0.5


def check_agents(world: World, agents: list[AgentSpec]) -> None:
    """Validate id uniqueness and positions against the world."""
    seen = set()
    for a in agents:
        if a.id in seen:
            raise ValueError(f"duplicate agent id {a.id}")
        seen.add(a.id)
        if not world.contains(a.position):
            raise ValueError(f"agent {a.id} position {a.position} outside grid")
