"""Per-agent state machine for the distributed greedy protocol.

Each round-synchronous iteration an unselected agent (1) proposes its best
action against the actions its selected in-neighbors already committed to,
(2) decides whether its gain beats every still-unselected in-neighbor, and
(3) if it lost, integrates the actions of in-neighbors that won this
iteration.  Proposals are cached and only recomputed after an integration,
which keeps each agent at no more than |actions| * (in-degree + 1) objective
evaluations for a whole run.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .grid import ACTIONS, Action, Selection
from .objective import CoverageModel


class ProtocolError(RuntimeError):
    """A message violated the protocol's sender/state preconditions."""


@dataclass(frozen=True)
class GainMsg:
    sender: int
    gain: int


@dataclass(frozen=True)
class ActionMsg:
    sender: int
    action: Action


class AgentState:
    """Execution state of one agent across iterations."""

    def __init__(self, agent_id: int, in_neighbors: frozenset[int]):
        if agent_id in in_neighbors:
            raise ValueError("agent cannot be its own in-neighbor")
        self.id = agent_id
        self.in_neighbors = in_neighbors
        self.selected_neighbors: set[int] = set()
        self.neighbor_actions: Selection = {}
        self.chosen: Optional[Action] = None
        self.eval_count = 0
        self._proposal: Optional[tuple[Action, int]] = None

    def propose(self, model: CoverageModel) -> tuple[Action, int]:
        """Best action and its marginal gain against the known neighbor actions.

        Cached: recomputes (4 evaluations) only after the neighbor context
        changed.  Ties go to the first action in declaration order.
        """
        if self.chosen is not None:
            raise ProtocolError(f"agent {self.id} already selected")
        if self._proposal is None:
            best_action, best_gain = ACTIONS[0], -1
            for action in ACTIONS:
                gain = model.gain(self.neighbor_actions, self.id, action)
                if gain > best_gain:
                    best_action, best_gain = action, gain
            self.eval_count += len(ACTIONS)
            self._proposal = (best_action, best_gain)
        return self._proposal

    def decide(self, gains: list[GainMsg]) -> bool:
        """True iff this agent's (gain, -id) beats every unselected in-neighbor.

        Expects exactly one gain message per unselected in-neighbor.  Winning
        commits the cached proposal as the final action.
        """
        if self.chosen is not None:
            raise ProtocolError(f"agent {self.id} already selected")
        if self._proposal is None:
            raise ProtocolError(f"agent {self.id}: decide before propose")
        expected = self.in_neighbors - self.selected_neighbors
        senders = [m.sender for m in gains]
        if len(senders) != len(set(senders)):
            raise ProtocolError(f"agent {self.id}: duplicate gain sender")
        if set(senders) != expected:
            raise ProtocolError(
                f"agent {self.id}: gain senders {sorted(senders)} != unselected in-neighbors {sorted(expected)}")
        action, own_gain = self._proposal
        own_key = (own_gain, -self.id)
        if all(own_key > (m.gain, -m.sender) for m in gains):
            self.chosen = action
            return True
        return False

    def integrate(self, actions: list[ActionMsg]) -> None:
        """Record in-neighbors that just selected; invalidates the proposal
        cache only when the list is nonempty."""
        if self.chosen is not None:
            raise ProtocolError(f"agent {self.id} already selected")
        expected = self.in_neighbors - self.selected_neighbors
        senders = [m.sender for m in actions]
        if len(senders) != len(set(senders)):
            raise ProtocolError(f"agent {self.id}: duplicate action sender")
        for sender in senders:
            if sender not in expected:
                raise ProtocolError(
                    f"agent {self.id}: action from {sender}, not an unselected in-neighbor")
        if actions:
            for msg in actions:
                self.selected_neighbors.add(msg.sender)
                self.neighbor_actions[msg.sender] = msg.action
            self._proposal = None
