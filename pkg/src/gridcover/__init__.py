"""Distributed greedy coverage maximization on grids.

Core pieces: the union-of-disks coverage objective with exhaustive and
axiom-checking oracles, range-based communication topologies with
information-overlap bounds, a round-synchronous simulator of the
neighborhood-greedy protocol with full resource instrumentation, reference
baselines, and reproducible experiment campaigns behind an HTTP service and
CLI.
"""

from .baselines import isolated_greedy, sequential_greedy
from .grid import ACTIONS, Action, AgentSpec, Selection, World, apply_action
from .objective import (
    AxiomReport,
    BudgetExceededError,
    CoverageModel,
    InvalidSelectionError,
    brute_force_opt,
    check_axioms,
    coverage_value,
    marginal_gain,
)
from .protocol import ActionMsg, AgentState, GainMsg, ProtocolError
from .scenarios import (
    ConfigError,
    ScenarioConfig,
    generate_scenario,
    run_compare,
    run_sweep,
    run_trials,
    run_verify,
    summarize,
)
from .sim import RunMetrics, TraceEvent, run_rag, run_rag_with_trace, trace_lines
from .topology import (
    NonNeighborhood,
    Topology,
    build_from_range,
    coin_ring_bound_continuous,
    coin_ring_bound_discrete,
    non_neighborhood,
    overlap_exact,
)

__version__ = "0.1.0"
