"""Swap games on graphs played by agents that only see a k-ball around them."""

from .beliefs import (
    Attitude,
    PlayerModel,
    Swap,
    View,
    best_response,
    candidate_swaps,
    decide,
    delta,
    extract_view,
    is_unhappy,
)
from .costs import CostKind, lex_decreasing, phi_max, phi_sum, player_cost, social_cost
from .dynamics import (
    BudgetExhausted,
    Cycle,
    Equilibrium,
    Fixed,
    Halted,
    RandomScheduler,
    RoundRobin,
    Simultaneous,
    run,
    run_simultaneous,
    step,
)
from .graph import INF, Graph, apply_swap, build_graph, diameter, distances_from

__all__ = [
    "INF",
    "Attitude",
    "BudgetExhausted",
    "CostKind",
    "Cycle",
    "Equilibrium",
    "Fixed",
    "Graph",
    "Halted",
    "PlayerModel",
    "RandomScheduler",
    "RoundRobin",
    "Simultaneous",
    "Swap",
    "View",
    "apply_swap",
    "best_response",
    "build_graph",
    "candidate_swaps",
    "decide",
    "delta",
    "diameter",
    "distances_from",
    "extract_view",
    "is_unhappy",
    "lex_decreasing",
    "phi_max",
    "phi_sum",
    "player_cost",
    "run",
    "run_simultaneous",
    "social_cost",
    "step",
]
