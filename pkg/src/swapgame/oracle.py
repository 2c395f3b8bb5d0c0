"""Brute-force check of the pendant-world delta.

Builds explicit hidden worlds around a view, applies the swap inside each
world and measures the owner's true cost before and after with plain BFS.
Nothing here reuses the closed-form machinery in :mod:`swapgame.beliefs`.

SUM worlds hang ``mass`` leaves off each frontier vertex; MAX worlds hang a
path of ``depth`` vertices. With ``connectors=True`` a world may also join
one pair of frontier vertices through a hidden vertex, which leaves the view
unchanged but is outside the pendant model.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .costs import CostKind
from .graph import bfs

INF = math.inf


@dataclass(frozen=True)
class OracleResult:
    min: float
    max: float
    conclusive: bool
    worlds: int
    note: str = ""


def _owner_cost(adj, owner, total, kind):
    dist = bfs(adj, owner)
    if len(dist) < total:
        return INF
    vals = dist.values()
    return sum(vals) if kind is CostKind.SUM else max(vals)


def _world(view, assignment, frontier, kind, connector):
    adj = {x: list(ys) for x, ys in view.adj.items()}
    nxt = max(view.members) + 1
    for f, size in zip(frontier, assignment):
        prev = f
        for _ in range(size):
            h = nxt
            nxt += 1
            # SUM: leaves on f; MAX: a path hanging from f
            anchor = f if kind is CostKind.SUM else prev
            adj[h] = [anchor]
            adj[anchor].append(h)
            prev = h
    if connector is not None:
        a, b = connector
        h = nxt
        nxt += 1
        adj[h] = [a, b]
        adj[a].append(h)
        adj[b].append(h)
    return adj


def _value(view, swap, kind, frontier, assignment, connector=None):
    adj = _world(view, assignment, frontier, kind, connector)
    total = len(adj)
    before = _owner_cost(adj, swap.u, total, kind)
    adj[swap.u].remove(swap.v)
    adj[swap.v].remove(swap.u)
    adj[swap.u].append(swap.w)
    adj[swap.w].append(swap.u)
    after = _owner_cost(adj, swap.u, total, kind)
    if after == INF:
        return -INF
    return before - after


def required_budget(view, swap) -> int:
    """A + B + 2k + 1 from the visible eccentricities before and after."""
    a = max(view.dist.values())
    adj = {x: list(ys) for x, ys in view.adj.items()}
    adj[swap.u].remove(swap.v)
    adj[swap.v].remove(swap.u)
    adj[swap.u].append(swap.w)
    adj[swap.w].append(swap.u)
    dist = bfs(adj, swap.u)
    b = max(dist.values()) if len(dist) == len(view.members) else 0
    return a + b + 2 * view.radius + 1


def _levels(budget, width, full_cap):
    if (budget + 1) ** max(width, 1) <= full_cap:
        return list(range(budget + 1))
    return sorted({0, 1, 2, budget // 2, budget - 1, budget})


def oracle_delta(
    view,
    swap,
    kind,
    budget: int,
    *,
    detect_unbounded: bool = True,
    connectors: bool = False,
    full_cap: int = 4096,
    max_worlds: int = 50_000,
) -> OracleResult:
    """(min, max) of c_u(H) - c_u(H') over enumerated hidden worlds.

    Each frontier vertex gets a hidden size from a level grid: the full range
    ``0..budget`` when small enough, otherwise {0, 1, 2, budget//2,
    budget-1, budget}. An extremum still strictly moving at the budget
    (value at budget-2, budget-1, budget strictly monotone in one
    coordinate) is reported as unbounded.
    """
    kind = CostKind(kind)
    frontier = sorted(view.frontier)
    if not frontier:
        # nothing hidden: the single world is the view itself
        val = _value(view, swap, kind, frontier, ())
        return OracleResult(val, val, True, 1)
    need = required_budget(view, swap)
    if budget < need:
        return OracleResult(math.nan, math.nan, False, 0, f"budget {budget} < {need}")
    if budget < 2:
        budget = 2
    levels = _levels(budget, len(frontier), full_cap)
    pairs = [None]
    if connectors:
        pairs += list(itertools.combinations(frontier, 2))
    count = len(levels) ** len(frontier) * len(pairs)
    if count > max_worlds:
        return OracleResult(math.nan, math.nan, False, 0, f"{count} worlds exceed cap {max_worlds}")

    lo = hi = None
    lo_at = hi_at = None
    for pair in pairs:
        for assignment in itertools.product(levels, repeat=len(frontier)):
            val = _value(view, swap, kind, frontier, assignment, pair)
            if lo is None or val < lo:
                lo, lo_at = val, (assignment, pair)
            if hi is None or val > hi:
                hi, hi_at = val, (assignment, pair)

    if detect_unbounded:
        if lo != -INF and _moving(view, swap, kind, frontier, lo_at, budget, lower=True):
            lo = -INF
        if hi != -INF and _moving(view, swap, kind, frontier, hi_at, budget, lower=False):
            hi = INF
    return OracleResult(lo, hi, True, count)


def _moving(view, swap, kind, frontier, at, budget, lower):
    assignment, pair = at
    for i, size in enumerate(assignment):
        if size != budget:
            continue
        trail = []
        for back in (2, 1, 0):
            probe = list(assignment)
            probe[i] = budget - back
            trail.append(_value(view, swap, kind, frontier, probe, pair))
        if lower and trail[0] > trail[1] > trail[2]:
            return True
        if not lower and trail[0] < trail[1] < trail[2]:
            return True
    return False
