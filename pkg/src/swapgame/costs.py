"""Player costs, social cost and the two ordinal potentials of the swap game."""

from __future__ import annotations

import enum
from typing import Sequence

import numpy as np
from .graph import INF, Graph, distances_from, hop_matrix


class CostKind(str, enum.Enum):
    SUM = "sum"
    MAX = "max"


def player_cost(g: Graph, u: int, kind: CostKind):
    dist = distances_from(g, u)
    if kind is CostKind.SUM:
        return sum(dist)  # a single inf term makes the sum inf
    return max(dist)


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs hop distances as floats, ``inf`` where unreachable."""
    return hop_matrix(g.n, list(g.edges))


def _as_ext(x):
    return INF if np.isinf(x) else int(x)


def all_player_costs(g: Graph, kind: CostKind) -> list:
    d = distance_matrix(g)
    per = d.sum(axis=1) if kind is CostKind.SUM else d.max(axis=1)
    return [_as_ext(x) for x in per]


def social_cost(g: Graph, kind: CostKind):
    costs = all_player_costs(g, kind)
    return INF if INF in costs else sum(costs)


def phi_sum(g: Graph):
    return social_cost(g, CostKind.SUM)


def potentials(g: Graph) -> tuple:
    """(phi_sum, phi_max) from a single all-pairs pass."""
    d = distance_matrix(g)
    if np.isinf(d).any():
        return INF, tuple(INF for _ in range(g.n))
    ecc = sorted((int(x) for x in d.max(axis=1)), reverse=True)
    return int(d.sum()), tuple(ecc)


def phi_max(g: Graph) -> tuple:
    """MAX costs of all players in non-increasing order."""
    return tuple(sorted(all_player_costs(g, CostKind.MAX), reverse=True))


def lex_decreasing(a: Sequence, b: Sequence) -> bool:
    """True iff ``a`` is lexicographically larger than ``b`` (``b`` strictly smaller)."""
    if len(a) != len(b):
        raise ValueError(f"potential tuples differ in length: {len(a)} vs {len(b)}")
    for x, y in zip(a, b):
        if x != y:
            return x > y
    return False


def star_social_cost(n: int, kind: CostKind) -> int:
    # closed forms; checked against direct summation in the tests
    if n == 1:
        return 0
    if n == 2:
        return 2  # no leaf sees another leaf
    return 2 * (n - 1) ** 2 if kind is CostKind.SUM else 2 * n - 1


def max_swap_side_conditions_hold(before: Graph, after: Graph, u: int, v: int) -> bool:
    """Per-step check of the two side conditions behind the MAX potential.

    ``u`` dropped the tree edge {u, v}. Every vertex on ``u``'s side must
    strictly improve; every vertex on ``v``'s side must either weakly improve
    or end below the old cost of some vertex on ``u``'s side.
    """
    old = all_player_costs(before, CostKind.MAX)
    new = all_player_costs(after, CostKind.MAX)
    dist_u = distances_from(before, u)
    dist_v = distances_from(before, v)
    # on a tree the side of x is decided by which endpoint is nearer
    near = [x for x in range(before.n) if dist_u[x] < dist_v[x]]
    far = [x for x in range(before.n) if dist_v[x] < dist_u[x]]
    if any(not new[x] < old[x] for x in near):
        return False
    best_near = max(old[x] for x in near)
    return all(new[y] <= old[y] or best_near > new[y] for y in far)
