"""Decision rules for players that only see their k-ball.

A player's view is the subgraph induced by all vertices within distance k.
Everything outside the view is unknown, so a swap is judged by its worst
(or best) outcome over the global graphs compatible with the view.

Compatible worlds are modelled as *pendant worlds*: hidden trees hanging off
single frontier vertices (members at distance exactly k). Members closer than
k already show all their neighbours, so the frontier is the only place hidden
structure can attach. Under this model the extremes have closed forms:

* SUM: each hidden vertex behind frontier ``f`` changes the owner's cost by
  ``gain(f)``, so a negative frontier gain is unboundedly bad and a positive
  one unboundedly good.
* MAX: only the depth of each pendant matters, and the value is monotone in
  each depth, so the extremes sit at "no pendants" or "infinitely deep".
"""

from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

import numpy as np

from .costs import CostKind
from .graph import (
    INF,
    Graph,
    GraphError,
    NotATreeError,
    component_depth,
    hop_matrix,
    norm_edge,
    path_components,
)


class Attitude(str, enum.Enum):
    PESSIMISTIC = "pess"
    WEAKLY_PESSIMISTIC = "weak"
    OPTIMISTIC = "opt"


@dataclass(frozen=True)
class PlayerModel:
    attitude: Attitude
    kind: CostKind
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"view radius must be at least 1, got {self.k}")
        # accept plain strings from configs
        object.__setattr__(self, "attitude", Attitude(self.attitude))
        object.__setattr__(self, "kind", CostKind(self.kind))

    @property
    def mode(self) -> str:
        return "best" if self.attitude is Attitude.OPTIMISTIC else "worst"

    def accepts(self, value) -> bool:
        if self.attitude is Attitude.WEAKLY_PESSIMISTIC:
            return value != -INF and value >= 0
        return value > 0

    def __str__(self) -> str:
        return f"{self.attitude.value}/{self.kind.value}/k={self.k}"


class Swap(NamedTuple):
    u: int  # mover
    v: int  # dropped neighbour
    w: int  # new neighbour


@dataclass(frozen=True)
class View:
    owner: int
    radius: int
    members: tuple[int, ...]
    edges: frozenset
    dist: dict = field(compare=False, hash=False, repr=False)

    @cached_property
    def frontier(self) -> frozenset[int]:
        return frozenset(x for x in self.members if self.dist[x] == self.radius)

    @cached_property
    def adj(self) -> dict[int, list[int]]:
        out = {x: [] for x in self.members}
        for a, b in self.edges:
            out[a].append(b)
            out[b].append(a)
        for x in out:
            out[x].sort()
        return out

    @property
    def neighbors(self) -> list[int]:
        return self.adj[self.owner]

    @property
    def complete(self) -> bool:
        """True when nothing is hidden: the view is the owner's whole component."""
        return not self.frontier

    @cached_property
    def index(self) -> dict[int, int]:
        return {x: i for i, x in enumerate(self.members)}


def extract_view(g: Graph, u: int, k: int) -> View:
    if k < 1:
        raise ValueError(f"view radius must be at least 1, got {k}")
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if dist[x] == k:
            continue
        for y in g.adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    members = tuple(sorted(dist))
    edges = frozenset(
        norm_edge(x, y) for x in members for y in g.adj[x] if y in dist and x < y
    )
    return View(u, k, members, edges, dist)


def candidate_swaps(view: View) -> list[Swap]:
    u = view.owner
    nbrs = view.neighbors
    taken = set(nbrs)
    taken.add(u)
    targets = [x for x in view.members if x not in taken]
    return [Swap(u, v, w) for v in nbrs for w in targets]


def _check_swap(view: View, s: Swap) -> None:
    if s.u != view.owner:
        raise GraphError(f"swap mover {s.u} is not the view owner {view.owner}")
    if s.v not in view.adj[s.u]:
        raise GraphError(f"{s.v} is not a neighbour of {s.u}")
    if s.w == s.u or s.w in view.adj[s.u] or s.w not in view.index:
        raise GraphError(f"{s.w} is not a non-neighbour member of the view")


def _swapped_distances(view: View, s: Swap) -> dict:
    adj = {x: list(ys) for x, ys in view.adj.items()}
    adj[s.u].remove(s.v)
    adj[s.v].remove(s.u)
    adj[s.u].append(s.w)
    adj[s.w].append(s.u)
    dist = {s.u: 0}
    queue = deque([s.u])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def delta(view: View, s: Swap, kind: CostKind, mode: str = "worst", method: str = "closed"):
    """Worst- or best-case cost decrease of swap ``s`` over pendant worlds.

    ``method="corners"`` enumerates MAX pendant depths over {0, M}^frontier
    literally instead of using the closed form; both agree.
    """
    _check_swap(view, s)
    if mode not in ("worst", "best"):
        raise ValueError(f"mode must be 'worst' or 'best', got {mode!r}")
    kind = CostKind(kind)
    after = _swapped_distances(view, s)
    if len(after) < len(view.members):
        return -INF
    before = view.dist
    k = view.radius
    frontier = sorted(view.frontier)
    if kind is CostKind.SUM:
        gains = {x: before[x] - after[x] for x in view.members}
        total = sum(gains.values())
        if mode == "worst":
            return -INF if any(gains[f] < 0 for f in frontier) else total
        return INF if any(gains[f] > 0 for f in frontier) else total

    a, b = max(before.values()), max(after.values())
    if not frontier:
        return a - b
    if method == "corners":
        big = a + b + 2 * k + 1
        values = []
        for corner in itertools.product((0, big), repeat=len(frontier)):
            hidden_before = max(k + depth for depth in corner)
            hidden_after = max(after[f] + depth for f, depth in zip(frontier, corner))
            values.append(max(a, hidden_before) - max(b, hidden_after))
        return min(values) if mode == "worst" else max(values)
    if method != "closed":
        raise ValueError(f"unknown method {method!r}")
    if mode == "worst":
        return min(a - b, k - max(after[f] for f in frontier))
    return max(a - b, k - min(after[f] for f in frontier))


def _to_ext(x: float):
    if x == np.inf:
        return INF
    if x == -np.inf:
        return -INF
    return int(x)


def _score(after, d0, fr, k, kind):
    """(worst, best) arrays for rows of post-swap distances from the owner."""
    broken = np.isinf(after).any(axis=1)
    if kind is CostKind.SUM:
        gains = d0[None, :] - after
        total = gains.sum(axis=1)
        if fr.size:
            fg = gains[:, fr]
            worst = np.where((fg < 0).any(axis=1), -np.inf, total)
            best = np.where((fg > 0).any(axis=1), np.inf, total)
        else:
            worst = best = total
    else:
        a = d0.max()
        bmax = after.max(axis=1)
        if fr.size:
            fa = after[:, fr]
            worst = np.minimum(a - bmax, k - fa.max(axis=1))
            best = np.maximum(a - bmax, k - fa.min(axis=1))
        else:
            worst = best = a - bmax
    return np.where(broken, -np.inf, worst), np.where(broken, -np.inf, best)


def evaluate_swaps(view: View, kind: CostKind) -> dict[Swap, tuple]:
    """(worst, best) for every candidate swap, vectorised over targets."""
    kind = CostKind(kind)
    u = view.owner
    nbrs = view.neighbors
    taken = set(nbrs) | {u}
    targets = [x for x in view.members if x not in taken]
    if not nbrs or not targets:
        return {}
    idx = view.index
    size = len(view.members)
    d0 = np.array([view.dist[x] for x in view.members], dtype=float)
    fr = np.array(sorted(idx[f] for f in view.frontier), dtype=int)
    iu = idx[u]
    it = np.array([idx[w] for w in targets], dtype=int)
    base = [(idx[a], idx[b]) for a, b in view.edges]
    tree = len(base) == size - 1
    if tree:
        # one all-pairs table; dropping {u, v} just cuts off v's side
        dm = hop_matrix(size, base)
    out = {}
    for v in nbrs:
        iv = idx[v]
        if tree:
            side = dm[iv] < dm[iu]
            after = np.where(side[None, :], 1.0 + dm[it, :], dm[iu][None, :])
            after[~side[it], :] = np.inf
        else:
            dv = hop_matrix(size, [e for e in base if e != (iu, iv) and e != (iv, iu)])
            # reach x directly, or through the new edge to w
            after = np.minimum(dv[iu][None, :], 1.0 + dv[it, :])
        after[:, iu] = 0.0
        worst, best = _score(after, d0, fr, view.radius, kind)
        for j, w in enumerate(targets):
            out[Swap(u, v, w)] = (_to_ext(worst[j]), _to_ext(best[j]))
    return out


def decide(view: View, model: PlayerModel):
    """Best response visible from ``view``: ``(swap, value)`` or ``None``.

    Only swaps passing the attitude's threshold qualify; among them the
    largest value wins, ties going to the smallest (v, w).
    """
    if model.k != view.radius:
        raise ValueError(f"view radius {view.radius} does not match model k={model.k}")
    pick = 1 if model.mode == "best" else 0
    choice = None
    for s, vals in sorted(evaluate_swaps(view, model.kind).items()):
        value = vals[pick]
        if model.accepts(value) and (choice is None or value > choice[1]):
            choice = (s, value)
    return choice


def best_response(g: Graph, u: int, model: PlayerModel) -> Swap | None:
    found = decide(extract_view(g, u, model.k), model)
    return None if found is None else found[0]


def is_unhappy(g: Graph, u: int, model: PlayerModel) -> Swap | None:
    """Witness swap if ``u`` wants to move under ``model``, else ``None``."""
    return best_response(g, u, model)


# -- closed-form characterisations on trees ------------------------------------


def _paths_uvw(g: Graph, u: int):
    for v in g.adj[u]:
        for w in g.adj[v]:
            if w != u:
                yield v, w


def sum_p3_terms(g: Graph, u: int, v: int, w: int) -> tuple[int, int, int]:
    """(depth of T(v), |V(T(v))|, |N_{T(w)}(w)|) for the path u-v-w."""
    comps = path_components(g, [u, v, w])
    tv = comps[v]
    depth = component_depth(g, v, tv)
    nw = sum(1 for y in g.adj[w] if y in comps[w])
    return depth, len(tv), nw


def characterize_sum_p3(g: Graph, u: int) -> bool:
    """Literal path condition for SUM, k = 3 pessimists: some u-v-w with
    T(v) of depth at most one and strictly fewer vertices than w has
    neighbours inside T(w)."""
    if not g.is_tree():
        raise NotATreeError("characterisation applies to trees only")
    for v, w in _paths_uvw(g, u):
        depth, tv, nw = sum_p3_terms(g, u, v, w)
        if depth <= 1 and tv < nw:
            return True
    return False


def sum_p3_boundary(g: Graph, u: int) -> bool:
    """Some u-v-w sits exactly on the tie |V(T(v))| = |N_{T(w)}(w)| with depth <= 1."""
    for v, w in _paths_uvw(g, u):
        depth, tv, nw = sum_p3_terms(g, u, v, w)
        if depth <= 1 and tv == nw:
            return True
    return False


def characterize_wp2(g: Graph, u: int) -> bool:
    """Weak pessimists with k = 2 move iff some path u-v-w has deg(v) = 2."""
    if not g.is_tree():
        raise NotATreeError("characterisation applies to trees only")
    return any(g.degree(v) == 2 for v, _ in _paths_uvw(g, u))
