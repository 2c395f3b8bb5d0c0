"""Best-response dynamics: schedulers, stepping, potential monitoring, cycles."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field, replace
from typing import Union

from .beliefs import Attitude, PlayerModel, Swap, decide, extract_view
from .costs import CostKind, lex_decreasing, phi_max, phi_sum, potentials
from .graph import INF, Graph, apply_swap, labeled_code, norm_edge


class PotentialViolation(RuntimeError):
    """A pessimistic move on a tree failed to decrease the potential (engine bug)."""


# -- schedulers -------------------------------------------------------------


@dataclass(frozen=True)
class RoundRobin:
    order: tuple[int, ...]
    cursor: int = 0

    def __post_init__(self):
        if sorted(self.order) != list(range(len(self.order))):
            raise ValueError("round-robin order must be a permutation of 0..n-1")
        if not 0 <= self.cursor < max(len(self.order), 1):
            raise ValueError(f"cursor {self.cursor} out of range")

    @classmethod
    def natural(cls, n: int) -> "RoundRobin":
        return cls(tuple(range(n)))

    @property
    def key(self):
        return self.cursor


@dataclass(frozen=True)
class RandomScheduler:
    seed: int
    rng: random.Random = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.rng is None:
            object.__setattr__(self, "rng", random.Random(self.seed))

    @property
    def key(self):
        return None  # generator state never repeats meaningfully


@dataclass(frozen=True)
class Fixed:
    player: int

    @property
    def key(self):
        return 0


@dataclass(frozen=True)
class Simultaneous:
    @property
    def key(self):
        return 0


Scheduler = Union[RoundRobin, RandomScheduler, Fixed, Simultaneous]


# -- records ----------------------------------------------------------------


@dataclass(frozen=True)
class TraceEvent:
    step: int
    movers: tuple[int, ...]
    removed: tuple[tuple[int, int], ...]
    added: tuple[tuple[int, int], ...]
    deltas: tuple
    phi_sum: object
    phi_max: tuple
    state_code: str
    flags: tuple[str, ...] = ()

    @property
    def mover(self) -> int:
        return self.movers[0]

    def to_record(self) -> dict:
        single = len(self.movers) == 1
        rec = {
            "step": self.step,
            "mover": self.movers[0] if single else list(self.movers),
            "removed": list(self.removed[0]) if single else [list(e) for e in self.removed],
            "added": list(self.added[0]) if single else [list(e) for e in self.added],
            "delta": _ext(self.deltas[0]) if single else [_ext(d) for d in self.deltas],
            "phi_sum": _ext(self.phi_sum),
            "phi_max": [_ext(x) for x in self.phi_max],
            "state_code": self.state_code,
        }
        if self.flags:
            rec["flags"] = list(self.flags)
        return rec


def _ext(x):
    if x == INF:
        return "inf"
    if x == -INF:
        return "-inf"
    return x


@dataclass(frozen=True)
class Equilibrium:
    graph: Graph
    steps: int

    def summary(self) -> str:
        return f"equilibrium steps={self.steps}"


@dataclass(frozen=True)
class Cycle:
    entry: int
    period: int
    graph: Graph

    def summary(self) -> str:
        return f"cycle entry={self.entry} period={self.period}"


@dataclass(frozen=True)
class BudgetExhausted:
    steps: int
    graph: Graph

    def summary(self) -> str:
        return f"budget steps={self.steps}"


@dataclass(frozen=True)
class Halted:
    """Run stopped for a reason that is neither equilibrium, cycle nor budget."""

    steps: int
    reason: str
    graph: Graph

    def summary(self) -> str:
        return f"halted steps={self.steps} reason={self.reason}"


Outcome = Union[Equilibrium, Cycle, BudgetExhausted, Halted]


def state_code(g: Graph) -> str:
    return labeled_code(g).hex()


def write_trace(events, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for ev in events:
            fh.write(json.dumps(ev.to_record(), sort_keys=True) + "\n")


def read_trace(path) -> list[dict]:
    with open(path, encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]


# -- engine -----------------------------------------------------------------


class _Decider:
    """Memoised per-view decisions; views are pure functions of the graph."""

    def __init__(self, model: PlayerModel):
        self.model = model
        self.cache: dict = {}

    def __call__(self, g: Graph, u: int):
        view = extract_view(g, u, self.model.k)
        key = (u, view.edges)
        if key not in self.cache:
            self.cache[key] = decide(view, self.model)
        return self.cache[key]


def _event(step, g, movers, swaps, values, flags=()):
    psum, pmax = potentials(g)
    return TraceEvent(
        step=step,
        movers=tuple(movers),
        removed=tuple(norm_edge(s.u, s.v) for s in swaps),
        added=tuple(norm_edge(s.u, s.w) for s in swaps),
        deltas=tuple(values),
        phi_sum=psum,
        phi_max=pmax,
        state_code=state_code(g),
        flags=tuple(flags),
    )


def _select(g: Graph, sch: Scheduler, decider: _Decider):
    """(mover, swap, value, next scheduler) or None when nobody (eligible) moves."""
    if isinstance(sch, RoundRobin):
        n = len(sch.order)
        for off in range(n):
            pos = (sch.cursor + off) % n
            u = sch.order[pos]
            found = decider(g, u)
            if found is not None:
                return u, found[0], found[1], replace(sch, cursor=(pos + 1) % n)
        return None
    if isinstance(sch, Fixed):
        found = decider(g, sch.player)
        if found is None:
            return None
        return sch.player, found[0], found[1], sch
    if isinstance(sch, RandomScheduler):
        unhappy = []
        for u in range(g.n):
            found = decider(g, u)
            if found is not None:
                unhappy.append((u, found))
        if not unhappy:
            return None
        u, found = unhappy[sch.rng.randrange(len(unhappy))]
        return u, found[0], found[1], sch
    raise TypeError(f"step() does not handle {type(sch).__name__}; use run_simultaneous")


def step(g: Graph, model: PlayerModel, sch: Scheduler, *, _decider=None, _index: int = 0):
    """One scheduled move: (event or None, new graph, new scheduler)."""
    decider = _decider or _Decider(model)
    picked = _select(g, sch, decider)
    if picked is None:
        return None, g, sch
    u, swap, value, nxt = picked
    g2 = apply_swap(g, swap.u, swap.v, swap.w)
    return _event(_index, g2, [u], [swap], [value]), g2, nxt


def anyone_unhappy(g: Graph, model: PlayerModel, decider=None) -> list[int]:
    decider = decider or _Decider(model)
    return [u for u in range(g.n) if decider(g, u) is not None]


def _monitor(model: PlayerModel, g0: Graph) -> bool:
    return model.attitude is Attitude.PESSIMISTIC and g0.is_tree()


def run(g0: Graph, model: PlayerModel, sch: Scheduler, max_steps: int | None = None, *, monitor: bool | None = None):
    """Single-mover dynamics until equilibrium, a repeated state, or the budget.

    Cycle detection keys on (labeled state, scheduler cursor). For pessimists
    starting on a tree the matching potential must strictly drop every step;
    a violation raises :class:`PotentialViolation`.
    """
    if isinstance(sch, Simultaneous):
        return run_simultaneous(g0, model, max_steps)
    if not g0.is_connected():
        raise ValueError("dynamics require a connected start graph")
    if max_steps is None:
        max_steps = 4 * g0.n ** 3
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    if monitor is None:
        monitor = _monitor(model, g0)
    decider = _Decider(model)
    events: list[TraceEvent] = []
    seen: dict = {}
    g = g0
    pot = phi_sum(g) if model.kind is CostKind.SUM else phi_max(g)
    for t in range(max_steps):
        key = (labeled_code(g), sch.key) if sch.key is not None else None
        if key is not None:
            if key in seen:
                return Cycle(seen[key], t - seen[key], g), events
            seen[key] = t
        picked = _select(g, sch, decider)
        if picked is None:
            if isinstance(sch, Fixed) and anyone_unhappy(g, model, decider):
                return Halted(t, f"player {sch.player} is content but others are not", g), events
            return Equilibrium(g, t), events
        u, swap, value, sch = picked
        g = apply_swap(g, swap.u, swap.v, swap.w)
        ev = _event(t, g, [u], [swap], [value])
        events.append(ev)
        if monitor:
            new_pot = ev.phi_sum if model.kind is CostKind.SUM else ev.phi_max
            ok = new_pot < pot if model.kind is CostKind.SUM else lex_decreasing(pot, new_pot)
            if not ok:
                raise PotentialViolation(
                    f"step {t}: player {u} swap {tuple(swap)} took potential {pot} to {new_pot}"
                )
            pot = new_pot
    # the state after the last move may itself be settled
    if _select(g, sch, decider) is None and not anyone_unhappy(g, model, decider):
        return Equilibrium(g, max_steps), events
    return BudgetExhausted(max_steps, g), events


def run_simultaneous(g0: Graph, model: PlayerModel, max_steps: int | None = None):
    """Every unhappy player plays its best response against the same state.

    All removals are applied first, then all additions, both as set updates.
    Edge-count drift or disconnection halts the run with a diagnostic.
    """
    if not g0.is_connected():
        raise ValueError("dynamics require a connected start graph")
    if max_steps is None:
        max_steps = 4 * g0.n ** 3
    decider = _Decider(model)
    events: list[TraceEvent] = []
    seen: dict = {}
    g = g0
    for t in range(max_steps):
        key = labeled_code(g)
        if key in seen:
            return Cycle(seen[key], t - seen[key], g), events
        seen[key] = t
        moves = [(u, found) for u in range(g.n) if (found := decider(g, u)) is not None]
        if not moves:
            return Equilibrium(g, t), events
        swaps = [found[0] for _, found in moves]
        edges = set(g.edges)
        flags = []
        removed = [norm_edge(s.u, s.v) for s in swaps]
        added = [norm_edge(s.u, s.w) for s in swaps]
        if len(set(removed)) < len(removed):
            flags.append("shared-removal")
        if len(set(added)) < len(added):
            flags.append("shared-addition")
        edges -= set(removed)
        if any(e in edges for e in added):
            flags.append("addition-already-present")
        edges |= set(added)
        g = Graph(g.n, frozenset(edges))
        ev = _event(t, g, [u for u, _ in moves], swaps, [found[1] for _, found in moves], flags)
        events.append(ev)
        if g.m != g0.m:
            return Halted(t + 1, f"edge count drifted from {g0.m} to {g.m}", g), events
        if not g.is_connected():
            return Halted(t + 1, "graph disconnected", g), events
    return BudgetExhausted(max_steps, g), events


def replay(g0: Graph, events) -> list[Graph]:
    """States after each event, rebuilt from the recorded edits alone."""
    states = []
    edges = set(g0.edges)
    for ev in events:
        edges -= set(ev.removed)
        edges |= set(ev.added)
        g = Graph(g0.n, frozenset(edges))
        if state_code(g) != ev.state_code:
            raise ValueError(f"event {ev.step} does not reproduce its recorded state")
        states.append(g)
    return states
