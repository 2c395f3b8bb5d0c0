"""Command-line front end: generate, simulate, check, scan, oracle-validate.

Exit codes: 0 success or equilibrium, 1 negative verdict, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field

from . import analysis, dynamics, instances
from .beliefs import PlayerModel, best_response
from .graph import Graph, GraphError, read_edge_list, to_dot, to_edge_list, write_edge_list

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2

GEN_PARAMS = ("n", "m", "p", "q", "seed")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    generator: str | None = None
    params: dict = field(default_factory=dict)
    instance: str | None = None
    attitude: str = "pess"
    kind: str = "sum"
    k: int = 3
    scheduler: str = "rr"
    order: tuple[int, ...] | None = None
    seed: int = 0
    max_steps: int | None = None
    trace: str | None = None
    dot: str | None = None
    csv: str | None = None

    def validate(self) -> None:
        if (self.generator is None) == (self.instance is None):
            raise UsageError("give exactly one of --instance or --generator")
        if self.k < 1:
            raise UsageError(f"--k must be at least 1, got {self.k}")
        if self.instance is not None and not os.path.isfile(self.instance):
            raise UsageError(f"instance file not found: {self.instance}")
        if self.max_steps is not None and self.max_steps < 1:
            raise UsageError("--max-steps must be at least 1")

    @property
    def model(self) -> PlayerModel:
        return PlayerModel(self.attitude, self.kind, self.k)


def _add_generator_params(p: argparse.ArgumentParser) -> None:
    for name in GEN_PARAMS:
        p.add_argument(f"--{name}", type=int, default=None)


def _add_instance(p: argparse.ArgumentParser) -> None:
    p.add_argument("--instance", help="edge-list file")
    p.add_argument("--generator", choices=sorted(instances.GENERATORS))
    _add_generator_params(p)


def _add_model(p: argparse.ArgumentParser, k_default: int | None = 3) -> None:
    p.add_argument("--attitude", choices=["pess", "weak", "opt"], default="pess")
    p.add_argument("--cost", choices=["sum", "max"], default="sum")
    p.add_argument("--k", type=int, default=k_default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="swapgame", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a named instance as an edge list")
    g.add_argument("name", choices=sorted(instances.GENERATORS))
    _add_generator_params(g)
    g.add_argument("--out", help="edge-list path (default: stdout)")
    g.add_argument("--dot")

    s = sub.add_parser("simulate", help="run best-response dynamics")
    _add_instance(s)
    _add_model(s)
    s.add_argument("--scheduler", default="rr", help="rr | random | fixed:<id> | simul")
    s.add_argument("--order", help="comma-separated round-robin order")
    s.add_argument("--max-steps", type=int)
    s.add_argument("--trace")
    s.add_argument("--dot")

    c = sub.add_parser("check", help="equilibrium verdict for one instance")
    _add_instance(c)
    _add_model(c)

    sc = sub.add_parser("scan", help="price-of-anarchy scan over tree classes")
    sc.add_argument("--n-range", required=True, help="N or LO..HI")
    _add_model(sc)
    sc.add_argument("--mode", choices=["exhaustive", "sample"], default="exhaustive")
    sc.add_argument("--samples", type=int, default=2000)
    sc.add_argument("--seed", type=int, default=0)
    sc.add_argument("--workers", type=int, default=1)
    sc.add_argument("--csv")
    sc.add_argument("--witness-dir")

    o = sub.add_parser("oracle-validate", help="closed-form delta vs brute-force worlds")
    o.add_argument("--cases", type=int, default=300)
    o.add_argument("--seed", type=int, default=1)
    o.add_argument("--csv")
    return parser


def _config(args) -> RunConfig:
    params = {name: getattr(args, name, None) for name in GEN_PARAMS}
    cfg = RunConfig(
        command=args.command,
        generator=getattr(args, "generator", None),
        params={k: v for k, v in params.items() if v is not None},
        instance=getattr(args, "instance", None),
        attitude=getattr(args, "attitude", "pess"),
        kind=getattr(args, "cost", "sum"),
        k=getattr(args, "k", 3),
        scheduler=getattr(args, "scheduler", "rr"),
        seed=args.seed if getattr(args, "seed", None) is not None else 0,
        max_steps=getattr(args, "max_steps", None),
        trace=getattr(args, "trace", None),
        dot=getattr(args, "dot", None),
        csv=getattr(args, "csv", None),
    )
    order = getattr(args, "order", None)
    if order:
        try:
            cfg.order = tuple(int(x) for x in order.split(","))
        except ValueError as exc:
            raise UsageError(f"bad --order {order!r}") from exc
    return cfg


def _generate(name: str, params: dict) -> Graph:
    try:
        return instances.generate(name, **params)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def load_instance(cfg: RunConfig) -> tuple[Graph, list[str] | None]:
    cfg.validate()
    if cfg.instance is not None:
        try:
            g = read_edge_list(cfg.instance)
        except (OSError, UnicodeDecodeError, GraphError) as exc:
            raise UsageError(f"cannot read {cfg.instance}: {exc}") from exc
        labels = None
    else:
        g = _generate(cfg.generator, cfg.params)
        labels = instances.labels_for(cfg.generator, **cfg.params)
    if not g.is_connected():
        raise UsageError("instance graph is disconnected")
    return g, labels


def _dot_labels(g: Graph, names):
    if names is None:
        return None
    return [f"{x} {names[x]}" for x in range(g.n)]


def make_scheduler(cfg: RunConfig, n: int):
    spec = cfg.scheduler
    if spec == "rr":
        try:
            return dynamics.RoundRobin(cfg.order) if cfg.order else dynamics.RoundRobin.natural(n)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    if spec == "random":
        return dynamics.RandomScheduler(cfg.seed)
    if spec == "simul":
        return dynamics.Simultaneous()
    if spec.startswith("fixed:"):
        try:
            player = int(spec.split(":", 1)[1])
        except ValueError as exc:
            raise UsageError(f"bad scheduler {spec!r}") from exc
        if not 0 <= player < n:
            raise UsageError(f"fixed player {player} out of range 0..{n - 1}")
        return dynamics.Fixed(player)
    raise UsageError(f"unknown scheduler {spec!r}; use rr, random, fixed:<id> or simul")


def cmd_generate(args) -> int:
    params = {name: getattr(args, name) for name in GEN_PARAMS if getattr(args, name) is not None}
    g = _generate(args.name, params)
    if args.out:
        write_edge_list(g, args.out)
    else:
        sys.stdout.write(to_edge_list(g))
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(to_dot(g, _dot_labels(g, instances.labels_for(args.name, **params))))
    if args.out:
        print(f"wrote n={g.n} m={g.m} to {args.out}")
    return EXIT_OK


def cmd_simulate(args) -> int:
    cfg = _config(args)
    g0, names = load_instance(cfg)
    sch = make_scheduler(cfg, g0.n)
    try:
        outcome, events = dynamics.run(g0, cfg.model, sch, cfg.max_steps)
    except dynamics.PotentialViolation as exc:
        print(f"potential violation: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    if cfg.trace:
        dynamics.write_trace(events, cfg.trace)
    if cfg.dot:
        last = events[-1] if events else None
        with open(cfg.dot, "w", encoding="utf-8") as fh:
            fh.write(
                to_dot(
                    outcome.graph,
                    _dot_labels(outcome.graph, names),
                    added=last.added[0] if last else None,
                    removed=last.removed[0] if last else None,
                )
            )
    print(outcome.summary())
    return EXIT_OK


def cmd_check(args) -> int:
    cfg = _config(args)
    g, _ = load_instance(cfg)
    model = cfg.model
    ok, unhappy = analysis.is_equilibrium(g, model)
    if ok:
        print(f"equilibrium ({model})")
        return EXIT_OK
    print(f"not an equilibrium ({model}); unhappy players: {len(unhappy)}")
    for u in unhappy:
        s = best_response(g, u, model)
        print(f"  player {u}: drop {s.v} add {s.w}")
    return EXIT_NEGATIVE


def _n_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split(".."))
        else:
            lo = hi = int(text)
    except ValueError as exc:
        raise UsageError(f"bad --n-range {text!r}") from exc
    if lo < 1 or hi < lo:
        raise UsageError(f"empty --n-range {text!r}")
    return range(lo, hi + 1)


def cmd_scan(args) -> int:
    ns = _n_range(args.n_range)
    if args.k is None or args.k < 1:
        raise UsageError("--k must be at least 1")
    model = PlayerModel(args.attitude, args.cost, args.k)
    if args.mode == "exhaustive" and ns.stop - 1 > analysis.EXHAUSTIVE_MAX_N:
        raise UsageError(f"exhaustive scan limited to n <= {analysis.EXHAUSTIVE_MAX_N}")
    mode = "exhaustive" if args.mode == "exhaustive" else ("sample", args.samples, args.seed)
    reports = [analysis.poa_scan(n, model, mode, workers=args.workers) for n in ns]
    for r in reports:
        row = r.row()
        print(" ".join(f"{k}={row[k]}" for k in analysis.CSV_FIELDS if k != "witness_code"))
    if args.csv:
        analysis.write_poa_csv(reports, args.csv)
    if args.witness_dir:
        os.makedirs(args.witness_dir, exist_ok=True)
        for r in reports:
            if r.witness is None:
                continue
            stem = os.path.join(args.witness_dir, f"witness_n{r.n}_{r.attitude}_{r.kind}_k{r.k}")
            write_edge_list(r.witness, stem + ".txt")
            with open(stem + ".dot", "w", encoding="utf-8") as fh:
                fh.write(to_dot(r.witness))
    return EXIT_OK


def cmd_oracle_validate(args) -> int:
    if args.cases < 1:
        raise UsageError("--cases must be positive")
    rows = analysis.oracle_agreement(args.cases, args.seed)
    if args.csv:
        analysis.write_oracle_csv(rows, args.csv)
    bad = [r["case_id"] for r in rows if not r["agree"]]
    print(f"agree {len(rows) - len(bad)}/{len(rows)}")
    if bad:
        print("disagreeing cases: " + " ".join(map(str, bad)))
        return EXIT_NEGATIVE
    return EXIT_OK


COMMANDS = {
    "generate": cmd_generate,
    "simulate": cmd_simulate,
    "check": cmd_check,
    "scan": cmd_scan,
    "oracle-validate": cmd_oracle_validate,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
