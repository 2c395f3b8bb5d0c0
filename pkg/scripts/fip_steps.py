"""How many moves do pessimists need on random trees? Ratio to n^3 per (n, k)."""

import argparse
import statistics
from dataclasses import dataclass

from swapgame.beliefs import PlayerModel
from swapgame.dynamics import RoundRobin, run
from swapgame.instances import gen_random_tree


@dataclass
class Config:
    ns: tuple = (10, 20, 30, 40)
    ks: tuple = (3, 4, 5, 6)
    runs: int = 50
    seed: int = 0


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--runs", type=int, default=Config.runs)
    ap.add_argument("--seed", type=int, default=Config.seed)
    args = ap.parse_args()
    cfg = Config(runs=args.runs, seed=args.seed)

    for kind in ("sum", "max"):
        for n in cfg.ns:
            for k in cfg.ks:
                steps = []
                for i in range(cfg.runs):
                    tree = gen_random_tree(n, cfg.seed + 7919 * i + n * 100 + k)
                    out, _ = run(tree, PlayerModel("pess", kind, k), RoundRobin.natural(n), monitor=True)
                    steps.append(out.steps)
                print(f"{kind} n={n:>2} k={k}: mean {statistics.mean(steps):6.1f}  max {max(steps):4}  max/n^3 {max(steps) / n**3:.4f}")


if __name__ == "__main__":
    main()
