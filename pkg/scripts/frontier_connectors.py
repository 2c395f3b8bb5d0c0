"""Do hidden links between two frontier vertices change worst/best deltas?

Compares the pendant-world oracle with the connector-enabled oracle on random
tree views and tallies where the extremes move.
"""

import argparse
from collections import Counter
from dataclasses import dataclass

from swapgame.analysis import oracle_cases
from swapgame.beliefs import extract_view
from swapgame.oracle import oracle_delta, required_budget


@dataclass
class Config:
    cases: int = 300
    seed: int = 7
    max_worlds: int = 200_000


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cases", type=int, default=Config.cases)
    ap.add_argument("--seed", type=int, default=Config.seed)
    args = ap.parse_args()
    cfg = Config(args.cases, args.seed)

    tally = Counter()
    examples = []
    for c in oracle_cases(cfg.cases, cfg.seed, n_range=(4, 9)):
        view = extract_view(c.tree, c.u, c.k)
        if len(view.frontier) < 2:
            tally["frontier < 2"] += 1
            continue
        budget = required_budget(view, c.swap)
        plain = oracle_delta(view, c.swap, c.kind, budget)
        wide = oracle_delta(view, c.swap, c.kind, budget, connectors=True, max_worlds=cfg.max_worlds)
        if not wide.conclusive:
            tally["inconclusive"] += 1
            continue
        moved = (plain.min != wide.min, plain.max != wide.max)
        tally[{(False, False): "same", (True, False): "worst moves", (False, True): "best moves"}.get(moved, "both move")] += 1
        if any(moved) and len(examples) < 5:
            examples.append((c.kind, c.k, tuple(c.swap), (plain.min, plain.max), (wide.min, wide.max)))
    for key, count in sorted(tally.items()):
        print(f"{key:>14}: {count}")
    for ex in examples:
        print("  kind=%s k=%d swap=%s pendant=%s connectors=%s" % ex)


if __name__ == "__main__":
    main()
