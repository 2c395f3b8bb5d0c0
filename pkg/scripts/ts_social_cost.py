"""SC of the spine-of-gadgets equilibrium against the closed form and the star."""

import argparse
from dataclasses import dataclass

from swapgame.analysis import is_equilibrium
from swapgame.beliefs import PlayerModel
from swapgame.costs import CostKind, social_cost, star_social_cost
from swapgame.graph import diameter
from swapgame.instances import gen_ts, sc_ts_closed_form


@dataclass
class Config:
    p_lo: int = 3
    p_hi: int = 16
    check_equilibrium: bool = False


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p-hi", type=int, default=Config.p_hi)
    ap.add_argument("--check-equilibrium", action="store_true")
    args = ap.parse_args()
    cfg = Config(p_hi=args.p_hi, check_equilibrium=args.check_equilibrium)

    base = None
    print(f"{'p':>3} {'n':>4} {'diam':>4} {'SC bfs':>8} {'closed':>8} {'ratio':>7} {'growth':>7}  stable")
    for p in range(cfg.p_lo, cfg.p_hi + 1):
        g = gen_ts(p)
        sc = social_cost(g, CostKind.SUM)
        ratio = sc / star_social_cost(g.n, CostKind.SUM)
        base = base or ratio
        stable = is_equilibrium(g, PlayerModel("pess", "sum", 3))[0] if cfg.check_equilibrium else "-"
        print(f"{p:>3} {g.n:>4} {diameter(g):>4} {sc:>8} {str(sc_ts_closed_form(p)):>8} {ratio:7.3f} {ratio / base:7.3f}  {stable}")


if __name__ == "__main__":
    main()
