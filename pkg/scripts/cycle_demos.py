"""Replay the known best-response cycles and dump traces plus DOT frames."""

import argparse
import os
from dataclasses import dataclass

from swapgame.beliefs import PlayerModel
from swapgame.dynamics import Fixed, RoundRobin, replay, run, run_simultaneous, write_trace
from swapgame.graph import to_dot
from swapgame.instances import gen_four_path_cycle, gen_path, gen_seesaw


@dataclass
class Config:
    out_dir: str = "cycles"
    seesaw_m: int = 3


def dump(name, g0, outcome, events, cfg):
    write_trace(events, os.path.join(cfg.out_dir, f"{name}.jsonl"))
    for i, (g, ev) in enumerate(zip(replay(g0, events), events)):
        with open(os.path.join(cfg.out_dir, f"{name}_{i:03d}.dot"), "w") as fh:
            fh.write(to_dot(g, added=ev.added[0], removed=ev.removed[0]))
    print(f"{name:>14}: {outcome.summary()}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default=Config.out_dir)
    ap.add_argument("--m", type=int, default=Config.seesaw_m)
    args = ap.parse_args()
    cfg = Config(args.out_dir, args.m)
    os.makedirs(cfg.out_dir, exist_ok=True)

    g = gen_path(4)
    dump("simultaneous", g, *run_simultaneous(g, PlayerModel("pess", "sum", 3)), cfg)
    g = gen_four_path_cycle()
    dump("four_path", g, *run(g, PlayerModel("weak", "sum", 2), RoundRobin.natural(4)), cfg)
    g = gen_path(6)
    dump("fixed_player", g, *run(g, PlayerModel("weak", "sum", 3), Fixed(2)), cfg)
    g = gen_seesaw(cfg.seesaw_m)
    dump("seesaw", g, *run(g, PlayerModel("weak", "sum", 3), RoundRobin.natural(g.n)), cfg)


if __name__ == "__main__":
    main()
