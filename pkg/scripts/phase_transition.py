"""Exhaustive PoA table over small trees for every attitude, cost and radius."""

import argparse
import csv
import itertools
from dataclasses import dataclass

from swapgame.analysis import CSV_FIELDS, poa_scan
from swapgame.beliefs import PlayerModel


@dataclass
class Config:
    n_lo: int = 4
    n_hi: int = 8
    ks: tuple = (2, 3, 4, 5)
    attitudes: tuple = ("pess", "weak", "opt")
    out: str = "phase_transition.csv"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-hi", type=int, default=Config.n_hi)
    ap.add_argument("--out", default=Config.out)
    cfg = Config(n_hi=ap.parse_args().n_hi, out=ap.parse_args().out)

    rows = []
    for att, kind, k in itertools.product(cfg.attitudes, ("sum", "max"), cfg.ks):
        for n in range(cfg.n_lo, cfg.n_hi + 1):
            r = poa_scan(n, PlayerModel(att, kind, k))
            row = r.row()
            row["max_diameter"] = "" if r.max_diameter is None else r.max_diameter
            rows.append(row)
            print(f"{att:4} {kind} k={k} n={n}: {r.equilibria}/{r.classes} stable, ratio {row['max_ratio']}")
    with open(cfg.out, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=CSV_FIELDS + ["max_diameter"], lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    print(f"wrote {len(rows)} rows to {cfg.out}")


if __name__ == "__main__":
    main()
