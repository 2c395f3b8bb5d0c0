"""Equilibrium checks and Price-of-Anarchy scans over trees."""

from __future__ import annotations

import csv
import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .beliefs import PlayerModel, candidate_swaps, decide, delta, extract_view
from .costs import social_cost, star_social_cost
from .graph import Graph, diameter, prufer_decode, unlabeled_tree_code
from .oracle import oracle_delta, required_budget

EXHAUSTIVE_MAX_N = 9


def is_equilibrium(g: Graph, model: PlayerModel) -> tuple[bool, list[int]]:
    if not g.is_connected():
        raise ValueError("equilibrium check needs a connected graph")
    unhappy = [u for u in range(g.n) if decide(extract_view(g, u, model.k), model) is not None]
    return not unhappy, unhappy


@lru_cache(maxsize=None)
def tree_classes(n: int) -> tuple[tuple[bytes, Graph], ...]:
    """One representative per isomorphism class of trees on n vertices, by code.

    Decodes all n^(n-2) Prüfer sequences and dedupes on the unlabeled code.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return ((b"()", Graph(1, frozenset())),)
    reps: dict[bytes, Graph] = {}
    for seq in itertools.product(range(n), repeat=n - 2):
        t = prufer_decode(seq, n)
        code = unlabeled_tree_code(t)
        if code not in reps:
            reps[code] = t
    return tuple(sorted(reps.items()))


def sampled_tree_classes(n: int, count: int, seed: int) -> tuple[tuple[bytes, Graph], ...]:
    rng = random.Random(seed)
    reps: dict[bytes, Graph] = {}
    for _ in range(count):
        t = prufer_decode([rng.randrange(n) for _ in range(n - 2)], n) if n >= 2 else Graph(1, frozenset())
        reps.setdefault(unlabeled_tree_code(t), t)
    return tuple(sorted(reps.items()))


@dataclass
class PoAReport:
    n: int
    k: int
    attitude: str
    kind: str
    classes: int
    equilibria: int
    max_ratio: Fraction | None
    witness: Graph | None
    witness_code: bytes | None
    optimum: int
    max_diameter: int | None = None
    equilibrium_codes: list[bytes] = field(default_factory=list, repr=False)

    def row(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "attitude": self.attitude,
            "kind": self.kind,
            "classes": self.classes,
            "equilibria": self.equilibria,
            "max_ratio": "none" if self.max_ratio is None else f"{float(self.max_ratio):.6f}",
            "witness_code": "" if self.witness_code is None else self.witness_code.decode(),
        }


CSV_FIELDS = ["n", "k", "attitude", "kind", "classes", "equilibria", "max_ratio", "witness_code"]


def write_poa_csv(reports, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        for r in reports:
            writer.writerow(r.row())


def _check_class(args):
    code, g, model = args
    ok, _ = is_equilibrium(g, model)
    if not ok:
        return None
    return code, g, social_cost(g, model.kind), diameter(g)


def poa_scan(n: int, model: PlayerModel, mode="exhaustive", *, workers: int = 1) -> PoAReport:
    """Worst equilibrium SC over tree classes on n vertices, against the star.

    ``mode`` is ``"exhaustive"`` (n <= 9) or ``("sample", count, seed)``.
    """
    if mode == "exhaustive":
        if n > EXHAUSTIVE_MAX_N:
            raise ValueError(f"exhaustive scan limited to n <= {EXHAUSTIVE_MAX_N}, got {n}")
        classes = tree_classes(n)
    elif isinstance(mode, tuple) and mode[0] == "sample":
        _, count, seed = mode
        classes = sampled_tree_classes(n, count, seed)
    else:
        raise ValueError(f"unknown scan mode {mode!r}")

    jobs = [(code, g, model) for code, g in classes]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_check_class, jobs))
    else:
        results = [_check_class(j) for j in jobs]
    found = [r for r in results if r is not None]  # class order kept: deterministic

    optimum = star_social_cost(n, model.kind)
    report = PoAReport(
        n=n,
        k=model.k,
        attitude=model.attitude.value,
        kind=model.kind.value,
        classes=len(classes),
        equilibria=len(found),
        max_ratio=None,
        witness=None,
        witness_code=None,
        optimum=optimum,
        equilibrium_codes=[code for code, *_ in found],
    )
    if found:
        code, g, sc, _ = max(found, key=lambda r: (r[2], r[0]))
        report.max_ratio = Fraction(sc, optimum) if optimum else Fraction(1)
        report.witness = g
        report.witness_code = code
        report.max_diameter = max(r[3] for r in found)
    return report


# -- closed form vs brute-force oracle ----------------------------------------

ORACLE_FIELDS = ["case_id", "k", "kind", "closed_min", "closed_max", "oracle_min", "oracle_max", "agree"]


@dataclass(frozen=True)
class OracleCase:
    case_id: int
    tree: Graph
    u: int
    swap: tuple
    k: int
    kind: str


def oracle_cases(count: int, seed: int, n_range=(4, 10), k_max: int = 4):
    """Seeded random (tree, player, swap, k, kind) cases; k in 2..k_max."""
    rng = random.Random(seed)
    cases = []
    while len(cases) < count:
        n = rng.randint(*n_range)
        tree = prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)
        u = rng.randrange(n)
        k = rng.randint(2, k_max)
        kind = rng.choice(["sum", "max"])
        swaps = candidate_swaps(extract_view(tree, u, k))
        if not swaps:
            continue
        cases.append(OracleCase(len(cases), tree, u, rng.choice(swaps), k, kind))
    return cases


def _fmt(x):
    if x == float("inf"):
        return "inf"
    if x == float("-inf"):
        return "-inf"
    return str(x)


def check_oracle_case(case: OracleCase) -> dict:
    view = extract_view(case.tree, case.u, case.k)
    closed = (delta(view, case.swap, case.kind, "worst"), delta(view, case.swap, case.kind, "best"))
    res = oracle_delta(view, case.swap, case.kind, required_budget(view, case.swap))
    agree = res.conclusive and closed == (res.min, res.max)
    return {
        "case_id": case.case_id,
        "k": case.k,
        "kind": case.kind,
        "closed_min": _fmt(closed[0]),
        "closed_max": _fmt(closed[1]),
        "oracle_min": _fmt(res.min) if res.conclusive else "inconclusive",
        "oracle_max": _fmt(res.max) if res.conclusive else "inconclusive",
        "agree": agree,
    }


def oracle_agreement(count: int, seed: int) -> list[dict]:
    return [check_oracle_case(c) for c in oracle_cases(count, seed)]


def write_oracle_csv(rows, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=ORACLE_FIELDS, lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow({**r, "agree": "true" if r["agree"] else "false"})
