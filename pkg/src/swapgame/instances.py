"""Generators for the named instances and random starting graphs.

Vertex numbering for the gadget trees is gadget-major: gadget 0 first, its
root before its children, children in alphabetical order. ``*_labels``
helpers return the matching names for DOT output.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .graph import Graph, build_graph, norm_edge, prufer_decode


def gen_path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_star(n: int) -> Graph:
    """Star with centre 0."""
    if n < 1:
        raise ValueError(f"star needs n >= 1, got {n}")
    return build_graph(n, [(0, i) for i in range(1, n)])


def gen_random_tree(n: int, seed: int) -> Graph:
    """Uniform labeled tree via a random Prüfer sequence."""
    if n < 2:
        raise ValueError(f"random tree needs n >= 2, got {n}")
    rng = random.Random(seed)
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)


def gen_random_connected(n: int, m: int, seed: int) -> Graph:
    """Random spanning tree plus ``m - n + 1`` distinct extra edges."""
    if n < 2:
        raise ValueError(f"random graph needs n >= 2, got {n}")
    if not n - 1 <= m <= n * (n - 1) // 2:
        raise ValueError(f"no connected simple graph has n={n}, m={m}")
    rng = random.Random(seed)
    tree = prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)
    edges = set(tree.edges)
    rest = [norm_edge(a, b) for a in range(n) for b in range(a + 1, n) if norm_edge(a, b) not in edges]
    edges.update(rng.sample(rest, m - (n - 1)))
    return Graph(n, frozenset(edges))


def _gadget_spine_tree(p: int, inner_kids: int, end_kids: int, pad: int) -> tuple[Graph, list[str]]:
    letters = "bcdefgh"
    edges = []
    labels = []
    roots = []
    spine_child = {}
    nxt = 0
    for i in range(p + 2):
        kids = end_kids if i in (0, p + 1) else inner_kids
        root = nxt
        roots.append(root)
        labels.append(f"a{i}")
        nxt += 1
        for j in range(kids):
            edges.append((root, nxt))
            labels.append(f"{letters[j]}{i}")
            if j == kids - 1 and 0 < i <= p:
                spine_child[i] = nxt
            nxt += 1
    # spine: a0 - x1 - x2 - ... - xp - a_{p+1}, x_i the last child of a_i
    edges.append((roots[0], spine_child[1]))
    for i in range(1, p):
        edges.append((spine_child[i], spine_child[i + 1]))
    edges.append((spine_child[p], roots[p + 1]))
    for t in range(pad):
        i = 1 + t % p
        edges.append((roots[i], nxt))
        labels.append(f"x{t}@a{i}")
        nxt += 1
    return build_graph(nxt, edges), labels


def gen_ts(p: int, pad: int = 0) -> Graph:
    """Spine of p four-child gadgets between two three-child end gadgets; n = 5p + 8.

    ``pad`` extra leaves are attached round-robin to a_1..a_p for sizes
    that are not of the form 5p + 8.
    """
    if p < 3:
        raise ValueError(f"TS(p) needs p >= 3, got {p}")
    return _gadget_spine_tree(p, 4, 3, pad)[0]


def ts_labels(p: int, pad: int = 0) -> list[str]:
    return _gadget_spine_tree(p, 4, 3, pad)[1]


def gen_ts_prime(p: int, pad: int = 0) -> Graph:
    """Five-child gadget variant (spine through f_i); n = 6p + 10."""
    if p < 3:
        raise ValueError(f"TS'(p) needs p >= 3, got {p}")
    return _gadget_spine_tree(p, 5, 4, pad)[0]


def ts_prime_labels(p: int, pad: int = 0) -> list[str]:
    return _gadget_spine_tree(p, 5, 4, pad)[1]


def gen_caterpillar(q: int, odd: bool = False) -> Graph:
    """Spine s_1..s_q, one leaf per spine vertex, one extra end vertex per side.

    Ids: end0 = 0, then (s_i, leaf_i) pairs, then end1; n = 2q + 2.
    ``odd=True`` hangs one more leaf on s_1 for odd player counts.
    """
    if q < 2:
        raise ValueError(f"caterpillar needs q >= 2, got {q}")
    spine = [1 + 2 * i for i in range(q)]
    end1 = 2 * q + 1
    edges = [(0, spine[0]), (spine[-1], end1)]
    edges += [(s, s + 1) for s in spine]
    edges += [(a, b) for a, b in zip(spine, spine[1:])]
    n = 2 * q + 2
    if odd:
        edges.append((spine[0], n))
        n += 1
    return build_graph(n, edges)


def gen_seesaw(m: int) -> Graph:
    """Double star on 2m + 3 players u_1..u_{2m+3} (ids 0..2m+2).

    Hub u_{2m+3} holds the odd leaves u_1, u_3, ..., u_{2m+1}; hub u_{2m+2}
    the even leaves u_2, ..., u_{2m}; the hubs are adjacent.
    """
    if m < 2:
        raise ValueError(f"seesaw needs m >= 2, got {m}")
    n = 2 * m + 3
    odd_hub, even_hub = n - 1, n - 2
    edges = [(odd_hub, even_hub)]
    for i in range(1, 2 * m + 2):  # u_i for i = 1..2m+1
        edges.append((i - 1, odd_hub if i % 2 else even_hub))
    return build_graph(n, edges)


def gen_four_path_cycle() -> Graph:
    """The path u3 - u1 - u4 - u2 with u_i as id i - 1."""
    return build_graph(4, [(2, 0), (0, 3), (3, 1)])


def sc_ts_closed_form(p: int) -> Fraction:
    """Exact two-term closed form for SC(TS(p)) under SUM costs."""
    p = Fraction(p)
    return (45 * p**2 + 293 * p + 252) + (Fraction(25, 3) * p**3 + 65 * p**2 - Fraction(286, 3) * p - 136)


GENERATORS = {
    "path": (gen_path, ("n",)),
    "star": (gen_star, ("n",)),
    "random-tree": (gen_random_tree, ("n", "seed")),
    "random-connected": (gen_random_connected, ("n", "m", "seed")),
    "ts": (gen_ts, ("p",)),
    "ts-prime": (gen_ts_prime, ("p",)),
    "caterpillar": (gen_caterpillar, ("q",)),
    "seesaw": (gen_seesaw, ("m",)),
    "four-path": (gen_four_path_cycle, ()),
}


def generate(name: str, **params) -> Graph:
    if name not in GENERATORS:
        raise KeyError(f"unknown generator {name!r}; choose from {sorted(GENERATORS)}")
    fn, needed = GENERATORS[name]
    missing = [p for p in needed if params.get(p) is None]
    if missing:
        raise ValueError(f"generator {name!r} needs parameter(s) {', '.join(missing)}")
    return fn(**{p: params[p] for p in needed})


def labels_for(name: str, **params):
    if name == "ts":
        return ts_labels(params["p"])
    if name == "ts-prime":
        return ts_prime_labels(params["p"])
    if name in ("seesaw", "four-path"):
        n = 2 * params["m"] + 3 if name == "seesaw" else 4
        return [f"u{i + 1}" for i in range(n)]
    return None
