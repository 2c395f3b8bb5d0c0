import random

import pytest
from hypothesis import strategies as st

from swapgame.graph import Graph, build_graph, norm_edge, prufer_decode
from swapgame.instances import gen_random_connected


@st.composite
def trees(draw, min_n=2, max_n=12):
    n = draw(st.integers(min_n, max_n))
    if n == 1:
        return Graph(1, frozenset())
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return prufer_decode(seq, n)


@st.composite
def graphs(draw, min_n=1, max_n=10, connected=False):
    """Arbitrary simple graphs, optionally forced connected via a spanning tree."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    edges = set()
    if connected and n >= 2:
        edges |= set(draw(trees(n, n)).edges)
    if pairs:
        edges |= {norm_edge(*p) for p in draw(st.lists(st.sampled_from(pairs), max_size=2 * n))}
    return Graph(n, frozenset(edges))


def random_connected_graphs(count, seed, n_range=(3, 12)):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(*n_range)
        m = rng.randint(n - 1, min(n * (n - 1) // 2, 3 * n))
        out.append(gen_random_connected(n, m, rng.randrange(2**31)))
    return out


@pytest.fixture
def path4():
    return build_graph(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def star5():
    return build_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
