import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from swapgame.graph import (
    INF,
    AlreadyAdjacentError,
    DuplicateEdgeError,
    GraphError,
    MissingEdgeError,
    NotATreeError,
    SelfLoopError,
    SelfTargetError,
    VertexRangeError,
    apply_swap,
    build_graph,
    canonical,
    diameter,
    distances_from,
    hop_matrix,
    labeled_code,
    parse_edge_list,
    path_components,
    prufer_decode,
    read_edge_list,
    to_dot,
    to_edge_list,
    tree_centroids,
    unlabeled_tree_code,
    write_edge_list,
)
from swapgame.instances import gen_path, gen_star, gen_ts, ts_labels

from .conftest import graphs, trees


def floyd_warshall(g):
    d = [[0 if i == j else INF for j in range(g.n)] for i in range(g.n)]
    for a, b in g.edges:
        d[a][b] = d[b][a] = 1
    for m in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                if d[i][m] + d[m][j] < d[i][j]:
                    d[i][j] = d[i][m] + d[m][j]
    return d


class TestBuild:
    def test_path_and_star(self):
        p = build_graph(4, [(0, 1), (1, 2), (2, 3)])
        assert p.m == 3 and [p.degree(x) for x in range(4)] == [1, 2, 2, 1]
        s = build_graph(4, [(0, 1), (0, 2), (0, 3)])
        assert s.degree(0) == 3

    def test_rejects_bad_edges(self):
        with pytest.raises(SelfLoopError):
            build_graph(3, [(0, 1), (1, 1)])
        with pytest.raises(DuplicateEdgeError):
            build_graph(3, [(0, 1), (1, 0)])
        with pytest.raises(VertexRangeError):
            build_graph(3, [(0, 3)])

    def test_edges_are_normalised(self):
        assert build_graph(3, [(2, 0)]).edges == {(0, 2)}


class TestDistances:
    def test_examples(self, path4):
        assert distances_from(path4, 0) == [0, 1, 2, 3]
        assert distances_from(gen_star(4), 0) == [0, 1, 1, 1]
        two = build_graph(4, [(0, 1), (2, 3)])
        assert distances_from(two, 0) == [0, 1, INF, INF]

    def test_diameter(self):
        assert diameter(gen_path(4)) == 3
        assert diameter(gen_star(6)) == 2
        assert diameter(gen_ts(3)) == 6
        assert diameter(build_graph(3, [(0, 1)])) == INF

    def test_floyd_warshall_on_random_graphs(self):
        rng = random.Random(11)
        for _ in range(100):
            n = rng.randint(1, 12)
            pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
            g = build_graph(n, rng.sample(pairs, rng.randint(0, len(pairs))))
            fw = floyd_warshall(g)
            assert [distances_from(g, u) for u in range(n)] == fw

    @given(graphs(max_n=12))
    def test_hop_matrix_matches_bfs(self, g):
        dm = hop_matrix(g.n, list(g.edges))
        for u in range(g.n):
            assert [float(x) for x in dm[u]] == [float(x) for x in distances_from(g, u)]


class TestSwap:
    def test_example(self, path4):
        g = apply_swap(path4, 0, 1, 2)
        assert g.edges == {(1, 2), (2, 3), (0, 2)}
        assert path4.edges == {(0, 1), (1, 2), (2, 3)}  # input untouched

    def test_inverse(self, path4):
        assert apply_swap(apply_swap(path4, 0, 1, 2), 0, 2, 1) == path4

    def test_errors_are_distinct(self, path4):
        with pytest.raises(MissingEdgeError):
            apply_swap(path4, 0, 2, 3)
        with pytest.raises(AlreadyAdjacentError):
            apply_swap(path4, 1, 0, 2)
        with pytest.raises(SelfTargetError):
            apply_swap(path4, 0, 1, 0)

    @given(graphs(min_n=3, max_n=9, connected=True), st.data())
    def test_edge_count_and_tree_preserved(self, g, data):
        moves = [(u, v, w) for u in range(g.n) for v in g.adj[u] for w in range(g.n) if w != u and not g.has_edge(u, w)]
        if not moves:
            return
        u, v, w = data.draw(st.sampled_from(moves))
        h = apply_swap(g, u, v, w)
        assert h.m == g.m
        if g.is_tree() and h.is_connected():
            assert h.is_tree()


class TestPathComponents:
    def test_path_singletons(self, path4):
        comps = path_components(path4, [0, 1, 2, 3])
        assert all(comps[x] == {x} for x in range(4))

    def test_star(self):
        g = gen_star(4)
        comps = path_components(g, [1, 0])
        assert comps[1] == {1} and comps[0] == {0, 2, 3}

    def test_ts3_gadget(self):
        g = gen_ts(3)
        names = ts_labels(3)
        ix = {name: i for i, name in enumerate(names)}
        comps = path_components(g, [ix["b1"], ix["a1"], ix["e1"]])
        assert {names[x] for x in comps[ix["a1"]]} == {"a1", "c1", "d1"}

    def test_invalid_path(self, path4):
        with pytest.raises(GraphError):
            path_components(path4, [0, 2])

    @given(trees(min_n=3), st.data())
    def test_components_partition(self, t, data):
        start = data.draw(st.integers(0, t.n - 1))
        path = [start]
        while True:
            nxt = [y for y in t.adj[path[-1]] if y not in path]
            if not nxt or not data.draw(st.booleans()):
                break
            path.append(data.draw(st.sampled_from(nxt)))
        comps = path_components(t, path)
        seen = set()
        for x in path:
            assert x in comps[x]
            assert not seen & comps[x]
            seen |= comps[x]
        assert seen == set(range(t.n))  # trees: the pieces cover everything


class TestCanonical:
    def test_prufer_examples(self):
        assert prufer_decode([], 2).edges == {(0, 1)}
        assert prufer_decode([0, 0]).edges == {(0, 1), (0, 2), (0, 3)}

    def test_prufer_n4_matches_direct_enumeration(self):
        pairs = [(a, b) for a in range(4) for b in range(a + 1, 4)]
        direct = set()
        for es in itertools.combinations(pairs, 3):
            g = build_graph(4, es)
            if g.is_tree():
                direct.add(g.edges)
        decoded = {prufer_decode(s, 4).edges for s in itertools.product(range(4), repeat=2)}
        assert decoded == direct and len(direct) == 16

    def test_prufer_n5_gives_125_distinct(self):
        codes = {labeled_code(prufer_decode(s, 5)) for s in itertools.product(range(5), repeat=3)}
        assert len(codes) == 125

    def test_prufer_rejects_bad_entries(self):
        with pytest.raises(GraphError):
            prufer_decode([5, 0], 4)

    def test_unlabeled_invariance(self, path4):
        relabeled = build_graph(4, [(2, 0), (0, 3), (3, 1)])
        assert canonical(path4, "unlabeled-tree") == canonical(relabeled, "unlabeled-tree")
        assert canonical(path4, "unlabeled-tree") != canonical(gen_star(4), "unlabeled-tree")

    def test_unlabeled_rejects_non_tree(self):
        with pytest.raises(NotATreeError):
            unlabeled_tree_code(build_graph(3, [(0, 1), (1, 2), (0, 2)]))

    def test_centroids(self):
        assert tree_centroids(gen_path(5)) == [2]
        assert tree_centroids(gen_path(6)) == [2, 3]
        assert tree_centroids(gen_star(7)) == [0]

    @given(trees(min_n=1, max_n=11), st.randoms(use_true_random=False))
    def test_unlabeled_code_ignores_labels(self, t, rnd):
        perm = list(range(t.n))
        rnd.shuffle(perm)
        relabeled = build_graph(t.n, [(perm[a], perm[b]) for a, b in t.edges])
        assert unlabeled_tree_code(relabeled) == unlabeled_tree_code(t)

    @given(graphs(max_n=7), graphs(max_n=7))
    def test_labeled_code_iff_same_edges(self, a, b):
        assert (labeled_code(a) == labeled_code(b)) == (a.n == b.n and a.edges == b.edges)

    @settings(deadline=None, max_examples=30)
    @given(trees(min_n=2, max_n=9), trees(min_n=2, max_n=9))
    def test_unlabeled_code_agrees_with_networkx(self, a, b):
        nx = pytest.importorskip("networkx")
        ga, gb = nx.Graph(list(a.edges)), nx.Graph(list(b.edges))
        ga.add_nodes_from(range(a.n))
        gb.add_nodes_from(range(b.n))
        same = unlabeled_tree_code(a) == unlabeled_tree_code(b)
        assert same == nx.is_isomorphic(ga, gb)


class TestTextFormats:
    def test_round_trip(self, tmp_path):
        g = gen_ts(3)
        path = tmp_path / "ts.txt"
        write_edge_list(g, path)
        assert read_edge_list(path) == g
        assert to_edge_list(g).splitlines()[0] == "23 22"

    @pytest.mark.parametrize(
        "text",
        ["", "3\n0 1\n", "3 2\n0 1\n", "3 2\n0 1\n1 0\n", "3 1\n1 1\n", "3 1\n0 x\n", "2 1\n0 2\n"],
    )
    def test_malformed(self, text):
        with pytest.raises(GraphError):
            parse_edge_list(text)

    def test_dot_marks_swap(self, path4):
        g = apply_swap(path4, 0, 1, 2)
        dot = to_dot(g, added=(0, 2), removed=(0, 1))
        assert "0 -- 2 [color=red" in dot
        assert "0 -- 1 [style=dashed" in dot
        assert '3 [label="3"]' in dot
