"""Labeled simple undirected graphs and the edits a swap game performs on them.

Vertices are the integers ``0..n-1``. A :class:`Graph` is an immutable value:
every edit returns a new graph, so traces and cycle detection can keep
references to old states safely.

Unreachable distances are ``math.inf``.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

INF = math.inf

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph construction or input."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class SwapError(GraphError):
    """A swap whose preconditions do not hold in the graph."""


class MissingEdgeError(SwapError):
    pass


class AlreadyAdjacentError(SwapError):
    pass


class SelfTargetError(SwapError):
    pass


class NotATreeError(GraphError):
    pass


def norm_edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        return tuple(tuple(sorted(x)) for x in nbrs)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adj[u]

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def has_edge(self, a: int, b: int) -> bool:
        return norm_edge(a, b) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return all(d != INF for d in distances_from(self, 0))

    def is_tree(self) -> bool:
        return self.m == self.n - 1 and self.is_connected()

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate an edge list and build a graph.

    Duplicates (in either orientation) are rejected, not silently merged.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    seen: set[Edge] = set()
    for e in edges:
        a, b = int(e[0]), int(e[1])
        if a == b:
            raise SelfLoopError(f"self-loop at vertex {a}")
        if not (0 <= a < n and 0 <= b < n):
            raise VertexRangeError(f"edge ({a}, {b}) has an endpoint outside 0..{n - 1}")
        key = norm_edge(a, b)
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {key}")
        seen.add(key)
    return Graph(n, frozenset(seen))


def bfs(adj, source) -> dict:
    """Hop distances from ``source`` over a mapping/sequence of neighbor lists."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in adj[x]:
            if y not in dist:
                dist[y] = dx
                queue.append(y)
    return dist


def distances_from(g: Graph, u: int) -> list:
    if not 0 <= u < g.n:
        raise VertexRangeError(f"vertex {u} not in graph of {g.n} vertices")
    dist: list = [INF] * g.n
    dist[u] = 0
    queue = deque([u])
    adj = g.adj
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in adj[x]:
            if dist[y] == INF:
                dist[y] = dx
                queue.append(y)
    return dist


def hop_matrix(size: int, pairs) -> np.ndarray:
    """All-pairs hop distances (float, ``inf`` if unreachable) for small graphs.

    Frontier expansion with dense matrix products; quicker than sparse
    routines at the few-dozen-vertex sizes the game runs on.
    """
    dist = np.full((size, size), np.inf)
    np.fill_diagonal(dist, 0.0)
    if not pairs:
        return dist
    a = np.zeros((size, size), dtype=np.float32)
    rows, cols = zip(*pairs)
    a[rows, cols] = 1.0
    a[cols, rows] = 1.0
    reached = np.eye(size, dtype=bool)
    front = reached.astype(np.float32)
    d = 0
    while True:
        d += 1
        new = (front @ a > 0) & ~reached
        if not new.any():
            return dist
        dist[new] = d
        reached |= new
        front = new.astype(np.float32)


def all_distances(g: Graph) -> list[list]:
    return [distances_from(g, u) for u in range(g.n)]


def eccentricity(g: Graph, u: int):
    return max(distances_from(g, u), default=0)


def diameter(g: Graph):
    if g.n == 0:
        return 0
    return max(max(row) for row in all_distances(g))


def apply_swap(g: Graph, u: int, v: int, w: int) -> Graph:
    """Player ``u`` drops edge {u, v} and adds {u, w}."""
    for x in (u, v, w):
        if not 0 <= x < g.n:
            raise VertexRangeError(f"vertex {x} not in graph of {g.n} vertices")
    if w == u:
        raise SelfTargetError(f"vertex {u} cannot connect to itself")
    if not g.has_edge(u, v):
        raise MissingEdgeError(f"edge {norm_edge(u, v)} not present")
    if g.has_edge(u, w):
        raise AlreadyAdjacentError(f"{u} and {w} are already adjacent")
    edges = set(g.edges)
    edges.remove(norm_edge(u, v))
    edges.add(norm_edge(u, w))
    return Graph(g.n, frozenset(edges))


def validate_path(g: Graph, path: Sequence[int]) -> None:
    if len(path) < 1:
        raise GraphError("path must contain at least one vertex")
    if len(set(path)) != len(path):
        raise GraphError(f"path {list(path)} repeats a vertex")
    for x in path:
        if not 0 <= x < g.n:
            raise VertexRangeError(f"vertex {x} not in graph of {g.n} vertices")
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise GraphError(f"path step ({a}, {b}) is not an edge")


def path_components(g: Graph, path: Sequence[int]) -> dict[int, frozenset[int]]:
    """Component of each path vertex once the path's own edges are deleted."""
    validate_path(g, path)
    cut = {norm_edge(a, b) for a, b in zip(path, path[1:])}
    out = {}
    for root in path:
        seen = {root}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if y not in seen and norm_edge(x, y) not in cut:
                    seen.add(y)
                    queue.append(y)
        out[root] = frozenset(seen)
    return out


def component_depth(g: Graph, root: int, members: frozenset[int]) -> int:
    """Height of the subtree ``members`` hanging from ``root``."""
    adj = {x: [y for y in g.adj[x] if y in members] for x in members}
    return max(bfs(adj, root).values())


# -- canonical forms ---------------------------------------------------------


@dataclass(frozen=True)
class CanonicalCode:
    code: bytes
    kind: str  # "labeled" | "unlabeled-tree"

    def hex(self) -> str:
        return self.code.hex()


def labeled_code(g: Graph) -> bytes:
    # 2 bytes per id; fine for n < 65536
    out = bytearray(g.n.to_bytes(2, "big"))
    for a, b in g.sorted_edges():
        out += a.to_bytes(2, "big") + b.to_bytes(2, "big")
    return bytes(out)


def tree_centroids(g: Graph) -> list[int]:
    """Vertices whose removal leaves no component above n // 2; one or two."""
    if not g.is_tree():
        raise NotATreeError("graph is not a tree")
    if g.n <= 2:
        return list(range(g.n))
    order = []
    parent = [-1] * g.n
    seen = [False] * g.n
    stack = [0]
    seen[0] = True
    while stack:
        x = stack.pop()
        order.append(x)
        for y in g.adj[x]:
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                stack.append(y)
    size = [1] * g.n
    for x in reversed(order):
        if parent[x] >= 0:
            size[parent[x]] += size[x]
    out = []
    for x in range(g.n):
        heaviest = g.n - size[x]
        for y in g.adj[x]:
            if parent[y] == x:
                heaviest = max(heaviest, size[y])
        if heaviest <= g.n // 2:
            out.append(x)
    return out


def _ahu(g: Graph, root: int, parent: int) -> str:
    # iterative post-order; recursion depth would hit the limit on long paths
    order = []
    stack = [(root, parent)]
    parents = {root: parent}
    while stack:
        x, p = stack.pop()
        order.append(x)
        for y in g.adj[x]:
            if y != p:
                parents[y] = x
                stack.append((y, x))
    codes: dict[int, str] = {}
    for x in reversed(order):
        kids = sorted(codes[y] for y in g.adj[x] if y != parents[x])
        codes[x] = "(" + "".join(kids) + ")"
    return codes[root]


def unlabeled_tree_code(g: Graph) -> bytes:
    """AHU encoding rooted at the tree centroid(s); isomorphism invariant."""
    centers = tree_centroids(g)
    if not centers:
        return b""
    if len(centers) == 1:
        return _ahu(g, centers[0], -1).encode()
    a, b = centers
    # two centroids are adjacent: encode both halves across that edge, order-free
    left, right = sorted([_ahu(g, a, b), _ahu(g, b, a)])
    return ("[" + left + right + "]").encode()


def canonical(g: Graph, kind: str = "labeled") -> CanonicalCode:
    if kind == "labeled":
        return CanonicalCode(labeled_code(g), kind)
    if kind == "unlabeled-tree":
        return CanonicalCode(unlabeled_tree_code(g), kind)
    raise ValueError(f"unknown canonical kind {kind!r}")


def prufer_decode(seq: Sequence[int], n: int | None = None) -> Graph:
    """Labeled tree for a Prüfer sequence; ``n`` defaults to ``len(seq) + 2``."""
    if n is None:
        n = len(seq) + 2
    if n != len(seq) + 2:
        raise GraphError(f"Prüfer sequence of length {len(seq)} encodes {len(seq) + 2} vertices, not {n}")
    if n < 2:
        raise GraphError("a Prüfer-coded tree has at least two vertices")
    for x in seq:
        if not 0 <= x < n:
            raise VertexRangeError(f"Prüfer entry {x} outside 0..{n - 1}")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [x for x in range(n) if degree[x] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append(norm_edge(leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    a, b = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append(norm_edge(a, b))
    return Graph(n, frozenset(edges))


# -- text formats ------------------------------------------------------------


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{a} {b}" for a, b in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError("empty edge list")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphError(f"bad header line {lines[0]!r}; expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise GraphError(f"bad header line {lines[0]!r}") from exc
    body = lines[1:]
    if len(body) != m:
        raise GraphError(f"header announces {m} edges but {len(body)} lines follow")
    edges = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise GraphError(f"bad edge line {ln!r}") from exc
    return build_graph(n, edges)


def read_edge_list(path) -> Graph:
    with open(path, encoding="ascii") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(to_edge_list(g))


def to_dot(g: Graph, labels=None, added: Edge | None = None, removed: Edge | None = None) -> str:
    """DOT source; the most recent swap is drawn as a bold added edge and a dashed ghost."""
    lines = ["graph G {", "  node [shape=circle];"]
    for x in range(g.n):
        label = labels[x] if labels is not None else str(x)
        lines.append(f'  {x} [label="{label}"];')
    added = norm_edge(*added) if added else None
    for a, b in g.sorted_edges():
        style = ' [color=red, penwidth=2]' if (a, b) == added else ""
        lines.append(f"  {a} -- {b}{style};")
    if removed:
        a, b = norm_edge(*removed)
        lines.append(f"  {a} -- {b} [style=dashed, color=gray];")
    lines.append("}")
    return "\n".join(lines) + "\n"
