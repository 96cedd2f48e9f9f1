"""Balancedness of complexes and exact colorings of small graphs."""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable

from .complex import (
    ComplexError,
    SimplicialComplex,
    is_locally_strongly_connected,
    is_strongly_connected,
    sorted_vertices,
    vertex_key,
)
from .projectivity import _tree_maps, spanning_tree

EXACT_NODE_LIMIT = 64


class Graph:
    """Simple undirected graph."""

    def __init__(self, nodes: Iterable[Hashable] = (), edges: Iterable[Iterable] = ()):
        self.adj: dict = {v: set() for v in nodes}
        for e in edges:
            a, b = tuple(e)
            if a == b:
                raise ValueError(f"loop at {a!r}")
            self.adj.setdefault(a, set()).add(b)
            self.adj.setdefault(b, set()).add(a)

    @classmethod
    def from_adjacency(cls, adj: dict) -> "Graph":
        g = cls(adj)
        for a, nb in adj.items():
            for b in nb:
                g.adj[a].add(b)
                g.adj.setdefault(b, set()).add(a)
        return g

    @property
    def nodes(self) -> list:
        return sorted_vertices(self.adj)

    @property
    def edges(self) -> list[tuple]:
        out = set()
        for a, nb in self.adj.items():
            for b in nb:
                out.add(tuple(sorted_vertices((a, b))))
        return sorted(out, key=lambda e: tuple(vertex_key(x) for x in e))

    def __len__(self):
        return len(self.adj)

    def is_connected(self) -> bool:
        if not self.adj:
            return True
        start = next(iter(self.adj))
        seen = {start}
        queue = deque([start])
        while queue:
            for w in self.adj[queue.popleft()]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(self.adj)


def is_proper(graph: Graph, coloring: dict) -> bool:
    return all(v in coloring for v in graph.adj) and all(
        coloring[a] != coloring[b] for a, nb in graph.adj.items() for b in nb)


@dataclass(frozen=True)
class Bipartition:
    bipartite: bool
    parts: tuple | None  # two sorted vertex lists
    odd_cycle: tuple | None  # vertices of an odd cycle, in order


def is_bipartite(graph: Graph) -> Bipartition:
    """BFS 2-coloring; returns a bipartition or an odd cycle."""
    side: dict = {}
    parent: dict = {}
    for s in graph.nodes:
        if s in side:
            continue
        side[s] = 0
        parent[s] = None
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in sorted_vertices(graph.adj[v]):
                if w not in side:
                    side[w] = 1 - side[v]
                    parent[w] = v
                    queue.append(w)
                elif side[w] == side[v]:
                    return Bipartition(False, None, _odd_cycle(parent, v, w))
    parts = tuple(tuple(sorted_vertices(v for v in side if side[v] == k)) for k in (0, 1))
    return Bipartition(True, parts, None)


def _odd_cycle(parent, v, w):
    def chain(x):
        out = [x]
        while parent[out[-1]] is not None:
            out.append(parent[out[-1]])
        return out

    a, b = chain(v), chain(w)
    common = set(a) & set(b)
    # lowest common ancestor
    i = next(k for k, x in enumerate(a) if x in common)
    j = b.index(a[i])
    cyc = a[:i + 1] + list(reversed(b[:j]))
    return tuple(cyc)


def greedy_clique(graph: Graph) -> list:
    best: list = []
    for v in graph.nodes:
        clique = [v]
        for w in sorted(graph.adj[v], key=lambda x: -len(graph.adj[x])):
            if all(w in graph.adj[u] for u in clique):
                clique.append(w)
        if len(clique) > len(best):
            best = clique
    return best


def dsatur_greedy(graph: Graph) -> dict:
    coloring: dict = {}
    sat = {v: set() for v in graph.adj}
    order = graph.nodes
    while len(coloring) < len(order):
        v = max((u for u in order if u not in coloring),
                key=lambda u: (len(sat[u]), len(graph.adj[u])))
        c = 0
        while c in sat[v]:
            c += 1
        coloring[v] = c
        for w in graph.adj[v]:
            sat[w].add(c)
    return coloring


def _search(graph: Graph, limit: int, lower: int):
    """Branch and bound with saturation ordering.

    Finds a proper coloring with fewer than ``limit`` colors using as few as
    possible; stops early once ``lower`` colors are reached.
    """
    nodes = graph.nodes
    adj = graph.adj
    coloring: dict = {}
    best = {"k": limit, "col": None}

    def pick():
        cand = None
        key = None
        for u in nodes:
            if u in coloring:
                continue
            s = {coloring[w] for w in adj[u] if w in coloring}
            k = (len(s), len(adj[u]))
            if key is None or k > key:
                cand, key, forb = u, k, s
        return cand, forb

    def rec(used):
        if len(coloring) == len(nodes):
            best["k"], best["col"] = used, dict(coloring)
            return best["k"] <= lower
        v, forb = pick()
        # colors beyond `used` are interchangeable, so try only one new one
        for c in range(min(used + 1, best["k"] - 1)):
            if c in forb:
                continue
            coloring[v] = c
            done = rec(max(used, c + 1))
            del coloring[v]
            if done:
                return True
        return False

    rec(0)
    return best["col"]


@dataclass(frozen=True)
class GraphColoring:
    number: int | None  # None when more than `cap` colors are needed
    coloring: dict | None
    exact: bool


def color_graph(graph: Graph, cap: int | None = None) -> GraphColoring:
    """Minimum proper coloring; greedy upper bound only above the node limit."""
    if not graph.adj:
        return GraphColoring(0, {}, True)
    lb = len(greedy_clique(graph))
    if cap is not None and lb > cap:
        return GraphColoring(None, None, True)
    greedy = dsatur_greedy(graph)
    ub = max(greedy.values()) + 1
    if len(graph) > EXACT_NODE_LIMIT:
        warnings.warn(f"graph has {len(graph)} nodes; chromatic number is an upper bound only")
        if cap is not None and ub > cap:
            return GraphColoring(None, None, False)
        return GraphColoring(ub, greedy, False)
    if ub == lb:
        best = greedy
    else:
        best = _search(graph, ub, lb) or greedy
    k = max(best.values()) + 1
    if cap is not None and k > cap:
        return GraphColoring(None, None, True)
    return GraphColoring(k, best, True)


def chromatic_number(graph: Graph, cap: int | None = None) -> int | None:
    """Exact chromatic number; ``None`` if it exceeds ``cap`` or the graph is
    too large for exact search."""
    gc = color_graph(graph, cap)
    return gc.number if gc.exact else None


def find_k_coloring(graph: Graph, k: int) -> dict | None:
    """Proper coloring with at most ``k`` colors, or ``None`` if none exists."""
    if not graph.adj:
        return {}
    return _search(graph, k + 1, k)


def skeleton_graph(delta: SimplicialComplex) -> Graph:
    return Graph.from_adjacency(delta.edge_graph)


def is_proper_complex_coloring(delta: SimplicialComplex, coloring: dict) -> bool:
    """Every edge of the complex gets two distinct colors from ``0..dim``."""
    if set(coloring) != set(delta.vertices):
        return False
    if any(not 0 <= c <= delta.dim for c in coloring.values()):
        return False
    return all(coloring[a] != coloring[b] for f in delta.facets for a, b in combinations(f, 2))


@dataclass(frozen=True)
class Balance:
    balanced: bool
    coloring: dict | None
    method: str  # "propagation" or "exact-search"

    def __iter__(self):
        return iter((self.balanced, self.coloring))


def propagate_coloring(delta: SimplicialComplex, base=None) -> dict | None:
    """Carry the coloring 0..d of the base facet along a spanning tree of the
    dual graph; ``None`` if some vertex receives two colors."""
    b = delta.facet_index(base if base is not None else 0)
    seed = {v: i for i, v in enumerate(sorted_vertices(delta.facets[b]))}
    tree = spanning_tree(delta, b)
    maps = _tree_maps(delta, tree)
    color: dict = {}
    for i in tree.order:
        back = maps[i].inverse()
        for v in delta.facets[i]:
            c = seed[back(v)]
            if color.setdefault(v, c) != c:
                return None
    return color


def is_balanced(delta: SimplicialComplex) -> Balance:
    """Decide whether the complex has a proper coloring with ``dim + 1`` colors.

    Strongly and locally strongly connected complexes are decided by
    propagating colors along the dual graph; all others by exact search on
    the 1-skeleton.
    """
    if not delta.is_pure:
        raise ComplexError("balancedness is only decided for pure complexes")
    if is_strongly_connected(delta) and is_locally_strongly_connected(delta):
        col = propagate_coloring(delta)
        if col is not None and not is_proper_complex_coloring(delta, col):
            raise AssertionError("propagated coloring is not proper")
        return Balance(col is not None, col, "propagation")
    col = find_k_coloring(skeleton_graph(delta), delta.dim + 1)
    if col is not None:
        col = {v: col[v] for v in delta.vertices}
        assert is_proper_complex_coloring(delta, col)
    return Balance(col is not None, col, "exact-search")
