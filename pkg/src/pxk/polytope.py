"""Simple polytopes as vertex-facet incidences.

Nothing here looks at coordinates.  A simple ``d``-polytope is given by the
set of facets through each vertex; edges, 2-faces and the dual simplicial
sphere are reconstructed from that incidence alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Mapping, NamedTuple

import numpy as np

from .coloring import (
    Graph,
    color_graph,
    find_k_coloring,
    is_balanced,
    is_bipartite,
    is_proper,
)
from .complex import (
    SimplicialComplex,
    codim2_faces,
    format_vertex,
    sorted_vertices,
    vertex_key,
)
from .permgroup import Permutation, PermutationGroup, classify_symmetric_product
from .projectivity import Projectivity, perspectivity, pi_group


class PolytopeError(ValueError):
    pass


class TheoremViolation(AssertionError):
    """Independent computations of equivalent properties disagree."""


@dataclass(frozen=True)
class TwoFace:
    facets: frozenset  # the d-2 facets containing it
    cycle: tuple  # boundary vertices in cyclic order

    @property
    def size(self) -> int:
        return len(self.cycle)


def _edge(a, b) -> tuple:
    return tuple(sorted_vertices((a, b)))


class SimplePolytope:
    """Combinatorial simple polytope; build with :func:`load_polytope`."""

    def __init__(self, dim: int, incidence: Mapping[Hashable, Iterable], facets: Iterable = ()):
        self.dim = dim
        self.incidence = {v: frozenset(fs) for v, fs in incidence.items()}
        used = set().union(*self.incidence.values()) if self.incidence else set()
        declared = set(facets)
        if declared and not used <= declared:
            raise PolytopeError(f"undeclared facets: {sorted_vertices(used - declared)}")
        self.facets = tuple(sorted_vertices(declared | used))
        self.vertices = tuple(sorted_vertices(self.incidence))

    def __repr__(self):
        return f"SimplePolytope(dim={self.dim}, vertices={len(self.vertices)}, facets={len(self.facets)})"

    def facets_at(self, v) -> frozenset:
        return self.incidence[v]

    @cached_property
    def edges(self) -> tuple:
        """Vertex pairs sharing exactly ``d - 1`` facets."""
        by_ridge: dict = {}
        for v, fs in self.incidence.items():
            for r in combinations(sorted_vertices(fs), self.dim - 1):
                by_ridge.setdefault(frozenset(r), []).append(v)
        out = set()
        for r, vs in by_ridge.items():
            if len(vs) != 2:
                raise PolytopeError(f"{len(vs)} vertices on the line cut out by facets "
                                    f"{[format_vertex(f) for f in sorted_vertices(r)]}")
            out.add(_edge(*vs))
        return tuple(sorted(out, key=lambda e: (vertex_key(e[0]), vertex_key(e[1]))))

    @cached_property
    def neighbors(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def graph(self) -> Graph:
        """Vertex-edge graph."""
        return Graph(self.vertices, self.edges)

    def facet_graph(self) -> Graph:
        """Facets, adjacent when they share a vertex."""
        g = Graph(self.facets)
        for fs in self.incidence.values():
            for a, b in combinations(fs, 2):
                g.adj[a].add(b)
                g.adj[b].add(a)
        return g

    @cached_property
    def two_faces(self) -> tuple[TwoFace, ...]:
        if self.dim < 2:
            return ()
        groups: dict = {}
        for v, fs in self.incidence.items():
            for s in combinations(sorted_vertices(fs), self.dim - 2):
                groups.setdefault(frozenset(s), set()).add(v)
        out = []
        for s, vs in groups.items():
            out.append(TwoFace(s, self._trace(s, vs)))
        return tuple(sorted(out, key=lambda t: tuple(sorted(vertex_key(f) for f in t.facets))))

    def _trace(self, s, vs) -> tuple:
        nb = {v: sorted_vertices(self.neighbors[v] & vs) for v in vs}
        if len(vs) < 3 or any(len(n) != 2 for n in nb.values()):
            raise PolytopeError(f"2-face on facets {sorted_vertices(s)} is not bounded by a cycle")
        start = sorted_vertices(vs)[0]
        cyc = [start, nb[start][0]]
        while True:
            a, b = nb[cyc[-1]]
            nxt = b if a == cyc[-2] else a
            if nxt == start:
                break
            cyc.append(nxt)
        if len(cyc) != len(vs):
            raise PolytopeError(f"2-face on facets {sorted_vertices(s)} is not a single cycle")
        return tuple(cyc)

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        """Face numbers ``(f_0, ..., f_{d-1})``."""
        out = []
        for k in range(self.dim):
            faces = set()
            for fs in self.incidence.values():
                faces.update(frozenset(c) for c in combinations(fs, self.dim - k))
            out.append(len(faces))
        return tuple(out)

    @cached_property
    def dual(self) -> SimplicialComplex:
        return SimplicialComplex(set(self.incidence.values()))

    def separating_facets(self, v, w) -> tuple:
        """``(F(v,w), F(w,v))``: the facet at v missing w and vice versa."""
        if w not in self.neighbors[v]:
            raise PolytopeError(f"{v!r} and {w!r} are not adjacent")
        (a,) = self.incidence[v] - self.incidence[w]
        (b,) = self.incidence[w] - self.incidence[v]
        return a, b


def load_polytope(dim: int, incidence: Mapping, facets: Iterable = ()) -> SimplePolytope:
    """Validate an incidence and build the polytope.

    Rejects vertices not in exactly ``dim`` facets, repeated facet sets,
    disconnected graphs and 2-faces whose boundary is not a cycle.
    """
    if dim < 1:
        raise PolytopeError("dimension must be at least 1")
    if not incidence:
        raise PolytopeError("no vertices")
    for v, fs in incidence.items():
        fs = set(fs)
        if len(fs) != dim:
            raise PolytopeError(f"vertex {v!r} lies in {len(fs)} facets, not {dim}: not simple")
    p = SimplePolytope(dim, incidence, facets)
    if len(set(p.incidence.values())) != len(p.incidence):
        raise PolytopeError("two vertices lie in the same set of facets")
    unused = set(p.facets) - set().union(*p.incidence.values())
    if unused:
        raise PolytopeError(f"facets without vertices: {sorted_vertices(unused)}")
    if any(len(p.neighbors[v]) != dim for v in p.vertices):
        raise PolytopeError("vertex-edge graph is not regular of degree dim")
    if not p.graph().is_connected():
        raise PolytopeError("vertex-facet incidence is disconnected")
    p.two_faces  # validates the boundary cycles
    return p


def dualize(p: SimplePolytope) -> SimplicialComplex:
    """Boundary of the dual: one simplex ``F(v)`` per vertex ``v``."""
    return p.dual


def vertex_perspectivity(p: SimplePolytope, v, w) -> dict:
    a, b = p.separating_facets(v, w)
    return {f: (b if f == a else f) for f in p.incidence[v]}


def vertex_projectivity(p: SimplePolytope, path: Iterable) -> Projectivity:
    path = list(path)
    m = {f: f for f in p.incidence[path[0]]}
    for v, w in zip(path, path[1:]):
        step = vertex_perspectivity(p, v, w)
        m = {f: step[g] for f, g in m.items()}
    return Projectivity(p.incidence[path[0]], p.incidence[path[-1]], m)


def pi_group_polytope(p: SimplePolytope, v=None) -> PermutationGroup:
    """Group of projectivities at vertex ``v``, acting on the facets through it."""
    v = p.vertices[0] if v is None else v
    return pi_group(p.dual, p.incidence[v])


def is_even(p: SimplePolytope) -> bool:
    return all(t.size % 2 == 0 for t in p.two_faces)


@dataclass(frozen=True)
class ColoringTheorem:
    dim: int
    even: bool
    bipartite: bool
    balanced: bool
    gamma: int | None  # None if only an upper bound was available
    gamma_is_dim: bool
    bipartition: tuple | None
    facet_coloring: dict | None  # a gamma-coloring of the facet graph
    dual_coloring: dict | None  # a proper coloring of the dual sphere, when balanced

    @property
    def agree(self) -> bool:
        return len({self.even, self.bipartite, self.balanced, self.gamma_is_dim}) == 1

    def as_tuple(self):
        return (self.even, self.bipartite, self.balanced, self.gamma)


def coloring_theorem_check(p: SimplePolytope, strict: bool = True) -> ColoringTheorem:
    """Evaluate the four equivalent colorability conditions independently.

    Evenness by the 2-face census, bipartiteness by BFS on the vertex-edge
    graph, balancedness of the dual by color propagation, and the facet
    chromatic number by exact search.  With ``strict`` a disagreement raises
    :class:`TheoremViolation`.
    """
    even = is_even(p)
    bip = is_bipartite(p.graph())
    bal = is_balanced(p.dual)
    fg = p.facet_graph()
    gc = color_graph(fg)
    if gc.exact:
        gamma, gamma_is_dim, fcol = gc.number, gc.number == p.dim, gc.coloring
    else:
        fcol = find_k_coloring(fg, p.dim)
        gamma_is_dim = fcol is not None
        gamma = p.dim if gamma_is_dim else None
        fcol = fcol if gamma_is_dim else gc.coloring
    res = ColoringTheorem(p.dim, even, bip.bipartite, bal.balanced, gamma, gamma_is_dim,
                          bip.parts, fcol, bal.coloring)
    if strict and not res.agree:
        raise TheoremViolation(
            f"even={even} bipartite={bip.bipartite} balanced={bal.balanced} gamma={gamma}")
    return res


def gamma(p: SimplePolytope) -> int | None:
    """Chromatic number of the facet graph, or ``None`` past the exact-search limit."""
    gc = color_graph(p.facet_graph())
    return gc.number if gc.exact else None


class SBounds(NamedTuple):
    lower: int | None
    upper: int
    tight: bool


def s_bounds(p: SimplePolytope) -> SBounds:
    """``n - gamma(P) <= s(P) <= n - d``; tight exactly when gamma equals d."""
    n = len(p.facets)
    g = gamma(p)
    if g is None and find_k_coloring(p.facet_graph(), p.dim) is not None:
        g = p.dim
    return SBounds(None if g is None else n - g, n - p.dim, g == p.dim)


@dataclass(frozen=True)
class EdgeColoring:
    colors: dict  # edge -> color
    proper: bool

    @property
    def n_colors(self) -> int:
        return len(set(self.colors.values()))


def induced_edge_coloring(p: SimplePolytope, facet_coloring: Mapping) -> EdgeColoring:
    """Color each edge {v,w} by the common color of F(v,w) and F(w,v)."""
    fg = p.facet_graph()
    if not is_proper(fg, facet_coloring):
        raise PolytopeError("facet coloring is not proper")
    if len(set(facet_coloring[f] for f in p.facets)) > p.dim:
        raise PolytopeError(f"facet coloring uses more than {p.dim} colors")
    colors = {}
    for v, w in p.edges:
        a, b = p.separating_facets(v, w)
        if facet_coloring[a] != facet_coloring[b]:
            raise AssertionError(f"facets across edge {v!r}-{w!r} got different colors")
        colors[(v, w)] = facet_coloring[a]
    proper = True
    for v in p.vertices:
        seen = [c for e, c in colors.items() if v in e]
        proper &= len(seen) == len(set(seen))
    return EdgeColoring(colors, proper)


def _require_even(p: SimplePolytope):
    if not is_even(p):
        raise PolytopeError("polytope is not even")


def disjoint_facet_check(p: SimplePolytope) -> bool:
    """On an even polytope the facets F(v,w) and F(w,v) never meet."""
    _require_even(p)
    for v, w in p.edges:
        a, b = p.separating_facets(v, w)
        if any(a in fs and b in fs for fs in p.incidence.values()):
            return False
    return True


def gf2_rank(m) -> int:
    """Rank over GF(2) by row reduction."""
    a = (np.asarray(m, dtype=np.uint8) % 2).copy()
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        pivots = np.nonzero(a[rank:, c])[0]
        if len(pivots) == 0:
            continue
        piv = rank + pivots[0]
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        hit = np.nonzero(a[:, c])[0]
        hit = hit[hit != rank]
        a[hit] ^= a[rank]
        rank += 1
        if rank == rows:
            break
    return rank


class CycleSpace(NamedTuple):
    rank: int
    expected: int
    equal: bool


def cycle_space_check(p: SimplePolytope) -> CycleSpace:
    """Compare the GF(2) span of the 2-face boundaries with ``|E| - |V| + 1``."""
    col = {e: i for i, e in enumerate(p.edges)}
    m = np.zeros((len(p.two_faces), len(col)), dtype=np.uint8)
    for r, t in enumerate(p.two_faces):
        for a, b in zip(t.cycle, t.cycle[1:] + t.cycle[:1]):
            m[r, col[_edge(a, b)]] = 1
    rank = gf2_rank(m) if len(m) else 0
    expected = len(p.edges) - len(p.vertices) + 1
    return CycleSpace(rank, expected, rank == expected)


def even_vertex_parity(p: SimplePolytope) -> bool:
    _require_even(p)
    return len(p.vertices) % 2 == 0


def product(p: SimplePolytope, q: SimplePolytope) -> SimplePolytope:
    """Cartesian product; facets are tagged ``P.<F>`` and ``Q.<G>``,
    vertices ``<v>,<w>``."""
    inc = {}
    for v, fs in p.incidence.items():
        for w, gs in q.incidence.items():
            inc[f"{format_vertex(v)},{format_vertex(w)}"] = (
                {f"P.{format_vertex(f)}" for f in fs} | {f"Q.{format_vertex(g)}" for g in gs})
    return load_polytope(p.dim + q.dim, inc)


@dataclass(frozen=True)
class ProductCheck:
    group: PermutationGroup
    left: PermutationGroup
    right: PermutationGroup
    holds: bool
    partition: tuple | None
    left_partition: tuple | None
    right_partition: tuple | None


def product_check(p: SimplePolytope, v, q: SimplePolytope, w) -> ProductCheck:
    pq = product(p, q)
    vw = f"{format_vertex(v)},{format_vertex(w)}"
    g = pi_group_polytope(pq, vw)
    gp, gq = pi_group_polytope(p, v), pi_group_polytope(q, w)

    def tag(perm, prefix):
        return Permutation({f"{prefix}.{format_vertex(a)}": f"{prefix}.{format_vertex(perm(a))}"
                            for a in perm.support})

    left = PermutationGroup(g.ground, [tag(x, "P") for x in gp.generators])
    right = PermutationGroup(g.ground, [tag(x, "Q") for x in gq.generators])
    both = PermutationGroup(g.ground, left.generators + right.generators)
    part = classify_symmetric_product(g)
    lp, rp = classify_symmetric_product(gp), classify_symmetric_product(gq)
    holds = g == both and g.order == gp.order * gq.order
    if part is not None and lp is not None and rp is not None:
        holds &= part == tuple(sorted(lp + rp))
    return ProductCheck(g, left, right, holds, part, lp, rp)


def verify_product(p: SimplePolytope, v, q: SimplePolytope, w) -> bool:
    return product_check(p, v, q, w).holds


def connected_sum(p: SimplePolytope, v, q: SimplePolytope, w, pairing: Mapping | None = None,
                  tags=("a", "b")) -> SimplePolytope:
    """Cut off ``v`` and ``w`` and glue, merging the facets through them.

    ``pairing`` maps ``F(v)`` bijectively onto ``F(w)``; by default the two
    sets are matched in sorted order.
    """
    if p.dim != q.dim:
        raise PolytopeError("connected sum needs equal dimensions")
    fv, fw = sorted_vertices(p.incidence[v]), sorted_vertices(q.incidence[w])
    pairing = dict(pairing) if pairing is not None else dict(zip(fv, fw))
    if set(pairing) != set(fv) or set(pairing.values()) != set(fw):
        raise PolytopeError("pairing is not a bijection F(v) -> F(w)")
    ta, tb = tags

    def name_p(f):
        return f"{ta}.{format_vertex(f)}" if f not in pairing else \
            f"{ta}.{format_vertex(f)}+{tb}.{format_vertex(pairing[f])}"

    back = {g: f for f, g in pairing.items()}

    def name_q(g):
        return f"{tb}.{format_vertex(g)}" if g not in back else name_p(back[g])

    inc = {}
    for u, fs in p.incidence.items():
        if u != v:
            inc[f"{ta}.{format_vertex(u)}"] = {name_p(f) for f in fs}
    for u, gs in q.incidence.items():
        if u != w:
            inc[f"{tb}.{format_vertex(u)}"] = {name_q(g) for g in gs}
    return load_polytope(p.dim, inc)


def two_face_sizes(p: SimplePolytope) -> list[int]:
    return sorted(t.size for t in p.two_faces)


def codim2_link_sizes(p: SimplePolytope) -> list[int]:
    return sorted(c.length for c in codim2_faces(p.dual))


def perspectivity_agrees(p: SimplePolytope, v, w) -> bool:
    """Vertex-side perspectivity equals the dual complex's facet perspectivity."""
    return vertex_perspectivity(p, v, w) == perspectivity(
        p.dual, p.incidence[v], p.incidence[w]).as_dict()
