"""Finite abstract simplicial complexes stored by their facet lists.

Vertices are opaque tokens: ``int``, ``str`` or (for barycentric
subdivisions) tuples of such tokens.  A complex is immutable; derived data
(faces, ridges, the dual graph) is computed on demand and memoized.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations
from typing import Hashable, Iterable, Sequence

Vertex = Hashable
Simplex = frozenset


class ComplexError(ValueError):
    """Raised on malformed complexes or faces that are not in a complex."""


def vertex_key(v):
    """Total order on vertex tokens: integers, then strings, then tuples."""
    if isinstance(v, bool):
        raise ComplexError(f"malformed vertex token {v!r}")
    if isinstance(v, int):
        return (0, v)
    if isinstance(v, str):
        return (1, v)
    if isinstance(v, tuple):
        return (2, tuple(vertex_key(x) for x in v))
    raise ComplexError(f"malformed vertex token {v!r}")


def sorted_vertices(vs: Iterable[Vertex]) -> list:
    return sorted(vs, key=vertex_key)


def facet_key(f: Iterable[Vertex]):
    return tuple(sorted(vertex_key(v) for v in f))


def format_vertex(v) -> str:
    if isinstance(v, tuple):
        return "[" + ",".join(format_vertex(x) for x in v) + "]"
    return str(v)


def as_simplex(vs: Iterable[Vertex]) -> Simplex:
    if isinstance(vs, (str, int)):
        raise ComplexError(f"expected a collection of vertices, got {vs!r}")
    s = frozenset(vs)
    for v in s:
        vertex_key(v)
    return s


class SimplicialComplex:
    """A finite simplicial complex given by its facets.

    Facets are kept in canonical order (lexicographic on sorted vertex
    keys) so that facet indices are deterministic.
    """

    def __init__(self, facets: Iterable[Simplex]):
        self._facets = tuple(sorted((frozenset(f) for f in facets), key=facet_key))
        self._index = {f: i for i, f in enumerate(self._facets)}
        self._faces_cache: dict[int, tuple[Simplex, ...]] = {}

    @property
    def facets(self) -> tuple[Simplex, ...]:
        return self._facets

    def __len__(self):
        return len(self._facets)

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self._facets == other._facets

    def __hash__(self):
        return hash(self._facets)

    def __repr__(self):
        return f"SimplicialComplex(dim={self.dim}, facets={len(self._facets)})"

    @cached_property
    def vertices(self) -> tuple:
        return tuple(sorted_vertices(set().union(*self._facets)))

    @cached_property
    def dim(self) -> int:
        return max(len(f) for f in self._facets) - 1

    @cached_property
    def is_pure(self) -> bool:
        return len({len(f) for f in self._facets}) == 1

    def facet_index(self, sigma) -> int:
        """Index of a facet given either as an index or as a vertex collection."""
        if isinstance(sigma, int) and not isinstance(sigma, bool):
            if not 0 <= sigma < len(self._facets):
                raise ComplexError(f"facet index {sigma} out of range")
            return sigma
        s = as_simplex(sigma)
        try:
            return self._index[s]
        except KeyError:
            raise ComplexError(f"{sorted_label(s)} is not a facet") from None

    def facet(self, sigma) -> Simplex:
        return self._facets[self.facet_index(sigma)]

    def is_facet(self, sigma) -> bool:
        return as_simplex(sigma) in self._index

    def contains_face(self, sigma) -> bool:
        s = as_simplex(sigma)
        return any(s <= f for f in self._facets)

    def faces(self, k: int) -> tuple[Simplex, ...]:
        """All ``k``-dimensional faces in canonical order."""
        if k not in self._faces_cache:
            out = set()
            for f in self._facets:
                if len(f) >= k + 1 >= 0:
                    out.update(frozenset(c) for c in combinations(f, k + 1))
            self._faces_cache[k] = tuple(sorted(out, key=facet_key))
        return self._faces_cache[k]

    def all_faces(self, include_empty=False) -> tuple[Simplex, ...]:
        start = -1 if include_empty else 0
        return tuple(s for k in range(start, self.dim + 1) for s in self.faces(k))

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self.faces(k)) for k in range(self.dim + 1))

    @cached_property
    def ridge_map(self) -> dict[Simplex, tuple[int, ...]]:
        """Ridge -> indices of the facets having it as a ridge."""
        out: dict[Simplex, list[int]] = {}
        for i, f in enumerate(self._facets):
            for v in f:
                out.setdefault(f - {v}, []).append(i)
        return {r: tuple(ix) for r, ix in out.items()}

    @cached_property
    def edge_graph(self) -> dict:
        """1-skeleton as vertex -> set of neighbours."""
        adj = {v: set() for v in self.vertices}
        for f in self._facets:
            for a, b in combinations(f, 2):
                adj[a].add(b)
                adj[b].add(a)
        return adj

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.f_vector))


def sorted_label(s: Iterable[Vertex]) -> str:
    return "{" + ",".join(format_vertex(v) for v in sorted_vertices(s)) + "}"


def build(facet_list: Iterable[Iterable[Vertex]]) -> SimplicialComplex:
    """Build a complex from a list of vertex sets.

    Sets contained in another listed set are dropped.  Exact duplicates,
    an empty list and malformed tokens are rejected.
    """
    raw = [as_simplex(f) for f in facet_list]
    if not raw:
        raise ComplexError("facet list is empty")
    if len(set(raw)) != len(raw):
        raise ComplexError("duplicate facets in input")
    # largest first, so a single pass suffices
    raw.sort(key=len, reverse=True)
    kept: list[Simplex] = []
    for f in raw:
        if not any(f <= g for g in kept):
            kept.append(f)
    return SimplicialComplex(kept)


def simplex_complex(vertices: Iterable[Vertex]) -> SimplicialComplex:
    """The full simplex on the given vertices (``[]`` gives ``{∅}``)."""
    return SimplicialComplex([as_simplex(vertices)])


def _face_in(delta: SimplicialComplex, sigma) -> Simplex:
    s = as_simplex(sigma)
    if not delta.contains_face(s):
        raise ComplexError(f"{sorted_label(s)} is not a face of the complex")
    return s


def star(delta: SimplicialComplex, sigma) -> SimplicialComplex:
    """Closed star: the subcomplex generated by the facets containing ``sigma``."""
    s = _face_in(delta, sigma)
    return SimplicialComplex([f for f in delta.facets if s <= f])


def link(delta: SimplicialComplex, sigma) -> SimplicialComplex:
    s = _face_in(delta, sigma)
    return SimplicialComplex([f - s for f in delta.facets if s <= f])


@dataclass(frozen=True)
class DualGraph:
    """Nodes are facet indices; each edge carries the shared ridge."""

    n_nodes: int
    edges: dict = field(repr=False)  # (i, j) with i < j -> ridge
    adjacency: tuple = field(repr=False)

    def neighbors(self, i: int) -> tuple[int, ...]:
        return self.adjacency[i]

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for s in range(self.n_nodes):
            if s in seen:
                continue
            comp = []
            seen.add(s)
            queue = deque([s])
            while queue:
                i = queue.popleft()
                comp.append(i)
                for j in self.adjacency[i]:
                    if j not in seen:
                        seen.add(j)
                        queue.append(j)
            comps.append(sorted(comp))
        return comps

    def component_of(self, i: int) -> list[int]:
        for c in self.components():
            if i in c:
                return c
        raise IndexError(i)


def dual_graph(delta: SimplicialComplex) -> DualGraph:
    cached = delta.__dict__.get("_dual_graph")
    if cached is not None:
        return cached
    edges = {}
    adj: list[set[int]] = [set() for _ in delta.facets]
    for ridge, ix in delta.ridge_map.items():
        if not ridge:
            continue  # points of a 0-dimensional complex are not adjacent
        for i, j in combinations(sorted(ix), 2):
            # two distinct simplices share at most one ridge
            assert (i, j) not in edges
            edges[(i, j)] = ridge
            adj[i].add(j)
            adj[j].add(i)
    g = DualGraph(len(delta.facets), dict(sorted(edges.items())),
                  tuple(tuple(sorted(a)) for a in adj))
    delta.__dict__["_dual_graph"] = g
    return g


def is_strongly_connected(delta: SimplicialComplex) -> bool:
    return len(dual_graph(delta).components()) == 1


def is_locally_strongly_connected(delta: SimplicialComplex) -> bool:
    if not is_strongly_connected(delta):
        return False
    return all(is_strongly_connected(star(delta, [v])) for v in delta.vertices)


def _fresh_labels(taken: set, vertices: Sequence[Vertex]) -> dict:
    mapping = {}
    used = set(taken) | set(vertices)
    for v in vertices:
        base = format_vertex(v)
        cand = base + "'"
        while cand in used:
            cand += "'"
        used.add(cand)
        mapping[v] = cand
    return mapping


def join_with_relabeling(a: SimplicialComplex, b: SimplicialComplex):
    """Join of two complexes.

    If the vertex sets meet, the vertices of ``b`` are renamed by appending
    primes.  Returns ``(join, mapping)`` where ``mapping`` sends each vertex
    of ``b`` to its name in the join (identity when no renaming happened).
    """
    if set(a.vertices) & set(b.vertices):
        mapping = _fresh_labels(set(a.vertices), b.vertices)
    else:
        mapping = {v: v for v in b.vertices}
    facets = [f | frozenset(mapping[v] for v in g) for f in a.facets for g in b.facets]
    return SimplicialComplex(facets), mapping


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    return join_with_relabeling(a, b)[0]


def barycentric_subdivision(delta: SimplicialComplex) -> SimplicialComplex:
    """Order complex of the face poset.

    A vertex of the result is the sorted vertex tuple of a non-empty face, so
    ``len(label) - 1`` recovers the dimension of the original face.
    """
    def label(vs):
        return tuple(sorted_vertices(vs))

    chains = set()
    for f in delta.facets:
        for order in permutations(f):
            chains.add(frozenset(label(order[:k]) for k in range(1, len(order) + 1)))
    return SimplicialComplex(chains)


def face_dimension_coloring(sd: SimplicialComplex) -> dict:
    """Canonical coloring of a barycentric subdivision by face dimension."""
    return {v: len(v) - 1 for v in sd.vertices}


@dataclass(frozen=True)
class Codim2Face:
    face: Simplex
    length: int  # number of facets around the face
    is_cycle: bool

    @property
    def parity(self) -> str | None:
        if not self.is_cycle:
            return None
        return "even" if self.length % 2 == 0 else "odd"


class NotACycleError(ComplexError):
    pass


def is_cycle_graph(k: SimplicialComplex) -> bool:
    """True iff a complex is a single polygon (connected, 2-regular graph)."""
    if k.dim != 1 or not k.is_pure or len(k.facets) < 3:
        return False
    adj = k.edge_graph
    if any(len(n) != 2 for n in adj.values()):
        return False
    return is_strongly_connected(k)


def codim2_faces(delta: SimplicialComplex, strict: bool = False) -> list[Codim2Face]:
    """All faces of codimension two, with the size of the polygon around them.

    With ``strict`` a face whose link is not a single cycle raises
    :class:`NotACycleError`; otherwise it is reported with ``is_cycle=False``.
    """
    if not delta.is_pure:
        raise ComplexError("codimension-2 faces need a pure complex")
    d = delta.dim
    if d < 1:
        return []
    out = []
    for kappa in delta.faces(d - 2):
        lk = link(delta, kappa)
        ok = is_cycle_graph(lk)
        if strict and not ok:
            raise NotACycleError(f"link of {sorted_label(kappa)} is not a cycle")
        out.append(Codim2Face(kappa, len(lk.facets), ok))
    return out


def is_small_sphere(k: SimplicialComplex) -> bool | None:
    """Decide whether ``k`` is a simplicial sphere, for dimension at most 2.

    Returns ``None`` above dimension 2 where no decision is attempted.
    """
    if k.facets == (frozenset(),):
        return True
    if not k.is_pure:
        return False
    d = k.dim
    if d == 0:
        return len(k.facets) == 2
    if d == 1:
        return is_cycle_graph(k)
    if d == 2:
        if not is_strongly_connected(k):
            return False
        if any(len(ix) != 2 for ix in k.ridge_map.values()):
            return False
        if any(not is_cycle_graph(link(k, [v])) for v in k.vertices):
            return False
        return k.euler_characteristic() == 2
    return None


@dataclass(frozen=True)
class ManifoldDiagnostics:
    dim: int
    pure: bool
    strongly_connected: bool
    pseudomanifold: bool  # every ridge in at most two facets
    closed: bool  # every ridge in exactly two facets
    codim2_cycles: bool
    vertex_links_spheres: bool | None  # None when the dimension is out of range
    problems: tuple[str, ...] = ()

    @property
    def passes(self) -> bool:
        return (self.pure and self.pseudomanifold and self.codim2_cycles
                and self.vertex_links_spheres is not False)


def manifold_precheck(delta: SimplicialComplex) -> ManifoldDiagnostics:
    """Decidable part of the combinatorial-manifold condition. Never raises."""
    problems = []
    pure = delta.is_pure
    if not pure:
        problems.append("not pure")
    counts = [len(ix) for ix in delta.ridge_map.values()]
    pseudo = all(c <= 2 for c in counts)
    if not pseudo:
        problems.append("a ridge lies in more than two facets")
    closed = all(c == 2 for c in counts) if delta.dim > 0 else True
    cyc = False
    if pure:
        bad = [c for c in codim2_faces(delta) if not c.is_cycle]
        cyc = not bad
        if bad:
            problems.append(f"{len(bad)} codimension-2 face(s) with non-cycle link")
    spheres = None
    if pure and delta.dim <= 3:
        spheres = all(is_small_sphere(link(delta, [v])) for v in delta.vertices)
        if not spheres:
            problems.append("a vertex link is not a sphere")
    return ManifoldDiagnostics(
        dim=delta.dim,
        pure=pure,
        strongly_connected=is_strongly_connected(delta),
        pseudomanifold=pseudo,
        closed=closed,
        codim2_cycles=cyc,
        vertex_links_spheres=spheres,
        problems=tuple(problems),
    )
