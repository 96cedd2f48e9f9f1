"""Named complexes and polytopes, and seeded random complexes."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations, permutations, product

import numpy as np

from .complex import ComplexError, SimplicialComplex, build, is_cycle_graph, link
from .polytope import SimplePolytope, connected_sum, load_polytope


class BuilderError(ValueError):
    pass


@dataclass(frozen=True)
class BuilderSpec:
    name: str
    params: tuple = field(default=())

    @classmethod
    def parse(cls, text: str) -> "BuilderSpec":
        name, *rest = text.split()
        return cls(name, tuple(int(x) for x in rest))


def simplex_boundary(d: int) -> SimplicialComplex:
    """Boundary of the d-simplex on vertices 1..d+1."""
    if d < 1:
        raise BuilderError("simplex_boundary needs d >= 1")
    return build(combinations(range(1, d + 2), d))


def cycle(n: int) -> SimplicialComplex:
    if n < 3:
        raise BuilderError("cycle needs n >= 3")
    return build([{i, i % n + 1} for i in range(1, n + 1)])


def cross_polytope(d: int) -> SimplicialComplex:
    """Boundary of the d-dimensional cross-polytope on vertices +-1..+-d."""
    if d < 1:
        raise BuilderError("cross_polytope needs d >= 1")
    return build([{s * i for s, i in zip(signs, range(1, d + 1))}
                  for signs in product((1, -1), repeat=d)])


def _grid_torus(flip_cols=()) -> SimplicialComplex:
    # vertex (r, c) of the 3x3 grid is 3r + c + 1, indices mod 3
    def vx(r, c):
        return 3 * (r % 3) + (c % 3) + 1

    tris = []
    for r in range(3):
        for c in range(3):
            a, b, cc, d = vx(r, c), vx(r, c + 1), vx(r + 1, c), vx(r + 1, c + 1)
            if c in flip_cols:
                tris += [{a, b, d}, {a, cc, d}]
            else:
                tris += [{a, b, cc}, {b, cc, d}]
    return build(tris)


def torus_T() -> SimplicialComplex:
    """9-vertex torus: 3x3 grid, every square split along the same diagonal."""
    return _grid_torus()


def anti_torus_A() -> SimplicialComplex:
    """The torus grid with the diagonals of the middle column flipped."""
    return _grid_torus(flip_cols=(1,))


def nonlocal_path() -> SimplicialComplex:
    """Strip of five triangles whose end triangles meet only in vertex 1."""
    return build([{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}, {5, 6, 1}])


def simplex_polytope(d: int) -> SimplePolytope:
    """d-simplex; facet i is the one opposite vertex i."""
    if d < 1:
        raise BuilderError("simplex needs d >= 1")
    pts = range(1, d + 2)
    return load_polytope(d, {f"v{i}": {j for j in pts if j != i} for i in pts})


def cube(d: int) -> SimplePolytope:
    """d-cube; facets +-i (coordinate i equal to 1 / 0), vertices bit strings."""
    if d < 1:
        raise BuilderError("cube needs d >= 1")
    inc = {}
    for bits in product("01", repeat=d):
        inc["".join(bits)] = {(i + 1) if b == "1" else -(i + 1) for i, b in enumerate(bits)}
    return load_polytope(d, inc)


def _icosahedron_triangles():
    phi = (1 + 5 ** 0.5) / 2
    pts = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            base = (0.0, s1 * 1.0, s2 * phi)
            for k in range(3):
                pts.append(base[k:] + base[:k])
    x = np.array(pts)
    dist = np.linalg.norm(x[:, None] - x[None], axis=-1)
    adj = np.isclose(dist, 2.0)
    return [t for t in combinations(range(12), 3)
            if adj[t[0], t[1]] and adj[t[0], t[2]] and adj[t[1], t[2]]]


def dodecahedron() -> SimplePolytope:
    """Dual of the icosahedron: facets 1..12, vertices t1..t20."""
    tris = _icosahedron_triangles()
    assert len(tris) == 20
    return load_polytope(3, {f"t{i + 1}": {a + 1 for a in t} for i, t in enumerate(tris)})


def permutohedron(n: int = 4) -> SimplePolytope:
    """Permutohedron of order n (dimension n-1).

    Vertex ``p`` (a permutation, written as a string of values) lies on the
    facet for the subset S of coordinates iff the |S| smallest values sit
    exactly in S.
    """
    if not 2 <= n <= 6:
        raise BuilderError("permutohedron needs 2 <= n <= 6")
    inc = {}
    for perm in permutations(range(1, n + 1)):
        fs = set()
        for k in range(1, n):
            s = sorted(i + 1 for i in range(n) if perm[i] <= k)
            fs.add("S" + "".join(map(str, s)))
        inc["".join(map(str, perm))] = fs
    return load_polytope(n - 1, inc)


def blend_M() -> SimplePolytope:
    """Connected sum of two 3-cubes at a vertex: f-vector (14, 21, 9)."""
    c = cube(3)
    return connected_sum(c, "000", c, "000")


def cell120() -> SimplePolytope:
    """Regular 120-cell, read from the bundled incidence file."""
    data = json.loads(resources.files("pxk.data").joinpath("cell120.json").read_text())
    return load_polytope(data["dim"], data["vertices"], data["facets"])


def random_pure(d: int, n: int, seed: int, n_vertices: int | None = None) -> SimplicialComplex:
    """``n`` distinct random d-simplices on ``n_vertices`` points (default d+3).

    Used by property tests; no manifold structure is promised.
    """
    m = n_vertices or d + 3
    if d < 0 or m < d + 1 or n < 1:
        raise BuilderError("bad parameters for random_pure")
    rng = np.random.default_rng(seed)
    chosen: list[frozenset] = []
    tries = 0
    while len(chosen) < n and tries < 50 * n:
        f = frozenset(int(x) + 1 for x in rng.choice(m, size=d + 1, replace=False))
        if f not in chosen:
            chosen.append(f)
        tries += 1
    return build(chosen)


def _flip(facets: list[frozenset], a, b) -> list[frozenset] | None:
    around = [f for f in facets if {a, b} <= f]
    if len(around) != 2:
        return None
    (c,) = around[0] - {a, b}
    (d,) = around[1] - {a, b}
    if any({c, d} <= f for f in facets):
        return None
    deg = {v: sum(v in f for f in facets) for v in (a, b)}
    if min(deg.values()) <= 3:
        return None
    rest = [f for f in facets if f not in around]
    return rest + [frozenset({a, c, d}), frozenset({b, c, d})]


def random_sphere(n_facets: int, seed: int) -> SimplicialComplex:
    """Random triangulated 2-sphere with ``n_facets`` triangles (even, >= 4).

    Starts from the tetrahedron boundary, subdivides random triangles and
    applies random edge flips, then shuffles the vertex labels.
    """
    if n_facets < 4 or n_facets % 2:
        raise BuilderError("a 2-sphere has an even number >= 4 of triangles")
    rng = np.random.default_rng(seed)
    facets = [frozenset(s) for s in combinations(range(4), 3)]
    nxt = 4
    while len(facets) < n_facets:
        t = facets.pop(int(rng.integers(len(facets))))
        a, b, c = sorted(t)
        facets += [frozenset({a, b, nxt}), frozenset({a, c, nxt}), frozenset({b, c, nxt})]
        nxt += 1
    for _ in range(int(rng.integers(0, 3 * n_facets))):
        edges = sorted({tuple(sorted(e)) for f in facets for e in combinations(f, 2)})
        a, b = edges[int(rng.integers(len(edges)))]
        out = _flip(facets, a, b)
        if out is not None:
            facets = out
    labels = rng.permutation(nxt) + 1
    return build([{int(labels[v]) for v in f} for f in facets])


_BUILDERS = {
    "simplex_boundary": (simplex_boundary, 1),
    "cycle": (cycle, 1),
    "cross_polytope": (cross_polytope, 1),
    "cube": (cube, 1),
    "simplex": (simplex_polytope, 1),
    "dodecahedron": (dodecahedron, 0),
    "permutohedron": (permutohedron, (0, 1)),
    "torus_T": (torus_T, 0),
    "anti_torus_A": (anti_torus_A, 0),
    "nonlocal_path": (nonlocal_path, 0),
    "blend_M": (blend_M, 0),
    "random_pure": (random_pure, (3, 4)),
    "random_sphere": (random_sphere, 2),
    "cell120": (cell120, 0),
}

NAMES = tuple(_BUILDERS)


def make(spec, *params):
    """Build a named object: ``make("cube", 3)`` or ``make("cube 3")``."""
    if isinstance(spec, BuilderSpec):
        name, params = spec.name, spec.params
    elif isinstance(spec, str) and not params and " " in spec.strip():
        s = BuilderSpec.parse(spec)
        name, params = s.name, s.params
    else:
        name = spec
    if name not in _BUILDERS:
        raise BuilderError(f"unknown builder {name!r}; known: {', '.join(NAMES)}")
    fn, arity = _BUILDERS[name]
    allowed = arity if isinstance(arity, tuple) else (arity,)
    if len(params) not in allowed:
        raise BuilderError(f"{name} takes {' or '.join(map(str, allowed))} parameter(s)")
    try:
        return fn(*params)
    except ComplexError as e:
        raise BuilderError(str(e)) from e


def is_hexagonal_surface(delta: SimplicialComplex) -> bool:
    return all(is_cycle_graph(link(delta, [v])) and len(link(delta, [v]).facets) == 6
               for v in delta.vertices)
