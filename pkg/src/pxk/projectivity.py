"""Perspectivities, projectivities along facet paths and the groups they form.

A facet path is a sequence of facets in which consecutive facets share a
ridge.  Walking across a ridge swaps the two vertices off the ridge and
fixes the rest; composing these steps along a closed path gives a
permutation of the base facet.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .complex import (
    ComplexError,
    NotACycleError,
    SimplicialComplex,
    as_simplex,
    codim2_faces,
    dual_graph,
    join_with_relabeling,
    sorted_label,
)
from .permgroup import Permutation, PermutationGroup, classify_symmetric_product


class PathError(ComplexError):
    pass


class Projectivity:
    """A bijection from the vertices of one facet to those of another."""

    __slots__ = ("source", "target", "_map")

    def __init__(self, source, target, mapping: Mapping):
        self.source = frozenset(source)
        self.target = frozenset(target)
        if set(mapping) != self.source or set(mapping.values()) != self.target:
            raise PathError("mapping is not a bijection between the two facets")
        self._map = dict(mapping)

    @classmethod
    def identity(cls, facet) -> "Projectivity":
        return cls(facet, facet, {v: v for v in facet})

    def __call__(self, v):
        return self._map[v]

    def then(self, other: "Projectivity") -> "Projectivity":
        if self.target != other.source:
            raise PathError("projectivities are not composable")
        return Projectivity(self.source, other.target, {v: other(self(v)) for v in self.source})

    __mul__ = then

    def inverse(self) -> "Projectivity":
        return Projectivity(self.target, self.source, {b: a for a, b in self._map.items()})

    def as_dict(self) -> dict:
        return dict(self._map)

    def as_permutation(self) -> Permutation:
        if self.source != self.target:
            raise PathError("projectivity is not along a closed path")
        return Permutation(self._map)

    def __eq__(self, other):
        return (isinstance(other, Projectivity) and self.source == other.source
                and self.target == other.target and self._map == other._map)

    def __hash__(self):
        return hash((self.source, self.target, frozenset(self._map.items())))

    def __repr__(self):
        return f"Projectivity({sorted_label(self.source)} -> {sorted_label(self.target)})"


def _adjacent(sigma: frozenset, tau: frozenset) -> bool:
    return len(sigma) == len(tau) and sigma != tau and len(sigma & tau) == len(sigma) - 1


def as_path(delta: SimplicialComplex, g: Iterable) -> tuple[int, ...]:
    """Normalize a facet path (facet indices or vertex collections) to indices."""
    path = tuple(delta.facet_index(s) for s in g)
    if not path:
        raise PathError("empty facet path")
    for i, j in zip(path, path[1:]):
        if not _adjacent(delta.facets[i], delta.facets[j]):
            raise PathError(f"{sorted_label(delta.facets[i])} and "
                            f"{sorted_label(delta.facets[j])} do not share a ridge")
    return path


def perspectivity(delta: SimplicialComplex, sigma, tau) -> Projectivity:
    s, t = delta.facet(sigma), delta.facet(tau)
    if not _adjacent(s, t):
        raise PathError(f"{sorted_label(s)} and {sorted_label(t)} are not adjacent")
    (a,) = s - t
    (b,) = t - s
    return Projectivity(s, t, {v: (b if v == a else v) for v in s})


def projectivity(delta: SimplicialComplex, g) -> Projectivity:
    path = as_path(delta, g)
    facets = delta.facets
    m = {v: v for v in facets[path[0]]}
    for i, j in zip(path, path[1:]):
        (a,) = facets[i] - facets[j]
        (b,) = facets[j] - facets[i]
        m = {v: (b if w == a else w) for v, w in m.items()}
    return Projectivity(facets[path[0]], facets[path[-1]], m)


def inverse_path(g: Sequence) -> tuple:
    return tuple(reversed(tuple(g)))


def concat(g: Sequence, h: Sequence) -> tuple:
    g, h = tuple(g), tuple(h)
    if g[-1] != h[0]:
        raise PathError("paths do not meet")
    return g + h[1:]


def _require_pure(delta: SimplicialComplex):
    if not delta.is_pure:
        raise ComplexError("groups of projectivities are only computed for pure complexes")


@dataclass(frozen=True)
class SpanningTree:
    """Breadth-first tree of the dual-graph component of ``root``."""

    root: int
    parent: dict  # facet index -> parent index (root maps to None)
    order: tuple  # visiting order

    def path_to(self, i: int) -> tuple[int, ...]:
        out = [i]
        while self.parent[out[-1]] is not None:
            out.append(self.parent[out[-1]])
        return tuple(reversed(out))

    def edges(self) -> list[tuple[int, int]]:
        return [(p, c) for c in self.order if (p := self.parent[c]) is not None]

    def non_tree_edges(self, delta: SimplicialComplex) -> list[tuple[int, int]]:
        nodes = set(self.order)
        tree = {frozenset(e) for e in self.edges()}
        return [e for e in dual_graph(delta).edges
                if e[0] in nodes and frozenset(e) not in tree]


def spanning_tree(delta: SimplicialComplex, base) -> SpanningTree:
    root = delta.facet_index(base)
    g = dual_graph(delta)
    parent = {root: None}
    order = [root]
    queue = deque([root])
    while queue:
        i = queue.popleft()
        for j in g.neighbors(i):  # ascending index = canonical facet order
            if j not in parent:
                parent[j] = i
                order.append(j)
                queue.append(j)
    return SpanningTree(root, parent, tuple(order))


def _tree_maps(delta: SimplicialComplex, tree: SpanningTree) -> dict[int, Projectivity]:
    maps = {tree.root: Projectivity.identity(delta.facets[tree.root])}
    for i in tree.order[1:]:
        p = tree.parent[i]
        maps[i] = maps[p].then(perspectivity(delta, p, i))
    return maps


def generator_loops(delta: SimplicialComplex, base) -> list[tuple[int, ...]]:
    """One facet loop per non-tree edge of the canonical spanning tree."""
    tree = spanning_tree(delta, base)
    loops = []
    for i, j in tree.non_tree_edges(delta):
        loops.append(tree.path_to(i) + inverse_path(tree.path_to(j)))
    return loops


def pi_group(delta: SimplicialComplex, base) -> PermutationGroup:
    """The group of projectivities at ``base``.

    Every facet loop is a product of the loops that close a single non-tree
    edge of a spanning tree, so their projectivities generate the group.
    """
    _require_pure(delta)
    tree = spanning_tree(delta, base)
    maps = _tree_maps(delta, tree)
    gens = []
    for i, j in tree.non_tree_edges(delta):
        p = maps[i].then(perspectivity(delta, i, j)).then(maps[j].inverse()).as_permutation()
        if not p.is_identity() and p not in gens:
            gens.append(p)
    return PermutationGroup(delta.facets[tree.root], gens)


def star_loop(delta: SimplicialComplex, kappa, start) -> tuple[int, ...]:
    """Facet loop at ``start`` going once around the codimension-2 face ``kappa``.

    The smaller neighbour (in facet order) is visited first.
    """
    k = as_simplex(kappa)
    s = delta.facet_index(start)
    if not k <= delta.facets[s]:
        raise PathError(f"{sorted_label(k)} is not in the start facet")
    around = {i for i, f in enumerate(delta.facets) if k <= f}
    g = dual_graph(delta)
    nbrs = {i: [j for j in g.neighbors(i) if j in around] for i in around}
    if any(len(n) != 2 for n in nbrs.values()):
        raise NotACycleError(f"star of {sorted_label(k)} is not a cycle of facets")
    loop = [s, min(nbrs[s])]
    while loop[-1] != s:
        a, b = nbrs[loop[-1]]
        loop.append(b if a == loop[-2] else a)
    if len(loop) - 1 != len(around):
        raise NotACycleError(f"star of {sorted_label(k)} is not a single cycle")
    return tuple(loop)


@dataclass(frozen=True)
class OddGenerator:
    kappa: frozenset
    facet: int  # facet where the star loop starts
    loop: tuple  # full loop g * l * g^- at the base facet
    permutation: Permutation

    @property
    def degenerate(self) -> bool:
        return not self.permutation.is_transposition()


def odd_generators(delta: SimplicialComplex, base) -> list[OddGenerator]:
    """Conjugated star loops around every odd codimension-2 face reachable from
    ``base``.  Raises if some codimension-2 link is not a cycle."""
    _require_pure(delta)
    faces = codim2_faces(delta, strict=True)
    tree = spanning_tree(delta, base)
    maps = _tree_maps(delta, tree)
    out = []
    for c in faces:
        if c.parity != "odd":
            continue
        holders = [i for i, f in enumerate(delta.facets) if c.face <= f and i in tree.parent]
        if not holders:
            continue
        s = holders[0]
        lp = star_loop(delta, c.face, s)
        perm = maps[s].then(projectivity(delta, lp)).then(maps[s].inverse()).as_permutation()
        g = tree.path_to(s)
        out.append(OddGenerator(c.face, s, concat(concat(g, lp), inverse_path(g)), perm))
    return out


def odd_subgroup(delta: SimplicialComplex, base) -> PermutationGroup:
    """Subgroup generated by loops around odd codimension-2 faces.

    For a combinatorial manifold this is the subgroup coming from
    null-homotopic facet loops, and its generators are transpositions.
    """
    gens = []
    for og in odd_generators(delta, base):
        if og.permutation not in gens and not og.permutation.is_identity():
            gens.append(og.permutation)
    return PermutationGroup(delta.facet(base), gens)


def conjugate_group(h_group: PermutationGroup, path_map: Projectivity) -> set[Permutation]:
    """Elements of ``<g> H <g^->`` where ``path_map = <g>`` ends at H's base."""
    inv = path_map.inverse()
    t = path_map.target
    out = set()
    for h in h_group:
        hp = Projectivity(t, t, {v: h(v) for v in t})
        out.add(path_map.then(hp).then(inv).as_permutation())
    return out


def base_change(delta: SimplicialComplex, base0, base1, g):
    """Groups at both ends of ``g`` and whether conjugation along ``g`` maps
    the one at ``base1`` onto the one at ``base0``."""
    path = as_path(delta, g)
    if path[0] != delta.facet_index(base0) or path[-1] != delta.facet_index(base1):
        raise PathError("path does not run from base0 to base1")
    g0 = pi_group(delta, base0)
    g1 = pi_group(delta, base1)
    conj = conjugate_group(g1, projectivity(delta, path))
    return g0, g1, conj == set(g0.elements())


def verify_generation(delta: SimplicialComplex, base, loops: Iterable) -> bool:
    """Check that the odd-face generators together with the given loops
    generate the full group of projectivities at ``base``."""
    b = delta.facet_index(base)
    extra = []
    for lp in loops:
        path = as_path(delta, lp)
        if path[0] != b or path[-1] != b:
            raise PathError("not a facet loop at the base facet")
        extra.append(projectivity(delta, path).as_permutation())
    odd = [og.permutation for og in odd_generators(delta, b)]
    got = PermutationGroup(delta.facets[b], odd + extra)
    return got == pi_group(delta, b)


@dataclass(frozen=True)
class InducedMap:
    source: PermutationGroup
    image: PermutationGroup
    target: PermutationGroup
    is_homomorphism: bool
    image_in_target: bool
    injective: bool
    natural: bool  # image of p equals f p f^-1 on every generator
    facet_injective: bool


def _push_loop(delta, delta2, f, loop):
    out = [delta2.facet_index(frozenset(f[v] for v in delta.facets[loop[0]]))]
    for i in loop[1:]:
        j = delta2.facet_index(frozenset(f[v] for v in delta.facets[i]))
        if j != out[-1]:
            out.append(j)
    return out


def induced_map(f: Mapping, delta: SimplicialComplex, delta2: SimplicialComplex, base) -> InducedMap:
    """Push the generating loops of the group at ``base`` through the vertex map
    ``f`` and check the result is a homomorphism into the target group."""
    _require_pure(delta)
    if delta.dim != delta2.dim:
        raise ComplexError("simplicial map between complexes of different dimension")
    for F in delta.facets:
        if any(v not in f for v in F):
            raise ComplexError(f"vertex map undefined on {sorted_label(F)}")
        img = frozenset(f[v] for v in F)
        if len(img) != len(F):
            raise ComplexError(f"degenerate map: {sorted_label(F)} collapses")
        if not delta2.is_facet(img):
            raise ComplexError(f"image of {sorted_label(F)} is not a facet")
    b = delta.facet_index(base)
    b2 = delta2.facet_index(frozenset(f[v] for v in delta.facets[b]))
    src_gens, img_gens, pair_gens = [], [], []
    natural = True
    for lp in generator_loops(delta, b):
        p = projectivity(delta, lp).as_permutation()
        q = projectivity(delta2, _push_loop(delta, delta2, f, lp)).as_permutation()
        natural &= all(q(f[v]) == f[p(v)] for v in delta.facets[b])
        src_gens.append(p)
        img_gens.append(q)
        moves = {(0, v): (0, p(v)) for v in delta.facets[b]}
        moves.update({(1, w): (1, q(w)) for w in delta2.facets[b2]})
        pair_gens.append(Permutation(moves))
    src = PermutationGroup(delta.facets[b], src_gens)
    img = PermutationGroup(delta2.facets[b2], img_gens)
    ground = [(0, v) for v in delta.facets[b]] + [(1, w) for w in delta2.facets[b2]]
    graph = PermutationGroup(ground, pair_gens)
    target = pi_group(delta2, b2)
    images = [frozenset(f[v] for v in F) for F in delta.facets]
    hom = graph.order == src.order
    return InducedMap(
        source=src,
        image=img,
        target=target,
        is_homomorphism=hom,
        image_in_target=img.is_subgroup(target),
        injective=hom and img.order == src.order,
        natural=natural,
        facet_injective=len(set(images)) == len(images),
    )


@dataclass(frozen=True)
class JoinProduct:
    join: SimplicialComplex
    relabel: dict
    base: frozenset
    group: PermutationGroup
    left: PermutationGroup  # factor groups, embedded in Sym(base)
    right: PermutationGroup

    @property
    def holds(self) -> bool:
        prod = PermutationGroup(self.base, self.left.generators + self.right.generators)
        return (self.group == prod
                and self.group.order == self.left.order * self.right.order)

    @property
    def partition(self):
        return classify_symmetric_product(self.group)


def join_product(delta, base, delta2, base2) -> JoinProduct:
    j, rel = join_with_relabeling(delta, delta2)
    b1, b2 = delta.facet(base), delta2.facet(base2)
    jb = b1 | frozenset(rel[v] for v in b2)
    g1, g2 = pi_group(delta, b1), pi_group(delta2, b2)
    left = PermutationGroup(jb, g1.generators)
    right = PermutationGroup(jb, [Permutation({rel[a]: rel[p(a)] for a in b2}) for p in g2.generators])
    return JoinProduct(j, rel, jb, pi_group(j, jb), left, right)


def verify_join_product(delta, base, delta2, base2) -> bool:
    return join_product(delta, base, delta2, base2).holds


def sorting_identity(join: SimplicialComplex, sigma, tau, sigma2, tau2) -> bool:
    """Both ways round the square spanned by an edge in each join factor agree.

    ``sigma, tau`` are adjacent facets of the first factor and ``sigma2, tau2``
    adjacent facets of the second (already in the join's vertex names).
    """
    s, t, s2, t2 = (frozenset(x) for x in (sigma, tau, sigma2, tau2))
    lhs = projectivity(join, [s | s2, s | t2, t | t2])
    rhs = projectivity(join, [s | s2, t | s2, t | t2])
    return lhs == rhs
