"""Acceptance criteria, one test per criterion.

Each test records PASS/FAIL in the terminal summary (and prints it when run
with ``-s``).  Criterion 2's 120-cell part is tagged slow.
"""

from contextlib import contextmanager
from math import factorial

import numpy as np
import pytest

from conftest import ACCEPTANCE
from oracle import as_frozen, oracle_group
from paths import BASE, P, Q, Q_PRIME
from pxk import builders
from pxk.cli import main
from pxk.coloring import is_balanced, is_proper_complex_coloring
from pxk.complex import (
    barycentric_subdivision,
    dual_graph,
    face_dimension_coloring,
    join_with_relabeling,
    manifold_precheck,
)
from pxk.io import dumps
from pxk.permgroup import Permutation, classify_symmetric_product
from pxk.polytope import (
    coloring_theorem_check,
    cycle_space_check,
    disjoint_facet_check,
    even_vertex_parity,
    induced_edge_coloring,
    pi_group_polytope,
    product,
    product_check,
    s_bounds,
)
from pxk.projectivity import (
    base_change,
    inverse_path,
    join_product,
    odd_subgroup,
    pi_group,
    projectivity,
    sorting_identity,
)


@contextmanager
def criterion(key, title):
    try:
        yield
    except BaseException:
        ACCEPTANCE[key] = (title, False)
        print(f"criterion {key}: FAIL  {title}")
        raise
    ACCEPTANCE[key] = (title, True)
    print(f"criterion {key}: PASS  {title}")


def random_walk(delta, rng, start, length):
    dg = dual_graph(delta)
    path = [start]
    for _ in range(length):
        nb = dg.neighbors(path[-1])
        if not nb:
            break
        path.append(int(rng.choice(nb)))
    return path


def prism():
    return product(builders.simplex_polytope(2), builders.simplex_polytope(1))


def test_c1_torus_pair(torus, anti_torus):
    with criterion(1, "torus and anti-torus groups, loops p, q, q'"):
        assert pi_group(torus, BASE).is_trivial()
        assert projectivity(torus, P).as_permutation().is_identity()
        assert projectivity(torus, Q).as_permutation().is_identity()
        g = pi_group(anti_torus, BASE)
        assert g.order == 3
        three = Permutation.parse("(1 4 2)")
        assert g.contains(three)
        assert projectivity(anti_torus, P).as_permutation().is_identity()
        assert projectivity(anti_torus, Q_PRIME).as_permutation() == three
        assert str(projectivity(anti_torus, Q_PRIME).as_permutation()) == "(1 4 2)"


def test_c2_regular_polytopes():
    with criterion(2, "simplex, dodecahedron and cube groups"):
        cases = [
            (builders.simplex_polytope(3), 6, (3,)),
            (builders.simplex_polytope(4), 24, (4,)),
            (builders.dodecahedron(), 6, (3,)),
            (builders.cube(3), 1, (1, 1, 1)),
            (builders.cube(4), 1, (1, 1, 1, 1)),
        ]
        for p, order, part in cases:
            g = pi_group_polytope(p)
            assert g.order == order
            assert classify_symmetric_product(g) == part


@pytest.mark.slow
def test_c2_cell120():
    with criterion("2s", "120-cell group is S4 (slow)"):
        p = builders.cell120()
        assert p.f_vector == (600, 1200, 720, 120)
        g = pi_group_polytope(p)
        assert g.order == 24
        assert classify_symmetric_product(g) == (4,)


def test_c3_coloring_theorem(tmp_path):
    with criterion(3, "coloring theorem predicates agree on the corpus"):
        corpus = {
            "cube3": (builders.cube(3), True),
            "cube4": (builders.cube(4), True),
            "tetrahedron": (builders.simplex_polytope(3), False),
            "dodecahedron": (builders.dodecahedron(), False),
            "permutohedron": (builders.permutohedron(4), True),
            "blend_M": (builders.blend_M(), True),
            "prism": (prism(), False),
        }
        for name, (p, expected) in corpus.items():
            ct = coloring_theorem_check(p, strict=False)
            assert ct.agree, name
            assert ct.even is expected, name
            f = tmp_path / f"{name}.json"
            f.write_text(dumps(p))
            assert main(["polytope", str(f)]) == 0


def test_c4_blend(capsys):
    with criterion(4, "blend of two cubes"):
        m = builders.blend_M()
        assert m.f_vector == (14, 21, 9)
        ct = coloring_theorem_check(m)
        assert ct.even and ct.bipartite and ct.balanced
        assert sorted(len(s) for s in ct.bipartition) == [7, 7]
        assert ct.gamma == 3
        assert tuple(s_bounds(m)) == (6, 6, True)
        ec = induced_edge_coloring(m, ct.facet_coloring)
        assert ec.proper and len(ec.colors) == 21 and ec.n_colors == 3
        assert disjoint_facet_check(m)


def test_c5_join_and_product():
    with criterion(5, "join and product groups, sorting identity"):
        c3 = builders.cycle(3)
        jp = join_product(c3, 0, c3, 0)
        assert jp.group.order == 4 and jp.holds

        pc = product_check(builders.simplex_polytope(2), "v1", builders.simplex_polytope(1), "v1")
        assert pc.group.order == 2 and pc.partition == (1, 2) and pc.holds

        pool = [builders.cycle(3), builders.cycle(4), builders.cycle(5),
                builders.simplex_boundary(2), builders.simplex_boundary(3),
                builders.torus_T(), builders.random_sphere(8, 3)]
        rng = np.random.default_rng(5)
        checked = 0
        while checked < 200:
            a = pool[rng.integers(len(pool))]
            b = pool[rng.integers(len(pool))]
            j, rel = join_with_relabeling(a, b)
            s = int(rng.integers(len(a.facets)))
            t = int(rng.choice(dual_graph(a).neighbors(s)))
            s2 = int(rng.integers(len(b.facets)))
            t2 = int(rng.choice(dual_graph(b).neighbors(s2)))
            ren = [{rel[v] for v in b.facets[k]} for k in (s2, t2)]
            assert sorting_identity(j, a.facets[s], a.facets[t], *ren)
            checked += 1


def sphere_corpus():
    out = []
    seed = 0
    while len(out) < 50:
        d = builders.random_sphere((4, 6, 8)[seed % 3], seed)
        seed += 1
        if manifold_precheck(d).passes:
            out.append(d)
    return out


def test_c6_oracle_equivalence():
    with criterion(6, "pi_group matches brute-force loops on 50 random spheres"):
        corpus = sphere_corpus()
        assert len(corpus) == 50
        for d in corpus:
            assert len(d.facets) <= 8 and d.dim == 2
            base = d.facets[0]
            g = pi_group(d, base)
            assert {as_frozen(p, base) for p in g} == oracle_group(d, base)
            h = odd_subgroup(d, base)
            assert h.is_subgroup(g)
            assert h == g


def test_c7_properties():
    with criterion(7, "composition, inversion, base change, Lagrange, witnesses"):
        rng = np.random.default_rng(7)
        complexes = [builders.random_pure(2, int(rng.integers(3, 9)), s, 6) for s in range(20)]
        complexes += [builders.random_pure(3, int(rng.integers(3, 9)), s, 7) for s in range(10)]
        complexes += [builders.torus_T(), builders.anti_torus_A(), builders.simplex_boundary(3),
                      builders.cross_polytope(3), builders.nonlocal_path()]
        for _ in range(500):
            d = complexes[rng.integers(len(complexes))]
            g = random_walk(d, rng, int(rng.integers(len(d.facets))), int(rng.integers(0, 12)))
            k = int(rng.integers(len(g)))
            whole = projectivity(d, g)
            assert projectivity(d, g[:k + 1]).then(projectivity(d, g[k:])) == whole
            assert projectivity(d, inverse_path(g)) == whole.inverse()
        groups = []
        for _ in range(100):
            d = complexes[rng.integers(len(complexes))]
            g = random_walk(d, rng, int(rng.integers(len(d.facets))), int(rng.integers(0, 8)))
            g0, g1, ok = base_change(d, g[0], g[-1], g)
            assert ok
            groups += [g0, g1]
        groups += [pi_group(d, 0) for d in complexes] + [odd_subgroup(d, 0) for d in complexes[-5:-1]]
        for grp in groups:
            assert factorial(len(grp.ground)) % grp.order == 0
        for d in complexes:
            bal = is_balanced(d)
            if bal.balanced:
                assert is_proper_complex_coloring(d, bal.coloring)


def test_c8_cycle_space():
    with criterion(8, "cycle-space rank and even vertex counts"):
        for p, rank in [(builders.cube(3), 5), (builders.dodecahedron(), 11),
                        (builders.simplex_polytope(3), 3), (builders.blend_M(), 8)]:
            cs = cycle_space_check(p)
            assert cs.rank == rank and cs.equal
        assert cycle_space_check(builders.blend_M()).expected == 21 - 14 + 1
        for p in [builders.cube(3), builders.cube(4), builders.permutohedron(4), builders.blend_M()]:
            assert even_vertex_parity(p)


def test_c9_subdivision(anti_torus, tetra):
    with criterion(9, "barycentric subdivisions are balanced"):
        for d in (anti_torus, tetra):
            sd = barycentric_subdivision(d)
            assert is_balanced(sd).balanced
            assert is_proper_complex_coloring(sd, face_dimension_coloring(sd))
