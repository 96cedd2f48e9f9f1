import pytest

from pxk import builders
from pxk.builders import BuilderError, BuilderSpec, is_hexagonal_surface, make
from pxk.complex import link


def test_torus_facets_pinned(torus, anti_torus):
    for f in [(1, 2, 4), (2, 4, 5), (4, 5, 7), (5, 7, 8), (1, 7, 8), (1, 2, 8)]:
        assert torus.is_facet(f)
    assert anti_torus.is_facet((2, 5, 6)) and anti_torus.is_facet((2, 3, 6))
    assert torus.is_facet((2, 3, 5)) and torus.is_facet((3, 5, 6))
    assert not anti_torus.is_facet((2, 3, 5))


def test_torus_pair_invariants(torus, anti_torus):
    for d in (torus, anti_torus):
        assert d.dim == 2 and len(d.facets) == 18
        assert is_hexagonal_surface(d)
    assert torus.f_vector == anti_torus.f_vector
    deg = lambda d: sorted(len(d.edge_graph[v]) for v in d.vertices)  # noqa: E731
    assert deg(torus) == deg(anti_torus)
    assert torus.euler_characteristic() == 0


def test_blend():
    m = builders.blend_M()
    assert len(m.facets) == 9 and len(m.vertices) == 14 and len(m.edges) == 21


def test_cross_polytope_is_dual_cube():
    for d in (2, 3, 4):
        cross = builders.cross_polytope(d)
        dual = builders.cube(d).dual
        assert cross.f_vector == dual.f_vector
        assert cross == dual  # facets of the cube are named +-i as well


def test_make_forms():
    assert make("cube", 3).f_vector == (8, 12, 6)
    assert make("cube 3").f_vector == (8, 12, 6)
    assert make(BuilderSpec.parse("cycle 5")).f_vector == (5, 5)
    assert make("permutohedron").f_vector == (24, 36, 14)


@pytest.mark.parametrize("bad", [("nosuch",), ("cube",), ("cube", 0), ("cycle", 2),
                                 ("random_sphere", 5, 1)])
def test_make_errors(bad):
    with pytest.raises(BuilderError):
        make(*bad)


def test_random_pure_reproducible():
    a = builders.random_pure(2, 6, 11)
    assert a == builders.random_pure(2, 6, 11)
    assert a.dim == 2 and len(a.facets) <= 6


def test_random_sphere():
    for seed in range(10):
        s = builders.random_sphere(10, seed)
        assert len(s.facets) == 10 and s.euler_characteristic() == 2
        assert all(len(link(s, [v]).facets) >= 3 for v in s.vertices)
    assert builders.random_sphere(8, 4) == builders.random_sphere(8, 4)


def test_dodecahedron():
    d = builders.dodecahedron()
    assert d.f_vector == (20, 30, 12)
    assert sorted({t.size for t in d.two_faces}) == [5]


@pytest.mark.slow
def test_cell120_data():
    c = builders.cell120()
    assert c.dim == 4 and c.f_vector == (600, 1200, 720, 120)
    assert {t.size for t in c.two_faces} == {5}
