import pytest

from pxk import builders
from pxk.complex import (
    ComplexError,
    NotACycleError,
    barycentric_subdivision,
    build,
    codim2_faces,
    dual_graph,
    face_dimension_coloring,
    format_vertex,
    is_locally_strongly_connected,
    is_strongly_connected,
    join,
    join_with_relabeling,
    link,
    manifold_precheck,
    star,
    vertex_key,
)


def test_build_basics():
    single = build([{1, 2, 3}])
    assert single.dim == 2 and len(single.facets) == 1
    c3 = build([{1, 2}, {2, 3}, {1, 3}])
    assert c3.dim == 1 and len(c3.facets) == 3
    assert build([{1, 2, 3}, {1, 2}]).facets == (frozenset({1, 2, 3}),)


@pytest.mark.parametrize("bad", [[], [[1, 2], [2, 1]], [[1.5, 2]], [[True, 2]], [[None]]])
def test_build_rejects(bad):
    with pytest.raises(ComplexError):
        build(bad)


def test_vertex_order_and_format():
    assert sorted([("a",), "b", 3], key=vertex_key) == [3, "b", ("a",)]
    assert format_vertex((1, 2)) == "[1,2]"


def test_star_and_link(tetra, torus):
    st = star(tetra, [1])
    assert len(st.facets) == 3 and all(1 in f for f in st.facets)
    assert link(tetra, [1]).facets == build([{2, 3}, {2, 4}, {3, 4}]).facets
    for v in torus.vertices:
        assert len(star(torus, [v]).facets) == 6
        lk = link(torus, [v])
        assert len(lk.facets) == 6 and all(len(lk.edge_graph[u]) == 2 for u in lk.vertices)
    assert star(tetra, [1, 2, 3]).facets == (frozenset({1, 2, 3}),)


def test_link_of_missing_face(tetra):
    with pytest.raises(ComplexError):
        link(tetra, [1, 9])


def test_pentagonal_edge_link():
    # five tetrahedra around the edge {a, b}
    ring = [1, 2, 3, 4, 5]
    d = build([{"a", "b", ring[i], ring[(i + 1) % 5]} for i in range(5)])
    lk = link(d, ["a", "b"])
    assert len(lk.facets) == 5
    (k,) = [c for c in codim2_faces(d) if c.face == frozenset("ab")]
    assert k.length == 5 and k.parity == "odd"


def test_dual_graph(tetra):
    dg = dual_graph(tetra)
    assert dg.n_nodes == 4 and len(dg.edges) == 6
    assert dual_graph(build([{1, 2, 3}])).edges == {}
    seg = builders.simplex_polytope(1).dual
    assert dual_graph(seg).n_nodes == 2 and not dual_graph(seg).edges


def test_connectivity(tetra):
    assert is_strongly_connected(tetra) and is_locally_strongly_connected(tetra)
    np_ = builders.nonlocal_path()
    assert is_strongly_connected(np_) and not is_locally_strongly_connected(np_)
    assert not is_strongly_connected(build([{1, 2, 3}, {4, 5, 6}]))


def test_join():
    pt = build([{1}])
    assert join(pt, build([{2}])).facets == (frozenset({1, 2}),)
    c3 = builders.cycle(3)
    j, rel = join_with_relabeling(c3, c3)
    assert j.dim == 3 and len(j.facets) == 9 and all(len(f) == 4 for f in j.facets)
    assert set(rel) == {1, 2, 3} and not set(rel.values()) & {1, 2, 3}
    cone = join(c3, build([{"x"}]))
    assert len(cone.facets) == 3 and all("x" in f for f in cone.facets)


def test_subdivision():
    path = barycentric_subdivision(build([{1, 2}]))
    assert len(path.facets) == 2 and len(path.vertices) == 3
    hexagon = barycentric_subdivision(builders.cycle(3))
    assert len(hexagon.facets) == 6 and all(len(hexagon.edge_graph[v]) == 2 for v in hexagon.vertices)
    col = face_dimension_coloring(hexagon)
    assert set(col.values()) == {0, 1}


def test_parities(tetra, torus):
    assert {c.parity for c in codim2_faces(tetra)} == {"odd"}
    assert [c.length for c in codim2_faces(torus)] == [6] * 9
    assert {c.parity for c in codim2_faces(torus)} == {"even"}


def test_codim2_strict():
    with pytest.raises(NotACycleError):
        codim2_faces(builders.nonlocal_path(), strict=True)


def test_manifold_precheck(torus):
    assert manifold_precheck(torus).passes and manifold_precheck(torus).dim == 2
    assert manifold_precheck(builders.simplex_boundary(4)).passes
    branched = build([{1, 2, 3}, {1, 2, 4}, {1, 2, 5}])
    diag = manifold_precheck(branched)
    assert not diag.pseudomanifold and not diag.passes
