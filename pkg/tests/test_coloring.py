import pytest

from pxk import builders
from pxk.coloring import (
    Graph,
    chromatic_number,
    color_graph,
    find_k_coloring,
    is_balanced,
    is_bipartite,
    is_proper,
    is_proper_complex_coloring,
)
from pxk.complex import barycentric_subdivision, build


def cycle_graph(n):
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph(range(n), [(i, j) for i in range(n) for j in range(i + 1, n)])


def test_chromatic_numbers():
    assert chromatic_number(cycle_graph(5)) == 3
    assert chromatic_number(cycle_graph(6)) == 2
    assert chromatic_number(complete(4)) == 4
    assert chromatic_number(builders.dodecahedron().facet_graph()) == 4
    assert chromatic_number(Graph()) == 0


def test_exact_coloring_is_proper():
    g = builders.permutohedron(4).facet_graph()
    res = color_graph(g)
    assert res.exact and is_proper(g, res.coloring)
    assert len(set(res.coloring.values())) == res.number


def test_large_graph_falls_back():
    g = cycle_graph(101)
    with pytest.warns(UserWarning, match="upper bound"):
        res = color_graph(g)
    assert not res.exact and res.number >= 3 and is_proper(g, res.coloring)
    with pytest.warns(UserWarning):
        assert chromatic_number(g) is None


def test_find_k_coloring():
    assert find_k_coloring(cycle_graph(5), 2) is None
    col = find_k_coloring(cycle_graph(5), 3)
    assert is_proper(cycle_graph(5), col)


def test_bipartite():
    cube = is_bipartite(builders.cube(3).graph())
    assert cube.bipartite and sorted(map(len, cube.parts)) == [4, 4]
    dod = is_bipartite(builders.dodecahedron().graph())
    assert not dod.bipartite
    cyc = dod.odd_cycle
    assert len(cyc) % 2 == 1
    adj = builders.dodecahedron().neighbors
    assert all(b in adj[a] for a, b in zip(cyc, cyc[1:] + cyc[:1]))


def test_balanced_examples(tetra, anti_torus):
    octa = builders.cross_polytope(3)
    ok, col = is_balanced(octa)
    assert ok and is_proper_complex_coloring(octa, col)
    assert all(col[i] == col[-i] for i in (1, 2, 3))
    assert not is_balanced(tetra).balanced
    sd = barycentric_subdivision(anti_torus)
    assert is_balanced(sd).balanced


def test_balanced_without_local_connectivity():
    res = is_balanced(builders.nonlocal_path())
    assert res.method == "exact-search"
    assert res.balanced and is_proper_complex_coloring(builders.nonlocal_path(), res.coloring)


def test_balanced_disconnected():
    d = build([{1, 2, 3}, {4, 5, 6}])
    res = is_balanced(d)
    assert res.balanced and is_proper_complex_coloring(d, res.coloring)


def test_balanced_rejects_impure():
    with pytest.raises(ValueError):
        is_balanced(build([{1, 2, 3}, {3, 4}]))
