# %% [markdown]
# Even simple polytopes: every 2-face has an even number of vertices.  The
# script evaluates four conditions separately on a few polytopes and shows
# that they always switch together.

# %%
from pxk import builders, coloring_theorem_check
from pxk.polytope import cycle_space_check, pi_group_polytope, product, s_bounds

corpus = {
    "tetrahedron": builders.simplex_polytope(3),
    "cube": builders.cube(3),
    "4-cube": builders.cube(4),
    "dodecahedron": builders.dodecahedron(),
    "permutohedron": builders.permutohedron(4),
    "blend of cubes": builders.blend_M(),
    "prism": product(builders.simplex_polytope(2), builders.simplex_polytope(1)),
}

# %%
print(f"{'':16}{'even':>6}{'bip':>6}{'bal':>6}{'gamma':>6}{'|Pi|':>6}")
for name, p in corpus.items():
    ct = coloring_theorem_check(p)
    g = pi_group_polytope(p)
    print(f"{name:16}{ct.even!s:>6}{ct.bipartite!s:>6}{ct.balanced!s:>6}{ct.gamma:>6}{g.order:>6}")

# %%
# Bounds on the free torus rank, and the cycle space of the vertex-edge graph.
m = corpus["blend of cubes"]
print("f-vector", m.f_vector, "s-bounds", tuple(s_bounds(m)))
print("2-faces span the cycle space:", cycle_space_check(m))
