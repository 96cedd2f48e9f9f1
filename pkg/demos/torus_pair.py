# %% [markdown]
# Two triangulated tori on the same 9 vertices.  Both have hexagonal vertex
# links and identical f-vectors, yet the groups of projectivities differ.

# %%
from pxk import builders, odd_subgroup, pi_group, projectivity, verify_generation

T = builders.torus_T()
A = builders.anti_torus_A()
base = (1, 2, 4)
print(T.f_vector, A.f_vector)

# %%
# Walk once around each direction of the torus.
p = [(1, 2, 4), (2, 4, 5), (4, 5, 7), (5, 7, 8), (1, 7, 8), (1, 2, 8), (1, 2, 4)]
q = [(1, 2, 4), (2, 4, 5), (2, 3, 5), (3, 5, 6), (1, 3, 6), (1, 4, 6), (1, 2, 4)]
q2 = [(1, 2, 4), (2, 4, 5), (2, 5, 6), (2, 3, 6), (1, 3, 6), (1, 4, 6), (1, 2, 4)]

for name, cx, loop in [("T, p", T, p), ("T, q", T, q), ("A, p", A, p), ("A, q'", A, q2)]:
    print(name, projectivity(cx, loop).as_permutation())

# %%
# All vertex links are even, so the local part of the group is trivial on
# both; the 3-cycle on A comes purely from going around the torus.
for name, cx in [("T", T), ("A", A)]:
    g, h = pi_group(cx, base), odd_subgroup(cx, base)
    print(name, "order", g.order, "local part", h.order)

print(verify_generation(A, base, [p, q2]))
