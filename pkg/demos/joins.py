# %% [markdown]
# Joins multiply groups of projectivities.  An odd polygon contributes a
# transposition, an even one nothing.

# %%
from pxk import builders
from pxk.complex import join_with_relabeling
from pxk.projectivity import join_product, pi_group

for a, b in [(3, 3), (4, 3), (4, 6), (5, 7)]:
    jp = join_product(builders.cycle(a), 0, builders.cycle(b), 0)
    print(f"C{a} * C{b}: order {jp.group.order}, partition {jp.partition}, product holds {jp.holds}")

# %%
# Suspension (join with a pair of points) leaves the group unchanged.
d = builders.simplex_boundary(3)
susp, _ = join_with_relabeling(d, builders.make("simplex_boundary", 1))
print(pi_group(d, 0).order, pi_group(susp, 0).order)
