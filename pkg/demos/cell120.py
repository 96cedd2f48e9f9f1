# %% [markdown]
# The 120-cell: 600 vertices, 120 dodecahedral cells.  Every 2-face is a
# pentagon, so the group of projectivities is the full symmetric group on
# the four cells through a vertex.

# %%
import time

from pxk import builders
from pxk.permgroup import describe
from pxk.polytope import pi_group_polytope

t = time.perf_counter()
P = builders.cell120()
g = pi_group_polytope(P)
print(P.f_vector, describe(g), f"{time.perf_counter() - t:.2f}s")
