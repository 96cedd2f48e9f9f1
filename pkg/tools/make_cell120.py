"""Regenerate src/pxk/data/cell120.json.

The 120-cell is dual to the 600-cell.  The 600-cell's 120 vertices are the
unit icosians; its 600 tetrahedra are the 4-cliques of the graph joining
vertices at distance 1/phi.  Each tetrahedron becomes a vertex of the
120-cell lying in the four facets named by its corners.
"""

import json
from itertools import combinations, permutations, product
from pathlib import Path

import numpy as np

phi = (1 + 5 ** 0.5) / 2


def even(p):
    inv = sum(p[i] > p[j] for i, j in combinations(range(4), 2))
    return inv % 2 == 0


pts = set()
for i in range(4):
    for s in (1, -1):
        v = [0.0] * 4
        v[i] = s
        pts.add(tuple(v))
for signs in product((0.5, -0.5), repeat=4):
    pts.add(signs)
base = (phi / 2, 0.5, 1 / (2 * phi), 0.0)
for p in permutations(range(4)):
    if not even(p):
        continue
    for signs in product((1, -1), repeat=3):
        v = [0.0] * 4
        for k in range(3):
            v[p[k]] = signs[k] * base[k]
        pts.add(tuple(round(x, 12) for x in v))
x = np.array(sorted(pts))
assert len(x) == 120, len(x)
dist = np.linalg.norm(x[:, None] - x[None], axis=-1)
adj = np.isclose(dist, 1 / phi)
assert (adj.sum(axis=1) == 12).all()
nb = [set(np.nonzero(adj[i])[0]) for i in range(120)]
tets = set()
for a in range(120):
    for b in nb[a]:
        if b <= a:
            continue
        common = nb[a] & nb[b]
        for c, d in combinations(sorted(common), 2):
            if adj[c, d]:
                tets.add(tuple(sorted((a, b, int(c), int(d)))))
assert len(tets) == 600, len(tets)
data = {
    "dim": 4,
    "facets": [f"F{i + 1}" for i in range(120)],
    "vertices": {f"v{k + 1}": [f"F{i + 1}" for i in t] for k, t in enumerate(sorted(tets))},
}
out = Path(__file__).resolve().parents[1] / "src" / "pxk" / "data" / "cell120.json"
out.write_text(json.dumps(data, indent=None, separators=(",", ":")) + "\n")
print(f"wrote {out}")
