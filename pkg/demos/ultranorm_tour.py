"""The ultranorm on a graph product over Baire space.

Nearby generators are close in the group metric, and the metric restricted to
generators is exactly the Baire metric.
"""

import random

from graphprod import ClopenBoxes, Coloring, GraphInstance, INF, VertexPath, Word
from graphprod.baire import baire_distance
from graphprod.checks import random_word
from graphprod.graphspec import fixtures
from graphprod.ultranorm import distance, two_sided, ultranorm
from graphprod.words import concat

# %%
# The free product: no edges at all.
g = GraphInstance(ClopenBoxes([]), Coloring({}, INF))
eta = VertexPath([0, 1], 0)
for nu in (VertexPath([1], 0), VertexPath([0, 2], 0), VertexPath([0, 1, 7], 0), VertexPath([0, 1, 0, 0, 3], 0)):
    d = distance(Word([(eta, 1)], g.coloring), Word([(nu, 1)], g.coloring), g)
    print(f"d({eta!r}, {nu!r}) = {d.decimal():8s}  Baire: {baire_distance(eta, nu).decimal()}")

# %%
# The norm is the first depth at which the truncated word survives.
w = Word([(eta, 1), (VertexPath([0, 1, 5], 0), -1)], g.coloring)
r = ultranorm(w, g)
print("\nnorm of", w, "->", f"n = {r.n}, value {r.value.decimal()}")

# %%
# Left invariance and the strong triangle inequality on a random box graph.
g = fixtures("random-boxes", seed=3)
rng = random.Random(0)
x, y, z = (random_word(rng, g, max_len=4) for _ in range(3))
print("\nd(x, y)   =", distance(x, y, g).decimal())
print("d(zx, zy) =", distance(concat(z, x), concat(z, y), g).decimal())
dxz, dxy, dyz = distance(x, z, g), distance(x, y, g), distance(y, z, g)
print("d(x, z) <= max(d(x, y), d(y, z)):", dxz <= max(dxy, dyz))

# %%
# The two-sided metric is a plain rational.
print("D(x, y) =", two_sided(x, y, g))
