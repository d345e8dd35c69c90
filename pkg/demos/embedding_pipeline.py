"""From a finite metric graph to a group metric.

A colored graph on a rational metric space is pushed into Baire space, the
construction is checked clause by clause, and the image graph is handed to the
ultranorm.
"""

from fractions import Fraction

from graphprod.graphspec import INF
from graphprod.embed import MetricGraphInstance, dprime, eta_of, to_graph_instance, verify_lemma
from graphprod.ultranorm import distance
from graphprod.words import Word

# %%
# Four points on a line and a path graph.  p, q, r share a color; s is infinite.
xs = [Fraction(0), Fraction(1, 16), Fraction(1, 2), Fraction(3)]
n = len(xs)
inst = MetricGraphInstance(
    points=["p", "q", "r", "s"],
    metric=[[abs(x - y) for y in xs] for x in xs],
    colors=[3, 3, 3, INF],
    edges=[(i, i) for i in range(n)] + [(0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 2)],
).validate()

for name in inst.points:
    print(f"eta_{name} = {eta_of(inst, name)!r}")

# %%
print()
for clause in verify_lemma(inst):
    print(f"[{'PASS' if clause.passed else 'FAIL'}] {clause.name}")

# %%
# The new ultrametric keeps p and q close, because they are close in the line.
print()
for u, v in [("p", "q"), ("p", "r"), ("p", "s")]:
    print(f"d'({u}, {v}) = {dprime(inst, u, v)}")

# %%
# Push the image graph through the group metric.
g = to_graph_instance(inst)
print()
gens = {name: Word([(eta_of(inst, name), 1)], g.coloring) for name in inst.points}
for u, v in [("p", "q"), ("p", "r"), ("p", "s")]:
    print(f"d({u}, {v}) in the group = {distance(gens[u], gens[v], g).decimal()}")
