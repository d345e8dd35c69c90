"""Normal forms in a graph product of cyclic groups.

Builds a three-vertex graph by hand, reduces a few words and checks the
answers against the brute-force rewriting oracle.
"""

from graphprod import INF, Coloring, FiniteExplicit, GraphInstance, VertexPath, Word
from graphprod.oracle import oracle_equal
from graphprod.words import canonical, concat, invert

# %%
# Vertices live in Baire space; the first coordinate is the color code, so
# a has order 2 and b, c are infinite cyclic.
a, b, c = VertexPath([2, 1], 0), VertexPath([0, 2], 0), VertexPath([0, 3], 0)
g = GraphInstance(
    FiniteExplicit({"a": a, "b": b, "c": c}, [("a", "b"), ("b", "a"), ("b", "c"), ("c", "b")]),
    Coloring({0: INF, 2: 2}),
)
print("order of a:", g.order_of(a), " order of b:", g.order_of(b))


def show(label, w):
    print(f"{label:28s}", " ".join(f"{v!r}^{e}" for v, e in w.syllables) or "e")


# %%
# a commutes with b, so a b a collapses to b.
w = Word([(a, 1), (b, 1), (a, 1)], g.coloring)
show("a b a", w)
show("normal form", canonical(w, g))

# %%
# c and a do not commute: a c a stays put.
w = Word([(a, 1), (c, 1), (a, 1)], g.coloring)
show("a c a", canonical(w, g))

# %%
# w w^-1 is trivial for any w.
w = Word([(c, 2), (a, 1), (b, -1), (c, 1)], g.coloring)
show("w w^-1", canonical(concat(w, invert(w)), g))

# %%
# Cross-check against the oracle, which only rewrites letters.
u = Word([(b, 1), (a, 1), (c, 1)], g.coloring)
v = Word([(a, 1), (b, 1), (c, 1)], g.coloring)
print("b a c == a b c ?", canonical(u, g) == canonical(v, g), "| oracle:", oracle_equal(u, v, g))
u = Word([(c, 1), (a, 1)], g.coloring)
v = Word([(a, 1), (c, 1)], g.coloring)
print("c a == a c ?    ", canonical(u, g) == canonical(v, g), "| oracle:", oracle_equal(u, v, g))
