import itertools

import pytest

from graphprod.baire import VertexPath
from graphprod.graphspec import INF, Coloring, FiniteExplicit, GraphInstance, color_code
from graphprod.words import Word


def make_graph(orders, edges=()):
    """Finite graph on named vertices; ``orders`` maps name -> order, in vertex order.

    Vertex paths are ``(code, index)`` so names listed earlier sort first among
    vertices of the same order.
    """
    verts = {name: VertexPath([color_code(o), i + 1], 0) for i, (name, o) in enumerate(orders.items())}
    coloring = Coloring({color_code(o): o for o in orders.values()}, INF)
    sym = []
    for x, y in edges:
        sym += [(x, y), (y, x)]
    return GraphInstance(FiniteExplicit(verts, sym), coloring)


def word(g, *syllables):
    """``word(g, ("a", 1), ("b", -2))`` over the named vertices of ``g``."""
    names = g.oracle.names
    return Word([(names[n], e) for n, e in syllables], g.coloring)


def shuffle_class(w, g):
    """Every word reachable from ``w`` by swapping adjacent commuting syllables."""
    seen = {w.syllables}
    todo = [w.syllables]
    while todo:
        s = todo.pop()
        for i in range(len(s) - 1):
            (u, _), (v, _) = s[i], s[i + 1]
            if u != v and g.adjacent(u, v):
                t = s[:i] + (s[i + 1], s[i]) + s[i + 2 :]
                if t not in seen:
                    seen.add(t)
                    todo.append(t)
    return seen


@pytest.fixture
def free2():
    return make_graph({"a": INF, "b": INF})


@pytest.fixture
def commuting2():
    return make_graph({"a": INF, "b": INF}, [("a", "b")])


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines.values():
            terminalreporter.write_line(line)
