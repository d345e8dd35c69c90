import random

import pytest
from hypothesis import given, settings, strategies as st

from graphprod.errors import MixedGraphError, UnknownVertexError
from graphprod.graphspec import INF, ClopenBoxes, Coloring, GraphInstance, fixtures
from graphprod.oracle import oracle_equal
from graphprod.baire import VertexPath
from graphprod.words import Word, canonical, concat, equal, invert, reduce, truncate_word
from graphprod.checks import random_word, standard_fixtures

from conftest import make_graph, shuffle_class, word


def test_word_invariants():
    g = make_graph({"a": 3, "b": INF})
    w = word(g, ("a", 1), ("a", 1), ("b", 2), ("b", -2), ("a", -1))
    assert w.syllables == ((g.oracle.names["a"], 1),)
    assert word(g, ("a", -1)).syllables[0][1] == 2
    assert len(word(g, ("a", 3))) == 0


def test_concat_examples():
    g = make_graph({"a": INF})
    assert concat(word(g, ("a", 1)), word(g, ("a", -1))) == Word.identity(g.coloring)
    g2 = make_graph({"a": 2})
    assert not concat(word(g2, ("a", 1)), word(g2, ("a", 1)))
    g3 = make_graph({"a": INF, "b": 2})
    got = concat(word(g3, ("a", 1), ("b", 1)), word(g3, ("b", 1), ("a", 1)))
    assert got == word(g3, ("a", 2))
    assert oracle_equal(got, word(g3, ("a", 1), ("b", 1), ("b", 1), ("a", 1)), g3, insertions=True)


def test_concat_rejects_mixed_colorings():
    with pytest.raises(MixedGraphError):
        concat(word(make_graph({"a": 2}), ("a", 1)), word(make_graph({"a": 3}), ("a", 1)))


def test_invert_examples():
    g = make_graph({"a": INF, "b": INF})
    assert invert(Word.identity(g.coloring)) == Word.identity(g.coloring)
    assert invert(word(g, ("a", 1), ("b", 2))) == word(g, ("b", -2), ("a", -1))
    g3 = make_graph({"a": 3})
    assert invert(word(g3, ("a", 1))).syllables[0][1] == 2


def test_reduce_examples():
    g = make_graph({"a": 2, "b": INF}, [("a", "b")])
    w = word(g, ("a", 1), ("b", 1), ("a", 1))
    assert reduce(w, g) == word(g, ("b", 1))
    assert oracle_equal(w, word(g, ("b", 1)), g, insertions=True)
    free = make_graph({"a": INF, "b": INF})
    w = word(free, ("a", 1), ("b", 1), ("a", -1))
    assert reduce(w, free) == w
    assert reduce(word(free, ("a", 1), ("b", 1), ("b", -1), ("a", 1)), free) == word(free, ("a", 2))


def test_reduce_merges_across_commuting_block():
    g = make_graph({"a": INF, "b": INF, "c": INF}, [("a", "b"), ("a", "c")])
    w = word(g, ("a", 1), ("b", 1), ("c", 1), ("a", -1), ("b", 1))
    assert reduce(w, g) == word(g, ("b", 1), ("c", 1), ("b", 1))


def test_canonical_examples(commuting2, free2):
    assert canonical(word(commuting2, ("b", 1), ("a", 1)), commuting2) == word(commuting2, ("a", 1), ("b", 1))
    assert canonical(word(free2, ("b", 1), ("a", 1)), free2) == word(free2, ("b", 1), ("a", 1))


def test_canonical_three_vertex_example():
    g = make_graph({"a": INF, "b": INF, "c": INF}, [("a", "c"), ("b", "c")])
    w = word(g, ("c", 1), ("a", 1), ("b", 1))
    # brute force: enumerate the whole shuffle class and take the least word
    from graphprod.baire import vertex_key

    least = min(shuffle_class(w, g), key=lambda s: [(vertex_key(v), e) for v, e in s])
    assert least == word(g, ("a", 1), ("b", 1), ("c", 1)).syllables
    assert canonical(w, g).syllables == least


@pytest.mark.parametrize("seed", range(3))
def test_canonical_is_least_of_shuffle_class(seed):
    from graphprod.baire import vertex_key

    rng = random.Random(seed)
    g = fixtures("half-graph", size=3)
    for _ in range(100):
        w = reduce(random_word(rng, g, max_len=6), g)
        least = min(shuffle_class(w, g), key=lambda s: [(vertex_key(v), e) for v, e in s])
        assert canonical(w, g).syllables == least


def test_equal_examples(commuting2, free2):
    ab = lambda g: word(g, ("a", 1), ("b", 1))
    ba = lambda g: word(g, ("b", 1), ("a", 1))
    assert equal(ab(commuting2), ba(commuting2), commuting2)
    assert not equal(ab(free2), ba(free2), free2)
    assert not oracle_equal(ab(free2), ba(free2), free2, max_len=6, insertions=True)
    w = word(free2, ("a", 2), ("b", -1))
    assert equal(w, concat(w, Word.identity(free2.coloring)), free2)


def test_truncate_word_examples():
    g = GraphInstance(ClopenBoxes([]), Coloring({}, INF))
    eta, nu = VertexPath([0, 1], 0), VertexPath([0, 2], 0)
    w = Word([(eta, -1), (nu, 1)], g.coloring)
    assert not truncate_word(w, 1)
    assert truncate_word(w, 2).syllables == (((0, 1), -1), ((0, 2), 1))
    w2 = Word([(VertexPath([0], 0), 2), (VertexPath([1], 0), 1)], g.coloring)
    assert truncate_word(w2, 3).syllables == (((0, 0, 0), 2), ((1, 0, 0), 1))


def test_unknown_vertex_surfaces():
    g = make_graph({"a": INF, "b": INF})
    stranger = VertexPath([7, 7], 0)
    w = Word([(g.oracle.names["a"], 1), (stranger, 1), (g.oracle.names["a"], 1)], g.coloring)
    with pytest.raises(UnknownVertexError):
        reduce(w, g)


def test_word_file_roundtrip():
    g = fixtures("half-graph", size=3)
    w = random_word(random.Random(1), g)
    assert Word.from_json(w.to_json(), g.coloring) == w
    t = truncate_word(w, 2)
    assert Word.from_json(t.to_json(), g.coloring) == t
    with pytest.raises(ValueError):
        Word.from_json([[{"prefix": [0], "tail": 0}, 0]], g.coloring)


# properties over the standard fixtures

FIXTURES = standard_fixtures()


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(sorted(FIXTURES)), st.integers(0, 10**6))
def test_group_laws(name, seed):
    g = FIXTURES[name]
    rng = random.Random(seed)
    u, v, w = (random_word(rng, g, max_len=5) for _ in range(3))
    assert not canonical(concat(w, invert(w)), g)
    assert canonical(concat(concat(u, v), w), g) == canonical(concat(u, concat(v, w)), g)
    assert equal(invert(invert(w)), w, g)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(sorted(FIXTURES)), st.integers(0, 10**6))
def test_reduction_order_does_not_matter(name, seed):
    g = FIXTURES[name]
    rng = random.Random(seed)
    w = random_word(rng, g)
    a, b = reduce(w, g), reduce(w, g, rng=rng)
    assert len(a) == len(b)
    assert canonical(b, g) == canonical(w, g)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(sorted(FIXTURES)), st.integers(0, 10**6))
def test_canonical_is_idempotent_and_reduced(name, seed):
    g = FIXTURES[name]
    c = canonical(random_word(random.Random(seed), g), g)
    assert canonical(c, g) == c
    assert reduce(c, g) == c
