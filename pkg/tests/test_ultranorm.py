import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from graphprod.baire import UltraValue, VertexPath, ZERO
from graphprod.checks import random_word, standard_fixtures
from graphprod.graphspec import INF, ClopenBoxes, Coloring, GraphInstance
from graphprod.oracle import DownwardOracle
from graphprod.ultranorm import distance, rn_key, two_sided, ultranorm
from graphprod.words import Word, canonical, concat, invert, truncate_word


def free_graph():
    return GraphInstance(ClopenBoxes([]), Coloring({}, INF))


def brute_norm_depth(w, g, limit=12):
    """Least depth whose truncated image is nontrivial, decided by rewriting alone."""
    if not canonical(w, g):
        return None
    for n in range(1, limit + 1):
        t = g.at_depth(n)
        image = truncate_word(w, n)
        if not DownwardOracle(t).equal(image, Word.identity(g.coloring)):
            return n
    raise AssertionError("no separating depth below the limit")


def test_identity_has_norm_zero():
    g = free_graph()
    r = ultranorm(Word.identity(g.coloring), g)
    assert r.is_identity and r.value == ZERO and r.n is None


def test_norm_examples():
    g = free_graph()
    eta, nu = VertexPath([0, 1], 0), VertexPath([0, 2], 0)
    r = ultranorm(Word([(eta, -1), (nu, 1)], g.coloring), g)
    assert r.n == 2 and r.value.as_fraction() == Fraction(1, 4)
    assert r.value.decimal() == "0.25"
    r = ultranorm(Word([(eta, 1)], g.coloring), g)
    assert r.n == 1 and r.value == UltraValue.exp(1)


def test_distance_examples():
    g = free_graph()
    eta, nu, mu = VertexPath([0, 1], 0), VertexPath([0, 2], 0), VertexPath([1], 0)
    W = lambda *s: Word(s, g.coloring)
    assert distance(W((eta, 1)), W((nu, 1)), g) == UltraValue.exp(2)
    assert distance(W((eta, 1)), W((mu, 1)), g) == UltraValue.exp(1)
    assert distance(W((eta, 1)), W((eta, 1)), g) == ZERO
    assert two_sided(W((eta, 1)), W((mu, 1)), g) == 1


def test_norm_of_truncation_trivial_word():
    # [0,1] and [0,1,5] agree to depth 2, so the product dies at depths 1 and 2
    g = free_graph()
    u, v = VertexPath([0, 1], 0), VertexPath([0, 1, 5], 0)
    w = Word([(u, 1), (v, -1)], g.coloring)
    assert ultranorm(w, g).n == 3 == brute_norm_depth(w, g)


def test_rn_key_examples():
    g = free_graph()
    u, v = VertexPath([0, 1, 3], 0), VertexPath([0, 1, 4], 0)
    assert rn_key(Word([(u, 2)], g.coloring), g, 2) == (((0, 1), 2),)
    assert rn_key(Word([(u, 2)], g.coloring), g, 2) == rn_key(Word([(v, 2)], g.coloring), g, 2)
    assert rn_key(Word([(u, 2)], g.coloring), g, 3) != rn_key(Word([(v, 2)], g.coloring), g, 3)
    assert rn_key(Word.identity(g.coloring), g, 4) == ()
    with pytest.raises(ValueError):
        rn_key(Word.identity(g.coloring), g, 0)


FIXTURES = standard_fixtures()


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_norm_matches_brute_force(name):
    g = FIXTURES[name]
    rng = random.Random(name)
    for _ in range(25):
        w = random_word(rng, g, max_len=4, max_exp=2, depth=4)
        r = ultranorm(w, g)
        assert r.n == brute_norm_depth(w, g), w


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(sorted(FIXTURES)), st.integers(0, 10**6))
def test_ultranorm_axioms(name, seed):
    g = FIXTURES[name]
    rng = random.Random(seed)
    u, v = random_word(rng, g, max_len=5), random_word(rng, g, max_len=5)
    nu, nv = ultranorm(u, g).value, ultranorm(v, g).value
    assert ultranorm(invert(u), g).value == nu
    assert ultranorm(concat(u, v), g).value <= max(nu, nv)
    assert (nu == ZERO) == (not canonical(u, g))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(sorted(FIXTURES)), st.integers(0, 10**6))
def test_left_invariance(name, seed):
    g = FIXTURES[name]
    rng = random.Random(seed)
    x, y, z = (random_word(rng, g, max_len=4) for _ in range(3))
    assert distance(concat(z, x), concat(z, y), g) == distance(x, y, g)
    assert distance(x, y, g) == distance(y, x, g)
