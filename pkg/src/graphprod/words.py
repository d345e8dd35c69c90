"""Words in a graph product of cyclic groups and the word problem.

A :class:`Word` is a sequence of syllables ``(vertex, exponent)`` in which
consecutive vertices differ and exponents are kept in canonical range
(``1..m-1`` for a generator of finite order ``m``).  The constructor restores
these invariants, so every ``Word`` spells its element in free-reduced form.

Deciding equality needs the edge relation.  :func:`reduce` repeatedly merges
two syllables of the same vertex separated only by syllables whose vertices
commute with it; the result has the fewest possible syllables.  Reduced
spellings of one element differ only by swapping adjacent commuting
syllables, so :func:`canonical` picks the lexicographically least one.

The graph argument ``g`` is anything with ``adjacent(u, v)`` and a
``coloring``: a :class:`~graphprod.graphspec.GraphInstance` or a
:class:`~graphprod.graphspec.TruncatedGraph`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from .baire import Prefix, Vertex, VertexPath, truncate, vertex_key
from .errors import MixedGraphError
from .graphspec import INF, Coloring, Order

Syllable = Tuple[Vertex, int]


def normalize_exponent(e: int, order: Order) -> int:
    """Canonical exponent; 0 means the syllable vanishes."""
    return e if order is INF else e % order


@dataclass(frozen=True, init=False)
class Word:
    syllables: Tuple[Syllable, ...]
    coloring: Coloring

    def __init__(self, syllables: Iterable[Sequence], coloring: Coloring):
        stack: List[List] = []
        for v, e in syllables:
            if isinstance(e, bool) or not isinstance(e, int):
                raise TypeError(f"exponent must be an integer, got {e!r}")
            if not isinstance(v, VertexPath):
                v = tuple(v)
            if stack and stack[-1][0] == v:
                stack[-1][1] = normalize_exponent(stack[-1][1] + e, coloring.order_of(v))
                if stack[-1][1] == 0:
                    stack.pop()
                continue
            e = normalize_exponent(e, coloring.order_of(v))
            if e:
                stack.append([v, e])
        object.__setattr__(self, "syllables", tuple((v, e) for v, e in stack))
        object.__setattr__(self, "coloring", coloring)

    @classmethod
    def identity(cls, coloring: Coloring) -> "Word":
        return cls((), coloring)

    @classmethod
    def gen(cls, coloring: Coloring, v: Vertex, e: int = 1) -> "Word":
        return cls([(v, e)], coloring)

    def __len__(self) -> int:
        return len(self.syllables)

    def __iter__(self) -> Iterator[Syllable]:
        return iter(self.syllables)

    def __bool__(self) -> bool:
        return bool(self.syllables)

    def vertices(self) -> List[Vertex]:
        return [v for v, _ in self.syllables]

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __repr__(self) -> str:
        if not self.syllables:
            return "Word(e)"
        return "Word(" + " ".join(f"{v!r}^{e}" for v, e in self.syllables) + ")"

    def to_json(self) -> list:
        return [[v.to_json() if isinstance(v, VertexPath) else list(v), e] for v, e in self.syllables]

    @classmethod
    def from_json(cls, obj, coloring: Coloring) -> "Word":
        if not isinstance(obj, list):
            raise ValueError("word must be a list of [vertex, exponent] pairs")
        syl = []
        for item in obj:
            if not isinstance(item, list) or len(item) != 2:
                raise ValueError(f"malformed syllable {item!r}")
            v, e = item
            if isinstance(e, bool) or not isinstance(e, int) or e == 0:
                raise ValueError(f"exponent must be a nonzero integer, got {e!r}")
            if isinstance(v, dict):
                v = VertexPath.from_json(v)
            elif isinstance(v, list) and all(isinstance(x, int) and not isinstance(x, bool) and x >= 0 for x in v):
                v = tuple(v)
            else:
                raise ValueError(f"malformed vertex {v!r}")
            syl.append((v, e))
        return cls(syl, coloring)


def _same_coloring(a: Coloring, b: Coloring) -> None:
    if a != b:
        raise MixedGraphError("words over different colorings cannot be combined")


def concat(w1: Word, w2: Word) -> Word:
    _same_coloring(w1.coloring, w2.coloring)
    return Word(w1.syllables + w2.syllables, w1.coloring)


def invert(w: Word) -> Word:
    return Word([(v, -e) for v, e in reversed(w.syllables)], w.coloring)


class _Adjacency:
    """Memoized symmetric adjacency for distinct vertices."""

    def __init__(self, g):
        self.g = g
        self.cache = {}

    def __call__(self, u, v) -> bool:
        if u == v:
            return True
        key = (u, v) if vertex_key(u) <= vertex_key(v) else (v, u)
        hit = self.cache.get(key)
        if hit is None:
            hit = self.cache[key] = bool(self.g.adjacent(u, v))
        return hit


def _reducible_pairs(syl, adj, first_only: bool):
    pairs = []
    for p in range(len(syl)):
        a = syl[p][0]
        for q in range(p + 1, len(syl)):
            b = syl[q][0]
            if b == a:
                pairs.append((p, q))
                if first_only:
                    return pairs
            elif not adj(a, b):
                break
    return pairs


def reduce(w: Word, g, rng: random.Random | None = None) -> Word:
    """Merge same-vertex syllables that can be brought together, until none remain.

    The leftmost such pair is merged first; with ``rng`` a pair is drawn at
    random among all candidates instead (used to test confluence).
    """
    _same_coloring(w.coloring, g.coloring)
    adj = _Adjacency(g)
    word = w
    while True:
        syl = list(word.syllables)
        pairs = _reducible_pairs(syl, adj, first_only=rng is None)
        if not pairs:
            return word
        p, q = pairs[0] if rng is None else rng.choice(pairs)
        v, e = syl[p]
        syl[p] = (v, normalize_exponent(e + syl[q][1], word.coloring.order_of(v)))
        del syl[q]
        if syl[p][1] == 0:
            del syl[p]
        word = Word(syl, word.coloring)


def canonical(w: Word, g) -> Word:
    """The lexicographically least reduced spelling of ``w``."""
    reduced = reduce(w, g)
    adj = _Adjacency(g)
    rest = list(reduced.syllables)
    out = []
    while rest:
        best = None
        for i, (v, e) in enumerate(rest):
            if all(u != v and adj(u, v) for u, _ in rest[:i]):
                key = (vertex_key(v), e)
                if best is None or key < best[0]:
                    best = (key, i)
        out.append(rest.pop(best[1]))
    return Word(out, w.coloring)


def equal(w1: Word, w2: Word, g) -> bool:
    return canonical(w1, g).syllables == canonical(w2, g).syllables


def truncate_word(w: Word, n: int) -> Word:
    """Image of ``w`` in the depth-``n`` truncation group."""
    if n < 1:
        raise ValueError("truncation depth must be at least 1")
    return Word([(_cut(v, n), e) for v, e in w.syllables], w.coloring)


def _cut(v: Vertex, n: int) -> Prefix:
    if isinstance(v, VertexPath):
        return truncate(v, n)
    if len(v) < n:
        raise ValueError(f"cannot truncate prefix {v!r} to depth {n}")
    return tuple(v[:n])
