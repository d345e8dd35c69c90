"""Brute-force ground truth for the word problem on small instances.

Words are expanded into letters ``(vertex, +-1)`` and explored under local
moves only; nothing here uses syllables, reduction or normal forms.

:func:`closure` follows the full move set: swapping adjacent commuting
letters, deleting or inserting ``x x^-1``, and deleting or inserting ``m``
equal letters of an order-``m`` generator, with insertions capped at
``max_len``.  The class of a short element under insertions grows very fast,
so :class:`DownwardOracle` decides equality with the length-nonincreasing moves
alone (finite-order exponents expanded as positive residues, so inverses never
need to be inserted); the test suite checks both agree.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Tuple

from .errors import BoundTooSmallError
from .graphspec import INF
from .words import Word

Letter = Tuple[object, int]
Letters = Tuple[Letter, ...]


def expand(w: Word, positive_residues: bool = False) -> Letters:
    """Spell ``w`` letter by letter.

    With ``positive_residues`` a finite-order syllable ``a^e`` becomes
    ``e mod m`` copies of ``a``.
    """
    out: List[Letter] = []
    for v, e in w.syllables:
        order = w.coloring.order_of(v)
        if positive_residues and order is not INF:
            out.extend([(v, 1)] * (e % order))
        else:
            out.extend([(v, 1 if e > 0 else -1)] * abs(e))
    return tuple(out)


class _Moves:
    def __init__(self, g, coloring):
        self.g = g
        self.coloring = coloring
        self._commute: Dict[tuple, bool] = {}

    def commute(self, a, b) -> bool:
        if a == b:
            return True
        key = (a, b)
        hit = self._commute.get(key)
        if hit is None:
            hit = bool(self.g.adjacent(a, b))
            self._commute[(a, b)] = self._commute[(b, a)] = hit
        return hit

    def order(self, v):
        return self.coloring.order_of(v)

    def swaps(self, word: Letters):
        for i in range(len(word) - 1):
            x, y = word[i], word[i + 1]
            if x != y and self.commute(x[0], y[0]):
                yield word[:i] + (y, x) + word[i + 2 :]

    def deletions(self, word: Letters):
        n = len(word)
        for i in range(n - 1):
            x, y = word[i], word[i + 1]
            if x[0] == y[0] and x[1] == -y[1]:
                yield word[:i] + word[i + 2 :]
        for i in range(n):
            v, s = word[i]
            m = self.order(v)
            if m is not INF and i + m <= n and all(word[j] == (v, s) for j in range(i, i + m)):
                yield word[:i] + word[i + m :]

    def insertions(self, word: Letters, alphabet, max_len: int):
        n = len(word)
        for v in alphabet:
            if n + 2 <= max_len:
                for s in (1, -1):
                    for i in range(n + 1):
                        yield word[:i] + ((v, s), (v, -s)) + word[i:]
            m = self.order(v)
            if m is not INF and n + m <= max_len:
                for s in (1, -1):
                    for i in range(n + 1):
                        yield word[:i] + ((v, s),) * m + word[i:]


@dataclass(frozen=True)
class ClosureClass:
    seed: Letters
    words: FrozenSet[Letters]
    max_len: int

    def __contains__(self, letters) -> bool:
        return tuple(letters) in self.words

    def __len__(self) -> int:
        return len(self.words)


def closure(w: Word, g, max_len: int, alphabet: Sequence | None = None) -> ClosureClass:
    """All letter words reachable from ``w`` without exceeding ``max_len`` letters.

    ``alphabet`` lists the generators available for insertion; it defaults to
    the vertices of ``w``.
    """
    seed = expand(w)
    if len(seed) > max_len:
        raise BoundTooSmallError(f"word has {len(seed)} letters, max_len is {max_len}")
    if alphabet is None:
        alphabet = list(dict.fromkeys(v for v, _ in seed))
    moves = _Moves(g, w.coloring)
    seen = {seed}
    todo = deque([seed])
    while todo:
        u = todo.popleft()
        for nxt in _chain(moves.swaps(u), moves.deletions(u), moves.insertions(u, alphabet, max_len)):
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return ClosureClass(seed, frozenset(seen), max_len)


def _chain(*its):
    for it in its:
        yield from it


class DownwardOracle:
    """Equality by intersecting closures under swaps and deletions only.

    Each swap class is explored once and remembers which terminal swap classes
    (those admitting no deletion) lie below it, so one instance can decide
    many pairs over the same graph cheaply.
    """

    def __init__(self, g, coloring=None):
        self.g = g
        self.coloring = coloring if coloring is not None else g.coloring
        self.moves = _Moves(g, self.coloring)
        self._class_of: Dict[Letters, int] = {}
        self._below: List[FrozenSet[int]] = []

    def _swap_class(self, word: Letters) -> List[Letters]:
        seen = {word}
        todo = [word]
        while todo:
            u = todo.pop()
            for nxt in self.moves.swaps(u):
                if nxt not in seen:
                    seen.add(nxt)
                    todo.append(nxt)
        return list(seen)

    def terminals(self, word: Letters) -> FrozenSet[int]:
        cid = self._class_of.get(word)
        if cid is not None:
            return self._below[cid]
        members = self._swap_class(word)
        cid = len(self._below)
        self._below.append(frozenset())
        for u in members:
            self._class_of[u] = cid
        children = {d for u in members for d in self.moves.deletions(u)}
        below = frozenset([cid]) if not children else frozenset().union(*(self.terminals(c) for c in children))
        self._below[cid] = below
        return below

    def key(self, w: Word) -> FrozenSet[int]:
        return self.terminals(expand(w, positive_residues=True))

    def equal(self, w1: Word, w2: Word) -> bool:
        return bool(self.key(w1) & self.key(w2))


def oracle_equal(w1: Word, w2: Word, g, max_len: int = 12, insertions: bool = False) -> bool:
    """Brute-force decision of ``w1 == w2`` in the group.

    By default the downward move set is used; ``insertions=True`` intersects
    the full bounded closures over the joint alphabet instead.
    """
    for w in (w1, w2):
        if len(expand(w)) > max_len:
            raise BoundTooSmallError(f"word has {len(expand(w))} letters, max_len is {max_len}")
    if not insertions:
        return DownwardOracle(g, w1.coloring).equal(w1, w2)
    alphabet = list(dict.fromkeys(v for v, _ in w1.syllables + w2.syllables))
    c1 = closure(w1, g, max_len, alphabet)
    return expand(w2) in c1
