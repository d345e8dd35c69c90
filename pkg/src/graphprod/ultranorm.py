"""The group ultranorm and the left-invariant ultrametric it induces.

For a nontrivial element ``g``, ``n(g)`` is the least depth ``n >= 1`` at which
the image of ``g`` in the truncation group ``G_n`` is nontrivial, and the norm
is ``2**-n(g)``.  The search is bounded: once ``n`` separates every pair of
distinct vertices of a normal form and every non-edge among them, the
truncated word is again a normal form, hence nontrivial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .baire import Prefix, UltraValue, ZERO, meet_length, truncate
from .errors import InternalInvariantError
from .graphspec import GraphInstance
from .words import Word, canonical, concat, invert, truncate_word


@dataclass(frozen=True)
class NormResult:
    n: int | None  # None for the identity
    value: UltraValue
    certificate: Word

    @property
    def is_identity(self) -> bool:
        return self.n is None


def search_bound(c: Word, g: GraphInstance) -> int:
    """Depth at which truncation is faithful on the vertices of ``c``."""
    verts = list(dict.fromkeys(c.vertices()))
    m = 1
    for i, u in enumerate(verts):
        for v in verts[i + 1 :]:
            m = max(m, meet_length(u, v) + 1)
            if not g.adjacent(u, v):
                m = max(m, g.nonadjacency_depth(u, v))
    return m


def ultranorm(w: Word, g: GraphInstance) -> NormResult:
    c = canonical(w, g)
    if not c:
        return NormResult(None, ZERO, c)
    bound = search_bound(c, g)
    for n in range(1, bound + 1):
        image = canonical(truncate_word(c, n), g.at_depth(n))
        if image:
            return NormResult(n, UltraValue.exp(n), image)
    raise InternalInvariantError(f"{c!r} is trivial at every depth <= {bound}")


def distance(w1: Word, w2: Word, g: GraphInstance) -> UltraValue:
    """``d(g, h) = d(g^-1 h)``."""
    return ultranorm(concat(invert(w1), w2), g).value


def two_sided(w1: Word, w2: Word, g: GraphInstance) -> Fraction:
    """``D(g, h) = d(g, h) + d(g^-1, h^-1)`` as an exact rational."""
    return distance(w1, w2, g).as_fraction() + distance(invert(w1), invert(w2), g).as_fraction()


def rn_key(w: Word, g: GraphInstance, n: int) -> Tuple[Tuple[Prefix, int], ...]:
    """Fingerprint of ``w``'s normal form with vertices cut to depth ``n``.

    Equal keys mean the two elements have normal forms of the same shape whose
    vertices agree up to depth ``n``.
    """
    if n < 1:
        raise ValueError("depth must be at least 1")
    return tuple((truncate(v, n), e) for v, e in canonical(w, g).syllables)
