"""Eventually-constant points of Baire space and the dyadic ultrametric values."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Sequence, Tuple, Union

Prefix = Tuple[int, ...]


class UndefinedMeetError(ValueError):
    """The meet of a point with itself is not defined."""


def _check_naturals(entries: Iterable[int], what: str) -> None:
    for x in entries:
        if isinstance(x, bool) or not isinstance(x, int) or x < 0:
            raise ValueError(f"{what} must contain natural numbers, got {x!r}")


def make_prefix(entries: Iterable[int]) -> Prefix:
    p = tuple(entries)
    _check_naturals(p, "prefix")
    return p


def is_prefix_of(p: Sequence[int], q: Sequence[int]) -> bool:
    """True when ``p`` is an initial segment of ``q``."""
    return len(p) <= len(q) and tuple(q[: len(p)]) == tuple(p)


def compatible(p: Sequence[int], q: Sequence[int]) -> bool:
    """True when one of the two finite sequences extends the other."""
    n = min(len(p), len(q))
    return tuple(p[:n]) == tuple(q[:n])


@dataclass(frozen=True, init=False)
class VertexPath:
    """A point ``prefix + (tail, tail, ...)`` of Baire space.

    The representation is canonical: the last prefix entry never equals the
    tail, so two paths are equal exactly when their fields are.
    """

    prefix: Prefix
    tail: int

    def __init__(self, prefix: Iterable[int] = (), tail: int = 0):
        p = list(prefix)
        _check_naturals(p, "prefix")
        _check_naturals([tail], "tail")
        while p and p[-1] == tail:
            p.pop()
        object.__setattr__(self, "prefix", tuple(p))
        object.__setattr__(self, "tail", tail)

    def at(self, n: int) -> int:
        if n < 0:
            raise IndexError(n)
        return self.prefix[n] if n < len(self.prefix) else self.tail

    def truncate(self, n: int) -> Prefix:
        return truncate(self, n)

    def __repr__(self) -> str:
        head = ",".join(map(str, self.prefix))
        return f"<{head}|{self.tail}...>" if head else f"<|{self.tail}...>"

    def to_json(self) -> dict:
        return {"prefix": list(self.prefix), "tail": self.tail}

    @classmethod
    def from_json(cls, obj) -> "VertexPath":
        if not isinstance(obj, dict) or set(obj) != {"prefix", "tail"}:
            raise ValueError(f"malformed vertex path: {obj!r}")
        if not isinstance(obj["prefix"], list):
            raise ValueError(f"malformed vertex path prefix: {obj!r}")
        return cls(obj["prefix"], obj["tail"])


Vertex = Union[VertexPath, Prefix]


def truncate(v: VertexPath, n: int) -> Prefix:
    """The first ``n`` coordinates of ``v``."""
    if n < 0:
        raise ValueError(f"depth must be nonnegative, got {n}")
    return tuple(v.at(i) for i in range(n))


def meet_length(u: VertexPath, v: VertexPath) -> int:
    """Length of the longest common prefix of two distinct points."""
    if u == v:
        raise UndefinedMeetError(f"meet of {u!r} with itself")
    # past both prefixes only the tails are compared, and they must differ
    for i in range(max(len(u.prefix), len(v.prefix)) + 1):
        if u.at(i) != v.at(i):
            return i
    raise AssertionError("unreachable for canonical paths")


def vertex_key(v: Vertex):
    """Sort key for vertices: length-lex on the canonical encoding."""
    if isinstance(v, VertexPath):
        return (len(v.prefix), v.prefix, v.tail)
    return (len(v), tuple(v))


@total_ordering
@dataclass(frozen=True)
class UltraValue:
    """Either 0 (``n is None``) or the dyadic value ``2**-n`` with ``n >= 1``."""

    n: int | None = None

    def __post_init__(self):
        if self.n is not None and (isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1):
            raise ValueError(f"exponent must be a positive integer, got {self.n!r}")

    @classmethod
    def zero(cls) -> "UltraValue":
        return cls(None)

    @classmethod
    def exp(cls, n: int) -> "UltraValue":
        return cls(n)

    @property
    def is_zero(self) -> bool:
        return self.n is None

    def as_fraction(self) -> Fraction:
        return Fraction(0) if self.n is None else Fraction(1, 2**self.n)

    def __lt__(self, other: "UltraValue") -> bool:
        if not isinstance(other, UltraValue):
            return NotImplemented
        if self.n is None:
            return other.n is not None
        if other.n is None:
            return False
        return self.n > other.n

    def decimal(self) -> str:
        """Exact decimal rendering; ``2**-n`` has exactly ``n`` fractional digits."""
        if self.n is None:
            return "0"
        return "0." + str(5**self.n).zfill(self.n)

    def to_json(self) -> dict:
        if self.n is None:
            return {"kind": "zero", "decimal": "0"}
        return {"kind": "exp", "n": self.n, "decimal": self.decimal()}

    def __repr__(self) -> str:
        return "UltraValue(0)" if self.n is None else f"UltraValue(2^-{self.n})"


ZERO = UltraValue.zero()


def baire_distance(u: VertexPath, v: VertexPath) -> UltraValue:
    """``2**-(lg(u ^ v) + 1)``, or zero when ``u == v``."""
    if u == v:
        return ZERO
    return UltraValue.exp(meet_length(u, v) + 1)
