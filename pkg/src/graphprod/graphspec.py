"""Colorings and closed, symmetric, reflexive edge relations on Baire space.

Two finitely presented classes of relations are supported:

* :class:`ClopenBoxes` -- a finite union of products of prefix cones,
  symmetrized and joined with the diagonal;
* :class:`FiniteExplicit` -- finitely many named points with an explicit edge
  list, plus the diagonal.

For both, the truncation relation ``E_n`` (pairs of length-``n`` prefixes that
extend to an edge) is computed exactly by :meth:`GraphInstance.edge_at_depth`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from .baire import (
    Prefix,
    Vertex,
    VertexPath,
    compatible,
    is_prefix_of,
    make_prefix,
    meet_length,
    truncate,
)
from .errors import InternalInvariantError, UnknownVertexError, ValidationError


class Infinite(Enum):
    INF = "inf"

    def __repr__(self):
        return "INF"


INF = Infinite.INF
Order = Union[int, Infinite]


def is_prime_power(k: int) -> bool:
    if isinstance(k, bool) or not isinstance(k, int) or k < 2:
        return False
    p = 2
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            return k == 1
        p += 1
    return True


def parse_order(s) -> Order:
    """Parse ``"inf"``, ``"8"``, ``"2^3"`` or an int. No validation of primality."""
    if s == "inf" or s is INF:
        return INF
    if isinstance(s, bool):
        raise ValueError(f"bad order {s!r}")
    if isinstance(s, int):
        return s
    if isinstance(s, str):
        try:
            if "^" in s:
                base, exp = s.split("^")
                return int(base) ** int(exp)
            return int(s)
        except ValueError:
            pass
    raise ValueError(f"bad order {s!r}")


def format_order(o: Order) -> str:
    return "inf" if o is INF else str(o)


def valid_order(o: Order) -> bool:
    return o is INF or is_prime_power(o)


def first_coordinate(v: Vertex) -> int:
    if isinstance(v, VertexPath):
        return v.at(0)
    if not v:
        raise ValueError("the empty prefix has no color")
    return v[0]


@dataclass(frozen=True, init=False)
class Coloring:
    """Order of each generator, as a function of its first coordinate."""

    table: Tuple[Tuple[int, Order], ...]
    default: Order

    def __init__(self, table: Mapping[int, Order] | Iterable[Tuple[int, Order]] = (), default: Order = INF):
        items = dict(table.items() if isinstance(table, Mapping) else table)
        object.__setattr__(self, "table", tuple(sorted(items.items())))
        object.__setattr__(self, "default", default)
        object.__setattr__(self, "_lookup", items)

    def order_of(self, v: Vertex) -> Order:
        return self._lookup.get(first_coordinate(v), self.default)

    def violations(self) -> List[str]:
        out = []
        for code, order in self.table:
            if isinstance(code, bool) or not isinstance(code, int) or code < 0:
                out.append(f"coloring key {code!r} is not a natural number")
            if not valid_order(order):
                out.append(f"coloring value {order!r} for {code} is not a prime power or inf")
        if not valid_order(self.default):
            out.append(f"coloring default {self.default!r} is not a prime power or inf")
        return out

    def to_json(self) -> dict:
        return {
            "table": {str(k): format_order(v) for k, v in self.table},
            "default": format_order(self.default),
        }

    @classmethod
    def from_json(cls, obj) -> "Coloring":
        if not isinstance(obj, dict) or not isinstance(obj.get("table", {}), dict):
            raise ValidationError(f"malformed coloring: {obj!r}")
        try:
            table = {int(k): parse_order(v) for k, v in obj.get("table", {}).items()}
            default = parse_order(obj.get("default", "inf"))
        except ValueError as e:
            raise ValidationError(f"malformed coloring: {e}") from None
        return cls(table, default)


@dataclass(frozen=True)
class ClopenBoxes:
    """Union of boxes ``[u] x [v]`` (both orientations) plus the diagonal."""

    boxes: Tuple[Tuple[Prefix, Prefix], ...]

    def __init__(self, boxes: Iterable[Tuple[Sequence[int], Sequence[int]]] = ()):
        object.__setattr__(self, "boxes", tuple((make_prefix(u), make_prefix(v)) for u, v in boxes))

    def adjacent(self, u: VertexPath, v: VertexPath) -> bool:
        if u == v:
            return True
        for p, q in self.boxes:
            if is_prefix_of(p, truncate(u, len(p))) and is_prefix_of(q, truncate(v, len(q))):
                return True
            if is_prefix_of(q, truncate(u, len(q))) and is_prefix_of(p, truncate(v, len(p))):
                return True
        return False

    def edge_at_depth(self, a: Prefix, b: Prefix) -> bool:
        if a == b:
            return True
        return any(
            (compatible(p, a) and compatible(q, b)) or (compatible(q, a) and compatible(p, b))
            for p, q in self.boxes
        )

    def separation_bound(self, u: VertexPath, v: VertexPath) -> int:
        # beyond every box length, cone compatibility equals membership
        longest = max((max(len(p), len(q)) for p, q in self.boxes), default=0)
        return max(longest, meet_length(u, v) + 1, 1)

    def violations(self) -> List[str]:
        return []

    def to_json(self) -> dict:
        return {"kind": "clopen_boxes", "boxes": [[list(p), list(q)] for p, q in self.boxes]}


@dataclass(frozen=True)
class FiniteExplicit:
    """Named points with an explicit edge list; the diagonal is always included."""

    vertices: Tuple[Tuple[str, VertexPath], ...]
    edges: Tuple[Tuple[str, str], ...]
    _by_path: Dict[VertexPath, str] = field(init=False, compare=False, hash=False, repr=False)
    _edge_set: frozenset = field(init=False, compare=False, hash=False, repr=False)
    _depth_cache: dict = field(init=False, compare=False, hash=False, repr=False)

    def __init__(self, vertices: Mapping[str, VertexPath] | Iterable[Tuple[str, VertexPath]], edges=()):
        items = tuple(vertices.items() if isinstance(vertices, Mapping) else vertices)
        object.__setattr__(self, "vertices", items)
        object.__setattr__(self, "edges", tuple((x, y) for x, y in edges))
        object.__setattr__(self, "_by_path", {p: n for n, p in items})
        sym = set()
        for x, y in self.edges:
            sym.add((x, y))
            sym.add((y, x))
        object.__setattr__(self, "_edge_set", frozenset(sym))
        object.__setattr__(self, "_depth_cache", {})

    @property
    def names(self) -> Dict[str, VertexPath]:
        return dict(self.vertices)

    def name_of(self, v: VertexPath) -> str:
        try:
            return self._by_path[v]
        except KeyError:
            raise UnknownVertexError(f"vertex {v!r} is not named in the finite oracle") from None

    def adjacent(self, u: VertexPath, v: VertexPath) -> bool:
        nu, nv = self.name_of(u), self.name_of(v)
        return u == v or (nu, nv) in self._edge_set

    def _truncated_edges(self, n: int) -> frozenset:
        pairs = self._depth_cache.get(n)
        if pairs is None:
            names = self.names
            pairs = frozenset(
                (truncate(names[x], n), truncate(names[y], n))
                for x, y in self._edge_set
                if x in names and y in names
            )
            self._depth_cache[n] = pairs
        return pairs

    def edge_at_depth(self, a: Prefix, b: Prefix) -> bool:
        return a == b or (a, b) in self._truncated_edges(len(a))

    def separation_bound(self, u: VertexPath, v: VertexPath) -> int:
        # truncation is injective on the named points past their deepest meet
        self.name_of(u)
        self.name_of(v)
        deepest = self._depth_cache.get("deepest")
        if deepest is None:
            width = max((len(p.prefix) for _, p in self.vertices), default=0) + 1
            paths = sorted({p for _, p in self.vertices}, key=lambda p: truncate(p, width))
            deepest = max((meet_length(p, q) for p, q in zip(paths, paths[1:])), default=0)
            self._depth_cache["deepest"] = deepest
        return deepest + 1

    def violations(self) -> List[str]:
        out = []
        seen: Dict[VertexPath, str] = {}
        names = set()
        for name, path in self.vertices:
            if name in names:
                out.append(f"vertex name {name!r} appears twice")
            names.add(name)
            if path in seen:
                out.append(f"vertices {seen[path]!r} and {name!r} share the path {path!r}")
            seen.setdefault(path, name)
        given = set(self.edges)
        for x, y in self.edges:
            for z in (x, y):
                if z not in names:
                    out.append(f"edge ({x!r}, {y!r}) mentions unknown vertex {z!r}")
            if x != y and (y, x) not in given:
                out.append(f"edge list is not symmetric: ({x!r}, {y!r}) without ({y!r}, {x!r})")
        return out

    def to_json(self) -> dict:
        return {
            "kind": "finite",
            "vertices": {n: p.to_json() for n, p in self.vertices},
            "edges": [[x, y] for x, y in self.edges],
        }


EdgeOracle = Union[ClopenBoxes, FiniteExplicit]


@dataclass(frozen=True)
class GraphInstance:
    """A colored closed graph on Baire space."""

    oracle: EdgeOracle
    coloring: Coloring = field(default_factory=Coloring)

    def adjacent(self, u: VertexPath, v: VertexPath) -> bool:
        return self.oracle.adjacent(u, v)

    def order_of(self, v: Vertex) -> Order:
        return self.coloring.order_of(v)

    def edge_at_depth(self, a: Sequence[int], b: Sequence[int]) -> bool:
        a, b = tuple(a), tuple(b)
        if len(a) != len(b):
            raise ValueError(f"length mismatch: {len(a)} != {len(b)}")
        if len(a) < 1:
            raise ValueError("truncation depth must be at least 1")
        return self.oracle.edge_at_depth(a, b)

    def nonadjacency_depth(self, u: VertexPath, v: VertexPath) -> int:
        """Least depth ``n`` at which the truncations of ``u`` and ``v`` are not in ``E_n``."""
        if self.adjacent(u, v):
            raise ValueError(f"{u!r} and {v!r} are adjacent")
        bound = self.oracle.separation_bound(u, v)
        for n in range(1, bound + 1):
            if not self.oracle.edge_at_depth(truncate(u, n), truncate(v, n)):
                return n
        raise InternalInvariantError(f"no separating depth <= {bound} for {u!r}, {v!r}")

    def at_depth(self, n: int) -> "TruncatedGraph":
        return TruncatedGraph(self, n)

    def validate(self) -> List[str]:
        return self.coloring.violations() + self.oracle.violations()

    def vertex_paths(self) -> List[VertexPath]:
        """Named vertices of a finite oracle, in file order."""
        if isinstance(self.oracle, FiniteExplicit):
            return [p for _, p in self.oracle.vertices]
        raise TypeError("only finite oracles have a vertex list")

    def to_json(self) -> dict:
        return {"coloring": self.coloring.to_json(), "oracle": self.oracle.to_json()}

    @classmethod
    def from_json(cls, obj, validate: bool = True) -> "GraphInstance":
        if not isinstance(obj, dict) or "oracle" not in obj:
            raise ValidationError("graph instance must be an object with an 'oracle' field")
        coloring = Coloring.from_json(obj.get("coloring", {"table": {}, "default": "inf"}))
        o = obj["oracle"]
        try:
            if o.get("kind") == "clopen_boxes":
                oracle = ClopenBoxes([tuple(b) for b in o.get("boxes", [])])
            elif o.get("kind") == "finite":
                verts = {str(n): VertexPath.from_json(p) for n, p in o.get("vertices", {}).items()}
                oracle = FiniteExplicit(verts, [tuple(map(str, e)) for e in o.get("edges", [])])
            else:
                raise ValidationError(f"unknown oracle kind {o.get('kind')!r}")
        except (AttributeError, TypeError, ValueError) as e:
            if isinstance(e, ValidationError):
                raise
            raise ValidationError(f"malformed oracle: {e}") from None
        g = cls(oracle, coloring)
        if validate:
            problems = g.validate()
            if problems:
                raise ValidationError(problems)
        return g


@dataclass(frozen=True)
class TruncatedGraph:
    """The graph ``(omega^n, E_n)`` with the induced coloring."""

    graph: GraphInstance
    depth: int

    def __post_init__(self):
        if self.depth < 1:
            raise ValueError("truncation depth must be at least 1")

    @property
    def coloring(self) -> Coloring:
        return self.graph.coloring

    def order_of(self, v: Prefix) -> Order:
        return self.graph.coloring.order_of(v)

    def adjacent(self, a: Prefix, b: Prefix) -> bool:
        return self.graph.edge_at_depth(a, b)


# module-level spellings of the graph operations


def adjacent(g: GraphInstance, u: VertexPath, v: VertexPath) -> bool:
    return g.adjacent(u, v)


def edge_at_depth(g: GraphInstance, a: Sequence[int], b: Sequence[int]) -> bool:
    return g.edge_at_depth(a, b)


def nonadjacency_depth(g: GraphInstance, u: VertexPath, v: VertexPath) -> int:
    return g.nonadjacency_depth(u, v)


def validate(g: GraphInstance) -> List[str]:
    return g.validate()


# fixtures

ORDER_POOL: Tuple[Order, ...] = (2, 3, 4, 5, 7, 8, 9, INF)


def color_code(order: Order) -> int:
    """First coordinate used for generators of the given order: inf -> 0, m -> m."""
    return 0 if order is INF else order


def _spread_path(code: int, tag: Sequence[int], index: int, width: int) -> VertexPath:
    bits = [(index >> (width - 1 - k)) & 1 for k in range(width)]
    return VertexPath([code, *tag, *bits], 0)


def _named_fixture(names, orders, edges) -> GraphInstance:
    width = max(1, (len(names) - 1).bit_length())
    verts = {name: _spread_path(color_code(o), (), i, width) for i, (name, o) in enumerate(zip(names, orders))}
    table = {color_code(o): o for o in orders}
    return GraphInstance(FiniteExplicit(verts, edges), Coloring(table, INF))


def _orders_param(orders, n):
    if orders is None:
        return [INF] * n
    orders = [parse_order(o) for o in orders]
    if len(orders) != n:
        raise ValueError(f"expected {n} orders, got {len(orders)}")
    if not all(valid_order(o) for o in orders):
        raise ValueError(f"orders must be prime powers or inf: {orders}")
    return orders


def fixtures(kind: str, n: int | None = None, orders=None, size: int = 4, seed: int = 0,
             n_boxes: int = 4, max_box_len: int = 3, alphabet: int = 3) -> GraphInstance:
    """Deterministic standard instances.

    ``free`` and ``complete`` take ``n`` vertices (or ``len(orders)``), ``half-graph``
    takes ``size`` (vertices ``a0..`` and ``b0..`` with ``a_i ~ b_j`` iff ``i < j``),
    ``random-boxes`` draws ``n_boxes`` clopen boxes from ``seed``.
    """
    if kind in ("free", "complete"):
        if n is None:
            n = len(orders) if orders is not None else 2
        if n < 1:
            raise ValueError("need at least one vertex")
        ords = _orders_param(orders, n)
        names = [f"v{i}" for i in range(n)]
        edges = []
        if kind == "complete":
            edges = [(x, y) for x in names for y in names if x != y]
        return _named_fixture(names, ords, edges)
    if kind == "half-graph":
        if size < 1:
            raise ValueError("half-graph size must be positive")
        ords = _orders_param(orders, 2 * size) if orders is not None else [INF] * (2 * size)
        width = max(1, (size - 1).bit_length())
        verts = {}
        for i in range(size):
            verts[f"a{i}"] = _spread_path(color_code(ords[i]), (0,), i, width)
            verts[f"b{i}"] = _spread_path(color_code(ords[size + i]), (1,), i, width)
        edges = []
        for i in range(size):
            for j in range(i + 1, size):
                edges += [(f"a{i}", f"b{j}"), (f"b{j}", f"a{i}")]
        table = {color_code(o): o for o in ords}
        return GraphInstance(FiniteExplicit(verts, edges), Coloring(table, INF))
    if kind == "random-boxes":
        if n_boxes < 0 or max_box_len < 1 or alphabet < 1:
            raise ValueError("invalid random-boxes parameters")
        rng = random.Random(seed)
        boxes = []
        for _ in range(n_boxes):
            u = [rng.randrange(alphabet) for _ in range(rng.randint(1, max_box_len))]
            v = [rng.randrange(alphabet) for _ in range(rng.randint(1, max_box_len))]
            boxes.append((u, v))
        table = {c: rng.choice(ORDER_POOL) for c in range(alphabet)}
        return GraphInstance(ClopenBoxes(boxes), Coloring(table, INF))
    raise ValueError(f"unknown fixture kind {kind!r}")
