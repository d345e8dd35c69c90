"""From a finite metric graph to a colored closed graph on Baire space.

Each point ``a`` gets a path ``eta_a``: its color code, then for every
``n >= 1`` the least index of a point at distance ``< 1/4**n`` from ``a``.  The
path becomes constant at ``a``'s own index once ``1/4**n`` drops below every
positive distance from ``a``.  ``d'(a, b) = 1/(lg(eta_a ^ eta_b) + 2)`` is then an
ultrametric in which the edge relation stays closed, and ``a -> eta_a`` carries
the colored graph onto a :class:`~graphprod.graphspec.FiniteExplicit` instance.

Colors are coded into the first coordinate as ``inf -> 0`` and ``m -> m``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, List, Sequence, Tuple

from .baire import Prefix, VertexPath, meet_length, truncate
from .errors import ValidationError
from .graphspec import (
    INF,
    Coloring,
    FiniteExplicit,
    GraphInstance,
    Order,
    color_code,
    format_order,
    parse_order,
    valid_order,
)


@dataclass(frozen=True)
class MetricGraphInstance:
    points: Tuple[str, ...]
    metric: Tuple[Tuple[Fraction, ...], ...]
    colors: Tuple[Order, ...]
    edges: Tuple[Tuple[int, int], ...]
    _etas: dict = field(default_factory=dict, init=False, compare=False, hash=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "metric", tuple(tuple(Fraction(x) for x in row) for row in self.metric))
        object.__setattr__(self, "colors", tuple(self.colors))
        object.__setattr__(self, "edges", tuple(sorted({(i, j) for i, j in self.edges})))

    def __len__(self) -> int:
        return len(self.points)

    @property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def codes(self) -> List[int]:
        return [color_code(c) for c in self.colors]

    def violations(self) -> List[str]:
        n = len(self.points)
        out = []
        if n == 0:
            out.append("instance has no points")
        if len(set(self.points)) != n:
            out.append("point names are not distinct")
        if len(self.metric) != n or any(len(row) != n for row in self.metric):
            return out + [f"metric must be a {n}x{n} matrix"]
        if len(self.colors) != n:
            out.append(f"expected {n} colors, got {len(self.colors)}")
        for c in self.colors:
            if not valid_order(c):
                out.append(f"color {c!r} is not a prime power or inf")
        d = self.metric
        for i in range(n):
            if d[i][i] != 0:
                out.append(f"d({i},{i}) = {d[i][i]} is not zero")
            for j in range(n):
                if d[i][j] < 0:
                    out.append(f"d({i},{j}) is negative")
                if d[i][j] != d[j][i]:
                    out.append(f"metric is not symmetric at ({i},{j})")
                if i != j and d[i][j] == 0:
                    out.append(f"distinct points {i} and {j} are at distance 0")
        for i, j, k in product(range(n), repeat=3):
            if d[i][k] > d[i][j] + d[j][k]:
                out.append(f"triangle inequality fails for ({i},{j},{k})")
                break
        es = self.edge_set
        for i, j in self.edges:
            if not (0 <= i < n and 0 <= j < n):
                out.append(f"edge ({i},{j}) out of range")
            elif (j, i) not in es:
                out.append(f"edge list is not symmetric at ({i},{j})")
        for i in range(n):
            if (i, i) not in es:
                out.append(f"edge list misses the diagonal pair ({i},{i})")
        return out

    def validate(self) -> "MetricGraphInstance":
        problems = self.violations()
        if problems:
            raise ValidationError(problems)
        return self

    def to_json(self) -> dict:
        return {
            "points": list(self.points),
            "metric": [[f"{x.numerator}/{x.denominator}" for x in row] for row in self.metric],
            "colors": [format_order(c) for c in self.colors],
            "edges": [[i, j] for i, j in self.edges],
        }

    @classmethod
    def from_json(cls, obj) -> "MetricGraphInstance":
        try:
            inst = cls(
                points=[str(p) for p in obj["points"]],
                metric=[[Fraction(x) for x in row] for row in obj["metric"]],
                colors=[parse_order(c) for c in obj["colors"]],
                edges=[(int(i), int(j)) for i, j in obj["edges"]],
            )
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            raise ValidationError(f"malformed metric instance: {e!r}") from None
        return inst.validate()


def _index(inst: MetricGraphInstance, a) -> int:
    if isinstance(a, str):
        return inst.points.index(a)
    return a


def stabilization_depth(inst: MetricGraphInstance, a) -> int:
    """Least ``N >= 1`` with ``1/4**N`` at most every positive distance from ``a``."""
    a = _index(inst, a)
    gaps = [x for x in inst.metric[a] if x > 0]
    n = 1
    if gaps:
        nearest = min(gaps)
        while Fraction(1, 4**n) > nearest:
            n += 1
    return n


def nearest_index(inst: MetricGraphInstance, a, n: int) -> int:
    """Least index at distance strictly below ``1/4**n`` from ``a``."""
    a = _index(inst, a)
    r = Fraction(1, 4**n)
    return next(j for j, x in enumerate(inst.metric[a]) if x < r)


def eta_of(inst: MetricGraphInstance, a) -> VertexPath:
    a = _index(inst, a)
    hit = inst._etas.get(a)
    if hit is None:
        depth = stabilization_depth(inst, a)
        entries = [color_code(inst.colors[a])] + [nearest_index(inst, a, n) for n in range(1, depth + 1)]
        hit = inst._etas[a] = VertexPath(entries, a)
    return hit


def dprime(inst: MetricGraphInstance, a, b) -> Fraction:
    a, b = _index(inst, a), _index(inst, b)
    if a == b:
        return Fraction(0)
    return Fraction(1, meet_length(eta_of(inst, a), eta_of(inst, b)) + 2)


def dense_witness(inst: MetricGraphInstance, nu: Sequence[int]) -> int | None:
    """Least point whose path starts with ``nu``, if any."""
    nu = tuple(nu)
    for a in range(len(inst)):
        if truncate(eta_of(inst, a), len(nu)) == nu:
            return a
    return None


def dense_witness_total(inst: MetricGraphInstance, nu: Sequence[int]) -> int:
    w = dense_witness(inst, nu)
    return 0 if w is None else w


def pstar(inst: MetricGraphInstance, eta: VertexPath) -> int:
    c = eta.at(0)
    return c if c in inst.codes() else 1


@dataclass
class ClauseResult:
    name: str
    passed: bool
    detail: str = ""
    witnesses: Dict = field(default_factory=dict)


def _clause(name, failures, detail="", witnesses=None) -> ClauseResult:
    if failures:
        shown = "; ".join(failures[:5]) + (f" (+{len(failures) - 5} more)" if len(failures) > 5 else "")
        return ClauseResult(name, False, shown, witnesses or {})
    return ClauseResult(name, True, detail, witnesses or {})


def verify_lemma(inst: MetricGraphInstance) -> List[ClauseResult]:
    """Exhaustively check every conclusion of the construction on ``inst``."""
    n = len(inst)
    pts = range(n)
    etas = [eta_of(inst, a) for a in pts]
    dp = [[dprime(inst, a, b) for b in pts] for a in pts]
    d = inst.metric
    es = inst.edge_set
    report = []

    fails = []
    for a, b in product(pts, repeat=2):
        if dp[a][b] != dp[b][a] or (dp[a][b] == 0) != (a == b):
            fails.append(f"d'({a},{b})")
    for a, b, c in product(pts, repeat=3):
        if dp[a][c] > max(dp[a][b], dp[b][c]):
            fails.append(f"strong triangle at ({a},{b},{c})")
    report.append(_clause("ultrametric", fails))

    top = max((meet_length(etas[a], etas[b]) for a in pts for b in pts if a < b), default=0) + 1

    fails = []
    for b in pts:
        for k in range(1, max(top, stabilization_depth(inst, b)) + 2):
            w = dense_witness(inst, truncate(etas[b], k))
            if w is None or dp[w][b] > Fraction(1, k + 2):
                fails.append(f"no witness within 1/{k + 2} of {b} at depth {k}")
    report.append(_clause("(*)1 dense witness", fails))

    fails, found = [], {}
    for k in range(1, top + 1):
        bound = Fraction(2, 4**k)
        for a in pts:
            for x in pts:
                if dp[a][x] < Fraction(1, k + 2) and not d[a][x] < bound:
                    fails.append(f"pullback d({a},{x}) >= 2/4^{k}")
    for a, b in product(pts, repeat=2):
        if (a, b) in es:
            continue
        for k in range(1, top + 1):
            r = Fraction(1, k + 2)
            near_a = [x for x in pts if dp[a][x] < r]
            near_b = [y for y in pts if dp[b][y] < r]
            if all((x, y) not in es for x in near_a for y in near_b):
                found[(a, b)] = k
                break
        else:
            fails.append(f"non-edge ({a},{b}) has edges arbitrarily close")
    report.append(_clause("(*)2 closedness", fails, witnesses=found))

    fails = [f"eta_{a} == eta_{b}" for a in pts for b in pts if a < b and etas[a] == etas[b]]
    report.append(_clause("(*)3 injectivity", fails))

    image = {(etas[a], etas[b]) for a, b in es}
    fails = []
    for a, b in product(pts, repeat=2):
        in_closure = (etas[a], etas[b]) in image or a == b
        if in_closure != ((a, b) in es):
            fails.append(f"({a},{b})")
    report.append(_clause("(*)4 image closure", fails))

    fails = [f"point {a}" for a in pts if pstar(inst, etas[a]) != color_code(inst.colors[a])]
    report.append(_clause("(2)(b) color preservation", fails))

    firsts = sorted(set(inst.codes()) | {1} | set(range(max(inst.codes()) + 3)))
    probes = [VertexPath([c], 0) for c in firsts]
    table = set(inst.codes())
    fails = []
    for e1, e2 in product(probes, repeat=2):
        same_first = e1.at(0) == e2.at(0)
        same_color = pstar(inst, e1) == pstar(inst, e2)
        # two first coordinates outside the table both map to 1
        if same_first and not same_color or (
            same_color and not same_first and (e1.at(0) in table or e2.at(0) in table)
        ):
            fails.append(f"first coordinates {e1.at(0)}, {e2.at(0)}")
    report.append(_clause("(2)(c) p* coherence", fails))
    return report


def lemma_holds(report: List[ClauseResult]) -> bool:
    return all(c.passed for c in report)


def to_graph_instance(inst: MetricGraphInstance) -> GraphInstance:
    """The image graph on Baire space, colored by first coordinate."""
    table: Dict[int, Order] = {}
    for c in inst.colors:
        code = color_code(c)
        if table.setdefault(code, c) != c:
            raise ValidationError(f"color code {code} used for orders {table[code]} and {c}")
    verts = {name: eta_of(inst, a) for a, name in enumerate(inst.points)}
    edges = [(inst.points[i], inst.points[j]) for i, j in inst.edges if i != j]
    return GraphInstance(FiniteExplicit(verts, edges), Coloring(table, INF))
