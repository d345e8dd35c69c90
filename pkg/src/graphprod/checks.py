"""Seeded property suites, shared by the ``check`` command and the test suite.

Every suite is a function returning a :class:`SuiteResult`; all randomness
comes from ``random.Random`` instances derived from the seed and the fixture
index, so results do not depend on evaluation order.
"""

from __future__ import annotations

import itertools
import random
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Sequence

from .baire import VertexPath, ZERO, baire_distance, meet_length, truncate
from .embed import MetricGraphInstance, eta_of, lemma_holds, to_graph_instance, verify_lemma
from .graphspec import (
    INF,
    ClopenBoxes,
    Coloring,
    FiniteExplicit,
    GraphInstance,
    color_code,
    fixtures,
)
from .oracle import DownwardOracle
from .ultranorm import distance, rn_key, two_sided, ultranorm
from .words import Word, canonical, concat, equal, invert, reduce, truncate_word

MAX_SHOWN = 10


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    counterexamples: List[str] = field(default_factory=list)
    notes: Dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def fail(self, msg: str) -> None:
        self.counterexamples.append(msg)

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "violations": len(self.counterexamples),
            "counterexamples": self.counterexamples[:MAX_SHOWN],
        }

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = "" if self.passed else f" -- {len(self.counterexamples)} violations, e.g. {self.counterexamples[0]}"
        return f"[{status}] {self.name}: {self.checked} checks{extra}"


def _rng(seed: int, *salt) -> random.Random:
    return random.Random(repr((seed,) + salt))


# sampling


def random_path(rng: random.Random, depth: int = 6, alphabet: int = 4) -> VertexPath:
    return VertexPath([rng.randrange(alphabet) for _ in range(rng.randint(0, depth))], rng.randrange(alphabet))


def sample_vertex(rng: random.Random, g: GraphInstance, depth: int = 6) -> VertexPath:
    if isinstance(g.oracle, FiniteExplicit):
        return rng.choice(g.vertex_paths())
    return random_path(rng, depth)


def random_word(rng: random.Random, g: GraphInstance, max_len: int = 8, max_exp: int = 3, depth: int = 6) -> Word:
    exps = [e for e in range(-max_exp, max_exp + 1) if e]
    k = rng.randint(0, max_len)
    return Word([(sample_vertex(rng, g, depth), rng.choice(exps)) for _ in range(k)], g.coloring)


def standard_fixtures() -> Dict[str, GraphInstance]:
    """The fixture graphs the randomized suites run over."""
    mixed = [INF, 2, 3, INF, 4, 5]
    return {
        "free": fixtures("free", orders=mixed),
        "complete": fixtures("complete", orders=mixed),
        "half-graph(6)": fixtures("half-graph", size=6),
        "boxes#1": fixtures("random-boxes", seed=1),
        "boxes#2": fixtures("random-boxes", seed=2),
        "boxes#3": fixtures("random-boxes", seed=3),
    }


def three_vertex_graphs():
    """All 3-vertex finite graphs: 8 edge subsets times orders in {2, 3, inf}^3."""
    pairs = [(0, 1), (0, 2), (1, 2)]
    out = []
    for orders in itertools.product((2, 3, INF), repeat=3):
        paths = [VertexPath([color_code(o), 0, i], 0) for i, o in enumerate(orders)]
        names = {f"x{i}": p for i, p in enumerate(paths)}
        coloring = Coloring({color_code(o): o for o in orders}, INF)
        for mask in range(8):
            edges = []
            for bit, (i, j) in enumerate(pairs):
                if mask >> bit & 1:
                    edges += [(f"x{i}", f"x{j}"), (f"x{j}", f"x{i}")]
            out.append((f"orders={tuple(map(str, orders))} edges={mask:03b}", GraphInstance(FiniteExplicit(names, edges), coloring)))
    return out


def small_word_corpus(g: GraphInstance, max_syllables: int = 4, exps: Sequence[int] = (1, -1, 2, -2)) -> List[Word]:
    """Every word with at most ``max_syllables`` syllables over ``g``'s named vertices."""
    verts = g.vertex_paths()
    seen = {}
    for k in range(max_syllables + 1):
        for vs in itertools.product(range(len(verts)), repeat=k):
            if any(vs[i] == vs[i + 1] for i in range(k - 1)):
                continue
            for es in itertools.product(exps, repeat=k):
                w = Word([(verts[i], e) for i, e in zip(vs, es)], g.coloring)
                seen.setdefault(w.syllables, w)
    return list(seen.values())


# suites


def suite_oracle_compare(max_len: int = 12, max_syllables: int = 4, graphs=None) -> SuiteResult:
    """words.equal against the brute-force oracle on every pair of the small corpus."""
    res = SuiteResult("oracle-compare")
    for label, g in graphs if graphs is not None else three_vertex_graphs():
        corpus = small_word_corpus(g, max_syllables)
        oracle = DownwardOracle(g)
        by_canon = defaultdict(list)
        for w in corpus:
            by_canon[canonical(w, g).syllables].append(w)
        keys = {w.syllables: oracle.key(w) for w in corpus}
        owner = {}
        for canon, members in by_canon.items():
            first = keys[members[0].syllables]
            for w in members[1:]:
                if not keys[w.syllables] & first:
                    res.fail(f"{label}: {w!r} ~ {members[0]!r} by normal form, oracle disagrees")
            for t in set().union(*(keys[w.syllables] for w in members)):
                other = owner.setdefault(t, canon)
                if other != canon:
                    res.fail(f"{label}: oracle identifies normal forms {other!r} and {canon!r}")
        n = len(corpus)
        res.checked += n * (n - 1) // 2
    return res


def suite_confluence(samples: int = 1000, seed: int = 0) -> SuiteResult:
    res = SuiteResult("words: confluence")
    for idx, (name, g) in enumerate(standard_fixtures().items()):
        rng = _rng(seed, "confluence", idx)
        for _ in range(samples):
            w = random_word(rng, g)
            det = reduce(w, g)
            rnd = reduce(w, g, rng=rng)
            res.checked += 1
            if len(det) != len(rnd):
                res.fail(f"{name}: {w!r} reduces to lengths {len(det)} and {len(rnd)}")
            elif canonical(rnd, g) != canonical(w, g):
                res.fail(f"{name}: {w!r} canonical form depends on reduction order")
    return res


def suite_group_laws(samples: int = 300, seed: int = 0) -> SuiteResult:
    res = SuiteResult("words: group laws")
    for idx, (name, g) in enumerate(standard_fixtures().items()):
        rng = _rng(seed, "laws", idx)
        for _ in range(samples):
            u, v, w = (random_word(rng, g, max_len=5) for _ in range(3))
            res.checked += 1
            if canonical(concat(w, invert(w)), g):
                res.fail(f"{name}: w w^-1 != e for {w!r}")
            if canonical(concat(concat(u, v), w), g) != canonical(concat(u, concat(v, w)), g):
                res.fail(f"{name}: associativity fails for {u!r}, {v!r}, {w!r}")
            if not equal(w, concat(w, Word.identity(g.coloring)), g):
                res.fail(f"{name}: w e != w for {w!r}")
    return res


def suite_truncation(max_depth: int = 6, max_syllables: int = 3, graphs=None) -> SuiteResult:
    """Equal words stay equal in every truncation group."""
    res = SuiteResult("words: truncation well-defined")
    for label, g in graphs if graphs is not None else three_vertex_graphs():
        groups = defaultdict(list)
        for w in small_word_corpus(g, max_syllables):
            groups[canonical(w, g).syllables].append(w)
        for n in range(1, max_depth + 1):
            gn = g.at_depth(n)
            for members in groups.values():
                if len(members) < 2:
                    continue
                ref = canonical(truncate_word(members[0], n), gn)
                for w in members[1:]:
                    res.checked += 1
                    if canonical(truncate_word(w, n), gn) != ref:
                        res.fail(f"{label}: {w!r} and {members[0]!r} split at depth {n}")
    return res


def suite_ultranorm_axioms(samples: int = 1000, seed: int = 0) -> SuiteResult:
    res = SuiteResult("ultranorm: axioms")
    for idx, (name, g) in enumerate(standard_fixtures().items()):
        rng = _rng(seed, "axioms", idx)
        for _ in range(samples):
            w1, w2 = random_word(rng, g), random_word(rng, g)
            r1, r2 = ultranorm(w1, g), ultranorm(w2, g)
            r12 = ultranorm(concat(w1, w2), g)
            res.checked += 1
            for w, r in ((w1, r1), (w2, r2)):
                if r.value.is_zero != (not canonical(w, g)):
                    res.fail(f"{name}: d(g)=0 iff g=e fails for {w!r}")
                if not r.is_identity:
                    c = canonical(w, g)
                    if any(canonical(truncate_word(c, k), g.at_depth(k)) for k in range(1, r.n)):
                        res.fail(f"{name}: {w!r} nontrivial below its norm depth {r.n}")
            if r12.value > max(r1.value, r2.value):
                res.fail(f"{name}: d(gh) > max(d(g), d(h)) for {w1!r}, {w2!r}")
            if ultranorm(invert(w1), g).value != r1.value:
                res.fail(f"{name}: d(g) != d(g^-1) for {w1!r}")
    return res


def suite_strong_triangle(samples: int = 300, seed: int = 0) -> SuiteResult:
    res = SuiteResult("ultranorm: strong triangle")
    for idx, (name, g) in enumerate(standard_fixtures().items()):
        rng = _rng(seed, "triangle", idx)
        for _ in range(samples):
            u, v, w = (random_word(rng, g, max_len=5) for _ in range(3))
            res.checked += 1
            if distance(u, w, g) > max(distance(u, v, g), distance(v, w, g)):
                res.fail(f"{name}: strong triangle fails for {u!r}, {v!r}, {w!r}")
    return res


def suite_left_invariance(samples: int = 500, seed: int = 0) -> SuiteResult:
    res = SuiteResult("ultranorm: left invariance")
    for idx, (name, g) in enumerate(standard_fixtures().items()):
        rng = _rng(seed, "left", idx)
        for _ in range(samples):
            k, a, b = (random_word(rng, g) for _ in range(3))
            res.checked += 1
            if distance(concat(k, a), concat(k, b), g) != distance(a, b, g):
                res.fail(f"{name}: d(kg, kh) != d(g, h) for k={k!r}, g={a!r}, h={b!r}")
    return res


def suite_baire_extension(samples: int = 200, seed: int = 0) -> SuiteResult:
    res = SuiteResult("ultranorm: extends Baire metric")
    for idx, (name, g) in enumerate(standard_fixtures().items()):
        rng = _rng(seed, "extension", idx)
        done = 0
        while done < samples:
            u, v = sample_vertex(rng, g), sample_vertex(rng, g)
            if u == v:
                continue
            done += 1
            res.checked += 1
            got = distance(Word.gen(g.coloring, u), Word.gen(g.coloring, v), g)
            want = Fraction(1, 2 ** (meet_length(u, v) + 1))
            if got.as_fraction() != want or got != baire_distance(u, v):
                res.fail(f"{name}: d({u!r}, {v!r}) = {got!r}, expected {want}")
    return res


def _perturb(rng: random.Random, w: Word, g: GraphInstance, n: int) -> Word:
    c = canonical(w, g)
    out = []
    for v, e in c.syllables:
        head = truncate(v, n)
        if isinstance(g.oracle, FiniteExplicit):
            near = [p for p in g.vertex_paths() if truncate(p, n) == head]
            out.append((rng.choice(near), e))
        else:
            out.append((VertexPath(head + tuple(rng.randrange(4) for _ in range(rng.randint(0, 3))), rng.randrange(4)), e))
    return Word(out, g.coloring)


def suite_rn_density(samples: int = 200, seed: int = 0, depths=range(1, 6)) -> SuiteResult:
    """Equal depth-n fingerprints force distance at most 2^-(n+1)."""
    res = SuiteResult("ultranorm: R_n density")
    equal_keys = 0
    for idx, (name, g) in enumerate(standard_fixtures().items()):
        rng = _rng(seed, "rn", idx)
        words = [random_word(rng, g) for _ in range(samples)]
        for n in depths:
            bound = Fraction(1, 2 ** (n + 1))
            buckets = defaultdict(list)
            for w in words:
                buckets[rn_key(w, g, n)].append(w)
            candidates = [(ws[0], x) for ws in buckets.values() for x in ws[1:]]
            candidates += [(w, _perturb(rng, w, g, n)) for w in words]
            for a, b in candidates:
                if rn_key(a, g, n) != rn_key(b, g, n):
                    continue
                equal_keys += 1
                res.checked += 1
                if distance(a, b, g).as_fraction() > bound:
                    res.fail(f"{name}: equal R_{n} keys but d > 2^-{n + 1} for {a!r}, {b!r}")
    res.notes["pairs with equal keys"] = equal_keys
    return res


def suite_en_monotonicity(max_depth: int = 6, horizon: int = 8, seed: int = 0,
                          exhaustive_depth: int = 4, sampled: int = 4000, pairs: int = 300) -> SuiteResult:
    """E_{n+1} projects into E_n; non-edges separate at a finite depth and stay separated."""
    res = SuiteResult("graphspec: E_n monotone and exact")
    graphs = dict(standard_fixtures())
    for s in range(5):
        graphs[f"boxes-extra#{s}"] = fixtures("random-boxes", seed=100 + s, n_boxes=5, max_box_len=4)
    for idx, (name, g) in enumerate(graphs.items()):
        rng = _rng(seed, "en", idx)
        if isinstance(g.oracle, FiniteExplicit):
            verts = g.vertex_paths()
            for n in range(1, max_depth + 1):
                heads = sorted({truncate(p, n + 1) for p in verts})
                for a in heads:
                    for b in heads:
                        if g.edge_at_depth(a, b):
                            res.checked += 1
                            if not g.edge_at_depth(a[:n], b[:n]):
                                res.fail(f"{name}: ({a}, {b}) in E_{n + 1} but not projected into E_{n}")
            concrete = [(u, v) for u in verts for v in verts]
        else:
            symbols = sorted({x for box in g.oracle.boxes for side in box for x in side} | {max(
                (x for box in g.oracle.boxes for side in box for x in side), default=0) + 1})
            for n in range(1, max_depth + 1):
                if n + 1 <= exhaustive_depth:
                    heads = list(itertools.product(symbols, repeat=n + 1))
                    todo = ((a, b) for a in heads for b in heads)
                else:
                    todo = (_box_biased_pair(rng, g.oracle, symbols, n + 1) for _ in range(sampled))
                for a, b in todo:
                    if g.edge_at_depth(a, b):
                        res.checked += 1
                        if not g.edge_at_depth(a[:n], b[:n]):
                            res.fail(f"{name}: ({a}, {b}) in E_{n + 1} but not projected into E_{n}")
            concrete = [(random_path(rng, 6, len(symbols)), random_path(rng, 6, len(symbols))) for _ in range(pairs)]
        for u, v in concrete:
            if g.adjacent(u, v):
                for n in range(1, horizon + 1):
                    res.checked += 1
                    if not g.edge_at_depth(truncate(u, n), truncate(v, n)):
                        res.fail(f"{name}: edge ({u!r}, {v!r}) missing from E_{n}")
                continue
            k = g.nonadjacency_depth(u, v)
            for n in range(k, max(horizon, k) + 1):
                res.checked += 1
                if g.edge_at_depth(truncate(u, n), truncate(v, n)):
                    res.fail(f"{name}: non-edge ({u!r}, {v!r}) back in E_{n} after separating at {k}")
    return res


def _box_biased_pair(rng, oracle: ClopenBoxes, symbols, n):
    def grow(p):
        p = list(p[:n])
        return tuple(p + [rng.choice(symbols) for _ in range(n - len(p))])

    if oracle.boxes and rng.random() < 0.7:
        p, q = rng.choice(oracle.boxes)
        a, b = grow(p), grow(q)
        return (a, b) if rng.random() < 0.5 else (b, a)
    return grow(()), grow(())


# embedding corpus


def _line_metric(xs):
    return [[abs(x - y) for y in xs] for x in xs]


def _l1_metric(pts):
    return [[abs(p[0] - q[0]) + abs(p[1] - q[1]) for q in pts] for p in pts]


def _path_metric(rng, n):
    inf = None
    d = [[Fraction(0) if i == j else inf for j in range(n)] for i in range(n)]
    for i in range(1, n):
        j = rng.randrange(i)
        w = Fraction(rng.randint(1, 9), rng.choice([2, 3, 4, 10, 16]))
        d[i][j] = d[j][i] = w
    for _ in range(n):
        i, j = rng.sample(range(n), 2)
        w = Fraction(rng.randint(1, 9), rng.choice([2, 3, 4, 10, 16]))
        if d[i][j] is None or w < d[i][j]:
            d[i][j] = d[j][i] = w
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] is not None and d[k][j] is not None:
                    via = d[i][k] + d[k][j]
                    if d[i][j] is None or via < d[i][j]:
                        d[i][j] = via
    return d


def _ultra_metric(rng, n):
    # random hierarchy: merge clusters at increasing heights
    clusters = [[i] for i in range(n)]
    d = [[Fraction(0)] * n for _ in range(n)]
    height = Fraction(1, 1000)
    while len(clusters) > 1:
        height *= rng.choice([2, 3, 5])
        i, j = sorted(rng.sample(range(len(clusters)), 2))
        a, b = clusters[i], clusters.pop(j)
        for x in a:
            for y in b:
                d[x][y] = d[y][x] = height
        a.extend(b)
    return d


def _edges(rng, n, p):
    es = {(i, i) for i in range(n)}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                es |= {(i, j), (j, i)}
    return sorted(es)


COLOR_POOL = (INF, 2, 3, 4, 5, 7, 8, 9)


def embed_corpus(seed: int = 0) -> Dict[str, MetricGraphInstance]:
    """Finite metric graphs with 2 to 32 points, including the extreme cases."""
    out: Dict[str, MetricGraphInstance] = {}
    out["two-point"] = MetricGraphInstance(
        ["a0", "a1"], [[0, Fraction(1, 10)], [Fraction(1, 10), 0]], [2, 2], [(0, 0), (1, 1)])
    size = 4
    names = [f"a{i}" for i in range(size)] + [f"b{i}" for i in range(size)]
    half = [(i, i) for i in range(2 * size)]
    for i in range(size):
        for j in range(i + 1, size):
            half += [(i, size + j), (size + j, i)]
    out["half-graph(4)"] = MetricGraphInstance(
        names, [[0 if i == j else 1 for j in range(2 * size)] for i in range(2 * size)], [INF] * (2 * size), half)
    xs = [Fraction(k, 7) for k in range(6)]
    out["complete-line(6)"] = MetricGraphInstance(
        [f"p{i}" for i in range(6)], _line_metric(xs), [2, 2, 3, 3, INF, INF], [(i, j) for i in range(6) for j in range(6)])
    out["edge-free-line(6)"] = MetricGraphInstance(
        [f"p{i}" for i in range(6)], _line_metric(xs), [INF] * 6, [(i, i) for i in range(6)])
    out["klein-four"] = MetricGraphInstance(
        ["x", "y"], [[0, 1], [1, 0]], [2, 2], [(0, 0), (0, 1), (1, 0), (1, 1)])
    kinds = ["line", "l1", "path", "ultra"]
    for s in range(20):
        rng = _rng(seed, "embed", s)
        n = [3, 5, 8, 12, 16, 24, 32][s % 7]
        kind = kinds[s % 4]
        if kind == "line":
            d = _line_metric([Fraction(rng.randint(0, 200), rng.choice([1, 3, 8, 64])) for _ in range(n)])
        elif kind == "l1":
            d = _l1_metric([(Fraction(rng.randint(0, 40), 16), Fraction(rng.randint(0, 40), 9)) for _ in range(n)])
        elif kind == "path":
            d = _path_metric(rng, n)
        else:
            d = _ultra_metric(rng, n)
        if any(d[i][j] == 0 for i in range(n) for j in range(n) if i != j):
            # collapse duplicate points by nudging along a fresh axis
            d = [[d[i][j] + (0 if i == j else Fraction(1, 4096)) for j in range(n)] for i in range(n)]
        colors = [rng.choice(COLOR_POOL) for _ in range(n)]
        out[f"{kind}#{s}(n={n})"] = MetricGraphInstance(
            [f"q{i}" for i in range(n)], d, colors, _edges(rng, n, rng.choice([0.1, 0.3, 0.6])))
    return out


def suite_embed_lemma(seed: int = 0) -> SuiteResult:
    res = SuiteResult("embed: lemma clauses")
    for name, inst in embed_corpus(seed).items():
        problems = inst.violations()
        if problems:
            res.fail(f"{name}: invalid corpus instance: {problems[0]}")
            continue
        for clause in verify_lemma(inst):
            res.checked += 1
            if not clause.passed:
                res.fail(f"{name}: {clause.name}: {clause.detail}")
        g = to_graph_instance(inst)
        etas = [eta_of(inst, a) for a in range(len(inst))]
        for a in range(len(inst)):
            for b in range(len(inst)):
                res.checked += 1
                if ((a, b) in inst.edge_set) != g.adjacent(etas[a], etas[b]):
                    res.fail(f"{name}: edge ({a},{b}) not preserved")
    return res


def suite_pipeline(samples: int = 200, seed: int = 0) -> SuiteResult:
    res = SuiteResult("embed: pipeline coherence")
    for idx, (name, inst) in enumerate(embed_corpus(seed).items()):
        if not lemma_holds(verify_lemma(inst)):
            res.fail(f"{name}: lemma fails, pipeline skipped")
            continue
        g = to_graph_instance(inst)
        etas = g.vertex_paths()
        for a in etas:
            for b in etas:
                res.checked += 1
                if distance(Word.gen(g.coloring, a), Word.gen(g.coloring, b), g) != baire_distance(a, b):
                    res.fail(f"{name}: d({a!r}, {b!r}) != Baire distance")
        rng = _rng(seed, "pipeline", idx)
        for _ in range(samples):
            x, y, z = (random_word(rng, g, max_len=4, max_exp=2) for _ in range(3))
            dxy, dyz, dxz = two_sided(x, y, g), two_sided(y, z, g), two_sided(x, z, g)
            res.checked += 1
            if dxy != two_sided(y, x, g):
                res.fail(f"{name}: D not symmetric on {x!r}, {y!r}")
            if (dxy == 0) != equal(x, y, g) or two_sided(x, x, g) != 0:
                res.fail(f"{name}: D(x, y) = 0 iff x = y fails on {x!r}, {y!r}")
            if dxz > dxy + dyz:
                res.fail(f"{name}: D triangle fails on {x!r}, {y!r}, {z!r}")
            if not (0 <= dxy < 2):
                res.fail(f"{name}: D out of range on {x!r}, {y!r}")
    return res


def suite_baire(samples: int = 2000, seed: int = 0) -> SuiteResult:
    res = SuiteResult("baire: ultrametric tree")
    rng = _rng(seed, "baire")
    for _ in range(samples):
        u, v, w = (random_path(rng, 5, 3) for _ in range(3))
        if len({u, v, w}) < 3:
            continue
        res.checked += 1
        if meet_length(u, w) < min(meet_length(u, v), meet_length(v, w)):
            res.fail(f"meet property fails for {u!r}, {v!r}, {w!r}")
        if baire_distance(u, w) > max(baire_distance(u, v), baire_distance(v, w)):
            res.fail(f"strong triangle fails for {u!r}, {v!r}, {w!r}")
        k = meet_length(u, v)
        if truncate(u, k) != truncate(v, k) or truncate(u, k + 1) == truncate(v, k + 1):
            res.fail(f"meet length of {u!r}, {v!r} is not sharp")
    return res


def acceptance_suites(samples: int | None = None, seed: int = 42) -> Dict[str, Callable[[], SuiteResult]]:
    """The eight exit criteria, keyed by number; ``samples`` overrides sample counts."""

    def pick(default):
        return default if samples is None else samples

    def criterion7():
        return suite_en_monotonicity(seed=seed)

    return {
        "1 oracle equivalence": lambda: suite_oracle_compare(max_len=12),
        "2 ultranorm axioms": lambda: suite_ultranorm_axioms(samples=pick(1000), seed=seed),
        "3 left invariance": lambda: suite_left_invariance(samples=pick(500), seed=seed),
        "4 Baire extension": lambda: suite_baire_extension(samples=pick(200), seed=seed),
        "5 R_n density": lambda: suite_rn_density(samples=pick(200), seed=seed),
        "6 metric-to-ultrametric lemma": lambda: suite_embed_lemma(seed=seed),
        "7 E_n monotonicity/exactness": criterion7,
        "8 pipeline coherence": lambda: suite_pipeline(samples=pick(200), seed=seed),
    }


def module_suites(samples: int = 200, seed: int = 42) -> Dict[str, List[Callable[[], SuiteResult]]]:
    return {
        "baire": [lambda: suite_baire(samples * 10, seed)],
        "graphspec": [lambda: suite_en_monotonicity(seed=seed)],
        "words": [
            lambda: suite_confluence(samples, seed),
            lambda: suite_group_laws(max(1, samples // 3), seed),
            lambda: suite_truncation(),
        ],
        "ultranorm": [
            lambda: suite_ultranorm_axioms(samples, seed),
            lambda: suite_strong_triangle(max(1, samples // 3), seed),
            lambda: suite_left_invariance(samples, seed),
            lambda: suite_baire_extension(samples, seed),
            lambda: suite_rn_density(samples, seed),
        ],
        "embed": [lambda: suite_embed_lemma(seed), lambda: suite_pipeline(samples, seed)],
        "oracle-compare": [lambda: suite_oracle_compare()],
    }
