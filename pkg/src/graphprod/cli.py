"""Command-line entry point: ``graphprod <command> ...``.

Exit codes: 0 success, 1 property violation, 2 input or validation error,
3 the edge oracle could not decide a needed pair.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List

from .baire import UltraValue
from .checks import SuiteResult, acceptance_suites, module_suites, suite_en_monotonicity, suite_truncation
from .embed import MetricGraphInstance, lemma_holds, to_graph_instance, verify_lemma
from .errors import BoundTooSmallError, OracleResolutionError, ValidationError
from .graphspec import GraphInstance, fixtures
from .oracle import oracle_equal
from .ultranorm import distance, ultranorm
from .words import Word, canonical, equal

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_ORACLE = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"{path}: {e}") from None


def load_graph(path: str) -> GraphInstance:
    try:
        return GraphInstance.from_json(_load_json(path))
    except ValidationError as e:
        raise InputError(f"{path}: {e}") from None


def load_word(path: str, g: GraphInstance) -> Word:
    try:
        return Word.from_json(_load_json(path), g.coloring)
    except (ValueError, TypeError) as e:
        raise InputError(f"{path}: {e}") from None


def render_word(w: Word) -> str:
    return " ".join(f"{v!r}^{e}" for v, e in w.syllables) or "e"


class Output:
    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def emit(self, record: dict, human: str) -> None:
        if self.fmt == "structured":
            print(json.dumps(record, separators=(",", ":")), file=self.stream)
        else:
            print(human, file=self.stream)


def _value_record(v: UltraValue) -> dict:
    return v.to_json()


def cmd_reduce(args, out: Output) -> int:
    g = load_graph(args.graph)
    w = load_word(_one(args.word, "--word"), g)
    c = canonical(w, g)
    out.emit({"command": "reduce", "syllables": len(c), "word": c.to_json()}, render_word(c))
    return EXIT_OK


def cmd_norm(args, out: Output) -> int:
    g = load_graph(args.graph)
    w = load_word(_one(args.word, "--word"), g)
    r = ultranorm(w, g)
    rec = {"command": "norm", "n": r.n, "value": _value_record(r.value), "certificate": r.certificate.to_json()}
    human = "identity: d = 0" if r.is_identity else f"n = {r.n}, d = {r.value.decimal()}  ({render_word(r.certificate)})"
    out.emit(rec, human)
    return EXIT_OK


def cmd_dist(args, out: Output) -> int:
    g = load_graph(args.graph)
    if not args.word or len(args.word) != 2:
        raise InputError("dist needs exactly two --word files")
    w1, w2 = (load_word(p, g) for p in args.word)
    v = distance(w1, w2, g)
    human = "zero" if v.is_zero else f"n = {v.n}, d = {v.decimal()}"
    out.emit({"command": "dist", "value": _value_record(v)}, human)
    return EXIT_OK


def cmd_embed(args, out: Output) -> int:
    try:
        inst = MetricGraphInstance.from_json(_load_json(args.metric))
    except ValidationError as e:
        raise InputError(f"{args.metric}: {e}") from None
    report = verify_lemma(inst)
    for clause in report:
        out.emit(
            {"command": "embed", "clause": clause.name, "passed": clause.passed, "detail": clause.detail},
            f"[{'PASS' if clause.passed else 'FAIL'}] {clause.name}" + (f": {clause.detail}" if clause.detail else ""),
        )
    if not lemma_holds(report):
        return EXIT_VIOLATION
    g = to_graph_instance(inst)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(g.to_json(), fh, indent=2)
            fh.write("\n")
    out.emit(
        {"command": "embed", "vertices": len(g.oracle.vertices), "out": args.out},
        f"graph with {len(g.oracle.vertices)} vertices" + (f" written to {args.out}" if args.out else ""),
    )
    return EXIT_OK


def _suites_for(name: str, args) -> List:
    samples = args.samples
    if name == "acceptance":
        return list(acceptance_suites(samples=samples, seed=args.seed).values())
    if name == "graphspec" and args.depth is not None:
        return [lambda: suite_en_monotonicity(max_depth=args.depth, seed=args.seed)]
    if name == "words" and args.depth is not None:
        table = module_suites(samples if samples is not None else 200, args.seed)["words"]
        return table[:2] + [lambda: suite_truncation(max_depth=args.depth)]
    table = module_suites(samples if samples is not None else 200, args.seed)
    if name == "all":
        return [f for fs in table.values() for f in fs]
    if name not in table:
        raise InputError(f"unknown suite {name!r}; choose from {', '.join(list(table) + ['acceptance', 'all'])}")
    return table[name]


def cmd_check(args, out: Output) -> int:
    status = EXIT_OK
    for run in _suites_for(args.suite, args):
        res: SuiteResult = run()
        rec = {"command": "check", **res.to_json()}
        human = res.line()
        if not res.passed:
            human += "".join(f"\n    {c}" for c in res.counterexamples[:10])
            status = EXIT_VIOLATION
        out.emit(rec, human)
    return status


def cmd_oracle_compare(args, out: Output) -> int:
    if not args.word:
        args.suite = "oracle-compare"
        return cmd_check(args, out)
    g = load_graph(args.graph)
    if len(args.word) != 2:
        raise InputError("oracle-compare needs zero or two --word files")
    w1, w2 = (load_word(p, g) for p in args.word)
    fast = equal(w1, w2, g)
    slow = oracle_equal(w1, w2, g, max_len=args.max_len)
    out.emit(
        {"command": "oracle-compare", "equal": fast, "oracle": slow, "agree": fast == slow},
        f"normal forms: {'equal' if fast else 'different'}; oracle: {'equal' if slow else 'different'}",
    )
    return EXIT_OK if fast == slow else EXIT_VIOLATION


def cmd_fixture(args, out: Output) -> int:
    try:
        orders = args.orders.split(",") if args.orders else None
        g = fixtures(args.kind, n=args.n, orders=orders, size=args.size, seed=args.seed)
    except ValueError as e:
        raise InputError(str(e)) from None
    text = json.dumps(g.to_json(), indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def _one(words, flag):
    if not words or len(words) != 1:
        raise InputError(f"exactly one {flag} is required")
    return words[0]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "structured"), default="human")
    common.add_argument("--graph")
    common.add_argument("--word", action="append")
    common.add_argument("--metric")
    common.add_argument("--out")
    common.add_argument("--suite", default="all")
    common.add_argument("--samples", type=int)
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--depth", type=int)
    common.add_argument("--max-len", type=int, default=12)

    p = argparse.ArgumentParser(prog="graphprod", description="Graph products of cyclic groups on Baire space.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("reduce", parents=[common], help="print the normal form of a word")
    sub.add_parser("norm", parents=[common], help="ultranorm of a word")
    sub.add_parser("dist", parents=[common], help="distance between two words")
    sub.add_parser("embed", parents=[common], help="embed a finite metric graph into Baire space")
    sub.add_parser("check", parents=[common], help="run property suites")
    sub.add_parser("oracle-compare", parents=[common], help="compare normal forms with the brute-force oracle")
    fx = sub.add_parser("fixture", parents=[common], help="write a standard graph instance")
    fx.add_argument("kind", choices=("free", "complete", "half-graph", "random-boxes"))
    fx.add_argument("--n", type=int)
    fx.add_argument("--orders", help="comma separated, e.g. 2,3,inf")
    fx.add_argument("--size", type=int, default=4)
    return p


COMMANDS = {
    "reduce": cmd_reduce,
    "norm": cmd_norm,
    "dist": cmd_dist,
    "embed": cmd_embed,
    "check": cmd_check,
    "oracle-compare": cmd_oracle_compare,
    "fixture": cmd_fixture,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = Output(args.format)
    try:
        if args.command in ("reduce", "norm", "dist") and not args.graph:
            raise InputError("--graph is required")
        if args.command == "embed" and not args.metric:
            raise InputError("--metric is required")
        return COMMANDS[args.command](args, out)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except BoundTooSmallError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except OracleResolutionError as e:
        print(f"oracle error: {e}", file=sys.stderr)
        return EXIT_ORACLE


if __name__ == "__main__":
    sys.exit(main())
