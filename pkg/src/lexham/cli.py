"""Command-line interface.

Exit codes: 0 yes / valid, 1 no / invalid, 2 bad input, 3 instance too large.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .decide import PROPERTIES, decide, normalize_property
from .dot import graph_dot, product_dot
from .errors import InstanceTooLarge, LexhamError
from .forest import max_linear_forest, pi
from .graphs import ProductVertex, ProductWalk, SimpleGraph
from .oracle import oracle_report
from .product import ProductSpec, build_product
from .verify import verify_ham_cycle, verify_ham_path
from .witness import GOALS, construct

EXIT_YES, EXIT_NO, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load(path: str) -> dict:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _spec(path: str) -> ProductSpec:
    return ProductSpec.from_dict(_load(path))


def _point(text: str | None) -> ProductVertex | None:
    return None if text is None else ProductVertex.parse(text)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_pi(args) -> int:
    g = SimpleGraph.from_dict(_load(args.graph))
    value = pi(g)
    forest = max_linear_forest(g)
    if args.json:
        _emit({"pi": value, "forest": forest.to_dict()["components"]})
    else:
        print(f"pi = {value}")
        print("forest: " + " | ".join("-".join(map(str, c)) for c in forest.components))
    return EXIT_YES


def cmd_product(args) -> int:
    spec = _spec(args.spec)
    if args.emit == "dot":
        sys.stdout.write(graph_dot(build_product(spec), "product") if args.flat else product_dot(spec))
    else:
        _emit(build_product(spec).to_dict())
    return EXIT_YES


def cmd_decide(args) -> int:
    d = decide(_spec(args.spec), args.property)
    _emit(d.to_dict())
    return EXIT_YES if d.verdict else EXIT_NO


def cmd_construct(args) -> int:
    spec = _spec(args.spec)
    c = construct(spec, args.goal, _point(args.x), _point(args.y))
    if not c.feasible:
        _emit({"feasible": False, "reason": c.reason, **c.decision.to_dict()})
        return EXIT_NO
    if args.emit == "dot":
        sys.stdout.write(product_dot(spec, c.walk))
    else:
        out = c.walk.to_dict()
        if args.dump_multiple and c.multiple is not None:
            out["multiple"] = c.multiple.to_dict()
        _emit(out)
    return EXIT_YES


def cmd_verify(args) -> int:
    spec = _spec(args.spec)
    walk = ProductWalk.from_dict(_load(args.witness))
    if walk.closed:
        report = verify_ham_cycle(spec, walk)
    else:
        report = verify_ham_path(spec, walk, _point(args.x), _point(args.y))
    _emit(report.to_dict())
    return EXIT_YES if report else EXIT_NO


def _corpus(directory: Path, prop: str) -> int:
    rows, disagreements = [], 0
    for path in sorted(directory.glob("*.json")):
        spec = ProductSpec.from_dict(json.loads(path.read_text()))
        expected = decide(spec, prop).verdict
        try:
            found = oracle_report(spec, prop)["verdict"]
        except InstanceTooLarge:
            rows.append((path.name, expected, "skipped"))
            continue
        disagreements += found != expected
        rows.append((path.name, expected, found))
    width = max([len(r[0]) for r in rows] + [8])
    print(f"{'instance':<{width}}  decide  oracle  agree")
    for name, expected, found in rows:
        agree = "-" if found == "skipped" else ("yes" if found == expected else "NO")
        print(f"{name:<{width}}  {str(expected):<6}  {str(found):<6}  {agree}")
    print(f"{len(rows)} instances, {disagreements} disagreements")
    return EXIT_NO if disagreements else EXIT_YES


def cmd_oracle(args) -> int:
    prop = normalize_property(args.property)
    target = Path(args.spec)
    if target.is_dir():
        return _corpus(target, prop)
    report = oracle_report(_spec(args.spec), prop)
    _emit(report)
    return EXIT_YES if report["verdict"] else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lexham", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    props = [p.replace("_", "-") for p in PROPERTIES]

    p = sub.add_parser("pi", help="maximum spanning linear forest of a graph")
    p.add_argument("graph", help='graph JSON {"n": ..., "edges": [...]}, or - for stdin')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_pi)

    p = sub.add_parser("product", help="materialize P_m[H_1, ..., H_m]")
    p.add_argument("spec")
    p.add_argument("--emit", choices=["json", "dot"], default="json")
    p.add_argument("--flat", action="store_true", help="DOT of the full product graph")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("decide", help="closed-form decision")
    p.add_argument("spec")
    p.add_argument("--property", default="hamiltonian", choices=sorted(set(props) | set(PROPERTIES)))
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("construct", help="build and verify a witness")
    p.add_argument("spec")
    p.add_argument("--goal", default="cycle", choices=GOALS)
    p.add_argument("--x", help="start vertex as layer:inner")
    p.add_argument("--y", help="end vertex as layer:inner")
    p.add_argument("--emit", choices=["json", "dot"], default="json")
    p.add_argument("--dump-multiple", action="store_true", help="include the path multiple used")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a witness against a product")
    p.add_argument("spec")
    p.add_argument("witness")
    p.add_argument("--x")
    p.add_argument("--y")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive search; a directory runs a decide/oracle diff")
    p.add_argument("spec", help="spec file or a directory of spec files")
    p.add_argument("--property", default="hamiltonian", choices=sorted(set(props) | set(PROPERTIES)))
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InstanceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (InputError, LexhamError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
