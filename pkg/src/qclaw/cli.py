"""``qclaw`` command line.

Exit codes: 0 success, 1 a check found violations, 2 malformed input or a
rejected request (non-reduced word, frozen mutation, failed division, ...).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .checks import DEFAULT_RNG_SEED, SUITES, resolve_suites, run_checks
from .glsinit import initial_seed
from .graph import enumerate_graph
from .rootdata import CartanDatum, named_cartan, parse_matrix, parse_word
from .seed import SCHEMA, QuantumSeed

EXIT_OK, EXIT_VIOLATIONS, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    pass


def _cartan(args) -> CartanDatum:
    if args.type and args.matrix:
        raise InputError("give either --type or --matrix, not both")
    if args.type:
        return named_cartan(args.type)
    if args.matrix:
        return parse_matrix(args.matrix)
    raise InputError("a Cartan datum is needed: --type or --matrix")


def _load_seed(args) -> QuantumSeed:
    src = getattr(args, "seed_file", None)
    if src:
        text = sys.stdin.read() if src == "-" else Path(src).read_text(encoding="utf-8")
        try:
            return QuantumSeed.from_json(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"malformed JSON: {exc}") from exc
    if args.word is None:
        raise InputError("give a seed JSON file or --word with --type/--matrix")
    try:
        word = parse_word(args.word)
    except ValueError as exc:
        raise InputError(f"malformed word {args.word!r}") from exc
    return initial_seed(_cartan(args), word)


def _mutations(args) -> list[int]:
    out = []
    for item in args.at or ():
        try:
            out.extend(int(x) for x in item.split(",") if x.strip())
        except ValueError as exc:
            raise InputError(f"malformed --at value {item!r}") from exc
    return out


def _emit(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out and out != "-":
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_init(args) -> int:
    _emit(_load_seed(args).to_json(), args.out)
    return EXIT_OK


def cmd_mutate(args) -> int:
    seed = _load_seed(args).mutate_path(_mutations(args))
    _emit(seed.to_json(), args.out)
    return EXIT_OK


def cmd_expand(args) -> int:
    seed = _load_seed(args).mutate_path(_mutations(args))
    doc = {"schema": SCHEMA, "kind": "expansion", "exchangeable": list(seed.exchangeable)}
    if args.monomial is not None:
        c = parse_word(args.monomial)
        f = seed.normalized_monomial(c)
        doc["monomial"] = list(c)
        doc["text"] = f.to_text()
        doc["terms"] = f.to_json_obj()
    else:
        doc["variables"] = [
            {
                "index": i,
                "label": seed.labels[i - 1],
                "weight": list(seed.weights[i - 1]),
                "text": seed.variable(i).to_text(),
                "terms": seed.variable(i).to_json_obj(),
            }
            for i in seed.indices
        ]
    _emit(json.dumps(doc, indent=1, sort_keys=True), args.out)
    return EXIT_OK


def cmd_graph(args) -> int:
    g = enumerate_graph(_load_seed(args), args.max_depth)
    _emit(json.dumps(g.to_json_obj(), indent=1, sort_keys=True), args.out)
    if args.dot:
        Path(args.dot).write_text(g.to_dot(), encoding="utf-8")
    return EXIT_OK


def cmd_export_dot(args) -> int:
    g = enumerate_graph(_load_seed(args), args.max_depth)
    _emit(g.to_dot(), args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    seed = _load_seed(args)
    names = resolve_suites(args.suite)
    report = run_checks(seed, names, rng_seed=args.seed, max_depth=args.max_depth)
    _emit(json.dumps(report, indent=1, sort_keys=True), args.out)
    for s in report["suites"]:
        status = "ok" if s["violation_count"] == 0 else f"{s['violation_count']} violations"
        print(f"{s['check_name']}: {s['instances_checked']} instances, {status}", file=sys.stderr)
    print(f"rng seed {report['rng_seed']}", file=sys.stderr)
    return EXIT_OK if report["violation_count"] == 0 else EXIT_VIOLATIONS


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qclaw", description="Exact quantum seeds from reduced words.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, mutations=False, depth=False):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("seed_file", nargs="?", help="seed JSON file, or - for stdin")
        sp.add_argument("--type", help="Cartan type such as A3, D4, E6")
        sp.add_argument("--matrix", help="Cartan matrix, rows separated by ';'")
        sp.add_argument("--word", help="reduced word, e.g. 1,2,1")
        sp.add_argument("--out", help="output file (default stdout)")
        if mutations:
            sp.add_argument("--at", action="append", help="mutation index (repeatable, or comma list)")
        if depth:
            sp.add_argument("--max-depth", type=int, default=32)
        sp.set_defaults(func=func)
        return sp

    add("init", cmd_init, "print the initial seed of a reduced word")
    add("mutate", cmd_mutate, "apply a sequence of mutations", mutations=True)
    ex = add("expand", cmd_expand, "print cluster expansions in the ambient torus", mutations=True)
    ex.add_argument("--monomial", help="exponent vector c of a normalized cluster monomial")
    gr = add("graph", cmd_graph, "enumerate the exchange graph", depth=True)
    gr.add_argument("--dot", help="also write the graph in DOT format to this file")
    add("export-dot", cmd_export_dot, "print the exchange graph in DOT format", depth=True)
    ch = add("check", cmd_check, "run invariant suites", depth=True)
    ch.add_argument("--suite", default="all", help=f"'all' or a comma list of: {', '.join(SUITES)}")
    ch.add_argument("--seed", type=int, default=DEFAULT_RNG_SEED, help="PRNG seed for randomised suites")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, KeyError, TypeError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
