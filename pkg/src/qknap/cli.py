"""Command-line interface.

Subcommands: solve (exact frontier), greedy (one efficient-ish
solution), enumerate (brute-force oracle), gen (deterministic random
instances), check (dominance verdict between two subsets), bench
(CSV sweep). Results go to stdout, diagnostics to stderr.

Exit codes: 0 success, 1 infeasible input subset, 2 input error,
3 enumeration guard tripped.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .dominance import (
    dominates,
    equivalent,
    evaluate,
    falsification_witness,
    suffix_sums,
    weakly_dominates,
)
from .greedy import greedy_r, greedy_w
from .instance_io import (
    GeneratorParams,
    ParseError,
    format_vector,
    generate_instance,
    parse_instance,
    serialize_frontier,
    serialize_instance,
)
from .model import InvalidInstanceError, rank_cardinality_vector, total_weight

__all__ = ["main"]

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_INPUT = 2
EXIT_GUARD = 3


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _load_instance(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(0, f"cannot read '{path}': {exc.strerror}")
    return parse_instance(text)


def _frontier_json(result) -> dict:
    return {
        "frontier": [
            {"vector": list(lab.vector), "weight": lab.weight, "items": list(lab.items)}
            for lab in result.labels
        ],
        "stats": {
            "labels": len(result.labels),
            "cells": result.stats.cells,
            "max_cell": result.stats.max_cell,
            "comparisons": result.stats.comparisons,
            "wall_time": result.stats.wall_time,
        },
    }


def _print_frontier(result, as_json: bool, matrix=None) -> None:
    if as_json:
        doc = _frontier_json(result)
        if matrix is not None:
            doc["matrix"] = [
                [[list(lab.vector) for lab in cell] for cell in row]
                for row in matrix.cells
            ]
        print(json.dumps(doc, indent=2))
        return
    sys.stdout.write(serialize_frontier(result))
    if matrix is not None:
        for i, row in enumerate(matrix.cells):
            for x, cell in enumerate(row):
                vecs = " ".join(format_vector(lab.vector) for lab in cell)
                print(f"cell {i} {x}:{' ' + vecs if vecs else ''}")


def _cmd_solve(args) -> int:
    from .dp import solve

    inst = _load_instance(args.instance)
    result = solve(inst, keep_matrix=args.matrix)
    _print_frontier(result, args.json, result.matrix if args.matrix else None)
    return EXIT_OK


def _cmd_greedy(args) -> int:
    inst = _load_instance(args.instance)
    result = greedy_r(inst) if args.mode == "r" else greedy_w(inst)
    ids = ",".join(str(i) for i in sorted(result.subset))
    print(
        f"items=[{ids}] vector={format_vector(result.vector)} "
        f"weight={result.weight} guarantee={result.guarantee.value}"
    )
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    from .oracle import OracleGuardError, enumerate_frontier

    inst = _load_instance(args.instance)
    try:
        result = enumerate_frontier(inst, force=args.force)
    except OracleGuardError as exc:
        return _fail(str(exc), EXIT_GUARD)
    _print_frontier(result, args.json)
    return EXIT_OK


def _cmd_gen(args) -> int:
    try:
        params = GeneratorParams(
            n=args.n,
            k=args.k,
            weight_max=args.wmax,
            seed=args.seed,
            capacity=args.capacity,
            ratio=args.ratio,
        )
    except ValueError as exc:
        return _fail(str(exc), EXIT_INPUT)
    sys.stdout.write(serialize_instance(generate_instance(params)))
    return EXIT_OK


def _parse_id_list(text: str) -> frozenset[int]:
    text = text.strip()
    if not text:
        return frozenset()
    try:
        return frozenset(int(t) for t in text.split(","))
    except ValueError:
        raise InvalidInstanceError(f"bad id list '{text}'; expected comma-separated integers")


def _cmd_check(args) -> int:
    inst = _load_instance(args.instance)
    sub_a = _parse_id_list(args.a)
    sub_b = _parse_id_list(args.b)
    ga = rank_cardinality_vector(sub_a, inst)
    gb = rank_cardinality_vector(sub_b, inst)
    for name, sub in (("a", sub_a), ("b", sub_b)):
        weight = total_weight(sub, inst)
        if weight > inst.capacity:
            return _fail(
                f"subset {name} is infeasible: weight {weight} > capacity {inst.capacity}",
                EXIT_INFEASIBLE,
            )
    if equivalent(ga, gb):
        verdict = "equivalent"
    elif dominates(ga, gb):
        verdict = "dominates"
    elif dominates(gb, ga):
        verdict = "dominated"
    else:
        verdict = "incomparable"
    print(f"verdict={verdict}")
    print(f"suffix_a={format_vector(suffix_sums(ga))}")
    print(f"suffix_b={format_vector(suffix_sums(gb))}")
    if args.witness and not weakly_dominates(ga, gb):
        witness = falsification_witness(ga, gb, len(inst.items))
        values = "(" + ",".join(str(v) for v in witness.values) + ")"
        print(f"witness={values}")
        print(f"witness_value_a={evaluate(witness, ga)}")
        print(f"witness_value_b={evaluate(witness, gb)}")
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip() != ""]


def _cmd_bench(args) -> int:
    from .dp import label_bound, solve

    if (args.capacity is None) == (args.ratio is None):
        return _fail("bench needs exactly one of --capacity or --ratio", EXIT_INPUT)
    caps = args.capacity if args.capacity is not None else args.ratio
    print("n,k,W,seed,frontier_size,max_cell,label_bound,comparisons,wall_time")
    for n in args.n:
        for k in args.k:
            for cap in caps:
                for seed in range(1, args.seeds + 1):
                    for wmax in args.wmax:
                        params = GeneratorParams(
                            n=n,
                            k=k,
                            weight_max=wmax,
                            seed=seed,
                            capacity=cap if args.capacity is not None else None,
                            ratio=cap if args.ratio is not None else None,
                        )
                        inst = generate_instance(params)
                        result = solve(inst)
                        print(
                            f"{n},{k},{inst.capacity},{seed},{len(result.labels)},"
                            f"{result.stats.max_cell},{label_bound(k, n)},"
                            f"{result.stats.comparisons},{result.stats.wall_time:.6f}"
                        )
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qknap",
        description="0/1 knapsack with ordinal item levels: exact frontier and greedy solvers.",
    )
    from . import __version__

    parser.add_argument("--version", action="version", version=f"qknap {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute all non-dominated rank cardinality vectors")
    p.add_argument("instance", help="instance file path")
    p.add_argument("--matrix", action="store_true", help="also dump every DP cell")
    p.add_argument("--json", action="store_true", help="structured output")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("greedy", help="one solution via a lexicographic greedy pass")
    p.add_argument("instance")
    p.add_argument("mode", choices=("r", "w"), help="r: level-major order, w: weight-major order")
    p.set_defaults(func=_cmd_greedy)

    p = sub.add_parser("enumerate", help="brute-force frontier (small n only)")
    p.add_argument("instance")
    p.add_argument("--force", action="store_true", help="override the size guard")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("gen", help="emit a deterministic random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--capacity", type=int)
    p.add_argument("--ratio", type=Fraction, help="capacity = ceil(ratio * total weight)")
    p.add_argument("--wmax", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("check", help="dominance verdict between two subsets")
    p.add_argument("instance")
    p.add_argument("--a", required=True, help="comma-separated item ids")
    p.add_argument("--b", required=True, help="comma-separated item ids")
    p.add_argument("--witness", action="store_true", help="print a falsifying valuation")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("bench", help="CSV sweep over generated instances")
    p.add_argument("--n", type=_int_list, required=True, help="comma-separated list")
    p.add_argument("--k", type=_int_list, required=True)
    p.add_argument("--capacity", type=_int_list)
    p.add_argument("--ratio", type=lambda s: [Fraction(t) for t in s.split(",")])
    p.add_argument("--wmax", type=_int_list, required=True)
    p.add_argument("--seeds", type=int, required=True, help="use seeds 1..N")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InvalidInstanceError, ValueError) as exc:
        return _fail(str(exc), EXIT_INPUT)


if __name__ == "__main__":
    sys.exit(main())
