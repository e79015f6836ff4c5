"""Command-line interface: ``deltakit <command> [args] [--json]``.

Exit codes: 0 success, 1 verification failure, 2 symmetric semigroup,
3 invalid input, 4 arithmetic overflow.
"""

from __future__ import annotations

import argparse
import json
import logging
import statistics
import sys
import time
from math import gcd

from deltakit.bezout import bezout_table, table_delta_set
from deltakit.errors import (
    ArithmeticOverflow,
    DeltaKitError,
    InvalidGenerators,
    SymmetricSemigroup,
)
from deltakit.euclid import euclid_couples, euclid_remainder_set, euclid_stage_couples, euclid_trace
from deltakit.oracle import oracle_cap, oracle_delta_union, verify
from deltakit.presentation import delta_invariants, minimal_presentation
from deltakit.semigroup import validate_generators

EXIT_OK, EXIT_FAIL, EXIT_SYMMETRIC, EXIT_INVALID, EXIT_OVERFLOW = 0, 1, 2, 3, 4

# JSON output document; every command fills "result" with its own payload.
OUTPUT_SCHEMA = {
    "type": "object",
    "required": ["command", "input", "result", "timing_us"],
    "additionalProperties": False,
    "properties": {
        "command": {"enum": ["delta", "table", "presentation", "trace", "verify", "bench"]},
        "input": {
            "type": "object",
            "properties": {
                "generators": {"type": "array", "items": {"type": "integer"}, "minItems": 3, "maxItems": 3},
                "deltas": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
            },
            "additionalProperties": False,
        },
        "result": {"type": "object"},
        "timing_us": {"type": "integer", "minimum": 0},
    },
}


def _pair(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _deltas_for(args) -> tuple[int, int, dict]:
    """(delta1, delta3, input echo) from either the generators or --deltas."""
    if args.deltas:
        d1, d3 = args.deltas
        if d1 < 1 or d3 < 1:
            raise InvalidGenerators(f"deltas must be positive, got {(d1, d3)}")
        return d1, d3, {"deltas": [d1, d3]}
    if not args.generators:
        raise InvalidGenerators("give three generators or --deltas D1 D3")
    g = validate_generators(*args.generators)
    inv = delta_invariants(minimal_presentation(g))
    return inv.delta1, inv.delta3, {"generators": list(g)}


def _triple(args):
    if len(args.generators or ()) != 3:
        raise InvalidGenerators("exactly three generators are required")
    return validate_generators(*args.generators)


def cmd_delta(args):
    g = _triple(args)
    result = {"method": args.method}
    if args.method == "table":
        inv = delta_invariants(minimal_presentation(g))
        ds = table_delta_set(inv.delta1, inv.delta3)
    elif args.method == "oracle":
        bound = args.bound if args.bound is not None else min(4 * g.n2 * g.n3, oracle_cap())
        ds = oracle_delta_union(g, bound)
        result["bound"] = bound
    else:
        inv = delta_invariants(minimal_presentation(g))
        ds = euclid_remainder_set(inv.delta1, inv.delta3)
    result["delta_set"] = ds.to_list()
    return {"generators": list(g)}, result, str(ds)


def cmd_table(args):
    d1, d3, echo = _deltas_for(args)
    g = gcd(d1, d3)
    if g > 1:
        print(f"note: deltas ({d1}, {d3}) normalized by gcd {g} to ({d1 // g}, {d3 // g})", file=sys.stderr)
    table = bezout_table(d1 // g, d3 // g)
    rows = [
        {
            "i": r.index,
            "lambda": list(r.lam.pair),
            "lambda_irreducible": r.lam.irreducible,
            "mu": list(r.mu.pair),
            "mu_irreducible": r.mu.irreducible,
        }
        for r in table.rows
    ]
    result = {
        "delta1": d1 // g,
        "delta3": d3 // g,
        "gcd": g,
        "rows": rows,
        "delta_set": table_delta_set(d1, d3).to_list(),
    }
    mark = {True: "+", False: "-"}
    lines = [f"{'Irr':>3} {'l_i1':>6} {'l_i3':>6} {'i':>6} {'m_i1':>6} {'m_i3':>6} {'Irr':>3}"]
    for r in table.rows:
        lines.append(
            f"{mark[r.lam.irreducible]:>3} {r.lam.a:>6} {r.lam.b:>6} {r.index:>6} "
            f"{r.mu.a:>6} {r.mu.b:>6} {mark[r.mu.irreducible]:>3}"
        )
    lines.append(f"Delta set: {result['delta_set']}")
    return echo, result, "\n".join(lines)


def cmd_presentation(args):
    g = _triple(args)
    p = minimal_presentation(g)
    inv = delta_invariants(p)
    rels = p.relations()
    result = {
        "relations": [[list(a), list(b)] for a, b in rels],
        "delta1": inv.delta1,
        "delta2": inv.delta2,
        "delta3": inv.delta3,
        "gcd": inv.g,
    }
    lines = [f"({_pair(a)},{_pair(b)})" for a, b in rels]
    lines.append(f"delta1={inv.delta1} delta2={inv.delta2} delta3={inv.delta3}")
    return {"generators": list(g)}, result, "\n".join(lines)


def cmd_trace(args):
    d1, d3, echo = _deltas_for(args)
    g = gcd(d1, d3)
    trace = euclid_trace(d1, d3)
    # the normalized pair has the same quotients, so its couples line up stage by stage
    stage_couples = euclid_stage_couples(d1 // g, d3 // g)
    lam, mu = euclid_couples(d1 // g, d3 // g)
    stages = []
    lines = []
    for st, couples in zip(trace.stages, stage_couples):
        stages.append(
            {
                "larger": st.larger,
                "smaller": st.smaller,
                "values": list(st.values),
                "couples": [list(c) for _, c in couples],
            }
        )
        lines.append(f"delta_k={st.larger} delta_j={st.smaller}")
        cells = [f"{v} {_pair(c)}" for v, (_, c) in zip(st.values, couples)]
        if st.values[-1] == 0:
            cells.append("0")
        lines.append("  " + "  ".join(cells))
    ds = trace.value_set()
    result = {
        "delta1": d1,
        "delta3": d3,
        "gcd": g,
        "stages": stages,
        "mu_couples": [list(c.pair) for c in mu],
        "lambda_couples": [list(c.pair) for c in lam],
        "delta_set": ds.to_list(),
    }
    lines.append("mu couples: {" + ",".join(_pair(c.pair) for c in mu) + "}")
    lines.append("lambda couples: {" + ",".join(_pair(c.pair) for c in lam) + "}")
    lines.append(f"Delta set: {ds}")
    return echo, result, "\n".join(lines)


def cmd_verify(args):
    g = _triple(args)
    report = verify(g, args.bound)
    result = report.to_dict()
    lines = [
        f"fast:    {report.fast}",
        f"table:   {report.table}",
        f"oracle:  {report.oracle} (elements up to {report.bound})",
    ]
    for w in report.witnesses:
        status = "ok" if w.confirmed else "FAILED"
        lines.append(
            f"witness {w.delta}: s={w.element} {_pair(w.shorter.coords)} -> {_pair(w.longer.coords)} {status}"
        )
    lines.append(f"verdict: {result['verdict']}")
    return {"generators": list(g)}, result, "\n".join(lines)


def _median_us(fn, repeat):
    times, out = [], None
    for _ in range(repeat):
        t0 = time.perf_counter_ns()
        out = fn()
        times.append((time.perf_counter_ns() - t0) // 1000)
    return int(statistics.median(times)), out


def cmd_bench(args):
    g = _triple(args)

    def fast():
        inv = delta_invariants(minimal_presentation(g))
        return euclid_remainder_set(inv.delta1, inv.delta3)

    def table():
        inv = delta_invariants(minimal_presentation(g))
        return table_delta_set(inv.delta1, inv.delta3)

    legs = [("euclid", fast), ("table", table)]
    if args.oracle_bound is not None:
        legs.append(("oracle", lambda: oracle_delta_union(g, args.oracle_bound)))
    rows = []
    reference = None
    for name, fn in legs:
        us, ds = _median_us(fn, args.repeat)
        if reference is None:
            reference = ds
        agrees = ds <= reference if name == "oracle" else ds == reference
        rows.append({"method": name, "median_us": us, "delta_set": ds.to_list(), "agrees": agrees})
    result = {"repeat": args.repeat, "oracle_bound": args.oracle_bound, "rows": rows}
    lines = [f"{'method':<8} {'median_us':>12}  agrees  delta_set"]
    for r in rows:
        lines.append(f"{r['method']:<8} {r['median_us']:>12}  {str(r['agrees']):<6}  {r['delta_set']}")
    return {"generators": list(g)}, result, "\n".join(lines)


COMMANDS = {
    "delta": cmd_delta,
    "table": cmd_table,
    "presentation": cmd_presentation,
    "trace": cmd_trace,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON document on stdout")

    parser = argparse.ArgumentParser(
        prog="deltakit",
        description="Delta sets of nonsymmetric numerical semigroups <n1,n2,n3>.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def gens(p, optional=False):
        p.add_argument("generators", type=int, nargs="*" if optional else 3, metavar="N")

    p = sub.add_parser("delta", parents=[common], help="Delta set of the semigroup")
    gens(p)
    p.add_argument("--method", choices=["euclid", "fast", "table", "oracle"], default="euclid")
    p.add_argument("--bound", type=int, help="largest element for --method oracle")

    for name, text in (("table", "Bezout table with irreducibility marks"), ("trace", "Euclid trace and couples")):
        p = sub.add_parser(name, parents=[common], help=text)
        gens(p, optional=True)
        p.add_argument("--deltas", type=int, nargs=2, metavar=("D1", "D3"))

    p = sub.add_parser("presentation", parents=[common], help="minimal presentation and delta invariants")
    gens(p)

    p = sub.add_parser("verify", parents=[common], help="cross-check both methods against brute force")
    gens(p)
    p.add_argument("--bound", type=int)

    p = sub.add_parser("bench", parents=[common], help="time the methods against each other")
    gens(p)
    p.add_argument("--repeat", type=int, default=9)
    p.add_argument("--oracle-bound", type=int)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "delta" and args.method == "fast":
        args.method = "euclid"
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    t0 = time.perf_counter_ns()
    try:
        echo, result, text = COMMANDS[args.command](args)
    except SymmetricSemigroup:
        print("error: semigroup is symmetric", file=sys.stderr)
        return EXIT_SYMMETRIC
    except ArithmeticOverflow as e:
        print(f"error: overflow: {e}", file=sys.stderr)
        return EXIT_OVERFLOW
    except (InvalidGenerators, DeltaKitError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    elapsed = (time.perf_counter_ns() - t0) // 1000
    if args.json:
        doc = {"command": args.command, "input": echo, "result": result, "timing_us": elapsed}
        print(json.dumps(doc))
    else:
        print(text)
    if args.command == "verify" and result["verdict"] != "pass":
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
