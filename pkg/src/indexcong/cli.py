"""Command-line front end.

Subcommands::

    indexcong sum      --modulus M --delta D [--method both|closed|oracle]
    indexcong product  --modulus M --delta D [--method both|closed|oracle]
    indexcong classes  --modulus M
    indexcong verify   [--max-modulus N] [--theorem ID|all] [--jobs K]
                       [--seed S] [--out PATH]
    indexcong fn       --name mu|phi|lambda|M|I|u --n N
    indexcong conv     --left NAME --right NAME --op dirichlet|lcm --n N

All subcommands take ``--format text|json|csv``.  Exit codes are a stable
scripting contract: 0 for success/agreement, 1 for usage errors, 2 when a
verified mismatch between a closed form and the oracle was found.

The default worker count for ``verify`` comes from the INDEXCONG_JOBS
environment variable when set; the ``--jobs`` flag overrides it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from ._version import __version__
from .convolution import I, M, ArithFn, dirichlet_conv, lcm_conv, mu, phi, u
from .core import carmichael_lambda, euler_phi
from .orders import IndexClassSummary, enumerate_index_class, index_class_table
from .theorems import (
    CongruencePrediction,
    predictions_for_product,
    predictions_for_sum,
)
from .verifier import (
    DEFAULT_RANGES,
    THEOREM_IDS,
    SuiteConfig,
    run_suite,
)

__all__ = ["main", "entry"]

_JSON_INT_MAX = 2**53 - 1

_FUNCTIONS: dict[str, ArithFn] = {
    "mu": mu,
    "phi": phi,
    "lambda": ArithFn(carmichael_lambda, name="lambda"),
    "M": M,
    "I": I,
    "u": u,
}

_CSV_HEADER = "theorem_id,m,delta,asserted_modulus,expected,actual,status"


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit with code 1, not 2."""

    def error(self, message):  # noqa: D102 - argparse hook
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _jint(v: int) -> int | str:
    return str(v) if abs(v) > _JSON_INT_MAX else v


def _build_parser() -> _Parser:
    parser = _Parser(prog="indexcong", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"indexcong {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    for name, needs_delta in (("sum", True), ("product", True), ("classes", False)):
        p = sub.add_parser(name)
        p.add_argument("--modulus", type=int, required=True)
        if needs_delta:
            p.add_argument("--delta", type=int, required=True)
            p.add_argument(
                "--method", choices=("both", "closed", "oracle"), default="both"
            )
        add_format(p)

    p = sub.add_parser("verify")
    p.add_argument("--max-modulus", type=int, default=None)
    p.add_argument("--theorem", choices=THEOREM_IDS + ("all",), default="all")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", type=str, default=None)
    add_format(p)

    p = sub.add_parser("fn")
    p.add_argument("--name", choices=sorted(_FUNCTIONS), required=True)
    p.add_argument("--n", type=int, required=True)
    add_format(p)

    p = sub.add_parser("conv")
    p.add_argument("--left", choices=sorted(_FUNCTIONS), required=True)
    p.add_argument("--right", choices=sorted(_FUNCTIONS), required=True)
    p.add_argument("--op", choices=("dirichlet", "lcm"), required=True)
    p.add_argument("--n", type=int, required=True)
    add_format(p)

    return parser


def _fail(message: str) -> int:
    print(f"indexcong: error: {message}", file=sys.stderr)
    return 1


def _prediction_rows(
    summary: IndexClassSummary, preds: list[CongruencePrediction], kind: str
) -> list[dict]:
    oracle_full = summary.sum_mod if kind == "sum" else summary.product_mod
    rows = []
    for pred in preds:
        oracle = oracle_full % pred.asserted_modulus
        rows.append(
            {
                "theorem_id": pred.theorem_id,
                "asserted_modulus": pred.asserted_modulus,
                "predicted": pred.value,
                "oracle": oracle,
                "status": "AGREE" if pred.value == oracle else "MISMATCH",
            }
        )
    return rows


def _emit_class_command(args, kind: str) -> int:
    m, delta = args.modulus, args.delta
    if m < 1:
        return _fail(f"--modulus must be >= 1, got {m}")
    if delta < 1:
        return _fail(f"--delta must be >= 1, got {delta}")
    summary = enumerate_index_class(m, delta)
    empty = summary.count == 0

    rows: list[dict] = []
    if not empty and args.method in ("both", "closed"):
        preds = predictions_for_sum(m, delta) if kind == "sum" else predictions_for_product(m, delta)
        rows = _prediction_rows(summary, preds, kind)
        if args.method == "closed":
            for row in rows:
                row["oracle"] = None
                row["status"] = ""
    mismatch = any(row["status"] == "MISMATCH" for row in rows)
    status = "EMPTY" if empty else ("MISMATCH" if mismatch else ("AGREE" if args.method == "both" else "OK"))

    if args.format == "json":
        doc = {
            "command": kind,
            "modulus": _jint(m),
            "delta": _jint(delta),
            "empty": empty,
            "status": status,
        }
        if args.method in ("both", "oracle") and not empty:
            doc["oracle"] = {
                "count": summary.count,
                "sum_mod": _jint(summary.sum_mod),
                "product_mod": _jint(summary.product_mod),
            }
        if rows:
            doc["predictions"] = [
                {
                    "theorem_id": r["theorem_id"],
                    "asserted_modulus": _jint(r["asserted_modulus"]),
                    "predicted": _jint(r["predicted"]),
                    "oracle": None if r["oracle"] is None else _jint(r["oracle"]),
                    "status": r["status"],
                }
                for r in rows
            ]
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        lines = [_CSV_HEADER]
        if args.method in ("oracle", "both"):
            value = summary.sum_mod if kind == "sum" else summary.product_mod
            lines.append(f"oracle,{m},{delta},{m},,{value},{status}")
        for r in rows:
            actual = "" if r["oracle"] is None else r["oracle"]
            lines.append(
                f"{r['theorem_id']},{m},{delta},{r['asserted_modulus']},"
                f"{r['predicted']},{actual},{r['status']}"
            )
        print("\n".join(lines))
    else:
        if empty:
            print(
                f"index class (m={m}, delta={delta}) is empty: "
                f"{delta} does not divide lambda({m}) = {carmichael_lambda(m)}"
            )
        else:
            if args.method in ("both", "oracle"):
                print(
                    f"index class (m={m}, delta={delta}): count {summary.count}, "
                    f"sum {summary.sum_mod}, product {summary.product_mod} (mod {m})"
                )
            if rows:
                print(f"{'theorem':<10} {'mod':>12} {'predicted':>12} {'oracle':>12}  status")
                for r in rows:
                    oracle = "" if r["oracle"] is None else r["oracle"]
                    print(
                        f"{r['theorem_id']:<10} {r['asserted_modulus']:>12} "
                        f"{r['predicted']:>12} {oracle!s:>12}  {r['status']}"
                    )
            if args.method == "both":
                print(f"overall: {status}")
    return 2 if mismatch else 0


def _emit_classes(args) -> int:
    m = args.modulus
    if m < 1:
        return _fail(f"--modulus must be >= 1, got {m}")
    table = index_class_table(m)
    lam, phi_m = carmichael_lambda(m), euler_phi(m)
    rows = []
    any_mismatch = False
    for delta in sorted(table):
        stats = table[delta]
        sum_rows = _prediction_rows(
            IndexClassSummary(m, delta, stats.count, stats.sum_mod, stats.product_mod),
            predictions_for_sum(m, delta),
            "sum",
        )
        prod_rows = _prediction_rows(
            IndexClassSummary(m, delta, stats.count, stats.sum_mod, stats.product_mod),
            predictions_for_product(m, delta),
            "product",
        )
        sum_ok = all(r["status"] == "AGREE" for r in sum_rows)
        prod_ok = all(r["status"] == "AGREE" for r in prod_rows)
        any_mismatch |= not (sum_ok and prod_ok)
        rows.append(
            {
                "delta": delta,
                "count": stats.count,
                "sum_mod": stats.sum_mod,
                "product_mod": stats.product_mod,
                "sum_status": "AGREE" if sum_ok else "MISMATCH",
                "product_status": "AGREE" if prod_ok else "MISMATCH",
                "sum_predictions": sum_rows,
                "product_predictions": prod_rows,
            }
        )
    partition_ok = sum(r["count"] for r in rows) == phi_m
    any_mismatch |= not partition_ok
    status = "MISMATCH" if any_mismatch else "AGREE"

    if args.format == "json":
        doc = {
            "command": "classes",
            "modulus": _jint(m),
            "phi": _jint(phi_m),
            "lambda": _jint(lam),
            "rows": [
                {
                    "delta": _jint(r["delta"]),
                    "count": _jint(r["count"]),
                    "sum_mod": _jint(r["sum_mod"]),
                    "product_mod": _jint(r["product_mod"]),
                    "sum_status": r["sum_status"],
                    "product_status": r["product_status"],
                }
                for r in rows
            ],
            "partition_ok": partition_ok,
            "status": status,
        }
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        lines = [_CSV_HEADER]
        for r in rows:
            for pr in r["sum_predictions"] + r["product_predictions"]:
                lines.append(
                    f"{pr['theorem_id']},{m},{r['delta']},{pr['asserted_modulus']},"
                    f"{pr['predicted']},{pr['oracle']},{pr['status']}"
                )
        print("\n".join(lines))
    else:
        print(f"modulus {m}: phi = {phi_m}, lambda = {lam}")
        print(f"{'delta':>8} {'count':>8} {'sum':>12} {'product':>12}  sum-forms  product-forms")
        for r in rows:
            print(
                f"{r['delta']:>8} {r['count']:>8} {r['sum_mod']:>12} "
                f"{r['product_mod']:>12}  {r['sum_status']:<9}  {r['product_status']}"
            )
        check = "OK" if partition_ok else "BROKEN"
        print(f"partition: counts sum to {sum(r['count'] for r in rows)} = phi({m}) [{check}]")
    return 2 if any_mismatch else 0


def _emit_verify(args) -> int:
    if args.max_modulus is not None and args.max_modulus < 1:
        return _fail(f"--max-modulus must be >= 1, got {args.max_modulus}")
    if args.theorem == "all":
        tids = THEOREM_IDS
    else:
        tids = (args.theorem,)
    if args.max_modulus is None:
        ranges = {tid: DEFAULT_RANGES[tid] for tid in tids}
    else:
        ranges = {tid: (1, args.max_modulus) for tid in tids}
    jobs = args.jobs
    if jobs is None:
        env = os.environ.get("INDEXCONG_JOBS")
        if env is not None:
            try:
                jobs = int(env)
            except ValueError:
                return _fail(f"INDEXCONG_JOBS must be an integer, got {env!r}")
    if jobs is not None and jobs < 1:
        return _fail(f"--jobs must be >= 1, got {jobs}")

    report = run_suite(SuiteConfig(ranges=ranges, seed=args.seed, jobs=jobs))

    if args.format == "json":
        rendered = report.to_json()
    elif args.format == "csv":
        rendered = report.to_csv()
    else:
        rendered = report.render_text()
    sys.stdout.write(rendered)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(rendered)
    return 0 if report.status == "PASS" else 2


def _emit_value(args, label: str, value: Fraction) -> int:
    if args.format == "json":
        exact = (
            _jint(int(value))
            if value.denominator == 1
            else {"numerator": _jint(value.numerator), "denominator": _jint(value.denominator)}
        )
        print(json.dumps({"command": args.command, "expression": label, "n": args.n, "value": str(value), "exact": exact}))
    elif args.format == "csv":
        print("expression,n,value")
        print(f"{label},{args.n},{value}")
    else:
        print(f"{label}({args.n}) = {value}")
    return 0


def main(argv: list[str] | None = None) -> int:
    """Run the CLI; returns the process exit code instead of raising."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else (0 if code is None else 1)

    try:
        if args.command == "sum":
            return _emit_class_command(args, "sum")
        if args.command == "product":
            return _emit_class_command(args, "product")
        if args.command == "classes":
            return _emit_classes(args)
        if args.command == "verify":
            return _emit_verify(args)
        if args.command == "fn":
            if args.n < 1:
                return _fail(f"--n must be >= 1, got {args.n}")
            return _emit_value(args, args.name, _FUNCTIONS[args.name](args.n))
        if args.command == "conv":
            if args.n < 1:
                return _fail(f"--n must be >= 1, got {args.n}")
            f, g = _FUNCTIONS[args.left], _FUNCTIONS[args.right]
            conv = dirichlet_conv(f, g) if args.op == "dirichlet" else lcm_conv(f, g)
            symbol = "*" if args.op == "dirichlet" else "o"
            return _emit_value(args, f"({args.left} {symbol} {args.right})", conv(args.n))
        raise AssertionError(f"unhandled command {args.command!r}")
    except (ValueError, OSError) as exc:
        return _fail(str(exc))


def entry() -> None:
    """Console-script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    entry()
