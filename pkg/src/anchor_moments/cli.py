"""Command-line front end emitting CSV/JSON tables.

Subcommands: exact, simulate, asymptotic, lemma, identities.  Exit codes:
0 success, 1 identity-suite failure, 2 usage error, 3 exact-path size guard.
Exact rationals are serialized as "p/q" strings, always next to a decimal
companion column; stdout carries the table, stderr carries diagnostics.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction

from . import __version__
from .asymptotics import (
    abel_anchor_sum,
    remainder_diagnostic,
    vanishing_signed_sum,
    vanishing_tail_correction_sum,
)
from .identities import run_suite, suite_names
from .moments import (
    EXACT_N_GUARD,
    MomentQuery,
    SizeGuardError,
    total_moment_exact,
)
from .simulation import SimulationConfig, estimate

_USAGE_ERROR = 2
_GUARD_ERROR = 3


@dataclass
class OutputRecord:
    """One command's output: a named-column table plus run metadata."""

    command: str
    parameters: dict[str, str]
    columns: list[str]
    rows: list[dict[str, str]]
    metadata: dict[str, str] = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(
            {
                "command": self.command,
                "parameters": self.parameters,
                "rows": self.rows,
                "metadata": self.metadata,
            },
            indent=2,
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=self.columns, lineterminator="\n")
        writer.writeheader()
        writer.writerows(self.rows)
        return buf.getvalue().rstrip("\n")


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _flt(x: float) -> str:
    return repr(float(x))


def _metadata(args: argparse.Namespace, **extra: str) -> dict[str, str]:
    meta = {"version": __version__}
    meta.update(extra)
    if not args.no_timestamp:
        meta["timestamp"] = datetime.now(timezone.utc).isoformat()
    return meta


def _emit(record: OutputRecord, args: argparse.Namespace) -> None:
    text = record.to_csv() if args.format == "csv" else record.to_json()
    print(text)


# --- subcommand handlers ----------------------------------------------------


def _cmd_exact(args: argparse.Namespace) -> tuple[OutputRecord, int]:
    q = MomentQuery(n=args.n, a=args.a)
    breakdown = total_moment_exact(q)
    params = {"n": str(args.n), "a": str(args.a), "per_sensor": str(args.per_sensor).lower()}
    if args.per_sensor:
        columns = ["i", "t", "e_total", "e_signed_part", "e_folded_part", "e_total_approx"]
        rows = [
            {
                "i": str(e.i),
                "t": _frac(e.t),
                "e_total": _frac(e.e_total),
                "e_signed_part": _frac(e.e_signed_part),
                "e_folded_part": _frac(e.e_folded_part),
                "e_total_approx": _flt(float(e.e_total)),
            }
            for e in breakdown.per_sensor
        ]
        rows.append(
            {
                "i": "total",
                "t": "",
                "e_total": _frac(breakdown.total),
                "e_signed_part": "",
                "e_folded_part": "",
                "e_total_approx": _flt(float(breakdown.total)),
            }
        )
    else:
        columns = ["total", "total_approx"]
        rows = [{"total": _frac(breakdown.total), "total_approx": _flt(float(breakdown.total))}]
    record = OutputRecord("exact", params, columns, rows, _metadata(args))
    return record, 0


def _cmd_simulate(args: argparse.Namespace) -> tuple[OutputRecord, int]:
    config = SimulationConfig(n=args.n, a=args.a, trials=args.trials,
                              seed=args.seed, workers=args.workers)
    result = estimate(config)
    columns = ["mean", "std_error", "ci_low", "ci_high", "trials", "seed"]
    row = {
        "mean": _flt(result.mean),
        "std_error": _flt(result.std_error),
        "ci_low": _flt(result.ci95[0]),
        "ci_high": _flt(result.ci95[1]),
        "trials": str(result.trials),
        "seed": str(result.seed),
    }
    if args.n <= EXACT_N_GUARD:
        exact = total_moment_exact(MomentQuery(n=args.n, a=args.a)).total
        z = (result.mean - float(exact)) / result.std_error if result.std_error > 0 else float("nan")
        columns += ["exact", "exact_approx", "z_score"]
        row["exact"] = _frac(exact)
        row["exact_approx"] = _flt(float(exact))
        row["z_score"] = _flt(z)
    params = {"n": str(args.n), "a": str(args.a), "trials": str(args.trials),
              "seed": str(args.seed), "workers": str(args.workers)}
    record = OutputRecord("simulate", params, columns, [row],
                          _metadata(args, seed=str(args.seed)))
    return record, 0


def _cmd_asymptotic(args: argparse.Namespace, parser: argparse.ArgumentParser) -> tuple[OutputRecord, int]:
    if args.theorem == 1 and args.a % 2 != 0:
        parser.error("--theorem 1 covers even a")
    if args.theorem == 2 and args.a % 2 != 1:
        parser.error("--theorem 2 covers odd a")
    report = remainder_diagnostic(args.a, args.grid)
    columns = ["n", "measured", "normalized", "constant", "fitted_exponent"]
    rows = [
        {
            "n": str(n),
            "measured": _flt(m),
            "normalized": _flt(v),
            "constant": _flt(report.constant_float),
            "fitted_exponent": _flt(report.fitted_exponent),
        }
        for n, m, v in zip(report.n_grid, report.measured, report.normalized)
    ]
    params = {
        "theorem": str(args.theorem),
        "a": str(args.a),
        "grid": ",".join(str(n) for n in args.grid),
        "constant_exact": str(report.constant),
        "degenerate_fit": str(report.degenerate_fit).lower(),
    }
    record = OutputRecord("asymptotic", params, columns, rows, _metadata(args))
    return record, 0


def _cmd_lemma(args: argparse.Namespace, parser: argparse.ArgumentParser) -> tuple[OutputRecord, int]:
    grid = args.grid if args.grid is not None else [args.n]
    params = {"id": str(args.id), "grid": ",".join(str(n) for n in grid)}
    rows = []
    if args.id in (1, 2):
        if args.a is None:
            parser.error(f"--a is required for --id {args.id}")
        if args.c is not None:
            parser.error("--c applies to --id 4 only")
        params["a"] = str(args.a)
        fn = vanishing_signed_sum if args.id == 1 else vanishing_tail_correction_sum
        half = (args.a - 1) // 2
        columns = ["n", "value", "value_approx", "normalized"]
        for n in grid:
            v = fn(n, args.a)
            rows.append(
                {
                    "n": str(n),
                    "value": _frac(v),
                    "value_approx": _flt(float(v)),
                    "normalized": _flt(float(n) ** half * abs(float(v))),
                }
            )
    else:
        if args.c is None:
            parser.error("--c is required for --id 4")
        if args.a is not None:
            parser.error("--a applies to --id 1 and --id 2 only")
        params["c"] = _flt(args.c)
        columns = ["n", "value", "normalized"]
        for n in grid:
            v = abel_anchor_sum(n, args.c)
            rows.append({"n": str(n), "value": _flt(v), "normalized": _flt(v / n**1.5)})
    record = OutputRecord("lemma", params, columns, rows, _metadata(args))
    return record, 0


def _cmd_identities(args: argparse.Namespace) -> tuple[OutputRecord, int]:
    results = run_suite(args.suite)
    columns = ["name", "passed", "residual", "detail"]
    rows = [
        {
            "name": r.name,
            "passed": str(r.passed).lower(),
            "residual": _flt(r.residual),
            "detail": r.detail,
        }
        for r in results
    ]
    failures = sum(not r.passed for r in results)
    params = {"suite": args.suite, "checks": str(len(results)), "failures": str(failures)}
    record = OutputRecord("identities", params, columns, rows, _metadata(args))
    return record, 0 if failures == 0 else 1


# --- parser -----------------------------------------------------------------


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _grid(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad grid {text!r}") from exc
    if len(values) < 1:
        raise argparse.ArgumentTypeError("grid must not be empty")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise argparse.ArgumentTypeError("grid must be strictly increasing")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="anchor-moments",
        description="Expected power-displacement of uniform sensors moved to equidistant anchors",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("csv", "json"), default="json")
        p.add_argument("--no-timestamp", action="store_true",
                       help="omit the timestamp from metadata (stable output)")

    p_exact = sub.add_parser("exact", help="exact total expected cost")
    p_exact.add_argument("--n", type=_positive_int, required=True)
    p_exact.add_argument("--a", type=_positive_int, required=True)
    p_exact.add_argument("--per-sensor", action="store_true", dest="per_sensor")
    common(p_exact)

    p_sim = sub.add_parser("simulate", help="Monte Carlo estimate")
    p_sim.add_argument("--n", type=_positive_int, required=True)
    p_sim.add_argument("--a", type=_positive_int, required=True)
    p_sim.add_argument("--trials", type=_positive_int, default=100_000)
    p_sim.add_argument("--seed", type=int, default=0)
    p_sim.add_argument("--workers", type=_positive_int, default=1)
    common(p_sim)

    p_asym = sub.add_parser("asymptotic", help="leading-constant convergence on a grid")
    p_asym.add_argument("--theorem", type=int, choices=(1, 2), required=True,
                        help="1: even-order result, 2: odd-order result")
    p_asym.add_argument("--a", type=_positive_int, required=True)
    p_asym.add_argument("--grid", type=_grid, required=True)
    common(p_asym)

    p_lem = sub.add_parser("lemma", help="diagnostic sums with their normalizations")
    p_lem.add_argument("--id", type=int, choices=(1, 2, 4), required=True)
    p_lem.add_argument("--a", type=_positive_int)
    p_lem.add_argument("--c", type=float)
    group = p_lem.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=_positive_int)
    group.add_argument("--grid", type=_grid)
    common(p_lem)

    p_id = sub.add_parser("identities", help="run the verified-identity suites")
    p_id.add_argument("--suite", choices=suite_names(), default="all")
    common(p_id)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        if args.command == "exact":
            record, code = _cmd_exact(args)
        elif args.command == "simulate":
            record, code = _cmd_simulate(args)
        elif args.command == "asymptotic":
            record, code = _cmd_asymptotic(args, parser)
        elif args.command == "lemma":
            record, code = _cmd_lemma(args, parser)
        else:
            record, code = _cmd_identities(args)
    except SystemExit as exc:  # parser.error inside handlers
        return int(exc.code) if exc.code is not None else 0
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _GUARD_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _USAGE_ERROR
    _emit(record, args)
    return code


if __name__ == "__main__":
    sys.exit(main())
