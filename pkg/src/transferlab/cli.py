"""Command-line entry point: ``transferlab {check,estimate,compare,certificate}``.

Exit codes: 0 all checks pass, 1 a property failed, 2 usage or configuration
error.  Output is deterministic for a given configuration and seed and does
not depend on ``--workers``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from .dynamics import parse_system
from .inequalities import (
    EnsembleSpec,
    LambdaGrid,
    TruncatedTraces,
    _map,
    estimate_constant,
    minimum_certificate_window,
    transfer_comparison,
)
from .line_ops import LineOperatorSpec, check_operator_axioms, parse_operator
from .seeding import DEFAULT_SEED
from .spaces import ExponentPair
from .transfer import (
    ConfigurationError,
    TransferredOperator,
    check_equimeasurability,
    ergodic_maximal,
    transfer_apply,
)

SCHEMA_VERSION = 1

TRIAL_COLUMNS = [
    "trial", "seed", "kind", "a", "lambda", "p", "r", "J",
    "ratio_line", "ratio_sys", "slack", "pass",
]
CHECK_COLUMNS = ["suite", "cases", "failures", "pass"]

EPILOG = f"""\
CSV columns
  check:                 {", ".join(CHECK_COLUMNS)}
  estimate/compare/certificate:
                         {", ".join(TRIAL_COLUMNS)}
  Columns that do not apply to a command are left empty.  In estimate rows
  ratio_line is the line-side ratio and ratio_sys the transferred ratio of the
  same trial index; slack and pass are empty.

System specs: cyclic:N, rotation:q,a, random:N,seed
Operator specs: avg:m, osmax:n_max, hl:n_max
Default seed: {DEFAULT_SEED:#x}
Exit codes: 0 pass, 1 property failure, 2 usage/config error
"""


class UsageError(Exception):
    pass


def _exponent(text):
    if text.strip().lower() in ("inf", "infinity"):
        return math.inf
    return float(text)


def _a_list(text):
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad --a list {text!r}")
    if not values or min(values) < 1:
        raise argparse.ArgumentTypeError("--a needs positive integers")
    return values


def _seed(text):
    value = int(text, 0)
    if value < 0:
        raise argparse.ArgumentTypeError("seed must be nonnegative")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="transferlab",
        description="Transference experiments on finite measure-preserving systems.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--system", default="cyclic:64")
    common.add_argument("--op", default="osmax:8")
    common.add_argument("--p", type=float, default=2.0)
    common.add_argument("--r", type=_exponent, default=2.0)
    common.add_argument("--j", type=int, default=4)
    common.add_argument("--trials", type=int, default=50)
    common.add_argument("--seed", type=_seed, default=DEFAULT_SEED)
    common.add_argument("--n-max", type=int, default=None,
                        help="n_max for the oracle suite (default: from --op, else 8)")
    common.add_argument("--a", type=_a_list, default=[32],
                        help="truncation radius, or comma list for certificate")
    common.add_argument("--window", type=int, default=None,
                        help="certificate trace half-width (default: minimum needed)")
    common.add_argument("--lambda-min", type=float, default=0.01)
    common.add_argument("--lambda-max", type=float, default=1.0)
    common.add_argument("--lambda-points", type=int, default=32)
    common.add_argument("--distribution", default="mixed",
                        choices=["uniform", "sparse", "mixed", "dyadic"])
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--out", default="-", help="output path; '-' for stdout")
    common.add_argument("--workers", type=int, default=1)

    sub.add_parser("check", parents=[common], epilog=EPILOG,
                   formatter_class=argparse.RawDescriptionHelpFormatter,
                   help="operator axioms, equimeasurability, transfer oracle")
    p_est = sub.add_parser("estimate", parents=[common], epilog=EPILOG,
                           formatter_class=argparse.RawDescriptionHelpFormatter,
                           help="empirical line and system constants")
    p_est.add_argument("--kind", choices=["strong", "weak"], default="strong")
    sub.add_parser("compare", parents=[common], epilog=EPILOG,
                   formatter_class=argparse.RawDescriptionHelpFormatter,
                   help="system constants vs line constants per trial")
    p_cert = sub.add_parser("certificate", parents=[common], epilog=EPILOG,
                            formatter_class=argparse.RawDescriptionHelpFormatter,
                            help="truncation-argument certificates over an a-sweep")
    p_cert.add_argument("--kind", choices=["strong", "weak", "both"], default="both")
    return parser


def _config(args):
    system = parse_system(args.system)
    op = parse_operator(args.op)
    pr = ExponentPair(args.p, args.r)
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    if args.workers < 1:
        raise UsageError("--workers must be >= 1")
    ensemble = EnsembleSpec(args.trials, args.seed, args.j, args.distribution)
    grid = LambdaGrid(args.lambda_min, args.lambda_max, args.lambda_points)
    return system, op, pr, ensemble, grid


def _config_echo(args):
    keys = ["system", "op", "p", "j", "trials", "seed", "n_max", "a", "window",
            "lambda_min", "lambda_max", "lambda_points", "distribution"]
    out = {k: getattr(args, k) for k in keys}
    out["r"] = "inf" if math.isinf(args.r) else args.r
    if hasattr(args, "kind"):
        out["kind"] = args.kind
    return out


def _fmt(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "inf" if math.isinf(value) else repr(value)
    return str(value)


def _csv(columns, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_fmt(row.get(c)) for c in columns])
    return buf.getvalue()


def _emit(text, out):
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _json(payload):
    return json.dumps(payload, indent=2, sort_keys=True, allow_nan=False) + "\n"


def cmd_check(args):
    system, op, pr, ensemble, grid = _config(args)
    suites = []

    axioms = check_operator_axioms(op, n_trials=args.trials, seed=args.seed)
    suites.append({"suite": "operator_axioms", "cases": args.trials,
                   "failures": len(axioms.counterexamples), "pass": axioms.passed,
                   "detail": axioms.to_dict()})

    equi = check_equimeasurability(system, None, op, n_trials=args.trials,
                                   seed=args.seed, J=args.j)
    suites.append({"suite": "equimeasurability", "cases": equi.n_cases,
                   "failures": equi.shift_violations + equi.distribution_violations,
                   "pass": equi.passed, "detail": equi.to_dict()})

    n_max = args.n_max or (op.size if op.kind == "osmax" else 8)
    top = TransferredOperator(LineOperatorSpec("osmax", n_max), system)
    dyadic = EnsembleSpec(args.trials, args.seed, args.j, "dyadic")
    mismatches = []
    for trial in range(args.trials):
        field, _ = dyadic.draw_field(system, trial)
        lhs = transfer_apply(top, field).values
        rhs = ergodic_maximal(system, field, n_max).values
        if not np.array_equal(lhs, rhs):
            mismatches.append(trial)
    suites.append({"suite": "transfer_oracle", "cases": args.trials,
                   "failures": len(mismatches), "pass": not mismatches,
                   "detail": {"n_max": n_max, "mismatched_trials": mismatches}})

    passed = all(s["pass"] for s in suites)
    if args.format == "json":
        text = _json({"schema_version": SCHEMA_VERSION, "command": "check",
                      "config": _config_echo(args), "suites": suites, "passed": passed})
    else:
        text = _csv(CHECK_COLUMNS, suites)
    _emit(text, args.out)
    return 0 if passed else 1


def cmd_estimate(args):
    system, op, pr, ensemble, grid = _config(args)
    line = estimate_constant(op, ensemble, pr, args.kind, grid, workers=args.workers)
    top = TransferredOperator(op, system)
    sys_est = estimate_constant(top, ensemble, pr, args.kind, grid, workers=args.workers)
    if args.format == "json":
        text = _json({"schema_version": SCHEMA_VERSION, "command": "estimate",
                      "config": _config_echo(args), "line": line.to_dict(),
                      "system": sys_est.to_dict()})
    else:
        rows = []
        for lt, st in zip(line.per_trial, sys_est.per_trial):
            rows.append({"trial": lt["trial"], "seed": lt["seed"], "kind": args.kind,
                         "p": pr.p, "r": pr.r, "J": ensemble.J,
                         "ratio_line": lt["ratio"], "ratio_sys": st["ratio"]})
        text = _csv(TRIAL_COLUMNS, rows)
    _emit(text, args.out)
    return 0


def cmd_compare(args):
    system, op, pr, ensemble, grid = _config(args)
    a = args.a[0]
    report = transfer_comparison(op, system, ensemble, pr, grid, a=a, workers=args.workers)
    if args.format == "json":
        payload = report.to_dict()
        payload.update(schema_version=SCHEMA_VERSION, command="compare",
                       config=_config_echo(args))
        text = _json(payload)
    else:
        rows = []
        for t in report.trials:
            for kind in ("strong", "weak"):
                rows.append({
                    "trial": t.trial, "seed": t.seed, "kind": kind, "a": a,
                    "p": pr.p, "r": pr.r, "J": t.J,
                    "ratio_line": getattr(t, f"{kind}_line"),
                    "ratio_sys": getattr(t, f"{kind}_sys"),
                    "slack": t.slack, "pass": getattr(t, f"{kind}_ok"),
                })
        text = _csv(TRIAL_COLUMNS, rows)
    _emit(text, args.out)
    return 0 if report.passed else 1


def _certificate_trial(args, system, op, pr, ensemble, grid, trial):
    field, seed = ensemble.draw_field(system, trial)
    reports = []
    for a in args.a:
        bundle = TruncatedTraces(op, system, field, a, args.window)
        if args.kind in ("strong", "both"):
            reports.append(bundle.strong(pr, trial))
        if args.kind in ("weak", "both"):
            for lam in grid.values(bundle.output_max(pr)):
                reports.append(bundle.weak(pr, lam, trial))
    for rep in reports:
        rep.seed = seed
    return reports


def cmd_certificate(args):
    system, op, pr, ensemble, grid = _config(args)
    if args.window is not None:
        need = max(minimum_certificate_window(op, a) for a in args.a)
        if args.window < need:
            raise ConfigurationError(
                f"--window {args.window} too small for a={max(args.a)} with {op}; "
                f"minimum window is {need}"
            )
    nested = _map(lambda t: _certificate_trial(args, system, op, pr, ensemble, grid, t),
                  range(args.trials), args.workers)
    reports = [rep for group in nested for rep in group]
    failed = sum(not rep.passed for rep in reports)
    slack_by_a = {str(a): (2 * (a + op.semilocal_radius) + 1) / (2 * a + 1) for a in args.a}
    if args.format == "json":
        text = _json({
            "schema_version": SCHEMA_VERSION, "command": "certificate",
            "config": _config_echo(args),
            "summary": {"n_reports": len(reports), "failed": failed,
                        "trivial": sum(rep.trivial for rep in reports),
                        "slack_by_a": slack_by_a},
            "passed": failed == 0,
            "reports": [rep.to_dict() for rep in reports],
        })
    else:
        rows = [{"trial": rep.trial, "seed": rep.seed, "kind": rep.kind, "a": rep.a,
                 "lambda": rep.lam, "p": rep.p, "r": rep.r, "J": rep.J,
                 "ratio_line": rep.ratio_line, "ratio_sys": rep.ratio_sys,
                 "slack": rep.slack, "pass": rep.passed} for rep in reports]
        text = _csv(TRIAL_COLUMNS, rows)
    _emit(text, args.out)
    return 0 if failed == 0 else 1


COMMANDS = {
    "check": cmd_check,
    "estimate": cmd_estimate,
    "compare": cmd_compare,
    "certificate": cmd_certificate,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ConfigurationError, ValueError) as exc:
        print(f"transferlab {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
