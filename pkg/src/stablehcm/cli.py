"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numerical
failure.  Tables go to CSV (header row) or JSON (``{"rows": [...]}``).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from . import galpha, stable_density as sd, thorin_rep as tr, verify
from .errors import StableHCMError
from .numerics import default_rel_tol

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3


class UsageError(Exception):
    pass


class NumericFailure(Exception):
    pass


# -- argument types -------------------------------------------------------------

def _alpha(text: str) -> float:
    v = float(text)
    if not 0.0 < v < 1.0:
        raise argparse.ArgumentTypeError(f"alpha must lie in (0, 1), got {text}")
    return v


def _rho(text: str) -> float:
    v = float(text)
    if not 0.0 < v <= 1.0:
        raise argparse.ArgumentTypeError(f"rho must lie in (0, 1], got {text}")
    return v


def _positive(text: str) -> float:
    v = float(text)
    if not (v > 0 and math.isfinite(v)):
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return v


def _precision(text: str) -> int:
    v = int(text)
    if not 6 <= v <= 17:
        raise argparse.ArgumentTypeError("precision must be between 6 and 17")
    return v


def _grid(text: str) -> np.ndarray:
    """``lo:hi:n`` -> ``n`` log-spaced points from ``lo`` to ``hi``."""
    try:
        lo, hi, n = text.split(":")
        lo, hi, n = float(lo), float(hi), int(n)
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must look like lo:hi:n, got {text}") from None
    if not (0 < lo <= hi and n >= 1) or (n > 1 and lo == hi):
        raise argparse.ArgumentTypeError(f"grid needs 0 < lo < hi and n >= 1, got {text}")
    return np.geomspace(lo, hi, n) if n > 1 else np.array([lo])


# -- output ------------------------------------------------------------------------

def _fmt(value, precision: int):
    if isinstance(value, (bool, str)) or value is None:
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (list, tuple)):
        return [_fmt(v, precision) for v in value]
    v = float(value)
    if not math.isfinite(v):
        return None
    return float(f"{v:.{precision}g}")


def _csv_cell(value, precision: int) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer, str)):
        return str(value)
    if isinstance(value, (list, tuple)):
        return " ".join(_csv_cell(v, precision) for v in value)
    v = float(value)
    return f"{v:.{precision}g}" if math.isfinite(v) else ""


def render(rows: list[dict], fmt: str, precision: int, extra: dict | None = None) -> str:
    if fmt == "json":
        doc = dict(extra or {})
        doc["rows"] = [{k: _fmt(v, precision) for k, v in row.items()} for row in rows]
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if rows:
        writer.writerow(list(rows[0]))
        for row in rows:
            writer.writerow([_csv_cell(v, precision) for v in row.values()])
    return buf.getvalue()


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _map(fn: Callable, items: Sequence, jobs: int) -> list:
    """Ordered map, optionally over a process pool."""
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


# -- commands -------------------------------------------------------------------------

def _density_row(task) -> dict:
    alpha, rho, method, x = task
    try:
        g = sd.density(sd.StableParams(alpha, rho), x, method)
    except (StableHCMError, ArithmeticError) as exc:
        raise NumericFailure(f"density failed at x={x!r}: {exc}") from exc
    return {"x": x, "g": g}


def cmd_density(args) -> int:
    if args.method == "closed_form_levy" and not (args.alpha == 0.5 and args.rho == 1.0):
        raise UsageError("closed_form_levy needs --alpha 0.5 --rho 1")
    xs = list(args.x or []) + ([] if args.grid is None else [float(v) for v in args.grid])
    if not xs:
        raise UsageError("give --x and/or --grid")
    rows = _map(_density_row, [(args.alpha, args.rho, args.method, x) for x in xs], args.jobs)
    _emit(render(rows, args.format, args.precision), args.output)
    return EXIT_OK


def _galpha_row(task) -> dict:
    alpha, r, t, cut, method = task
    try:
        if cut:
            if method == "asymptotic":
                raise NumericFailure("the asymptotic method is not available on the cut")
            value = galpha.boundary(alpha, galpha.CutPoint(r, cut), method)
            used = "integral" if method == "integral" else "series"
        else:
            p = galpha.SlitPoint(r, t)
            used = galpha.choose_method(alpha, p) if method == "auto" else method
            value = galpha.evaluate_log(alpha, p, used)
    except (StableHCMError, ArithmeticError) as exc:
        raise NumericFailure(f"G failed at r={r!r}: {exc}") from exc
    if value.log_mod <= 700.0:
        z = value.to_complex()
        re, im = z.real, z.imag
    else:
        re = im = None
    where = {"side": cut} if cut else {"t": t}
    return {"r": r, **where, "re": re, "im": im, "log_mod": value.log_mod,
            "phase_over_pi": value.phase_over_pi, "method_used": used}


def cmd_galpha(args) -> int:
    if args.cut is None:
        if args.t is None:
            args.t = 0.0
        if not -1.0 < args.t < 1.0:
            raise UsageError("--t must lie in (-1, 1); use --cut upper|lower for the cut")
    elif args.t is not None:
        raise UsageError("--t and --cut are mutually exclusive")
    rs = list(args.r or []) + ([] if args.grid is None else [float(v) for v in args.grid])
    if not rs:
        raise UsageError("give --r and/or --grid")
    tasks = [(args.alpha, r, args.t, args.cut, args.method) for r in rs]
    rows = _map(_galpha_row, tasks, args.jobs)
    _emit(render(rows, args.format, args.precision), args.output)
    return EXIT_OK


def cmd_theta_table(args) -> int:
    if not args.t_min < args.t_max:
        raise UsageError("--t-min must be below --t-max")
    if args.n < 16:
        raise UsageError("--n must be at least 16")
    try:
        table = tr.build_theta(args.alpha, args.t_min, args.t_max, args.n)
        meta = table.sidecar()
    except (StableHCMError, ArithmeticError) as exc:
        raise NumericFailure(f"theta table failed: {exc}") from exc
    rows = [{"t": t, "theta": th} for t, th in zip(table.t, table.theta)]
    if args.format == "json":
        _emit(render(rows, "json", args.precision, {"meta": _fmt_meta(meta, args.precision)}),
              args.output)
        return EXIT_OK
    _emit(render(rows, "csv", args.precision), args.output)
    if args.output:
        side = Path(args.output).with_suffix(".json")
        side.write_text(json.dumps(_fmt_meta(meta, args.precision), indent=2, sort_keys=True) + "\n")
    else:
        sys.stderr.write(json.dumps(_fmt_meta(meta, args.precision), sort_keys=True) + "\n")
    return EXIT_OK


def _fmt_meta(meta: dict, precision: int) -> dict:
    return {k: _fmt(v, precision) for k, v in meta.items()}


def cmd_verify(args) -> int:
    try:
        checks = verify.run(args.suite, args.alpha, seed=args.seed)
    except (StableHCMError, ArithmeticError) as exc:
        raise NumericFailure(f"verification suite {args.suite} failed to evaluate: {exc}") from exc
    rows = [c.to_dict() for c in checks]
    ok = all(c.passed is not False for c in checks)
    extra = {"suite": args.suite, "pass": ok,
             "failed": [c.name for c in checks if c.passed is False]}
    if args.format == "csv":
        _emit(render(rows, "csv", args.precision), args.output)
    else:
        _emit(render(rows, "json", args.precision, extra), args.output)
    return EXIT_OK if ok else EXIT_VERIFY


# -- parser --------------------------------------------------------------------------------

def _common(p: argparse.ArgumentParser, default_format: str = "csv") -> None:
    p.add_argument("--format", choices=("csv", "json"), default=default_format)
    p.add_argument("--output", "-o", help="write here instead of standard output")
    p.add_argument("--precision", type=_precision, default=17, help="significant digits (6-17)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stable-hcm",
        description="Positive stable densities, the slit-plane function G and HCM checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("density", help="stable density g_{alpha,rho}(x)")
    p.add_argument("--alpha", type=_alpha, required=True)
    p.add_argument("--rho", type=_rho, default=1.0)
    p.add_argument("--x", type=_positive, nargs="+")
    p.add_argument("--grid", type=_grid, help="lo:hi:n, log-spaced")
    p.add_argument("--method", choices=[m.value for m in sd.DensityMethod], default="auto")
    p.add_argument("--jobs", type=int, default=1)
    _common(p)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("galpha", help="G_alpha(r e^{i pi t}) or its boundary values")
    p.add_argument("--alpha", type=_alpha, required=True)
    p.add_argument("--r", type=_positive, nargs="+")
    p.add_argument("--grid", type=_grid, help="lo:hi:n, log-spaced radii")
    p.add_argument("--t", type=float, help="phase / pi in (-1, 1); default 0")
    p.add_argument("--cut", choices=("upper", "lower"))
    p.add_argument("--method", choices=galpha.METHODS, default="auto")
    p.add_argument("--jobs", type=int, default=1)
    _common(p)
    p.set_defaults(func=cmd_galpha)

    p = sub.add_parser("theta-table", help="boundary angle table with JSON sidecar")
    p.add_argument("--alpha", type=_alpha, required=True)
    p.add_argument("--t-min", type=_positive, default=tr.DEFAULT_T_MIN)
    p.add_argument("--t-max", type=_positive, default=tr.DEFAULT_T_MAX)
    p.add_argument("--n", type=int, default=tr.DEFAULT_N)
    _common(p)
    p.set_defaults(func=cmd_theta_table)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=[*verify.SUITES, "all"], default="all")
    p.add_argument("--alpha", type=_alpha, nargs="+")
    p.add_argument("--seed", type=int, default=0)
    _common(p, "json")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        default_rel_tol()
    except ValueError as exc:
        parser.error(str(exc))
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be >= 1")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except NumericFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (StableHCMError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
