"""Command-line front end: ``zetaix eval | table | verify``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from decimal import Decimal

from .config import EvalConfig
from .errors import ZetaError
from .hurwitz import EvalPoint, evaluate
from .verify import SUITES, run_suites

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

CSV_HEADER = ("s", "x", "re", "im", "path", "err")


def parse_values(text: str) -> list[float]:
    """Scalar, comma list, or inclusive ``start:stop:step`` range."""
    values: list[float] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError(f"empty entry in {text!r}")
        if ":" in chunk:
            parts = chunk.split(":")
            if len(parts) != 3:
                raise ValueError(f"range must be start:stop:step, got {chunk!r}")
            # Decimal keeps 0.1:0.9:0.1 free of accumulated binary drift
            start, stop, step = (Decimal(p) for p in parts)
            if step <= 0:
                raise ValueError(f"range step must be positive, got {chunk!r}")
            if stop < start:
                raise ValueError(f"empty range {chunk!r}")
            count = int((stop - start) / step)
            values.extend(float(start + i * step) for i in range(count + 1))
        else:
            values.append(float(chunk))
    return values


def _fmt(v: float) -> str:
    return format(v, ".17g")


def _row(s: float, x: float, deriv: int, cfg: EvalConfig) -> dict:
    try:
        out = evaluate(EvalPoint(s, x, deriv), cfg)
    except ZetaError as exc:
        return {"s": s, "x": x, "re": math.nan, "im": math.nan,
                "path": f"error:{exc}", "err": math.nan, "error": str(exc)}
    return {"s": s, "x": x, "re": out.re, "im": out.im,
            "path": out.path, "err": out.error_estimate, "error": None}


def _row_star(args):
    return _row(*args)


def _compute(points: list[tuple[float, float]], deriv: int, cfg: EvalConfig, jobs: int) -> list[dict]:
    tasks = [(s, x, deriv, cfg) for s, x in points]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # map preserves input order, so output is deterministic
            return list(pool.map(_row_star, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    return [_row_star(t) for t in tasks]


def _render(rows: list[dict], fmt: str, as_list: bool = False) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in rows:
            writer.writerow([_fmt(r["s"]), _fmt(r["x"]), _fmt(r["re"]), _fmt(r["im"]), r["path"], _fmt(r["err"])])
        return buf.getvalue()
    if fmt == "json":
        def clean(r):
            # JSON has no NaN; failed rows carry null numbers and the message
            d = {k: (None if isinstance(v, float) and math.isnan(v) else v) for k, v in r.items()}
            if d["error"] is None:
                del d["error"]
            else:
                d["path"] = "error"
            return d
        payload = [clean(r) for r in rows]
        return json.dumps(payload[0] if len(payload) == 1 and not as_list else payload, indent=None) + "\n"
    lines = []
    for r in rows:
        if r["error"]:
            lines.append(f"s={_fmt(r['s'])} x={_fmt(r['x'])} error: {r['error']}")
        else:
            lines.append(f"s={_fmt(r['s'])} x={_fmt(r['x'])} Re={_fmt(r['re'])} Im={_fmt(r['im'])} "
                         f"path={r['path']} err={r['err']:.3g}")
    return "\n".join(lines) + "\n"


def _config(args) -> EvalConfig:
    overrides = {}
    if args.tol is not None:
        overrides["tol_rel"] = args.tol
    return EvalConfig.from_env(**overrides)


def cmd_eval(args) -> int:
    cfg = _config(args)
    points = [(s, x) for s in parse_values(args.s) for x in parse_values(args.x)]
    rows = _compute(points, args.deriv, cfg, args.jobs)
    failed = [r for r in rows if r["error"]]
    if failed and len(rows) == 1:
        r = failed[0]
        sys.stderr.write(f"error: {r['error']}\n")
        return EXIT_USAGE
    sys.stdout.write(_render(rows, args.format))
    for r in failed:
        sys.stderr.write(f"error at s={_fmt(r['s'])} x={_fmt(r['x'])}: {r['error']}\n")
    return EXIT_USAGE if failed else EXIT_OK


def cmd_table(args) -> int:
    cfg = _config(args)
    s_values = sorted(parse_values(args.s))
    x_values = sorted(parse_values(args.x))
    points = [(s, x) for s in s_values for x in x_values]
    rows = _compute(points, args.deriv, cfg, args.jobs)
    fmt = "csv" if args.format == "text" else args.format
    sys.stdout.write(_render(rows, fmt, as_list=True))
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = _config(args)
    names = args.suite or None
    results = run_suites(names, cfg)
    if args.format == "json":
        sys.stdout.write(json.dumps([
            {"suite": r.name, "pass": r.passed, "max_error": r.max_error,
             "tolerance": r.tolerance, "detail": r.detail} for r in results
        ]) + "\n")
    else:
        for r in results:
            sys.stdout.write(r.line() + "\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zetaix", description="Hurwitz zeta at imaginary shift: zeta_H(s, ix).")
    sub = parser.add_subparsers(dest="mode", required=True)

    def common(p, need_points=True):
        if need_points:
            p.add_argument("--s", required=True, help="real s: scalar, comma list or start:stop:step")
            p.add_argument("--x", required=True, help="x in (0,1): scalar, comma list or start:stop:step")
            p.add_argument("--deriv", type=int, choices=(0, 1), default=0)
            p.add_argument("--jobs", type=int, default=1, help="worker processes for grids")
        p.add_argument("--format", choices=("text", "csv", "json"), default="text")
        p.add_argument("--tol", type=float, default=None, help="relative tolerance (default ZETAIX_TOL or 1e-12)")

    common(sub.add_parser("eval", help="evaluate at points"))
    common(sub.add_parser("table", help="grid over s and x, CSV or JSON"))
    v = sub.add_parser("verify", help="run the self-verification suites")
    common(v, need_points=False)
    v.add_argument("--suite", action="append", choices=list(SUITES), help="run only this suite (repeatable)")
    return parser


def _attach_values(argv: list[str]) -> list[str]:
    """Turn ``--s -3:3:1`` into ``--s=-3:3:1`` so argparse does not read it as a flag."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        if argv[i] in ("--s", "--x") and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_attach_values(sys.argv[1:] if argv is None else argv))
    try:
        if args.mode == "eval":
            return cmd_eval(args)
        if args.mode == "table":
            return cmd_table(args)
        return cmd_verify(args)
    except (ValueError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
