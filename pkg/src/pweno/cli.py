"""Command-line front end: weight inspection, data-file interpolation,
refinement studies, method comparison, and timing."""
from __future__ import annotations

import argparse
import csv as _csv
import json
import os
import sys
from math import comb, gcd

import numpy as np

from .grid import PointValues, UniformGrid
from .harness import TestFunctionSpec, render_report, run_refinement, time_method
from .interp import METHODS, MethodSpec, interpolate_all_midpoints
from .lagrange import Stencil
from .smoothness import indicator_set
from .weights import PAIRINGS, WenoParams, base_vectors, dyadic_coefficient


def _levels_arg(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        return (int(lo), int(hi))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected i_min:i_max (e.g. 5:10), got {text!r}")


def _offsets_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers (e.g. -3,-1,0,2), got {text!r}"
        )


def _threads_arg(text: str) -> int:
    if text == "auto":
        return os.cpu_count() or 1
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'auto', got {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError("thread count must be >= 1")
    return n


def _add_output_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("csv", "markdown", "json"), default="markdown")
    p.add_argument("--output", default=None, help="write here instead of stdout")


def _add_method_opts(p: argparse.ArgumentParser, with_method: bool = True) -> None:
    if with_method:
        p.add_argument("--method", choices=METHODS, default="progressive")
    p.add_argument("--t", type=int, default=None, help="indicator exponent (default: r)")
    p.add_argument("--epsilon", type=float, default=1e-16)
    p.add_argument("--pairing", choices=PAIRINGS, default="paired")
    p.add_argument("--threads", type=_threads_arg, default=1)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pweno",
        description="WENO-2r midpoint interpolation and refinement studies",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("weights", help="print optimal weights, dyadic coefficients, base vectors")
    p.add_argument("--r", type=int, default=3)
    _add_output_opts(p)
    p.set_defaults(handler=_cmd_weights)

    p = sub.add_parser("indicators", help="print both indicator families for a data file")
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--data", required=True, help="CSV file with columns x,f")
    _add_output_opts(p)
    p.set_defaults(handler=_cmd_indicators)

    p = sub.add_parser("interp", help="interpolate all midpoints of a data file")
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--data", required=True, help="CSV file with columns x,f")
    _add_method_opts(p)
    _add_output_opts(p)
    p.set_defaults(handler=_cmd_interp)

    p = sub.add_parser("refine", help="grid-refinement error/order study")
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--eta", type=int, choices=(0, 1), default=0)
    p.add_argument("--levels", type=_levels_arg, default=(5, 10))
    p.add_argument("--offsets", type=_offsets_arg, default=None,
                   help="interval offsets from the singular interval (default -r..r)")
    p.add_argument("--time-reps", type=int, default=0, dest="time_reps",
                   help="also record mean runtime per level (breaks byte determinism)")
    _add_method_opts(p)
    _add_output_opts(p)
    p.set_defaults(handler=_cmd_refine)

    p = sub.add_parser("compare", help="classical and progressive studies side by side")
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--eta", type=int, choices=(0, 1), default=0)
    p.add_argument("--levels", type=_levels_arg, default=(5, 10))
    p.add_argument("--offsets", type=_offsets_arg, default=None)
    _add_method_opts(p, with_method=False)
    _add_output_opts(p)
    p.set_defaults(handler=_cmd_compare)

    p = sub.add_parser("bench", help="mean runtimes of both methods per level")
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--eta", type=int, choices=(0, 1), default=0)
    p.add_argument("--levels", type=_levels_arg, default=(5, 10))
    p.add_argument("--reps", type=int, default=500)
    _add_method_opts(p, with_method=False)
    _add_output_opts(p)
    p.set_defaults(handler=_cmd_bench)

    return parser


def _load_point_values(path: str) -> PointValues:
    if not os.path.exists(path):
        raise FileNotFoundError(f"file not found: {path}")
    xs: list[float] = []
    fs: list[float] = []
    with open(path, newline="", encoding="utf-8") as fh:
        for row in _csv.reader(fh):
            if not row or not row[0].strip():
                continue
            try:
                x, f = float(row[0]), float(row[1])
            except (ValueError, IndexError):
                if not xs:
                    continue  # header row
                raise ValueError(f"unreadable data row: {row!r}")
            xs.append(x)
            fs.append(f)
    if len(xs) < 2:
        raise ValueError("data file needs at least two x,f rows")
    x = np.asarray(xs)
    h = (x[-1] - x[0]) / (len(x) - 1)
    if h <= 0:
        raise ValueError("x column must be strictly increasing")
    if np.max(np.abs(np.diff(x) - h)) > 1e-10 * abs(h):
        raise ValueError("x column is not uniformly spaced")
    grid = UniformGrid(float(x[0]), float(x[-1]), len(x) - 1)
    return PointValues(grid, np.asarray(fs))


def _method_spec(args: argparse.Namespace, method: str | None = None) -> MethodSpec:
    params = WenoParams(r=args.r, t=args.t, epsilon=args.epsilon)
    return MethodSpec(method=method or args.method, params=params, pairing=args.pairing)


def _exact_optimal(r: int) -> list[str]:
    # common-gcd reduction keeps the shared denominator (3/16, 10/16, 3/16 style)
    den = 2 ** (2 * r - 1)
    nums = [comb(2 * r, 2 * k + 1) for k in range(r)]
    g = gcd(den, *nums)
    return [f"{n // g}/{den // g}" for n in nums]


def _dyadic_rows(r: int):
    for l in range(r, 2 * r - 1):
        for k in range(2 * r - 1 - l):
            yield dyadic_coefficient(l, k, r)


def _cmd_weights(args: argparse.Namespace) -> str:
    r = args.r
    exact = _exact_optimal(r)
    floats = [float(n) / d for n, d in
              ((comb(2 * r, 2 * k + 1), 2 ** (2 * r - 1)) for k in range(r))]
    vectors = base_vectors(r) if r >= 3 else []

    if args.format == "json":
        payload = {
            "r": r,
            "optimal": {"exact": exact, "float": floats},
            "dyadic": [{"l": c.l, "k": c.k, "left": str(c.left_exact),
                        "right": str(c.right_exact)} for c in _dyadic_rows(r)],
            "base_vectors": [[float(x) for x in v.w] for v in vectors],
        }
        return json.dumps(payload, indent=2) + "\n"

    if args.format == "csv":
        lines = ["quantity,l,k,slot,exact,float"]
        for k, (ex, fl) in enumerate(zip(exact, floats)):
            lines.append(f"optimal,,{k},,{ex},{fl!r}")
        for c in _dyadic_rows(r):
            lines.append(f"dyadic,{c.l},{c.k},left,{c.left_exact},{c.left!r}")
            lines.append(f"dyadic,{c.l},{c.k},right,{c.right_exact},{c.right!r}")
        for k, v in enumerate(vectors):
            for j, val in enumerate(v.w):
                lines.append(f"base,,{k},{j},,{float(val)!r}")
        return "\n".join(lines) + "\n"

    lines = [f"optimal weights r={r}: " + ", ".join(exact),
             "floats: " + ", ".join(repr(f) for f in floats), "",
             "dyadic coefficients:"]
    for c in _dyadic_rows(r):
        lines.append(f"  l={c.l} k={c.k}: {c.left_exact}, {c.right_exact}")
    if vectors:
        lines.append("")
        lines.append("base vectors:")
        for k, v in enumerate(vectors):
            lines.append(f"  k={k}: " + ", ".join(repr(float(val)) for val in v.w))
    return "\n".join(lines) + "\n"


def _admissible_stencils(pv: PointValues, r: int):
    if pv.grid.J < 2 * r:
        raise ValueError(f"grid too small: need J >= {2 * r}, got J={pv.grid.J}")
    for i in range(r, pv.grid.J - r + 2):
        yield i, Stencil(r, pv.values[i - r : i + r])


def _cmd_indicators(args: argparse.Namespace) -> str:
    pv = _load_point_values(args.data)
    r = args.r
    rows = []
    for i, s in _admissible_stencils(pv, r):
        new = indicator_set(s, "new").values
        cls = indicator_set(s, "classical").values
        rows.append((i, pv.grid.midpoint(i), new, cls))
    head = (["i", "x"] + [f"new_{k}" for k in range(r)]
            + [f"classical_{k}" for k in range(r)])

    if args.format == "json":
        records = [{"i": i, "x": x, "new": [float(f"{v:.6e}") for v in new],
                    "classical": [float(f"{v:.6e}") for v in cls]}
                   for (i, x, new, cls) in rows]
        return json.dumps(records, indent=2) + "\n"

    body = [[str(i), f"{x:.6e}"] + [f"{v:.6e}" for v in new] + [f"{v:.6e}" for v in cls]
            for (i, x, new, cls) in rows]
    if args.format == "csv":
        return "\n".join([",".join(head)] + [",".join(row) for row in body]) + "\n"
    lines = ["| " + " | ".join(head) + " |",
             "|" + "|".join("---" for _ in head) + "|"]
    lines += ["| " + " | ".join(row) + " |" for row in body]
    return "\n".join(lines) + "\n"


def _cmd_interp(args: argparse.Namespace) -> str:
    pv = _load_point_values(args.data)
    spec = _method_spec(args)
    results = interpolate_all_midpoints(pv, spec, threads=args.threads)

    if args.format == "json":
        records = [{"i": i, "x": x, "value": v} for (i, x, v) in results]
        return json.dumps(records, indent=2) + "\n"
    body = [[str(i), repr(x), repr(v)] for (i, x, v) in results]
    if args.format == "csv":
        return "\n".join(["i,x,value"] + [",".join(row) for row in body]) + "\n"
    lines = ["| i | x | value |", "|---|---|---|"]
    lines += ["| " + " | ".join(row) + " |" for row in body]
    return "\n".join(lines) + "\n"


def _default_offsets(args: argparse.Namespace) -> tuple[int, ...]:
    if args.offsets is not None:
        return args.offsets
    return tuple(range(-args.r, args.r + 1))


def _cmd_refine(args: argparse.Namespace) -> str:
    fn = TestFunctionSpec(args.eta)
    rep = run_refinement(fn, _method_spec(args), args.levels[0], args.levels[1],
                         _default_offsets(args), threads=args.threads,
                         time_reps=args.time_reps)
    return render_report(rep, args.format)


def _cmd_compare(args: argparse.Namespace) -> str:
    fn = TestFunctionSpec(args.eta)
    offsets = _default_offsets(args)
    reports = {name: run_refinement(fn, _method_spec(args, method=name),
                                    args.levels[0], args.levels[1], offsets,
                                    threads=args.threads)
               for name in ("classical", "progressive")}
    if args.format == "json":
        merged = {name: json.loads(render_report(rep, "json"))
                  for name, rep in reports.items()}
        return json.dumps(merged, indent=2) + "\n"
    blocks = []
    for name, rep in reports.items():
        title = f"## {name}" if args.format == "markdown" else f"# {name}"
        blocks.append(title + "\n" + render_report(rep, args.format))
    return "\n".join(blocks)


def _cmd_bench(args: argparse.Namespace) -> str:
    from .grid import build_uniform_grid, sample_point_values

    fn = TestFunctionSpec(args.eta)
    rows = []
    for lvl in range(args.levels[0], args.levels[1] + 1):
        grid = build_uniform_grid(fn.a, fn.b, 2 ** lvl)
        pv = sample_point_values(fn, grid)
        t_cl = time_method(pv, _method_spec(args, method="classical"), reps=args.reps)
        t_pr = time_method(pv, _method_spec(args, method="progressive"), reps=args.reps)
        rows.append((lvl, grid.J, t_cl, t_pr, t_pr / t_cl))

    if args.format == "json":
        records = [{"level": lvl, "J": J, "classical_s": tc, "progressive_s": tp,
                    "ratio": round(ratio, 3)} for (lvl, J, tc, tp, ratio) in rows]
        return json.dumps(records, indent=2) + "\n"
    body = [[str(lvl), str(J), f"{tc:.3e}", f"{tp:.3e}", f"{ratio:.3f}"]
            for (lvl, J, tc, tp, ratio) in rows]
    head = ["i", "J", "classical(s)", "progressive(s)", "ratio"]
    if args.format == "csv":
        return "\n".join([",".join(h.replace("(s)", "_s") for h in head)]
                         + [",".join(row) for row in body]) + "\n"
    lines = ["| " + " | ".join(head) + " |", "|" + "|".join("---" for _ in head) + "|"]
    lines += ["| " + " | ".join(row) + " |" for row in body]
    return "\n".join(lines) + "\n"


def run_cli(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code is None else int(exc.code)
    try:
        text = args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main() -> None:
    raise SystemExit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
