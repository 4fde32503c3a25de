"""Command-line harness.

Subcommands: ``compute``, ``bench-table``, ``error-curve``, ``series-count``,
``refit``.  Every run is deterministic given its flags and seed; repeated
runs produce byte-identical CSV/JSON.  Exit codes: 0 success, 2 usage error
(argparse), 1 computational failure.
"""

import argparse
import json
import sys

from . import __version__
from .approximations import evaluate
from .core import EllipseAxes, MethodId, h_param
from .error_analysis import (
    BENCHMARK_METHODS,
    RANGE_PRESETS,
    TABLE_RANGES,
    MeshSpec,
    VaryA,
    VaryB,
    benchmark_table,
    error_curve,
    format_benchmark_text,
    to_percent,
    to_ppm,
    write_benchmark_json,
    write_error_curve_csv,
    _write_csv,
)
from .fitting import FitProblem, FitVariant, fit_one_exp, fit_two_exp, write_fit_report
from .oracle import PrecisionConfig, exact_perimeter
from .series import DEFAULT_TERM_CAP, ivory_terms_needed

_METHOD_HELP = "method label, e.g. cantrell, r2-two-exp, euler-ivory:148"


def _method(text: str) -> MethodId:
    try:
        return MethodId.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _mesh_from_args(args) -> MeshSpec:
    if args.vary_a is not None:
        b_fixed, a_min, a_max = args.vary_a
        spec = MeshSpec(VaryA(b_fixed, a_min, a_max), args.points or 10_000)
    elif args.vary_b is not None:
        a_fixed, b_min, b_max = args.vary_b
        spec = MeshSpec(VaryB(a_fixed, b_min, b_max), args.points or 10_000)
    else:
        spec = RANGE_PRESETS[args.range]
        if args.points:
            spec = MeshSpec(spec.domain, args.points)
    return spec


def _add_mesh_flags(p: argparse.ArgumentParser, default_range: str) -> None:
    p.add_argument("--range", choices=sorted(RANGE_PRESETS), default=default_range,
                   help="named mesh preset (default: %(default)s)")
    p.add_argument("--vary-a", nargs=3, type=float, metavar=("B", "A_MIN", "A_MAX"),
                   help="custom sweep of a with b fixed (overrides --range)")
    p.add_argument("--vary-b", nargs=3, type=float, metavar=("A", "B_MIN", "B_MAX"),
                   help="custom sweep of b with a fixed (overrides --range)")
    p.add_argument("--points", type=int, help="mesh density override")


def _add_oracle_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--digits", type=int, default=50,
                   help="oracle working precision in decimal digits (default: %(default)s)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ellipse-perimeter",
        description="Closed-form ellipse perimeter approximations, benchmarked "
                    "against a high-precision elliptic-integral reference.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="evaluate one method on one ellipse")
    p.add_argument("--a", type=float, required=True, help="semi-major axis")
    p.add_argument("--b", type=float, required=True, help="semi-minor axis")
    p.add_argument("--method", type=_method, required=True, help=_METHOD_HELP)
    p.add_argument("--no-sigmoid", action="store_true",
                   help="disable the logistic gate of the corrected methods")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    _add_oracle_flag(p)

    p = sub.add_parser("bench-table", help="max relative error per method and range")
    p.add_argument("--methods", default=",".join(m.label for m in BENCHMARK_METHODS),
                   help="comma-separated method labels (default: all benchmark methods)")
    p.add_argument("--ranges", default=",".join(TABLE_RANGES),
                   help="comma-separated range presets (default: %(default)s)")
    p.add_argument("--points", type=int, help="mesh density override")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="output file (default: stdout)")
    _add_oracle_flag(p)

    p = sub.add_parser("error-curve", help="per-point error records as CSV")
    p.add_argument("--method", type=_method, required=True, help=_METHOD_HELP)
    _add_mesh_flags(p, default_range="figure")
    p.add_argument("--out", help="output CSV file (default: stdout)")
    _add_oracle_flag(p)

    p = sub.add_parser("series-count", help="terms of the Gauss-Kummer series "
                                            "needed to reach a target accuracy")
    p.add_argument("--target-ppm", type=float, required=True,
                   help="target max relative error in ppm")
    _add_mesh_flags(p, default_range="b1-a1-1000")
    p.add_argument("--cap", type=int, default=DEFAULT_TERM_CAP,
                   help="give up beyond this many terms (default: %(default)s)")
    _add_oracle_flag(p)

    p = sub.add_parser("refit", help="re-derive correction constants by minimax fit")
    p.add_argument("--variant", choices=[v.value for v in FitVariant], required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--fit-points", type=int, default=1000, help="fit mesh density")
    p.add_argument("--eval-points", type=int, default=10_000, help="evaluation mesh density")
    p.add_argument("--no-polish", action="store_true", help="stop after the grid scan")
    p.add_argument("--out", help="write the JSON fit report here")
    _add_oracle_flag(p)

    return parser


def _cmd_compute(args) -> int:
    axes = EllipseAxes(args.a, args.b)
    method = args.method
    if args.no_sigmoid:
        method = MethodId(method.formula, n_terms=method.n_terms, sigmoid=False)
    cfg = PrecisionConfig(working_digits=args.digits)
    approx = evaluate(method, axes)
    exact = exact_perimeter(axes, cfg)
    signed = (approx - exact) / exact
    if args.json:
        payload = {
            "method": method.label,
            "a": axes.a,
            "b": axes.b,
            "h": h_param(axes.a, axes.b),
            "perimeter": approx,
            "exact": exact,
            "signed_rel": signed,
            "signed_percent": to_percent(signed),
            "signed_ppm": to_ppm(signed),
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"method:    {method.label}")
        print(f"axes:      a={axes.a:.17g} b={axes.b:.17g}")
        print(f"perimeter: {approx:.17g}")
        print(f"exact:     {exact:.17g}")
        print(f"error:     {signed:.6e} = {to_percent(signed):.6e}% = {to_ppm(signed):.6f} ppm")
    return 0


def _cmd_bench_table(args) -> int:
    methods = [MethodId.parse(m) for m in args.methods.split(",") if m.strip()]
    ranges = [r.strip() for r in args.ranges.split(",") if r.strip()]
    cfg = PrecisionConfig(working_digits=args.digits)
    table = benchmark_table(methods, ranges, oracle_cfg=cfg, n_points=args.points)
    if args.format == "json":
        if args.out:
            write_benchmark_json(table, args.out)
        else:
            from .error_analysis import benchmark_rows

            print(json.dumps(benchmark_rows(table), indent=2))
    else:
        text = format_benchmark_text(table)
        if args.out:
            with open(args.out, "w") as f:
                f.write(text + "\n")
        else:
            print(text)
    return 0


def _cmd_error_curve(args) -> int:
    mesh = _mesh_from_args(args)
    cfg = PrecisionConfig(working_digits=args.digits)
    records = error_curve(args.method, mesh, oracle_cfg=cfg)
    if args.out:
        write_error_curve_csv(records, args.out)
    else:
        _write_csv(records, sys.stdout)
    return 0


def _cmd_series_count(args) -> int:
    mesh = _mesh_from_args(args)
    cfg = PrecisionConfig(working_digits=args.digits)
    n = ivory_terms_needed(args.target_ppm * 1e-6, mesh, cfg, cap=args.cap)
    print(n)
    return 0


def _cmd_refit(args) -> int:
    cfg = PrecisionConfig(working_digits=args.digits)
    if args.variant == FitVariant.ONE_EXP.value:
        problem = FitProblem.one_exp(n_fit=args.fit_points, n_eval=args.eval_points, seed=args.seed)
        result = fit_one_exp(problem, cfg, polish=not args.no_polish)
    else:
        problem = FitProblem.two_exp(n_fit=args.fit_points, n_eval=args.eval_points, seed=args.seed)
        result = fit_two_exp(problem, cfg, polish=not args.no_polish)
    p = result.params
    print(f"variant:   {problem.variant.value}")
    print(f"A = {p.A:.10e}   B = {p.B:.8f}")
    if problem.variant is FitVariant.TWO_EXP_CONSTRAINED:
        print(f"C = {p.C:.10e}   D = {p.D:.8f}   (A + C = {p.A + p.C:.10e})")
    print(f"max |rel err| on eval mesh: {to_ppm(result.achieved_max_rel):.4f} ppm")
    print(f"objective evaluations: {result.evaluations}   converged: {result.converged}")
    if args.out:
        write_fit_report(problem, result, args.out)
    return 0


_COMMANDS = {
    "compute": _cmd_compute,
    "bench-table": _cmd_bench_table,
    "error-curve": _cmd_error_curve,
    "series-count": _cmd_series_count,
    "refit": _cmd_refit,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
