"""Command line interface.

Every subcommand emits CSV with a header row and full-precision floats,
so downstream plotting can reproduce the figures without loss.  Exit
codes: 0 success, 1 numerical failure, 2 flag or validation error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .analysis import (
    NoOptimalBandwidthError,
    asymptotic_pointwise,
    exact_mise,
    exact_mse_curve,
    mise_terms,
)
from .boundary import FAMILY_NAMES, BoundaryKernelFamily, DegenerateKernelError
from .distributions import BetaMixture, Uniform, solve_params
from .estimator import EstimatorConfig, evaluate_grid
from .kernels import KERNEL_NAMES, BaseKernel
from .quadrature import QuadratureError, RootFindingError
from .simulation import FAMILY_CHOICES, SimConfig, run_ise, summarize


def _fmt(value) -> str:
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def _emit(rows, header, out_path):
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    text = "\n".join(lines) + "\n"
    if out_path and out_path != "-":
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_dist_flags(sub):
    sub.add_argument("--w", type=float, help="mixture weight of the B(1,2) component")
    sub.add_argument("--b", type=float, help="shape parameter of the B(2,b) component")
    sub.add_argument(
        "--d1-at-0", type=float, dest="d1", help="target density at the left endpoint"
    )
    sub.add_argument(
        "--d2-at-0",
        type=float,
        dest="d2",
        help="target second CDF derivative at the left endpoint",
    )
    sub.add_argument(
        "--uniform", action="store_true", help="use the uniform distribution on [0, 1]"
    )


def _resolve_dist(args, parser):
    by_params = args.w is not None or args.b is not None
    by_targets = args.d1 is not None or args.d2 is not None
    if sum([by_params, by_targets, args.uniform]) != 1:
        parser.error(
            "specify the distribution exactly one way: (--w, --b), "
            "(--d1-at-0, --d2-at-0), or --uniform"
        )
    try:
        if args.uniform:
            return Uniform()
        if by_params:
            if args.w is None or args.b is None:
                parser.error("--w and --b must be given together")
            return BetaMixture(args.w, args.b)
        if args.d1 is None or args.d2 is None:
            parser.error("--d1-at-0 and --d2-at-0 must be given together")
        return solve_params(args.d1, args.d2)
    except ValueError as exc:
        parser.error(str(exc))


def _add_kernel_flag(sub):
    sub.add_argument(
        "--kernel", default="epanechnikov", choices=KERNEL_NAMES, help="base kernel"
    )


def _parse_families(text, parser, allow_classical=False):
    choices = FAMILY_CHOICES if allow_classical else FAMILY_NAMES
    fams = tuple(t.strip() for t in text.split(",") if t.strip())
    for fam in fams:
        if fam not in choices:
            parser.error(f"unknown family {fam!r}; choose from {choices}")
    if not fams:
        parser.error("at least one family is required")
    return fams


def _alpha_grid(points: int) -> np.ndarray:
    return (np.arange(points) + 1.0) / (points + 1.0)


def _cmd_estimate(args, parser):
    try:
        data = np.loadtxt(args.data, ndmin=1)
    except OSError as exc:
        parser.error(str(exc))
    base = BaseKernel(args.kernel)
    family = None if args.family == "classical" else BoundaryKernelFamily(args.family, base)
    try:
        cfg = EstimatorConfig(args.a, args.b, args.h, base, family)
    except ValueError as exc:
        parser.error(str(exc))
    grid = np.linspace(args.a, args.b, args.grid)
    if family is not None and family.variant == "k1":
        strip = grid[(grid > args.a) & (grid < args.a + args.h)]
        if strip.size:
            alpha = (strip - args.a) / args.h
            norm = 2.0 * np.asarray(base.antiderivative(alpha)) - 1.0
            if norm.min() < 1e-6:
                print(
                    "warning: k1 normaliser below 1e-6 near the boundary; "
                    "values remain exact but are badly conditioned",
                    file=sys.stderr,
                )
    values = evaluate_grid(data, cfg, grid)
    _emit(zip(grid.tolist(), values.tolist()), ["x", "Fhat"], args.out)
    return 0


def _cmd_coeffs(args, parser):
    base = BaseKernel(args.kernel)
    fams = _parse_families(args.families, parser)
    alphas = _alpha_grid(args.points)
    rows = []
    for name in fams:
        fam = BoundaryKernelFamily(name, base)
        for alpha in alphas:
            mu = fam.mu_bias_coeff(alpha)
            nu = fam.nu_var_coeff(alpha)
            rows.append((name, float(alpha), mu, mu * mu, nu, -nu))
    _emit(rows, ["family", "alpha", "mu", "mu_sq", "nu", "neg_nu"], args.out)
    return 0


def _cmd_mse_curve(args, parser):
    dist = _resolve_dist(args, parser)
    base = BaseKernel(args.kernel)
    fams = _parse_families(args.families, parser)
    if args.h == "optimal":
        h = mise_terms(dist, base, args.n).h0
    else:
        h = float(args.h)
    a, b = dist.support
    alphas = _alpha_grid(args.points)
    rows = []
    for name in fams:
        fam = BoundaryKernelFamily(name, base)
        cfg = EstimatorConfig(a, b, h, base, fam)
        for alpha, rec in zip(alphas, exact_mse_curve(dist, cfg, args.n, alphas)):
            rows.append((name, float(alpha), rec.x, rec.bias, rec.variance, rec.mse))
    _emit(rows, ["family", "alpha", "x", "bias", "variance", "mse"], args.out)
    return 0


def _cmd_bandwidth(args, parser):
    dist = _resolve_dist(args, parser)
    base = BaseKernel(args.kernel)
    terms = mise_terms(dist, base, args.n)
    _emit(
        [(terms.h0, terms.delta_k, dist.roughness())],
        ["h0", "delta", "roughness"],
        args.out,
    )
    return 0


def _cmd_mise(args, parser):
    dist = _resolve_dist(args, parser)
    base = BaseKernel(args.kernel)
    fam = BoundaryKernelFamily(args.family, base)
    a, b = dist.support
    terms = mise_terms(dist, base, args.n)
    rows = []
    for h in args.h:
        cfg = EstimatorConfig(a, b, h, base, fam)
        exact = exact_mise(dist, cfg, args.n, (a, b))
        lead = terms.leading(h, args.n)
        rows.append((h, exact, lead, exact - lead))
    _emit(rows, ["h", "exact_mise", "leading", "difference"], args.out)
    return 0


def _cmd_simulate(args, parser):
    dist = _resolve_dist(args, parser)
    base = BaseKernel(args.kernel)
    fams = _parse_families(args.families, parser, allow_classical=True)
    h = "optimal" if args.h == "optimal" else float(args.h)
    regions = None
    if args.region:
        regions = []
        for text in args.region:
            try:
                lo, hi = (float(t) for t in text.split(":"))
            except ValueError:
                parser.error(f"bad region {text!r}; expected lo:hi")
            regions.append((lo, hi))
        regions = tuple(regions)
    try:
        cfg = SimConfig(
            dist=dist,
            n=args.n,
            reps=args.reps,
            seed=args.seed,
            base=base,
            families=fams,
            h=h,
            regions=regions,
        )
    except ValueError as exc:
        parser.error(str(exc))
    res = run_ise(cfg)
    rows = []
    for r in range(res.reps):
        for j, fam in enumerate(res.families):
            for k, (lo, hi) in enumerate(res.regions):
                rows.append((r, fam, f"{lo!r}:{hi!r}", res.ise[r, j, k]))
    _emit(rows, ["replicate", "family", "region", "ise"], args.out)
    if args.summary_out:
        srows = [
            (
                row["family"],
                f"{row['region_lo']!r}:{row['region_hi']!r}",
                row["min"],
                row["q1"],
                row["median"],
                row["q3"],
                row["max"],
                row["mean"],
            )
            for row in summarize(res)
        ]
        _emit(
            srows,
            ["family", "region", "min", "q1", "median", "q3", "max", "mean"],
            args.summary_out,
        )
    return 0


def _cmd_check_kernels(args, parser):
    base = BaseKernel(args.kernel)
    fam = BoundaryKernelFamily(args.family, base)
    alphas = _alpha_grid(args.points)
    rows = [
        (
            rec.alpha,
            rec.c1_residual,
            rec.c2_residual,
            int(rec.c1_ok),
            int(rec.c2_ok),
        )
        for rec in fam.check_conditions(alphas, args.tol)
    ]
    _emit(rows, ["alpha", "c1_residual", "c2_residual", "c1_ok", "c2_ok"], args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bkcdf",
        description="Boundary-corrected kernel distribution function estimation",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("estimate", help="evaluate an estimator on a data file")
    p.add_argument("--data", required=True, help="newline-delimited reals")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--h", type=float, required=True)
    _add_kernel_flag(p)
    p.add_argument(
        "--family", default="classical", choices=("classical",) + FAMILY_NAMES
    )
    p.add_argument("--grid", type=int, default=1001, help="number of grid points")
    p.set_defaults(func=_cmd_estimate)

    p = subs.add_parser("coeffs", help="boundary bias/variance coefficient curves")
    _add_kernel_flag(p)
    p.add_argument("--families", default="k1,k2,k3")
    p.add_argument("--points", type=int, default=99)
    p.set_defaults(func=_cmd_coeffs)

    p = subs.add_parser("mse-curve", help="exact pointwise MSE across the left strip")
    _add_dist_flags(p)
    _add_kernel_flag(p)
    p.add_argument("--families", default="k1,k2,k3")
    p.add_argument("--n", type=int, default=50)
    p.add_argument("--h", default="optimal", help='bandwidth, or "optimal"')
    p.add_argument("--points", type=int, default=99)
    p.set_defaults(func=_cmd_mse_curve)

    p = subs.add_parser("bandwidth", help="asymptotically optimal bandwidth")
    _add_dist_flags(p)
    _add_kernel_flag(p)
    p.add_argument("--n", type=int, default=50)
    p.set_defaults(func=_cmd_bandwidth)

    p = subs.add_parser("mise", help="exact vs leading-term MISE over a bandwidth grid")
    _add_dist_flags(p)
    _add_kernel_flag(p)
    p.add_argument("--family", default="k1", choices=FAMILY_NAMES)
    p.add_argument("--n", type=int, default=50)
    p.add_argument(
        "--h", type=float, action="append", required=True, help="repeatable bandwidth"
    )
    p.set_defaults(func=_cmd_mise)

    p = subs.add_parser("simulate", help="Monte Carlo ISE study")
    _add_dist_flags(p)
    _add_kernel_flag(p)
    p.add_argument("--families", default="classical,k1,k2,k3")
    p.add_argument("--n", type=int, default=50)
    p.add_argument("--reps", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--h", default="optimal", help='bandwidth, or "optimal"')
    p.add_argument(
        "--region", action="append", help="repeatable region lo:hi (default strips + full)"
    )
    p.add_argument("--summary-out", help="write boxplot statistics CSV here")
    p.set_defaults(func=_cmd_simulate)

    p = subs.add_parser("check-kernels", help="moment condition report")
    _add_kernel_flag(p)
    p.add_argument("--family", required=True, choices=FAMILY_NAMES)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--points", type=int, default=99)
    p.set_defaults(func=_cmd_check_kernels)

    for sub in subs.choices.values():
        sub.add_argument("--out", help="output CSV path (default: stdout)")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except (
        NoOptimalBandwidthError,
        DegenerateKernelError,
        QuadratureError,
        RootFindingError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
