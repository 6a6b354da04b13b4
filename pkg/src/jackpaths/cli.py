"""Command-line surface: compute path formulas, sample diagrams, build
limit shapes, locate Bessel order-zeros, run verification suites, and
render profiles.  Exit codes: 0 pass, 1 verification failure, 2 usage
error.  Rationals are written p/q; --json switches to machine output."""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .exactnum import format_rational, parse_rational

# let argparse accept negative rationals like -1/4 as values, not flags
_NEGATIVE_TOKEN = re.compile(r"^-\d+(/\d+)?(\.\d+)?$")


def _rational(text):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad rational {text!r}: {exc}")


def _load_config(path):
    if path is None:
        return {}
    text = open(path, "rb").read()
    if path.endswith(".toml"):
        import tomllib

        return tomllib.loads(text.decode())
    return json.loads(text)


_SUBPARSERS: dict = {}


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="jackpaths",
        description="Exact identities and samplers for deformed random "
                    "Young diagrams and weighted lattice paths")
    top.add_argument("--config", help="JSON/TOML file of defaults; flags override")
    top._negative_number_matcher = _NEGATIVE_TOKEN
    action = top.add_subparsers(dest="command", required=True)

    class _Registry:
        @staticmethod
        def add_parser(name, **kw):
            parser = action.add_parser(name, **kw)
            parser._negative_number_matcher = _NEGATIVE_TOKEN
            _SUBPARSERS[name] = parser
            return parser

    sub = _Registry

    p = sub.add_parser("moments", help="limiting transition-measure moment")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--g", type=_rational, default=Fraction(0))
    p.add_argument("--v", nargs="*", type=_rational, default=None,
                   help="v_1 v_2 ... (defaults to the Plancherel direction)")
    p.add_argument("--plancherel", action="store_true",
                   help="shorthand for v = 1 0 0 ...")
    p.add_argument("--symbolic", action="store_true",
                   help="print the sparse polynomial instead of a value")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("finite-expectation",
                       help="exact ribbon-path expectation of Boolean products")
    p.add_argument("--lengths", nargs="+", type=int, required=True)
    p.add_argument("--alpha", type=_rational, required=True)
    p.add_argument("--u", type=_rational, required=True)
    p.add_argument("--v", nargs="*", type=_rational, default=[Fraction(1)])
    p.add_argument("--cumulant", action="store_true",
                   help="joint cumulant of shape functionals instead")
    p.add_argument("--d", type=int, default=None,
                   help="condition on fixed size d (falling-factorial formula)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("clt", help="limiting mean shift / covariance")
    p.add_argument("--mean", type=int, metavar="ELL")
    p.add_argument("--cov", nargs=2, type=int, metavar=("K", "L"))
    p.add_argument("--g", type=_rational, default=Fraction(0))
    p.add_argument("--gp", type=_rational, default=Fraction(0))
    p.add_argument("--v", nargs="*", type=_rational, default=[Fraction(1)])
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("afp", help="second-order formulas with character data")
    p.add_argument("--mean", type=int, metavar="ELL")
    p.add_argument("--cov", nargs=2, type=int, metavar=("K", "L"))
    p.add_argument("--g", type=_rational, default=Fraction(0))
    p.add_argument("--gp", type=_rational, default=Fraction(0))
    p.add_argument("--v", nargs="*", type=_rational, default=[Fraction(1)])
    p.add_argument("--vp", nargs="*", type=_rational, default=[])
    p.add_argument("--vkl", default="{}",
                   help='JSON like {"2,2": "1/3"} for the second-cumulant table')
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("sample", help="draw random diagrams")
    p.add_argument("--ensemble", default="plancherel")
    p.add_argument("--alpha", type=_rational, default=Fraction(1))
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--K", type=int, default=None)
    p.add_argument("--u", type=_rational, default=None)
    p.add_argument("--v", nargs="*", type=_rational, default=None)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--method", choices=("exact", "growth"), default="exact")
    p.add_argument("--backend", choices=("numba", "numpy"), default=None)
    p.add_argument("--out", default=None, help="write samples as JSONL")
    p.add_argument("--profile-csv", default=None,
                   help="write the mean scaled profile as CSV")
    p.add_argument("--svg", default=None, help="render the mean profile")

    p = sub.add_parser("limit-shape", help="staircase limit shape")
    p.add_argument("--g", type=_rational, required=True)
    p.add_argument("--n-steps", type=int, default=8)
    p.add_argument("--csv", default=None, help="write (x, omega) samples")
    p.add_argument("--json-out", default=None, help="write corner coordinates")
    p.add_argument("--svg", default=None, help="render the staircase")

    p = sub.add_parser("bessel-zeros", help="order-zeros of the edge function")
    p.add_argument("--g", type=_rational, required=True)
    p.add_argument("-n", type=int, default=3)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", nargs="+", default=["all"])
    p.add_argument("--d", type=int, default=None,
                   help="override the size cap where a suite accepts one")
    p.add_argument("--out", default=None,
                   help="directory for emitted overlays")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("render", help="render a partition profile as SVG")
    p.add_argument("--partition", required=True,
                   help='comma-separated parts, e.g. "4,3,1,1"')
    p.add_argument("--w", type=_rational, default=Fraction(1))
    p.add_argument("--h", type=_rational, default=Fraction(1))
    p.add_argument("--svg", required=True)
    return top


def _emit(args, human: str, payload):
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _vseq_or(args, default):
    if getattr(args, "plancherel", False):
        return [Fraction(1)]
    return args.v if args.v is not None else default


def cmd_moments(args):
    from .paths import limit_moment, limit_moment_poly

    if args.symbolic:
        poly = limit_moment_poly(args.ell)
        _emit(args, repr(poly), poly.to_json())
        return 0
    v = _vseq_or(args, [Fraction(1)])
    val = limit_moment(args.ell, args.g, v)
    _emit(args, format_rational(val), {"value": format_rational(val)})
    return 0


def cmd_finite_expectation(args):
    from .paths import (depoissonized_expectation, finite_cumulant_s,
                        finite_expectation)

    if args.d is not None:
        val = depoissonized_expectation(args.lengths, args.d, args.alpha,
                                        args.u, args.v)
    elif args.cumulant:
        val = finite_cumulant_s(args.lengths, args.alpha, args.u, args.v)
    else:
        val = finite_expectation(args.lengths, args.alpha, args.u, args.v)
    _emit(args, format_rational(val), {"value": format_rational(val)})
    return 0


def cmd_clt(args):
    from .paths import clt_cov, clt_mean

    if (args.mean is None) == (args.cov is None):
        print("choose exactly one of --mean/--cov", file=sys.stderr)
        return 2
    if args.mean is not None:
        val = clt_mean(args.mean, args.g, args.gp, args.v)
    else:
        val = clt_cov(args.cov[0], args.cov[1], args.g, args.v)
    _emit(args, format_rational(val), {"value": format_rational(val)})
    return 0


def cmd_afp(args):
    from .paths import afp_cov, afp_mean

    if (args.mean is None) == (args.cov is None):
        print("choose exactly one of --mean/--cov", file=sys.stderr)
        return 2
    if args.mean is not None:
        val = afp_mean(args.mean, args.g, args.gp, args.v, args.vp)
    else:
        table = {}
        for key, txt in json.loads(args.vkl).items():
            k, l = (int(x) for x in key.split(","))
            table[(k, l)] = parse_rational(txt)
        val = afp_cov(args.cov[0], args.cov[1], args.g, args.v, table)
    _emit(args, format_rational(val), {"value": format_rational(val)})
    return 0


def cmd_sample(args):
    from .sampler import mean_profile, run_sampler
    from .serialize import profile_csv, profiles_svg, samples_to_jsonl

    cfg = {"variant": args.ensemble, "alpha": format_rational(args.alpha),
           "d": args.d}
    if args.K is not None:
        cfg["K"] = args.K
    if args.u is not None:
        cfg["u"] = format_rational(args.u)
    if args.v is not None:
        cfg["v"] = [format_rational(x) for x in args.v]
    run = run_sampler(cfg, seed=args.seed, count=args.n, method=args.method,
                      backend=args.backend)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(samples_to_jsonl(run))
    if args.profile_csv or args.svg:
        span = 2.2 * max(float(args.alpha) ** 0.5, float(args.alpha) ** -0.5)
        grid = [-span + 2 * span * i / 400 for i in range(401)]
        pts = mean_profile(run, args.alpha, args.d, grid)
        if args.profile_csv:
            with open(args.profile_csv, "w") as fh:
                fh.write(profile_csv(pts))
        if args.svg:
            with open(args.svg, "w") as fh:
                fh.write(profiles_svg([(pts, "#cc3333")]))
    if not args.out:
        for lam in run.collected:
            print(json.dumps(lam.to_json()))
    return 0


def cmd_limit_shape(args):
    from .limitshape import plancherel_limit_shape
    from .serialize import corners_json, profile_csv, profiles_svg, shape_points

    shape = plancherel_limit_shape(args.g, n_steps=args.n_steps)
    pts = shape_points(shape)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(profile_csv(pts))
    if args.json_out:
        with open(args.json_out, "w") as fh:
            fh.write(corners_json(shape) + "\n")
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(profiles_svg([(pts, "#3355cc")]))
    if not (args.csv or args.json_out or args.svg):
        print(corners_json(shape))
    return 0


def cmd_bessel_zeros(args):
    from .limitshape import bessel_order_zeros

    zl = bessel_order_zeros(args.g, args.n, tol=args.tol)
    zeros = [float(z) for z in zl.zeros]
    edges = [-zeros[i] - (i + 1) * float(args.g) for i in range(len(zeros))]
    if args.json:
        print(json.dumps({"zeros": zeros, "edges": edges}))
    else:
        for i, (z, e) in enumerate(zip(zeros, edges), start=1):
            print(f"l_{i} = {z:+.6f}   edge_{i} = {e:+.6f}")
    return 0


def cmd_verify(args):
    from .verify import SUITES, run_suites

    names = sorted(SUITES) if args.suite == ["all"] else args.suite
    for name in names:
        if name not in SUITES:
            print(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}",
                  file=sys.stderr)
            return 2
    kwargs = {}
    if args.d is not None:
        for name in names:
            if name in ("normalization",):
                kwargs[name] = {"dmax": args.d}
    if args.out is not None and "lln-low-temperature" in names:
        kwargs["lln-low-temperature"] = {"out_dir": args.out}
    results = run_suites(names, **kwargs)
    if args.json:
        print(json.dumps([{"suite": n, "passed": p, "detail": d,
                           "seconds": round(s, 3)}
                          for n, p, d, s in results]))
    failures = [n for n, p, _, _ in results if not p]
    if failures:
        print(f"first failing suite: {failures[0]}", file=sys.stderr)
        return 1
    return 0


def cmd_render(args):
    from .diagrams import AnisotropicDiagram
    from .partitions import Partition
    from .serialize import profiles_svg, shape_points

    parts = [int(x) for x in args.partition.split(",") if x.strip()]
    shape = AnisotropicDiagram(Partition(parts), args.w, args.h).profile()
    with open(args.svg, "w") as fh:
        fh.write(profiles_svg([(shape_points(shape), "#cc7722")]))
    return 0


_COMMANDS = {
    "moments": cmd_moments,
    "finite-expectation": cmd_finite_expectation,
    "clt": cmd_clt,
    "afp": cmd_afp,
    "sample": cmd_sample,
    "limit-shape": cmd_limit_shape,
    "bessel-zeros": cmd_bessel_zeros,
    "verify": cmd_verify,
    "render": cmd_render,
}


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(argv)
    try:
        defaults = _load_config(args.config)
        subparser = _SUBPARSERS[args.command]
        explicit = set()
        for action in subparser._actions:
            if any(opt in argv for opt in action.option_strings):
                explicit.add(action.dest)
        for key, val in defaults.items():
            attr = key.replace("-", "_")
            # config fills in flags the user did not pass explicitly
            if hasattr(args, attr) and attr not in explicit:
                if isinstance(getattr(args, attr, None), Fraction) or attr in (
                        "alpha", "g", "gp", "u"):
                    val = parse_rational(val)
                setattr(args, attr, val)
        return _COMMANDS[args.command](args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
