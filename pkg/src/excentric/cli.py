"""Command-line front end.

    excentric eval  --fn cex --s 0.5 --theta 1.5707963
    excentric curve --kind booth --s 2 --format svg -o booth.svg
    excentric mech  --kind stroke --R 1 --e 0.5 --theta 0
    excentric osc   --s 1 --omega 1 --dt 0.001

Exit status: 0 success, 1 usage error, 2 domain error.
"""
from __future__ import annotations

import argparse
import math
import sys

from . import core, curves, io, mechanisms
from .core import EvalError, ExCenter

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2

THETA_FNS = {
    "delta": lambda t, ex, d: core.delta(t, ex),
    "rex": core.rex,
    "aex": core.aex,
    "cex": core.cex,
    "sex": core.sex,
    "dex": core.dex,
    "tex": core.tex,
    "cel": lambda t, ex, d: core.cel_sel(t, ex, d)[0],
    "sel": lambda t, ex, d: core.cel_sel(t, ex, d)[1],
    "wpoint": core.w_point,
    "wvelocity": core.w_velocity,
}
ALPHA_FNS = {
    "Rex": core.Rex,
    "Aex": core.Aex,
    "Cex": core.Cex,
    "Sex": core.Sex,
    "Dex": core.Dex,
    "Cel": lambda a, ex, d: core.Cel_Sel(a, ex, d)[0],
    "Sel": lambda a, ex, d: core.Cel_Sel(a, ex, d)[1],
}
PLAIN_FNS = {
    "rad": lambda a: core.rad_der(a)[0],
    "der": lambda a: core.rad_der(a)[1],
}
CURVES = ("booth", "excircle", "quadrilobe", "elevated", "exotic")
MECHS = ("stroke", "transfer", "velocity", "sec")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common(p, with_det=True):
    p.add_argument("--s", type=float, default=0.0, help="numerical ex-centricity e/R")
    p.add_argument("--eps", type=float, default=0.0, help="polar angle of the ex-center")
    if with_det:
        p.add_argument("--det", default="1", help="determination: 1 (first) or 2 (second)")
    p.add_argument("--deg", action="store_true", help="angles given in degrees")
    p.add_argument("-o", "--output", help="output file (default: standard output)")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="excentric", description="Ex-centric circular functions, curves and mechanisms.")
    sub = ap.add_subparsers(dest="subcommand", parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate one function")
    p.add_argument("--fn", required=True, choices=sorted([*THETA_FNS, *ALPHA_FNS, *PLAIN_FNS]))
    p.add_argument("--theta", type=float)
    p.add_argument("--alpha", type=float)
    p.add_argument("--format", choices=("plain",), default="plain")
    _common(p)

    p = sub.add_parser("curve", help="sample a curve family")
    p.add_argument("--kind", required=True, choices=CURVES)
    p.add_argument("--R", type=float, default=1.0)
    p.add_argument("--n", type=int, default=720)
    p.add_argument("--c", type=float, default=0.0, help="exotic: distance of the circle centre")
    p.add_argument("--gamma", type=float, default=0.0, help="exotic: polar angle of the circle centre")
    p.add_argument("--format", choices=("csv", "svg"), default="csv")
    _common(p)

    p = sub.add_parser("mech", help="mechanism transfer functions")
    p.add_argument("--kind", required=True, choices=MECHS)
    p.add_argument("--R", type=float, default=1.0)
    p.add_argument("--e", type=float, help="stroke: real ex-centricity (default s*R)")
    p.add_argument("--theta", type=float, help="single angle / displacement; omit to sweep")
    p.add_argument("--n", type=int, default=720)
    p.add_argument("--format", choices=("csv", "plain"), default=None)
    _common(p)

    p = sub.add_parser("osc", help="simulate the ex-centric oscillator")
    p.add_argument("--omega", dest="Omega", type=float, default=1.0, help="generator angular speed")
    p.add_argument("--R", type=float, default=1.0)
    p.add_argument("--t-end", type=float)
    p.add_argument("--dt", type=float)
    p.add_argument("--theta0", type=float, default=0.0)
    p.add_argument("--format", choices=("csv",), default="csv")
    _common(p, with_det=False)
    return ap


def _angle(args, v):
    return math.radians(v) if (v is not None and args.deg) else v


def _fmt_value(v) -> str:
    if isinstance(v, tuple):
        return ",".join(io.fmt17(float(c)) for c in v)
    return io.fmt17(float(v))


def _do_eval(args) -> str:
    ex = ExCenter(args.s, _angle(args, args.eps))
    det = core.Determination.coerce(args.det)
    if args.fn in THETA_FNS:
        if args.theta is None:
            raise UsageError(f"--fn {args.fn} needs --theta")
        v = THETA_FNS[args.fn](_angle(args, args.theta), ex, det)
    elif args.fn in ALPHA_FNS:
        if args.alpha is None:
            raise UsageError(f"--fn {args.fn} needs --alpha")
        v = ALPHA_FNS[args.fn](_angle(args, args.alpha), ex, det)
    else:
        a = args.theta if args.theta is not None else args.alpha
        if a is None:
            raise UsageError(f"--fn {args.fn} needs --theta or --alpha")
        v = PLAIN_FNS[args.fn](_angle(args, a))
    return _fmt_value(v) + "\n"


def _do_curve(args) -> str:
    ex = ExCenter(args.s, _angle(args, args.eps))
    det = core.Determination.coerce(args.det)
    if args.n < 3:
        raise UsageError(f"--n must be at least 3, got {args.n}")
    if not args.R > 0:
        raise UsageError(f"--R must be positive, got {args.R}")
    if args.kind == "booth":
        poly = curves.sample_booth(ex, args.R, args.n)
    elif args.kind == "excircle":
        poly = curves.sample_excircle(ex, args.R, args.n)
    elif args.kind == "quadrilobe":
        poly = curves.sample_quadrilobe(args.s, args.R, args.n)
    elif args.kind == "elevated":
        poly = curves.sample_elevated(ex, det, args.n, args.R)
    else:
        cfg = curves.ExoticConfig.from_polar(args.s, ex.eps, args.c, _angle(args, args.gamma))
        poly = curves.sample_exotic(cfg, det, args.n)
    return io.polyline_svg(poly) if args.format == "svg" else io.polyline_csv(poly)


def _do_mech(args) -> str:
    ex = ExCenter(args.s, _angle(args, args.eps))
    det = core.Determination.coerce(args.det)
    e = args.s * args.R if args.e is None else args.e
    funcs = {
        "stroke": lambda t: mechanisms.stroke(t, args.R, e),
        "transfer": lambda t: mechanisms.position_transfer(t, ex, det),
        "velocity": lambda t: mechanisms.velocity_transfer(t, ex, det),
        "sec": lambda t: mechanisms.sec_force(t, ex, det),
    }
    f = funcs[args.kind]
    if args.theta is not None and args.format != "csv":
        return _fmt_value(f(_angle(args, args.theta))) + "\n"
    thetas = [_angle(args, args.theta)] if args.theta is not None else curves.grid(args.n)
    rows = [{"theta": t, "value": f(t)} for t in thetas]
    return io.series_csv(rows, header=("theta", "value"))


def _do_osc(args) -> str:
    ex = ExCenter(args.s, _angle(args, args.eps))
    samples = mechanisms.simulate_oscillator(
        ex, args.Omega, args.R, args.t_end, args.dt, _angle(args, args.theta0)
    )
    return io.series_csv(samples)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = build_parser().parse_args(argv)
        if args.subcommand is None:
            raise UsageError("a subcommand is required: eval, curve, mech or osc")
        handler = {"eval": _do_eval, "curve": _do_curve, "mech": _do_mech, "osc": _do_osc}
        text = handler[args.subcommand](args)
    except UsageError as exc:
        print(f"excentric: usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except EvalError as exc:
        print(f"excentric: {exc.kind} error: {exc}", file=stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"excentric: invalid parameter: {exc}", file=stderr)
        return EXIT_USAGE
    if args.output:
        io.write_atomic(args.output, text)
    else:
        stdout.write(text)
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
