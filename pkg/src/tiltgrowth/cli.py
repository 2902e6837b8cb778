"""Command-line front end: sequences, verification suites and plot-ready CSV.

Exit codes: 0 success, 1 property violation, 2 usage, 3 resource limit.
"""

import argparse
import json
import math
import sys

import mpmath

from . import asymptotics, fourier, fractal, verify
from .precision import default_dps, workdps
from .sequences import INF, InternalConsistencyError, PropertyViolation, b_sequence, is_prime, l_sequence

EXIT_OK, EXIT_PROPERTY, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3
SAFE_INT = 2**53
SEQ_KINDS = ("b", "l", "cantor", "dimL")


class UsageError(Exception):
    pass


def parse_p(text):
    if text.strip().lower() in ("inf", "infinity", "oo"):
        return INF
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"p must be a prime or 'inf', got {text!r}")


def parse_int_list(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def parse_real_list(text):
    try:
        return [mpmath.mpf(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated reals, got {text!r}")


def parse_nu(text):
    if text == "both":
        return text
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"nu must be an integer or 'both', got {text!r}")


def _need_prime(p, allow_inf=False):
    if p == INF and allow_inf:
        return
    if not is_prime(p):
        raise UsageError(f"p must be a prime{' or inf' if allow_inf else ''}, got {p}")


class Out:
    """CSV writer with '\\n' line endings and fixed-digit number rendering."""

    def __init__(self, stream, digits):
        self.stream = stream
        self.digits = digits

    def fmt(self, x):
        if isinstance(x, (int, str)):
            return str(x)
        if isinstance(x, mpmath.mpc):
            raise TypeError("split complex values into parts")
        return mpmath.nstr(mpmath.mpf(x), self.digits, strip_zeros=False)

    def row(self, *cells):
        self.stream.write(",".join(self.fmt(c) for c in cells) + "\n")


def _p_label(p):
    return "inf" if p == INF else str(p)


def cmd_seq(args, out):
    p = args.p
    if args.kind in ("b", "l"):
        _need_prime(p, allow_inf=True)
        seq = (b_sequence if args.kind == "b" else l_sequence)(p, args.n).values
    else:
        if p == INF or p < 2:
            raise UsageError(f"{args.kind} needs an integer base p >= 2")
        if args.kind == "cantor":
            seq = fractal.cantor_seq(p, args.n).values
        else:
            seq = [fractal.dim_simple(p, n) for n in range(args.n + 1)]
    if args.format == "json":
        vals = [v if abs(v) < SAFE_INT else str(v) for v in seq]
        doc = {"schema": 1, "p": _p_label(p) if p == INF else p, "kind": args.kind, "values": vals}
        out.stream.write(json.dumps(doc) + "\n")
    else:
        out.row("n", "value")
        for n, v in enumerate(seq):
            out.row(n, v)
    return EXIT_OK


def cmd_verify(args, out):
    _need_prime(args.p, allow_inf=True)
    results = verify.run_all(args.p, args.n, args.oracle)
    for r in results:
        out.stream.write(r.line() + "\n")
    failed = [r for r in results if not r.ok]
    if failed:
        first = failed[0]
        sys.stderr.write(f"counterexample: {first.name} at n={first.counterexample[0]} values={first.counterexample[1]}\n")
        return EXIT_PROPERTY
    return EXIT_OK


def cmd_asympt(args, out):
    _need_prime(args.p)
    if args.quadruple:
        if args.p != 2:
            raise UsageError("--quadruple is defined for p = 2 only")
        n_max = args.n if args.n is not None else 250
        rows = asymptotics.quadruple_ratio(n_max)
        out.row("n", "quadruple_ratio")
        for n, r in rows:
            out.row(n, r)
        tail = [r for n, r in rows if n >= max(1, (3 * n_max) // 5)]
        dev = max(abs(r - mpmath.mpf(3) / 8) for r in tail)
        sys.stderr.write(f"tail n >= {(3 * n_max) // 5}: max |ratio - 3/8| = {mpmath.nstr(dev, 6)}\n")
        return EXIT_OK
    n_max = args.n if args.n is not None else 600
    b = b_sequence(args.p, n_max + 2).values
    prof = asymptotics.ratio_profile(args.p, n_max, args.parity, b=b)
    gap = args.gap and args.p == 2
    out.row("n", "ratio", *(["d_n"] if gap else []))
    for n, r in prof.rows:
        extra = [mpmath.mpf(1) - mpmath.mpf(b[n + 2]) / (4 * b[n])] if gap else []
        out.row(n, r, *extra)
    lo, alo, hi, ahi = prof.summary
    inside = lo >= 0.25 and hi <= 1.0
    sys.stderr.write(
        f"window [{prof.window[0]}, {prof.window[1]}] min {mpmath.nstr(lo, 8)} at n={alo}, "
        f"max {mpmath.nstr(hi, 8)} at n={ahi}; envelope (0.25, 1.0): {'inside' if inside else 'outside'}\n")
    return EXIT_OK


def cmd_genfun(args, out):
    _need_prime(args.p)
    ws = args.w if args.w is not None else [mpmath.mpf(i) / 10 for i in range(1, 10)]
    for w in ws:
        if not 0 < w < 1:
            raise UsageError(f"w must lie in (0, 1), got {w}")
    out.row("w", "F", "residual", "F0")
    for w in ws:
        F, _ = asymptotics.eval_F(args.p, w, args.K)
        res = asymptotics.functional_eq_residual(args.p, w, args.K)
        out.row(w, F, res, asymptotics.eval_F0(args.p, w))
    return EXIT_OK


def cmd_fourier(args, out):
    _need_prime(args.p)
    N = args.N if args.N is not None else fourier.default_N(args.p)
    nus = [2 * args.p, args.p] if args.nu == "both" else [args.nu if args.nu is not None else 2 * args.p]
    per_nu = [fourier.fourier_coefficients(args.p, args.n, N, nu) for nu in nus]
    header = ["n", "re_L", "im_L", "abs_L", "S"]
    for nu in nus:
        header += [f"re_h_nu{nu}", f"im_h_nu{nu}"]
    if args.ratio:
        header.append("S_over_3N")
    out.row(*header)
    for i, n in enumerate(args.n):
        r = per_nu[0][i]
        cells = [n, mpmath.re(r.L_n), mpmath.im(r.L_n), abs(r.L_n), r.S_magnitude]
        for res in per_nu:
            cells += [mpmath.re(res[i].h_n), mpmath.im(res[i].h_n)]
        if args.ratio:
            cells.append(r.S_magnitude / mpmath.mpf(3) ** N)
        out.row(*cells)
    return EXIT_OK


def cmd_sierpinski(args, out):
    if args.p == INF or args.p < 2:
        raise UsageError("sierpinski needs an integer p >= 2")
    out.row("row", "col", "value")
    for n, row in enumerate(fractal.pascal_mod_grid(args.p, args.rows)):
        for k, v in enumerate(row):
            out.row(n, k, v)
    sys.stderr.write(f"tau = {mpmath.nstr(fractal.sierpinski_tau(args.p), out.digits)}\n")
    return EXIT_OK


def cmd_staircase(args, out):
    if args.p == INF or args.p < 3:
        raise UsageError("the Cesaro staircase needs p >= 3")
    st = fractal.cesaro_staircase(args.p, args.n)
    out.row("n", "C_n", "running_min", "running_max")
    for n in range(1, args.n + 1):
        out.row(n, st.values[n - 1], st.running_min[n - 1], st.running_max[n - 1])
    return EXIT_OK


def _global_options(parser, suppress):
    kw = {"default": argparse.SUPPRESS} if suppress else {}
    parser.add_argument("--precision", type=int, help="working decimal digits (default 60)",
                        **(kw or {"default": None}))
    parser.add_argument("--digits", type=int, help="significant digits printed for reals",
                        **(kw or {"default": 20}))


def build_parser():
    ap = argparse.ArgumentParser(prog="tiltgrowth", description=__doc__.splitlines()[0])
    _global_options(ap, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("seq", parents=[common], help="b_n, l_n, Cantor or dim L_n values")
    s.add_argument("kind", choices=SEQ_KINDS)
    s.add_argument("--p", type=parse_p, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.set_defaults(func=cmd_seq)

    s = sub.add_parser("verify", parents=[common], help="run every property check")
    s.add_argument("--p", type=parse_p, required=True)
    s.add_argument("--n", type=int, default=400)
    s.add_argument("--oracle", type=int, default=60)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("asympt", parents=[common], help="ratio profile b_n / (n^t_p 2^n)")
    s.add_argument("--p", type=parse_p, required=True)
    s.add_argument("--n", type=int, default=None)
    s.add_argument("--parity", choices=asymptotics.PARITIES, default="all")
    s.add_argument("--gap", action="store_true", help="add the d_n column (p = 2)")
    s.add_argument("--quadruple", action="store_true", help="a'_(4n) / a'_n instead (p = 2)")
    s.set_defaults(func=cmd_asympt)

    s = sub.add_parser("genfun", parents=[common], help="F(w), Mahler residual and F_0(w)")
    s.add_argument("--p", type=parse_p, required=True)
    s.add_argument("--w", type=parse_real_list, default=None)
    s.add_argument("--K", type=int, default=None)
    s.set_defaults(func=cmd_genfun)

    s = sub.add_parser("fourier", parents=[common], help="Fourier coefficients L_n and h_n")
    s.add_argument("--p", type=parse_p, required=True)
    s.add_argument("--n", type=parse_int_list, default=[0, 1, 2, 3])
    s.add_argument("--N", type=int, default=None)
    s.add_argument("--nu", type=parse_nu, default=None)
    s.add_argument("--ratio", action="store_true", help="add S / 3^N")
    s.set_defaults(func=cmd_fourier)

    s = sub.add_parser("sierpinski", parents=[common], help="Pascal's triangle mod p as a 0/1 grid")
    s.add_argument("--p", type=parse_p, required=True)
    s.add_argument("--rows", type=int, default=27)
    s.set_defaults(func=cmd_sierpinski)

    s = sub.add_parser("staircase", parents=[common], help="Cesaro staircase of the Cantor sequence")
    s.add_argument("--p", type=parse_p, default=3)
    s.add_argument("--n", type=int, default=243)
    s.set_defaults(func=cmd_staircase)
    return ap


def main(argv=None, stdout=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    stream = stdout if stdout is not None else sys.stdout
    try:
        dps = args.precision if args.precision is not None else default_dps()
        if dps < 15:
            raise UsageError("--precision must be at least 15")
        n = getattr(args, "n", None)
        if isinstance(n, int) and n < 0:
            raise UsageError("--n must be >= 0")
        out = Out(stream, min(args.digits, dps))
        with workdps(dps):
            return args.func(args, out)
    except (UsageError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except fourier.ResourceLimitError as exc:
        sys.stderr.write(f"resource limit: {exc}\n")
        return EXIT_RESOURCE
    except (PropertyViolation, InternalConsistencyError) as exc:
        sys.stderr.write(f"property violation: {exc}\n")
        return EXIT_PROPERTY


if __name__ == "__main__":
    sys.exit(main())
