"""Command-line interface: ``zetalab <subcommand> ...``.

Exit status is 0 on success, 1 on a usage or domain error and 2 when a
numerical method fails to reach its tolerance.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import stochastic
from .claims import CLAIM_IDS, Config, claims_document, critical_zero_scan, dumps, list_claims
from .claims.series import MASLANKA_VARIANTS, maslanka_series, refinement_series
from .continuation import zeta_via_theta_quotient
from .errors import DomainError, ParseError, ZetaLabError
from .functions import Gaussian, PeakTimesGaussian
from .levy import Divergent, levy_fractional_moment, levy_moment_mc
from .numerics import DEFAULT_TOL, SEED_MAX
from .reference import zeta_reference_result
from .transforms import make_poisson_element, psf_sides

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2


def parse_complex(text: str) -> complex:
    """Parse ``a``, ``a+bi``, ``a-bi`` or ``bi`` with decimal ``a`` and ``b``.

    Whitespace is ignored. Errors report the 0-based column in ``text``.
    """
    cols = [i for i, ch in enumerate(text) if not ch.isspace()]
    s = "".join(text[i] for i in cols)

    def col(k: int) -> int:
        return cols[k] if k < len(cols) else len(text)

    def number(k: int, allow_empty: bool) -> tuple[float | None, int]:
        start = k
        if k < len(s) and s[k] in "+-":
            k += 1
        digits = k
        while k < len(s) and s[k].isdigit():
            k += 1
        if k < len(s) and s[k] == ".":
            k += 1
            while k < len(s) and s[k].isdigit():
                k += 1
        mantissa = s[digits:k].replace(".", "")
        if not mantissa:
            if allow_empty and (k == digits) and k < len(s) and s[k] == "i":
                return (-1.0 if s[start:digits] == "-" else 1.0), k
            raise ParseError("expected a decimal number", col(digits))
        if k < len(s) and s[k] in "eE":
            e = k + 1
            if e < len(s) and s[e] in "+-":
                e += 1
            if e < len(s) and s[e].isdigit():
                k = e
                while k < len(s) and s[k].isdigit():
                    k += 1
        return float(s[start:k]), k

    if not s:
        raise ParseError("empty input", 0)
    first, k = number(0, allow_empty=True)
    if k == len(s):
        return complex(first, 0.0)
    if s[k] == "i":
        if k + 1 != len(s):
            raise ParseError("unexpected trailing input", col(k + 1))
        return complex(0.0, first)
    if s[k] not in "+-":
        raise ParseError(f"unexpected character {s[k]!r}", col(k))
    second, k = number(k, allow_empty=True)
    if k >= len(s) or s[k] != "i":
        raise ParseError("expected 'i' after the imaginary part", col(k))
    if k + 1 != len(s):
        raise ParseError("unexpected trailing input", col(k + 1))
    return complex(first, second)


def _complex_arg(text: str) -> complex:
    try:
        return parse_complex(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _seed_arg(text: str) -> int:
    value = int(text)
    if not 0 <= value < SEED_MAX:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def fmt(x) -> str:
    """10 significant digits; complex values as ``a+bi``."""
    z = complex(x)
    if z.imag == 0.0:
        return f"{z.real:.10g}"
    sign = "-" if z.imag < 0 else "+"
    return f"{z.real:.10g}{sign}{abs(z.imag):.10g}i"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- subcommands -------------------------------------------------------------

def _cmd_psf(args) -> int:
    if args.function == "gaussian":
        c = Gaussian()
    else:
        c = make_poisson_element(PeakTimesGaussian(), normalize=True)
    print(f"{'x':>12} {'lhs':>18} {'rhs':>18} {'residual':>12}")
    for x in args.x:
        sides = psf_sides(c, x, args.tol)
        print(f"{fmt(x):>12} {fmt(sides.lhs.value):>18} {fmt(sides.rhs.value):>18} "
              f"{sides.residual:12.3e}")
    return EXIT_OK


def _cmd_zeta(args) -> int:
    s = args.s
    if args.method == "eta":
        r = zeta_reference_result(s)
        value, err, note = r.value, r.err_bound, ""
    elif args.method == "continuation":
        r = zeta_via_theta_quotient(s, args.tol)
        value, err, note = r.value, r.err_bound, ""
    elif args.method == "maslanka":
        r = maslanka_series(s, args.terms, args.precision_bits, args.variant)
        value, err, note = r.value, r.err_bound, r.note
        if not r.converges:
            print(f"zeta({fmt(s)}) via maslanka: {note}", file=sys.stderr)
            return EXIT_NUMERIC
    else:
        r = refinement_series(s, args.precision_bits)
        value = 1.0 / r.value
        err = r.err_bound / abs(r.value) ** 2
        note = "reciprocal of the refinement series; compare with --method eta"
    print(f"zeta({fmt(s)}) = {fmt(value)}  (error bound {err:.2e}, method {args.method})")
    if note:
        print(f"note: {note}")
    return EXIT_OK


def _cmd_levy(args) -> int:
    est = levy_moment_mc(args.u, args.y0, args.samples, args.seed)
    closed = levy_fractional_moment(args.u, args.y0)
    print(f"E[L**{fmt(args.u)}], y0 = {fmt(args.y0)}, {args.samples} samples, seed {args.seed}")
    print(f"sample mean     {fmt(est.mean)}")
    print(f"standard error  {fmt(est.std_error)}")
    if isinstance(closed, Divergent):
        print(f"closed form     divergent ({closed.reason})")
    else:
        print(f"closed form     {fmt(closed)}")
    print(f"divergence_flag {'true' if est.divergence_flag else 'false'}")
    for label, n, mean, se in est.diagnostics:
        print(f"  {label:<12} {n:>9d} draws {fmt(mean):>18} +- {fmt(se)}")
    return EXIT_OK


def _cmd_wiener(args) -> int:
    est = stochastic.wr_moment(args.t, args.paths, args.seed, args.workers)
    print(f"int c({fmt(args.t)}) dr(c), {args.paths} paths, seed {args.seed}")
    print(f"estimate               {fmt(est.mean)} +- {fmt(est.std_error)}")
    print(f"closed form (weights 2**-n)        {fmt(stochastic.wr_moment_closed_form(args.t))}")
    print(f"closed form (weights doubled)      {fmt(stochastic.wr_moment_closed_form(args.t, 'unit'))}")
    if args.csv:
        n, path = stochastic.sample_wr_paths(1, args.seed)[0]
        path.write_csv(args.csv)
        print(f"wrote segment n = {n} path ({path.values.size} points) to {args.csv}")
    return EXIT_OK


def _cmd_claims(args) -> int:
    if args.list:
        for cid, anchor in list_claims():
            print(f"{cid:24s} {anchor}")
        return EXIT_OK
    if args.all == bool(args.id):
        raise DomainError("give either --all or at least one --id")
    if args.json is None:
        raise DomainError("--json is required")
    config = Config(args.seed, args.precision_bits, args.tol)
    document = claims_document(None if args.all else args.id, config, args.workers)
    Path(args.json).write_text(dumps(document))
    for report in document["claims"]:
        subs = ", ".join(f"{k}={v}" for k, v in report["sub_verdicts"].items())
        print(f"{report['claim']:24s} {report['verdict']:12s} [{subs}]")
    print(f"wrote {args.json}")
    return EXIT_OK


def _cmd_zeros(args) -> int:
    zeros = critical_zero_scan(args.t_from, args.t_to, args.step)
    print(f"{len(zeros)} sign change(s) of zeta*(1/2+it) on [{fmt(args.t_from)}, {fmt(args.t_to)}]")
    for t in zeros:
        print(f"  t = {t:.10f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zetalab", description="Numerical checks of zeta identities.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("psf", help="Poisson summation formula",
                       description="Check the Poisson summation formula "
                                   "theta(1/x)/x + c(0)/(2x) = c(0)/2 + theta(x) for a Fourier-fixed c.")
    p.add_argument("--function", choices=("gaussian", "peakgauss"), default="gaussian",
                   help="G(x) = exp(-pi x^2), or the normalised cylinder element built from p G")
    p.add_argument("--x", type=float, nargs="+", required=True)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.set_defaults(func=_cmd_psf)

    p = sub.add_parser("zeta", help="Riemann zeta by several representations",
                       description="Evaluate zeta(s) through the eta series, the theta-integral "
                                   "continuation M(G) zeta = 1/(2s(s-1)) + I(s), the Maslanka "
                                   "series or the refinement series for 1/zeta.")
    p.add_argument("--s", type=_complex_arg, required=True, help="complex argument, e.g. 0.5+14.1347i")
    p.add_argument("--method", choices=("eta", "continuation", "maslanka", "refinement"), default="eta")
    p.add_argument("--variant", choices=tuple(MASLANKA_VARIANTS), default="literature",
                   help="coefficient form for --method maslanka")
    p.add_argument("--terms", type=int, default=200, help="terms for --method maslanka")
    p.add_argument("--precision-bits", type=int, default=128)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.set_defaults(func=_cmd_zeta)

    p = sub.add_parser("levy", help="fractional moments of the 1/2-stable law",
                       description="Monte Carlo E[L^u] for the 1/2-stable Levy law against the closed "
                                   "form y0^(2u) 2^-u Gamma(1/2-u)/sqrt(pi), finite iff u < 1/2.")
    p.add_argument("--u", type=float, required=True)
    p.add_argument("--y0", type=float, default=1.0)
    p.add_argument("--samples", type=int, default=1_000_000)
    p.add_argument("--seed", type=_seed_arg, default=0)
    p.set_defaults(func=_cmd_levy)

    p = sub.add_parser("wiener", help="moments of the Wiener-Riemann measure",
                       description="Monte Carlo int c(t) dr(c) for the Wiener-Riemann measure "
                                   "r = sum_n 2^-n (segment laws of G (B + p)).")
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--paths", type=int, default=100_000)
    p.add_argument("--seed", type=_seed_arg, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--csv", help="write the first sampled path as t,value rows")
    p.set_defaults(func=_cmd_wiener)

    p = sub.add_parser("claims", help="run the claims harness",
                       description="Evaluate registered identities (Poisson summation, Muntz "
                                   "relations, continuation, functional equations, series) and "
                                   "write a JSON report with three-valued verdicts.")
    p.add_argument("--id", action="append", choices=CLAIM_IDS, metavar="CLAIM_ID", default=[])
    p.add_argument("--all", action="store_true")
    p.add_argument("--list", action="store_true", help="print the registry and exit")
    p.add_argument("--json", help="output path for the report")
    p.add_argument("--precision-bits", type=int, default=128)
    p.add_argument("--seed", type=_seed_arg, default=0)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_claims)

    p = sub.add_parser("zeros", help="scan zeta* on the critical line",
                       description="Find sign changes of the real function zeta*(1/2+it) "
                                   "and refine them by bisection to 1e-6.")
    p.add_argument("--from", dest="t_from", type=float, default=0.0)
    p.add_argument("--to", dest="t_to", type=float, required=True)
    p.add_argument("--step", type=float, default=0.1)
    p.set_defaults(func=_cmd_zeros)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"zetalab {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ZetaLabError as exc:
        print(f"zetalab {args.command}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
