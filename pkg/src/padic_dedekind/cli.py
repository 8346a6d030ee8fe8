"""Command-line front end.

Exit codes: 0 success, 1 precondition violation, 2 p-adic precision
exhausted, 3 a verification suite reported a failed check.
"""
import argparse
import json
import os
import re
import sys

from . import audit as audit_mod
from .classical_sums import CoprimePair, HardyKind, apostol_sum, dedekind_sum, hardy_sum, trig_series_partial
from .errors import PrecisionError, PreconditionError
from .exactnum import format_rational, parse_rational, tan_series
from .padic import PadicNumber, check_prime
from .twisted_bernoulli import TwistedBernoulliContext, twisted_bernoulli_number
from .twisted_dedekind import TwistedDedekindParams, twisted_dedekind_sum
from .verify import SUITES
from .volkenborn import (
    PeriodicFn,
    Polynomial,
    fermionic_periodic_closed,
    fermionic_poly,
    fermionic_trunc,
    sine_fermionic_formal,
    volkenborn_poly,
    volkenborn_q_trunc,
)

EXIT_OK, EXIT_PRECONDITION, EXIT_PRECISION, EXIT_VERIFY_FAILED = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PRECONDITION, f"{self.prog}: error: {message}\n")


def _rational_list(text):
    return [parse_rational(t) for t in text.replace("{", "").replace("}", "").split(",") if t.strip()]


def _int_list(text):
    try:
        return [int(t) for t in text.replace("{", "").replace("}", "").split(",") if t.strip()]
    except ValueError:
        raise PreconditionError(f"expected a comma-separated list of integers, got {text!r}") from None


_Q_SHORTHAND = re.compile(r"^\s*1\s*\+\s*(p|\d+)\s*\^\s*(\d+)\s*$")


def parse_q(text, p, precision):
    """q from "1+p^M", "1+5^M", "digits:d0,d1,..." (base p, least significant first) or a rational."""
    m = _Q_SHORTHAND.match(text)
    if m:
        base = p if m.group(1) == "p" else int(m.group(1))
        if base != p:
            raise PreconditionError(f"q shorthand base {base} differs from --p {p}")
        return PadicNumber.from_rational(1 + p ** int(m.group(2)), p, precision)
    if text.startswith("digits:"):
        return PadicNumber.from_digits(p, 0, _int_list(text[len("digits:"):]))
    return PadicNumber.from_rational(parse_rational(text), p, precision)


def _integrand(args):
    if args.table is not None and args.poly is not None:
        raise PreconditionError("give either --table or --poly, not both")
    if args.table is not None:
        return PeriodicFn(_rational_list(args.table))
    if args.poly is not None:
        return Polynomial(_rational_list(args.poly))
    raise PreconditionError("an integrand is required: --table v0,v1,... or --poly c0,c1,...")


def cmd_dedekind(args):
    return {"value": format_rational(dedekind_sum(CoprimePair(args.h, args.k)))}


def cmd_apostol(args):
    return {"value": format_rational(apostol_sum(args.h, args.k, args.n))}


def cmd_hardy(args):
    kind = HardyKind.parse(args.kind)
    pair = CoprimePair(args.h, args.k)
    out = {"value": format_rational(hardy_sum(kind, pair))}
    if args.series_periods:
        v, last = trig_series_partial(kind, pair, args.series_periods)
        out["series_float"] = repr(v)
        out["series_last_block"] = repr(last)
    return out


def cmd_integrate(args):
    kind = args.measure
    if kind == "sine":
        T = args.T or 13
        lhs, rhs = sine_fermionic_formal(T), -tan_series(T)
        return {
            "fermionic_sine": [format_rational(c) for c in lhs],
            "minus_tan_half": [format_rational(c) for c in rhs],
            "equal": list(lhs) == list(rhs),
        }
    f = _integrand(args)
    if kind == "fermionic":
        if args.N is not None:
            _need_p(args)
            return {"value": format_rational(fermionic_trunc(f, args.p, args.N)), "N": args.N, "p": args.p}
        if isinstance(f, Polynomial):
            return {"value": format_rational(fermionic_poly(f))}
        _need_p(args)
        return fermionic_periodic_closed(f, args.p).to_json()
    if kind == "volkenborn":
        if not isinstance(f, Polynomial):
            raise PreconditionError("the bosonic closed form takes a --poly integrand")
        return {"value": format_rational(volkenborn_poly(f))}
    # q-deformed
    _need_p(args)
    if args.N is None or args.q is None:
        raise PreconditionError("the q-deformed integral needs --q and --N")
    target = args.precision
    q = parse_q(args.q, args.p, target + args.N + 8)
    return {"value": volkenborn_q_trunc(f, args.p, args.N, q, target).to_json(), "N": args.N}


def _need_p(args):
    if args.p is None:
        raise PreconditionError("--p is required")
    check_prime(args.p)


def cmd_twisted_bernoulli(args):
    T = max(args.T or args.n, args.n)
    ctx = TwistedBernoulliContext.build(args.p, 1 + args.p**args.M, args.level, T, args.precision)
    out = {
        "p": args.p,
        "q": f"1+{args.p}^{args.M}",
        "w_level": args.level,
        "n": args.n,
        "working_precision": ctx.working_precision,
        "value": twisted_bernoulli_number(ctx, args.n).to_json(),
    }
    if args.dump_series:
        out["series"] = ctx.series().to_json()
    return out


def cmd_twisted_dedekind(args):
    ctx = TwistedBernoulliContext.build(args.p, 1 + args.p**args.M, args.level, max(args.m, 1), args.precision)
    s = twisted_dedekind_sum(TwistedDedekindParams(args.h, args.k, args.m, ctx))
    return {
        "h": args.h,
        "k": args.k,
        "m": args.m,
        "p": args.p,
        "q": f"1+{args.p}^{args.M}",
        "w_level": args.level,
        "value": s.to_json(),
    }


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = []
    for name in names:
        for r in SUITES[name]():
            results.append(dict(r, suite=name))
    return results


def cmd_audit(args):
    kmax = int(args.grid[0])
    primes = _int_list(args.grid[1])
    if kmax < 1:
        raise PreconditionError("grid kmax must be positive")
    return audit_mod.audit_grid(kmax, primes, num_periods=args.series_periods or 10**4)


def build_parser():
    ap = _Parser(prog="padic-dedekind", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", help="write output here instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("dedekind", parents=[common], help="classical Dedekind sum s(h,k)")
    s.add_argument("h", type=int)
    s.add_argument("k", type=int)
    s.set_defaults(func=cmd_dedekind)

    s = sub.add_parser("apostol", parents=[common], help="Apostol sum s(h,k,n)")
    s.add_argument("h", type=int)
    s.add_argument("k", type=int)
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_apostol)

    s = sub.add_parser("hardy", parents=[common], help="Hardy-Berndt sum S, S2, S3 or S5")
    s.add_argument("kind")
    s.add_argument("h", type=int)
    s.add_argument("k", type=int)
    s.add_argument("--series-periods", type=int, default=0, help="also sum the tangent series")
    s.set_defaults(func=cmd_hardy)

    s = sub.add_parser("integrate", parents=[common], help="fermionic, bosonic or q-deformed integral")
    s.add_argument("measure", choices=("fermionic", "volkenborn", "q", "sine"))
    s.add_argument("--table", help="periodic integrand values f(0),...,f(m-1)")
    s.add_argument("--poly", help="polynomial coefficients c0,c1,...")
    s.add_argument("--p", type=int)
    s.add_argument("--q", help='"1+p^M", "digits:d0,d1,..." or a rational')
    s.add_argument("--N", type=int)
    s.add_argument("--T", type=int)
    s.add_argument("--precision", type=int, default=10)
    s.set_defaults(func=cmd_integrate)

    s = sub.add_parser("twisted-bernoulli", parents=[common], help="b*_{n,w}(q) for q = 1+p^M")
    s.add_argument("p", type=int)
    s.add_argument("M", type=int)
    s.add_argument("level", type=int)
    s.add_argument("n", type=int)
    s.add_argument("--T", type=int)
    s.add_argument("--precision", type=int, default=10)
    s.add_argument("--dump-series", action="store_true")
    s.set_defaults(func=cmd_twisted_bernoulli)

    s = sub.add_parser("twisted-dedekind", parents=[common], help="s_w(h,k,m,q) for q = 1+p^M")
    for name in ("h", "k", "m", "p", "M", "level"):
        s.add_argument(name, type=int)
    s.add_argument("--precision", type=int, default=10)
    s.set_defaults(func=cmd_twisted_dedekind)

    s = sub.add_parser("verify", parents=[common], help="run a self-check suite")
    s.add_argument("--suite", choices=sorted(SUITES) + ["all"], required=True)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("audit", parents=[common], help="classify the asserted identities over a grid")
    s.add_argument("--grid", nargs=2, metavar=("KMAX", "PSET"), required=True)
    s.add_argument("--series-periods", type=int, default=0)
    s.set_defaults(func=cmd_audit)
    return ap


def render(result, fmt):
    if fmt == "csv":
        if isinstance(result, list) and result and isinstance(result[0], audit_mod.AuditReport):
            return audit_mod.reports_to_csv(result)
        rows = result if isinstance(result, list) else [result]
        keys = sorted({k for r in rows for k in r})
        lines = [",".join(keys)]
        for r in rows:
            lines.append(",".join(_csv_cell(r.get(k, "")) for k in keys))
        return "\n".join(lines) + "\n"
    if isinstance(result, list) and result and isinstance(result[0], audit_mod.AuditReport):
        result = [r.to_json() for r in result]
    return json.dumps(result, sort_keys=True, separators=(",", ":")) + "\n"


def _csv_cell(v):
    s = v if isinstance(v, str) else json.dumps(v, sort_keys=True)
    return '"' + s.replace('"', '""') + '"' if ("," in s or '"' in s) else s


def run(argv=None):
    """Parse ``argv``, execute, write output; returns the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except PrecisionError as exc:
        hint = f" (required working precision: {exc.required})" if exc.required else ""
        print(f"precision exhausted: {exc}{hint}", file=sys.stderr)
        return EXIT_PRECISION
    text = render(result, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.command == "verify" and not all(r["passed"] for r in result):
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def main():
    try:
        code = run()
        sys.stdout.flush()
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head)
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        code = EXIT_OK
    sys.exit(code)


if __name__ == "__main__":
    main()
