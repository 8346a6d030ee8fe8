"""Twisted q-Bernoulli numbers and polynomials from their generating function

    F_{q,w}(t) = (q-1)/log q * (2 log q + t) / (w q^2 e^t - 1)

expanded as a truncated power series in t over Q_p(w). Coefficients are found
from the defining relation (w q^2 e^t - 1) F = (q-1)/log q (2 log q + t) by a
triangular solve that divides by w q^2 - 1 once per coefficient; every
coefficient carries the absolute precision that survived (the precision
ledger).
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .cyclo import CycloElement, cyclo_make_zeta
from .errors import PrecisionError, PreconditionError
from .exactnum import frac
from .padic import PadicNumber, check_prime, padic_log, qnum, valuation_rational, _v_factorial
from .series import TruncatedSeries
from .volkenborn import twisted_riemann_sum, _check_truncation

GUARD_DIGITS = 4


def make_q(p, M, precision):
    """q = 1 + p^M as a p-adic number known to ``precision`` digits."""
    if M < 1:
        raise PreconditionError(f"q = 1 + p^M needs M >= 1, got M={M}")
    return PadicNumber.from_rational(1 + p**M, p, precision)


def make_w(p, level, precision):
    if level == 0:
        return CycloElement.one(p, 0, precision)
    return cyclo_make_zeta(p, level, precision)


def cyclo_log(u, precision=None):
    """Iwasawa log on Q_p(zeta) units close to 1, via log u = log(u^(p^e)) / p^e.

    ``e`` is the least exponent making every coefficient of u^(p^e) - 1 divisible
    by p; for a root of unity of p-power order this gives exactly 0.
    """
    p = u.prime
    A = u.abs_precision() if precision is None else precision
    e, v = 0, u
    while True:
        y = v - 1
        if y.is_zero() or y.valuation() >= 1:
            break
        e += 1
        if e > u.level + 2:
            raise PreconditionError("cyclo_log needs a unit congruent to a root of unity times a 1-unit")
        v = v ** p
    if y.is_zero():
        return CycloElement.from_base(PadicNumber.zero(p, A), p, u.level)
    vy = y.valuation()
    total, power = None, None
    j = 1
    while j * vy - _floor_log(j, p) < A + 1:
        power = y if power is None else power * y
        term = power / j
        term = term if j % 2 else -term
        total = term if total is None else total + term
        j += 1
    return total / p**e


def _floor_log(j, p):
    e = 0
    while p ** (e + 1) <= j:
        e += 1
    return e


@dataclass
class TwistedBernoulliContext:
    p: int
    q: PadicNumber
    w: CycloElement
    T: int
    target_precision: int
    working_precision: int
    logq: PadicNumber
    _series: object = field(default=None, repr=False)

    @property
    def level(self):
        return self.w.level

    @classmethod
    def build(cls, p, q, level, T, target_precision, working_precision=None):
        """Validate parameters and pick a working precision from the loss budget.

        ``q`` may be an exact rational (e.g. ``1 + p**M``) or a PadicNumber. An
        exact q is re-embedded at whatever precision the budget needs.
        """
        check_prime(p)
        if not isinstance(T, int) or T < 0:
            raise PreconditionError(f"series order T must be a non-negative integer, got {T!r}")
        if target_precision < 1:
            raise PreconditionError("target precision must be positive")
        exact_q = None if isinstance(q, PadicNumber) else Fraction(q)
        if exact_q is not None:
            if exact_q == 1:
                raise PreconditionError("q = 1 is a pole of the generating function; use q = 1 + p^M")
            if valuation_rational(exact_q - 1, p) < 1:
                raise PreconditionError("q must be a 1-unit: v_p(q - 1) >= 1")
            vq = valuation_rational(exact_q - 1, p)
        else:
            y = q - 1
            if y.is_zero():
                raise PreconditionError("q must differ from 1 at working precision")
            if y.valuation < 1:
                raise PreconditionError("q must be a 1-unit: v_p(q - 1) >= 1")
            vq = y.valuation
        if working_precision is None:
            working_precision = cls.budget(p, vq, level, T, target_precision)
        for _ in range(4):
            qp = (
                PadicNumber.from_rational(exact_q, p, working_precision)
                if exact_q is not None
                else q
            )
            if qp.abs_precision < working_precision:
                raise PrecisionError(
                    f"q is known to {qp.abs_precision} digits but {working_precision} are needed",
                    required=working_precision,
                )
            qp = qp.with_abs_precision(working_precision)
            w = make_w(p, level, working_precision)
            if not (w ** (p**level) - 1).is_zero():
                raise PreconditionError("w is not a root of unity of the declared order")
            ctx = cls(p, qp, w, T, target_precision, working_precision, padic_log(qp))
            try:
                ctx.series()
                return ctx
            except PrecisionError as exc:
                if exact_q is None or exc.required is None:
                    raise
                working_precision = exc.required
        raise PrecisionError("could not reach the target precision", required=working_precision)

    @staticmethod
    def budget(p, vq, level, T, target):
        """Working precision: target + (T+1) * per-division loss + log-ratio loss + v_p(T!) + guard."""
        per_division = 2 * vq if level == 0 else 2
        return target + (T + 1) * per_division + vq + _v_factorial(max(T, 1), p) + GUARD_DIGITS

    def one(self):
        return CycloElement.one(self.p, self.level, self.working_precision)

    def embed(self, x):
        return CycloElement.from_base(x, self.p, self.level, self.working_precision)

    def series(self):
        if self._series is None:
            self._series = gen_function_series(self)
        return self._series


@dataclass
class GeneratingSeries:
    """Coefficients c_n of F_{q,w}(t) plus their absolute precisions."""

    coeffs: TruncatedSeries
    precision_ledger: list

    def to_json(self):
        out = []
        for c, prec in zip(self.coeffs, self.precision_ledger):
            d = c.to_json()
            d["precision_ledger"] = prec
            out.append(d)
        return out


def denominator_series(ctx):
    """w q^2 e^t - 1 through t^T."""
    wq2 = ctx.w * (ctx.q * ctx.q)
    coeffs = [wq2 - 1]
    for j in range(1, ctx.T + 1):
        coeffs.append(wq2.scale(Fraction(1, factorial(j))))
    return TruncatedSeries(coeffs)


def numerator_series(ctx):
    """(q-1)/log q * (2 log q + t) through t^T."""
    q1 = ctx.q - 1
    ratio = q1 / ctx.logq
    coeffs = [ctx.embed(q1 * 2)]
    if ctx.T >= 1:
        coeffs.append(ctx.embed(ratio))
    zero = ctx.embed(PadicNumber.zero(ctx.p, ctx.working_precision))
    coeffs.extend([zero] * (ctx.T - 1))
    return TruncatedSeries(coeffs[: ctx.T + 1])


def gen_function_series(ctx):
    D = denominator_series(ctx)
    R = numerator_series(ctx)
    d0 = D[0]
    if d0.is_zero():
        raise PrecisionError("w q^2 - 1 is indistinguishable from 0; (w, q) = (1, 1) is a pole")
    inv_d0 = d0.inverse()
    c = []
    for n in range(ctx.T + 1):
        acc = R[n]
        for j in range(1, n + 1):
            acc = acc - D[j] * c[n - j]
        c.append(acc * inv_d0)
    ledger = [x.abs_precision() for x in c]
    short = ctx.target_precision - min(ledger)
    if short > 0:
        raise PrecisionError(
            f"working precision {ctx.working_precision} leaves only {min(ledger)} digits "
            f"(target {ctx.target_precision})",
            required=ctx.working_precision + short + GUARD_DIGITS,
        )
    return GeneratingSeries(TruncatedSeries(c), ledger)


def _check_n(ctx, n):
    if not isinstance(n, int) or n < 0:
        raise PreconditionError(f"index n must be a non-negative integer, got {n!r}")
    if n > ctx.T:
        raise PreconditionError(f"index n={n} exceeds the series order T={ctx.T}")


def twisted_bernoulli_number(ctx, n):
    """b*_{n,w}(q) = n! c_n."""
    _check_n(ctx, n)
    return ctx.series().coeffs[n].scale(factorial(n))


def _embed_z(ctx, z):
    if isinstance(z, PadicNumber):
        return z
    return PadicNumber.from_rational(Fraction(z), ctx.p, ctx.working_precision)


def _poly_binomial(ctx, n, z):
    z = _embed_z(ctx, z)
    total = None
    zpow = z ** 0
    for k in range(n, -1, -1):
        term = twisted_bernoulli_number(ctx, k).scale(zpow * comb(n, k))
        total = term if total is None else total + term
        zpow = zpow * z
    return total


def _poly_series(ctx, n, z):
    """n! [t^n] F(t) e^(zt), by series multiplication."""
    z = _embed_z(ctx, z)
    F = ctx.series().coeffs.truncate(n)
    e = []
    zpow = z ** 0
    for j in range(n + 1):
        e.append(ctx.embed(zpow / factorial(j)))
        zpow = zpow * z
    return (F * TruncatedSeries(e))[n].scale(factorial(n))


def twisted_bernoulli_poly(ctx, n, z, method="binomial"):
    """b*_{n,w}(z, q) = sum_k C(n,k) z^(n-k) b*_{k,w}(q); needs |z|_p <= 1."""
    _check_n(ctx, n)
    zp = _embed_z(ctx, z)
    if not zp.is_zero() and zp.valuation < 0:
        raise PreconditionError(f"twisted_bernoulli_poly needs |z|_p <= 1; got v_p(z) = {zp.valuation}")
    return _poly_binomial(ctx, n, zp) if method == "binomial" else _poly_series(ctx, n, zp)


def twisted_bernoulli_bar(ctx, n, y, method="series"):
    """The polynomial evaluated at the fractional part {y}.

    {y} may have p in its denominator; the evaluation is then in Q_p.
    """
    _check_n(ctx, n)
    z = frac(Fraction(y))
    return _poly_series(ctx, n, z) if method == "series" else _poly_binomial(ctx, n, z)


def riemann_oracle(ctx, n, N, digits=None):
    """(1/[p^N:q]) sum_{x<p^N} w^x q^(2x) x^n, by brute-force summation."""
    if not isinstance(n, int) or n < 0:
        raise PreconditionError(f"index n must be a non-negative integer, got {n!r}")
    _check_truncation(ctx.p, N)
    digits = ctx.working_precision if digits is None else digits
    if N < ctx.level:
        raise PreconditionError(f"truncation N={N} must be at least the twist level {ctx.level}")
    q = ctx.q.with_abs_precision(digits)
    total = twisted_riemann_sum(n, q, ctx.level, N, digits)
    return total / qnum(ctx.p**N, q)


def oracle_loss(ctx, n):
    """Documented precision loss for riemann_oracle vs twisted_bernoulli_number at index n.

    The truncation error is p^N (log q + t)/2 * F(t) + O(p^(2N)), so at index n
    it is bounded below by N plus the smallest coefficient valuation among
    b*_0..b*_n, less one digit for the 1/2 and the ramified rounding.
    """
    lowest = min(twisted_bernoulli_number(ctx, k).valuation() for k in range(n + 1))
    return 1 + max(0, -lowest)
