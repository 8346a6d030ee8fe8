"""Bosonic, q-deformed and fermionic p-adic integrals.

Truncated Riemann sums are computed exactly (rationals) or at tracked p-adic
precision; closed forms cover polynomial and periodic integrands.

For a periodic integrand the fermionic partial sums
``S_N = sum_{x<p^N} (-1)^x f(x)`` satisfy, with ``M = lcm(2, m)``,
``B = sum_{x<M} (-1)^x f(x)``, ``P(r) = sum_{x<r} (-1)^x f(x)`` and
``r_N = p^N mod M``::

    S_N = (P(r_N) - r_N B / M) + B p^N / M

so the p-adic limit along ``N = a (mod ord_M(p))`` is ``P(r_a) - r_a B / M``.
When ``B != 0`` these branch values generally differ.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, gcd
from typing import Union

from . import _kernels, config
from .cyclo import CycloElement, phi_prime_power
from .errors import PrecisionError, PreconditionError
from .exactnum import bernoulli_numbers, euler_numbers, format_rational
from .padic import PadicNumber, check_prime, mult_order, padic_log, qnum, valuation_int
from .series import TruncatedSeries


@dataclass(frozen=True)
class PeriodicFn:
    """f(x) = values[x mod period] on the integers."""

    values: tuple

    def __init__(self, values):
        vals = tuple(Fraction(v) for v in values)
        if not vals:
            raise PreconditionError("a periodic function needs at least one value")
        object.__setattr__(self, "values", vals)

    @property
    def period(self):
        return len(self.values)

    def __call__(self, x):
        return self.values[x % len(self.values)]

    def table(self, length):
        return [self(x) for x in range(length)]


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple

    def __init__(self, coeffs):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in coeffs))

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def shift(self, a=1):
        """Coefficients of f(x + a)."""
        n = len(self.coeffs)
        out = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            for j in range(i + 1):
                out[j] += c * comb(i, j) * Fraction(a) ** (i - j)
        return Polynomial(out)

    def derivative_at_zero(self):
        return self.coeffs[1] if len(self.coeffs) > 1 else Fraction(0)


@dataclass(frozen=True)
class TwistedMonomial:
    """x^n with the weight w^x q^x, integrated against mu_q."""

    n: int
    q: PadicNumber
    w: CycloElement


@dataclass(frozen=True)
class SineFormal:
    order: int


IntegrandSpec = Union[Polynomial, PeriodicFn, TwistedMonomial, SineFormal]


@dataclass
class FermionicLimitReport:
    modulus: int
    block_sum: Fraction
    branch_values: dict = field(default_factory=dict)
    branch_independent: bool = True

    def to_json(self):
        return {
            "modulus": self.modulus,
            "block_sum": format_rational(self.block_sum),
            "branches": {str(r): format_rational(v) for r, v in sorted(self.branch_values.items())},
            "branch_independent": self.branch_independent,
        }

    def branch_value(self, N, p):
        return self.branch_values[pow(p, N, self.modulus)]


def _check_truncation(p, N):
    if not isinstance(N, int) or N < 1:
        raise PreconditionError(f"truncation level N must be a positive integer, got {N!r}")
    if p ** N > config.MAX_TRUNCATION:
        raise PreconditionError(
            f"p^N = {p}^{N} exceeds the truncation bound {config.MAX_TRUNCATION}; use a closed form"
        )


def _as_integrand(f):
    if isinstance(f, (PeriodicFn, Polynomial, TwistedMonomial, SineFormal)):
        return f
    raise TypeError(f"not an integrand: {f!r}")


# -- fermionic -------------------------------------------------------------


def fermionic_trunc(f, p, N):
    """sum_{x=0}^{p^N - 1} (-1)^x f(x), exactly."""
    f = _as_integrand(f)
    check_prime(p)
    _check_truncation(p, N)
    count = p ** N
    if isinstance(f, PeriodicFn):
        den = 1
        for v in f.values:
            den = den * v.denominator // gcd(den, v.denominator)
        ints = [int(v * den) for v in f.values]
        return Fraction(_kernels.alternating_periodic_sum(ints, count), den)
    if isinstance(f, Polynomial):
        total = Fraction(0)
        for x in range(count):
            v = f(x)
            total += -v if x % 2 else v
        return total
    raise PreconditionError("fermionic_trunc accepts Polynomial or PeriodicFn integrands")


def fermionic_periodic_closed(f, p):
    """All p-adic limits of the fermionic partial sums of a periodic f."""
    check_prime(p)
    m = f.period
    M = m * 2 // gcd(m, 2)
    if gcd(p, M) != 1:
        raise PreconditionError(f"fermionic closed form needs gcd(p, lcm(2, m)) = 1; got p={p}, M={M}")
    prefix = [Fraction(0)]
    for x in range(M):
        g = -f(x) if x % 2 else f(x)
        prefix.append(prefix[-1] + g)
    B = prefix[M]
    d = mult_order(p, M)
    branches = {}
    for a in range(1, d + 1):
        r = pow(p, a, M)
        branches[r] = prefix[r] - r * B / M
    distinct = set(branches.values())
    return FermionicLimitReport(M, B, branches, len(distinct) == 1)


def fermionic_poly(coeffs):
    """Fermionic integral of sum c_n x^n: sum c_n e_n."""
    coeffs = coeffs.coeffs if isinstance(coeffs, Polynomial) else [Fraction(c) for c in coeffs]
    if not coeffs:
        return Fraction(0)
    e = euler_numbers(len(coeffs) - 1)
    return sum((c * en for c, en in zip(coeffs, e)), Fraction(0))


def volkenborn_poly(coeffs):
    """Bosonic Volkenborn integral of sum c_n x^n: sum c_n B_n."""
    coeffs = coeffs.coeffs if isinstance(coeffs, Polynomial) else [Fraction(c) for c in coeffs]
    if not coeffs:
        return Fraction(0)
    B = bernoulli_numbers(len(coeffs) - 1)
    return sum((c * b for c, b in zip(coeffs, B)), Fraction(0))


# -- q-deformed --------------------------------------------------------------


def _check_q(q):
    if not isinstance(q, PadicNumber):
        raise PreconditionError("q must be a PadicNumber")
    y = q - 1
    if y.is_zero():
        raise PreconditionError("q must differ from 1 at working precision")
    if y.valuation < 1:
        raise PreconditionError(f"q must be a 1-unit (v_p(q-1) >= 1); got v_p(q-1) = {y.valuation}")


def _fold_residues(sums, p, level, modulus_digits):
    """sum_r S_r zeta^r as a CycloElement; S_r known modulo p^modulus_digits."""
    d = phi_prime_power(p, level)
    coeffs = [0] * d
    for r, s in enumerate(sums):
        if r < d:
            coeffs[r] += s
        else:
            # zeta^r = -sum_{i<p-1} zeta^(r - d + i p^(level-1))
            base = r - d
            step = p ** (level - 1)
            for i in range(p - 1):
                coeffs[base + i * step] -= s
    return CycloElement(p, level, [PadicNumber(p, 0, c, modulus_digits) for c in coeffs])


def twisted_riemann_sum(n, q, w_level, N, digits, q_power=2):
    """sum_{x<p^N} zeta^x q^(q_power*x) x^n  modulo p^digits, as a CycloElement.

    ``w_level`` 0 means w = 1; otherwise w is the power-basis zeta of that level.
    """
    p = q.prime
    _check_truncation(p, N)
    modulus = p ** digits
    Q = pow(q.residue(digits), q_power, modulus)
    classes = p ** w_level
    sums = _kernels.residue_power_sums(Q, n, p ** N, classes, modulus)
    return _fold_residues(sums, p, w_level, digits)


def volkenborn_q_trunc(f, p, N, q, precision=None):
    """(1/[p^N:q]) sum_{x<p^N} f(x) q^x at tracked precision.

    ``precision`` is the target absolute precision of the result; the sums are
    formed N + 4 digits deeper to absorb the division by [p^N:q].
    """
    f = _as_integrand(f)
    check_prime(p)
    _check_q(q)
    if q.prime != p:
        raise PreconditionError("q must be a p-adic number for the same prime")
    _check_truncation(p, N)
    target = q.abs_precision - N - 4 if precision is None else precision
    digits = target + N + 4
    if digits > q.abs_precision:
        raise PrecisionError(
            f"q is known to {q.abs_precision} digits; {digits} are needed for target {target}",
            required=digits,
        )
    qn = qnum(p ** N, q.with_abs_precision(digits))
    if isinstance(f, TwistedMonomial):
        if f.q.prime != p:
            raise PreconditionError("integrand q has the wrong prime")
        level = f.w.level
        _check_twist(f.w, digits)
        total = twisted_riemann_sum(f.n, q.with_abs_precision(digits), level, N, digits, q_power=2)
        return total / qn
    if isinstance(f, Polynomial):
        modulus = p ** digits
        Qr = q.residue(digits)
        acc = PadicNumber.zero(p, digits)
        for i, c in enumerate(f.coeffs):
            if c == 0:
                continue
            s = _kernels.residue_power_sums(Qr, i, p ** N, 1, modulus)[0]
            acc = acc + PadicNumber(p, 0, s, digits) * c
        return acc / qn
    if isinstance(f, PeriodicFn):
        modulus = p ** digits
        sums = _kernels.residue_power_sums(q.residue(digits), 0, p ** N, f.period, modulus)
        acc = PadicNumber.zero(p, digits)
        for v, s in zip(f.values, sums):
            if v != 0:
                acc = acc + PadicNumber(p, 0, s, digits) * v
        return acc / qn
    raise PreconditionError("volkenborn_q_trunc does not accept a formal sine integrand")


def _check_twist(w, digits):
    if w.level == 0:
        if not (w.coeffs[0] - 1).is_zero():
            raise PreconditionError("a level-0 twist must be w = 1")
        return
    # only the canonical zeta of the power basis is supported by the residue fold
    z = CycloElement.zeta_power(w.prime, w.level, 1, digits)
    if not (w - z).is_zero():
        raise PreconditionError("twisted integrands use the power-basis zeta of their level")


def q_functional_residual(g, p, N, q, precision):
    """q I_q(g_1) - I_q(g) - (q-1) g(0) - ((q-1)/log q) g'(0) from truncated integrals."""
    g = g if isinstance(g, Polynomial) else Polynomial(g)
    lhs = q * volkenborn_q_trunc(g.shift(1), p, N, q, precision) - volkenborn_q_trunc(g, p, N, q, precision)
    logq = padic_log(q)
    return lhs - (q - 1) * g(0) - (q - 1) / logq * g.derivative_at_zero()


# -- formal sine -------------------------------------------------------------


def sine_fermionic_formal(T):
    """Termwise fermionic integral of sin(bx) as a series in b through b^T."""
    if not isinstance(T, int) or T < 1:
        raise PreconditionError(f"series order must be a positive integer, got {T!r}")
    e = euler_numbers(T)
    out = []
    for j in range(T + 1):
        if j % 2 == 0:
            out.append(Fraction(0))
        else:
            sign = 1 if (j - 1) // 2 % 2 == 0 else -1
            out.append(sign * e[j] / factorial(j))
    return TruncatedSeries(out)


def valuation_of(x, p):
    """v_p of a Rational difference, +inf for 0."""
    x = Fraction(x)
    if x == 0:
        return float("inf")
    return valuation_int(x.numerator, p) - valuation_int(x.denominator, p)
