"""Exact rational special functions: floor, sawtooth, Bernoulli and Euler numbers.

Everything here is computed with :class:`fractions.Fraction`; no floating
point is involved. Bernoulli numbers use the convention ``B_1 = -1/2``.
"""
import threading
from fractions import Fraction
from math import comb, factorial

from .errors import PreconditionError
from .series import TruncatedSeries

Rational = Fraction


def as_rational(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def parse_rational(text):
    """Parse "num/den", "num" or a decimal-free integer string."""
    text = text.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise PreconditionError(f"not a rational number: {text!r}") from exc


def format_rational(x):
    """Canonical "num/den" text; zero is "0/1"."""
    x = as_rational(x)
    return f"{x.numerator}/{x.denominator}"


def floor_g(x):
    """Greatest integer <= x."""
    x = as_rational(x)
    return x.numerator // x.denominator


def frac(x):
    """Fractional part in [0, 1)."""
    x = as_rational(x)
    return x - floor_g(x)


def sawtooth(x):
    """((x)): x - floor(x) - 1/2 off the integers, 0 on them."""
    x = as_rational(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - floor_g(x) - Fraction(1, 2)


def _check_index(n):
    if not isinstance(n, int) or n < 0:
        raise PreconditionError(f"index must be a non-negative integer, got {n!r}")


# Grown on demand under a lock; readers take a snapshot of the list.
_bernoulli = [Fraction(1)]
_euler = [Fraction(1)]
_lock = threading.Lock()


def _extend_bernoulli(n):
    with _lock:
        B = _bernoulli
        for m in range(len(B), n + 1):
            # sum_{k<=m} C(m+1, k) B_k = 0
            acc = sum((comb(m + 1, k) * B[k] for k in range(m)), Fraction(0))
            B.append(-acc / (m + 1))


def _extend_euler(n):
    with _lock:
        E = _euler
        for m in range(len(E), n + 1):
            # (e^t + 1) E(t) = 2  =>  2 e_m + sum_{k<m} C(m,k) e_k = 0
            acc = sum((comb(m, k) * E[k] for k in range(m)), Fraction(0))
            E.append(-acc / 2)


def bernoulli_number(n):
    _check_index(n)
    if n >= len(_bernoulli):
        _extend_bernoulli(n)
    return _bernoulli[n]


def bernoulli_numbers(n):
    """[B_0, ..., B_n]."""
    bernoulli_number(n)
    return list(_bernoulli[: n + 1])


def bernoulli_poly(n, x):
    """B_n(x) = sum_k C(n,k) B_k x^(n-k)."""
    _check_index(n)
    x = as_rational(x)
    B = bernoulli_numbers(n)
    # Horner in x over the reversed binomial coefficients
    acc = Fraction(0)
    for k in range(n + 1):
        acc = acc * x + comb(n, k) * B[k]
    return acc


def bernoulli_fn(n, x):
    """Periodic Bernoulli function B_n({x}), with the value 0 at integers for n = 1."""
    _check_index(n)
    x = as_rational(x)
    if x.denominator == 1 and n == 1:
        return Fraction(0)
    return bernoulli_poly(n, frac(x))


def euler_numbers(T):
    """[e_0, ..., e_T] with 2/(e^t + 1) = sum e_n t^n / n!.

    e_n is also the fermionic integral of x^n.
    """
    _check_index(T)
    if T >= len(_euler):
        _extend_euler(T)
    return list(_euler[: T + 1])


def tan_series(T):
    """Maclaurin coefficients of tan(b/2) through b^T, as sin(b/2)/cos(b/2)."""
    _check_index(T)
    sin_c, cos_c = [], []
    for j in range(T + 1):
        c = Fraction(1, factorial(j) * 2**j)
        if j % 2:
            sin_c.append(c if j % 4 == 1 else -c)
            cos_c.append(Fraction(0))
        else:
            sin_c.append(Fraction(0))
            cos_c.append(c if j % 4 == 0 else -c)
    return TruncatedSeries(sin_c) * TruncatedSeries(cos_c).reciprocal()
