"""Capped-precision p-adic numbers for odd primes.

A :class:`PadicNumber` stores ``p^valuation * unit`` where ``unit`` is known
modulo ``p^precision`` (the relative precision). The absolute precision is
``valuation + precision``. A value indistinguishable from zero has
``unit == 0``, ``precision == 0`` and keeps its absolute precision in
``valuation``.

Arithmetic propagates precision conservatively: nothing ever claims more
digits than its inputs justify.
"""
from fractions import Fraction
from math import gcd

from .errors import PrecisionError, PreconditionError


def is_odd_prime(p):
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_prime(p):
    if not is_odd_prime(p):
        raise PreconditionError(f"p must be an odd prime, got {p!r}")


def valuation_int(n, p):
    """v_p of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation_rational(x, p):
    x = Fraction(x)
    if x == 0:
        raise ValueError("valuation of 0 is infinite")
    return valuation_int(x.numerator, p) - valuation_int(x.denominator, p)


def mult_order(p, M):
    """Least d >= 1 with p^d = 1 (mod M)."""
    if M < 1 or gcd(p, M) != 1:
        raise PreconditionError(f"mult_order needs gcd(p, M) = 1 and M >= 1, got p={p}, M={M}")
    if M == 1:
        return 1
    d, r = 1, p % M
    while r != 1:
        r = r * p % M
        d += 1
    return d


class PadicNumber:
    __slots__ = ("prime", "valuation", "unit", "precision")

    def __init__(self, prime, valuation, unit, precision):
        if precision <= 0 or unit % prime ** precision == 0:
            # indistinguishable from zero: remember only the absolute precision
            self.prime = prime
            self.valuation = valuation + max(precision, 0)
            self.unit = 0
            self.precision = 0
            return
        mod = prime ** precision
        unit %= mod
        while unit % prime == 0:
            unit //= prime
            valuation += 1
            precision -= 1
        self.prime = prime
        self.valuation = valuation
        self.unit = unit % prime ** precision
        self.precision = precision

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, prime, abs_precision):
        return cls(prime, abs_precision, 0, 0)

    @classmethod
    def from_rational(cls, x, prime, precision, absolute=False):
        """Embed an exact rational.

        ``precision`` is relative by default; with ``absolute=True`` the value
        is known modulo ``p^precision``.
        """
        x = Fraction(x)
        if x == 0:
            return cls.zero(prime, precision)
        v = valuation_rational(x, prime)
        rel = precision - v if absolute else precision
        if rel <= 0:
            return cls.zero(prime, v + rel if absolute else precision)
        num = x.numerator // prime ** max(v, 0)
        den = x.denominator // prime ** max(-v, 0)
        mod = prime ** rel
        return cls(prime, v, num * pow(den, -1, mod) % mod, rel)

    @classmethod
    def from_digits(cls, prime, valuation, digits):
        unit = 0
        for d in reversed(digits):
            if not 0 <= d < prime:
                raise PreconditionError(f"digit {d} out of range for p={prime}")
            unit = unit * prime + d
        return cls(prime, valuation, unit, len(digits))

    # -- inspection -----------------------------------------------------

    @property
    def abs_precision(self):
        return self.valuation + self.precision

    def is_zero(self):
        return self.unit == 0

    def norm(self):
        """|x|_p as an exact rational (0 for a value indistinguishable from 0)."""
        if self.is_zero():
            return Fraction(0)
        return Fraction(1, self.prime ** self.valuation) if self.valuation >= 0 else Fraction(
            self.prime ** -self.valuation
        )

    def digits(self):
        out, u = [], self.unit
        for _ in range(self.precision):
            out.append(u % self.prime)
            u //= self.prime
        return out

    def lift(self):
        """Exact rational representative p^v * unit."""
        return Fraction(self.unit) * Fraction(self.prime) ** self.valuation

    def residue(self, abs_precision=None):
        """Integer representative modulo p^abs_precision; needs valuation >= 0."""
        a = self.abs_precision if abs_precision is None else abs_precision
        if a > self.abs_precision:
            raise PrecisionError(
                f"requested {a} digits but only {self.abs_precision} are known", required=a
            )
        if self.is_zero():
            return 0
        if self.valuation < 0:
            raise PreconditionError("residue of a non-integral p-adic number")
        return self.unit * self.prime ** self.valuation % self.prime ** a

    def with_abs_precision(self, a):
        """Drop digits beyond absolute precision a (never adds digits)."""
        a = min(a, self.abs_precision)
        if self.is_zero():
            return PadicNumber.zero(self.prime, a)
        return PadicNumber(self.prime, self.valuation, self.unit, a - self.valuation)

    def to_json(self):
        return {
            "p": self.prime,
            "valuation": self.valuation,
            "digits": self.digits(),
            "precision": self.precision,
        }

    @classmethod
    def from_json(cls, obj):
        return cls.from_digits(obj["p"], obj["valuation"], obj["digits"]) if obj["digits"] else cls.zero(
            obj["p"], obj["valuation"]
        )

    def __repr__(self):
        if self.is_zero():
            return f"PadicNumber(0 + O({self.prime}^{self.valuation}))"
        return (
            f"PadicNumber({self.unit}*{self.prime}^{self.valuation} "
            f"+ O({self.prime}^{self.abs_precision}))"
        )

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, PadicNumber):
            if other.prime != self.prime:
                raise PreconditionError(f"prime mismatch: {self.prime} vs {other.prime}")
            return other
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if other == 0:
                return PadicNumber.zero(self.prime, self.abs_precision + abs(self.valuation) + 1)
            v = valuation_rational(other, self.prime)
            rel = max(1, self.precision, self.abs_precision - v)
            return PadicNumber.from_rational(other, self.prime, rel)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.prime
        a = min(self.abs_precision, other.abs_precision)
        if self.is_zero():
            return other.with_abs_precision(a)
        if other.is_zero():
            return self.with_abs_precision(a)
        v = min(self.valuation, other.valuation)
        if a <= v:
            return PadicNumber.zero(p, a)
        x = self.unit * p ** (self.valuation - v) + other.unit * p ** (other.valuation - v)
        return PadicNumber(p, v, x, a - v)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero():
            return self
        return PadicNumber(self.prime, self.valuation, -self.unit, self.precision)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.prime
        if self.is_zero() or other.is_zero():
            if self.is_zero() and other.is_zero():
                return PadicNumber.zero(p, self.valuation + other.valuation)
            z, nz = (self, other) if self.is_zero() else (other, self)
            # z known mod p^A, so z*nz known mod p^(A + v(nz))
            return PadicNumber.zero(p, z.valuation + nz.valuation)
        prec = min(self.precision, other.precision)
        return PadicNumber(p, self.valuation + other.valuation, self.unit * other.unit, prec)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise PrecisionError(
                f"division by a value indistinguishable from 0 (O({self.prime}^{other.valuation}))"
            )
        p = self.prime
        if self.is_zero():
            return PadicNumber.zero(p, self.valuation - other.valuation)
        prec = min(self.precision, other.precision)
        mod = p ** prec
        return PadicNumber(p, self.valuation - other.valuation, self.unit * pow(other.unit, -1, mod), prec)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        p = self.prime
        one_prec = max(self.precision, self.abs_precision, 1)
        if n == 0:
            return PadicNumber(p, 0, 1, one_prec)
        if n < 0:
            return PadicNumber(p, 0, 1, one_prec) / self ** (-n)
        if self.is_zero():
            return PadicNumber.zero(p, self.valuation * n)
        mod = p ** self.precision
        return PadicNumber(p, self.valuation * n, pow(self.unit, n, mod), self.precision)

    def __eq__(self, other):
        """Equality at the common known precision."""
        try:
            diff = self - other
        except (PreconditionError, TypeError):
            return False
        if diff is NotImplemented:
            return NotImplemented
        return diff.is_zero()

    __hash__ = None


def _as_padic(x, like_prime, precision):
    if isinstance(x, PadicNumber):
        return x
    return PadicNumber.from_rational(x, like_prime, precision)


def padic_arith(a, b, op):
    """Dispatch helper: op in {"add", "sub", "mul", "div"}."""
    if isinstance(a, PadicNumber) and isinstance(b, PadicNumber) and a.prime != b.prime:
        raise PreconditionError(f"prime mismatch: {a.prime} vs {b.prime}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise PreconditionError(f"unknown operation {op!r}")


def _one_unit_offset(u):
    if not isinstance(u, PadicNumber):
        raise TypeError("expected a PadicNumber")
    y = u - 1
    if not y.is_zero() and y.valuation < 1:
        raise PreconditionError(
            f"log_p needs a 1-unit (v_p(u-1) >= 1); got v_p(u-1) = {y.valuation}"
        )
    return y


def padic_log(u):
    """Iwasawa logarithm of a 1-unit; exact to the absolute precision of u."""
    p = u.prime
    y = _one_unit_offset(u)
    A = u.abs_precision
    if y.is_zero():
        return PadicNumber.zero(p, A)
    vy = y.valuation
    # y^j/j has valuation >= j*vy - floor(log_p j), which is non-decreasing in j
    J = 1
    while (J + 1) * vy - _vlog(J + 1, p) < A:
        J += 1
    extra = _vlog(J, p)
    mod = p ** (A + extra)
    inv_mod = p ** A
    Y = y.residue(A)
    total, power = 0, 1
    for j in range(1, J + 1):
        power = power * Y % mod
        vj = valuation_int(j, p)
        term = power // p ** vj * pow(j // p ** vj, -1, inv_mod)
        total += term if j % 2 else -term
    return PadicNumber(p, 0, total, A)


def _vlog(j, p):
    """floor(log_p j), an upper bound for v_p(j)."""
    e = 0
    while p ** (e + 1) <= j:
        e += 1
    return e


def _v_factorial(j, p):
    v, pk = 0, p
    while pk <= j:
        v += j // pk
        pk *= p
    return v


def padic_exp(x):
    """exp on p Z_p (odd p); exact to the absolute precision of x."""
    p = x.prime
    A = x.abs_precision
    if x.is_zero():
        return PadicNumber(p, 0, 1, max(A, 1))
    if x.valuation < 1:
        raise PreconditionError(f"exp_p needs v_p(x) >= 1; got {x.valuation}")
    vx = x.valuation
    # v(x^j/j!) >= j*vx - (j-1)/(p-1), a bound that increases with j
    J = 1
    while (J + 1) * vx - J // (p - 1) < A:
        J += 1
    X = x.residue(A)
    mod = p ** (A + _v_factorial(J, p))
    total, power, fact = 1, 1, 1
    for j in range(1, J + 1):
        power = power * X % mod
        fact *= j
        vf = _v_factorial(j, p)
        fu = fact // p ** vf
        total += power // p ** vf * pow(fu, -1, p ** A)
    return PadicNumber(p, 0, total, A)


def padic_pow(q, x):
    """q^x for a 1-unit q and x in Z_p (int, Fraction or PadicNumber)."""
    y = _one_unit_offset(q)
    if isinstance(x, int):
        return q ** x
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return q ** x.numerator
        if valuation_rational(x, q.prime) < 0:
            raise PreconditionError(f"exponent {x} is not in Z_{q.prime}")
    elif isinstance(x, PadicNumber):
        if not x.is_zero() and x.valuation < 0:
            raise PreconditionError("exponent is not in Z_p")
    else:
        raise TypeError("exponent must be int, Fraction or PadicNumber")
    del y
    return padic_exp(padic_log(q) * x)


def qnum(x, q):
    """[x:q] = 1 + q + ... + q^(x-1), via binary doubling of the geometric sum."""
    if not isinstance(x, int) or x < 0:
        raise PreconditionError(f"q-number index must be a non-negative integer, got {x!r}")
    if isinstance(q, PadicNumber):
        _one_unit_offset(q)
        one = q ** 0
        zero = one - one
    else:
        q = Fraction(q)
        one, zero = Fraction(1), Fraction(0)
    total, qpow = zero, one  # invariant: total = [m:q], qpow = q^m for the bits read so far
    for bit in bin(x)[2:]:
        total = total + total * qpow
        qpow = qpow * qpow
        if bit == "1":
            total = total * q + one
            qpow = qpow * q
    return total
