"""Arithmetic in Q_p(zeta_{p^n}) on the power basis 1, zeta, ..., zeta^(phi-1).

Elements are coefficient vectors of :class:`PadicNumber` reduced modulo the
p^n-th cyclotomic polynomial ``sum_{i<p} x^(i p^(n-1))``. Level 0 is the base
field itself (one coefficient).

Division goes through the norm: ``1/a = prod_{sigma != 1} sigma(a) / N(a)``,
where the product runs over the Galois conjugates ``zeta -> zeta^j``.
"""
from fractions import Fraction
from math import gcd

from . import config
from .errors import PrecisionError, PreconditionError
from .padic import PadicNumber, check_prime


def phi_prime_power(p, n):
    return 1 if n == 0 else p ** (n - 1) * (p - 1)


def _check_level(n):
    if not isinstance(n, int) or n < 0:
        raise PreconditionError(f"cyclotomic level must be a non-negative integer, got {n!r}")
    if n >= 2 and not config.ALLOW_HIGH_CYCLO_LEVELS:
        raise PreconditionError(
            f"cyclotomic level {n} is disabled; set PADIC_DEDEKIND_HIGH_LEVELS=1 to enable levels >= 2"
        )


def _reduce(coeffs, p, n):
    """Reduce a coefficient list of any length modulo Phi_{p^n}, in place."""
    d = phi_prime_power(p, n)
    if n == 0:
        total = coeffs[0]
        for c in coeffs[1:]:
            total = total + c
        return [total]
    step = p ** (n - 1)
    # x^d = -sum_{i=0}^{p-2} x^(i*step)
    for top in range(len(coeffs) - 1, d - 1, -1):
        c = coeffs[top]
        if c is None:
            continue
        base = top - d
        for i in range(p - 1):
            idx = base + i * step
            coeffs[idx] = -c if coeffs[idx] is None else coeffs[idx] - c
        coeffs[top] = None
    return coeffs[:d]


class CycloElement:
    __slots__ = ("prime", "level", "coeffs")

    def __init__(self, prime, level, coeffs):
        d = phi_prime_power(prime, level)
        if len(coeffs) != d:
            raise PreconditionError(f"level {level} needs {d} coefficients, got {len(coeffs)}")
        for c in coeffs:
            if c.prime != prime:
                raise PreconditionError("coefficients must share the element's prime")
        self.prime = prime
        self.level = level
        self.coeffs = tuple(coeffs)

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_base(cls, x, prime, level, precision=None):
        """Embed an int, Fraction or PadicNumber in level ``level``."""
        _check_level(level)
        if not isinstance(x, PadicNumber):
            if precision is None:
                raise PreconditionError("precision is required to embed an exact rational")
            x = PadicNumber.from_rational(x, prime, precision)
        d = phi_prime_power(prime, level)
        zero = PadicNumber.zero(prime, x.abs_precision + max(x.valuation, 0) + x.precision)
        return cls(prime, level, [x] + [zero] * (d - 1))

    @classmethod
    def one(cls, prime, level, precision):
        return cls.from_base(Fraction(1), prime, level, precision)

    @classmethod
    def zeta_power(cls, prime, level, e, precision):
        """zeta^e reduced to the power basis, with exact coefficients at ``precision``."""
        _check_level(level)
        order = prime ** level
        e %= order
        if level == 0:
            return cls.one(prime, 0, precision)
        d = phi_prime_power(prime, level)
        zero = PadicNumber.zero(prime, precision)
        one = PadicNumber.from_rational(1, prime, precision)
        raw = [None] * max(e + 1, d)
        raw[e] = one
        red = _reduce(raw, prime, level)
        return cls(prime, level, [zero if c is None else c for c in red])

    def conjugate(self, j):
        """Image under the automorphism zeta -> zeta^j, gcd(j, p) = 1."""
        p, n = self.prime, self.level
        if n == 0:
            return self
        if gcd(j, p) != 1:
            raise PreconditionError(f"conjugation exponent {j} must be prime to {p}")
        order = p ** n
        raw = [None] * order
        for i, c in enumerate(self.coeffs):
            e = i * j % order
            raw[e] = c if raw[e] is None else raw[e] + c
        red = _reduce(raw, p, n)
        zero = PadicNumber.zero(p, self.abs_precision())
        return CycloElement(p, n, [zero if c is None else c for c in red])

    # -- inspection -----------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs)

    def abs_precision(self):
        return min(c.abs_precision for c in self.coeffs)

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def valuation(self):
        """Conservative lower bound for v_p: the minimum coefficient valuation.

        Zero coefficients count with their absolute precision, so a value
        indistinguishable from 0 reports its absolute precision.
        """
        return min(c.valuation for c in self.coeffs)

    def is_base(self):
        return all(c.is_zero() for c in self.coeffs[1:])

    def base_part(self):
        return self.coeffs[0]

    def to_json(self):
        return {"p": self.prime, "level": self.level, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["p"], obj["level"], [PadicNumber.from_json(c) for c in obj["coeffs"]])

    def __repr__(self):
        return f"CycloElement(p={self.prime}, level={self.level}, coeffs={list(self.coeffs)!r})"

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycloElement):
            if other.prime != self.prime or other.level != self.level:
                raise PreconditionError(
                    f"cyclotomic mismatch: ({self.prime}, level {self.level}) vs "
                    f"({other.prime}, level {other.level})"
                )
            return other
        if isinstance(other, (int, Fraction, PadicNumber)):
            if isinstance(other, PadicNumber):
                return CycloElement.from_base(other, self.prime, self.level)
            prec = max(self.abs_precision(), 1) + 1 + max(0, -self.valuation())
            return CycloElement.from_base(other, self.prime, self.level, prec)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloElement(self.prime, self.level, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloElement(self.prime, self.level, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloElement(self.prime, self.level, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def scale(self, c):
        """Multiply every coefficient by a base-field scalar."""
        return CycloElement(self.prime, self.level, [x * c for x in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, PadicNumber)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self.degree
        if d == 1:
            return CycloElement(self.prime, self.level, [self.coeffs[0] * other.coeffs[0]])
        raw = [None] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                t = a * b
                raw[i + j] = t if raw[i + j] is None else raw[i + j] + t
        return CycloElement(self.prime, self.level, _reduce(raw, self.prime, self.level))

    __rmul__ = __mul__

    def norm(self):
        """N(a) in Q_p: product of all Galois conjugates."""
        p, n = self.prime, self.level
        if n == 0:
            return self.coeffs[0]
        prod = self
        for j in range(2, p ** n):
            if j % p:
                prod = prod * self.conjugate(j)
        return prod.coeffs[0]

    def inverse(self):
        p, n = self.prime, self.level
        if n == 0:
            return CycloElement(p, 0, [1 / self.coeffs[0]])
        if self.is_zero():
            raise PrecisionError("inversion of a cyclotomic element indistinguishable from 0")
        cofactor = None
        for j in range(2, p ** n):
            if j % p:
                c = self.conjugate(j)
                cofactor = c if cofactor is None else cofactor * c
        nrm = (self * cofactor).coeffs[0]
        if nrm.is_zero():
            raise PrecisionError("norm indistinguishable from 0; raise the working precision")
        return cofactor.scale(1 / nrm)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, PadicNumber)):
            return CycloElement(self.prime, self.level, [x / other for x in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = CycloElement.one(self.prime, self.level, max(self.abs_precision(), 1))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

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


def cyclo_make_zeta(prime, level, precision):
    """A primitive p^level-th root of unity (the class of x in the power basis)."""
    check_prime(prime)
    if level == 0:
        raise PreconditionError("zeta needs level >= 1; level 0 is the base field (w = 1)")
    _check_level(level)
    return CycloElement.zeta_power(prime, level, 1, precision)


def cyclo_arith(a, b, op):
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise PreconditionError(f"unknown operation {op!r}")
