"""Truncated formal power series over an exact coefficient ring.

Coefficients may be :class:`fractions.Fraction`, :class:`PadicNumber` or
:class:`CycloElement`; the ring tag is derived from the first coefficient.
Binary operations truncate to the smaller of the two orders.
"""
from fractions import Fraction
from math import factorial


def _ring_of(c):
    name = type(c).__name__
    if name in ("int", "Fraction"):
        return "Rational"
    return name


class TruncatedSeries:
    """c_0 + c_1 t + ... + c_T t^T  (mod t^(T+1))."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [Fraction(c) if isinstance(c, int) else c for c in coeffs]
        if not coeffs:
            raise ValueError("a truncated series needs at least one coefficient")
        self.coeffs = tuple(coeffs)

    @property
    def order(self):
        return len(self.coeffs) - 1

    @property
    def ring(self):
        return _ring_of(self.coeffs[0])

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)!r})"

    def truncate(self, order):
        return TruncatedSeries(self.coeffs[: order + 1])

    def _other_coeffs(self, other):
        if isinstance(other, TruncatedSeries):
            return other.coeffs
        return None

    def __add__(self, other):
        oc = self._other_coeffs(other)
        if oc is None:
            return TruncatedSeries((self.coeffs[0] + other,) + self.coeffs[1:])
        n = min(len(self.coeffs), len(oc))
        return TruncatedSeries([a + b for a, b in zip(self.coeffs[:n], oc[:n])])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        oc = self._other_coeffs(other)
        if oc is None:
            return TruncatedSeries([c * other for c in self.coeffs])
        n = min(len(self.coeffs), len(oc))
        out = []
        for i in range(n):
            acc = self.coeffs[0] * oc[i]
            for j in range(1, i + 1):
                acc = acc + self.coeffs[j] * oc[i - j]
            out.append(acc)
        return TruncatedSeries(out)

    def __rmul__(self, other):
        return TruncatedSeries([other * c for c in self.coeffs])

    def __truediv__(self, other):
        oc = self._other_coeffs(other)
        if oc is None:
            return TruncatedSeries([c / other for c in self.coeffs])
        return self * other.reciprocal()

    def reciprocal(self):
        """1/f by the triangular recurrence; the constant term must be invertible."""
        c0 = self.coeffs[0]
        inv0 = 1 / c0
        out = [inv0]
        for n in range(1, len(self.coeffs)):
            acc = self.coeffs[1] * out[n - 1]
            for j in range(2, n + 1):
                acc = acc + self.coeffs[j] * out[n - j]
            out.append(-acc * inv0)
        return TruncatedSeries(out)

    def egf_values(self):
        """n! * c_n for every n (exponential generating function read-out)."""
        return [factorial(n) * c for n, c in enumerate(self.coeffs)]


def exp_series(order, scale=Fraction(1)):
    """Coefficients of exp(scale * t) through t^order."""
    out = []
    power = scale ** 0 if not isinstance(scale, int) else Fraction(1)
    for j in range(order + 1):
        out.append(power / factorial(j))
        power = power * scale
    return TruncatedSeries(out)
