"""Twisted p-adic q-Dedekind sums s_w(h,k,m,q) = sum_{j<k} (j/k) bbar*_{m,w}(jh/k, q)."""
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .errors import PreconditionError
from .exactnum import frac
from .twisted_bernoulli import TwistedBernoulliContext, twisted_bernoulli_bar, twisted_bernoulli_number


@dataclass(frozen=True)
class TwistedDedekindParams:
    h: int
    k: int
    m: int
    ctx: TwistedBernoulliContext

    def __post_init__(self):
        if self.k < 1 or gcd(self.h, self.k) != 1:
            raise PreconditionError(f"need coprime h, k with k >= 1; got h={self.h}, k={self.k}")
        if self.k % self.ctx.p:
            raise PreconditionError(
                f"the twisted Dedekind sum needs an odd prime p dividing k; p={self.ctx.p} does not divide k={self.k}"
            )
        if not isinstance(self.m, int) or self.m < 0:
            raise PreconditionError(f"m must be a non-negative integer, got {self.m!r}")
        if self.m > self.ctx.T:
            raise PreconditionError(f"m={self.m} exceeds the series order T={self.ctx.T}")


def sum_direct(params):
    """sum_j (j/k) bbar*_m(jh/k), each bbar* read off F(t) e^({jh/k} t)."""
    h, k, m, ctx = params.h, params.k, params.m, params.ctx
    total = None
    for j in range(1, k):
        term = twisted_bernoulli_bar(ctx, m, Fraction(j * h, k), method="series").scale(Fraction(j, k))
        total = term if total is None else total + term
    return total if total is not None else twisted_bernoulli_number(ctx, m).scale(0)


def sum_binomial(params):
    """sum_j (j/k) sum_i C(m,i) {jh/k}^(m-i) b*_i."""
    h, k, m, ctx = params.h, params.k, params.m, params.ctx
    b = [twisted_bernoulli_number(ctx, i) for i in range(m + 1)]
    total = b[m].scale(0)
    for j in range(1, k):
        z = frac(Fraction(j * h, k))
        for i in range(m + 1):
            total = total + b[i].scale(Fraction(j, k) * comb(m, i) * z ** (m - i))
    return total


def twisted_dedekind_sum(params):
    """Both displayed forms are evaluated; they must agree at the tracked precision."""
    direct = sum_direct(params)
    expanded = sum_binomial(params)
    if not (direct - expanded).is_zero():
        raise ArithmeticError(
            f"direct and binomial forms of s_w({params.h},{params.k},{params.m}) disagree"
        )
    return direct
