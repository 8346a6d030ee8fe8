"""Dedekind, Apostol and Hardy-Berndt sums.

The Hardy-Berndt sums are evaluated exactly from their finite forms

    S(h,k)   = sum_{j=1}^{k-1} (-1)^(j+1+[hj/k])
    S_2(h,k) = sum_{j=1}^{k-1} (-1)^j ((j/k)) ((hj/k))
    S_3(h,k) = sum_{j=1}^{k-1} (-1)^j ((hj/k))
    S_5(h,k) = sum_{j=1}^{k-1} (-1)^(j+[hj/k]) ((j/k))

(Berndt-Goldberg's S, s_2, s_3, s_5). Their tangent-series representations
are summed in floating point by :func:`trig_series_partial` as an
independent check.
"""
import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import _kernels
from .errors import PreconditionError
from .exactnum import bernoulli_fn, floor_g, sawtooth


class HardyKind(enum.Enum):
    S = "S"
    S2 = "S2"
    S3 = "S3"
    S5 = "S5"

    @classmethod
    def parse(cls, text):
        try:
            return cls(str(text).upper())
        except ValueError:
            raise PreconditionError(f"unknown Hardy sum kind {text!r}; expected one of S, S2, S3, S5") from None


HYPOTHESIS = {
    HardyKind.S: "If h+k is odd",
    HardyKind.S2: "If h is odd and k is even",
    HardyKind.S3: "If k is odd",
    HardyKind.S5: "If h and k are odd",
}


@dataclass(frozen=True)
class CoprimePair:
    h: int
    k: int

    def __post_init__(self):
        if not isinstance(self.h, int) or not isinstance(self.k, int):
            raise PreconditionError("h and k must be integers")
        if self.k < 1:
            raise PreconditionError(f"k must be positive, got k={self.k}")
        if gcd(self.h, self.k) != 1:
            raise PreconditionError(f"h and k must be coprime, got gcd({self.h}, {self.k}) = {gcd(self.h, self.k)}")


def _pair(pair_or_h, k=None):
    if isinstance(pair_or_h, CoprimePair):
        return pair_or_h
    return CoprimePair(pair_or_h, k)


def admissible(kind, h, k):
    if kind is HardyKind.S:
        return (h + k) % 2 == 1
    if kind is HardyKind.S2:
        return h % 2 == 1 and k % 2 == 0
    if kind is HardyKind.S3:
        return k % 2 == 1
    return h % 2 == 1 and k % 2 == 1


def check_hypothesis(kind, pair):
    if not admissible(kind, pair.h, pair.k):
        raise PreconditionError(
            f"{kind.value}({pair.h},{pair.k}) requires the hypothesis "
            f"\"{HYPOTHESIS[kind]}\" (got h={pair.h}, k={pair.k})"
        )


def dedekind_sum(pair, k=None):
    """s(h,k) = sum_{a=1}^{k-1} ((a/k)) ((ha/k))."""
    pr = _pair(pair, k)
    h, k = pr.h, pr.k
    total = Fraction(0)
    for a in range(1, k):
        total += sawtooth(Fraction(a, k)) * sawtooth(Fraction(h * a, k))
    return total


def apostol_sum(pair, k_or_n, n=None):
    """s(h,k,n) = sum_{a=1}^{k-1} (a/k) Bbar_n(ha/k).

    Call as ``apostol_sum(CoprimePair(h, k), n)`` or ``apostol_sum(h, k, n)``.
    """
    if isinstance(pair, CoprimePair):
        pr, n = pair, k_or_n
    else:
        pr = CoprimePair(pair, k_or_n)
    if not isinstance(n, int) or n < 0:
        raise PreconditionError(f"order n must be a non-negative integer, got {n!r}")
    h, k = pr.h, pr.k
    total = Fraction(0)
    for a in range(1, k):
        total += Fraction(a, k) * bernoulli_fn(n, Fraction(h * a, k))
    return total


def _sign(e):
    return -1 if e % 2 else 1


def hardy_sum(kind, pair, k=None):
    kind = HardyKind.parse(kind) if not isinstance(kind, HardyKind) else kind
    pr = _pair(pair, k)
    check_hypothesis(kind, pr)
    h, k = pr.h, pr.k
    total = Fraction(0)
    for j in range(1, k):
        fl = floor_g(Fraction(h * j, k))
        if kind is HardyKind.S:
            total += _sign(j + 1 + fl)
        elif kind is HardyKind.S2:
            total += _sign(j) * sawtooth(Fraction(j, k)) * sawtooth(Fraction(h * j, k))
        elif kind is HardyKind.S3:
            total += _sign(j) * sawtooth(Fraction(h * j, k))
        else:
            total += _sign(j + fl) * sawtooth(Fraction(j, k))
    return total


# -- tangent series ------------------------------------------------------

_PREFACTOR = {
    HardyKind.S2: -1 / (2 * math.pi),
    HardyKind.S3: 1 / math.pi,
    HardyKind.S5: 2 / math.pi,
    HardyKind.S: 4 / math.pi,
}


def _tan_pi(x):
    """tan(pi x) for rational x; exact 0 at integers, None at poles."""
    x = x - math.floor(x)  # Fraction floor keeps this exact
    if x == 0:
        return 0.0
    if x == Fraction(1, 2):
        return None
    if x > Fraction(1, 2):
        return -math.tan(math.pi * float(1 - x))
    return math.tan(math.pi * float(x))


def series_terms(kind, pair):
    """One period of the series as (amplitude, offset, period) data.

    The series is sum_{j>=0} sum_r amp_r / (period*j + offset_r); pole
    terms are dropped according to the series' side condition.
    """
    h, k = pair.h, pair.k
    amps, offs = [], []
    if kind in (HardyKind.S2, HardyKind.S3):
        # sum_n tan(pi h n / k) / n, n = r + k j
        for r in range(1, k + 1):
            if kind is HardyKind.S2 and (2 * r) % k == 0:
                continue
            t = _tan_pi(Fraction(h * r, k))
            if t is None:
                raise AssertionError(f"unexpected tangent pole at n={r} for {kind.value}({h},{k})")
            amps.append(t)
            offs.append(r)
        return amps, offs, k
    # sum_n tan(pi h (2n-1) / 2k) / (2n-1); odd m = 2n-1 has period 2k
    for r in range(1, k + 1):
        m = 2 * r - 1
        if kind is HardyKind.S5 and m % k == 0:
            continue
        t = _tan_pi(Fraction(h * m, 2 * k))
        if t is None:
            raise AssertionError(f"unexpected tangent pole at 2n-1={m} for {kind.value}({h},{k})")
        amps.append(t)
        offs.append(m)
    return amps, offs, 2 * k


def _tail(amps, offs, period, num_blocks):
    """Analytic remainder sum_{j>=N} sum_r a_r/(P j + c_r) for zero-mean a_r.

    Equals -(1/P) sum_r a_r psi(N + c_r/P); psi is expanded asymptotically
    with the log N term cancelled by sum a_r = 0.
    """
    N = float(num_blocks)
    total = 0.0
    for a, c in zip(amps, offs):
        x = N + c / period
        psi_rest = math.log1p(c / (period * N)) - 1 / (2 * x) - 1 / (12 * x * x) + 1 / (120 * x**4)
        total += a * psi_rest
    return -total / period


def trig_series_partial(kind, pair, num_periods, k=None, tail_correction=True):
    """Period-grouped float sum of the tangent series for a Hardy sum.

    Returns ``(value, last_block_magnitude)``. With ``tail_correction`` the
    value includes the asymptotic remainder of the unsummed blocks, which
    turns the O(1/N) truncation error of the grouped sum into O(1/N^5).
    """
    kind = HardyKind.parse(kind) if not isinstance(kind, HardyKind) else kind
    pr = _pair(pair, k)
    check_hypothesis(kind, pr)
    if not isinstance(num_periods, int) or num_periods < 1:
        raise PreconditionError(f"num_periods must be a positive integer, got {num_periods!r}")
    amps, offs, period = series_terms(kind, pr)
    if not amps or all(a == 0.0 for a in amps):
        return 0.0, 0.0
    mean = sum(amps)
    if abs(mean) > 1e-9 * max(1.0, max(abs(a) for a in amps)):
        raise AssertionError(f"period sum {mean} is not zero; the series would diverge")
    total, last = _kernels.block_reciprocal_sum(amps, offs, period, num_periods)
    if tail_correction:
        total += _tail(amps, offs, period, num_periods)
    return _PREFACTOR[kind] * total, abs(_PREFACTOR[kind]) * last
