"""Named self-check suites run by ``padic-dedekind verify --suite NAME``.

Each check returns a dict ``{"check", "passed", "detail"}``. Random inputs come
from a fixed seed so runs are reproducible.
"""
import random
from fractions import Fraction
from math import comb, gcd

from .classical_sums import CoprimePair, HardyKind, admissible, dedekind_sum, hardy_sum, trig_series_partial
from .exactnum import bernoulli_numbers, euler_numbers, sawtooth, tan_series
from .padic import PadicNumber
from .twisted_bernoulli import TwistedBernoulliContext, oracle_loss, riemann_oracle, twisted_bernoulli_number
from .volkenborn import (
    PeriodicFn,
    Polynomial,
    fermionic_periodic_closed,
    fermionic_poly,
    fermionic_trunc,
    q_functional_residual,
    sine_fermionic_formal,
    volkenborn_poly,
)

SEED = 20240601


def _check(name, passed, detail=""):
    return {"check": name, "passed": bool(passed), "detail": detail}


def _random_poly(rng, degree):
    return Polynomial([Fraction(rng.randint(-20, 20), rng.randint(1, 9)) for _ in range(degree + 1)])


def exact_laws():
    rng = random.Random(SEED)
    out = []
    bad = 0
    for _ in range(200):
        while True:
            h, k = rng.randint(1, 500), rng.randint(1, 500)
            if gcd(h, k) == 1:
                break
        lhs = dedekind_sum(CoprimePair(h, k)) + dedekind_sum(CoprimePair(k, h))
        rhs = Fraction(-1, 4) + Fraction(h * h + k * k + 1, 12 * h * k)
        bad += lhs != rhs
    out.append(_check("dedekind-reciprocity-200-pairs", bad == 0, f"{bad} failures"))
    out.append(_check("dedekind-1-3", dedekind_sum(CoprimePair(1, 3)) == Fraction(1, 18)))
    B = bernoulli_numbers(51)
    rec = all(sum(comb(n + 1, k) * B[k] for k in range(n + 1)) == 0 for n in range(1, 51))
    out.append(_check("bernoulli-recurrence-n<=50", rec))
    e = euler_numbers(30)
    ser = [Fraction(0)] * 31
    for n in range(31):
        ser[n] = sum(comb(n, k) * e[k] for k in range(n + 1)) + e[n]
    out.append(_check("euler-series-identity", ser[0] == 2 and all(s == 0 for s in ser[1:])))
    xs = [Fraction(rng.randint(-100, 100), rng.randint(1, 30)) for _ in range(100)]
    out.append(_check("sawtooth-odd-and-periodic", all(sawtooth(-x) == -sawtooth(x) and sawtooth(x + 1) == sawtooth(x) for x in xs)))
    return out


def functional_equations():
    rng = random.Random(SEED + 1)
    out = []
    ok = True
    for _ in range(50):
        f = _random_poly(rng, rng.randint(0, 4))
        ok &= volkenborn_poly(f.shift(1)) - volkenborn_poly(f) == f.derivative_at_zero()
    out.append(_check("bosonic-shift-equation", ok))
    ok = True
    for _ in range(50):
        f = _random_poly(rng, rng.randint(0, 4))
        ok &= fermionic_poly(f.shift(1)) + fermionic_poly(f) == 2 * f(0)
    out.append(_check("fermionic-shift-equation", ok))
    worst = None
    for p in (3, 5, 7):
        for N in range(1, 6):
            q = PadicNumber.from_rational(1 + p, p, 40)
            for n in range(4):
                mono = Polynomial([0] * n + [1])
                r = q_functional_residual(mono, p, N, q, precision=N + 8)
                slack = r.valuation - (N - 2)
                worst = slack if worst is None else min(worst, slack)
    out.append(_check("q-shift-equation-residual", worst >= 0, f"min slack over p,N,n: {worst}"))
    return out


def series_identities():
    out = []
    out.append(_check("sine-vs-tangent-b^13", list(sine_fermionic_formal(13)) == list(-tan_series(13))))
    worst = 0.0
    for k in range(1, 13):
        for h in range(1, 2 * k):
            if gcd(h, k) != 1:
                continue
            for kind in HardyKind:
                if admissible(kind, h, k):
                    v, _ = trig_series_partial(kind, CoprimePair(h, k), 10**4)
                    worst = max(worst, abs(v - float(hardy_sum(kind, CoprimePair(h, k)))))
    out.append(_check("hardy-series-vs-finite-k<=12", worst < 1e-6, f"max error {worst:.3e}"))
    return out


def oracle_agreement():
    out = []
    bad = []
    for p in (3, 5):
        for level in (0, 1):
            ctx = TwistedBernoulliContext.build(p, 1 + p, level, 6, 12)
            for n in range(7):
                b = twisted_bernoulli_number(ctx, n)
                for N in range(1, 5):
                    v = (riemann_oracle(ctx, n, N) - b).valuation()
                    if v < N - oracle_loss(ctx, n):
                        bad.append((p, level, n, N, v))
    out.append(_check("riemann-oracle-vs-series", not bad, f"failures: {bad}"))
    bad = 0
    for k in range(1, 9):
        f = PeriodicFn([sawtooth(Fraction(x, k)) for x in range(k)])
        for p in (3, 5, 7):
            if k % p == 0:
                continue
            rep = fermionic_periodic_closed(f, p)
            for N in range(1, 5):
                lhs = fermionic_trunc(f, p, N) - rep.branch_value(N, p)
                bad += lhs != rep.block_sum * p**N / rep.modulus
    out.append(_check("fermionic-exactness-identity", bad == 0, f"{bad} failures"))
    return out


SUITES = {
    "exact-laws": exact_laws,
    "functional-equations": functional_equations,
    "series-identities": series_identities,
    "oracle-agreement": oracle_agreement,
}
