from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles
from padic_dedekind.errors import PreconditionError
from padic_dedekind.exactnum import bernoulli_number, euler_numbers, sawtooth, tan_series
from padic_dedekind.padic import PadicNumber
from padic_dedekind.volkenborn import (
    PeriodicFn,
    Polynomial,
    fermionic_periodic_closed,
    fermionic_poly,
    fermionic_trunc,
    q_functional_residual,
    sine_fermionic_formal,
    volkenborn_poly,
    volkenborn_q_trunc,
)


def third_saw():
    return PeriodicFn([sawtooth(Fraction(x, 3)) for x in range(3)])


def test_third_sawtooth_p5_frozen():
    f = third_saw()
    assert fermionic_trunc(f, 5, 1) == Fraction(1, 6)
    rep = fermionic_periodic_closed(f, 5)
    assert rep.modulus == 6 and rep.block_sum == 0
    assert rep.branch_values == {1: Fraction(0), 5: Fraction(1, 6)}
    assert not rep.branch_independent


def test_trunc_matches_brute_force():
    for k in range(1, 9):
        f = PeriodicFn([oracles.saw(Fraction(3 * x, k)) for x in range(k)])
        for p in (3, 5, 7):
            for N in (1, 2, 3):
                want = sum(((-1) ** x * oracles.saw(Fraction(3 * x, k)) for x in range(p**N)), Fraction(0))
                assert fermionic_trunc(f, p, N) == want


def test_monomial_closed_forms():
    e = euler_numbers(10)
    for n in range(11):
        mono = Polynomial([0] * n + [1])
        assert volkenborn_poly(mono) == bernoulli_number(n)
        assert fermionic_poly(mono) == e[n]


def test_sine_against_tangent():
    assert list(sine_fermionic_formal(13)) == list(-tan_series(13))
    with pytest.raises(PreconditionError):
        sine_fermionic_formal(0)


def test_q_integral_tends_to_bernoulli():
    p = 5
    q = PadicNumber.from_rational(1 + p**6, p, 40)
    # as q -> 1 the q-integral of x approaches B_1 = -1/2 (up to O(q - 1))
    v = volkenborn_q_trunc(Polynomial([0, 1]), p, 4, q, 12)
    assert (v - Fraction(-1, 2)).valuation >= 3


def test_q_functional_equation():
    for p in (3, 5, 7):
        q = PadicNumber.from_rational(1 + p, p, 40)
        for N in range(1, 5):
            r = q_functional_residual(Polynomial([1, 2, 3]), p, N, q, N + 8)
            assert r.valuation >= N - 2


def test_closed_form_needs_coprime_modulus():
    with pytest.raises(PreconditionError):
        fermionic_periodic_closed(third_saw(), 3)


def test_truncation_bound():
    with pytest.raises(PreconditionError):
        fermionic_trunc(third_saw(), 7, 30)


polys = st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=9), min_size=1, max_size=5).map(Polynomial)


@given(polys)
def test_bosonic_shift(f):
    assert volkenborn_poly(f.shift(1)) - volkenborn_poly(f) == f.derivative_at_zero()


@given(polys)
def test_fermionic_shift(f):
    assert fermionic_poly(f.shift(1)) + fermionic_poly(f) == 2 * f(0)


@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7), min_size=1, max_size=8),
       st.sampled_from([3, 5, 7]), st.integers(1, 4))
def test_exactness_identity(vals, p, N):
    f = PeriodicFn(vals)
    M = f.period * 2 // (2 if f.period % 2 == 0 else 1)
    if M % p == 0:
        return
    rep = fermionic_periodic_closed(f, p)
    assert fermionic_trunc(f, p, N) - rep.branch_value(N, p) == rep.block_sum * p**N / rep.modulus
