from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from padic_dedekind.cyclo import CycloElement, cyclo_make_zeta, phi_prime_power
from padic_dedekind.errors import PreconditionError
from padic_dedekind.padic import PadicNumber

PREC = 20


def elem(p, ints):
    return CycloElement(p, 1, [PadicNumber.from_rational(c, p, PREC) for c in ints])


def test_zeta_order():
    for p in (3, 5, 7):
        z = cyclo_make_zeta(p, 1, PREC)
        assert not (z - 1).is_zero()
        assert (z**p - 1).is_zero()
        total = sum((z**i for i in range(1, p)), z**0)
        assert total.is_zero()


def test_degree():
    assert phi_prime_power(5, 1) == 4
    assert phi_prime_power(3, 2) == 6
    assert phi_prime_power(7, 0) == 1


def test_level_gate():
    with pytest.raises(PreconditionError):
        cyclo_make_zeta(5, 2, PREC)
    with pytest.raises(PreconditionError):
        cyclo_make_zeta(5, 0, PREC)


def test_norm_of_one_minus_zeta():
    for p in (3, 5, 7):
        z = cyclo_make_zeta(p, 1, PREC)
        assert (1 - z).norm() == PadicNumber.from_rational(p, p, PREC)


def test_json_round_trip():
    a = elem(5, [1, Fraction(2, 3), -4, 7])
    assert CycloElement.from_json(a.to_json()) == a


ints = st.lists(st.integers(-50, 50), min_size=4, max_size=4)


@given(ints, ints)
def test_ring_laws(a, b):
    x, y = elem(5, a), elem(5, b)
    assert x * y == y * x
    assert (x + y) - y == x


@given(ints)
def test_inverse(a):
    x = elem(5, a)
    if x.valuation() > 0 or x.norm().is_zero():
        return
    assert (x * x.inverse() - 1).is_zero()
