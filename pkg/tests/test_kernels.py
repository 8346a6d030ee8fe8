import random

import pytest

from padic_dedekind import _kernels
from padic_dedekind._kernels import _fallback

needs_ext = pytest.mark.skipif(_kernels.BACKEND != "cython", reason="compiled kernels not built")


def test_backend_name():
    assert _kernels.BACKEND in ("cython", "python")


@needs_ext
def test_alternating_sum_backends_agree():
    rng = random.Random(1)
    for _ in range(30):
        vals = [rng.randint(-10**6, 10**6) for _ in range(rng.randint(1, 40))]
        n = rng.randint(0, 5000)
        assert _kernels.alternating_periodic_sum(vals, n, backend="cython") == _fallback.alternating_periodic_sum(vals, n)


@needs_ext
def test_block_sum_backends_agree():
    amps, offs = [1.0, -1.0, 0.5, -0.5], [1.0, 2.0, 3.0, 4.0]
    c = _kernels.block_reciprocal_sum(amps, offs, 4.0, 1000, backend="cython")
    py = _fallback.block_reciprocal_sum(amps, offs, 4.0, 1000)
    assert c[0] == pytest.approx(py[0], rel=1e-12, abs=1e-15)
    assert c[1] == pytest.approx(py[1], rel=1e-12)


@needs_ext
@pytest.mark.parametrize("modulus", [5**10, 7**20, 3**39])
def test_residue_sums_backends_agree(modulus):
    args = (1 + 25, 3, 625, 5, modulus)
    assert _kernels.residue_power_sums(*args, backend="cython") == _fallback.residue_power_sums(*args)


def test_huge_modulus_falls_back():
    m = 5**40  # beyond 64 bits
    assert _kernels.residue_power_sums(6, 2, 125, 1, m) == _fallback.residue_power_sums(6, 2, 125, 1, m)


def test_large_values_fall_back():
    vals = [2**70, -(2**70)]
    assert _kernels.alternating_periodic_sum(vals, 7) == _fallback.alternating_periodic_sum(vals, 7)


def test_fallback_small_cases():
    assert _fallback.alternating_periodic_sum([1, 2, 3], 5) == 1 - 2 + 3 - 1 + 2
    assert _fallback.residue_power_sums(2, 1, 4, 2, 1000) == [0 + 4 * 2, 2 + 8 * 3]
