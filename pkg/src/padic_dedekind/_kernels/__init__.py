"""Inner loops, compiled when the Cython extension is built.

``BACKEND`` is ``"cython"`` when ``_core`` imported, ``"python"`` otherwise.
Set ``PADIC_DEDEKIND_PURE=1`` to force the pure-Python fallback.
"""
import os

from . import _fallback

if os.environ.get("PADIC_DEDEKIND_PURE", "") == "1":
    _core = None
else:
    try:
        from . import _core
    except ImportError:  # extension not built
        _core = None

BACKEND = "cython" if _core is not None else "python"

_INT64_LIMIT = 2**62
_MOD_LIMIT = 2**63


def alternating_periodic_sum(values, count, backend=None):
    """sum_{x < count} (-1)^x values[x mod len(values)] for integer values."""
    impl = _pick(backend)
    if impl is _core and max((abs(v) for v in values), default=0) * max(count, 1) >= _INT64_LIMIT:
        impl = _fallback
    return impl.alternating_periodic_sum(list(values), count)


def block_reciprocal_sum(amplitudes, offsets, period, num_blocks, backend=None):
    """sum_{j < num_blocks} sum_r amplitudes[r] / (period*j + offsets[r]).

    Returns ``(total, |last block|)``.
    """
    impl = _pick(backend)
    return impl.block_reciprocal_sum(
        [float(a) for a in amplitudes], [float(c) for c in offsets], float(period), num_blocks
    )


def residue_power_sums(base, exponent, count, classes, modulus, backend=None):
    """S_r = sum_{x < count, x = r (mod classes)} base^x * x^exponent  (mod modulus), r < classes."""
    impl = _pick(backend)
    if impl is _core and modulus >= _MOD_LIMIT:
        impl = _fallback
    return impl.residue_power_sums(base % modulus, exponent, count, classes, modulus)


def _pick(backend):
    if backend is None:
        return _core if _core is not None else _fallback
    if backend == "python":
        return _fallback
    if backend == "cython":
        if _core is None:
            raise RuntimeError("the compiled kernel is not available")
        return _core
    raise ValueError(f"unknown backend {backend!r}")
