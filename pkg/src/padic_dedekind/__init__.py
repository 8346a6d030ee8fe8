"""Exact Dedekind, Apostol and Hardy-Berndt sums, p-adic Volkenborn-type
integrals and twisted q-Bernoulli numbers."""
from ._kernels import BACKEND
from .classical_sums import CoprimePair, HardyKind, apostol_sum, dedekind_sum, hardy_sum, trig_series_partial
from .cyclo import CycloElement, cyclo_make_zeta
from .errors import PrecisionError, PreconditionError
from .exactnum import (
    bernoulli_fn,
    bernoulli_number,
    bernoulli_poly,
    euler_numbers,
    floor_g,
    frac,
    sawtooth,
    tan_series,
)
from .padic import PadicNumber, mult_order, padic_exp, padic_log, padic_pow, qnum
from .series import TruncatedSeries

__version__ = "0.1.0"
