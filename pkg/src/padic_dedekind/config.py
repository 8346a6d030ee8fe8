"""Process-wide tunables.

Values are read at call time, so tests and the CLI may override them.
"""
import os

#: Largest number of summands a truncated Riemann/alternating sum may use.
MAX_TRUNCATION = int(os.environ.get("PADIC_DEDEKIND_MAX_TRUNCATION", 10**8))

#: Cyclotomic levels n >= 2 are slow and lose ramified precision quickly.
ALLOW_HIGH_CYCLO_LEVELS = os.environ.get("PADIC_DEDEKIND_HIGH_LEVELS", "") == "1"
