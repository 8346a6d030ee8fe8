# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops; see ``_fallback.py`` for the reference semantics."""
from libc.stdlib cimport malloc, free

cdef extern from *:
    """
    typedef unsigned __int128 pd_u128;
    """
    # 128-bit in C; declared narrower only so Cython accepts the name
    ctypedef unsigned long long u128 "pd_u128"

ctypedef unsigned long long u64
ctypedef long long i64


cdef inline u64 mulmod(u64 a, u64 b, u64 m) nogil:
    return <u64>((<u128>a * <u128>b) % m)


cdef inline u64 powmod(u64 b, long e, u64 m) nogil:
    cdef u64 r = 1 % m
    while e > 0:
        if e & 1:
            r = mulmod(r, b, m)
        b = mulmod(b, b, m)
        e >>= 1
    return r


def alternating_periodic_sum(list values, long long count):
    cdef Py_ssize_t m = len(values)
    cdef i64 *v = <i64 *> malloc(m * sizeof(i64))
    cdef Py_ssize_t i, r = 0
    cdef i64 total = 0, sign = 1
    cdef long long x
    if v == NULL:
        raise MemoryError()
    try:
        for i in range(m):
            v[i] = values[i]
        with nogil:
            for x in range(count):
                total += sign * v[r]
                sign = -sign
                r += 1
                if r == m:
                    r = 0
    finally:
        free(v)
    return total


def block_reciprocal_sum(list amplitudes, list offsets, double period, long num_blocks):
    cdef Py_ssize_t n = len(amplitudes), i
    cdef double *a = <double *> malloc(n * sizeof(double))
    cdef double *c = <double *> malloc(n * sizeof(double))
    cdef double total = 0.0, block = 0.0, shift
    cdef long j
    if a == NULL or c == NULL:
        free(a)
        free(c)
        raise MemoryError()
    try:
        for i in range(n):
            a[i] = amplitudes[i]
            c[i] = offsets[i]
        with nogil:
            for j in range(num_blocks):
                shift = period * j
                block = 0.0
                for i in range(n):
                    block += a[i] / (shift + c[i])
                total += block
    finally:
        free(a)
        free(c)
    return total, abs(block)


def residue_power_sums(base, long exponent, long long count, long classes, modulus):
    cdef u64 m = modulus
    cdef u64 b = base % modulus
    cdef u64 *s = <u64 *> malloc(classes * sizeof(u64))
    cdef u64 qx = 1 % m, t
    cdef long long x
    cdef long r = 0, i
    if s == NULL:
        raise MemoryError()
    try:
        for i in range(classes):
            s[i] = 0
        with nogil:
            for x in range(count):
                t = mulmod(qx, powmod(<u64>x % m, exponent, m), m)
                s[r] = (s[r] + t) % m
                qx = mulmod(qx, b, m)
                r += 1
                if r == classes:
                    r = 0
        return [s[i] for i in range(classes)]
    finally:
        free(s)
