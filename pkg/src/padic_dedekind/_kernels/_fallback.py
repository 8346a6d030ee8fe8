"""Pure-Python versions of the kernels in ``_core.pyx``; results are identical."""


def alternating_periodic_sum(values, count):
    m = len(values)
    total = 0
    r = 0
    sign = 1
    for _ in range(count):
        total += sign * values[r]
        sign = -sign
        r += 1
        if r == m:
            r = 0
    return total


def block_reciprocal_sum(amplitudes, offsets, period, num_blocks):
    total = 0.0
    block = 0.0
    pairs = list(zip(amplitudes, offsets))
    for j in range(num_blocks):
        shift = period * j
        block = 0.0
        for a, c in pairs:
            block += a / (shift + c)
        total += block
    return total, abs(block)


def residue_power_sums(base, exponent, count, classes, modulus):
    sums = [0] * classes
    qx = 1 % modulus
    r = 0
    for x in range(count):
        sums[r] = (sums[r] + qx * pow(x, exponent, modulus)) % modulus
        qx = qx * base % modulus
        r += 1
        if r == classes:
            r = 0
    return sums
