# -*- coding: utf-8 -*-
"""
Class Numbers
h_p of Q(sqrt p) by inverting the sine-product formula, h(-p) by residue counting and by
enumerating reduced forms
"""

import logging
from dataclasses import dataclass
from math import gcd, isqrt
from typing import Tuple

import mpmath

from .units import FundamentalUnit, _check_prime_one_mod_four, fundamental_unit
from ..arith import jacobi
from ..constants import LOGGER_NAME, MAX_PRECISION_BITS, PRECISION_BITS, ROUNDING_CERTIFICATE
from ..errors import InvariantViolation, ParameterOutOfRange, PrecisionInsufficient

logger = logging.getLogger(LOGGER_NAME)


@dataclass(frozen=True)
class ClassData:
    p: int
    h_real: int
    h_imag: int
    m_count: int


def _real_class_number_estimate(p: int, unit: FundamentalUnit, precision_bits: int):
    # prod |1 - exp(2 pi i k^2/p)| = prod 2|sin(pi k^2/p)| = sqrt(p) eps^(-h)
    with mpmath.workprec(precision_bits):
        log_product = mpmath.fsum(
            mpmath.log(2 * abs(mpmath.sin(mpmath.pi * ((k * k) % p) / p)))
            for k in range(1, (p - 1) // 2 + 1))
        log_eps = mpmath.log((mpmath.mpf(unit.x) + unit.y * mpmath.sqrt(p)) / 2)
        return (mpmath.log(mpmath.sqrt(p)) - log_product) / log_eps


def class_number_real(p: int, precision_bits: int = PRECISION_BITS) -> int:
    """
    h_p at the given working precision

    Raises PrecisionInsufficient unless the estimate lies within 2**-10 of a positive
    integer. The result is checked odd.
    """
    _check_prime_one_mod_four(p)
    if precision_bits < 16:
        raise ParameterOutOfRange("precision_bits", precision_bits)
    unit = fundamental_unit(p)
    estimate = _real_class_number_estimate(p, unit, precision_bits)
    h = int(mpmath.nint(estimate))
    if h < 1 or abs(estimate - h) >= ROUNDING_CERTIFICATE:
        raise PrecisionInsufficient(p, precision_bits, mpmath.nstr(estimate, 20))
    if h % 2 == 0:
        raise InvariantViolation("h_p is odd", f"p={p}, h_p={h}")
    return h


def class_number_real_adaptive(p: int, precision_bits: int = PRECISION_BITS,
                               max_precision_bits: int = MAX_PRECISION_BITS) -> int:
    """h_p, doubling the working precision until the rounding certificate passes"""
    _check_prime_one_mod_four(p)
    # room for the full size of eps_p on top of the requested precision
    bits = max(precision_bits, 64 + fundamental_unit(p).x.bit_length())
    while True:
        try:
            return class_number_real(p, bits)
        except PrecisionInsufficient as e:
            if bits * 2 > max_precision_bits:
                raise
            logger.warning(f"{e}; retrying with {bits * 2} bits")
            bits *= 2


def class_number_imag(p: int) -> Tuple[int, int]:
    """(h(-p), m) with m = #{(p+3)/4 <= r <= (p-1)/2 : (r/p) = 1} and h(-p) = (p-1)/2 - 4m"""
    _check_prime_one_mod_four(p)
    m_count = sum(1 for r in range((p + 3) // 4, (p - 1) // 2 + 1) if jacobi(r, p) == 1)
    h_imag = (p - 1) // 2 - 4 * m_count
    if h_imag < 1:
        raise InvariantViolation("h(-p) >= 1", f"p={p}, m={m_count}")
    return h_imag, m_count


def class_number_imag_forms(p: int) -> int:
    """Number of reduced primitive forms Ax^2 + Bxy + Cy^2 of discriminant -4p"""
    _check_prime_one_mod_four(p)
    count = 0
    a = 1
    while 3 * a * a <= 4 * p:
        for b in range(-a + 2 - (a % 2), a + 1, 2):
            numerator = b * b + 4 * p
            if numerator % (4 * a):
                continue
            c = numerator // (4 * a)
            if c < a or (b < 0 and a == c):
                continue
            if gcd(gcd(a, b), c) == 1:
                count += 1
        a += 1
    return count


def class_data(p: int, precision_bits: int = PRECISION_BITS,
               max_precision_bits: int = MAX_PRECISION_BITS) -> ClassData:
    h_real = class_number_real_adaptive(p, precision_bits, max_precision_bits)
    h_imag, m_count = class_number_imag(p)
    if 4 * m_count != (p - 1) // 2 - h_imag:
        raise InvariantViolation("m = ((p-1)/2 - h(-p))/4", f"p={p}")
    return ClassData(p=p, h_real=h_real, h_imag=h_imag, m_count=m_count)
