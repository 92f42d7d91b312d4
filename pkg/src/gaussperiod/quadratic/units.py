# -*- coding: utf-8 -*-
"""
Fundamental Units
Continued fraction of (1 + sqrt p)/2 and the least solution of x^2 - p y^2 = -4
"""

import logging
from dataclasses import dataclass
from math import isqrt
from typing import Optional, Tuple

import mpmath

from ..arith import is_prime
from ..constants import LOGGER_NAME
from ..errors import InvariantViolation, ParameterOutOfRange

logger = logging.getLogger(LOGGER_NAME)


@dataclass(frozen=True)
class FundamentalUnit:
    """eps_p = (x + y sqrt p)/2 with x^2 - p y^2 = -4"""
    p: int
    x: int
    y: int

    @property
    def norm(self) -> int:
        return (self.x * self.x - self.p * self.y * self.y) // 4

    def log(self) -> float:
        """log eps_p as a float"""
        return float(mpmath.log((mpmath.mpf(self.x) + self.y * mpmath.sqrt(self.p)) / 2))


def _check_prime_one_mod_four(p: int):
    if p % 4 != 1 or not is_prime(p):
        raise ParameterOutOfRange("p", p, f"p must be a prime = 1 mod 4, got {p}")


def _convergents(p: int, modulus: Optional[int]) -> Tuple[int, int]:
    """
    Run the continued fraction of omega = (1 + sqrt p)/2 until the first unit

    The complete quotients are (P + sqrt p)/Q with exact small integers P, Q; convergents
    h/g satisfy (2h - g)^2 - p g^2 = (-1)^(k+1) * 2 * Q_{k+1}, so the first step with
    Q_{k+1} = 2 yields the least solution of x^2 - p y^2 = +-4. Convergents are carried
    modulo `modulus` when one is given.
    """
    s = isqrt(p)
    P, Q = 1, 2
    h2, h1 = 0, 1
    g2, g1 = 1, 0
    step = 0
    limit = 8 * (s + 2) * (p.bit_length() + 2)
    while step <= limit:
        if Q <= 0:
            raise InvariantViolation("complete quotients stay reduced", f"p={p}, Q={Q}")
        a = (P + s) // Q
        h, g = a * h1 + h2, a * g1 + g2
        if modulus is not None:
            h, g = h % modulus, g % modulus
        h2, h1, g2, g1 = h1, h, g1, g
        P = a * Q - P
        numerator = p - P * P
        if numerator % Q:
            raise InvariantViolation("Q divides p - P^2", f"p={p}, P={P}, Q={Q}")
        Q = numerator // Q
        if Q == 2:
            if step % 2:
                raise InvariantViolation("N(eps_p) = -1", f"p={p} has a unit of norm +1 first")
            return h, g
        step += 1
    raise InvariantViolation("continued fraction period is finite", f"p={p}, steps={step}")


def fundamental_unit(p: int) -> FundamentalUnit:
    """Least positive solution (x, y) of x^2 - p y^2 = -4"""
    _check_prime_one_mod_four(p)
    h, g = _convergents(p, None)
    x, y = 2 * h - g, g
    if x * x - p * y * y != -4 or x <= 0 or y <= 0:
        raise InvariantViolation("x^2 - p y^2 = -4", f"p={p}, x={x}, y={y}")
    return FundamentalUnit(p=p, x=x, y=y)


def fundamental_unit_mod(p: int, m: int) -> Tuple[int, int]:
    """(x mod m, y mod m) without building the full-size solution"""
    _check_prime_one_mod_four(p)
    if m < 1:
        raise ParameterOutOfRange("m", m)
    h, g = _convergents(p, m)
    return (2 * h - g) % m, g % m


def unit_power(p: int, x: int, y: int, e: int) -> Tuple[int, int]:
    """
    ((x + y sqrt p)/2)**e = (u + v sqrt p)/2 exactly

    Negative exponents are allowed for units (norm +-1).
    """
    if (x - y) % 2:
        raise InvariantViolation("x = y mod 2", f"x={x}, y={y}")
    if e < 0:
        norm4 = x * x - p * y * y
        if norm4 not in (4, -4):
            raise ParameterOutOfRange("e", e, "negative powers need a unit")
        sign = norm4 // 4
        x, y, e = x * sign, -y * sign, -e

    def mul(a: Tuple[int, int], b: Tuple[int, int]) -> Tuple[int, int]:
        r2 = a[0] * b[0] + p * a[1] * b[1]
        s2 = a[0] * b[1] + a[1] * b[0]
        if r2 % 2 or s2 % 2:
            raise InvariantViolation("product stays in Z[(1 + sqrt p)/2]", f"p={p}")
        return r2 // 2, s2 // 2

    result = (2, 0)
    base = (x, y)
    while e:
        if e & 1:
            result = mul(result, base)
        base = mul(base, base)
        e >>= 1
    return result


def brute_force_unit(p: int, y_max: int) -> Optional[Tuple[int, int, int]]:
    """Least y <= y_max with x^2 - p y^2 = +-4, as (x, y, norm); None if absent"""
    for y in range(1, y_max + 1):
        for norm4 in (-4, 4):
            square = p * y * y + norm4
            x = isqrt(square)
            if x > 0 and x * x == square:
                return x, y, norm4 // 4
    return None
