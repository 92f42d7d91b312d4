# -*- coding: utf-8 -*-
"""
Residues and Orders
Jacobi symbols, multiplicative orders and the generation test for <-1, q> in (Z/pZ)*
"""

from math import gcd
from typing import Callable, TypeVar

from .factorization import Factorization, factorize
from ..errors import InvariantViolation, NotAUnit, ParameterOutOfRange

T = TypeVar('T')


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1"""
    if n < 1 or n % 2 == 0:
        raise ParameterOutOfRange("n", n, f"Jacobi symbol needs an odd positive modulus, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def minimal_exponent(multiple: Factorization, holds: Callable[[int], bool]) -> int:
    """
    Least divisor e of multiple.value with holds(e)

    holds must be true exactly on the multiples of some divisor of multiple.value
    (the exponents annihilating a group element, or the periods of a permutation orbit).
    Exponents are stripped one prime at a time.
    """
    e = multiple.value
    if not holds(e):
        raise InvariantViolation("exponent annihilates the element", f"exponent {e}")
    for ell, k in multiple.factors:
        for _ in range(k):
            if holds(e // ell):
                e //= ell
            else:
                break
    return e


def element_order(element: T, power: Callable[[T, int], T], is_one: Callable[[T], bool],
                  group_order: Factorization) -> int:
    """Multiplicative order of element, given a multiple of it"""
    return minimal_exponent(group_order, lambda e: is_one(power(element, e)))


def order_mod(a: int, n: int, group_order: Factorization) -> int:
    """Least e > 0 with a**e == 1 mod n"""
    if gcd(a, n) != 1:
        raise NotAUnit(a, n)
    if n == 1:
        return 1
    a %= n
    return element_order(a, lambda x, e: pow(x, e, n), lambda x: x == 1, group_order)


def generated_by_minus_one_and_q(q: int, p: int) -> bool:
    """
    True iff <-1, q> = (Z/pZ)*

    (Z/pZ)* is cyclic of even order, so -1 lies in <q> exactly when ord_p(q) is even;
    the subgroup then has order ord_p(q), otherwise 2*ord_p(q).
    """
    if p < 3 or p % 2 == 0:
        raise ParameterOutOfRange("p", p, f"p must be an odd prime, got {p}")
    if q % p == 0:
        return False
    d = order_mod(q, p, factorize(p - 1))
    return d == p - 1 or (d % 2 == 1 and 2 * d == p - 1)


def cyclic_index(g: int, n: int) -> int:
    """Index of g in the additive cyclic group Z/n"""
    if n < 1:
        raise ParameterOutOfRange("n", n)
    if n == 1:
        return 1
    order = minimal_exponent(factorize(n), lambda e: (e * g) % n == 0)
    return n // order
