# -*- coding: utf-8 -*-
"""
Residue Rings of O_K
O_K/mO_K = (Z/m)[X]/(X^2 - X + (1-p)/4) for K = Q(sqrt p), p = 1 mod 4
"""

import logging
from dataclasses import dataclass

from .units import fundamental_unit_mod
from ..arith import element_order, factorize, generated_by_minus_one_and_q, is_prime, jacobi
from ..constants import LOGGER_NAME
from ..errors import (
    HypothesisViolated, InvariantViolation, NotAUnit, NotInert, ParameterOutOfRange,
)

logger = logging.getLogger(LOGGER_NAME)

P_FIVE_MOD_EIGHT = "p = 5 mod 8"


@dataclass(frozen=True)
class QuadRing:
    """
    (Z/m)[X]/(X^2 - X + c) with c = (1-p)/4 mod m

    p_class is p mod m, except for m = 2 where it is p mod 8 (the constant needs it).
    """
    modulus: int
    p_class: int
    constant: int

    @classmethod
    def for_prime(cls, p: int, m: int) -> 'QuadRing':
        """Ring attached to an actual prime p = 1 mod 4"""
        if p % 4 != 1:
            raise ParameterOutOfRange("p", p, f"p must be 1 mod 4, got {p}")
        if m == 2 and p % 8 != 5:
            raise NotInert(p, 2)
        p_class = p % 8 if m == 2 else p % m
        return cls(modulus=m, p_class=p_class, constant=((1 - p) // 4) % m)

    @classmethod
    def for_residue(cls, p_class: int, q: int) -> 'QuadRing':
        """Ring attached to a residue class of p modulo a prime q (mod 8 when q = 2)"""
        if q == 2:
            if p_class % 8 != 5:
                raise NotInert(p_class, 2)
            return cls(modulus=2, p_class=p_class % 8, constant=1)
        if q % 2 == 0:
            raise ParameterOutOfRange("q", q, "even moduli other than 2 need the prime itself")
        constant = (1 - p_class) * pow(4, -1, q) % q
        return cls(modulus=q, p_class=p_class % q, constant=constant)

    def element(self, a: int, b: int) -> 'QuadElem':
        return QuadElem(self, a % self.modulus, b % self.modulus)

    def one(self) -> 'QuadElem':
        return QuadElem(self, 1 % self.modulus, 0)

    def elements(self):
        m = self.modulus
        for a in range(m):
            for b in range(m):
                yield QuadElem(self, a, b)


@dataclass(frozen=True)
class QuadElem:
    """a + bX in a QuadRing"""
    ring: QuadRing
    a: int
    b: int

    def __mul__(self, other: 'QuadElem') -> 'QuadElem':
        if self.ring != other.ring:
            raise ParameterOutOfRange("ring", other.ring, "operands live in different rings")
        m, c = self.ring.modulus, self.ring.constant
        # X^2 = X - c
        a = (self.a * other.a - self.b * other.b * c) % m
        b = (self.a * other.b + self.b * other.a + self.b * other.b) % m
        return QuadElem(self.ring, a, b)

    def __pow__(self, e: int) -> 'QuadElem':
        if e < 0:
            raise ParameterOutOfRange("e", e, "negative exponents are not supported")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def norm(self) -> int:
        """N(a + bX) = a^2 + ab + c b^2 mod m"""
        c, m = self.ring.constant, self.ring.modulus
        return (self.a * self.a + self.a * self.b + c * self.b * self.b) % m

    def is_one(self) -> bool:
        return self.a == 1 % self.ring.modulus and self.b == 0

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __repr__(self) -> str:
        return f"{self.a} + {self.b}X (mod {self.ring.modulus})"


def is_inert(p: int, q: int) -> bool:
    """Whether the prime q stays prime in Q(sqrt p), p = 1 mod 4"""
    if q == 2:
        return p % 8 == 5
    return p % q != 0 and jacobi(p, q) == -1


def unit_mod_q(p: int, q: int) -> QuadElem:
    """
    eps_p mod q as (x - y)/2 + yX

    The convergents run modulo 2q so that (x - y)/2 is an exact halving of an even residue.
    """
    if not is_prime(q):
        raise ParameterOutOfRange("q", q, f"q must be prime, got {q}")
    if not is_inert(p, q):
        raise NotInert(p, q)
    x, y = fundamental_unit_mod(p, 2 * q)
    diff = (x - y) % (2 * q)
    if diff % 2:
        raise InvariantViolation("x = y mod 2", f"p={p}")
    return QuadRing.for_prime(p, q).element(diff // 2, y)


def quad_order(e: QuadElem, q: int) -> int:
    """Multiplicative order of e in (O_K/qO_K)* = F_{q^2}*"""
    if e.ring.modulus != q:
        raise ParameterOutOfRange("q", q, f"element lives modulo {e.ring.modulus}")
    if e.norm() == 0:
        raise NotAUnit(e, q)
    return element_order(e, QuadElem.__pow__, QuadElem.is_one, factorize(q * q - 1))


def quad_index(e: QuadElem, q: int) -> int:
    """(q^2 - 1)/ord(e)"""
    return (q * q - 1) // quad_order(e, q)


def rhs_theorem(p: int, q: int, h: int) -> int:
    """ind(eps_p^h mod q), the right-hand side of the index identity"""
    if p % 8 != 5:
        raise HypothesisViolated(P_FIVE_MOD_EIGHT, p=p, q=q)
    if not generated_by_minus_one_and_q(q, p):
        raise HypothesisViolated("(Z/pZ)* = <-1, q>", p=p, q=q)
    if h < 1:
        raise ParameterOutOfRange("h", h)
    return quad_index(unit_mod_q(p, q) ** h, q)
