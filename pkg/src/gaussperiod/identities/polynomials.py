# -*- coding: utf-8 -*-
"""
Integral Cyclotomic Polynomials
Exact arithmetic in Z[x]/Phi_p(x), the integral model of Z[zeta_p]
"""

from typing import Iterable, List, Tuple, Union

from ..arith import is_prime, jacobi
from ..errors import ContextMismatch, InvariantViolation, ParameterOutOfRange


def _reduce(p: int, cyclic: List[int]) -> Tuple[int, ...]:
    """Canonical representative of a class modulo x**p - 1 and Phi_p"""
    top = cyclic[p - 1]
    return tuple(c - top for c in cyclic[:p - 1])


class IntCycloPoly:
    """Class in Z[x]/Phi_p(x) with integer coefficients of degrees 0 .. p-2"""

    __slots__ = ('p', 'coeffs')

    def __init__(self, p: int, coeffs: Tuple[int, ...]):
        if len(coeffs) != p - 1:
            raise InvariantViolation("coefficient vector has p-1 entries", f"{len(coeffs)} != {p - 1}")
        self.p = p
        self.coeffs = coeffs

    @classmethod
    def from_exponents(cls, p: int, terms: Iterable[Tuple[int, int]]) -> 'IntCycloPoly':
        """Sum of c * x**e over (e, c) pairs, any integer exponents"""
        cyclic = [0] * p
        for e, c in terms:
            cyclic[e % p] += c
        return cls(p, _reduce(p, cyclic))

    @classmethod
    def constant(cls, p: int, c: int) -> 'IntCycloPoly':
        return cls.from_exponents(p, [(0, c)])

    @classmethod
    def monomial(cls, p: int, e: int, c: int = 1) -> 'IntCycloPoly':
        return cls.from_exponents(p, [(e, c)])

    def _cyclic(self) -> List[int]:
        return list(self.coeffs) + [0]

    def _check(self, other: 'IntCycloPoly'):
        if self.p != other.p:
            raise ContextMismatch(self.p, other.p)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntCycloPoly.constant(self.p, other)
        if not isinstance(other, IntCycloPoly):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __add__(self, other: Union['IntCycloPoly', int]) -> 'IntCycloPoly':
        if isinstance(other, int):
            other = IntCycloPoly.constant(self.p, other)
        self._check(other)
        return IntCycloPoly(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> 'IntCycloPoly':
        return IntCycloPoly(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other: Union['IntCycloPoly', int]) -> 'IntCycloPoly':
        return self + (-other)

    def __mul__(self, other: Union['IntCycloPoly', int]) -> 'IntCycloPoly':
        if isinstance(other, int):
            return IntCycloPoly(self.p, tuple(other * a for a in self.coeffs))
        self._check(other)
        p = self.p
        cyclic = [0] * p
        right = [(j, b) for j, b in enumerate(other.coeffs) if b]
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in right:
                    cyclic[(i + j) % p] += a * b
        return IntCycloPoly(p, _reduce(p, cyclic))

    __rmul__ = __mul__

    def times_binomial(self, e: int, c: int = 1, d: int = 1) -> 'IntCycloPoly':
        """self * (d * x**e + c) in linear time"""
        p = self.p
        source = self._cyclic()
        shift = e % p
        cyclic = [c * source[i] + d * source[(i - shift) % p] for i in range(p)]
        return IntCycloPoly(p, _reduce(p, cyclic))

    def __repr__(self) -> str:
        terms = [f"{c}" if i == 0 else f"{c}*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return f"IntCycloPoly(p={self.p}: {' + '.join(terms) or '0'})"


def binomial_product(p: int, factors: Iterable[Tuple[int, int, int]]) -> IntCycloPoly:
    """prod of (d * x**e + c) over (e, c, d) triples"""
    result = IntCycloPoly.constant(p, 1)
    for e, c, d in factors:
        result = result.times_binomial(e, c, d)
    return result


def gauss_sum_poly(p: int) -> IntCycloPoly:
    """G = sum (k/p) x**k, an exact square root of p for p = 1 mod 4"""
    if p % 4 != 1 or not is_prime(p):
        raise ParameterOutOfRange("p", p, f"p must be a prime = 1 mod 4, got {p}")
    g = IntCycloPoly.from_exponents(p, ((k, jacobi(k, p)) for k in range(1, p)))
    if g * g != p:
        raise InvariantViolation("G^2 = p mod Phi_p", f"p={p}")
    return g
