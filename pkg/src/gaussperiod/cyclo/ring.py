# -*- coding: utf-8 -*-
"""
Cyclotomic Quotient Ring
Arithmetic in F_q[x]/Phi_p(x) with dense residue vectors
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Tuple

import numpy as np

from ..arith import factorize, generated_by_minus_one_and_q, is_prime, order_mod
from ..constants import LOGGER_NAME
from ..errors import ContextMismatch, HypothesisViolated, InvariantViolation, ParameterOutOfRange

logger = logging.getLogger(LOGGER_NAME)

GENERATION_HYPOTHESIS = "(Z/pZ)* = <-1, q>"


@dataclass(frozen=True)
class CycloContext:
    """
    The ring R = F_q[x]/Phi_p(x)

    n is the degree over F_q of the field generated by zeta + 1/zeta, i.e. the order of q
    in (Z/pZ)*/{+-1}; under the generation hypothesis n = (p-1)/2.
    """
    p: int
    q: int
    n: int
    degree: int
    order_q: int

    @property
    def dtype(self):
        # object arrays once a schoolbook convolution could leave int64
        if (self.p - 1) * (self.q - 1) ** 2 < (1 << 62):
            return np.int64
        return object

    @property
    def field_order(self) -> int:
        """q**n - 1, the order of the unit group containing alpha"""
        return self.q ** self.n - 1


def make_ring(p: int, q: int) -> CycloContext:
    """Quotient ring without the generation hypothesis"""
    if p < 3 or not is_prime(p):
        raise ParameterOutOfRange("p", p, f"p must be an odd prime, got {p}")
    if not is_prime(q) or q == p:
        raise ParameterOutOfRange("q", q, f"q must be a prime different from p={p}, got {q}")
    order_q = order_mod(q, p, factorize(p - 1))
    n = order_q if order_q % 2 == 1 else (order_q // 2 if pow(q, order_q // 2, p) == p - 1 else order_q)
    return CycloContext(p=p, q=q, n=n, degree=p - 1, order_q=order_q)


def make_context(p: int, q: int) -> CycloContext:
    """
    Context for the left-hand side of the index identity

    Rejects (p, q) unless -1 and q generate (Z/pZ)*.
    """
    ctx = make_ring(p, q)
    if not generated_by_minus_one_and_q(q, p):
        raise HypothesisViolated(GENERATION_HYPOTHESIS, p=p, q=q, order=ctx.order_q)
    if ctx.n != (p - 1) // 2:
        raise InvariantViolation("alpha generates a field of degree (p-1)/2", f"n={ctx.n}, p={p}")
    if pow(q, ctx.n, p) not in (1, p - 1):
        raise InvariantViolation("q**n = +-1 mod p", f"p={p}, q={q}, n={ctx.n}")
    return ctx


def _fold(ctx: CycloContext, values: np.ndarray) -> np.ndarray:
    """Reduce a coefficient vector of any length modulo (x**p - 1, Phi_p, q)"""
    p = ctx.p
    cyclic = np.zeros(p, dtype=ctx.dtype)
    for start in range(0, len(values), p):
        block = values[start:start + p]
        cyclic[:len(block)] += block
    # x**(p-1) = -(1 + x + ... + x**(p-2))
    reduced = cyclic[:p - 1] - cyclic[p - 1]
    return np.mod(reduced, ctx.q)


class CycloElem:
    """Element of F_q[x]/Phi_p(x), coefficients of degrees 0 .. p-2"""

    __slots__ = ('context', 'coeffs')

    def __init__(self, context: CycloContext, coeffs: np.ndarray):
        if len(coeffs) != context.degree:
            raise InvariantViolation("coefficient vector has p-1 entries",
                                     f"{len(coeffs)} != {context.degree}")
        self.context = context
        self.coeffs = np.asarray(coeffs, dtype=context.dtype)
        self.coeffs.setflags(write=False)

    @classmethod
    def from_coeffs(cls, context: CycloContext, coeffs: Iterable[int]) -> 'CycloElem':
        """Reduce an arbitrary integer coefficient sequence into the ring"""
        values = np.array([int(c) % context.q for c in coeffs] or [0], dtype=context.dtype)
        return cls(context, _fold(context, values))

    @classmethod
    def one(cls, context: CycloContext) -> 'CycloElem':
        coeffs = np.zeros(context.degree, dtype=context.dtype)
        coeffs[0] = 1
        return cls(context, coeffs)

    @classmethod
    def zeta(cls, context: CycloContext) -> 'CycloElem':
        """The class of x, a primitive p-th root of unity"""
        coeffs = np.zeros(context.degree, dtype=context.dtype)
        coeffs[1] = 1
        return cls(context, coeffs)

    def _check(self, other: 'CycloElem'):
        if self.context != other.context:
            raise ContextMismatch(self.context, other.context)

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not np.any(self.coeffs[1:])

    def key(self) -> Tuple[int, ...]:
        return tuple(int(c) for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycloElem):
            return NotImplemented
        return self.context == other.context and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.context, self.key()))

    def __add__(self, other: 'CycloElem') -> 'CycloElem':
        self._check(other)
        return CycloElem(self.context, np.mod(self.coeffs + other.coeffs, self.context.q))

    def __sub__(self, other: 'CycloElem') -> 'CycloElem':
        self._check(other)
        return CycloElem(self.context, np.mod(self.coeffs - other.coeffs, self.context.q))

    def __neg__(self) -> 'CycloElem':
        return CycloElem(self.context, np.mod(-self.coeffs, self.context.q))

    def __mul__(self, other: 'CycloElem') -> 'CycloElem':
        return mul(self, other)

    def __pow__(self, e: int) -> 'CycloElem':
        return power(self, e)

    def __repr__(self) -> str:
        terms = [f"{c}" if i == 0 else f"{c}*x^{i}" for i, c in enumerate(self.key()) if c]
        return f"CycloElem(p={self.context.p}, q={self.context.q}: {' + '.join(terms) or '0'})"


def mul(a: CycloElem, b: CycloElem) -> CycloElem:
    """Product reduced modulo (q, Phi_p)"""
    a._check(b)
    return CycloElem(a.context, _fold(a.context, np.convolve(a.coeffs, b.coeffs)))


def power(a: CycloElem, e: int) -> CycloElem:
    """a**e by left-to-right square-and-multiply"""
    if e < 0:
        raise ParameterOutOfRange("e", e, "negative exponents are not supported")
    result = CycloElem.one(a.context)
    for bit in bin(e)[2:] if e else '':
        result = mul(result, result)
        if bit == '1':
            result = mul(result, a)
    return result


def frobenius(a: CycloElem, k: int = 1) -> CycloElem:
    """a**(q**k), computed as the exponent permutation x**i -> x**(i * q**k mod p)"""
    ctx = a.context
    shift = pow(ctx.q, k, ctx.p)
    cyclic = np.zeros(ctx.p, dtype=ctx.dtype)
    for i, c in enumerate(a.coeffs):
        if c:
            cyclic[(i * shift) % ctx.p] += c
    return CycloElem(ctx, _fold(ctx, cyclic))


def gauss_period(ctx: CycloContext) -> CycloElem:
    """alpha = zeta + 1/zeta = x + x**(p-1), fully reduced"""
    coeffs = [0] * ctx.p
    coeffs[1] = 1
    coeffs[ctx.p - 1] = 1
    alpha = CycloElem.from_coeffs(ctx, coeffs)
    if frobenius(alpha, ctx.n) != alpha:
        raise InvariantViolation("alpha**(q**n) = alpha", f"p={ctx.p}, q={ctx.q}, n={ctx.n}")
    return alpha


def zeta_plus_one(ctx: CycloContext) -> CycloElem:
    """beta = zeta + 1"""
    return CycloElem.zeta(ctx) + CycloElem.one(ctx)
