# -*- coding: utf-8 -*-
"""
Orders and Indices in F_q[x]/Phi_p(x)
"""

import logging

from .ring import CycloContext, CycloElem, power
from ..arith import Factorization, element_order
from ..constants import LOGGER_NAME
from ..errors import InvariantViolation, NotADivisor, NotAUnit, ZeroElement

logger = logging.getLogger(LOGGER_NAME)


def full_order(ctx: CycloContext, a: CycloElem, group_order_fact: Factorization) -> int:
    """
    Exact multiplicative order of a

    group_order_fact must factor a multiple of ord(a), normally q**n - 1 for elements of
    the degree-n subfield or q**(p-1) - 1 for arbitrary units of R.
    """
    if a.is_zero():
        raise ZeroElement(ctx.q)
    try:
        return element_order(a, power, CycloElem.is_one, group_order_fact)
    except InvariantViolation as e:
        raise NotAUnit(a, f"x^{ctx.p - 1} + ... + 1 over F_{ctx.q}") from e


def index_full(ctx: CycloContext, a: CycloElem, group_order_fact: Factorization) -> int:
    """(group order) / ord(a)"""
    return group_order_fact.value // full_order(ctx, a, group_order_fact)


def index_gcd(ctx: CycloContext, a: CycloElem, m_fact: Factorization) -> int:
    """
    gcd(ind(a), m) for m dividing q**n - 1, without factoring q**n - 1

    Raising to (q**n - 1)/m maps F_{q^n}* onto its subgroup of order m, and the index of the
    image there is gcd(ind(a), m).
    """
    m = m_fact.value
    group_order = ctx.field_order
    if group_order % m:
        raise NotADivisor(m, group_order)
    if a.is_zero():
        raise ZeroElement(ctx.q)

    b = power(a, group_order // m)
    try:
        order_b = element_order(b, power, CycloElem.is_one, m_fact)
    except InvariantViolation as e:
        raise NotAUnit(a, f"F_{ctx.q}^{ctx.n}") from e
    logger.debug(f"p={ctx.p} q={ctx.q}: image of order {order_b} in the subgroup of order {m}")
    return m // order_b
