# -*- coding: utf-8 -*-
"""
Divisibility by 3 Equivalences
For p = 5 mod 8 with 2 a primitive root, the following agree:
  (1) 3 | ind(zeta + 1)
  (2) 3 | ind(zeta + 1/zeta)
  (3) every Ducci period of length p divides p (2^((p-1)/2) - 1)/3
  (4) eps_p = 1 mod 2O_K or 3 | h_p
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from .sequences import DucciState, binary_starts, period_divides, random_starts, unit_start
from ..arith import factorize, is_prime, order_mod
from ..constants import (
    DUCCI_ENTRY_BOUND, DUCCI_EXHAUSTIVE_MAX_P, DUCCI_SAMPLES, DUCCI_SEED, LOGGER_NAME,
)
from ..cyclo import full_order, gauss_period, make_ring, zeta_plus_one
from ..errors import HypothesisViolated, ParameterOutOfRange
from ..quadratic import class_number_real_adaptive, unit_mod_q

logger = logging.getLogger(LOGGER_NAME)

TWO_PRIMITIVE_ROOT = "2 is a primitive root mod p"


@dataclass(frozen=True)
class CorollaryReport:
    p: int
    ord_alpha: int
    ind_alpha: int
    ord_zeta_plus_one: int
    ind_zeta_plus_one: int
    h_p: int
    unit_is_one: bool
    statement_one: bool
    statement_two: bool
    statement_three: bool
    statement_four: bool
    starts_checked: int
    witness: Optional[Tuple[int, ...]]
    consistent: bool


def check_two_primitive(p: int):
    if not is_prime(p) or p < 3:
        raise ParameterOutOfRange("p", p, f"p must be an odd prime, got {p}")
    order = order_mod(2, p, factorize(p - 1))
    if order != p - 1:
        raise HypothesisViolated(TWO_PRIMITIVE_ROOT, p=p, q=2, order=order)


def check_corollary_hypotheses(p: int):
    check_two_primitive(p)
    if p % 8 != 5:
        raise HypothesisViolated("p = 5 mod 8", p=p, q=2)


def alpha_order(p: int) -> int:
    """ord(zeta + 1/zeta) in F_2[x]/Phi_p"""
    ctx = make_ring(p, 2)
    return full_order(ctx, gauss_period(ctx), factorize(2 ** ctx.n - 1))


def zeta_plus_one_order(p: int) -> int:
    """ord(zeta + 1) in F_2[x]/Phi_p"""
    ctx = make_ring(p, 2)
    return full_order(ctx, zeta_plus_one(ctx), factorize(2 ** (p - 1) - 1))


def algebraic_period(p: int) -> int:
    """p * ord(alpha), the longest Ducci period of length p"""
    check_two_primitive(p)
    return p * alpha_order(p)


def corollary_starts(p: int, exhaustive_max_p: int = DUCCI_EXHAUSTIVE_MAX_P,
                     samples: int = DUCCI_SAMPLES, seed: int = DUCCI_SEED,
                     entry_bound: int = DUCCI_ENTRY_BOUND) -> Iterable[DucciState]:
    """Every binary start for small p, else the unit start followed by seeded random starts"""
    if p <= exhaustive_max_p:
        return binary_starts(p)
    return _with_unit_start(p, random_starts(p, samples, seed, entry_bound))


def _with_unit_start(p: int, starts: Iterable[DucciState]) -> Iterable[DucciState]:
    yield unit_start(p)
    yield from starts


def verify_corollary(p: int, exhaustive_max_p: int = DUCCI_EXHAUSTIVE_MAX_P,
                     samples: int = DUCCI_SAMPLES, seed: int = DUCCI_SEED,
                     entry_bound: int = DUCCI_ENTRY_BOUND,
                     h_p: Optional[int] = None) -> CorollaryReport:
    check_corollary_hypotheses(p)
    n = (p - 1) // 2

    ord_alpha = alpha_order(p)
    ind_alpha = (2 ** n - 1) // ord_alpha
    ord_beta = zeta_plus_one_order(p)
    ind_beta = (2 ** (p - 1) - 1) // ord_beta
    if h_p is None:
        h_p = class_number_real_adaptive(p)
    unit_is_one = unit_mod_q(p, 2).is_one()

    one = ind_beta % 3 == 0
    two = ind_alpha % 3 == 0
    four = unit_is_one or h_p % 3 == 0

    bound = p * (2 ** n - 1) // 3
    checked = 0
    witness = None
    for start in corollary_starts(p, exhaustive_max_p, samples, seed, entry_bound):
        checked += 1
        if not period_divides(start, bound):
            witness = start.entries
            break
    three = witness is None

    consistent = one == two == four == three
    level = logging.INFO if consistent else logging.ERROR
    logger.log(level, f"p={p}: (1)={one} (2)={two} (3)={three} (4)={four} "
                      f"ord(alpha)={ord_alpha} h_p={h_p}, {checked} Ducci starts checked")
    return CorollaryReport(p=p, ord_alpha=ord_alpha, ind_alpha=ind_alpha,
                           ord_zeta_plus_one=ord_beta, ind_zeta_plus_one=ind_beta, h_p=h_p,
                           unit_is_one=unit_is_one, statement_one=one, statement_two=two,
                           statement_three=three, statement_four=four, starts_checked=checked,
                           witness=witness, consistent=consistent)
