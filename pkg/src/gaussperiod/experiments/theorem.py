# -*- coding: utf-8 -*-
"""
Theorem Harness
gcd(ind(zeta + 1/zeta), q^2 - 1) = ind(eps_p^h_p mod q), with the two sides computed by
disjoint code paths (cyclotomic ring versus real quadratic units)
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional

from ..arith import factorize, generated_by_minus_one_and_q, is_prime, order_mod, primes_up_to
from ..constants import LOGGER_NAME, MAX_PRECISION_BITS, PRECISION_BITS, THEOREM_P_MAX, THEOREM_Q_SET
from ..cyclo import GENERATION_HYPOTHESIS, gauss_period, index_gcd, make_context
from ..errors import HypothesisViolated, ParameterOutOfRange
from ..quadratic import class_number_real_adaptive, quad_index, quad_order, rhs_theorem, unit_mod_q
from ..utils import TimeUtils

logger = logging.getLogger(LOGGER_NAME)

P_FIVE_MOD_EIGHT = "p = 5 mod 8"


@dataclass(frozen=True)
class TheoremReport:
    p: int
    q: int
    lhs: int
    rhs: int
    h_p: int
    equal: bool


@dataclass(frozen=True)
class PrimeConsequence:
    """
    What the theorem says about the ell-part of ind(alpha)

    kind is "exact" when v_ell(ind alpha) equals unit_valuation, "at_least" when it is at
    least full_valuation, and "exact_unless_h" when it equals unit_valuation unless ell | h_p.
    """
    prime: int
    unit_valuation: int
    full_valuation: int
    kind: str


def _valuation(n: int, ell: int) -> int:
    v = 0
    while n % ell == 0:
        n //= ell
        v += 1
    return v


def check_hypotheses(p: int, q: int):
    """Raise HypothesisViolated naming the first failing hypothesis"""
    if not is_prime(p) or p < 5:
        raise ParameterOutOfRange("p", p, f"p must be an odd prime, got {p}")
    if not is_prime(q) or q == p:
        raise ParameterOutOfRange("q", q, f"q must be a prime different from p, got {q}")
    if p % 8 != 5:
        raise HypothesisViolated(P_FIVE_MOD_EIGHT, p=p, q=q)
    if not generated_by_minus_one_and_q(q, p):
        raise HypothesisViolated(GENERATION_HYPOTHESIS, p=p, q=q,
                                 order=order_mod(q, p, factorize(p - 1)))


def check_main_theorem(p: int, q: int, h_p: Optional[int] = None,
                       precision_bits: int = PRECISION_BITS,
                       max_precision_bits: int = MAX_PRECISION_BITS) -> TheoremReport:
    check_hypotheses(p, q)
    started = TimeUtils.monotonic()

    ctx = make_context(p, q)
    alpha = gauss_period(ctx)
    lhs = index_gcd(ctx, alpha, factorize(q * q - 1))

    if h_p is None:
        h_p = class_number_real_adaptive(p, precision_bits, max_precision_bits)
    rhs = rhs_theorem(p, q, h_p)

    report = TheoremReport(p=p, q=q, lhs=lhs, rhs=rhs, h_p=h_p, equal=lhs == rhs)
    level = logging.DEBUG if report.equal else logging.ERROR
    logger.log(level, f"p={p} q={q}: lhs={lhs} rhs={rhs} h_p={h_p} "
                      f"({TimeUtils.elapsed(started):.2f}s)")
    return report


def theorem_pairs(p_max: int = THEOREM_P_MAX, q_set: Iterable[int] = THEOREM_Q_SET):
    """Every (p, q) satisfying the hypotheses, ordered by p then q"""
    q_values = sorted(set(q_set))
    for p in (int(v) for v in primes_up_to(p_max)):
        if p % 8 != 5:
            continue
        for q in q_values:
            if q != p and generated_by_minus_one_and_q(q, p):
                yield p, q


def check_main_theorem_range(p_max: int = THEOREM_P_MAX, q_set: Iterable[int] = THEOREM_Q_SET,
                             precision_bits: int = PRECISION_BITS,
                             max_precision_bits: int = MAX_PRECISION_BITS) -> List[TheoremReport]:
    reports = []
    class_numbers = {}
    started = TimeUtils.monotonic()
    for p, q in theorem_pairs(p_max, q_set):
        if p not in class_numbers:
            class_numbers[p] = class_number_real_adaptive(p, precision_bits, max_precision_bits)
        reports.append(check_main_theorem(p, q, class_numbers[p]))
    failures = sum(1 for r in reports if not r.equal)
    logger.info(f"Checked {len(reports)} pairs up to p={p_max} in "
                f"{TimeUtils.elapsed(started):.1f}s, {failures} mismatches")
    return reports


def theorem_consequences(q: int, p: int) -> List[PrimeConsequence]:
    """Per prime ell | q^2 - 1, what ind(eps_p mod q) and the oddness of h_p force on ind(alpha)"""
    unit = unit_mod_q(p, q)
    index_unit = quad_index(unit, q)
    order_unit = quad_order(unit, q)
    group = factorize(q * q - 1)
    consequences = []
    for ell, full in group.factors:
        v = _valuation(index_unit, ell)
        if order_unit % ell:
            kind = "at_least"
        elif ell == 2:
            kind = "exact"
        else:
            kind = "exact_unless_h"
        consequences.append(PrimeConsequence(prime=ell, unit_valuation=v, full_valuation=full,
                                             kind=kind))
    return consequences
