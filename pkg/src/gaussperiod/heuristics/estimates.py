# -*- coding: utf-8 -*-
"""
Heuristic Estimates
How often 3 divides ind(zeta + 1/zeta), and the expected number of Sophie Germain
counterexamples to primitivity of Gauss periods beyond the verified range
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath
import numpy as np

from ..arith import primes_up_to
from ..constants import (
    COHEN_LENSTRA_K_MAX, GV_R_MIN, LOGGER_NAME, ROUNDED_TWIN_PRIME_CONSTANT, TWIN_PRIME_CONSTANT,
)
from ..errors import ParameterOutOfRange

logger = logging.getLogger(LOGGER_NAME)

# chance that eps_p = 1 mod 2O_K
UNIT_CONDITION = Fraction(1, 3)


@dataclass(frozen=True)
class HeuristicConstants:
    twin_prime_C: float
    cohen_lenstra_3: float
    combined_prob: float
    gv_expectation: float
    primitive_deficit: float
    k_max: int
    r_min: int


def cohen_lenstra_3(k_max: int = COHEN_LENSTRA_K_MAX) -> float:
    """1 - prod_{k=2}^{k_max} (1 - 3^-k); the truncation error is below 3^-k_max"""
    if k_max < 2:
        raise ParameterOutOfRange("k_max", k_max, f"k_max must be at least 2, got {k_max}")
    with mpmath.workdps(30):
        product = mpmath.fprod(1 - mpmath.mpf(3) ** -k for k in range(2, k_max + 1))
        return float(1 - product)


def combined_probability(class_number_probability: Optional[float] = None) -> float:
    """P(eps_p = 1 mod 2 or 3 | h_p), treating the two events as independent"""
    if class_number_probability is None:
        class_number_probability = cohen_lenstra_3()
    if not 0 <= class_number_probability <= 1:
        raise ParameterOutOfRange("class_number_probability", class_number_probability)
    return 1 - float(1 - UNIT_CONDITION) * (1 - class_number_probability)


def random_index_probability(d: int) -> Fraction:
    """P(d | ind(beta)) for beta uniform in a cyclic group whose order d divides"""
    if d < 1:
        raise ParameterOutOfRange("d", d)
    return Fraction(1, d)


def primitive_deficit(combined: Optional[float] = None) -> float:
    """Relative drop of P(3 does not divide ind(alpha)) against a random element"""
    if combined is None:
        combined = combined_probability()
    baseline = 1 - random_index_probability(3)
    return 1 - (1 - combined) / float(baseline)


def gv_inner_integral(a: float, cutoff: Optional[float] = None):
    """
    int_a^inf dl / (l^2 log l) = E_1(log a)

    With a cutoff L, the quadrature over [a, L] is returned instead; the omitted tail is
    below gv_tail_bound(L).
    """
    if a <= 1:
        raise ParameterOutOfRange("a", a, "the integrand needs a > 1")
    if cutoff is None:
        return mpmath.e1(mpmath.log(a))
    if cutoff <= a:
        raise ParameterOutOfRange("cutoff", cutoff, f"cutoff must exceed a={a}")
    return mpmath.quad(lambda l: 1 / (l * l * mpmath.log(l)), [a, cutoff])


def gv_tail_bound(cutoff: float):
    """1/(L log L) bounds int_L^inf dl / (l^2 log l)"""
    return 1 / (mpmath.mpf(cutoff) * mpmath.log(cutoff))


def gv_expectation(r_min: int = GV_R_MIN, C: float = TWIN_PRIME_CONSTANT,
                   maxdegree: int = 8) -> float:
    """
    int_{r_min}^inf 2C/log^2 r * E_1(log(2r + 1)) dr

    Substituting r = exp(1/w) maps the slowly decaying tail onto the bounded interval
    (0, 1/log r_min] with an integrand vanishing linearly at 0.
    """
    if r_min < 3:
        raise ParameterOutOfRange("r_min", r_min, f"r_min must be at least 3, got {r_min}")
    if C == 0:
        return 0.0

    def integrand(w):
        s = 1 / w
        # dr = e^s / w^2 dw and 1/log^2 r = w^2
        return 2 * C * mpmath.exp(s) * mpmath.e1(s + mpmath.log(2 + mpmath.exp(-s)))

    with mpmath.workdps(20):
        value = mpmath.quad(integrand, [0, 1 / mpmath.log(r_min)], maxdegree=maxdegree)
    return float(value)


def gv_discrete_sum(r_min: int = GV_R_MIN, r_max: int = 10 ** 5, l_max: int = 10 ** 7) -> float:
    """sum over Sophie Germain r in [r_min, r_max] of sum over primes 2r < l <= l_max of 1/l^2"""
    if l_max <= 2 * r_max + 1:
        raise ParameterOutOfRange("l_max", l_max, "l_max must exceed 2 r_max + 1")
    primes = primes_up_to(l_max)
    prime_set = np.zeros(l_max + 1, dtype=bool)
    prime_set[primes] = True

    candidates = primes[(primes >= r_min) & (primes <= r_max)]
    germain = candidates[prime_set[2 * candidates + 1]]

    inverse_squares = 1.0 / primes.astype(np.float64) ** 2
    # tails[i] = sum_{j >= i} 1/l_j^2
    tails = np.concatenate([np.cumsum(inverse_squares[::-1])[::-1], [0.0]])
    starts = np.searchsorted(primes, 2 * germain, side='right')
    total = float(tails[starts].sum())
    logger.debug(f"{len(germain)} Sophie Germain primes in [{r_min}, {r_max}], sum {total:.6g}")
    return total


def compute_constants(k_max: int = COHEN_LENSTRA_K_MAX, r_min: int = GV_R_MIN,
                      rounded_constant: bool = False) -> HeuristicConstants:
    twin = ROUNDED_TWIN_PRIME_CONSTANT if rounded_constant else TWIN_PRIME_CONSTANT
    cl = cohen_lenstra_3(k_max)
    combined = combined_probability(cl)
    return HeuristicConstants(twin_prime_C=twin, cohen_lenstra_3=cl, combined_prob=combined,
                              gv_expectation=gv_expectation(r_min, twin),
                              primitive_deficit=primitive_deficit(combined),
                              k_max=k_max, r_min=r_min)
