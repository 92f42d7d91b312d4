# -*- coding: utf-8 -*-
"""
Cyclic Projection Check
For f: Z/N -> Z/M the reduction map, ind(f(g)) = gcd(ind(g), M)
"""

import logging
from math import gcd
from typing import Optional, Tuple

from ..arith import cyclic_index, factorize
from ..constants import LOGGER_NAME

logger = logging.getLogger(LOGGER_NAME)


def projection_counterexample(n_max: int = 360) -> Optional[Tuple[int, int, int]]:
    """First (N, M, g) with ind_M(g mod M) != gcd(ind_N(g), M), searched exhaustively"""
    for n in range(1, n_max + 1):
        divisors = factorize(n).divisors() if n > 1 else [1]
        for g in range(n):
            index_g = cyclic_index(g, n)
            for m in divisors:
                if cyclic_index(g % m, m) != gcd(index_g, m):
                    return n, m, g
    return None


def verify_cyclic_projection_lemma(n_max: int = 360) -> bool:
    counterexample = projection_counterexample(n_max)
    if counterexample is not None:
        logger.error(f"Projection index mismatch at (N, M, g) = {counterexample}")
        return False
    logger.info(f"Projection index identity holds for every N <= {n_max}")
    return True
