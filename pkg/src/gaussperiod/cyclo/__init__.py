# -*- coding: utf-8 -*-
"""
Cyclotomic Module
Arithmetic in F_q[x]/Phi_p(x) and the left-hand side of the index identity
"""

from .ring import (
    CycloContext, CycloElem, GENERATION_HYPOTHESIS,
    make_ring, make_context, mul, power, frobenius, gauss_period, zeta_plus_one,
)
from .orders import full_order, index_full, index_gcd

__all__ = ['CycloContext', 'CycloElem', 'GENERATION_HYPOTHESIS', 'make_ring', 'make_context',
           'mul', 'power', 'frobenius', 'gauss_period', 'zeta_plus_one',
           'full_order', 'index_full', 'index_gcd']
