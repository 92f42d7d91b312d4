# -*- coding: utf-8 -*-
"""
Integer Arithmetic Module
Primality, factorization, residue symbols and orders shared by every other module
"""

from .primality import is_prime, primes_up_to
from .factorization import Factorization, factorize, set_factor_budget
from .groups import (
    jacobi, minimal_exponent, element_order, order_mod,
    generated_by_minus_one_and_q, cyclic_index,
)

__all__ = ['is_prime', 'primes_up_to', 'Factorization', 'factorize', 'set_factor_budget', 'jacobi',
           'minimal_exponent', 'element_order', 'order_mod',
           'generated_by_minus_one_and_q', 'cyclic_index']
