# -*- coding: utf-8 -*-
"""
Identities Module
Integer-only verification of the cyclotomic norm identities behind the class number formula
"""

from .polynomials import IntCycloPoly, binomial_product, gauss_sum_poly
from .norms import (
    UnitPowers, unit_powers, norm_of_zeta_plus_one, norm_of_gauss_period,
    norm_identity_one_sign, verify_norm_identity_one,
    norm_identity_two_orientation, verify_norm_identity_two,
    sun_identity_sign, verify_sun_identity, verify_norm_consistency,
)

__all__ = ['IntCycloPoly', 'binomial_product', 'gauss_sum_poly', 'UnitPowers', 'unit_powers',
           'norm_of_zeta_plus_one', 'norm_of_gauss_period', 'norm_identity_one_sign',
           'verify_norm_identity_one', 'norm_identity_two_orientation',
           'verify_norm_identity_two', 'sun_identity_sign', 'verify_sun_identity',
           'verify_norm_consistency']
