# -*- coding: utf-8 -*-
"""
Real Quadratic Module
Fundamental units, residue rings of O_K, class numbers and the unit side of the index identity
"""

from .units import (
    FundamentalUnit, fundamental_unit, fundamental_unit_mod, unit_power, brute_force_unit,
)
from .residue_ring import (
    QuadRing, QuadElem, is_inert, unit_mod_q, quad_order, quad_index, rhs_theorem,
)
from .class_numbers import (
    ClassData, class_number_real, class_number_real_adaptive, class_number_imag,
    class_number_imag_forms, class_data,
)

__all__ = ['FundamentalUnit', 'fundamental_unit', 'fundamental_unit_mod', 'unit_power',
           'brute_force_unit', 'QuadRing', 'QuadElem', 'is_inert', 'unit_mod_q', 'quad_order',
           'quad_index', 'rhs_theorem', 'ClassData', 'class_number_real',
           'class_number_real_adaptive', 'class_number_imag', 'class_number_imag_forms',
           'class_data']
