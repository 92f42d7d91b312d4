# -*- coding: utf-8 -*-
"""
Ducci Module
Ducci map iteration, eventual periods and the divisibility-by-3 equivalences
"""

from .sequences import (
    DucciState, DucciOrbit, ducci_step, ducci_orbit, eventual_period, scaled_binary_form,
    cycle_multiple, period_divides, algebraic_orbit, binary_starts, random_starts, unit_start,
)
from .corollary import (
    CorollaryReport, check_two_primitive, check_corollary_hypotheses, alpha_order,
    zeta_plus_one_order, algebraic_period, corollary_starts, verify_corollary,
)

__all__ = ['DucciState', 'DucciOrbit', 'ducci_step', 'ducci_orbit', 'eventual_period',
           'scaled_binary_form', 'cycle_multiple', 'period_divides', 'algebraic_orbit',
           'binary_starts', 'random_starts', 'unit_start', 'CorollaryReport',
           'check_two_primitive', 'check_corollary_hypotheses', 'alpha_order',
           'zeta_plus_one_order', 'algebraic_period', 'corollary_starts', 'verify_corollary']
