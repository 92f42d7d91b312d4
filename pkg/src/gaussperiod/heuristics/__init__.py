# -*- coding: utf-8 -*-
"""
Heuristics Module
"""

from .estimates import (
    HeuristicConstants, cohen_lenstra_3, combined_probability, random_index_probability,
    primitive_deficit, gv_inner_integral, gv_tail_bound, gv_expectation, gv_discrete_sum,
    compute_constants,
)

__all__ = ['HeuristicConstants', 'cohen_lenstra_3', 'combined_probability',
           'random_index_probability', 'primitive_deficit', 'gv_inner_integral', 'gv_tail_bound',
           'gv_expectation', 'gv_discrete_sum', 'compute_constants']
