# -*- coding: utf-8 -*-
"""
Experiments Module
Theorem harness, unit index census, index property scan, persistence
"""

from .records import ScanRecord, FrequencyTable, render_scan_csv
from .persistence import (
    CheckpointWriter, load_checkpoint, write_scan_csv, write_summary_json, summary_dict,
)
from .theorem import (
    TheoremReport, PrimeConsequence, check_hypotheses, check_main_theorem, theorem_pairs,
    check_main_theorem_range, theorem_consequences,
)
from .census import (
    TableRow, table_rows, candidate_rings, predict_distribution, candidate_primes, scan_prime,
    scan_records, scan_observed, outside_support, check_ik_properties, ik_scan,
)
from .lemma import projection_counterexample, verify_cyclic_projection_lemma

__all__ = ['ScanRecord', 'FrequencyTable', 'render_scan_csv', 'CheckpointWriter',
           'load_checkpoint', 'write_scan_csv', 'write_summary_json', 'summary_dict',
           'TheoremReport', 'PrimeConsequence', 'check_hypotheses', 'check_main_theorem',
           'theorem_pairs', 'check_main_theorem_range', 'theorem_consequences', 'TableRow',
           'table_rows', 'candidate_rings', 'predict_distribution', 'candidate_primes',
           'scan_prime', 'scan_records', 'scan_observed', 'outside_support',
           'check_ik_properties', 'ik_scan', 'projection_counterexample',
           'verify_cyclic_projection_lemma']
