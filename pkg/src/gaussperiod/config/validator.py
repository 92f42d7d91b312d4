# -*- coding: utf-8 -*-
"""
Configuration Validator
Validates the correctness and completeness of configuration
"""

import logging
from typing import Any, Dict, List, Tuple

from .. import constants as C

logger = logging.getLogger(C.LOGGER_NAME)

_LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


class ConfigValidator:
    """Configuration Validator"""

    def __init__(self):
        self.errors: List[str] = []
        self.warnings: List[str] = []

    def validate_config(self, config: Dict[str, Any]) -> Tuple[bool, List[str], List[str]]:
        """
        Validate configuration
        Returns: (is_valid, errors, warnings)
        """
        self.errors.clear()
        self.warnings.clear()

        gp = config.get('gaussperiod', {})

        self._validate_theorem_config(gp.get('theorem', {}))
        self._validate_factor_config(gp.get('factor', {}))
        self._validate_class_number_config(gp.get('class_number', {}))
        self._validate_scan_config(gp.get('scan', {}))
        self._validate_ducci_config(gp.get('ducci', {}))
        self._validate_heuristics_config(gp.get('heuristics', {}))
        self._validate_logging_config(gp.get('logging', {}))

        return len(self.errors) == 0, self.errors.copy(), self.warnings.copy()

    def _validate_theorem_config(self, theorem: Dict[str, Any]):
        """Validate theorem harness configuration"""
        p_max = theorem.get('p_max', C.THEOREM_P_MAX)
        if not self._is_positive_int(p_max) or p_max < 5:
            self.errors.append(f"Invalid theorem p_max: {p_max}")
        elif p_max > 5000:
            self.warnings.append(f"Theorem p_max {p_max} makes cyclotomic exponentiation very slow")

        q_set = theorem.get('q_set', list(C.THEOREM_Q_SET))
        if not isinstance(q_set, (list, tuple)) or not q_set:
            self.errors.append("Theorem q_set must be a non-empty list")
        elif not all(self._is_positive_int(q) and q >= 2 for q in q_set):
            self.errors.append(f"Theorem q_set entries must be integers >= 2: {q_set}")

    def _validate_factor_config(self, factor: Dict[str, Any]):
        """Validate factorization budget"""
        budget = factor.get('max_iterations', C.FACTOR_MAX_ITERATIONS)
        if not self._is_positive_int(budget):
            self.errors.append(f"Invalid factorization budget: {budget}")

    def _validate_class_number_config(self, class_number: Dict[str, Any]):
        """Validate precision settings"""
        bits = class_number.get('precision_bits', C.PRECISION_BITS)
        ceiling = class_number.get('max_precision_bits', C.MAX_PRECISION_BITS)
        if not self._is_positive_int(bits) or bits < 53:
            self.errors.append(f"Invalid precision bits: {bits}")
        if not self._is_positive_int(ceiling):
            self.errors.append(f"Invalid precision ceiling: {ceiling}")
        elif self._is_positive_int(bits) and ceiling < bits:
            self.warnings.append(f"Precision ceiling {ceiling} is below the starting precision {bits}")

    def _validate_scan_config(self, scan: Dict[str, Any]):
        """Validate census scan configuration"""
        p_max = scan.get('p_max', C.SCAN_P_MAX)
        if not self._is_positive_int(p_max) or p_max < 100:
            self.errors.append(f"Invalid scan p_max: {p_max}")

        scan_filter = scan.get('filter', C.FILTER_1_MOD_4)
        if scan_filter not in C.SCAN_FILTERS:
            self.errors.append(f"Invalid scan filter: {scan_filter} (expected one of {', '.join(C.SCAN_FILTERS)})")

        jobs = scan.get('jobs')
        if jobs is not None and not self._is_positive_int(jobs):
            self.errors.append(f"Invalid worker count: {jobs}")

        flush = scan.get('flush_every', C.SCAN_FLUSH_EVERY)
        if not self._is_positive_int(flush):
            self.errors.append(f"Invalid checkpoint flush interval: {flush}")

        tolerance = scan.get('tolerance', C.SCAN_TOLERANCE)
        if not isinstance(tolerance, (int, float)) or not 0 < tolerance < 1:
            self.errors.append(f"Invalid tolerance: {tolerance}")

    def _validate_ducci_config(self, ducci: Dict[str, Any]):
        """Validate Ducci sampling configuration"""
        samples = ducci.get('samples', C.DUCCI_SAMPLES)
        if not self._is_positive_int(samples):
            self.errors.append(f"Invalid Ducci sample count: {samples}")

        bound = ducci.get('entry_bound', C.DUCCI_ENTRY_BOUND)
        if not self._is_positive_int(bound) or bound < 2:
            self.errors.append(f"Invalid Ducci entry bound: {bound}")

        seed = ducci.get('seed', C.DUCCI_SEED)
        if not isinstance(seed, int) or isinstance(seed, bool):
            self.errors.append(f"Seed must be an integer: {seed}")

        exhaustive = ducci.get('exhaustive_max_p', C.DUCCI_EXHAUSTIVE_MAX_P)
        if not self._is_positive_int(exhaustive):
            self.errors.append(f"Invalid exhaustive Ducci bound: {exhaustive}")
        elif exhaustive > 23:
            self.warnings.append(f"Exhaustive Ducci enumeration up to p={exhaustive} visits 2^p starts")

    def _validate_heuristics_config(self, heuristics: Dict[str, Any]):
        """Validate heuristic truncation parameters"""
        k_max = heuristics.get('k_max', C.COHEN_LENSTRA_K_MAX)
        if not self._is_positive_int(k_max) or k_max < 2:
            self.errors.append(f"Invalid k_max: {k_max}")

        r_min = heuristics.get('r_min', C.GV_R_MIN)
        if not self._is_positive_int(r_min) or r_min < 3:
            self.errors.append(f"Invalid r_min: {r_min}")

    def _validate_logging_config(self, logging_config: Dict[str, Any]):
        """Validate logging configuration"""
        level = logging_config.get('level', 'INFO')
        if not isinstance(level, str) or level.upper() not in _LOG_LEVELS:
            self.errors.append(f"Invalid log level: {level}")

    @staticmethod
    def _is_positive_int(value: Any) -> bool:
        return isinstance(value, int) and not isinstance(value, bool) and value > 0

    def get_validation_report(self, config: Dict[str, Any]) -> str:
        """Get validation report"""
        is_valid, errors, warnings = self.validate_config(config)

        report = ["Configuration Validation Report:", "=" * 40]
        report.append("Configuration is valid" if is_valid else "Configuration has errors")

        if errors:
            report.append("\nErrors:")
            for i, error in enumerate(errors, 1):
                report.append(f"  {i}. {error}")

        if warnings:
            report.append("\nWarnings:")
            for i, warning in enumerate(warnings, 1):
                report.append(f"  {i}. {warning}")

        if not errors and not warnings:
            report.append("\nNo issues found.")

        return "\n".join(report)
