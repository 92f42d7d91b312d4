# -*- coding: utf-8 -*-
"""
Configuration Loader
Supports multiple configuration sources: command line arguments, environment variables, configuration files, default configuration
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml

from .. import constants as C
from ..utils.tools import default_workers

logger = logging.getLogger(C.LOGGER_NAME)

# (environment variable suffix, key path, parser)
_ENV_OVERRIDES = [
    ('THEOREM_P_MAX', 'gaussperiod.theorem.p_max', int),
    ('FACTOR_MAX_ITERATIONS', 'gaussperiod.factor.max_iterations', int),
    ('PRECISION_BITS', 'gaussperiod.class_number.precision_bits', int),
    ('SCAN_P_MAX', 'gaussperiod.scan.p_max', int),
    ('JOBS', 'gaussperiod.scan.jobs', int),
    ('DUCCI_SAMPLES', 'gaussperiod.ducci.samples', int),
    ('SEED', 'gaussperiod.ducci.seed', int),
    ('LOG_LEVEL', 'gaussperiod.logging.level', str),
]

# (argparse attribute, key path)
_CLI_OVERRIDES = [
    ('theorem_p_max', 'gaussperiod.theorem.p_max'),
    ('factor_max_iterations', 'gaussperiod.factor.max_iterations'),
    ('precision', 'gaussperiod.class_number.precision_bits'),
    ('max_precision', 'gaussperiod.class_number.max_precision_bits'),
    ('scan_p_max', 'gaussperiod.scan.p_max'),
    ('jobs', 'gaussperiod.scan.jobs'),
    ('filter', 'gaussperiod.scan.filter'),
    ('flush_every', 'gaussperiod.scan.flush_every'),
    ('tolerance', 'gaussperiod.scan.tolerance'),
    ('exhaustive_max_p', 'gaussperiod.ducci.exhaustive_max_p'),
    ('entry_bound', 'gaussperiod.ducci.entry_bound'),
    ('samples', 'gaussperiod.ducci.samples'),
    ('seed', 'gaussperiod.ducci.seed'),
    ('k_max', 'gaussperiod.heuristics.k_max'),
    ('r_min', 'gaussperiod.heuristics.r_min'),
    ('rounded_constant', 'gaussperiod.heuristics.rounded_constant'),
    ('log_level', 'gaussperiod.logging.level'),
]


class ConfigLoader:
    """Configuration Loader"""

    def __init__(self, config_files: Optional[List[str]] = None):
        self.config_files = list(config_files) if config_files else list(C.CONFIG_FILE_NAMES)

    def load_config(self, cli_args=None) -> Dict[str, Any]:
        """
        Load configuration, with priority from high to low:
        1. Command line arguments
        2. Environment variables
        3. Configuration files
        4. Default configuration
        """
        config = self._load_default_config()

        explicit_file = getattr(cli_args, 'config', None) if cli_args is not None else None
        file_config = self._load_config_file(explicit_file)
        if file_config:
            config = self._merge_config(config, file_config)

        config = self._merge_config(config, self._load_env_config())

        if cli_args is not None:
            config = self._merge_config(config, self._load_cli_config(cli_args))

        if config['gaussperiod']['scan'].get('jobs') is None:
            config['gaussperiod']['scan']['jobs'] = default_workers()
        return config

    def _load_default_config(self) -> Dict[str, Any]:
        """Load default configuration"""
        return {
            'gaussperiod': {
                'theorem': {
                    'p_max': C.THEOREM_P_MAX,
                    'q_set': list(C.THEOREM_Q_SET),
                },
                'factor': {
                    'max_iterations': C.FACTOR_MAX_ITERATIONS,
                },
                'class_number': {
                    'precision_bits': C.PRECISION_BITS,
                    'max_precision_bits': C.MAX_PRECISION_BITS,
                },
                'scan': {
                    'p_max': C.SCAN_P_MAX,
                    'filter': C.FILTER_1_MOD_4,
                    'jobs': None,  # resolved from the machine
                    'flush_every': C.SCAN_FLUSH_EVERY,
                    'tolerance': C.SCAN_TOLERANCE,
                },
                'ducci': {
                    'exhaustive_max_p': C.DUCCI_EXHAUSTIVE_MAX_P,
                    'samples': C.DUCCI_SAMPLES,
                    'entry_bound': C.DUCCI_ENTRY_BOUND,
                    'seed': C.DUCCI_SEED,
                },
                'heuristics': {
                    'k_max': C.COHEN_LENSTRA_K_MAX,
                    'r_min': C.GV_R_MIN,
                    'rounded_constant': False,
                },
                'logging': {
                    'level': 'INFO',
                    'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
                },
            }
        }

    def _load_config_file(self, explicit: Optional[str] = None) -> Optional[Dict[str, Any]]:
        """Load configuration from files"""
        candidates = [explicit] if explicit else self.config_files
        for config_file in candidates:
            config_path = Path(config_file)
            if not config_path.exists():
                if explicit:
                    logger.warning(f"Config file {config_file} does not exist")
                continue
            try:
                with open(config_path, 'r', encoding='utf-8') as f:
                    if config_file.endswith('.json'):
                        return json.load(f) or {}
                    return yaml.safe_load(f) or {}
            except (OSError, ValueError, yaml.YAMLError) as e:
                logger.warning(f"Failed to load config file {config_file}: {e}")

        return None

    def _load_env_config(self) -> Dict[str, Any]:
        """Load configuration from environment variables"""
        config: Dict[str, Any] = {}

        for suffix, key_path, parse in _ENV_OVERRIDES:
            raw = os.getenv(C.ENV_PREFIX + suffix)
            if not raw:
                continue
            try:
                self._set_nested_config(config, key_path, parse(raw))
            except ValueError:
                logger.warning(f"Ignoring {C.ENV_PREFIX + suffix}={raw!r}: not a valid {parse.__name__}")

        return config

    def _load_cli_config(self, cli_args) -> Dict[str, Any]:
        """Load configuration from command line arguments"""
        config: Dict[str, Any] = {}

        for attr, key_path in _CLI_OVERRIDES:
            value = getattr(cli_args, attr, None)
            if value is not None and value is not False:
                self._set_nested_config(config, key_path, value)

        q_set = getattr(cli_args, 'q_set', None)
        if q_set:
            self._set_nested_config(config, 'gaussperiod.theorem.q_set', list(q_set))

        return config

    def _set_nested_config(self, config: Dict[str, Any], key_path: str, value: Any):
        """Set nested configuration"""
        keys = key_path.split('.')
        current = config

        for key in keys[:-1]:
            if key not in current:
                current[key] = {}
            current = current[key]

        current[keys[-1]] = value

    def _merge_config(self, base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
        """Merge configuration"""
        result = base.copy()

        for key, value in override.items():
            if key in result and isinstance(result[key], dict) and isinstance(value, dict):
                result[key] = self._merge_config(result[key], value)
            else:
                result[key] = value

        return result

    def get_config_summary(self, config: Dict[str, Any]) -> str:
        """Get configuration summary"""
        gp = config.get('gaussperiod', {})
        scan = gp.get('scan', {})

        summary = f"""
Gauss Period Orders Configuration Summary:
  Theorem p_max: {gp.get('theorem', {}).get('p_max')}
  Theorem q set: {gp.get('theorem', {}).get('q_set')}
  Factor budget: {gp.get('factor', {}).get('max_iterations')}
  Precision bits: {gp.get('class_number', {}).get('precision_bits')}
  Scan p_max: {scan.get('p_max')}  filter: {scan.get('filter')}  jobs: {scan.get('jobs')}
  Ducci samples: {gp.get('ducci', {}).get('samples')}  seed: {gp.get('ducci', {}).get('seed')}
"""
        return summary.strip()
