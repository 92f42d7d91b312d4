# -*- coding: utf8 -*-

import argparse
import os
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

import yaml

from gaussperiod import constants as C
from gaussperiod.config import ConfigLoader, ConfigValidator

NO_FILES = ['/nonexistent/gaussperiod.yaml']


def _args(**kwargs):
    return argparse.Namespace(**kwargs)


class TestConfigLoader(unittest.TestCase):
    """Test layered configuration"""

    def setUp(self):
        self.loader = ConfigLoader(NO_FILES)

    @patch.dict(os.environ, {}, clear=True)
    def test_defaults(self):
        config = self.loader.load_config()
        gp = config['gaussperiod']
        self.assertEqual(gp['theorem']['p_max'], C.THEOREM_P_MAX)
        self.assertEqual(gp['theorem']['q_set'], list(C.THEOREM_Q_SET))
        self.assertEqual(gp['scan']['filter'], C.FILTER_1_MOD_4)
        self.assertGreaterEqual(gp['scan']['jobs'], 1)
        self.assertEqual(gp['ducci']['seed'], C.DUCCI_SEED)

    @patch.dict(os.environ, {}, clear=True)
    def test_file_layer(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'gaussperiod.yaml'
            path.write_text(yaml.safe_dump({'gaussperiod': {'scan': {'p_max': 5000, 'jobs': 3}}}))
            config = self.loader.load_config(_args(config=str(path)))
        self.assertEqual(config['gaussperiod']['scan']['p_max'], 5000)
        self.assertEqual(config['gaussperiod']['scan']['jobs'], 3)
        # untouched keys keep their defaults
        self.assertEqual(config['gaussperiod']['scan']['flush_every'], C.SCAN_FLUSH_EVERY)

    @patch.dict(os.environ, {}, clear=True)
    def test_missing_explicit_file(self):
        with self.assertLogs(C.LOGGER_NAME, level='WARNING'):
            config = self.loader.load_config(_args(config='/nonexistent/other.yaml'))
        self.assertEqual(config['gaussperiod']['scan']['p_max'], C.SCAN_P_MAX)

    @patch.dict(os.environ, {'GAUSSPERIOD_SCAN_P_MAX': '20000', 'GAUSSPERIOD_SEED': '9',
                             'GAUSSPERIOD_JOBS': 'many'}, clear=True)
    def test_environment_layer(self):
        with self.assertLogs(C.LOGGER_NAME, level='WARNING'):
            config = self.loader.load_config()
        self.assertEqual(config['gaussperiod']['scan']['p_max'], 20000)
        self.assertEqual(config['gaussperiod']['ducci']['seed'], 9)

    @patch.dict(os.environ, {'GAUSSPERIOD_SCAN_P_MAX': '20000'}, clear=True)
    def test_command_line_wins(self):
        config = self.loader.load_config(_args(scan_p_max=300, q_set=[2, 5], rounded_constant=False,
                                               log_level='DEBUG'))
        gp = config['gaussperiod']
        self.assertEqual(gp['scan']['p_max'], 300)
        self.assertEqual(gp['theorem']['q_set'], [2, 5])
        self.assertFalse(gp['heuristics']['rounded_constant'])
        self.assertEqual(gp['logging']['level'], 'DEBUG')

    @patch.dict(os.environ, {}, clear=True)
    def test_summary(self):
        summary = self.loader.get_config_summary(self.loader.load_config())
        self.assertIn('Scan p_max', summary)


class TestConfigValidator(unittest.TestCase):
    """Test configuration validation"""

    def setUp(self):
        self.validator = ConfigValidator()
        with patch.dict(os.environ, {}, clear=True):
            self.config = ConfigLoader(NO_FILES).load_config()

    def test_defaults_are_valid(self):
        is_valid, errors, warnings = self.validator.validate_config(self.config)
        self.assertTrue(is_valid, errors)
        self.assertEqual(warnings, [])

    def test_errors(self):
        gp = self.config['gaussperiod']
        gp['class_number']['precision_bits'] = 32
        gp['scan']['filter'] = 'all'
        gp['scan']['tolerance'] = 2
        gp['ducci']['seed'] = 'x'
        gp['logging']['level'] = 'LOUD'
        is_valid, errors, _ = self.validator.validate_config(self.config)
        self.assertFalse(is_valid)
        self.assertEqual(len(errors), 5)

    def test_warnings(self):
        gp = self.config['gaussperiod']
        gp['theorem']['p_max'] = 10 ** 4
        gp['ducci']['exhaustive_max_p'] = 29
        is_valid, _, warnings = self.validator.validate_config(self.config)
        self.assertTrue(is_valid)
        self.assertEqual(len(warnings), 2)
        self.assertIn("Warnings:", self.validator.get_validation_report(self.config))


if __name__ == '__main__':
    unittest.main()
