# -*- coding: utf8 -*-

import io
import json
import logging
import os
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

from gaussperiod import constants as C
from gaussperiod.cli import CLIRunner
from gaussperiod.errors import PrecisionInsufficient
from gaussperiod.experiments import TheoremReport


class CLITestCase(unittest.TestCase):
    """Runs the command line with captured streams and no ambient configuration"""

    def setUp(self):
        self._env = patch.dict(os.environ, {}, clear=True)
        self._env.start()
        self._tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self._tmp.name)
        self.runner = None

    def tearDown(self):
        logger = logging.getLogger(C.LOGGER_NAME)
        if self.runner is not None and self.runner._handler is not None:
            logger.removeHandler(self.runner._handler)
        logger.propagate = True
        self._tmp.cleanup()
        self._env.stop()

    def run_cli(self, *argv):
        self.runner = CLIRunner(stdout=io.StringIO(), stderr=io.StringIO())
        self.runner.config_loader.config_files = [str(self.dir / 'gaussperiod.yaml')]
        code = self.runner.run(list(argv))
        return code, self.runner.stdout.getvalue()

    def run_json(self, *argv):
        code, out = self.run_cli(*argv)
        return code, json.loads(out) if out else None


class TestArguments(CLITestCase):
    """Test argument handling and exit codes"""

    def test_usage_errors(self):
        self.assertEqual(self.run_cli()[0], C.EXIT_BAD_ARGUMENTS)
        self.assertEqual(self.run_cli('predict')[0], C.EXIT_BAD_ARGUMENTS)
        self.assertEqual(self.run_cli('predict', '--q', '5', '--bogus')[0], C.EXIT_BAD_ARGUMENTS)
        # abbreviations are rejected
        self.assertEqual(self.run_cli('verify-theorem-range', '--p-ma', '50')[0],
                         C.EXIT_BAD_ARGUMENTS)
        self.assertIn('error', self.runner.stderr.getvalue())

    def test_help(self):
        with patch('sys.stdout', new_callable=io.StringIO):
            self.assertEqual(self.run_cli('--help')[0], C.EXIT_OK)

    def test_invalid_configuration(self):
        code, out = self.run_cli('--precision', '16', 'predict', '--q', '5')
        self.assertEqual(code, C.EXIT_BAD_ARGUMENTS)
        self.assertEqual(out, '')

    def test_config_file(self):
        (self.dir / 'custom.yaml').write_text("gaussperiod:\n  ducci:\n    samples: 3\n")
        code, payload = self.run_json('--config', str(self.dir / 'custom.yaml'), 'ducci', '--p', '7')
        self.assertEqual(code, C.EXIT_OK)
        self.assertEqual(payload['starts'], 3)

    def test_output_file(self):
        target = self.dir / 'out' / 'predict.json'
        code, out = self.run_cli('--output', str(target), 'predict', '--q', '2')
        self.assertEqual((code, out), (C.EXIT_OK, ''))
        self.assertEqual(json.loads(target.read_text()), {'1': '2/3', '3': '1/3'})


class TestTheoremCommands(CLITestCase):
    """Test verify-theorem, verify-theorem-range and consequences"""

    def test_verify_theorem(self):
        code, payload = self.run_json('verify-theorem', '--p', '37', '--q', '2')
        self.assertEqual(code, C.EXIT_OK)
        self.assertEqual((payload['lhs'], payload['rhs'], payload['equal']), (3, 3, True))

    def test_hypothesis_violation(self):
        code, out = self.run_cli('verify-theorem', '--p', '17', '--q', '2')
        self.assertEqual((code, out), (C.EXIT_BAD_ARGUMENTS, ''))
        self.assertIn('p = 5 mod 8', self.runner.stderr.getvalue())

    @patch('gaussperiod.cli.runner.check_main_theorem')
    def test_mismatch_report(self, check):
        check.return_value = TheoremReport(p=37, q=2, lhs=3, rhs=1, h_p=1, equal=False)
        code, payload = self.run_json('verify-theorem', '--p', '37', '--q', '2')
        self.assertEqual(code, C.EXIT_ASSERTION_FAILED)
        self.assertEqual(payload['status'], 'failed')
        self.assertEqual(payload['first_failure'], {'p': 37, 'q': 2, 'lhs': 3, 'rhs': 1})

    @patch('gaussperiod.cli.runner.check_main_theorem')
    def test_library_error(self, check):
        check.side_effect = PrecisionInsufficient(37, 128, '1.5')
        code, payload = self.run_json('verify-theorem', '--p', '37', '--q', '2')
        self.assertEqual(code, C.EXIT_ASSERTION_FAILED)
        self.assertEqual(payload['error'], 'PrecisionInsufficient')

    def test_range(self):
        code, payload = self.run_json('verify-theorem-range', '--p-max', '60', '--q-set', '2', '3')
        self.assertEqual(code, C.EXIT_OK)
        self.assertEqual(payload['q_set'], [2, 3])
        self.assertEqual(payload['pairs'], len(payload['reports']))
        self.assertTrue(all(r['equal'] for r in payload['reports']))

    def test_range_csv(self):
        code, out = self.run_cli('--format', 'csv', 'verify-theorem-range', '--p-max', '40',
                                 '--q-set', '2')
        self.assertEqual(code, C.EXIT_OK)
        self.assertEqual(out.splitlines()[0], 'p,q,lhs,rhs,h_p')
        self.assertEqual(out.splitlines()[-1], '37,2,3,3,1')

    def test_consequences(self):
        code, payload = self.run_json('consequences', '--q', '2', '--p', '37')
        self.assertEqual(code, C.EXIT_OK)
        self.assertEqual(payload['consequences'][0]['kind'], 'at_least')


class TestCensusCommands(CLITestCase):
    """Test predict, scan and ik-scan"""

    def test_predict(self):
        code, payload = self.run_json('predict', '--q', '5')
        self.assertEqual((code, payload), (C.EXIT_OK, {'2': '2/3', '6': '1/3'}))

    def test_scan(self):
        csv_path = self.dir / 'scan.csv'
        summary_path = self.dir / 'summary.json'
        code, payload = self.run_json('scan', '--q', '2', '--p-max', '500', '--jobs', '1',
                                      '--csv', str(csv_path), '--summary', str(summary_path))
        self.assertEqual(code, C.EXIT_OK)
        self.assertEqual(set(payload['counts']), {'1', '3'})
        self.assertEqual(json.loads(summary_path.read_text()), payload)
        self.assertEqual(csv_path.read_text().splitlines()[0], C.SCAN_CSV_HEADER)

    def test_scan_csv_and_checkpoint(self):
        checkpoint = self.dir / 'scan.ckpt'
        argv = ('--format', 'csv', 'scan', '--q', '5', '--p-max', '400', '--jobs', '1',
                '--checkpoint', str(checkpoint), '--flush-every', '10')
        first = self.run_cli(*argv)
        second = self.run_cli(*argv)
        self.assertEqual(first[0], C.EXIT_OK)
        self.assertEqual(first, second)
        self.assertTrue(first[1].startswith(C.SCAN_CSV_HEADER + '\n'))

    def test_scan_table_tolerance(self):
        code, payload = self.run_json('scan', '--q', '2', '--p-max', '200', '--jobs', '1',
                                      '--check-table', '--tolerance', '0.0001')
        self.assertEqual(code, C.EXIT_ASSERTION_FAILED)
        self.assertEqual(payload['first_failure']['q'], 2)

    def test_ik_scan(self):
        code, payload = self.run_json('ik-scan', '--q', '5', '--p-max', '500', '--jobs', '1')
        self.assertEqual(code, C.EXIT_OK)
        self.assertEqual(payload['orders_mod_8'], [4])
        self.assertEqual(self.run_cli('ik-scan', '--q', '2', '--p-max', '500')[0],
                         C.EXIT_BAD_ARGUMENTS)


class TestAlgebraCommands(CLITestCase):
    """Test identities, class-numbers and lemma"""

    def test_identities(self):
        code, payload = self.run_json('identities', '--p-max', '40', '--a-values', '1', '2')
        self.assertEqual(code, C.EXIT_OK)
        self.assertEqual([row['p'] for row in payload['results']], [5, 13, 17, 29, 37])
        self.assertEqual(payload['results'][0]['norm_two_orientation'], [-1, 1])

    def test_class_numbers(self):
        code, payload = self.run_json('class-numbers', '--p', '229')
        self.assertEqual(code, C.EXIT_OK)
        self.assertEqual(payload['h_real'], 3)
        self.assertEqual(payload['forms_count'], payload['h_imag'])

        code, payload = self.run_json('class-numbers', '--p-max', '100')
        self.assertEqual(code, C.EXIT_OK)
        self.assertEqual(len(payload['results']), 11)

    def test_lemma(self):
        self.assertEqual(self.run_json('lemma', '--n-max', '30'), (C.EXIT_OK, {'status': 'ok', 'n_max': 30}))


class TestDucciCommands(CLITestCase):
    """Test ducci, corollary and heuristics"""

    def test_exhaustive_csv(self):
        code, out = self.run_cli('--format', 'csv', 'ducci', '--p', '5', '--exhaustive')
        self.assertEqual(code, C.EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(lines[0], 'p,start_encoding,transient,period')
        self.assertEqual(len(lines), 33)
        self.assertIn('5,0:0:0:0:1,1,15', lines)

    def test_sampled(self):
        code, payload = self.run_json('ducci', '--p', '31', '--samples', '4', '--seed', '2')
        self.assertEqual(code, C.EXIT_OK)
        self.assertEqual(payload['starts'], 4)
        self.assertEqual(payload['period_bound'] % payload['largest_period'], 0)

    def test_bad_length(self):
        self.assertEqual(self.run_cli('ducci', '--p', '9')[0], C.EXIT_BAD_ARGUMENTS)
        self.assertEqual(self.run_cli('ducci', '--p', '29', '--exhaustive')[0],
                         C.EXIT_BAD_ARGUMENTS)

    def test_corollary(self):
        code, payload = self.run_json('corollary', '--p', '5')
        self.assertEqual(code, C.EXIT_OK)
        self.assertTrue(payload['consistent'])
        self.assertEqual(self.run_cli('corollary', '--p', '7')[0], C.EXIT_BAD_ARGUMENTS)

    def test_heuristics(self):
        code, payload = self.run_json('heuristics', '--rounded-constant')
        self.assertEqual(code, C.EXIT_OK)
        self.assertEqual(payload['twin_prime_C'], 0.66)
        self.assertAlmostEqual(payload['cohen_lenstra_3'], 0.159811, delta=1e-6)


if __name__ == '__main__':
    unittest.main()
