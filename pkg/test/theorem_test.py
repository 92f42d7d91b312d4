# -*- coding: utf8 -*-

import os
import unittest

from gaussperiod.errors import HypothesisViolated, ParameterOutOfRange
from gaussperiod.experiments import (
    check_hypotheses, check_main_theorem, check_main_theorem_range, projection_counterexample,
    theorem_consequences, theorem_pairs, verify_cyclic_projection_lemma,
)

SLOW_TESTS = os.getenv('GAUSSPERIOD_SLOW_TESTS') == '1'


class TestMainTheorem(unittest.TestCase):
    """Test both sides of the index identity"""

    def test_known_pairs(self):
        report = check_main_theorem(37, 2)
        self.assertEqual((report.lhs, report.rhs, report.h_p), (3, 3, 1))
        self.assertTrue(report.equal)

        report = check_main_theorem(5, 2)
        self.assertEqual((report.lhs, report.rhs), (1, 1))

    def test_class_number_three(self):
        """Test a field with h_p = 3, where the class number enters the right-hand side"""
        for q in (2, 3, 5, 7, 11, 13, 17, 19):
            try:
                check_hypotheses(229, q)
            except HypothesisViolated:
                continue
            report = check_main_theorem(229, q)
            self.assertEqual(report.h_p, 3)
            self.assertTrue(report.equal, report)

    def test_hypotheses(self):
        with self.assertRaises(HypothesisViolated) as ctx:
            check_main_theorem(17, 2)
        self.assertEqual(ctx.exception.hypothesis, "p = 5 mod 8")
        with self.assertRaises(HypothesisViolated) as ctx:
            check_main_theorem(13, 3)
        self.assertEqual(ctx.exception.order, 3)
        with self.assertRaises(ParameterOutOfRange):
            check_main_theorem(5, 4)
        with self.assertRaises(ParameterOutOfRange):
            check_main_theorem(21, 2)

    def test_pairs(self):
        pairs = list(theorem_pairs(40, (2, 3)))
        self.assertEqual(pairs, [(5, 2), (5, 3), (13, 2), (29, 2), (29, 3), (37, 2)])

    def test_small_range(self):
        reports = check_main_theorem_range(200, (2, 3, 5, 7))
        self.assertTrue(reports)
        self.assertTrue(all(r.equal for r in reports), [r for r in reports if not r.equal])

    @unittest.skipUnless(SLOW_TESTS, "set GAUSSPERIOD_SLOW_TESTS=1")
    def test_default_range(self):
        reports = check_main_theorem_range()
        self.assertTrue(all(r.equal for r in reports))


class TestConsequences(unittest.TestCase):
    """Test what the unit index says about ind(alpha)"""

    def test_q_two(self):
        (only,) = theorem_consequences(2, 37)
        self.assertEqual((only.prime, only.full_valuation, only.unit_valuation), (3, 1, 1))
        self.assertEqual(only.kind, "at_least")

        (only,) = theorem_consequences(2, 5)
        self.assertEqual((only.unit_valuation, only.kind), (0, "exact_unless_h"))

    def test_kinds_cover_every_prime(self):
        consequences = theorem_consequences(7, 5)
        self.assertEqual([c.prime for c in consequences], [2, 3])
        for c in consequences:
            self.assertIn(c.kind, ("exact", "at_least", "exact_unless_h"))
            self.assertLessEqual(c.unit_valuation, c.full_valuation)


class TestProjectionLemma(unittest.TestCase):
    """Test ind(g mod M) = gcd(ind(g), M)"""

    def test_no_counterexample(self):
        self.assertIsNone(projection_counterexample(120))
        self.assertTrue(verify_cyclic_projection_lemma(60))


if __name__ == '__main__':
    unittest.main()
