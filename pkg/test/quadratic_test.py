# -*- coding: utf8 -*-

import unittest
from unittest.mock import patch

import mpmath
from hypothesis import given, settings, strategies as st

from gaussperiod.arith import primes_up_to
from gaussperiod.errors import (
    HypothesisViolated, InvariantViolation, NotAUnit, NotInert, ParameterOutOfRange,
    PrecisionInsufficient,
)
from gaussperiod.quadratic import (
    QuadRing, brute_force_unit, class_data, class_number_imag, class_number_imag_forms,
    class_number_real, class_number_real_adaptive, fundamental_unit, fundamental_unit_mod,
    is_inert, quad_index, quad_order, rhs_theorem, unit_mod_q, unit_power,
)

PRIMES_1_MOD_4 = [int(p) for p in primes_up_to(3000) if p % 4 == 1]
PRIMES_1_MOD_4_LARGE = [int(p) for p in primes_up_to(10 ** 6) if p % 4 == 1]


class TestFundamentalUnit(unittest.TestCase):
    """Test the continued fraction unit"""

    def test_known_units(self):
        for p, x, y in ((5, 1, 1), (13, 3, 1), (17, 8, 2), (29, 5, 1), (37, 12, 2)):
            unit = fundamental_unit(p)
            self.assertEqual((unit.x, unit.y), (x, y), p)
            self.assertEqual(unit.norm, -1)
        self.assertAlmostEqual(fundamental_unit(5).log(), 0.4812118, places=6)

    def test_large_prime(self):
        """Test a prime whose unit is far too large for floating point"""
        p = max(PRIMES_1_MOD_4_LARGE)
        unit = fundamental_unit(p)
        self.assertEqual(unit.x * unit.x - p * unit.y * unit.y, -4)

    def test_agrees_with_brute_force(self):
        for p in PRIMES_1_MOD_4[:30]:
            unit = fundamental_unit(p)
            found = brute_force_unit(p, unit.y)
            self.assertEqual(found, (unit.x, unit.y, -1), p)

    def test_rejects_other_primes(self):
        for p in (3, 7, 21, 25):
            with self.assertRaises(ParameterOutOfRange):
                fundamental_unit(p)

    @given(st.sampled_from(PRIMES_1_MOD_4), st.integers(2, 10 ** 9))
    @settings(max_examples=100, deadline=None)
    def test_reduced_unit(self, p, m):
        unit = fundamental_unit(p)
        self.assertEqual(fundamental_unit_mod(p, m), (unit.x % m, unit.y % m))

    def test_unit_power(self):
        self.assertEqual(unit_power(5, 1, 1, 2), (3, 1))
        self.assertEqual(unit_power(5, 1, 1, -1), (-1, 1))
        self.assertEqual(unit_power(5, 1, 1, 0), (2, 0))
        x, y = unit_power(13, 3, 1, 5)
        self.assertEqual(x * x - 13 * y * y, -4)
        with self.assertRaises(ParameterOutOfRange):
            unit_power(5, 4, 0, -1)


class TestResidueRing(unittest.TestCase):
    """Test O_K/qO_K"""

    def test_unit_mod_two(self):
        self.assertEqual((unit_mod_q(5, 2).a, unit_mod_q(5, 2).b), (0, 1))
        self.assertTrue(unit_mod_q(37, 2).is_one())
        self.assertEqual(quad_order(unit_mod_q(5, 2), 2), 3)
        self.assertEqual(quad_index(unit_mod_q(37, 2), 2), 3)

    def test_inertness(self):
        self.assertTrue(is_inert(5, 2))
        self.assertFalse(is_inert(17, 2))
        self.assertTrue(is_inert(5, 3))
        self.assertFalse(is_inert(13, 3))
        with self.assertRaises(NotInert):
            unit_mod_q(17, 2)
        with self.assertRaises(NotInert):
            unit_mod_q(5, 5)

    def test_unit_has_norm_minus_one(self):
        for p in PRIMES_1_MOD_4[:60]:
            for q in (3, 5, 7, 11):
                if is_inert(p, q):
                    self.assertEqual(unit_mod_q(p, q).norm(), q - 1, (p, q))

    def test_ring_arithmetic(self):
        ring = QuadRing.for_residue(2, 5)
        x = ring.element(0, 1)
        # X^2 = X - c
        self.assertEqual(x * x, ring.element(-ring.constant, 1))
        self.assertTrue((x ** 24).is_one())
        self.assertEqual(sum(1 for e in ring.elements() if not e.is_zero()), 24)
        with self.assertRaises(NotAUnit):
            quad_order(ring.element(0, 0), 5)
        with self.assertRaises(NotInert):
            QuadRing.for_prime(17, 2)

    def test_right_hand_side(self):
        self.assertEqual(rhs_theorem(37, 2, 1), 3)
        self.assertEqual(rhs_theorem(5, 2, 1), 1)
        with self.assertRaises(HypothesisViolated):
            rhs_theorem(17, 2, 1)
        with self.assertRaises(HypothesisViolated):
            rhs_theorem(13, 3, 1)


class TestClassNumbers(unittest.TestCase):
    """Test h_p and h(-p)"""

    def test_real_class_numbers(self):
        for p in (5, 13, 17, 29, 37, 41, 53, 61):
            self.assertEqual(class_number_real(p), 1, p)
        self.assertEqual(class_number_real(229), 3)
        self.assertEqual(class_number_real_adaptive(229), 3)

    def test_imaginary_class_numbers(self):
        self.assertEqual(class_number_imag(5), (2, 0))
        self.assertEqual(class_number_imag(13), (2, 1))
        self.assertEqual(class_number_imag(17), (4, 1))

    def test_residue_count_matches_reduced_forms(self):
        for p in PRIMES_1_MOD_4[:80]:
            self.assertEqual(class_number_imag(p)[0], class_number_imag_forms(p), p)

    def test_class_data(self):
        data = class_data(229)
        self.assertEqual((data.h_real, data.h_imag % 2), (3, 0))

    @patch('gaussperiod.quadratic.class_numbers._real_class_number_estimate')
    def test_uncertified_estimate(self, estimate):
        estimate.return_value = mpmath.mpf('2.5')
        with self.assertRaises(PrecisionInsufficient):
            class_number_real(5)
        with self.assertRaises(PrecisionInsufficient):
            class_number_real_adaptive(5, 128, 128)

    @patch('gaussperiod.quadratic.class_numbers._real_class_number_estimate')
    def test_even_estimate(self, estimate):
        estimate.return_value = mpmath.mpf(2)
        with self.assertRaises(InvariantViolation):
            class_number_real(5)

    @patch('gaussperiod.quadratic.class_numbers._real_class_number_estimate')
    def test_adaptive_retry(self, estimate):
        """Test that the precision doubles after an uncertified attempt"""
        estimate.side_effect = [mpmath.mpf('2.5'), mpmath.mpf(3)]
        with self.assertLogs('gaussperiod', level='WARNING'):
            self.assertEqual(class_number_real_adaptive(5, 128, 1024), 3)
        first, second = (call.args[2] for call in estimate.call_args_list)
        self.assertEqual(second, 2 * first)


if __name__ == '__main__':
    unittest.main()
