# -*- coding: utf8 -*-

import unittest
from math import prod

from hypothesis import given, settings, strategies as st

from gaussperiod.arith import (
    cyclic_index, factorize, generated_by_minus_one_and_q, is_prime, jacobi, order_mod,
    primes_up_to, set_factor_budget, Factorization,
)
from gaussperiod.constants import FACTOR_MAX_ITERATIONS
from gaussperiod.errors import (
    FactorizationTimeout, InvariantViolation, NotAUnit, ParameterOutOfRange,
)


class TestPrimality(unittest.TestCase):
    """Test Miller-Rabin and the sieve"""

    def test_small_values(self):
        """Test primality of small integers against the sieve"""
        sieve = set(int(p) for p in primes_up_to(2000))
        for n in range(-3, 2001):
            self.assertEqual(is_prime(n), n in sieve, n)

    def test_pseudoprimes_rejected(self):
        """Test Carmichael numbers and strong pseudoprimes"""
        for n in (561, 1105, 1729, 2047, 3215031751, 3825123056546413051):
            self.assertFalse(is_prime(n), n)

    def test_large_values(self):
        """Test Mersenne numbers on both sides of 2**64"""
        self.assertTrue(is_prime(2 ** 61 - 1))
        self.assertTrue(is_prime(2 ** 89 - 1))
        self.assertFalse(is_prime(2 ** 67 - 1))
        self.assertFalse(is_prime((2 ** 61 - 1) * (2 ** 31 - 1)))

    def test_primes_up_to(self):
        self.assertEqual(primes_up_to(30).tolist(), [2, 3, 5, 7, 11, 13, 17, 19, 23, 29])
        self.assertEqual(len(primes_up_to(1)), 0)
        self.assertEqual(len(primes_up_to(10 ** 5)), 9592)


class TestFactorization(unittest.TestCase):
    """Test trial division plus Pollard rho"""

    def tearDown(self):
        set_factor_budget(FACTOR_MAX_ITERATIONS)

    def test_small(self):
        f = factorize(360)
        self.assertEqual(f.factors, ((2, 3), (3, 2), (5, 1)))
        self.assertEqual(len(f.divisors()), 24)
        self.assertEqual(str(f), "2^3*3^2*5")

    def test_large_semiprime(self):
        """Test a split that needs Pollard rho"""
        f = factorize(2 ** 67 - 1)
        self.assertEqual(f.factors, ((193707721, 1), (761838257287, 1)))

    def test_timeout(self):
        """Test that an exhausted budget raises instead of returning a wrong answer"""
        n = (2 ** 61 - 1) * (2 ** 31 - 1)
        with self.assertRaises(FactorizationTimeout) as ctx:
            factorize(n, 1)
        self.assertEqual(ctx.exception.n, n)

    def test_budget_setter(self):
        with self.assertRaises(ParameterOutOfRange):
            set_factor_budget(0)
        set_factor_budget(10)
        self.assertEqual(factorize(2 * 3 * 65537).primes, [2, 3, 65537])

    def test_invalid_input(self):
        with self.assertRaises(ParameterOutOfRange):
            factorize(1)
        with self.assertRaises(InvariantViolation):
            Factorization(12, ((2, 2),))
        with self.assertRaises(InvariantViolation):
            Factorization.from_pairs([(4, 1)])

    @given(st.integers(min_value=2, max_value=10 ** 15))
    @settings(max_examples=200, deadline=None)
    def test_product_of_primes(self, n):
        """Test that every factorization multiplies back and has prime factors"""
        f = factorize(n)
        self.assertEqual(prod(p ** e for p, e in f.factors), n)
        self.assertTrue(all(is_prime(p) for p in f.primes))


class TestGroups(unittest.TestCase):
    """Test Jacobi symbols, orders and the generation test"""

    def test_jacobi(self):
        self.assertEqual(jacobi(2, 7), 1)
        self.assertEqual(jacobi(3, 7), -1)
        self.assertEqual(jacobi(5, 9), 1)
        self.assertEqual(jacobi(6, 9), 0)
        self.assertEqual(jacobi(1, 1), 1)
        with self.assertRaises(ParameterOutOfRange):
            jacobi(2, 8)

    @given(st.sampled_from([int(p) for p in primes_up_to(500)[1:]]), st.integers(0, 10 ** 6))
    @settings(max_examples=200, deadline=None)
    def test_jacobi_is_euler_criterion(self, p, a):
        """Test (a/p) = a^((p-1)/2) mod p for prime p"""
        euler = pow(a, (p - 1) // 2, p)
        self.assertEqual(jacobi(a, p) % p, euler)

    def test_order_mod(self):
        self.assertEqual(order_mod(2, 7, factorize(6)), 3)
        self.assertEqual(order_mod(3, 7, factorize(6)), 6)
        self.assertEqual(order_mod(2, 37, factorize(36)), 36)
        with self.assertRaises(NotAUnit):
            order_mod(7, 14, factorize(6))

    def test_generation_hypothesis(self):
        """Test <-1, q> = (Z/pZ)*"""
        self.assertTrue(generated_by_minus_one_and_q(2, 5))
        self.assertTrue(generated_by_minus_one_and_q(2, 37))
        self.assertTrue(generated_by_minus_one_and_q(2, 7))
        self.assertFalse(generated_by_minus_one_and_q(2, 17))
        self.assertFalse(generated_by_minus_one_and_q(3, 13))
        self.assertFalse(generated_by_minus_one_and_q(13, 13))

    def test_generation_hypothesis_matches_enumeration(self):
        for p in (int(v) for v in primes_up_to(200)[1:]):
            for q in (2, 3, 5, 7):
                if q == p:
                    continue
                generated = {(-1) ** i * pow(q, j, p) % p for i in range(2) for j in range(p - 1)}
                self.assertEqual(generated_by_minus_one_and_q(q, p), len(generated) == p - 1, (p, q))

    def test_cyclic_index(self):
        self.assertEqual(cyclic_index(0, 6), 6)
        self.assertEqual(cyclic_index(1, 6), 1)
        self.assertEqual(cyclic_index(4, 6), 2)
        self.assertEqual(cyclic_index(0, 1), 1)


if __name__ == '__main__':
    unittest.main()
