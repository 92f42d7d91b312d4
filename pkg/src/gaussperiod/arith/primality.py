# -*- coding: utf-8 -*-
"""
Primality
Strong-pseudoprime testing and sieving
"""

import random

import numpy as np

from ..constants import MILLER_RABIN_64_BASES, MILLER_RABIN_EXTRA_ROUNDS

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


def _is_strong_probable_prime(n: int, base: int, d: int, s: int) -> bool:
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """
    Miller-Rabin primality test

    Deterministic below 2**64 (the first twelve primes are a complete witness set there);
    above, MILLER_RABIN_EXTRA_ROUNDS further bases drawn from a generator seeded by n keep
    the error below 2**-128 while staying reproducible.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p

    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1

    for base in MILLER_RABIN_64_BASES:
        if not _is_strong_probable_prime(n, base, d, s):
            return False
    if n < 1 << 64:
        return True

    rng = random.Random(n)
    for _ in range(MILLER_RABIN_EXTRA_ROUNDS):
        if not _is_strong_probable_prime(n, rng.randrange(2, n - 1), d, s):
            return False
    return True


def primes_up_to(n: int) -> np.ndarray:
    """All primes <= n in ascending order (sieve of Eratosthenes)"""
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    sieve[4::2] = False
    for i in range(3, int(n ** 0.5) + 1, 2):
        if sieve[i]:
            sieve[i * i::2 * i] = False
    return np.flatnonzero(sieve).astype(np.int64)
