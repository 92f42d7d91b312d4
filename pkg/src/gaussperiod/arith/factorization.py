# -*- coding: utf-8 -*-
"""
Integer Factorization
Trial division followed by Brent's variant of Pollard rho, under an iteration budget
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, prod
from typing import Dict, Iterable, List, Optional, Tuple

from .primality import is_prime, primes_up_to
from ..constants import LOGGER_NAME, FACTOR_MAX_ITERATIONS, TRIAL_DIVISION_LIMIT
from ..errors import FactorizationTimeout, InvariantViolation, ParameterOutOfRange

logger = logging.getLogger(LOGGER_NAME)

_TRIAL_PRIMES: Tuple[int, ...] = tuple(int(p) for p in primes_up_to(TRIAL_DIVISION_LIMIT))


@dataclass(frozen=True)
class Factorization:
    """A positive integer together with its prime factorization"""
    value: int
    factors: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if self.value < 1:
            raise InvariantViolation("factorization of a positive integer", f"value={self.value}")
        primes = [p for p, _ in self.factors]
        if any(b <= a for a, b in zip(primes, primes[1:])):
            raise InvariantViolation("primes strictly increasing", str(self.factors))
        if any(e < 1 for _, e in self.factors):
            raise InvariantViolation("positive exponents", str(self.factors))
        if self.multiply_out() != self.value:
            raise InvariantViolation("product of prime powers equals value",
                                     f"{self.factors} vs {self.value}")

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]) -> 'Factorization':
        """Build from (prime, exponent) pairs in any order, certifying each prime"""
        merged: Dict[int, int] = {}
        for p, e in pairs:
            if not is_prime(p):
                raise InvariantViolation("factor is prime", str(p))
            merged[p] = merged.get(p, 0) + e
        ordered = tuple(sorted(merged.items()))
        return cls(prod(p ** e for p, e in ordered), ordered)

    @property
    def primes(self) -> List[int]:
        return [p for p, _ in self.factors]

    def multiply_out(self) -> int:
        return prod(p ** e for p, e in self.factors)

    def divisors(self) -> List[int]:
        """All positive divisors, ascending"""
        divs = [1]
        for p, e in self.factors:
            divs = [d * p ** k for d in divs for k in range(e + 1)]
        return sorted(divs)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def _brent(n: int, c: int, budget: int) -> Tuple[int, int]:
    """One Pollard-Brent attempt; returns (nontrivial factor or 0, iterations used)"""
    y, r, q, g = 2, 1, 1, 1
    x = ys = y
    used = 0
    batch = 128
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        used += r
        k = 0
        while k < r and g == 1:
            ys = y
            steps = min(batch, r - k)
            for _ in range(steps):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            used += steps
            g = gcd(q, n)
            k += batch
        r *= 2
        if used > budget:
            return 0, used
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
            if g > 1:
                break
    return (g if g != n else 0), used


def _split(n: int, budget: int, original: int) -> Tuple[int, int]:
    """Find a nontrivial factor of composite n; returns (factor, iterations used)"""
    used = 0
    c = 1
    while used <= budget:
        factor, spent = _brent(n, c, budget - used)
        used += spent
        if factor:
            return factor, used
        c += 1
    raise FactorizationTimeout(original, n, budget)


_budget = {"max_iterations": FACTOR_MAX_ITERATIONS}


def set_factor_budget(max_iterations: int) -> None:
    """Default Pollard rho budget for calls that do not pass one"""
    if max_iterations < 1:
        raise ParameterOutOfRange("max_iterations", max_iterations)
    _budget["max_iterations"] = max_iterations


@lru_cache(maxsize=4096)
def factorize(n: int, max_iterations: Optional[int] = None) -> Factorization:
    """
    Factor n >= 2

    Raises FactorizationTimeout when Pollard rho cannot split a composite cofactor
    within max_iterations polynomial steps in total (default: set_factor_budget).
    """
    if n < 2:
        raise ParameterOutOfRange("n", n, f"factorize requires n >= 2, got {n}")

    counts: Dict[int, int] = {}
    m = n
    for p in _TRIAL_PRIMES:
        if p * p > m:
            break
        while m % p == 0:
            m //= p
            counts[p] = counts.get(p, 0) + 1

    pending = [m] if m > 1 else []
    budget = max_iterations if max_iterations is not None else _budget["max_iterations"]
    while pending:
        m = pending.pop()
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        factor, used = _split(m, budget, n)
        budget -= used
        logger.debug(f"Split {m} = {factor} * {m // factor} after {used} iterations")
        pending.extend((factor, m // factor))

    return Factorization.from_pairs(counts.items())
