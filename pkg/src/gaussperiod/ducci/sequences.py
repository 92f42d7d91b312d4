# -*- coding: utf-8 -*-
"""
Ducci Sequences
Iteration of D(x_1, ..., x_n) = (|x_1 - x_2|, ..., |x_n - x_1|), cycle detection, and the
algebraic model of the eventual behaviour

Every orbit of odd length n ends in a cycle of the form c * s with s binary. On binary vectors
D is multiplication by 1 + x^-1 in F_2[x]/(x^n - 1), with bit i of a mask standing for x^i.
"""

import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, Optional, Sequence, Tuple

import numpy as np

from ..arith import factorize, is_prime, minimal_exponent, order_mod
from ..constants import DUCCI_ENTRY_BOUND, DUCCI_SEED
from ..errors import DucciBudgetExceeded, InvariantViolation, ParameterOutOfRange


@dataclass(frozen=True)
class DucciState:
    entries: Tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) < 2:
            raise ParameterOutOfRange("length", len(self.entries), "Ducci vectors need length >= 2")
        if any(x < 0 for x in self.entries):
            raise ParameterOutOfRange("entries", self.entries, "entries must be nonnegative")

    @classmethod
    def of(cls, values: Sequence[int]) -> 'DucciState':
        return cls(tuple(int(v) for v in values))

    @property
    def length(self) -> int:
        return len(self.entries)

    def scaled(self, c: int) -> 'DucciState':
        return DucciState(tuple(c * x for x in self.entries))

    def encoding(self) -> str:
        return ':'.join(str(x) for x in self.entries)


@dataclass(frozen=True)
class DucciOrbit:
    transient: int
    period: int


def ducci_step(v: DucciState) -> DucciState:
    e = v.entries
    return DucciState(tuple(abs(a - b) for a, b in zip(e, e[1:] + e[:1])))


def _binary_mask(entries: Sequence[int]) -> Optional[int]:
    if any(x not in (0, 1) for x in entries):
        return None
    return sum(1 << i for i, x in enumerate(entries) if x)


def _binary_step(mask: int, n: int) -> int:
    # v_i xor v_{i+1}
    return mask ^ ((mask >> 1) | ((mask & 1) << (n - 1)))


def ducci_orbit(v: DucciState, max_steps: int) -> DucciOrbit:
    """Transient length and period by hashed cycle detection"""
    n = v.length
    mask = _binary_mask(v.entries)
    seen: Dict[object, int] = {}
    if mask is not None:
        state: object = mask
        advance = lambda s: _binary_step(s, n)
    else:
        state = v.entries
        advance = lambda s: ducci_step(DucciState(s)).entries
    for step in range(max_steps + 1):
        first = seen.get(state)
        if first is not None:
            return DucciOrbit(transient=first, period=step - first)
        seen[state] = step
        state = advance(state)
    raise DucciBudgetExceeded(n, max_steps)


def eventual_period(v: DucciState, max_steps: int) -> int:
    return ducci_orbit(v, max_steps).period


def _rotate_left(a: int, n: int, mask: int) -> int:
    return ((a << 1) | (a >> (n - 1))) & mask


def _mulmod(a: int, b: int, n: int) -> int:
    """Product in F_2[x]/(x^n - 1)"""
    full = (1 << n) - 1
    result = 0
    while b:
        if b & 1:
            result ^= a
        b >>= 1
        a = _rotate_left(a, n, full)
    return result


def _powmod(a: int, e: int, n: int) -> int:
    result = 1
    while e:
        if e & 1:
            result = _mulmod(result, a, n)
        a = _mulmod(a, a, n)
        e >>= 1
    return result


def _ducci_operator(n: int) -> int:
    """1 + x^-1"""
    return 1 | (1 << (n - 1))


def scaled_binary_form(v: DucciState, max_steps: int) -> Tuple[int, int, int]:
    """
    (steps, c, s) with D^steps(v) = c * s, s binary and on the cycle

    Cycle states are exactly the even-weight binary vectors (the multiples of 1 + x), scaled.
    """
    n = v.length
    if n % 2 == 0:
        raise ParameterOutOfRange("length", n, "the binary model needs odd length")
    state = v
    for step in range(max_steps + 1):
        nonzero = {x for x in state.entries if x}
        if len(nonzero) <= 1:
            c = nonzero.pop() if nonzero else 1
            s = _binary_mask([x // c for x in state.entries])
            if bin(s).count('1') % 2:
                s = _binary_step(s, n)
                step += 1
            return step, c, s
        state = ducci_step(state)
    raise DucciBudgetExceeded(n, max_steps)


def cycle_multiple(p: int) -> int:
    """2^ord_p(2) - 1, a multiple of every Ducci period for odd prime length p"""
    if p < 3 or not is_prime(p):
        raise ParameterOutOfRange("p", p, "odd prime length expected")
    return 2 ** order_mod(2, p, factorize(p - 1)) - 1


def period_divides(v: DucciState, bound: int, max_steps: int = 10 ** 6) -> bool:
    """Whether the eventual period of v divides bound, without walking the cycle"""
    if bound < 1:
        raise ParameterOutOfRange("bound", bound)
    n = v.length
    _, _, s = scaled_binary_form(v, max_steps)
    return _mulmod(_powmod(_ducci_operator(n), bound, n), s, n) == s


def algebraic_orbit(v: DucciState, max_steps: int = 10 ** 6) -> DucciOrbit:
    """
    Exact transient and period through the binary model

    The transient is exact: scaled_binary_form stops at the first state c * s with s of even
    weight, and those are exactly the cycle states (see the module docstring).
    """
    n = v.length
    steps, _, s = scaled_binary_form(v, max_steps)
    u = _ducci_operator(n)
    multiple = cycle_multiple(n)
    if _mulmod(_powmod(u, multiple, n), s, n) != s:
        raise InvariantViolation("Ducci period divides 2^ord_n(2) - 1", f"n={n}")
    period = minimal_exponent(factorize(multiple),
                              lambda e: _mulmod(_powmod(u, e, n), s, n) == s)
    return DucciOrbit(transient=steps, period=period)


def binary_starts(n: int) -> Iterator[DucciState]:
    for bits in itertools.product((0, 1), repeat=n):
        yield DucciState(bits)


def random_starts(n: int, samples: int, seed: int = DUCCI_SEED,
                  entry_bound: int = DUCCI_ENTRY_BOUND) -> Iterator[DucciState]:
    """Seeded integer starts with entries in [0, entry_bound)"""
    rng = np.random.default_rng(seed)
    for row in rng.integers(0, entry_bound, size=(samples, n)):
        yield DucciState.of(row.tolist())


def unit_start(n: int) -> DucciState:
    """(0, ..., 0, 1), whose period is the largest possible"""
    return DucciState(tuple([0] * (n - 1) + [1]))
