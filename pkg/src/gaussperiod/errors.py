# -*- coding: utf-8 -*-
"""
Exceptions
Every error raised by the library derives from GaussPeriodError
"""

from typing import Optional


class GaussPeriodError(Exception):
    """Common library exception"""
    pass


class InvariantViolation(GaussPeriodError):
    """A computed result failed its postcondition"""

    def __init__(self, what: str, detail: Optional[str] = None):
        self.what = what
        self.detail = detail
        super().__init__(f"Invariant violated: {what}" + (f" ({detail})" if detail else ""))


class ParameterOutOfRange(GaussPeriodError):
    """A parameter is outside the supported range"""

    def __init__(self, name: str, value, message: Optional[str] = None):
        self.name = name
        self.value = value
        super().__init__(message or f"Parameter {name}={value} is out of range")


class NotAUnit(GaussPeriodError):
    """Element is not invertible"""

    def __init__(self, element, modulus=None):
        self.element = element
        self.modulus = modulus
        suffix = f" modulo {modulus}" if modulus is not None else ""
        super().__init__(f"{element} is not a unit{suffix}")


class ZeroElement(NotAUnit):
    """Order or index requested for the zero element"""

    def __init__(self, modulus=None):
        super().__init__(0, modulus)


class FactorizationTimeout(GaussPeriodError):
    """Pollard rho exhausted its iteration budget"""

    def __init__(self, n: int, cofactor: int, budget: int):
        self.n = n
        self.cofactor = cofactor
        self.budget = budget
        super().__init__(
            f"Could not split cofactor {cofactor} of {n} within {budget} iterations")


class HypothesisViolated(GaussPeriodError):
    """Input violates a hypothesis of the theorem being exercised"""

    def __init__(self, hypothesis: str, p: Optional[int] = None, q: Optional[int] = None,
                 order: Optional[int] = None):
        self.hypothesis = hypothesis
        self.p = p
        self.q = q
        self.order = order
        parts = [f"Hypothesis violated: {hypothesis}"]
        if p is not None:
            parts.append(f"p={p}")
        if q is not None:
            parts.append(f"q={q}")
        if order is not None:
            parts.append(f"ord_p(q)={order}")
        super().__init__(", ".join(parts))


class ContextMismatch(GaussPeriodError):
    """Operands live in different rings"""

    def __init__(self, left, right):
        self.left = left
        self.right = right
        super().__init__(f"Operands belong to different rings: {left} vs {right}")


class NotADivisor(GaussPeriodError):
    """Requested modulus does not divide the group order"""

    def __init__(self, m: int, group_order: int):
        self.m = m
        self.group_order = group_order
        super().__init__(f"{m} does not divide {group_order}")


class NotInert(GaussPeriodError):
    """q is not inert in Q(sqrt p)"""

    def __init__(self, p: int, q: int):
        self.p = p
        self.q = q
        super().__init__(f"{q} is not inert in Q(sqrt {p})")


class PrecisionInsufficient(GaussPeriodError):
    """Floating point evaluation could not be certified"""

    def __init__(self, p: int, precision_bits: int, value=None):
        self.p = p
        self.precision_bits = precision_bits
        self.value = value
        super().__init__(
            f"Class number of Q(sqrt {p}) not certified at {precision_bits} bits (got {value})")


class CheckpointCorrupt(GaussPeriodError):
    """Checkpoint file cannot be resumed"""

    def __init__(self, path, reason: str):
        self.path = path
        self.reason = reason
        super().__init__(f"Checkpoint {path} is corrupt: {reason}")


class DucciBudgetExceeded(GaussPeriodError):
    """No cycle found within the step budget"""

    def __init__(self, length: int, max_steps: int):
        self.length = length
        self.max_steps = max_steps
        super().__init__(f"Ducci orbit of length {length} did not cycle within {max_steps} steps")
