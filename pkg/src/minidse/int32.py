"""Fixed-width integer semantics shared by the interpreter and the solvers.

All program arithmetic is 32-bit two's complement.  Division truncates
toward zero and the remainder takes the sign of the dividend, matching
C99 semantics bit for bit.
"""
from __future__ import annotations

INT_BITS = 32
INT_MIN = -(1 << (INT_BITS - 1))
INT_MAX = (1 << (INT_BITS - 1)) - 1
_MASK = (1 << INT_BITS) - 1
_SIGN = 1 << (INT_BITS - 1)


class EvalFault(Exception):
    """Raised on division or modulo by zero during concrete evaluation."""

    def __init__(self, kind: str = "div-by-zero"):
        super().__init__(kind)
        self.kind = kind


def wrap32(v: int) -> int:
    """Reduce an unbounded integer into signed 32-bit two's complement."""
    v &= _MASK
    return v - (1 << INT_BITS) if v & _SIGN else v


def domain_bounds(bits: int) -> tuple[int, int]:
    """Inclusive signed range of a bit-width in 1..32."""
    if not 1 <= bits <= INT_BITS:
        raise ValueError(f"domain bits must be in 1..{INT_BITS}, got {bits}")
    return -(1 << (bits - 1)), (1 << (bits - 1)) - 1


def cdiv(a: int, b: int) -> int:
    """Truncating division; faults on b == 0."""
    if b == 0:
        raise EvalFault("div-by-zero")
    q = abs(a) // abs(b)
    if (a < 0) != (b < 0):
        q = -q
    return wrap32(q)


def cmod(a: int, b: int) -> int:
    """Remainder with the sign of the dividend; faults on b == 0."""
    if b == 0:
        raise EvalFault("div-by-zero")
    r = abs(a) % abs(b)
    if a < 0:
        r = -r
    return wrap32(r)
