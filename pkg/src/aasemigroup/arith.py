"""Checked integer primitives.

Python integers never wrap, so "overflow" here means leaving the signed
128-bit range that every scalar in the package is declared to live in.
"""

from __future__ import annotations

INT_BITS = 128
INT_MAX = (1 << (INT_BITS - 1)) - 1
INT_MIN = -(1 << (INT_BITS - 1))


class NotCoprime(ValueError):
    """Raised when a modular inverse or coprimality precondition fails."""


class InternalInconsistency(ArithmeticError):
    """An identity that must hold by construction did not; indicates a bug."""


def checked(x: int) -> int:
    """Return ``x`` unchanged, raising :class:`OverflowError` outside int128."""
    if x > INT_MAX or x < INT_MIN:
        raise OverflowError(f"value {x} exceeds the {INT_BITS}-bit signed range")
    return x


def gcd(x: int, y: int) -> int:
    x, y = abs(x), abs(y)
    while y:
        x, y = y, x % y
    return x


def gcd_many(*xs: int) -> int:
    g = 0
    for x in xs:
        g = gcd(g, x)
    return g


def mod_inverse(x: int, n: int) -> int:
    """Return ``u`` in ``[0, n)`` with ``x*u = 1 (mod n)``."""
    if n < 1:
        raise ValueError("modulus must be positive")
    # extended Euclid on (x mod n, n)
    r0, r1 = x % n, n
    u0, u1 = 1, 0
    while r1:
        qt = r0 // r1
        r0, r1 = r1, r0 - qt * r1
        u0, u1 = u1, u0 - qt * u1
    if r0 != 1 and n != 1:
        raise NotCoprime(f"gcd({x}, {n}) = {r0} != 1")
    return u0 % n


def ceil_div(x: int, k: int) -> int:
    if k < 1:
        raise ValueError("divisor must be >= 1")
    return -((-x) // k)


def exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise InternalInconsistency(f"{num} is not divisible by {den}")
    return q


def sum_ceil_div(X: int, k: int) -> int:
    """Closed form of ``sum(ceil(x/k) for x in range(X+1))``; 0 for X < 0."""
    if X < 0:
        return 0
    q, r = divmod(X, k)
    return k * q * (q + 1) // 2 + r * (q + 1)
