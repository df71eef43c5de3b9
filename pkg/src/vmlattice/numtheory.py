"""Modular arithmetic helpers: gcd, inverses, primality, primitive roots.

All functions operate on plain Python integers, so there is no overflow
to worry about at any modulus size used here.
"""

from __future__ import annotations

import math

from .errors import NotInvertible, NotPrime, DomainError

# Deterministic Miller-Rabin witness set, sufficient for every n < 3.3e24
# (in particular for all 64-bit inputs).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def gcd(a: int, b: int) -> int:
    """Greatest common divisor, gcd(0, 0) = 0."""
    return math.gcd(a, b)


def mod_inverse(a: int, n: int) -> int:
    """Inverse of a modulo n, in {1, ..., n-1}.

    Raises NotInvertible when gcd(a, n) != 1.
    """
    if n < 2:
        raise DomainError(f"modulus must be >= 2, got {n}")
    if math.gcd(a % n, n) != 1:
        raise NotInvertible(f"{a} is not invertible modulo {n}")
    return pow(a, -1, n)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    # write n - 1 = d * 2^r with d odd
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    """Distinct prime factors by trial division (n fits desk scale here)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def primitive_root(n: int) -> int:
    """Smallest generator of the multiplicative group modulo a prime n >= 3."""
    if n < 3 or not is_prime(n):
        raise NotPrime(f"primitive root needs a prime modulus >= 3, got {n}")
    factors = _prime_factors(n - 1)
    for g in range(2, n):
        if all(pow(g, (n - 1) // p, n) != 1 for p in factors):
            return g
    raise AssertionError("unreachable: every prime has a primitive root")


def fibonacci(k: int) -> int:
    """k-th Fibonacci number, F(0) = 0, F(1) = 1."""
    if k < 0:
        raise DomainError(f"index must be >= 0, got {k}")
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a
