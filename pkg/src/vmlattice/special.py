"""Scalar special functions: Bernoulli polynomials, harmonic numbers,
the Hurwitz zeta function at s = 2, and cotangent at rational multiples
of pi.

B1(t) = t - 1/2 and B2(t) = t^2 - t + 1/6 are kept as plain polynomials;
callers that need the periodic extension reduce the argument mod 1 first.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .errors import DomainError, PoleError

# Euler-Maclaurin tail coefficients for zeta(2, a): the correction beyond
# 1/u + 1/(2 u^2) is sum_j B_{2j} u^-(2j+1) with the even Bernoulli numbers.
_EM_BERNOULLI = (
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
)
_LIFT = 16  # shift argument this far right before using the tail expansion


def _check_unit_interval(t) -> float:
    if not 0 <= t <= 1:
        raise DomainError(f"argument must lie in [0, 1], got {t}")
    return float(t)


def bernoulli1(t) -> float:
    """B1(t) = t - 1/2 on [0, 1]; accepts exact rationals."""
    return _check_unit_interval(t) - 0.5


def bernoulli2(t) -> float:
    """B2(t) = t^2 - t + 1/6 on [0, 1]; accepts exact rationals."""
    x = _check_unit_interval(t)
    return x * x - x + 1.0 / 6.0


def harmonic(n: int, a: float = 1.0) -> float:
    """Generalized harmonic number sum_{h=1}^{n} h^-a.

    Terms are accumulated from h = n down to 1 (smallest first).
    """
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    h = np.arange(n, 0, -1, dtype=float)
    return float(np.add.reduce(h ** (-a)))


def hurwitz_zeta2(a):
    """zeta(2, a) = sum_{n>=0} (n + a)^-2 for a > 0.

    Uses the recurrence zeta(2, a) = 1/a^2 + zeta(2, a+1) to lift the
    argument by 16, then an Euler-Maclaurin tail.  Relative accuracy is
    well below 1e-13 uniformly on (0, 1].  Accepts scalars or arrays.
    """
    x = np.asarray(a, dtype=float)
    if np.any(x <= 0):
        raise DomainError("zeta(2, a) requires a > 0")
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    acc = np.zeros_like(x)
    for n in range(_LIFT):
        acc += (x + n) ** -2
    u = x + _LIFT
    inv = 1.0 / u
    tail = inv + 0.5 * inv * inv
    p = inv * inv * inv
    for b in _EM_BERNOULLI:
        tail += float(b) * p
        p *= inv * inv
    out = acc + tail
    return float(out[0]) if scalar else out


def cot_pi_rational(k: int, n: int) -> float:
    """cot(pi * k / n) for integers k, n with k not divisible by n.

    The argument is reduced to (0, pi/2] via cot(pi (n-m)/n) = -cot(pi m/n),
    so the trig evaluation never sits next to a pole.
    """
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    m = k % n
    if m == 0:
        raise PoleError(f"cot(pi * {k}/{n}) is a pole")
    sign = 1.0
    if 2 * m > n:
        m = n - m
        sign = -1.0
    if 2 * m == n:
        return 0.0
    t = math.pi * m / n
    return sign * math.cos(t) / math.sin(t)


def _cot2_table(n: int) -> np.ndarray:
    """Length-n array with entry m = cot(pi m / n)^2, entry 0 = NaN."""
    m = np.arange(1, n)
    mm = np.minimum(m, n - m)
    t = np.pi * mm / n
    vals = (np.cos(t) / np.sin(t)) ** 2
    if n % 2 == 0:
        vals[mm == n // 2] = 0.0
    out = np.empty(n)
    out[0] = np.nan
    out[1:] = vals
    return out
