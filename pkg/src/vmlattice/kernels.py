"""Reproducing kernels of the three product function spaces.

All three kernels are product kernels over the coordinates and integrate
to 1 in each argument, which is what reduces the worst-case error of a
rule with weight sum 1 to a pure quadratic form in the kernel.

    first-order Korobov:   prod_j (1 + 2 pi^2 g_j B2({x_j - y_j}))
    multilinear:           prod_j (1 + 12 g_j B1(x_j) B1(y_j))
    unanchored Sobolev:    prod_j (1 + g_j B1(x_j) B1(y_j)
                                     + g_j B2({x_j - y_j}) / 2)

Rational inputs (fractions.Fraction) are honoured: the fractional part of
x - y is then formed exactly before any float rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError, DimensionError

TWO_PI_SQ = 2.0 * math.pi * math.pi


@dataclass(frozen=True)
class ProductWeights:
    """Per-coordinate weights g_j > 0 of a weighted product space."""

    gamma: tuple[float, ...]

    def __post_init__(self):
        g = tuple(float(v) for v in self.gamma)
        if not g:
            raise DomainError("need at least one weight")
        if any(v <= 0 for v in g):
            raise DomainError(f"weights must be positive, got {g}")
        object.__setattr__(self, "gamma", g)

    @classmethod
    def ones(cls, s: int) -> "ProductWeights":
        return cls((1.0,) * s)

    @classmethod
    def broadcast(cls, gamma, s: int) -> "ProductWeights":
        """Coerce a scalar, sequence, or ProductWeights to dimension s."""
        if gamma is None:
            return cls.ones(s)
        if isinstance(gamma, ProductWeights):
            g = gamma.gamma
        elif isinstance(gamma, (int, float)):
            g = (float(gamma),) * s
        else:
            g = tuple(float(v) for v in gamma)
            if len(g) == 1:
                g = g * s
        if len(g) != s:
            raise DimensionError(f"expected {s} weights, got {len(g)}")
        return cls(g)

    def scaled(self, factor: float) -> "ProductWeights":
        return ProductWeights(tuple(v * factor for v in self.gamma))

    def subset_product(self, u: Iterable[int]) -> float:
        """prod_{j in u} g_j for 0-based coordinate indices."""
        out = 1.0
        for j in u:
            out *= self.gamma[j]
        return out

    @property
    def s(self) -> int:
        return len(self.gamma)


def _frac_diff(xj, yj) -> float:
    # Fraction % 1 stays exact; float % 1.0 is fine elsewhere since B2 is
    # continuous across the wrap.
    return float((xj - yj) % 1)


def _b1(t) -> float:
    return float(t) - 0.5


def _b2(d: float) -> float:
    return d * d - d + 1.0 / 6.0


def korobov1_kernel(x: Sequence, y: Sequence, gamma=None) -> float:
    """First-order Korobov (periodic) kernel at points x, y in [0,1]^s."""
    g = ProductWeights.broadcast(gamma, len(x))
    if len(x) != len(y):
        raise DimensionError("x and y must share a dimension")
    out = 1.0
    for xj, yj, gj in zip(x, y, g.gamma):
        out *= 1.0 + TWO_PI_SQ * gj * _b2(_frac_diff(xj, yj))
    return out


def multilinear_kernel(x: Sequence, y: Sequence, gamma=None) -> float:
    """Kernel of the space of multilinear polynomials."""
    g = ProductWeights.broadcast(gamma, len(x))
    if len(x) != len(y):
        raise DimensionError("x and y must share a dimension")
    out = 1.0
    for xj, yj, gj in zip(x, y, g.gamma):
        out *= 1.0 + 12.0 * gj * _b1(xj) * _b1(yj)
    return out


def usobolev1_kernel(x: Sequence, y: Sequence, gamma=None) -> float:
    """First-order unanchored Sobolev kernel."""
    g = ProductWeights.broadcast(gamma, len(x))
    if len(x) != len(y):
        raise DimensionError("x and y must share a dimension")
    out = 1.0
    for xj, yj, gj in zip(x, y, g.gamma):
        out *= (
            1.0
            + gj * _b1(xj) * _b1(yj)
            + gj * _b2(_frac_diff(xj, yj)) / 2.0
        )
    return out
