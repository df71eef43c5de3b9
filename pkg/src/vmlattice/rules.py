"""Rank-1 lattice rules and their vertex modified variants.

A rank-1 rule averages an integrand over the node set {k z / N}, k = 0..N-1.
The vertex modified variants drop the node at the origin and spread its
weight 1/N over all 2^s corners of the unit cube: either equally (the
"trapezoidal" choice) or with the unique corner weights that make the rule
exact on every multilinear polynomial (the "optimal" choice).

Node coordinates are carried as integer numerators over the common
denominator N, so fractional parts and corner coordinates stay exact.
A corner coordinate of 1 is stored as numerator N, not 0: the two differ
for non-periodic integrands.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError, NotInvertible

SCHEMES = ("plain", "trapezoidal", "optimal")


@dataclass(frozen=True)
class LatticeRule:
    """A rank-1 lattice rule with generating vector z and modulus N.

    Parameters
    ----------
    z : sequence of int
        Generating vector; each component must be coprime to N.  Components
        are reduced modulo N on construction.
    N : int
        Number of lattice points, N >= 1.  N = 1 gives the degenerate
        one-point rule at the origin.
    """

    z: tuple[int, ...]
    N: int

    def __init__(self, z: Sequence[int], N: int):
        if N < 1:
            raise DomainError(f"modulus must be >= 1, got {N}")
        zz = tuple(int(c) % N for c in z)
        if not zz:
            raise DomainError("generating vector must have at least one component")
        for j, c in enumerate(zz):
            if math.gcd(c, N) != 1:
                raise NotInvertible(
                    f"z[{j + 1}] = {c} shares a factor with N = {N}"
                )
        object.__setattr__(self, "z", zz)
        object.__setattr__(self, "N", N)

    @property
    def s(self) -> int:
        return len(self.z)


def _lattice_numerators(rule: LatticeRule) -> np.ndarray:
    """(N, s) integer array with row k equal to k*z mod N."""
    k = np.arange(rule.N, dtype=np.int64)
    return np.outer(k, np.asarray(rule.z, dtype=np.int64)) % rule.N


def lattice_points(rule: LatticeRule) -> list[tuple[Fraction, ...]]:
    """All N lattice nodes {k z / N} as exact rationals."""
    nums = _lattice_numerators(rule)
    return [tuple(Fraction(int(p), rule.N) for p in row) for row in nums]


def corners(s: int) -> list[tuple[int, ...]]:
    """The 2^s cube corners in binary counting order, first coordinate
    being the least significant bit."""
    if s < 1:
        raise DomainError(f"need s >= 1, got {s}")
    return [tuple((i >> j) & 1 for j in range(s)) for i in range(1 << s)]


@dataclass(frozen=True)
class VertexWeights:
    """Weights attached to the 2^s corners, in binary counting order."""

    corners: tuple[tuple[int, ...], ...]
    weights: tuple[float, ...]

    @property
    def s(self) -> int:
        return len(self.corners[0])

    def as_dict(self) -> dict[tuple[int, ...], float]:
        return dict(zip(self.corners, self.weights))


def trapezoidal_weights(s: int, N: int) -> VertexWeights:
    """Equal corner weights 1 / (2^s N)."""
    if N < 1:
        raise DomainError(f"modulus must be >= 1, got {N}")
    cs = corners(s)
    w = 1.0 / ((1 << s) * N)
    return VertexWeights(tuple(cs), tuple(w for _ in cs))


def optimal_vertex_weights(rule: LatticeRule) -> VertexWeights:
    """Corner weights making the modified rule exact on multilinear
    polynomials.

    For the corner with support u (the set of coordinates equal to 1),

        w_u = 1/2^s - (1/N) sum_{k=1}^{N-1} prod_{j in u} x_{k,j}
                                           prod_{j not in u} (1 - x_{k,j})

    evaluated in exact rational arithmetic and rounded once at the end.
    Weights may be negative; that is allowed and reported as-is.
    """
    N, s = rule.N, rule.s
    nums = _lattice_numerators(rule)[1:]  # interior nodes only
    cs = corners(s)
    weights = []
    for corner in cs:
        total = 0
        for row in nums:
            prod = 1
            for j, a in enumerate(corner):
                p = int(row[j])
                prod *= p if a else N - p
            total += prod
        # 1/2^s - total / N^(s+1), as a single exact rational
        w = Fraction((N ** (s + 1)) - (1 << s) * total, (1 << s) * N ** (s + 1))
        weights.append(float(w))
    return VertexWeights(tuple(cs), tuple(weights))


@dataclass(frozen=True, eq=False)
class WeightedRule:
    """A cubature rule as explicit nodes and weights.

    Nodes are integer numerators over a common denominator.  Numerator
    `denominator` (value 1.0) is legal and distinct from numerator 0.
    """

    numerators: np.ndarray  # (M, s) int64, read-only by convention
    denominator: int
    weights: np.ndarray  # (M,) float
    scheme: str | None = None
    z: tuple[int, ...] | None = None
    N: int | None = None
    vertex_weights: VertexWeights | None = field(default=None, repr=False)

    def __post_init__(self):
        nums = np.asarray(self.numerators, dtype=np.int64)
        w = np.asarray(self.weights, dtype=float)
        if nums.ndim != 2 or w.ndim != 1 or nums.shape[0] != w.shape[0]:
            raise DomainError("numerators must be (M, s) and weights (M,)")
        if self.denominator < 1:
            raise DomainError("denominator must be >= 1")
        if nums.min(initial=0) < 0 or nums.max(initial=0) > self.denominator:
            raise DomainError("numerators must lie in [0, denominator]")
        object.__setattr__(self, "numerators", nums)
        object.__setattr__(self, "weights", w)

    @property
    def M(self) -> int:
        return self.numerators.shape[0]

    @property
    def s(self) -> int:
        return self.numerators.shape[1]

    @property
    def nodes(self) -> np.ndarray:
        """(M, s) float view of the nodes."""
        return self.numerators / float(self.denominator)

    @property
    def weight_sum(self) -> float:
        return float(math.fsum(self.weights))

    def to_dict(self) -> dict:
        if self.N is None or self.z is None or self.scheme is None:
            raise DomainError("only rules built from a LatticeRule serialize")
        vw = []
        if self.vertex_weights is not None:
            vw = [
                {"corner": list(c), "w": w}
                for c, w in zip(
                    self.vertex_weights.corners, self.vertex_weights.weights
                )
            ]
        return {
            "N": self.N,
            "s": self.s,
            "z": list(self.z),
            "scheme": self.scheme,
            "vertex_weights": vw,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def build_rule(rule: LatticeRule, scheme: str = "optimal") -> WeightedRule:
    """Assemble the explicit node/weight form of a lattice rule.

    Parameters
    ----------
    rule : LatticeRule
    scheme : {"plain", "trapezoidal", "optimal"}
        "plain" keeps all N lattice nodes with weight 1/N.  The other two
        replace the origin node with the 2^s cube corners; total corner
        weight is the displaced 1/N either split equally ("trapezoidal")
        or chosen for multilinear exactness ("optimal").

    Returns
    -------
    WeightedRule
        M = N for "plain", M = 2^s + N - 1 otherwise.  Corner rows come
        first, in binary counting order, then interior nodes by index k.
    """
    if scheme not in SCHEMES:
        raise DomainError(f"unknown scheme {scheme!r}, expected one of {SCHEMES}")
    N, s = rule.N, rule.s
    nums = _lattice_numerators(rule)
    if scheme == "plain":
        w = np.full(N, 1.0 / N)
        return WeightedRule(nums, N, w, scheme=scheme, z=rule.z, N=N)
    vw = (
        trapezoidal_weights(s, N)
        if scheme == "trapezoidal"
        else optimal_vertex_weights(rule)
    )
    corner_nums = np.asarray(vw.corners, dtype=np.int64) * N
    all_nums = np.vstack([corner_nums, nums[1:]])
    w = np.concatenate([np.asarray(vw.weights), np.full(N - 1, 1.0 / N)])
    return WeightedRule(
        all_nums, N, w, scheme=scheme, z=rule.z, N=N, vertex_weights=vw
    )


def apply_rule(wrule: WeightedRule, f: Callable[[np.ndarray], float]) -> float:
    """sum_k w_k f(x_k), nodes passed to f as 1-D float arrays."""
    pts = wrule.nodes
    return math.fsum(
        w * float(f(pts[k])) for k, w in enumerate(wrule.weights)
    )
