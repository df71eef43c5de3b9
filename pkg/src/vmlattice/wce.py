"""Worst-case integration errors in three reproducing kernel spaces.

For a rule Q with nodes x_k, weights w_k summing to 1, and a kernel K
whose integral in each argument is 1, the squared worst-case error is

    wce(Q)^2 = sum_{k,l} w_k w_l K(x_k, x_l) - 1.

The unanchored Sobolev error splits exactly into a multilinear part (with
weights g/12), a periodic first-order Korobov part (with weights
g/(2 pi)^2), and a mixture part coupling B1 factors in some coordinates
with periodic B2 factors in others.  For two dimensions and a rule whose
vertex weights integrate multilinear polynomials exactly, the mixture
collapses to a cotangent sum over the dual lattice:

    mixture = g1 g2 / (8 pi^2 N^2) * sum_j sum_{h>=1, h != 0 mod N}
              cot(pi h w_j / N)^2 / h^2,

with w_1 = z1^-1 z2 and w_2 = z2^-1 z1 mod N.  The infinite h-sum is
evaluated exactly through Hurwitz zeta tail weights zeta(2, h/N) / N^2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConsistencyError,
    DimensionError,
    DomainError,
    NotInvertible,
    NotPrime,
    WeightSumError,
)
from .kernels import (
    ProductWeights,
    korobov1_kernel,
    multilinear_kernel,
    usobolev1_kernel,
)
from .numtheory import gcd, is_prime, mod_inverse
from .rules import LatticeRule, WeightedRule, _lattice_numerators
from .special import _cot2_table, cot_pi_rational, harmonic, hurwitz_zeta2

_WEIGHT_SUM_TOL = 1e-12
_NEGATIVE_SQ_TOL = 1e-12
_CHUNK = 512
FOUR_PI_SQ = 4.0 * math.pi * math.pi


@dataclass(frozen=True)
class WceBreakdown:
    """Squared-error split: total = multilinear + korobov + mixture."""

    sq_multilinear: float
    sq_korobov: float
    mixture: float
    sq_total: float

    def to_dict(self) -> dict:
        return {
            "sq_total": self.sq_total,
            "sq_korobov": self.sq_korobov,
            "sq_multilinear": self.sq_multilinear,
            "mixture": self.mixture,
        }


@dataclass(frozen=True)
class MixturePair:
    """The two closed-form mixture halves of a 2-D vertex modified rule."""

    w1: int
    w2: int
    term_w1: float
    term_w2: float

    @property
    def total(self) -> float:
        return self.term_w1 + self.term_w2


@dataclass(frozen=True)
class AverageIdentityReport:
    """Exact cotangent-sum averages over all residues w of a prime N."""

    avg_cot2: float
    rhs_dedekind: float
    avg_S: float
    rhs_avg: float
    avg_abscot: float
    bound_abscot: float


def _sq_to_wce(sq: float, what: str) -> float:
    """sqrt with the shared clamping policy for tiny negative squares."""
    if sq < 0.0:
        if sq >= -_NEGATIVE_SQ_TOL:
            return 0.0
        raise ConsistencyError(f"{what}: squared error {sq} is negative")
    return math.sqrt(sq)


def _check_weight_sum(wrule: WeightedRule) -> None:
    total = wrule.weight_sum
    if abs(total - 1.0) > _WEIGHT_SUM_TOL:
        raise WeightSumError(f"rule weights sum to {total}, expected 1")


def _gram_quadform(wrule: WeightedRule, gamma: ProductWeights, kind: str) -> float:
    """sum_{k,l} w_k w_l K(x_k, x_l) - 1, row-chunked to bound memory.

    Fractional parts of node differences are formed on the integer
    numerators, so periodic kernel factors are evaluated without any
    wrap-around rounding.
    """
    p = wrule.numerators
    den = wrule.denominator
    w = wrule.weights
    x = wrule.nodes
    b1 = x - 0.5
    g = gamma.gamma
    parts = []
    for lo in range(0, wrule.M, _CHUNK):
        hi = min(lo + _CHUNK, wrule.M)
        gram = np.ones((hi - lo, wrule.M))
        for j in range(wrule.s):
            d = ((p[lo:hi, j, None] - p[None, :, j]) % den) / den
            b2 = d * d - d + 1.0 / 6.0
            if kind == "korobov1":
                gram *= 1.0 + (2.0 * math.pi**2 * g[j]) * b2
            elif kind == "multilinear":
                gram *= 1.0 + (12.0 * g[j]) * np.outer(b1[lo:hi, j], b1[:, j])
            elif kind == "usobolev1":
                gram *= (
                    1.0
                    + g[j] * np.outer(b1[lo:hi, j], b1[:, j])
                    + (0.5 * g[j]) * b2
                )
            else:
                raise AssertionError(f"unknown kernel kind {kind!r}")
        parts.append(float(w[lo:hi] @ (gram @ w)))
    return math.fsum(parts) - 1.0


_KERNEL_KINDS = {
    korobov1_kernel: "korobov1",
    multilinear_kernel: "multilinear",
    usobolev1_kernel: "usobolev1",
    "korobov1": "korobov1",
    "multilinear": "multilinear",
    "usobolev1": "usobolev1",
}


def wce_generic(wrule: WeightedRule, kernel, gamma=None) -> float:
    """Worst-case error of an arbitrary weighted rule via the kernel
    quadratic form, O(M^2 s).

    `kernel` is one of the three kernel functions from .kernels (or its
    name).  Squared values in [-1e-12, 0) are clamped to 0; anything more
    negative raises ConsistencyError.
    """
    kind = _KERNEL_KINDS.get(kernel)
    if kind is None:
        raise DomainError(f"unsupported kernel {kernel!r}")
    g = ProductWeights.broadcast(gamma, wrule.s)
    _check_weight_sum(wrule)
    sq = _gram_quadform(wrule, g, kind)
    return _sq_to_wce(sq, f"wce_generic[{kind}]")


def _block_fsum(arr: np.ndarray) -> float:
    """Exactly rounded sum for moderate arrays, blockwise above 2^20."""
    n = arr.shape[0]
    if n <= (1 << 20):
        return math.fsum(arr)
    return math.fsum(
        math.fsum(arr[lo : lo + (1 << 20)]) for lo in range(0, n, 1 << 20)
    )


def wce_korobov_lattice(rule: LatticeRule, gamma=None) -> float:
    """Korobov-space error of the plain lattice rule in O(sN):

        wce^2 = (1/N) sum_k [ prod_j (1 + 2 pi^2 g_j B2({k z_j / N})) - 1 ].

    Vertex modified variants of the same rule give the identical value
    because the kernel is 1-periodic and corner weights restore the
    displaced origin mass.
    """
    g = ProductWeights.broadcast(gamma, rule.s)
    nums = _lattice_numerators(rule)
    x = nums / rule.N
    b2 = x * x - x + 1.0 / 6.0
    prod = np.ones(rule.N)
    for j in range(rule.s):
        prod *= 1.0 + (2.0 * math.pi**2 * g.gamma[j]) * b2[:, j]
    sq = _block_fsum(prod - 1.0) / rule.N
    return _sq_to_wce(sq, "wce_korobov_lattice")


def _sq_multilinear(wrule: WeightedRule, g: ProductWeights) -> float:
    """Factorized multilinear squared error:

        wce^2 = sum_{u nonempty} prod_{j in u} 12 g_j *
                ( sum_k w_k prod_{j in u} B1(x_{k,j}) )^2
    """
    b1 = wrule.nodes - 0.5
    w = wrule.weights
    s = wrule.s
    sq_terms = []
    for mask in range(1, 1 << s):
        prod = w.copy()
        coef = 1.0
        for j in range(s):
            if mask >> j & 1:
                prod = prod * b1[:, j]
                coef *= 12.0 * g.gamma[j]
        su = math.fsum(prod)
        sq_terms.append(coef * su * su)
    return math.fsum(sq_terms)


def wce_multilinear(wrule: WeightedRule, gamma=None) -> float:
    """Multilinear-space error of a weighted rule, O(M 2^s)."""
    g = ProductWeights.broadcast(gamma, wrule.s)
    _check_weight_sum(wrule)
    return _sq_to_wce(_sq_multilinear(wrule, g), "wce_multilinear")


def _mixture_direct(wrule: WeightedRule, g: ProductWeights) -> float:
    """Mixture part of the unanchored Sobolev squared error, O(M^2 3^s).

    Sums over all splits of the coordinates into a nonempty B1-block A
    and a nonempty periodic-B2 block B:

        sum_{k,l} w_k w_l prod_{j in A} g_j B1(x_{k,j}) B1(x_{l,j})
                          prod_{j in B} g_j B2({x_{k,j} - x_{l,j}}) / 2
    """
    p = wrule.numerators
    den = wrule.denominator
    w = wrule.weights
    b1 = wrule.nodes - 0.5
    s = wrule.s
    terms = []
    for assign in range(3**s):
        blocks = []
        rest = assign
        for _ in range(s):
            blocks.append(rest % 3)
            rest //= 3
        a_dims = [j for j, b in enumerate(blocks) if b == 1]
        b_dims = [j for j, b in enumerate(blocks) if b == 2]
        if not a_dims or not b_dims:
            continue
        coef = 1.0
        u = w.copy()
        for j in a_dims:
            u = u * b1[:, j]
            coef *= g.gamma[j]
        for j in b_dims:
            coef *= 0.5 * g.gamma[j]
        parts = []
        for lo in range(0, wrule.M, _CHUNK):
            hi = min(lo + _CHUNK, wrule.M)
            mat = np.ones((hi - lo, wrule.M))
            for j in b_dims:
                d = ((p[lo:hi, j, None] - p[None, :, j]) % den) / den
                mat *= d * d - d + 1.0 / 6.0
            parts.append(float(u[lo:hi] @ (mat @ u)))
        terms.append(coef * math.fsum(parts))
    return math.fsum(terms)


def wce_decomposition(wrule: WeightedRule, gamma=None) -> WceBreakdown:
    """Exact split of the unanchored Sobolev squared error.

    Returns squared components: the multilinear part carries weights g/12,
    the Korobov part g/(2 pi)^2, and the mixture is evaluated directly.
    Their sum equals wce_generic(wrule, usobolev1_kernel, g)^2 up to
    rounding.
    """
    g = ProductWeights.broadcast(gamma, wrule.s)
    _check_weight_sum(wrule)
    sq_lin = _sq_multilinear(wrule, g.scaled(1.0 / 12.0))
    sq_kor = _gram_quadform(wrule, g.scaled(1.0 / FOUR_PI_SQ), "korobov1")
    if -_NEGATIVE_SQ_TOL <= sq_kor < 0.0:
        sq_kor = 0.0
    mixture = _mixture_direct(wrule, g)
    return WceBreakdown(
        sq_multilinear=sq_lin,
        sq_korobov=sq_kor,
        mixture=mixture,
        sq_total=sq_lin + sq_kor + mixture,
    )


def exp_b1_sum(z: int, theta: int, N: int) -> complex:
    """(1/N) sum_{k=1}^{N-1} B1({z k / N}) exp(2 pi i theta k / N).

    Closed form: 0 when theta = 0 mod N, else
    -i cot(pi z^-1 theta / N) / (2N).
    """
    if N < 2:
        raise DomainError(f"need N >= 2, got {N}")
    if gcd(z, N) != 1:
        raise NotInvertible(f"z = {z} shares a factor with N = {N}")
    if theta % N == 0:
        return 0j
    zinv = mod_inverse(z, N)
    return complex(0.0, -cot_pi_rational(zinv * theta, N) / (2.0 * N))


def exp_b1_sum_direct(z: int, theta: int, N: int) -> complex:
    """Brute-force evaluation of exp_b1_sum; O(N) oracle."""
    if N < 2:
        raise DomainError(f"need N >= 2, got {N}")
    if gcd(z, N) != 1:
        raise NotInvertible(f"z = {z} shares a factor with N = {N}")
    k = np.arange(1, N)
    b1 = ((k * z) % N) / N - 0.5
    phase = np.exp(2j * np.pi * theta * k / N)
    vals = b1 * phase
    return complex(math.fsum(vals.real), math.fsum(vals.imag)) / N


def _cot2_sum_weighted(w: int, N: int, hweights: np.ndarray) -> float:
    """(1/N^2) sum_{h=1}^{N-1} cot(pi h w / N)^2 * hweights[h-1]."""
    if N < 2:
        raise DomainError(f"need N >= 2, got {N}")
    if gcd(w, N) != 1:
        raise NotInvertible(f"w = {w} shares a factor with N = {N}")
    cot2 = _cot2_table(N)
    h = np.arange(1, N, dtype=np.int64)
    vals = cot2[(h * w) % N] * hweights
    return _block_fsum(vals) / (N * N)


def cot2_sum_truncated(w: int, N: int) -> float:
    """(1/N^2) sum_{h=1}^{N-1} cot(pi h w / N)^2 / h^2."""
    h = np.arange(1, N, dtype=float)
    return _cot2_sum_weighted(w, N, h**-2)


def cot2_sum_exact(w: int, N: int) -> float:
    """Same sum with 1/h^2 replaced by the exact tail weight
    zeta(2, h/N) / N^2, so that the result times N^2 equals the infinite
    sum over all h >= 1 with h not divisible by N.

    Strictly bracketed:  truncated < exact < (pi^2 / 6) * truncated.
    """
    h = np.arange(1, N, dtype=float)
    return _cot2_sum_weighted(w, N, hurwitz_zeta2(h / N) / (N * N))


def mixture_term_s2(rule: LatticeRule, gamma=None) -> MixturePair:
    """Closed-form mixture of the 2-D optimally vertex modified rule:

        term_wj = g1 g2 / (8 pi^2) * cot2_sum_exact(w_j, N),

    with w1 = z1^-1 z2 and w2 = z2^-1 z1 mod N.  Only valid for the
    multilinear-exact ("optimal") corner weights.
    """
    if rule.s != 2:
        raise DimensionError(f"closed form needs s = 2, got s = {rule.s}")
    g = ProductWeights.broadcast(gamma, 2)
    N = rule.N
    if N < 2:
        raise DomainError("closed form needs N >= 2")
    z1, z2 = rule.z
    w1 = mod_inverse(z1, N) * z2 % N
    w2 = mod_inverse(z2, N) * z1 % N
    coef = g.gamma[0] * g.gamma[1] / (8.0 * math.pi**2)
    return MixturePair(
        w1=w1,
        w2=w2,
        term_w1=coef * cot2_sum_exact(w1, N),
        term_w2=coef * cot2_sum_exact(w2, N),
    )


def mixture_bounds_s2(rule: LatticeRule, gamma=None) -> tuple[float, float]:
    """Truncated-sum bracket (lower, upper) for the 2-D mixture term.

    lower uses coefficient g1 g2 / (8 pi^2), upper g1 g2 / 48; their
    ratio is pi^2 / 6.
    """
    if rule.s != 2:
        raise DimensionError(f"bounds need s = 2, got s = {rule.s}")
    g = ProductWeights.broadcast(gamma, 2)
    N = rule.N
    if N < 2:
        raise DomainError("bounds need N >= 2")
    z1, z2 = rule.z
    w1 = mod_inverse(z1, N) * z2 % N
    w2 = mod_inverse(z2, N) * z1 % N
    tsum = cot2_sum_truncated(w1, N) + cot2_sum_truncated(w2, N)
    g12 = g.gamma[0] * g.gamma[1]
    return g12 / (8.0 * math.pi**2) * tsum, g12 / 48.0 * tsum


def wce_trapezoid_1d(N: int, gamma1: float = 1.0) -> float:
    """Unanchored Sobolev error of the 1-D composite trapezoidal rule:
    sqrt(g1 / 12) / N."""
    if N < 1:
        raise DomainError(f"need N >= 1, got {N}")
    if gamma1 <= 0:
        raise DomainError(f"weight must be positive, got {gamma1}")
    return math.sqrt(gamma1 / 12.0) / N


def average_identities(N: int) -> AverageIdentityReport:
    """Exact averages over w = 1..N-1, prime N >= 3:

        (1/(N-1)) sum_w cot(pi w / N)^2            = (N - 2) / 3
        (1/(N-1)) sum_w cot2_sum_truncated(w, N)   = (N-2)/(3N^2) H_{N-1}(2)

    plus the average of (1/N) sum_h |cot(pi h w / N)| / h against its
    logarithmic bound (H_{N-1}(1) / N) (6 / pi) log N.
    """
    if N < 3 or not is_prime(N):
        raise NotPrime(f"identities need a prime N >= 3, got {N}")
    cot2 = _cot2_table(N)
    avg_cot2 = math.fsum(cot2[1:]) / (N - 1)
    avg_S = math.fsum(cot2_sum_truncated(w, N) for w in range(1, N)) / (N - 1)
    abscot = np.sqrt(cot2)
    h = np.arange(1, N, dtype=np.int64)
    inv_h = 1.0 / h
    per_w = [
        math.fsum(abscot[(h * w) % N] * inv_h) / N for w in range(1, N)
    ]
    avg_abscot = math.fsum(per_w) / (N - 1)
    return AverageIdentityReport(
        avg_cot2=avg_cot2,
        rhs_dedekind=(N - 2) / 3.0,
        avg_S=avg_S,
        rhs_avg=(N - 2) / (3.0 * N * N) * harmonic(N - 1, 2.0),
        avg_abscot=avg_abscot,
        bound_abscot=harmonic(N - 1, 1.0) / N * (6.0 / math.pi) * math.log(N),
    )


def existence_bound(N: int, gamma=None, korobov_wce: float | None = None) -> float:
    """Upper bound on the best achievable 2-D total error:

        korobov_wce + 11 sqrt(2 g1 g2) / (pi sqrt(48) log 3) * log(N)^2 / N.

    At least one generator z has sqrt(sq_total) below this value, so the
    searched optimum must beat it.
    """
    if N < 3 or not is_prime(N):
        raise NotPrime(f"existence bound needs a prime N >= 3, got {N}")
    g = ProductWeights.broadcast(gamma, 2)
    if korobov_wce is None:
        korobov_wce = wce_korobov_lattice(
            LatticeRule((1, 1), N), ProductWeights(g.gamma).scaled(1.0 / FOUR_PI_SQ)
        )
    c = 11.0 * math.sqrt(2.0 * g.gamma[0] * g.gamma[1]) / (
        math.pi * math.sqrt(48.0) * math.log(3.0)
    )
    return korobov_wce + c * math.log(N) ** 2 / N


def bernoulli_double_sum(z: int, N: int) -> float:
    """sum_{k,l=1}^{N-1} B1(k/N) B2({z (k - l) / N}) B1(l/N), O(N^2).

    Equals (N^2 / (4 pi^2)) cot2_sum_exact(z, N); kept as an independent
    route for cross-checking.
    """
    if N < 2:
        raise DomainError(f"need N >= 2, got {N}")
    if gcd(z, N) != 1:
        raise NotInvertible(f"z = {z} shares a factor with N = {N}")
    k = np.arange(1, N, dtype=np.int64)
    b1 = k / N - 0.5
    d = (z * (k[:, None] - k[None, :])) % N / N
    mat = d * d - d + 1.0 / 6.0
    return float(b1 @ mat @ b1)


def inverse_symmetry_deviation(z: int, N: int) -> float:
    """| D(z) - D(z^-1) | where D(z) = (N^2 / (4 pi^2)) cot2_sum_exact(z, N).

    Conjecturally zero for every z coprime to N.  Identically zero (to the
    last bit) whenever z^-1 = z or z^-1 = N - z, e.g. for consecutive
    Fibonacci pairs.
    """
    if N < 2:
        raise DomainError(f"need N >= 2, got {N}")
    if gcd(z, N) != 1:
        raise NotInvertible(f"z = {z} shares a factor with N = {N}")
    zinv = mod_inverse(z, N)
    d1 = cot2_sum_exact(z, N)
    d2 = cot2_sum_exact(zinv, N)
    return (N * N) / FOUR_PI_SQ * abs(d1 - d2)


def inverse_symmetry_deviation_direct(z: int, N: int) -> float:
    """O(N^2) oracle for inverse_symmetry_deviation via the Bernoulli
    double sum."""
    zinv = mod_inverse(z, N)
    return abs(bernoulli_double_sum(z, N) - bernoulli_double_sum(zinv, N))
