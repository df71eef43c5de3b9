"""Exhaustive generator search for 2-D vertex modified rules at prime N.

For prime N the residues 1..N-1 form a cyclic group.  Writing z = g^beta
for a primitive root g turns both z-dependent sums into length-(N-1)
cyclic convolutions:

  * the mixture cotangent sum, convolving cot(pi <g^d> / N)^2 against the
    exact tail weights zeta(2, <g^-c> / N) / N^2, and
  * the cross term of the Korobov error, an autocorrelation of
    B2(<g^k> / N).

One FFT pass therefore prices every generator at once, O(N log N) rather
than O(N^2).
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, LengthMismatch, NotPrime, ConsistencyError
from .kernels import ProductWeights
from .numtheory import fibonacci, is_prime, primitive_root
from .rules import LatticeRule
from .special import _cot2_table, hurwitz_zeta2
from .wce import (
    FOUR_PI_SQ,
    WceBreakdown,
    inverse_symmetry_deviation,
    mixture_term_s2,
    wce_korobov_lattice,
)

_DIRECT_CONV_MAX = 64
_FIB_POINT_CAP = 1 << 23


def cyclic_convolution_direct(a, b) -> np.ndarray:
    """c[i] = sum_j a[(i - j) mod L] b[j], evaluated literally in O(L^2)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 1:
        raise LengthMismatch(
            f"need equal-length 1-D vectors, got {a.shape} and {b.shape}"
        )
    L = a.shape[0]
    idx = (np.arange(L)[:, None] - np.arange(L)[None, :]) % L
    return (a[idx] * b[None, :]).sum(axis=1)


def cyclic_convolution(a, b) -> np.ndarray:
    """Cyclic convolution of equal-length real vectors.

    Lengths up to 64 use the direct O(L^2) form; longer vectors go through
    a real FFT (any length, not just powers of two).
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 1:
        raise LengthMismatch(
            f"need equal-length 1-D vectors, got {a.shape} and {b.shape}"
        )
    L = a.shape[0]
    if L <= _DIRECT_CONV_MAX:
        return cyclic_convolution_direct(a, b)
    return np.fft.irfft(np.fft.rfft(a) * np.fft.rfft(b), n=L)


@dataclass(frozen=True)
class GroupIndexedVector:
    """A vector over the multiplicative group mod N in exponent order.

    values[beta] belongs to the residue g^beta mod N.
    """

    g: int
    N: int
    values: np.ndarray
    residues: np.ndarray  # residues[beta] = g^beta mod N

    def to_z_order(self) -> np.ndarray:
        """Length-N array indexed by the residue itself; entry 0 is NaN."""
        out = np.full(self.N, np.nan)
        out[self.residues] = self.values
        return out


def _group_tables(N: int) -> tuple[int, np.ndarray]:
    g = primitive_root(N)
    residues = np.empty(N - 1, dtype=np.int64)
    r = 1
    for beta in range(N - 1):
        residues[beta] = r
        r = r * g % N
    return g, residues


def _index_reverse(v: np.ndarray) -> np.ndarray:
    """w[i] = v[(-i) mod L]."""
    return np.roll(v[::-1], 1)


def _require_search_modulus(N: int) -> None:
    if N < 3 or not is_prime(N):
        raise NotPrime(f"generator search needs a prime N >= 3, got {N}")


def all_z_mixture(N: int, gamma=None) -> np.ndarray:
    """Closed-form mixture term of every 2-D rule (1, z), z = 1..N-1.

    Returns a length-N array indexed by z (entry 0 is NaN):

        out[z] = g1 g2 / (8 pi^2) * (E(z) + E(z^-1)),

    E being the zeta-weighted cotangent sum cot2_sum_exact, obtained for
    all z simultaneously from one cyclic convolution.
    """
    _require_search_modulus(N)
    g = ProductWeights.broadcast(gamma, 2)
    root, residues = _group_tables(N)
    L = N - 1
    cot2 = _cot2_table(N)
    zw = np.empty(N)
    zw[0] = np.nan
    zw[1:] = hurwitz_zeta2(np.arange(1, N) / N) / (N * N)
    a = cot2[residues]
    b = _index_reverse(zw[residues])
    exact_by_beta = cyclic_convolution(a, b) / (N * N)
    pair = exact_by_beta + _index_reverse(exact_by_beta)
    coef = g.gamma[0] * g.gamma[1] / (8.0 * math.pi**2)
    return GroupIndexedVector(root, N, coef * pair, residues).to_z_order()


def all_z_korobov(N: int, gamma=None) -> np.ndarray:
    """Korobov squared error of the plain rule (1, z) for every z at once.

    Uses the tabulated normalization: per-dimension kernel factor
    1 + g_j B2({x - y}), i.e. effective Korobov weights g_j / (2 pi^2).
    Matches wce_korobov_lattice at those scaled weights.

    Splitting off the z-independent coordinate sums leaves a single cross
    term sum_k B2(k/N) B2({k z / N}), an autocorrelation over the group.
    Returns a length-N array indexed by z (entry 0 is NaN).
    """
    _require_search_modulus(N)
    g = ProductWeights.broadcast(gamma, 2)
    root, residues = _group_tables(N)
    x = np.arange(N) / N
    b2 = x * x - x + 1.0 / 6.0
    a = b2[residues]
    corr = cyclic_convolution(a, _index_reverse(a))
    g1, g2 = g.gamma
    cross = 1.0 / 36.0 + corr  # k = 0 contributes B2(0)^2
    vals = (g1 + g2) / (6.0 * N * N) + (g1 * g2 / N) * cross
    return GroupIndexedVector(root, N, vals, residues).to_z_order()


@dataclass(frozen=True)
class SearchResult:
    """Best generator for one prime modulus."""

    N: int
    z: int
    sq_total: float
    sq_korobov: float
    mixture: float
    all_rows: np.ndarray | None = None  # (N-1, 4): z, total, korobov, mixture

    def to_dict(self) -> dict:
        out = {
            "N": self.N,
            "z": self.z,
            "wce2_total": self.sq_total,
            "wce2_korobov": self.sq_korobov,
            "mixture": self.mixture,
        }
        if self.all_rows is not None:
            out["rows"] = self.all_rows.tolist()
        return out


def best_generator(N: int, gamma=None, keep_rows: bool = False) -> SearchResult:
    """Scan all generators (1, z) of a prime-N rule and return the one
    minimizing Korobov + mixture squared error.

    Ties resolve to the first scanned z. Each optimum recurs at its
    mirror N - z and, with equal per-dimension weights, at the modular
    inverses of both (same point set up to reflection and coordinate
    swap), so the reported z is one member of that tied orbit.
    """
    _require_search_modulus(N)
    kor = all_z_korobov(N, gamma)
    mix = all_z_mixture(N, gamma)
    total = kor + mix
    z = int(np.argmin(total[1:])) + 1
    rows = None
    if keep_rows:
        zz = np.arange(1, N, dtype=float)
        rows = np.column_stack([zz, total[1:], kor[1:], mix[1:]])
    return SearchResult(
        N=N,
        z=z,
        sq_total=float(total[z]),
        sq_korobov=float(kor[z]),
        mixture=float(mix[z]),
        all_rows=rows,
    )


def fibonacci_rule(k: int, gamma=None):
    """Error breakdown of the optimally vertex modified Fibonacci rule
    N = F(k), z = (1, F(k-1)), for k >= 4.

    The multilinear part vanishes by construction; Korobov and mixture
    parts are evaluated by the O(N) closed forms, so N need not be prime.
    The two mixture halves coincide because F(k-1)^-1 = +-F(k-1) mod F(k).
    """
    if k < 4:
        raise DomainError(f"need k >= 4 so that corners and nodes differ, got {k}")
    N = fibonacci(k)
    if N > _FIB_POINT_CAP:
        raise OverflowError(
            f"F({k}) = {N} exceeds the {_FIB_POINT_CAP}-point evaluation cap"
        )
    rule = LatticeRule((1, fibonacci(k - 1)), N)
    g = ProductWeights.broadcast(gamma, 2)
    kor = wce_korobov_lattice(rule, g.scaled(1.0 / FOUR_PI_SQ))
    pair = mixture_term_s2(rule, g)
    scale = max(abs(pair.term_w1), abs(pair.term_w2), 1e-300)
    if abs(pair.term_w1 - pair.term_w2) > 1e-12 * scale:
        raise ConsistencyError(
            f"Fibonacci mixture halves differ: {pair.term_w1} vs {pair.term_w2}"
        )
    sq_kor = kor * kor
    return WceBreakdown(
        sq_multilinear=0.0,
        sq_korobov=sq_kor,
        mixture=pair.total,
        sq_total=sq_kor + pair.total,
    )


def conjecture_sweep(N: int) -> float:
    """Max over all z coprime to N of the inverse-symmetry deviation
    |D(z) - D(z^-1)|, D(z) = (N^2 / (4 pi^2)) cot2_sum_exact(z, N).

    Prime N goes through the group convolution (O(N log N) for the whole
    sweep); other N fall back to per-z sums.
    """
    if N < 2:
        raise DomainError(f"need N >= 2, got {N}")
    if N == 2:
        return 0.0
    if is_prime(N):
        _, residues = _group_tables(N)
        cot2 = _cot2_table(N)
        zw = np.empty(N)
        zw[0] = np.nan
        zw[1:] = hurwitz_zeta2(np.arange(1, N) / N) / (N * N)
        c = cyclic_convolution(cot2[residues], _index_reverse(zw[residues]))
        dev = np.abs(c - _index_reverse(c)) / FOUR_PI_SQ
        return float(dev.max())
    return max(
        inverse_symmetry_deviation(z, N)
        for z in range(1, N)
        if math.gcd(z, N) == 1
    )


def _resolve_jobs(jobs: int | None) -> int:
    env = os.environ.get("VMLATTICE_JOBS")
    if env is not None:
        return max(1, int(env))
    if jobs is not None:
        return max(1, jobs)
    return os.cpu_count() or 1


def reproduce_table(
    primes, gamma=None, jobs: int | None = None, keep_rows: bool = False
) -> list[SearchResult]:
    """Run best_generator over a list of primes (threaded, results in
    input order)."""
    ns = [int(n) for n in primes]
    for n in ns:
        _require_search_modulus(n)
    workers = min(max(len(ns), 1), _resolve_jobs(jobs))
    if workers == 1 or len(ns) <= 1:
        return [best_generator(n, gamma, keep_rows) for n in ns]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda n: best_generator(n, gamma, keep_rows), ns))


_CSV_HEADER = "N,z,wce2_total,wce2_korobov,mixture"


def results_to_csv(results, full: bool = False) -> str:
    """Render search results in CSV, 6 significant digits."""
    lines = [_CSV_HEADER]
    for r in results:
        if full:
            if r.all_rows is None:
                raise DomainError("full output needs keep_rows=True results")
            for z, total, kor, mix in r.all_rows:
                lines.append(
                    f"{r.N},{int(z)},{total:.6g},{kor:.6g},{mix:.6g}"
                )
        else:
            lines.append(
                f"{r.N},{r.z},{r.sq_total:.6g},{r.sq_korobov:.6g},{r.mixture:.6g}"
            )
    return "\n".join(lines) + "\n"
