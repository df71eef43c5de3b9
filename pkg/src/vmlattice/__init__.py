"""Vertex modified rank-1 lattice rules and their worst-case errors in
Korobov, multilinear, and unanchored Sobolev spaces."""

from .errors import (
    ConsistencyError,
    DimensionError,
    DomainError,
    LengthMismatch,
    NotInvertible,
    NotPrime,
    PoleError,
    WeightSumError,
)
from .kernels import (
    ProductWeights,
    korobov1_kernel,
    multilinear_kernel,
    usobolev1_kernel,
)
from .numtheory import fibonacci, gcd, is_prime, mod_inverse, primitive_root
from .rules import (
    LatticeRule,
    VertexWeights,
    WeightedRule,
    apply_rule,
    build_rule,
    corners,
    lattice_points,
    optimal_vertex_weights,
    trapezoidal_weights,
)
from .search import (
    GroupIndexedVector,
    SearchResult,
    all_z_korobov,
    all_z_mixture,
    best_generator,
    conjecture_sweep,
    cyclic_convolution,
    cyclic_convolution_direct,
    fibonacci_rule,
    reproduce_table,
    results_to_csv,
)
from .special import (
    bernoulli1,
    bernoulli2,
    cot_pi_rational,
    harmonic,
    hurwitz_zeta2,
)
from .wce import (
    AverageIdentityReport,
    MixturePair,
    WceBreakdown,
    average_identities,
    bernoulli_double_sum,
    cot2_sum_exact,
    cot2_sum_truncated,
    existence_bound,
    exp_b1_sum,
    exp_b1_sum_direct,
    inverse_symmetry_deviation,
    inverse_symmetry_deviation_direct,
    mixture_bounds_s2,
    mixture_term_s2,
    wce_decomposition,
    wce_generic,
    wce_korobov_lattice,
    wce_multilinear,
    wce_trapezoid_1d,
)

__version__ = "0.1.0"

__all__ = [
    "AverageIdentityReport",
    "ConsistencyError",
    "DimensionError",
    "DomainError",
    "GroupIndexedVector",
    "LatticeRule",
    "LengthMismatch",
    "MixturePair",
    "NotInvertible",
    "NotPrime",
    "PoleError",
    "ProductWeights",
    "SearchResult",
    "VertexWeights",
    "WceBreakdown",
    "WeightSumError",
    "WeightedRule",
    "all_z_korobov",
    "all_z_mixture",
    "apply_rule",
    "average_identities",
    "bernoulli1",
    "bernoulli2",
    "bernoulli_double_sum",
    "best_generator",
    "build_rule",
    "conjecture_sweep",
    "corners",
    "cot2_sum_exact",
    "cot2_sum_truncated",
    "cot_pi_rational",
    "cyclic_convolution",
    "cyclic_convolution_direct",
    "existence_bound",
    "exp_b1_sum",
    "exp_b1_sum_direct",
    "fibonacci",
    "fibonacci_rule",
    "gcd",
    "harmonic",
    "hurwitz_zeta2",
    "inverse_symmetry_deviation",
    "inverse_symmetry_deviation_direct",
    "is_prime",
    "korobov1_kernel",
    "lattice_points",
    "mixture_bounds_s2",
    "mixture_term_s2",
    "mod_inverse",
    "multilinear_kernel",
    "optimal_vertex_weights",
    "primitive_root",
    "reproduce_table",
    "results_to_csv",
    "trapezoidal_weights",
    "usobolev1_kernel",
    "wce_decomposition",
    "wce_generic",
    "wce_korobov_lattice",
    "wce_multilinear",
    "wce_trapezoid_1d",
]
