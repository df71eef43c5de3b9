import cmath
import math

import numpy as np
import pytest

from vmlattice.errors import ConsistencyError, DimensionError, NotPrime
from vmlattice.kernels import ProductWeights
from vmlattice.numtheory import fibonacci, mod_inverse
from vmlattice.rules import LatticeRule, WeightedRule, build_rule
from vmlattice.wce import (
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

PI2 = math.pi**2
KOR_SCALE = 1.0 / (2 * math.pi) ** 2


def test_generic_one_point_midpoint_rule_multilinear():
    wr = WeightedRule(
        numerators=np.array([[1, 1]]), denominator=2, weights=np.array([1.0])
    )
    assert wce_generic(wr, "multilinear") == 0.0


def test_generic_trapezoid_1d_closed_form():
    wr = build_rule(LatticeRule((1,), 4), "trapezoidal")
    assert wce_generic(wr, "usobolev1") == pytest.approx(
        math.sqrt(1 / 12) / 4, rel=1e-13
    )


def test_generic_single_point_korobov():
    wr = build_rule(LatticeRule((1,), 1), "plain")
    assert wce_generic(wr, "korobov1") == pytest.approx(
        math.sqrt(PI2 / 3), rel=1e-13
    )


def test_korobov_lattice_two_points():
    sq = wce_korobov_lattice(LatticeRule((1,), 2)) ** 2
    assert sq == pytest.approx(PI2 / 12, rel=1e-13)


def test_korobov_lattice_matches_generic():
    rule = LatticeRule((1, 8), 13)
    gamma = ProductWeights((KOR_SCALE, KOR_SCALE))
    fast = wce_korobov_lattice(rule, gamma)
    slow = wce_generic(build_rule(rule, "plain"), "korobov1", gamma)
    assert fast == pytest.approx(slow, rel=1e-12)


@pytest.mark.parametrize("z, n", [((1, 5), 17), ((1, 8), 13), ((1, 2, 3), 7)])
def test_korobov_invariant_under_vertex_modification(z, n):
    rule = LatticeRule(z, n)
    vals = [
        wce_generic(build_rule(rule, scheme), "korobov1")
        for scheme in ("plain", "trapezoidal", "optimal")
    ]
    assert vals[1] == pytest.approx(vals[0], rel=1e-12)
    assert vals[2] == pytest.approx(vals[0], rel=1e-12)
    assert wce_korobov_lattice(rule) == pytest.approx(vals[0], rel=1e-12)


def test_multilinear_zero_on_optimal_rule():
    for z, n in [((1, 8), 13), ((1, 5), 17), ((1, 2, 3), 7)]:
        wr = build_rule(LatticeRule(z, n), "optimal")
        assert wce_multilinear(wr) ** 2 == pytest.approx(0.0, abs=1e-12)


def test_multilinear_zero_on_1d_trapezoid():
    wr = build_rule(LatticeRule((1,), 9), "trapezoidal")
    assert wce_multilinear(wr) == pytest.approx(0.0, abs=1e-12)


def test_multilinear_plain_two_points():
    wr = build_rule(LatticeRule((1,), 2), "plain")
    # mean of B1 over {0, 1/2} is -1/4; squared times 12
    assert wce_multilinear(wr) ** 2 == pytest.approx(3 / 4, rel=1e-13)
    assert wce_multilinear(wr) == pytest.approx(
        wce_generic(wr, "multilinear"), rel=1e-12
    )


def test_decomposition_1d_has_no_mixture():
    for scheme in ("plain", "trapezoidal", "optimal"):
        bd = wce_decomposition(build_rule(LatticeRule((1,), 11), scheme))
        assert bd.mixture == 0.0


def test_decomposition_reference_rule():
    wr = build_rule(LatticeRule((1, 5), 17), "optimal")
    bd = wce_decomposition(wr)
    assert bd.mixture == pytest.approx(2.39e-4, abs=0.005e-4)
    direct = wce_generic(wr, "usobolev1") ** 2
    assert bd.sq_total == pytest.approx(direct, rel=1e-10)
    assert bd.sq_total == pytest.approx(
        bd.sq_multilinear + bd.sq_korobov + bd.mixture, abs=1e-13
    )
    assert bd.sq_total >= 0.0


@pytest.mark.parametrize("z, n, scheme", [
    ((1,), 61, "plain"),
    ((1,), 61, "optimal"),
    ((1, 23), 61, "trapezoidal"),
    ((1, 8), 13, "plain"),
    ((1, 1, 1), 3, "plain"),
    ((1, 2, 3), 7, "optimal"),
    ((1, 8, 12), 13, "trapezoidal"),
])
def test_decomposition_matches_kernel_quadform(z, n, scheme):
    rng = np.random.default_rng(n * len(z))
    gamma = ProductWeights(tuple(rng.uniform(0.5, 2.0, len(z))))
    wr = build_rule(LatticeRule(z, n), scheme)
    bd = wce_decomposition(wr, gamma)
    direct = wce_generic(wr, "usobolev1", gamma) ** 2
    assert bd.sq_total == pytest.approx(direct, rel=1e-10)


def test_exp_b1_sum_closed_form_values():
    assert exp_b1_sum(3, 0, 7) == 0
    assert exp_b1_sum(1, 1, 4) == pytest.approx(-1j / 8, abs=1e-15)
    expect = -1j / math.tan(math.pi * 5 / 7) / 14
    assert exp_b1_sum(3, 1, 7) == pytest.approx(expect, abs=1e-15)


@pytest.mark.parametrize("n", [2, 3, 5, 7, 11, 13])
def test_exp_b1_sum_matches_direct(n):
    for z in range(1, n):
        if math.gcd(z, n) != 1:
            continue
        for theta in range(n):
            closed = exp_b1_sum(z, theta, n)
            direct = exp_b1_sum_direct(z, theta, n)
            assert cmath.isclose(closed, direct, abs_tol=1e-12)


def test_cot2_sum_truncated_values():
    assert cot2_sum_truncated(1, 3) == pytest.approx(5 / 108, rel=1e-14)
    assert cot2_sum_truncated(1, 2) == 0.0


@pytest.mark.parametrize("n", [3, 5, 17, 53, 101])
def test_cot2_sum_truncated_lower_bound(n):
    for w in range(1, n):
        assert cot2_sum_truncated(w, n) > 1 / (6 * n**2)


def test_cot2_sum_exact_analytic_case():
    # for N=3 every term has cot^2 = 1/3, giving (1/3) of the h^-2 tail
    expect = (1 / 9) * (1 / 3) * (PI2 / 6) * (8 / 9)
    assert cot2_sum_exact(1, 3) == pytest.approx(expect, rel=1e-13)


def test_cot2_sum_exact_brute_force():
    h = np.arange(1, 10**6 + 1)
    h = h[h % 3 != 0]
    partial = float(np.sum((1 / 3) / (h * h.astype(float))))
    tail = (1 / 3) / 10**6  # integral bound on the dropped tail
    got = cot2_sum_exact(1, 3) * 9
    assert got == pytest.approx(partial + tail / 2, rel=1e-6)


@pytest.mark.parametrize("n", [5, 13, 17, 37])
def test_cot2_sum_bracketing(n):
    for w in range(1, n):
        trunc = cot2_sum_truncated(w, n)
        exact = cot2_sum_exact(w, n)
        assert trunc < exact < (PI2 / 6) * trunc


@pytest.mark.parametrize("n", [5, 13, 17])
def test_cot2_sum_exact_mirror_symmetry(n):
    for w in range(1, n):
        assert cot2_sum_exact(w, n) == pytest.approx(
            cot2_sum_exact(n - w, n), rel=1e-14
        )


def test_mixture_term_reference_values():
    pair = mixture_term_s2(LatticeRule((1, 5), 17))
    assert pair.total == pytest.approx(2.39e-4, abs=0.005e-4)
    assert pair.w2 == mod_inverse(pair.w1, 17)
    pair = mixture_term_s2(LatticeRule((1, 11), 37))
    assert pair.total == pytest.approx(7.63e-5, abs=0.005e-5)


def test_mixture_term_fibonacci_halves_equal():
    pair = mixture_term_s2(LatticeRule((1, 8), 13))
    assert pair.term_w1 == pytest.approx(pair.term_w2, rel=1e-12)


def test_mixture_term_needs_two_dimensions():
    with pytest.raises(DimensionError):
        mixture_term_s2(LatticeRule((1, 2, 3), 7))


@pytest.mark.parametrize("n", [5, 13, 17, 37])
def test_mixture_matches_decomposition_on_optimal_rule(n):
    for z2 in (2, n - 2):
        rule = LatticeRule((1, z2), n)
        pair = mixture_term_s2(rule)
        bd = wce_decomposition(build_rule(rule, "optimal"))
        assert pair.total == pytest.approx(bd.mixture, rel=1e-9)


@pytest.mark.parametrize("z2, n", [(5, 17), (8, 13), (11, 37)])
def test_mixture_bounds_bracket(z2, n):
    rule = LatticeRule((1, z2), n)
    lo, hi = mixture_bounds_s2(rule)
    total = mixture_term_s2(rule).total
    assert lo < total < hi
    assert hi / lo == pytest.approx(PI2 / 6, rel=1e-14)


def test_trapezoid_1d_closed_form():
    assert wce_trapezoid_1d(1, 12.0) == pytest.approx(1.0, rel=1e-15)
    assert wce_trapezoid_1d(4, 1.0) == pytest.approx(0.0721687836487032, rel=1e-12)


@pytest.mark.parametrize("n", [2, 7, 33, 64])
def test_trapezoid_1d_matches_generic(n):
    wr = build_rule(LatticeRule((1,), n), "trapezoidal")
    assert wce_trapezoid_1d(n, 1.0) == pytest.approx(
        wce_generic(wr, "usobolev1"), rel=1e-12
    )


def test_average_identities_small():
    rep = average_identities(5)
    assert rep.avg_cot2 == pytest.approx(1.0, rel=1e-12)
    assert rep.rhs_dedekind == pytest.approx(1.0, rel=1e-15)


def test_average_identities_match():
    rep = average_identities(17)
    assert rep.avg_cot2 == pytest.approx(rep.rhs_dedekind, rel=1e-12)
    assert rep.avg_S == pytest.approx(rep.rhs_avg, rel=1e-12)
    assert rep.avg_abscot <= rep.bound_abscot


def test_average_identities_rejects_composite():
    with pytest.raises(NotPrime):
        average_identities(15)


def test_existence_bound_beats_search_reference():
    # N=17 reference optimum: sq_total 2.16e-3, Korobov part 1.92e-3
    bound = existence_bound(17, korobov_wce=math.sqrt(1.92e-3))
    assert math.sqrt(2.16e-3) < bound


def test_existence_bound_monotone_and_scaling():
    b1 = existence_bound(17, korobov_wce=0.0)
    b2 = existence_bound(67, korobov_wce=0.0)
    assert b2 < b1
    b4 = existence_bound(17, gamma=(4.0, 4.0), korobov_wce=0.0)
    assert b4 == pytest.approx(4 * b1, rel=1e-14)


def test_harmonic_log_bound():
    from vmlattice.special import harmonic

    c = 11 / (6 * math.log(3))
    assert harmonic(3, 1) == pytest.approx(c * math.log(3), rel=1e-12)
    for n in (4, 10, 100, 1000, 10**4, 10**5):
        assert harmonic(n, 1) <= c * math.log(n)


def test_inverse_symmetry_zero_for_self_inverse():
    assert inverse_symmetry_deviation(1, 11) == 0.0


@pytest.mark.parametrize("k", range(5, 21))
def test_inverse_symmetry_zero_for_fibonacci(k):
    n, z = fibonacci(k), fibonacci(k - 1)
    assert inverse_symmetry_deviation(z, n) == pytest.approx(0.0, abs=1e-13)


@pytest.mark.parametrize("n", [7, 13, 37, 101, 211])
def test_inverse_symmetry_fast_route_matches_direct(n):
    for z in (2, 3, n - 5):
        fast = inverse_symmetry_deviation(z, n)
        slow = inverse_symmetry_deviation_direct(z, n)
        assert fast == pytest.approx(slow, abs=1e-10 * n)


@pytest.mark.parametrize("n", [13, 37])
def test_bernoulli_double_sum_identity(n):
    # the O(N^2) double sum equals the scaled one-sided cot^2 sum
    for z in range(2, n - 1):
        lhs = bernoulli_double_sum(z, n)
        rhs = (n**2 / (4 * PI2)) * cot2_sum_exact(z, n)
        assert lhs == pytest.approx(rhs, rel=1e-10)


def test_generic_rejects_unknown_kernel():
    wr = build_rule(LatticeRule((1,), 5), "plain")
    with pytest.raises(Exception):
        wce_generic(wr, "nope")
