import math

import numpy as np
import pytest

from vmlattice.errors import DomainError, PoleError
from vmlattice.special import (
    bernoulli1,
    bernoulli2,
    cot_pi_rational,
    harmonic,
    hurwitz_zeta2,
)


@pytest.mark.parametrize("t, expect", [(0.5, 0.0), (0.0, -0.5), (0.75, 0.25)])
def test_bernoulli1(t, expect):
    assert bernoulli1(t) == pytest.approx(expect, abs=1e-15)


@pytest.mark.parametrize("t, expect", [
    (0.0, 1 / 6),
    (0.5, -1 / 12),
    (0.25, -1 / 48),
])
def test_bernoulli2(t, expect):
    assert bernoulli2(t) == pytest.approx(expect, abs=1e-15)


@pytest.mark.parametrize("fn", [bernoulli1, bernoulli2])
@pytest.mark.parametrize("t", [-0.1, 1.1])
def test_bernoulli_domain(fn, t):
    with pytest.raises(DomainError):
        fn(t)


def test_bernoulli2_reflection():
    rng = np.random.default_rng(20250814)
    for t in rng.random(1000):
        assert bernoulli2(t) == pytest.approx(bernoulli2(1 - t), abs=1e-15)


@pytest.mark.parametrize("n, a, expect", [
    (3, 1, 11 / 6),
    (1, 2, 1.0),
    (4, 2, 1 + 1 / 4 + 1 / 9 + 1 / 16),
])
def test_harmonic(n, a, expect):
    assert harmonic(n, a) == pytest.approx(expect, rel=1e-15)


@pytest.mark.parametrize("a, expect", [
    (1.0, math.pi**2 / 6),
    (0.5, math.pi**2 / 2),
    (0.25, 17.197329154507114),  # 10^6-term partial sum plus 1/(L+a) tail
])
def test_hurwitz_zeta2_values(a, expect):
    assert hurwitz_zeta2(a) == pytest.approx(expect, rel=1e-13)


def test_hurwitz_zeta2_domain():
    with pytest.raises(DomainError):
        hurwitz_zeta2(0.0)


@pytest.mark.parametrize("a", [0.1 * k for k in range(1, 10)])
def test_hurwitz_zeta2_recurrence(a):
    assert hurwitz_zeta2(a) - 1 / a**2 == pytest.approx(
        hurwitz_zeta2(a + 1), rel=1e-12
    )


@pytest.mark.parametrize("n", [3, 5, 17])
def test_hurwitz_zeta2_refines_zeta2(n):
    # (1/n^2) sum_{h=1..n} zeta(2, h/n) re-tiles the integers
    total = sum(hurwitz_zeta2(h / n) for h in range(1, n + 1)) / n**2
    assert total == pytest.approx(math.pi**2 / 6, rel=1e-10)


def test_hurwitz_zeta2_vectorized():
    a = np.array([1.0, 0.5, 0.25])
    out = hurwitz_zeta2(a)
    assert out.shape == (3,)
    for ai, oi in zip(a, out):
        assert oi == pytest.approx(hurwitz_zeta2(float(ai)), rel=1e-15)


@pytest.mark.parametrize("k, n, expect", [
    (2, 4, 0.0),
    (1, 4, 1.0),
    (1, 6, math.sqrt(3)),
])
def test_cot_pi_rational(k, n, expect):
    assert cot_pi_rational(k, n) == pytest.approx(expect, abs=1e-15)


def test_cot_pole():
    with pytest.raises(PoleError):
        cot_pi_rational(0, 7)
    with pytest.raises(PoleError):
        cot_pi_rational(14, 7)


def test_cot_antisymmetry():
    for n in range(2, 102):
        for k in range(1, n):
            if 2 * k == n:
                continue
            assert cot_pi_rational(k, n) == pytest.approx(
                -cot_pi_rational(n - k, n), rel=1e-14, abs=1e-15
            )


@pytest.mark.parametrize("n", [3, 5, 17, 53, 101])
def test_dedekind_average(n):
    avg = math.fsum(cot_pi_rational(w, n) ** 2 for w in range(1, n)) / (n - 1)
    assert avg == pytest.approx((n - 2) / 3, rel=1e-10)
