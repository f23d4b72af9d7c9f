import math

import mpmath
import pytest

from diagzeta.errors import DomainError
from diagzeta.laurent import (
    LaurentReport,
    PoleSpec,
    laurent_numeric_check,
    leading_coefficient,
    nonvanishing_certificate,
    pole_set,
)
from diagzeta.mzv import Family, diagonal_closed_form
from diagzeta.zeta import zeta_numeric


def mp_leading(r, k):
    """zeta_r(1/k + eps)(k eps)^l at eps = 1e-30 with 120 digits, via Newton's identities."""
    with mpmath.workdps(120):
        s = mpmath.mpf(1) / k + mpmath.mpf("1e-30")
        f = [mpmath.mpf(1)]
        for n in range(1, r + 1):
            f.append(sum((-1) ** (j - 1) * f[n - j] * mpmath.zeta(j * s) for j in range(1, n + 1)) / n)
        return f[r] * (k * s - 1) ** (r // k)


class TestPoleSet:
    def test_examples(self):
        assert [(p.k, p.order) for p in pole_set(2)] == [(1, 2), (2, 1)]
        assert pole_set(1) == [PoleSpec(1, 1, 1, 0)]
        p = pole_set(6)[3]
        assert (p.k, p.order, p.remainder) == (4, 1, 2)
        assert p.location == 0.25

    def test_divisibility(self):
        for r in range(1, 13):
            for p in pole_set(r):
                assert p.order * p.k + p.remainder == r
                assert (p.remainder == 0) == (r % p.k == 0)

    def test_domain(self):
        with pytest.raises(DomainError):
            pole_set(0)
        with pytest.raises(DomainError):
            leading_coefficient(3, 4)


class TestLeadingCoefficient:
    def test_examples(self):
        assert leading_coefficient(2, 2) == -0.5
        assert leading_coefficient(1, 1) == 1
        assert leading_coefficient(3, 2) == pytest.approx(-zeta_numeric(0.5) / 2)
        assert leading_coefficient(3, 2) == pytest.approx(0.73018, abs=1e-5)

    def test_k_one(self):
        for r in range(1, 9):
            assert leading_coefficient(r, 1) == pytest.approx(1 / math.factorial(r), rel=1e-15)

    @pytest.mark.parametrize("r, k", [(2, 1), (3, 2), (4, 3), (5, 2), (5, 3), (6, 4)])
    def test_against_high_precision(self, r, k):
        assert leading_coefficient(r, k) == pytest.approx(float(mp_leading(r, k)), rel=1e-10)


class TestNumericCheck:
    def test_example_two_two(self):
        rep = laurent_numeric_check(2, 2, [1e-3, 1e-4])
        assert isinstance(rep, LaurentReport)
        assert rep.passed and rep.final_gap < 1e-2
        assert rep.leading_closed_form == -0.5

    def test_example_simple_pole(self):
        rep = laurent_numeric_check(1, 1, [1e-4])
        assert rep.numeric_estimates[0][1] == pytest.approx(1, rel=1e-3)
        assert rep.passed

    def test_example_four_three(self):
        rep = laurent_numeric_check(4, 3, [1e-3, 1e-4])
        assert rep.leading_closed_form == pytest.approx(zeta_numeric(1 / 3) / 3)
        assert rep.passed

    def test_full_grid(self):
        for r in range(1, 7):
            for k in range(1, r + 1):
                rep = laurent_numeric_check(r, k)
                assert rep.passed, (r, k, rep.gaps)
                assert rep.contracting
                assert len(rep.numeric_estimates) == 6

    def test_one_sided(self):
        rep = laurent_numeric_check(3, 1, two_sided=False)
        assert all(eps > 0 for eps, _ in rep.numeric_estimates)
        assert rep.passed

    def test_gap_scales_with_eps(self):
        gaps = laurent_numeric_check(4, 2, two_sided=False).gaps
        assert gaps[1] / gaps[0] == pytest.approx(0.1, rel=0.2)

    def test_tight_tolerance_fails(self):
        assert not laurent_numeric_check(3, 2, tolerance=1e-9).passed

    def test_collision(self):
        with pytest.raises(DomainError):
            laurent_numeric_check(4, 3, [1 / 2 - 1 / 3])

    def test_zero_epsilon(self):
        with pytest.raises(DomainError):
            laurent_numeric_check(2, 1, [0.0])


class TestCertificate:
    def test_examples(self):
        assert nonvanishing_certificate(2, 2)
        assert nonvanishing_certificate(5, 3)
        z = diagonal_closed_form(Family.ZETA, 2, 1 / 3).value
        assert z == pytest.approx((zeta_numeric(1 / 3) ** 2 - zeta_numeric(2 / 3)) / 2)
        assert z > 0

    def test_grid(self):
        assert all(nonvanishing_certificate(r, k) for r in range(1, 7) for k in range(1, r + 1))

    def test_larger_depths(self):
        assert all(nonvanishing_certificate(r, k) for r in range(7, 13) for k in range(1, r + 1))
