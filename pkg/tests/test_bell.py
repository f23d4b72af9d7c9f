import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from diagzeta.bell import (
    complete_bell,
    complete_bell_series_check,
    exp_series_coefficients,
    partial_bell,
    partitions_of,
)
from diagzeta.exact import PiValue, stirling1_unsigned

X = sympy.symbols("x1:13")
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def bell_by_recurrence(n, k, xs):
    """B_{n,k} = sum_i C(n-1, i-1) x_i B_{n-i,k-1}; independent of partitions."""
    if n == 0 and k == 0:
        return 1
    if n == 0 or k == 0:
        return 0
    return sum(math.comb(n - 1, i - 1) * xs[i - 1] * bell_by_recurrence(n - i, k - 1, xs)
               for i in range(1, n - k + 2))


class TestPartitions:
    def test_three(self):
        assert list(partitions_of(3)) == [(3, 0, 0), (1, 1, 0), (0, 0, 1)]

    def test_zero(self):
        assert list(partitions_of(0)) == [()]

    def test_counts_match_partition_function(self):
        assert len(list(partitions_of(6))) == 11
        for r in range(1, 26):
            assert len(list(partitions_of(r))) == sympy.partition(r)

    def test_weight_and_uniqueness(self):
        for r in range(1, 15):
            parts = list(partitions_of(r))
            assert len(set(parts)) == len(parts)
            assert all(len(c) == r and sum(i * ci for i, ci in enumerate(c, 1)) == r for c in parts)
            assert parts == sorted(parts, reverse=True)


class TestPartialBell:
    def test_b32_symbolic(self):
        assert sympy.expand(partial_bell(3, 2, X)) == 3 * X[0] * X[1]

    def test_small_table(self):
        assert partial_bell(1, 1, X) == X[0]
        assert partial_bell(2, 1, X) == X[1]
        assert sympy.expand(partial_bell(2, 2, X)) == X[0] ** 2
        assert partial_bell(3, 1, X) == X[2]
        assert sympy.expand(partial_bell(3, 3, X)) == X[0] ** 3

    def test_edges(self):
        for n in range(1, 11):
            assert partial_bell(n, 1, X) == X[n - 1]
            assert sympy.expand(partial_bell(n, n, X)) == X[0] ** n
        assert partial_bell(0, 0, X) == 1
        assert partial_bell(4, 0, X) == 0

    def test_k_above_n_rejected(self):
        with pytest.raises(ValueError):
            partial_bell(2, 3, X)

    def test_degree_and_weight(self):
        for n in range(1, 9):
            for k in range(1, n + 1):
                poly = sympy.Poly(partial_bell(n, k, X[:n]), *X[:n])
                for monom, coeff in poly.terms():
                    assert sum(monom) == k
                    assert sum(i * e for i, e in enumerate(monom, 1)) == n
                    assert coeff == int(coeff)

    def test_matches_recurrence_symbolically(self):
        for n in range(1, 8):
            for k in range(1, n + 1):
                assert sympy.expand(partial_bell(n, k, X) - bell_by_recurrence(n, k, X)) == 0

    def test_stirling_specialization(self):
        assert partial_bell(3, 2, [1, 1]) == 3 == stirling1_unsigned(3, 2)
        for r in range(1, 13):
            xs = [math.factorial(j) for j in range(r)]
            for k in range(1, r + 1):
                assert partial_bell(r, k, xs) == stirling1_unsigned(r, k)


class TestCompleteBell:
    def test_examples(self):
        assert complete_bell(1, X) == X[0]
        assert sympy.expand(complete_bell(2, X)) == X[0] ** 2 + X[1]
        assert sympy.expand(complete_bell(3, X)) == X[0] ** 3 + 3 * X[0] * X[1] + X[2]
        assert complete_bell(0, ()) == 1

    def test_sum_of_partials(self):
        for n in range(1, 9):
            assert sympy.expand(complete_bell(n, X) - sum(partial_bell(n, k, X) for k in range(1, n + 1))) == 0

    def test_bell_numbers(self):
        assert [complete_bell(n, [1] * 10) for n in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]

    def test_pivalue_ring(self):
        pi2 = PiValue.monomial(1, 2)
        assert complete_bell(2, [pi2, PiValue.constant(3)]) == PiValue({0: 3, 4: 1})

    def test_float_ring(self):
        assert complete_bell(3, [0.5, 0.25, 0.125]) == pytest.approx(0.5**3 + 3 * 0.5 * 0.25 + 0.125)


class TestSeries:
    def test_bell_number_coefficients(self):
        assert complete_bell_series_check(4, [1, 1, 1, 1])
        assert exp_series_coefficients([1, 1, 1, 1], 4) == [1, 1, 2, 5, 15]

    def test_exp_t(self):
        assert complete_bell_series_check(3, [1, 0, 0])
        assert exp_series_coefficients([1, 0, 0], 3) == [1, 1, 1, 1]

    def test_empty(self):
        assert complete_bell_series_check(0, [])

    def test_cap(self):
        with pytest.raises(ValueError):
            complete_bell_series_check(21, [1] * 21)

    @settings(max_examples=20, deadline=None)
    @given(st.lists(rationals, min_size=12, max_size=12))
    def test_random_rationals(self, xs):
        assert complete_bell_series_check(12, xs)


@settings(max_examples=30, deadline=None)
@given(rationals, st.lists(rationals, min_size=10, max_size=10), st.integers(1, 10))
def test_homogeneity(alpha, xs, n):
    scaled = [alpha ** (i + 1) * x for i, x in enumerate(xs)]
    assert complete_bell(n, scaled) == alpha**n * complete_bell(n, xs)


@settings(max_examples=30, deadline=None)
@given(st.lists(rationals, min_size=10, max_size=10), st.lists(rationals, min_size=10, max_size=10),
       st.integers(0, 10))
def test_binomial_convolution(xs, ys, n):
    lhs = complete_bell(n, [x + y for x, y in zip(xs, ys)])
    rhs = sum(math.comb(n, j) * complete_bell(j, xs) * complete_bell(n - j, ys) for j in range(n + 1))
    assert lhs == rhs
    assert isinstance(lhs, (int, Fraction))
