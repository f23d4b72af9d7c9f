import math
import threading
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from diagzeta.exact import PiValue, bernoulli, binomial, euler_number, stirling1_unsigned


def rising_factorial_coeffs(r):
    """Expand x(x+1)...(x+r-1) by repeated integer polynomial multiplication."""
    poly = [1]
    for j in range(r):
        nxt = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i] += j * c
            nxt[i + 1] += c
        poly = nxt
    return poly


class TestBernoulli:
    @pytest.mark.parametrize("n, expected", [(0, 1), (1, Fraction(-1, 2)), (2, Fraction(1, 6)),
                                             (4, Fraction(-1, 30)), (6, Fraction(1, 42))])
    def test_small(self, n, expected):
        assert bernoulli(n) == expected

    def test_defining_recurrence(self):
        for n in range(1, 40):
            assert sum(math.comb(n + 1, j) * bernoulli(j) for j in range(n + 1)) == 0

    def test_odd_vanish(self):
        assert all(bernoulli(n) == 0 for n in range(3, 60, 2))

    def test_against_sympy_even(self):
        for n in range(0, 60, 2):
            assert bernoulli(n) == Fraction(str(sympy.bernoulli(n)))

    def test_sign_alternates(self):
        for k in range(1, 30):
            assert (bernoulli(2 * k) > 0) == (k % 2 == 1)


class TestEuler:
    @pytest.mark.parametrize("n, expected", [(0, 1), (2, -1), (4, 5), (6, -61), (8, 1385)])
    def test_small(self, n, expected):
        assert euler_number(n) == expected

    def test_odd_vanish(self):
        assert all(euler_number(n) == 0 for n in range(1, 41, 2))

    def test_against_sympy(self):
        for n in range(0, 40, 2):
            assert euler_number(n) == int(sympy.euler(n))

    def test_recurrence(self):
        for n in range(2, 40, 2):
            assert sum(math.comb(n, j) * euler_number(j) for j in range(0, n + 1, 2)) == 0


class TestStirling:
    @pytest.mark.parametrize("r, k, expected", [(3, 2, 3), (4, 2, 11), (5, 5, 1), (0, 0, 1), (3, 0, 0), (2, 3, 0)])
    def test_examples(self, r, k, expected):
        assert stirling1_unsigned(r, k) == expected

    def test_rising_factorial(self):
        for r in range(0, 11):
            coeffs = rising_factorial_coeffs(r)
            assert [stirling1_unsigned(r, k) for k in range(r + 1)] == coeffs
            for x in range(1, 6):
                rising = math.prod(x + j for j in range(r))
                assert sum(stirling1_unsigned(r, k) * x**k for k in range(r + 1)) == rising

    def test_row_sum_is_factorial(self):
        for r in range(1, 20):
            assert sum(stirling1_unsigned(r, k) for k in range(1, r + 1)) == math.factorial(r)


@pytest.mark.parametrize("n, k, expected", [(4, 2, 6), (6, 3, 20), (5, 0, 1), (2, 5, 0)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_tables_concurrent_fill():
    results = {}

    def work(i):
        n = 150 + 2 * i
        results[i] = (n, bernoulli(n), euler_number(n), stirling1_unsigned(90 + i, 7))

    threads = [threading.Thread(target=work, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for i, (n, b, e, s) in results.items():
        assert b == Fraction(str(sympy.bernoulli(n)))
        assert e == int(sympy.euler(n))
        assert s == rising_factorial_coeffs(90 + i)[7]


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)
pivalues = st.dictionaries(st.integers(0, 5).map(lambda e: 2 * e), rationals, max_size=4).map(PiValue)


class TestPiValue:
    @given(pivalues, pivalues, pivalues)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a + b == b + a
        assert a * PiValue.one() == a
        assert a + PiValue.zero() == a
        assert a - a == PiValue.zero()

    @given(pivalues)
    def test_no_zero_coefficients(self, a):
        assert all(q != 0 for q in (a * a - a).terms.values())

    @given(pivalues)
    def test_parse_round_trip(self, a):
        assert PiValue.parse(str(a)) == a
        assert " + -" not in str(a)

    def test_exponents_add(self):
        assert PiValue.monomial(2, 2) * PiValue.monomial(Fraction(1, 3), 4) == PiValue.monomial(Fraction(2, 3), 6)

    def test_canonical_strings(self):
        assert str(PiValue.monomial(Fraction(1, 120), 4)) == "1/120 * pi^4"
        assert str(PiValue.constant(Fraction(-1, 8))) == "-1/8"
        assert str(PiValue({0: 1, 2: Fraction(-3, 2), 4: 2})) == "1 - 3/2 * pi^2 + 2 * pi^4"
        assert str(PiValue.zero()) == "0"

    def test_odd_exponent_rejected(self):
        with pytest.raises(ValueError):
            PiValue({3: 1})

    def test_coercion_and_float(self):
        v = 2 + PiValue.monomial(Fraction(1, 6), 2) * 3
        assert math.isclose(float(v), 2 + math.pi**2 / 2)
        assert v - 2 == PiValue.monomial(Fraction(1, 2), 2)
        assert Fraction(1, 2) * PiValue.one() == Fraction(1, 2)
