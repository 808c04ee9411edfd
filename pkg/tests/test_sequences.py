from fractions import Fraction
from math import factorial

import pytest
import sympy
from gmpy2 import mpq
from hypothesis import given, strategies as st

from balident.exact import ALPHA, BETA, I, QI, SQRT5
from balident.polyring import MODULUS, X, Poly
from balident.sequences import SequenceCache, binomial, falling_factorial

x = sympy.Symbol("x")


def to_sympy(p: Poly):
    return sympy.expand(sum(sympy.Rational(int(c.numerator), int(c.denominator)) * x**k for k, c in enumerate(p.coeffs)))


def bernoulli_oracle(top):
    """B_n from the reciprocal of (e^z - 1)/z, computed with Fractions."""
    a = [Fraction(1, factorial(k + 1)) for k in range(top + 1)]
    inv = [Fraction(1)]
    for n in range(1, top + 1):
        inv.append(-sum(a[k] * inv[n - k] for k in range(1, n + 1)))
    return [inv[n] * factorial(n) for n in range(top + 1)]


@pytest.fixture(scope="module")
def c():
    return SequenceCache()


def test_bernoulli_examples(c):
    assert c.bernoulli_number(0) == 1
    assert c.bernoulli_number(1) == mpq(-1, 2)
    assert c.bernoulli_number(4) == mpq(-1, 30)
    assert c.bernoulli_number(7) == 0
    assert c.bernoulli_number(12) == mpq(-691, 2730)


def test_bernoulli_against_series_oracle(c):
    for n, expected in enumerate(bernoulli_oracle(40)):
        assert c.bernoulli_number(n) == mpq(expected.numerator, expected.denominator)


def test_bernoulli_poly_examples(c):
    assert c.bernoulli_poly(0) == Poly((1,))
    assert c.bernoulli_poly(2) == X**2 - X + mpq(1, 6)
    assert c.bernoulli_poly(3)(mpq(1, 2)) == 0


def test_bernoulli_poly_against_sympy(c):
    for n in range(25):
        assert to_sympy(c.bernoulli_poly(n)) == sympy.expand(sympy.bernoulli(n, x))


def test_fibonacci_lucas_examples(c):
    assert [c.fibonacci(n) for n in range(8)] == [0, 1, 1, 2, 3, 5, 8, 13]
    assert (c.lucas(0), c.lucas(1), c.lucas(4)) == (2, 1, 7)
    assert c.lucas(6) ** 2 - 5 * c.fibonacci(6) ** 2 == 4


def test_fibonacci_lucas_against_sympy(c):
    for n in range(60):
        assert c.fibonacci(n) == sympy.fibonacci(n)
        assert c.lucas(n) == sympy.lucas(n)


def test_balancing_examples(c):
    assert c.balancing_poly(2) == 6 * X
    assert c.balancing_poly(4) == 216 * X**3 - 12 * X
    assert c.lucas_balancing_poly(2) == 18 * X**2 - 1
    assert c.lucas_balancing_poly(3) == 108 * X**3 - 9 * X


def test_balancing_numbers_oeis(c):
    # A001109 and A001541
    assert [c.balancing_number(n) for n in range(11)] == [
        0, 1, 6, 35, 204, 1189, 6930, 40391, 235416, 1372105, 7997214,
    ]
    assert [c.lucas_balancing_number(n) for n in range(11)] == [
        1, 3, 17, 99, 577, 3363, 19601, 114243, 665857, 3880899, 22619537,
    ]


def test_balancing_against_chebyshev(c):
    # B*_n(x) = U_{n-1}(3x), C_n(x) = T_n(3x)
    for n in range(1, 30):
        assert to_sympy(c.balancing_poly(n)) == sympy.expand(sympy.chebyshevu(n - 1, 3 * x))
        assert to_sympy(c.lucas_balancing_poly(n)) == sympy.expand(sympy.chebyshevt(n, 3 * x))


def test_falling_factorial_and_binomial():
    assert falling_factorial(7, 0) == 1
    assert falling_factorial(5, 3) == 60
    assert falling_factorial(2, 3) == 0
    assert falling_factorial(X, 2) == X**2 - X
    assert binomial(5, 2) == 10
    assert binomial(7, 0) == 1
    assert binomial(10, 5) == 252
    assert binomial(3, -1) == binomial(3, 4) == 0


def test_negative_indices_rejected(c):
    for fn in (c.bernoulli_number, c.bernoulli_poly, c.fibonacci, c.lucas, c.balancing_poly):
        with pytest.raises(ValueError):
            fn(-1)


def test_cache_entries_are_stable():
    c = SequenceCache()
    first = c.balancing_poly(10)
    c.balancing_poly(30)
    assert c.balancing_poly(10) is first


def test_override_corrupts_only_that_entry():
    c = SequenceCache({2: mpq(7, 6)})
    clean = SequenceCache()
    assert c.bernoulli_number(2) == mpq(7, 6)
    assert c.bernoulli_number(4) == clean.bernoulli_number(4)
    assert c.bernoulli_poly(2) != clean.bernoulli_poly(2)


# invariants -----------------------------------------------------------------


def test_odd_bernoulli_vanish(c):
    for n in range(1, 21):
        assert c.bernoulli_number(2 * n + 1) == 0


def test_bernoulli_reflection(c):
    one_minus_x = Poly((1, -1))
    for n in range(31):
        p = c.bernoulli_poly(n)
        reflected = sum((coef * one_minus_x**k for k, coef in enumerate(p.coeffs)), Poly())
        assert reflected == (-1) ** n * p


def _shift(p: Poly, h) -> Poly:
    return sum((coef * Poly((h, 1)) ** k for k, coef in enumerate(p.coeffs)), Poly())


def test_bernoulli_difference_equation(c):
    for n in range(1, 31):
        p = c.bernoulli_poly(n)
        assert _shift(p, 1) - p == n * X ** (n - 1)


def test_bernoulli_derivative(c):
    for n in range(1, 31):
        assert c.bernoulli_poly(n).derivative() == n * c.bernoulli_poly(n - 1)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_multiplication_theorem(c, q):
    for n in range(21):
        p = c.bernoulli_poly(n)
        lhs = sum((_shift(p, mpq(r, q)) for r in range(q)), Poly()) / q
        scaled = Poly(coef * q**k for k, coef in enumerate(p.coeffs))
        assert lhs == scaled / q**n


def test_balancing_parity(c):
    for n in range(41):
        p = c.balancing_poly(n)
        negated = Poly(coef * (-1) ** k for k, coef in enumerate(p.coeffs))
        assert negated == (-1) ** (n + 1) * p


def test_lucas_balancing_relations(c):
    B, C = c.balancing_poly, c.lucas_balancing_poly
    for n in range(1, 41):
        assert C(n) == 3 * X * C(n - 1) + MODULUS * B(n - 1)
        assert C(n) == B(n + 1) - 3 * X * B(n)


def test_golden_powers(c):
    for j in range(1, 21):
        assert ALPHA**j == ALPHA * c.fibonacci(j) + c.fibonacci(j - 1)
        assert BETA**j == BETA * c.fibonacci(j) + c.fibonacci(j - 1)
        assert (ALPHA**j - BETA**j) / SQRT5 == c.fibonacci(j)


def test_fibonacci_lucas_identities(c):
    F, L = c.fibonacci, c.lucas
    for n in range(41):
        assert F(n) * L(n) == F(2 * n)
        assert L(n) ** 2 == 5 * F(n) ** 2 + (-1) ** n * 4
    for j in range(1, 41):
        assert F(j) + 2 * F(j - 1) == L(j)


@given(st.integers(min_value=0, max_value=4), st.integers(min_value=0, max_value=12))
def test_link_even(m, n):
    c = SequenceCache()
    x0 = mpq(c.lucas(2 * m), 6)
    assert c.fibonacci(2 * m) * c.balancing_poly(n)(x0) == c.fibonacci(2 * m * n)
    assert 2 * c.lucas_balancing_poly(n)(x0) == c.lucas(2 * m * n)


@given(st.integers(min_value=0, max_value=3), st.integers(min_value=0, max_value=12))
def test_link_odd_gaussian(m, n):
    c = SequenceCache()
    p = 2 * m + 1
    x0 = I * mpq(c.lucas(p), 6)
    lhs = c.fibonacci(p) * c.balancing_poly(n)(x0)
    assert QI.one() * lhs == I ** (n - 1) * c.fibonacci(p * n)
    assert QI.one() * 2 * c.lucas_balancing_poly(n)(x0) == I**n * c.lucas(p * n)
