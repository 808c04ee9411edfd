import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from balident import egf
from balident.egf import TruncSeries, cosh_linear, exp_linear, series_mul, sinh_linear
from balident.exact import ALPHA, BETA, SQRT5
from balident.polyring import MODULUS, S, X, Poly, SqrtExtElem
from balident.sequences import SequenceCache

from strategies import rationals

N = 25


def ext(p):
    return SqrtExtElem(p)


@pytest.fixture(scope="module")
def c():
    return SequenceCache()


def test_exponential_products():
    e = exp_linear(mpq(1), 10)
    e_neg = exp_linear(mpq(-1), 10)
    assert list(e * e_neg) == [1] + [0] * 10
    assert list(e * e) == [2**n for n in range(11)]


def test_thm1_coefficient_two(c):
    q = 12 * X * S
    prod = egf.egf_b2(4) * egf.egf_bernoulli(c, "zero", q, 4)
    # 2 * 6x * (C_2 - s B*_2), from the n factor times 6x
    expected = 12 * X * (ext(c.lucas_balancing_poly(2)) - S * c.balancing_poly(2))
    assert prod[2] == expected


def test_exp_linear_examples():
    assert list(exp_linear(mpq(0), 5)) == [1, 0, 0, 0, 0, 0]
    a = ext(18 * X**2 - 1)
    assert exp_linear(a, 3)[1] == a
    assert exp_linear(ext(3 * X), 3)[2] == ext(9 * X**2)


def test_hyperbolic_examples():
    q = 6 * X * S
    assert sinh_linear(q, 4)[1] == q
    assert sinh_linear(q, 4)[2] == 0
    assert cosh_linear(q, 4)[0] == 1
    assert cosh_linear(q, 4)[2] == ext(36 * X**2 * MODULUS)


def test_balancing_egf_examples(c):
    b2 = egf.egf_b2(5)
    assert b2[0] == 0
    assert b2[1] == ext(6 * X)
    assert b2[2] == ext(216 * X**3 - 12 * X)
    c2 = egf.egf_c2(5)
    assert c2[0] == 1 and c2[1] == ext(18 * X**2 - 1)
    assert egf.egf_b1(5)[0] == 1


def test_bernoulli_egf_examples(c):
    plain = egf.egf_bernoulli(c, "zero", mpq(1), 4)
    assert list(plain)[:3] == [1, mpq(-1, 2), mpq(1, 6)]
    q = 12 * X * S
    scaled = egf.egf_bernoulli(c, "zero", q, 4)
    assert scaled[2] == ext(144 * X**2 * MODULUS * mpq(1, 6))
    zero = egf.egf_bernoulli(c, "zero", mpq(0), 4)
    assert list(zero) == [1, 0, 0, 0, 0]


def test_bernoulli_egf_arguments(c):
    half = egf.egf_bernoulli(c, "half", mpq(1), 6)
    assert [half[n] for n in range(7)] == [c.bernoulli_poly(n)(mpq(1, 2)) for n in range(7)]
    sym = egf.egf_bernoulli(c, "x", mpq(2), 5)
    assert sym[3] == 8 * c.bernoulli_poly(3)
    point = egf.egf_bernoulli(c, mpq(1, 3), mpq(1), 3)
    assert point[2] == c.bernoulli_poly(2)(mpq(1, 3))


def test_lemma1_all_four(c):
    B, C = c.balancing_poly, c.lucas_balancing_poly
    b1, b2, c1, c2 = egf.egf_b1(N), egf.egf_b2(N), egf.egf_c1(N), egf.egf_c2(N)
    for n in range(N + 1):
        assert b1[n] == ext(B(2 * n + 1))
        assert b2[n] == ext(B(2 * n))
        assert c1[n] == ext(C(2 * n + 1))
        assert c2[n] == ext(C(2 * n))


def test_full_balancing_egfs(c):
    b, cc = egf.egf_b(N), egf.egf_c(N)
    for n in range(N + 1):
        assert b[n] == ext(c.balancing_poly(n))
        assert cc[n] == ext(c.lucas_balancing_poly(n))


def test_fibonacci_progression_egf(c):
    for j in range(1, 5):
        f = egf.egf_fibonacci_ap(ALPHA**j, BETA**j, SQRT5, 10)
        assert [f[n] for n in range(11)] == [c.fibonacci(j * n) for n in range(11)]


def test_shift_scale_parts():
    e = exp_linear(mpq(1), 5)
    assert list(e.shift()) == [0, 1, 2, 3, 4, 5]
    assert list(e.scale(mpq(3))) == [3**n for n in range(6)]
    assert e.even_part() + e.odd_part() == e
    assert list(e.odd_part()) == [0, 1, 0, 1, 0, 1]


def test_order_mismatch_and_empty():
    with pytest.raises(ValueError):
        exp_linear(mpq(1), 2) + exp_linear(mpq(1), 3)
    with pytest.raises(ValueError):
        TruncSeries([])


def test_div_s_requires_surd_only():
    with pytest.raises(ValueError):
        exp_linear(S, 3).div_s()


_series = st.lists(rationals(), min_size=7, max_size=7).map(TruncSeries)
series = st.tuples(_series, _series, _series)


@settings(max_examples=200)
@given(series)
def test_series_mul_commutative_associative(fgh):
    f, g, h = fgh
    assert series_mul(f, g) == series_mul(g, f)
    assert series_mul(series_mul(f, g), h) == series_mul(f, series_mul(g, h))


@settings(max_examples=100)
@given(st.lists(rationals(), min_size=5, max_size=5), st.lists(rationals(), min_size=5, max_size=5))
def test_series_mul_with_ext_coefficients_commutes(u, v):
    f = TruncSeries(ext(Poly((a, 1))) for a in u)
    g = TruncSeries(SqrtExtElem(None, Poly((b,))) for b in v)
    assert f * g == g * f


def test_hyperbolic_pythagoras():
    q = 6 * X * S
    ch, sh = cosh_linear(q, 20), sinh_linear(q, 20)
    one = [1] + [0] * 20
    assert list(ch * ch - sh * sh) == one
