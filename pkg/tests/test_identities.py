import pytest
from gmpy2 import mpq

from balident import egf
from balident.exact import ALPHA, BETA, SQRT5
from balident.identities import (
    DOMAINS,
    REGISTRY,
    SERIES_IDS,
    ParameterError,
    UnknownIdentityError,
    describe,
    grid_points,
    series_check,
    verify,
    verify_grid,
)
from balident.polyring import S, X, Poly, SqrtExtElem
from balident.sequences import SequenceCache, binomial

SMALL = {"n": 8, "j": 3, "m": 3, "q": 4, "N": 4}


def test_registry_shape():
    assert len(REGISTRY) == 51
    for id, d in REGISTRY.items():
        assert d.id == id
        assert d.domain in DOMAINS
        assert d.modes[0] == "direct"
    assert set(SERIES_IDS) == {"thm1", "thm2", "thm3", "thm4-a", "thm4-b", "thm5-a", "thm5-b", "eq-gou1"}
    assert describe("thm1").anchor == "Eq. (5)"
    assert describe("thm1").domain == "polynomial-ext"


def test_verify_examples():
    r = verify("eq1-mod", {"n": 2})
    assert r.passed
    assert r.lhs == r.rhs == "216*x^3 - 12*x"

    r = verify("thm1", {"n": 0})
    assert r.passed and r.lhs == r.rhs == "0"

    r = verify("cor2", {"n": 1, "j": 1})
    assert r.passed and r.lhs == r.rhs == "1"


def test_verify_grid_examples():
    results = verify_grid("thm5-a", {"n": 10, "j": 4})
    assert len(results) == 40 and all(r.passed for r in results)
    assert verify_grid("thm5-a", {"n": [], "j": 4}) == []
    results = verify_grid("cor7", {"n": 8, "j": 3, "q": [2, 3, 4]})
    assert len(results) == 8 * 3 * 3 and all(r.passed for r in results)


def test_grid_order_is_lexicographic():
    pts = grid_points("cor7", {"n": 2, "j": 2, "q": [3, 2]})
    assert pts == [
        {"n": n, "j": j, "q": q} for n in (1, 2) for j in (1, 2) for q in (2, 3)
    ]
    assert grid_points("thm5-a", {"n": 5, "j": 2, "order": 7}, "series") == [
        {"order": 7, "j": 1},
        {"order": 7, "j": 2},
    ]


def test_parallel_grid_matches_sequential():
    seq = verify_grid("thm5-b", {"n": 12, "j": 3})
    par = verify_grid("thm5-b", {"n": 12, "j": 3}, workers=2)
    assert seq == par


def test_series_check_thm1_against_closed_form():
    r = series_check("thm1", 20)
    assert r.passed
    six_x = SqrtExtElem(6 * X)
    expected = six_x * (egf.egf_c2(20) - S * egf.egf_b2(20)).shift()
    assert r.rhs == "[" + "; ".join(str(c) for c in expected) + "]"


def test_series_check_thm2_against_exponential():
    r = series_check("thm2", 20)
    assert r.passed
    base = SqrtExtElem(18 * X**2 - 1, 6 * X * (2 * X - 1))
    expected = SqrtExtElem(6 * X) * egf.exp_linear(base, 20).shift()
    assert r.rhs == "[" + "; ".join(str(c) for c in expected) + "]"


@pytest.mark.parametrize("id", ["thm1", "thm2", "thm3", "thm4-a", "thm4-b", "eq-gou1"])
def test_series_order_zero(id):
    r = series_check(id, 0)
    assert r.passed and r.lhs == r.rhs == "[0]"


@pytest.mark.parametrize("id", SERIES_IDS)
def test_series_checks_pass(id):
    extra = {"j": 3} if "j" in REGISTRY[id].params else {}
    assert series_check(id, 25, **extra).passed


def test_errors():
    with pytest.raises(UnknownIdentityError) as err:
        verify("nosuch", {"n": 1})
    assert "thm1" in str(err.value)
    with pytest.raises(ParameterError):
        verify("thm1", {"n": 61})
    with pytest.raises(ParameterError):
        verify("thm1", {"n": 1, "j": 1})
    with pytest.raises(ParameterError):
        verify("cor7", {"n": 3, "j": 1, "q": 1})
    with pytest.raises(ParameterError):
        series_check("cor2", 5)
    with pytest.raises(ParameterError):
        series_check("thm5-a", 5)
    with pytest.raises(ParameterError):
        series_check("thm1", 41)


@pytest.mark.parametrize("id", list(REGISTRY))
def test_every_identity_small_grid(id):
    results = verify_grid(id, SMALL)
    assert results and all(r.passed for r in results), [r for r in results if not r.passed][:1]


# invariants ---------------------------------------------------------------


def _coefficientwise(id, order, cache, **extra):
    lhs, rhs = REGISTRY[id].series(cache, order, **extra)
    return [lhs[n] == rhs[n] for n in range(order + 1)]


@pytest.mark.parametrize("overrides", [{}, {2: mpq(7, 6)}, {4: mpq(29, 30)}])
@pytest.mark.parametrize("id", SERIES_IDS)
def test_dual_mode_agreement(id, overrides):
    order = 12
    extra = {"j": 2} if "j" in REGISTRY[id].params else {}
    cache = SequenceCache(overrides)
    series_flags = _coefficientwise(id, order, cache, **extra)
    direct_flags = [verify(id, {"n": n, **extra}, cache).passed for n in range(order + 1)]
    assert series_flags == direct_flags


@pytest.mark.parametrize("id", [i for i, d in REGISTRY.items() if "n" in d.params and d.minimum("n") >= 1])
def test_annihilation_at_zero(id):
    d = REGISTRY[id]
    params = {p: 0 if p == "n" else d.minimum(p) for p in d.params}
    lhs, rhs = d.direct(SequenceCache(), **params)
    assert lhs == 0 and rhs == 0


def _fails_somewhere(overrides):
    ranges = {"n": 10, "j": 2, "m": 2, "q": 3, "N": 2}
    for id in REGISTRY:
        if any(not r.passed for r in verify_grid(id, ranges, cache_overrides=overrides)):
            return id
    return None


@pytest.mark.parametrize("k", range(11))
def test_mutation_sensitivity(k):
    value = SequenceCache().bernoulli_number(k) + 1
    assert _fails_somewhere({k: value}) is not None


def test_b2_mutation_hits_main_theorems():
    bad = {2: mpq(7, 6)}
    for id in ("thm1", "thm2", "thm3", "thm4-a", "thm4-b"):
        assert not all(r.passed for r in verify_grid(id, {"n": 10}, cache_overrides=bad))
        assert not series_check(id, 10, SequenceCache(bad)).passed


def test_cor5_printed_sign_fails_for_odd_j():
    # the printed (-1)^(nj) differs from the verified (-1)^((n-1)j) exactly when j is odd
    c = SequenceCache()
    F, L = c.fibonacci, c.lucas
    for j in (1, 2, 3):
        for n in range(1, 6):
            lhs, _ = REGISTRY["cor5-a"].direct(c, n=n, j=j)
            printed = n * (-1) ** (n * j) * sum(
                binomial(n - 1, k) * (-1) ** (k * j) * F(j * (2 * k + 1)) for k in range(n)
            ) - mpq(n, 2) * F(j * (n - 1)) * L(j) ** n
            assert (lhs == printed) == (j % 2 == 0)


@pytest.mark.parametrize("id, base", [("cor8-a", "thm5-a"), ("cor8-b", "thm5-b")])
def test_cor8_is_derivative_of_thm5(id, base):
    c = SequenceCache()
    for n in range(1, 9):
        for j in (1, 2, 3):
            lhs, rhs = REGISTRY[base].direct(c, n=n, j=j)
            for m in range(0, n + 2):
                dl, dr = REGISTRY[id].direct(c, n=n, j=j, m=m)
                assert dl == lhs and dr == rhs
                lhs, rhs = lhs.derivative(), rhs.derivative()


def test_cor9_is_integral_of_thm5():
    c = SequenceCache()
    for n in range(0, 8):
        for j in (1, 2, 3):
            lhs, rhs = REGISTRY["thm5-a"].direct(c, n=n, j=j)
            if n == 0:
                lhs = rhs = Poly()
            for N in range(4):
                cl, cr = REGISTRY["cor9-a"].direct(c, n=n, j=j, N=N)
                assert SQRT5 * Poly.definite_integral(lhs, 0, N + 1) == cl
                assert SQRT5 * Poly.definite_integral(rhs, 0, N + 1) == cr


def test_cor9_grouping_of_proof_display():
    # sqrt5 F_j (N+1) + beta^j = sqrt5 F_j N + alpha^j
    c = SequenceCache()
    for j in range(1, 7):
        aj, bj = ALPHA**j, BETA**j
        for N in range(5):
            assert SQRT5 * c.fibonacci(j) * (N + 1) + bj == SQRT5 * c.fibonacci(j) * N + aj


def test_cor1_is_thm1_at_x_equal_one():
    c = SequenceCache()
    for n in range(1, 12):
        lhs, rhs = REGISTRY["thm1"].direct(c, n=n)
        cl, cr = REGISTRY["cor1"].direct(c, n=n)
        assert lhs.specialize(1) == cl
        assert rhs.specialize(1) == cr


def test_cor1_evaluates_in_q_sqrt8_consistently():
    # s^2 = 9 - 1 = 8 at x = 1; the formal surd part multiplies 2 sqrt2
    lhs, _ = REGISTRY["cor1"].direct(SequenceCache(), n=3)
    assert (lhs * lhs).plain(1) == lhs.plain(1) ** 2 + 8 * lhs.surd(1) ** 2


def test_goubi_difference_is_surd_multiple():
    c = SequenceCache()
    for n in range(1, 31):
        assert verify("gou-equiv", {"n": n}, c).passed
        fro, _ = REGISTRY["eq-fro1"].direct(c, n=n)
        gou, _ = REGISTRY["eq-gou1"].direct(c, n=n)
        assert gou - fro == -n * S * c.balancing_poly(n - 1)


def test_cor4_proof_odd_display_needs_odd_lucas_index():
    # the printed base L_2m in place of L_(2m+1) breaks the display for n >= 2
    c = SequenceCache()
    F, L, B = c.fibonacci, c.lucas, c.bernoulli_number
    for m in range(3):
        p = 2 * m + 1
        for n in range(2, 6):
            lhs, rhs = REGISTRY["cor4-proof-odd"].direct(c, n=n, m=m)
            printed = sum(
                binomial(n, 2 * k) * (4**k - 1) * B(2 * k) * (L(2 * m) ** 4 + 4 * L(2 * m) ** 2) ** k
                * L(2 * p * (n - 2 * k))
                for k in range(n // 2 + 1)
            )
            assert lhs == rhs
            assert printed != rhs
