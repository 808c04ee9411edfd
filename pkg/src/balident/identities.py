"""Registry of Bernoulli / balancing / Fibonacci identities and their checkers.

Every identity has a *direct* checker that evaluates both sides by finite
summation for one parameter assignment.  Identities proved by generating
functions also have a *series* checker that multiplies truncated EGFs and
compares every coefficient up to the requested order at once.

Terms of the form ``n * X_{n-1}`` are defined as zero when ``n == 0``
without evaluating ``X_{-1}``; empty sums are zero.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from gmpy2 import mpq

from . import egf
from .egf import TruncSeries
from .exact import ALPHA, BETA, I, SQRT5, Q5, QI
from .polyring import MODULUS, Poly, S, SqrtExtElem, X
from .sequences import SequenceCache, binomial, falling_factorial

__all__ = [
    "DOMAINS",
    "HARD_CAPS",
    "IdentityDescriptor",
    "UnknownIdentityError",
    "ParameterError",
    "VerificationResult",
    "REGISTRY",
    "SERIES_IDS",
    "describe",
    "registry_table",
    "render",
    "series_check",
    "verify",
    "verify_grid",
    "grid_points",
]

DOMAINS = (
    "polynomial-ext",
    "polynomial-q5",
    "numeric-q5",
    "numeric-qi",
    "numeric-rational",
)

HARD_CAPS = {"n": 60, "j": 12, "m": 12, "q": 12, "N": 40, "order": 40}


class UnknownIdentityError(KeyError):
    pass


class ParameterError(ValueError):
    pass


@dataclass(frozen=True)
class IdentityDescriptor:
    id: str
    anchor: str
    domain: str
    params: tuple[str, ...]
    formula: str
    direct: Callable = field(repr=False, compare=False)
    series: Callable | None = field(default=None, repr=False, compare=False)
    minimums: Mapping[str, int] = field(default_factory=dict)

    def minimum(self, name: str) -> int:
        return self.minimums.get(name, _DEFAULT_MIN[name])

    @property
    def modes(self) -> tuple[str, ...]:
        return ("direct", "series") if self.series else ("direct",)

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "domain": self.domain,
            "params": {p: self.minimum(p) for p in self.params},
            "modes": list(self.modes),
            "formula": self.formula,
        }


_DEFAULT_MIN = {"n": 1, "j": 1, "m": 0, "q": 2, "N": 0}


@dataclass(frozen=True)
class VerificationResult:
    id: str
    params: dict
    mode: str
    passed: bool
    lhs: str
    rhs: str

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "params": dict(self.params),
            "mode": self.mode,
            "pass": self.passed,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


REGISTRY: dict[str, IdentityDescriptor] = {}


def _register(id, anchor, domain, params, formula, minimums=None):
    def deco(fn):
        if id in REGISTRY:
            raise ValueError(f"duplicate identity id {id!r}")
        REGISTRY[id] = IdentityDescriptor(
            id, anchor, domain, tuple(params), formula, fn, None, dict(minimums or {})
        )
        return fn

    return deco


def _series_for(id):
    def deco(fn):
        d = REGISTRY[id]
        REGISTRY[id] = IdentityDescriptor(
            d.id, d.anchor, d.domain, d.params, d.formula, d.direct, fn, d.minimums
        )
        return fn

    return deco


def render(value) -> str:
    if isinstance(value, TruncSeries):
        return "[" + "; ".join(str(c) for c in value) + "]"
    return str(value)


# --------------------------------------------------------------------------
# helpers

ZERO = mpq(0)
HALF = mpq(1, 2)


def _times_n(n: int, thunk: Callable[[], object]):
    """``n * thunk()``, zero for ``n == 0`` without calling ``thunk``."""
    return ZERO if n == 0 else n * thunk()


def _powers(base, top: int) -> list:
    out = [base**0]
    for _ in range(top):
        out.append(out[-1] * base)
    return out


def _sum(terms: Iterable, start=ZERO):
    acc = start
    for t in terms:
        acc = acc + t
    return acc


def _ext(p) -> SqrtExtElem:
    return SqrtExtElem(p)


def _surd(p) -> SqrtExtElem:
    return SqrtExtElem(None, p)


EXT_ZERO = SqrtExtElem()
SIX_X = 6 * X
W_THM1 = _surd(12 * X)  # 12 x s
T_EVEN = 144 * X * X * MODULUS  # (12 x s)^2 reduced
A_POLY = 18 * X * X - 1


def _r5(c) -> object:
    """sqrt(5) * c in Q(sqrt 5)."""
    return SQRT5 * c


# --------------------------------------------------------------------------
# introductory identities


@_register(
    "eq-fro1",
    "Eq. (3)",
    "polynomial-ext",
    ["n"],
    "sum_{k = n mod 2} C(n,k) B*_k(x) (2s)^(n-k) B_(n-k) = n C_(n-1)(x)",
)
def _eq_fro1(c: SequenceCache, n: int):
    pw = _powers(2 * S, n)
    lhs = _sum(
        binomial(n, k) * c.bernoulli_number(n - k) * (pw[n - k] * c.balancing_poly(k))
        for k in range(n % 2, n + 1, 2)
    )
    rhs = _times_n(n, lambda: _ext(c.lucas_balancing_poly(n - 1)))
    return lhs, rhs


def _gou1_lhs(c: SequenceCache, n: int):
    pw = _powers(2 * S, n)
    return _sum(
        binomial(n, k) * c.bernoulli_number(n - k) * (pw[n - k] * c.balancing_poly(k))
        for k in range(n + 1)
    )


@_register(
    "eq-gou1",
    "Eq. (4)",
    "polynomial-ext",
    ["n"],
    "sum_k C(n,k) B*_k(x) (2s)^(n-k) B_(n-k) = n (C_(n-1)(x) - s B*_(n-1)(x))",
)
def _eq_gou1(c: SequenceCache, n: int):
    rhs = _times_n(n, lambda: c.lucas_balancing_poly(n - 1) - S * c.balancing_poly(n - 1))
    return _gou1_lhs(c, n), rhs


@_series_for("eq-gou1")
def _eq_gou1_series(c: SequenceCache, order: int):
    b = egf.egf_b(order)
    lhs = b * egf.egf_bernoulli(c, "zero", 2 * S, order)
    rhs = (egf.egf_c(order) - S * b).shift()
    return lhs, rhs


@_register(
    "gou-equiv",
    "Eqs. (3)-(4) remark",
    "polynomial-ext",
    ["n"],
    "LHS(Eq. 4) - LHS(Eq. 3) = -n s B*_(n-1)(x)",
)
def _gou_equiv(c: SequenceCache, n: int):
    lhs = _gou1_lhs(c, n) - _eq_fro1(c, n)[0]
    rhs = _times_n(n, lambda: -(S * c.balancing_poly(n - 1)))
    return lhs, rhs


# --------------------------------------------------------------------------
# Lemma 1: closed-form EGFs against the recurrences


def _lemma1(builder, family, index):
    def check(c: SequenceCache, n: int):
        series = builder(n)
        return series[n], family(c)(index(n))

    return check


for _name, _builder, _family, _index, _what in [
    ("b1", egf.egf_b1, lambda c: c.balancing_poly, lambda n: 2 * n + 1, "B*_(2n+1)(x)"),
    ("b2", egf.egf_b2, lambda c: c.balancing_poly, lambda n: 2 * n, "B*_(2n)(x)"),
    ("c1", egf.egf_c1, lambda c: c.lucas_balancing_poly, lambda n: 2 * n + 1, "C_(2n+1)(x)"),
    ("c2", egf.egf_c2, lambda c: c.lucas_balancing_poly, lambda n: 2 * n, "C_(2n)(x)"),
]:
    _register(
        f"lemma1-{_name}",
        "Lemma 1",
        "polynomial-ext",
        ["n"],
        f"n-th coefficient of the closed-form EGF {_name}(x,z) = {_what}",
        {"n": 0},
    )(_lemma1(_builder, _family, _index))


# --------------------------------------------------------------------------
# Theorem 1 and consequences


def _thm1_sides(c: SequenceCache, n: int, w):
    pw = _powers(w, n)
    lhs = _sum(
        binomial(n, k) * c.bernoulli_number(n - k) * (pw[n - k] * c.balancing_poly(2 * k))
        for k in range(n + 1)
    )
    return lhs


@_register(
    "thm1",
    "Eq. (5)",
    "polynomial-ext",
    ["n"],
    "sum_k C(n,k) (12xs)^(n-k) B_(n-k) B*_(2k)(x) = 6xn (C_(2n-2)(x) - s B*_(2n-2)(x))",
)
def _thm1(c: SequenceCache, n: int):
    lhs = _thm1_sides(c, n, W_THM1)
    rhs = _times_n(
        n,
        lambda: SIX_X * (c.lucas_balancing_poly(2 * n - 2) - S * c.balancing_poly(2 * n - 2)),
    )
    return lhs, rhs


@_series_for("thm1")
def _thm1_series(c: SequenceCache, order: int):
    b2 = egf.egf_b2(order)
    lhs = b2 * egf.egf_bernoulli(c, "zero", W_THM1, order)
    rhs = SIX_X * (egf.egf_c2(order) - S * b2).shift()
    return lhs, rhs


@_register(
    "cor1",
    "Corollary 1",
    "polynomial-ext",
    ["n"],
    "sum_k C(n,k) (24 sqrt2)^(n-k) B*_(2k) B_(n-k) = 6n (C_(2n-2) - 2 sqrt2 B*_(2n-2)), s = 2 sqrt2 at x = 1",
)
def _cor1(c: SequenceCache, n: int):
    # 24 sqrt2 = 12 * s(1); compute in the ext ring then set x = 1 component-wise
    lhs = _thm1_sides(c, n, _surd(Poly.constant(12))).specialize(1)
    rhs = _times_n(
        n,
        lambda: 6 * (c.lucas_balancing_number(2 * n - 2) - S * c.balancing_number(2 * n - 2)),
    )
    if not isinstance(rhs, SqrtExtElem):
        rhs = _ext(rhs)
    return lhs, rhs.specialize(1)


@_register(
    "cor2",
    "Eq. (6)",
    "numeric-q5",
    ["n", "j"],
    "sum_k C(n,k) (sqrt5 F_2j)^(n-k) F_2kj B_(n-k) = n/2 F_2j (L_2j(n-1) - sqrt5 F_2j(n-1))",
)
def _cor2(c: SequenceCache, n: int, j: int):
    F, L = c.fibonacci, c.lucas
    pw = _powers(_r5(F(2 * j)), n)
    lhs = _sum(
        binomial(n, k) * F(2 * k * j) * c.bernoulli_number(n - k) * pw[n - k]
        for k in range(n + 1)
    )
    rhs = _times_n(
        n, lambda: HALF * F(2 * j) * (L(2 * j * (n - 1)) - _r5(F(2 * j * (n - 1))))
    )
    return lhs, rhs


def _even_sum(c: SequenceCache, n: int, weight, tail):
    """sum_{k <= n/2} C(n, 2k) weight(k) B_2k tail(n - 2k)."""
    return _sum(
        binomial(n, 2 * k) * c.bernoulli_number(2 * k) * weight(k) * tail(n - 2 * k)
        for k in range(n // 2 + 1)
    )


@_register(
    "eq1-mod",
    "Eq. (7)",
    "polynomial-q5",
    ["n"],
    "sum_k C(n,2k) (144x^2(9x^2-1))^k B_2k B*_(2(n-2k))(x) = 6nx C_(2(n-1))(x)",
)
def _eq1_mod(c: SequenceCache, n: int):
    tp = _powers(T_EVEN, n // 2)
    lhs = _even_sum(c, n, lambda k: tp[k], lambda r: c.balancing_poly(2 * r))
    rhs = _times_n(n, lambda: SIX_X * c.lucas_balancing_poly(2 * (n - 1)))
    return lhs, rhs


# --------------------------------------------------------------------------
# Theorem 2 and the x = 1/2, x = -1/2 consequences

THM2_BASE = SqrtExtElem(A_POLY, SIX_X * (2 * X - 1))


@_register(
    "thm2",
    "Eq. (8)",
    "polynomial-ext",
    ["n"],
    "sum_k C(n,k) (12xs)^(n-k) B*_(2k)(x) B_(n-k)(x) = 6nx (18x^2 - 1 + 6x(2x-1) s)^(n-1)",
)
def _thm2(c: SequenceCache, n: int):
    pw = _powers(W_THM1, n)
    lhs = _sum(
        binomial(n, k) * (pw[n - k] * (c.bernoulli_poly(n - k) * c.balancing_poly(2 * k)))
        for k in range(n + 1)
    )
    rhs = _times_n(n, lambda: SIX_X * THM2_BASE ** (n - 1))
    return lhs, rhs


@_series_for("thm2")
def _thm2_series(c: SequenceCache, order: int):
    lhs = egf.egf_b2(order) * egf.egf_bernoulli(c, "x", W_THM1, order)
    rhs = SIX_X * egf.exp_linear(THM2_BASE, order).shift()
    return lhs, rhs


def _two_pow(e: int) -> mpq:
    return mpq(2) ** e


@_register(
    "cor3",
    "Eq. (9)",
    "numeric-q5",
    ["n"],
    "sum_k C(n,k) (3 sqrt5)^(n-k) (2^(1-(n-k)) - 1) F_4k B_(n-k) = 3n (7/2)^(n-1)",
)
def _cor3(c: SequenceCache, n: int):
    pw = _powers(_r5(3), n)
    lhs = _sum(
        binomial(n, k) * pw[n - k] * (_two_pow(1 - (n - k)) - 1) * c.fibonacci(4 * k)
        * c.bernoulli_number(n - k)
        for k in range(n + 1)
    )
    rhs = _times_n(n, lambda: 3 * mpq(7, 2) ** (n - 1))
    return lhs, rhs


@_register(
    "id-30",
    "Eq. (10)",
    "numeric-q5",
    ["n"],
    "sum_k C(n,k) sqrt5^(n-k) (2^(1-(n-k)) - 1) F_2k B_(n-k) = n (3/2)^(n-1)",
)
def _id30(c: SequenceCache, n: int):
    pw = _powers(SQRT5, n)
    lhs = _sum(
        binomial(n, k) * pw[n - k] * (_two_pow(1 - (n - k)) - 1) * c.fibonacci(2 * k)
        * c.bernoulli_number(n - k)
        for k in range(n + 1)
    )
    rhs = _times_n(n, lambda: mpq(3, 2) ** (n - 1))
    return lhs, rhs


GOLD_7_6 = Q5(mpq(7, 2), 3)  # (7 + 6 sqrt5) / 2


@_register(
    "rem-cor3-a",
    "remark after Corollary 3 (x = -1/2)",
    "numeric-q5",
    ["n"],
    "sum_k C(n,k) (-3 sqrt5)^(n-k) F_4k ((2^(1-m) - 1) B_m + m (-1)^m 2^(1-m)) = 3n ((7 + 6 sqrt5)/2)^(n-1), m = n-k",
)
def _rem_cor3_a(c: SequenceCache, n: int):
    pw = _powers(_r5(-3), n)

    def term(k):
        m = n - k
        inner = (_two_pow(1 - m) - 1) * c.bernoulli_number(m) + m * (-1) ** m * _two_pow(1 - m)
        return binomial(n, k) * pw[m] * c.fibonacci(4 * k) * inner

    lhs = _sum(term(k) for k in range(n + 1))
    rhs = _times_n(n, lambda: 3 * GOLD_7_6 ** (n - 1))
    return lhs, rhs


@_register(
    "rem-cor3-b",
    "remark after Corollary 3",
    "numeric-q5",
    ["n"],
    "sum_k C(n,k) (n-k) (3 sqrt5)^(n-k) 2^(1-(n-k)) F_4k = 3n (((7 + 6 sqrt5)/2)^(n-1) - (7/2)^(n-1))",
)
def _rem_cor3_b(c: SequenceCache, n: int):
    pw = _powers(_r5(3), n)
    lhs = _sum(
        binomial(n, k) * (n - k) * pw[n - k] * _two_pow(1 - (n - k)) * c.fibonacci(4 * k)
        for k in range(n + 1)
    )
    rhs = _times_n(n, lambda: 3 * (GOLD_7_6 ** (n - 1) - mpq(7, 2) ** (n - 1)))
    return lhs, rhs


@_register(
    "rem-cor3-c",
    "remark after Corollary 3",
    "numeric-q5",
    ["n"],
    "sum_k C(n,k) k (3 sqrt5/2)^k F_4(n-k) = 3n/2^n ((7 + 6 sqrt5)^(n-1) - 7^(n-1))",
)
def _rem_cor3_c(c: SequenceCache, n: int):
    pw = _powers(_r5(mpq(3, 2)), n)
    lhs = _sum(binomial(n, k) * k * pw[k] * c.fibonacci(4 * (n - k)) for k in range(n + 1))
    rhs = _times_n(
        n, lambda: 3 * _two_pow(-n) * (Q5(7, 6) ** (n - 1) - mpq(7) ** (n - 1))
    )
    return lhs, rhs


# --------------------------------------------------------------------------
# Theorem 3 and its remarks


def _thm3_lhs(c: SequenceCache, n: int):
    tp = _powers(T_EVEN, n // 2)
    return _even_sum(
        c, n, lambda k: (4**k - 1) * tp[k], lambda r: c.lucas_balancing_poly(2 * r)
    )


@_register(
    "thm3",
    "Eq. (11)",
    "polynomial-q5",
    ["n"],
    "sum_k C(n,2k) (4^k - 1) (144x^2(9x^2-1))^k B_2k C_(2(n-2k))(x) = 6nx (9x^2-1) B*_(2(n-1))(x)",
)
def _thm3(c: SequenceCache, n: int):
    rhs = _times_n(n, lambda: SIX_X * MODULUS * c.balancing_poly(2 * (n - 1)))
    return _thm3_lhs(c, n), rhs


@_series_for("thm3")
def _thm3_series(c: SequenceCache, order: int):
    # even part of H(0, 24xsz) - H(0, 12xsz) carries (4^k - 1)(12xs)^(2k) B_2k
    bern = (
        egf.egf_bernoulli(c, "zero", 2 * W_THM1, order)
        - egf.egf_bernoulli(c, "zero", W_THM1, order)
    ).even_part()
    lhs = egf.egf_c2(order) * bern
    rhs = (SIX_X * MODULUS) * egf.egf_b2(order).shift()
    return lhs, rhs


@_register(
    "rem-thm3-a",
    "remark after Theorem 3 (b2 with c1)",
    "polynomial-q5",
    ["n"],
    "sum_k C(n,2k) (144x^2(9x^2-1))^k B_2k B*_(2(n-2k))(x) = 2n (C_(2n-1)(x) - (9x^2-1) B*_(2(n-1))(x))",
)
def _rem_thm3_a(c: SequenceCache, n: int):
    lhs = _eq1_mod(c, n)[0]
    rhs = _times_n(
        n,
        lambda: 2 * (c.lucas_balancing_poly(2 * n - 1) - MODULUS * c.balancing_poly(2 * n - 2)),
    )
    return lhs, rhs


@_register(
    "rem-thm3-a-reduce",
    "remark after Theorem 3 (reduction to Eq. (7))",
    "polynomial-q5",
    ["n"],
    "2n (C_(2n-1)(x) - (9x^2-1) B*_(2(n-1))(x)) = 6nx C_(2(n-1))(x)",
)
def _rem_thm3_a_reduce(c: SequenceCache, n: int):
    lhs = _rem_thm3_a(c, n)[1]
    rhs = _eq1_mod(c, n)[1]
    return lhs, rhs


@_register(
    "rem-thm3-b",
    "remark after Theorem 3 (b1 with c2)",
    "polynomial-q5",
    ["n"],
    "sum_k C(n,2k) (4^k - 1) (144x^2(9x^2-1))^k B_2k C_(2(n-2k))(x) = 2n (9x^2-1) (B*_(2n-1)(x) - C_(2(n-1))(x))",
)
def _rem_thm3_b(c: SequenceCache, n: int):
    rhs = _times_n(
        n,
        lambda: 2 * MODULUS * (c.balancing_poly(2 * n - 1) - c.lucas_balancing_poly(2 * n - 2)),
    )
    return _thm3_lhs(c, n), rhs


@_register(
    "rem-thm3-b-reduce",
    "remark after Theorem 3 (reduction to Eq. (11))",
    "polynomial-q5",
    ["n"],
    "2n (9x^2-1) (B*_(2n-1)(x) - C_(2(n-1))(x)) = 6nx (9x^2-1) B*_(2(n-1))(x)",
)
def _rem_thm3_b_reduce(c: SequenceCache, n: int):
    return _rem_thm3_b(c, n)[1], _thm3(c, n)[1]


# --------------------------------------------------------------------------
# Corollary 4 family (rational)


@_register(
    "cor4",
    "Corollary 4",
    "numeric-rational",
    ["n", "j"],
    "sum_k C(n,2k) (20^k - 5^k) F_2j^(2k) B_2k L_2j(n-2k) = 5n/2 F_2j F_2j(n-1)",
)
def _cor4(c: SequenceCache, n: int, j: int):
    F, L = c.fibonacci, c.lucas
    lhs = _even_sum(c, n, lambda k: (20**k - 5**k) * F(2 * j) ** (2 * k), lambda r: L(2 * j * r))
    rhs = _times_n(n, lambda: mpq(5, 2) * F(2 * j) * F(2 * j * (n - 1)))
    return lhs, rhs


@_register(
    "cor4-proof-even",
    "Corollary 4 proof (x = L_2m/6)",
    "numeric-rational",
    ["n", "m"],
    "sum_k C(n,2k) (4^k - 1) B_2k (L_2m^4 - 4 L_2m^2)^k L_4m(n-2k) = n/2 L_2m/F_2m (L_2m^2 - 4) F_4m(n-1)",
    {"m": 1},
)
def _cor4_proof_even(c: SequenceCache, n: int, m: int):
    F, L = c.fibonacci, c.lucas
    lm = L(2 * m)
    lhs = _even_sum(
        c, n, lambda k: (4**k - 1) * (lm**4 - 4 * lm**2) ** k, lambda r: L(4 * m * r)
    )
    rhs = _times_n(
        n, lambda: HALF * mpq(lm, F(2 * m)) * (lm**2 - 4) * F(4 * m * (n - 1))
    )
    return lhs, rhs


@_register(
    "cor4-proof-odd",
    "Corollary 4 proof (x = i L_(2m+1)/6)",
    "numeric-rational",
    ["n", "m"],
    "sum_k C(n,2k) (4^k - 1) B_2k (L^4 + 4 L^2)^k L_2(2m+1)(n-2k) = n/2 L/F (L^2 + 4) F_2(2m+1)(n-1), L = L_(2m+1), F = F_(2m+1)",
)
def _cor4_proof_odd(c: SequenceCache, n: int, m: int):
    F, L = c.fibonacci, c.lucas
    p = 2 * m + 1
    lp = L(p)
    lhs = _even_sum(
        c, n, lambda k: (4**k - 1) * (lp**4 + 4 * lp**2) ** k, lambda r: L(2 * p * r)
    )
    rhs = _times_n(n, lambda: HALF * mpq(lp, F(p)) * (lp**2 + 4) * F(2 * p * (n - 1)))
    return lhs, rhs


@_register(
    "cor4-j1",
    "display after Corollary 4 (j = 1)",
    "numeric-rational",
    ["n"],
    "sum_k C(n,2k) (4^k - 1) 5^k B_2k L_2(n-2k) = 5n/2 F_2(n-1)",
)
def _cor4_j1(c: SequenceCache, n: int):
    lhs = _even_sum(c, n, lambda k: (4**k - 1) * 5**k, lambda r: c.lucas(2 * r))
    rhs = _times_n(n, lambda: mpq(5, 2) * c.fibonacci(2 * (n - 1)))
    return lhs, rhs


@_register(
    "cor4-j2",
    "display after Corollary 4 (j = 2)",
    "numeric-rational",
    ["n"],
    "sum_k C(n,2k) (4^k - 1) 45^k B_2k L_4(n-2k) = 15n/2 F_4(n-1)",
)
def _cor4_j2(c: SequenceCache, n: int):
    lhs = _even_sum(c, n, lambda k: (4**k - 1) * 45**k, lambda r: c.lucas(4 * r))
    rhs = _times_n(n, lambda: mpq(15, 2) * c.fibonacci(4 * (n - 1)))
    return lhs, rhs


# --------------------------------------------------------------------------
# Theorem 4


def _six_x_prefactor(n: int, inner):
    """(6x)^(n-1) * inner; at n == 0 the inner sum must vanish and the product is 0."""
    if n == 0:
        if inner != 0:
            raise ArithmeticError("(6x)^(-1) applied to a nonzero sum")
        return ZERO
    return SIX_X ** (n - 1) * inner


@_register(
    "thm4-a",
    "Eq. (12)",
    "polynomial-q5",
    ["n"],
    "(6x)^(n-1) sum_k C(n,2k) (36x^2-4)^k B_2k B*_(n-2k)(x) = n (sum_k C(n-1,k) B*_(2k+1)(x) - (6x)^n/2 B*_(n-1)(x))",
)
def _thm4_a(c: SequenceCache, n: int):
    t = _powers(36 * X * X - 4, n // 2)
    inner = _even_sum(c, n, lambda k: t[k], c.balancing_poly)
    rhs = _times_n(
        n,
        lambda: _sum(binomial(n - 1, k) * c.balancing_poly(2 * k + 1) for k in range(n))
        - HALF * SIX_X**n * c.balancing_poly(n - 1),
    )
    return _six_x_prefactor(n, inner), rhs


@_series_for("thm4-a")
def _thm4_a_series(c: SequenceCache, order: int):
    six_x = _ext(SIX_X)
    scaled = egf.egf_b(order).scale(six_x)
    bern = egf.egf_bernoulli(c, "zero", W_THM1, order).even_part()
    lhs = scaled * bern
    one = egf.exp_linear(_ext(Poly.constant(1)), order)
    rhs = SIX_X * (one * egf.egf_b1(order)).shift() - (3 * X) * (SIX_X * scaled.shift())
    return lhs, rhs


@_register(
    "thm4-b",
    "Eq. (13)",
    "polynomial-q5",
    ["n"],
    "(6x)^(n-1) sum_k C(n,2k) (4^k - 1) (36x^2-4)^k B_2k C_(n-2k)(x) = n (sum_k C(n-1,k) C_(2k+1)(x) - (6x)^n/2 C_(n-1)(x))",
)
def _thm4_b(c: SequenceCache, n: int):
    t = _powers(36 * X * X - 4, n // 2)
    inner = _even_sum(c, n, lambda k: (4**k - 1) * t[k], c.lucas_balancing_poly)
    rhs = _times_n(
        n,
        lambda: _sum(binomial(n - 1, k) * c.lucas_balancing_poly(2 * k + 1) for k in range(n))
        - HALF * SIX_X**n * c.lucas_balancing_poly(n - 1),
    )
    return _six_x_prefactor(n, inner), rhs


@_series_for("thm4-b")
def _thm4_b_series(c: SequenceCache, order: int):
    six_x = _ext(SIX_X)
    scaled = egf.egf_c(order).scale(six_x)
    bern = (
        egf.egf_bernoulli(c, "zero", 2 * W_THM1, order)
        - egf.egf_bernoulli(c, "zero", W_THM1, order)
    ).even_part()
    lhs = scaled * bern
    one = egf.exp_linear(_ext(Poly.constant(1)), order)
    rhs = SIX_X * (one * egf.egf_c1(order)).shift() - (3 * X) * (SIX_X * scaled.shift())
    return lhs, rhs


def _cor5(c: SequenceCache, n: int, j: int, lucas_side: bool):
    F, L = c.fibonacci, c.lucas
    G = L if lucas_side else F
    weight = (lambda k: (4**k - 1) * (5 * F(j) ** 2) ** k) if lucas_side else (
        lambda k: (5 * F(j) ** 2) ** k
    )
    lj = mpq(L(j))
    lhs = lj ** (n - 1) * _even_sum(c, n, weight, lambda r: G(j * r))
    # sign is (-1)^((n-1)j); the printed (-1)^(nj) fails for odd j
    rhs = _times_n(
        n,
        lambda: (-1) ** ((n - 1) * j)
        * _sum(binomial(n - 1, k) * (-1) ** (k * j) * G(j * (2 * k + 1)) for k in range(n))
        - HALF * G(j * (n - 1)) * lj**n,
    )
    return lhs, rhs


@_register(
    "cor5-a",
    "Corollary 5 (first identity)",
    "numeric-q5",
    ["n", "j"],
    "L_j^(n-1) sum_k C(n,2k) (5F_j^2)^k F_j(n-2k) B_2k = (-1)^((n-1)j) n sum_k C(n-1,k) (-1)^(kj) F_j(2k+1) - n/2 F_j(n-1) L_j^n",
)
def _cor5_a(c: SequenceCache, n: int, j: int):
    return _cor5(c, n, j, lucas_side=False)


@_register(
    "cor5-b",
    "Corollary 5 (second identity)",
    "numeric-q5",
    ["n", "j"],
    "L_j^(n-1) sum_k C(n,2k) (4^k - 1) (5F_j^2)^k L_j(n-2k) B_2k = (-1)^((n-1)j) n sum_k C(n-1,k) (-1)^(kj) L_j(2k+1) - n/2 L_j(n-1) L_j^n",
)
def _cor5_b(c: SequenceCache, n: int, j: int):
    return _cor5(c, n, j, lucas_side=True)


# --------------------------------------------------------------------------
# Theorem 5: Fibonacci numbers in arithmetic progression


def _alpha_beta_j(c: SequenceCache, j: int):
    """alpha^j and beta^j via alpha^j = alpha F_j + F_(j-1)."""
    F = c.fibonacci
    return ALPHA * F(j) + F(j - 1), BETA * F(j) + F(j - 1)


def _thm5_lhs(c: SequenceCache, n: int, j: int, sign: int, bern, m: int = 0):
    """sum_{k<=n-m} C(n,k) F_jk (sign sqrt5 F_j)^(n-k) (n-k)_m bern(n-m-k)."""
    F = c.fibonacci
    pw = _powers(_r5(sign * F(j)), n)
    return _sum(
        binomial(n, k) * F(j * k) * falling_factorial(n - k, m) * pw[n - k] * bern(n - m - k)
        for k in range(n - m + 1)
    )


def _thm5_base(c: SequenceCache, j: int, sign: int) -> Poly:
    """(sqrt5 x + beta) F_j + F_(j-1) for sign=+1, (alpha - sqrt5 x) F_j + F_(j-1) for -1."""
    F = c.fibonacci
    const = (BETA if sign > 0 else ALPHA) * F(j) + F(j - 1)
    return Poly((const, _r5(sign * F(j))))


def _thm5(c: SequenceCache, n: int, j: int, sign: int):
    lhs = _thm5_lhs(c, n, j, sign, c.bernoulli_poly)
    rhs = _times_n(n, lambda: c.fibonacci(j) * _thm5_base(c, j, sign) ** (n - 1))
    return lhs, rhs


def _thm5_series(c: SequenceCache, order: int, j: int, sign: int):
    F = c.fibonacci
    aj, bj = _alpha_beta_j(c, j)
    fib = egf.egf_fibonacci_ap(aj, bj, SQRT5, order)
    lhs = fib * egf.egf_bernoulli(c, "x", _r5(sign * F(j)), order)
    rhs = F(j) * egf.exp_linear(_thm5_base(c, j, sign), order).shift()
    return lhs, rhs


@_register(
    "thm5-a",
    "Eq. (14)",
    "polynomial-q5",
    ["n", "j"],
    "sum_k C(n,k) F_jk (sqrt5 F_j)^(n-k) B_(n-k)(x) = n F_j ((sqrt5 x + beta) F_j + F_(j-1))^(n-1)",
)
def _thm5_a(c: SequenceCache, n: int, j: int):
    return _thm5(c, n, j, +1)


@_series_for("thm5-a")
def _thm5_a_series(c: SequenceCache, order: int, j: int):
    return _thm5_series(c, order, j, +1)


@_register(
    "thm5-b",
    "Eq. (15)",
    "polynomial-q5",
    ["n", "j"],
    "sum_k C(n,k) F_jk (-sqrt5 F_j)^(n-k) B_(n-k)(x) = n F_j ((alpha - sqrt5 x) F_j + F_(j-1))^(n-1)",
)
def _thm5_b(c: SequenceCache, n: int, j: int):
    return _thm5(c, n, j, -1)


@_series_for("thm5-b")
def _thm5_b_series(c: SequenceCache, order: int, j: int):
    return _thm5_series(c, order, j, -1)


def _thm5_x0(c: SequenceCache, n: int, j: int, sign: int):
    lhs = _thm5_lhs(c, n, j, sign, c.bernoulli_number)
    root = BETA if sign > 0 else ALPHA
    rhs = _times_n(n, lambda: c.fibonacci(j) * root ** (j * (n - 1)))
    return lhs, rhs


def _thm5_x0_lucas(c: SequenceCache, n: int, j: int, sign: int):
    F, L = c.fibonacci, c.lucas
    lhs = _thm5_x0(c, n, j, sign)[1]
    rhs = _times_n(
        n, lambda: HALF * F(j) * (L(j * (n - 1)) - sign * _r5(F(j * (n - 1))))
    )
    return lhs, rhs


@_register(
    "thm5-x0-a",
    "display after Theorem 5 (x = 0)",
    "numeric-q5",
    ["n", "j"],
    "sum_k C(n,k) (sqrt5 F_j)^(n-k) F_jk B_(n-k) = n F_j beta^(j(n-1))",
)
def _thm5_x0_a(c: SequenceCache, n: int, j: int):
    return _thm5_x0(c, n, j, +1)


@_register(
    "thm5-x0-a-lucas",
    "display after Theorem 5 (x = 0)",
    "numeric-q5",
    ["n", "j"],
    "n F_j beta^(j(n-1)) = n/2 F_j (L_j(n-1) - sqrt5 F_j(n-1))",
)
def _thm5_x0_a_lucas(c: SequenceCache, n: int, j: int):
    return _thm5_x0_lucas(c, n, j, +1)


@_register(
    "thm5-x0-b",
    "display after Theorem 5 (x = 0)",
    "numeric-q5",
    ["n", "j"],
    "sum_k C(n,k) (-sqrt5 F_j)^(n-k) F_jk B_(n-k) = n F_j alpha^(j(n-1))",
)
def _thm5_x0_b(c: SequenceCache, n: int, j: int):
    return _thm5_x0(c, n, j, -1)


@_register(
    "thm5-x0-b-lucas",
    "display after Theorem 5 (x = 0)",
    "numeric-q5",
    ["n", "j"],
    "n F_j alpha^(j(n-1)) = n/2 F_j (L_j(n-1) + sqrt5 F_j(n-1))",
)
def _thm5_x0_b_lucas(c: SequenceCache, n: int, j: int):
    return _thm5_x0_lucas(c, n, j, -1)


@_register(
    "thm5-comb",
    "display after Theorem 5 (combination)",
    "numeric-q5",
    ["n", "j"],
    "sum_k C(n,k) (sqrt5 F_j)^(n-k) (1 + (-1)^(n-k)) F_jk B_(n-k) = n F_j L_j(n-1)",
)
def _thm5_comb(c: SequenceCache, n: int, j: int):
    F = c.fibonacci
    pw = _powers(_r5(F(j)), n)
    lhs = _sum(
        binomial(n, k) * pw[n - k] * (1 + (-1) ** (n - k)) * F(j * k) * c.bernoulli_number(n - k)
        for k in range(n + 1)
    )
    rhs = _times_n(n, lambda: F(j) * c.lucas(j * (n - 1)))
    return lhs, rhs


def _cor7_lhs(c: SequenceCache, n: int, j: int, q: int, scale=None):
    F = c.fibonacci
    pw = _powers(scale if scale is not None else _r5(F(j)), n)
    return _sum(
        binomial(n, k) * pw[n - k] * (mpq(q) ** (1 - (n - k)) - 1) * F(j * k)
        * c.bernoulli_number(n - k)
        for k in range(n + 1)
    )


@_register(
    "cor6",
    "Eq. (16)",
    "numeric-q5",
    ["n", "j"],
    "sum_k C(n,k) (sqrt5 F_j)^(n-k) (2^(1-(n-k)) - 1) F_jk B_(n-k) = n 2^(1-n) F_j L_j^(n-1)",
)
def _cor6(c: SequenceCache, n: int, j: int):
    lhs = _cor7_lhs(c, n, j, 2)
    rhs = _times_n(n, lambda: _two_pow(1 - n) * c.fibonacci(j) * mpq(c.lucas(j)) ** (n - 1))
    return lhs, rhs


@_register(
    "cor6-j3",
    "display after Corollary 6 (j = 3)",
    "numeric-q5",
    ["n"],
    "sum_k C(n,k) (2 sqrt5)^(n-k) (2^(1-(n-k)) - 1) F_3k B_(n-k) = n 2^n",
)
def _cor6_j3(c: SequenceCache, n: int):
    lhs = _cor7_lhs(c, n, 3, 2, scale=_r5(2))
    return lhs, n * 2**n


@_register(
    "cor7",
    "Eq. (17)",
    "numeric-q5",
    ["n", "j", "q"],
    "sum_k C(n,k) (sqrt5 F_j)^(n-k) (q^(1-(n-k)) - 1) F_jk B_(n-k) = n F_j q^(1-n) sum_{r=1}^{q-1} (r alpha^j + (q-r) beta^j)^(n-1)",
)
def _cor7(c: SequenceCache, n: int, j: int, q: int):
    aj, bj = _alpha_beta_j(c, j)
    lhs = _cor7_lhs(c, n, j, q)
    rhs = _times_n(
        n,
        lambda: c.fibonacci(j) * mpq(q) ** (1 - n)
        * _sum((r * aj + (q - r) * bj) ** (n - 1) for r in range(1, q)),
    )
    return lhs, rhs


@_register(
    "cor7-q3",
    "display after Corollary 7 (q = 3)",
    "numeric-q5",
    ["n", "j"],
    "sum_k C(n,k) F_jk (sqrt5 F_j)^(n-k) (3^(1-(n-k)) - 1) B_(n-k) = n F_j 3^(1-n) ((L_j + beta^j)^(n-1) + (L_j + alpha^j)^(n-1))",
)
def _cor7_q3(c: SequenceCache, n: int, j: int):
    aj, bj = _alpha_beta_j(c, j)
    lj = c.lucas(j)
    lhs = _cor7_lhs(c, n, j, 3)
    rhs = _times_n(
        n,
        lambda: c.fibonacci(j) * mpq(3) ** (1 - n)
        * ((lj + bj) ** (n - 1) + (lj + aj) ** (n - 1)),
    )
    return lhs, rhs


def _cor8(c: SequenceCache, n: int, j: int, m: int, sign: int):
    F = c.fibonacci
    lhs = _thm5_lhs(c, n, j, sign, c.bernoulli_poly, m)
    coeff = falling_factorial(n, m + 1)
    if coeff == 0:
        # (n)_(m+1) = 0 for m >= n annihilates the negative power
        return lhs, ZERO
    rhs = coeff * F(j) * _r5(sign * F(j)) ** m * _thm5_base(c, j, sign) ** (n - 1 - m)
    return lhs, rhs


@_register(
    "cor8-a",
    "Corollary 8 (first identity)",
    "polynomial-q5",
    ["n", "j", "m"],
    "sum_{k<=n-m} C(n,k) F_jk (sqrt5 F_j)^(n-k) (n-k)_m B_(n-m-k)(x) = (n)_(m+1) F_j (sqrt5 F_j)^m ((sqrt5 x + beta) F_j + F_(j-1))^(n-1-m)",
)
def _cor8_a(c: SequenceCache, n: int, j: int, m: int):
    return _cor8(c, n, j, m, +1)


@_register(
    "cor8-b",
    "Corollary 8 (second identity)",
    "polynomial-q5",
    ["n", "j", "m"],
    "sum_{k<=n-m} C(n,k) F_jk (-sqrt5 F_j)^(n-k) (n-k)_m B_(n-m-k)(x) = (n)_(m+1) F_j (-sqrt5 F_j)^m ((alpha - sqrt5 x) F_j + F_(j-1))^(n-1-m)",
)
def _cor8_b(c: SequenceCache, n: int, j: int, m: int):
    return _cor8(c, n, j, m, -1)


def _cor9(c: SequenceCache, n: int, j: int, N: int, sign: int):
    aj, bj = _alpha_beta_j(c, j)
    step = _r5(sign * c.fibonacci(j))
    first, second = (aj, bj) if sign > 0 else (bj, aj)
    lhs = _sum((first + step * s) ** n - (second + step * s) ** n for s in range(N + 1))
    rhs = (step * N + first) ** n - second**n
    return lhs, rhs


@_register(
    "cor9-a",
    "Corollary 9 (first identity)",
    "numeric-q5",
    ["n", "j", "N"],
    "sum_{s=0}^N ((alpha^j + sqrt5 F_j s)^n - (beta^j + sqrt5 F_j s)^n) = (sqrt5 F_j N + alpha^j)^n - beta^(jn)",
    {"n": 0},
)
def _cor9_a(c: SequenceCache, n: int, j: int, N: int):
    return _cor9(c, n, j, N, +1)


@_register(
    "cor9-b",
    "Corollary 9 (second identity)",
    "numeric-q5",
    ["n", "j", "N"],
    "sum_{s=0}^N ((beta^j - sqrt5 F_j s)^n - (alpha^j - sqrt5 F_j s)^n) = (-sqrt5 F_j N + beta^j)^n - alpha^(jn)",
    {"n": 0},
)
def _cor9_b(c: SequenceCache, n: int, j: int, N: int):
    return _cor9(c, n, j, N, -1)


@_register(
    "faulhaber",
    "Corollary 9 proof (power sums)",
    "numeric-rational",
    ["n", "N"],
    "sum_{s=0}^N s^n = integral_0^(N+1) B_n(x) dx, with 0^0 = 1",
    {"n": 0},
)
def _faulhaber(c: SequenceCache, n: int, N: int):
    lhs = sum(s**n for s in range(N + 1))
    rhs = c.bernoulli_poly(n).definite_integral(mpq(0), mpq(N + 1))
    return mpq(lhs), rhs


# --------------------------------------------------------------------------
# links between balancing polynomials and Fibonacci/Lucas numbers


@_register(
    "link1-a",
    "Eq. (1) (balancing)",
    "numeric-rational",
    ["n", "m"],
    "F_2m B*_n(L_2m/6) = F_2mn",
    {"n": 0},
)
def _link1_a(c: SequenceCache, n: int, m: int):
    x0 = mpq(c.lucas(2 * m), 6)
    return c.fibonacci(2 * m) * c.balancing_poly(n)(x0), mpq(c.fibonacci(2 * m * n))


@_register(
    "link1-b",
    "Eq. (1) (Lucas-balancing)",
    "numeric-rational",
    ["n", "m"],
    "2 C_n(L_2m/6) = L_2mn",
    {"n": 0},
)
def _link1_b(c: SequenceCache, n: int, m: int):
    x0 = mpq(c.lucas(2 * m), 6)
    return 2 * c.lucas_balancing_poly(n)(x0), mpq(c.lucas(2 * m * n))


@_register(
    "link2-a",
    "Eq. (2) (balancing)",
    "numeric-qi",
    ["n", "m"],
    "F_(2m+1) B*_n(i L_(2m+1)/6) = i^(n-1) F_(2m+1)n",
    {"n": 0},
)
def _link2_a(c: SequenceCache, n: int, m: int):
    p = 2 * m + 1
    x0 = I * mpq(c.lucas(p), 6)
    lhs = c.fibonacci(p) * QI.one() * c.balancing_poly(n)(x0)
    # i^(-1) F_0 at n = 0 is 0 either way
    rhs = I ** (n - 1) * c.fibonacci(p * n)
    return lhs, rhs


@_register(
    "link2-b",
    "Eq. (2) (Lucas-balancing)",
    "numeric-qi",
    ["n", "m"],
    "2 C_n(i L_(2m+1)/6) = i^n L_(2m+1)n",
    {"n": 0},
)
def _link2_b(c: SequenceCache, n: int, m: int):
    p = 2 * m + 1
    x0 = I * mpq(c.lucas(p), 6)
    return 2 * QI.one() * c.lucas_balancing_poly(n)(x0), I**n * c.lucas(p * n)


SERIES_IDS = tuple(i for i, d in REGISTRY.items() if d.series is not None)


# --------------------------------------------------------------------------
# public API


def describe(id: str) -> IdentityDescriptor:
    try:
        return REGISTRY[id]
    except KeyError:
        raise UnknownIdentityError(
            f"unknown identity {id!r}; valid ids: {', '.join(REGISTRY)}"
        ) from None


def registry_table() -> list[dict]:
    return [d.as_dict() for d in REGISTRY.values()]


def _check_params(d: IdentityDescriptor, params: Mapping[str, int]) -> dict:
    if set(params) != set(d.params):
        raise ParameterError(
            f"{d.id} takes parameters {list(d.params)}, got {sorted(params)}"
        )
    out = {}
    for name in d.params:
        value = params[name]
        if not isinstance(value, int) or isinstance(value, bool):
            raise ParameterError(f"{d.id}: parameter {name} must be an integer")
        low = min(d.minimum(name), 0) if name == "n" else d.minimum(name)
        if value < low or value > HARD_CAPS[name]:
            raise ParameterError(
                f"{d.id}: {name}={value} outside [{low}, {HARD_CAPS[name]}]"
            )
        out[name] = value
    return out


def verify(id: str, params: Mapping[str, int], cache: SequenceCache | None = None) -> VerificationResult:
    """Evaluate both sides of one identity instance exactly and compare."""
    d = describe(id)
    p = _check_params(d, params)
    cache = cache or SequenceCache()
    lhs, rhs = d.direct(cache, **p)
    return VerificationResult(id, p, "direct", bool(lhs == rhs), render(lhs), render(rhs))


def series_check(
    id: str, order: int, cache: SequenceCache | None = None, **params
) -> VerificationResult:
    """Compare both sides as truncated EGFs through ``z^order``."""
    d = describe(id)
    if d.series is None:
        raise ParameterError(f"{id} has no generating-function check; series ids: {', '.join(SERIES_IDS)}")
    if not 0 <= order <= HARD_CAPS["order"]:
        raise ParameterError(f"series order {order} outside [0, {HARD_CAPS['order']}]")
    extra = {k: v for k, v in params.items()}
    for name in extra:
        if name not in d.params or name == "n":
            raise ParameterError(f"{id}: unexpected series parameter {name}")
        if not d.minimum(name) <= extra[name] <= HARD_CAPS[name]:
            raise ParameterError(f"{id}: {name}={extra[name]} out of range")
    missing = [p for p in d.params if p != "n" and p not in extra]
    if missing:
        raise ParameterError(f"{id}: series check needs {missing}")
    cache = cache or SequenceCache()
    lhs, rhs = d.series(cache, order, **extra)
    shown = {"order": order, **extra}
    return VerificationResult(id, shown, "series", lhs == rhs, render(lhs), render(rhs))


def grid_points(id: str, ranges: Mapping[str, object], mode: str = "direct") -> list[dict]:
    """Cartesian product of parameter ranges in lexicographic order.

    A range value is either an int (upper bound, inclusive, starting at the
    identity's minimum) or an explicit iterable of ints.  In series mode the
    ``n`` axis is replaced by a single ``order`` value.
    """
    d = describe(id)
    axes = []
    names = []
    for name in d.params:
        if mode == "series" and name == "n":
            continue
        spec = ranges.get(name)
        if spec is None:
            raise ParameterError(f"{id}: no range given for {name}")
        if isinstance(spec, int):
            values = range(d.minimum(name), spec + 1)
        else:
            values = sorted(set(int(v) for v in spec))
        names.append(name)
        axes.append(list(values))
    if mode == "series":
        order = ranges.get("order")
        if order is None:
            raise ParameterError("series mode needs an order")
        names.insert(0, "order")
        axes.insert(0, [int(order)])
    return [dict(zip(names, combo)) for combo in itertools.product(*axes)]


def _run_chunk(task):
    id, mode, points, overrides = task
    cache = SequenceCache(overrides)
    out = []
    for p in points:
        if mode == "series":
            p = dict(p)
            order = p.pop("order")
            out.append(series_check(id, order, cache, **p))
        else:
            out.append(verify(id, p, cache))
    return out


def _chunks(points: list, size: int):
    for i in range(0, len(points), size):
        yield points[i : i + size]


def run_tasks(tasks: list[tuple], workers: int = 1) -> list[VerificationResult]:
    """Run ``(id, mode, points, overrides)`` tasks; output order follows input order."""
    if workers <= 1 or len(tasks) <= 1:
        results = [_run_chunk(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_chunk, tasks))
    return [r for chunk in results for r in chunk]


def plan(id: str, ranges: Mapping[str, object], mode: str, overrides=None, chunk: int = 32) -> list[tuple]:
    points = grid_points(id, ranges, mode)
    return [(id, mode, c, dict(overrides or {})) for c in _chunks(points, chunk)]


def verify_grid(
    id: str,
    ranges: Mapping[str, object],
    mode: str = "direct",
    workers: int = 1,
    cache_overrides: Mapping[int, object] | None = None,
) -> list[VerificationResult]:
    """Verify every point of a parameter grid; results in lexicographic parameter order."""
    if mode not in ("direct", "series"):
        raise ParameterError(f"mode must be 'direct' or 'series', not {mode!r}")
    return run_tasks(plan(id, ranges, mode, cache_overrides), workers)
