"""Truncated exponential generating functions.

A :class:`TruncSeries` stores ``c_n = n! [z^n] f`` for ``n = 0..order``, so the
product of two series is the binomial convolution of their coefficient lists.
Coefficients may be any ring values this package knows how to multiply:
``mpq``, ``QuadraticNumber``, ``Poly`` or ``SqrtExtElem``.

The balancing generating functions are built from closed forms
``exp(a z) * sinh(q z) / s`` with ``q = w*s``.  Every odd power of ``q``
carries exactly one factor ``s``, so the division by ``s`` is coefficient
surgery (:meth:`SqrtExtElem.div_s`), never an inversion.
"""

from __future__ import annotations

import math

from gmpy2 import mpq

from .polyring import MODULUS, Poly, S, SqrtExtElem, X

__all__ = [
    "TruncSeries",
    "exp_linear",
    "sinh_linear",
    "cosh_linear",
    "egf_b",
    "egf_c",
    "egf_b1",
    "egf_b2",
    "egf_c1",
    "egf_c2",
    "egf_bernoulli",
    "egf_fibonacci_ap",
]


def _zero_like(c):
    return c * 0


def _one_like(c):
    return c**0


class TruncSeries:
    """Order-N truncated EGF.  Arithmetic truncates to the smaller order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("a truncated series needs at least c_0")
        self.coeffs = coeffs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def _check(self, other: "TruncSeries") -> None:
        if not isinstance(other, TruncSeries):
            raise TypeError(f"expected TruncSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise ValueError(f"series order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check(other)
        return TruncSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check(other)
        return TruncSeries(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self):
        return TruncSeries(-a for a in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        return TruncSeries(c * other for c in self.coeffs)

    def __rmul__(self, other):
        if isinstance(other, TruncSeries):
            return NotImplemented
        return TruncSeries(other * c for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None

    def shift(self) -> "TruncSeries":
        """Multiply by z: ``c_n -> n * c_{n-1}``, same order."""
        cs = self.coeffs
        return TruncSeries([_zero_like(cs[0])] + [n * cs[n - 1] for n in range(1, len(cs))])

    def scale(self, c) -> "TruncSeries":
        """Substitute ``z -> c z``: ``c_n -> c**n * c_n``."""
        out = []
        power = None
        for n, a in enumerate(self.coeffs):
            if n == 0:
                out.append(a)
                power = c
                continue
            out.append(power * a)
            power = power * c
        return TruncSeries(out)

    def even_part(self) -> "TruncSeries":
        return TruncSeries(a if n % 2 == 0 else _zero_like(a) for n, a in enumerate(self.coeffs))

    def odd_part(self) -> "TruncSeries":
        return TruncSeries(a if n % 2 else _zero_like(a) for n, a in enumerate(self.coeffs))

    def div_s(self) -> "TruncSeries":
        return TruncSeries(a.div_s() for a in self.coeffs)

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(self.coeffs[: order + 1])

    def __repr__(self) -> str:
        return "TruncSeries([" + "; ".join(str(c) for c in self.coeffs) + "])"


def series_mul(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """Binomial convolution ``(fg)_n = sum_k C(n,k) f_k g_{n-k}``."""
    f._check(g)
    a, b = f.coeffs, g.coeffs
    out = []
    for n in range(len(a)):
        acc = None
        for k in range(n + 1):
            fk, gk = a[k], b[n - k]
            if not fk or not gk:
                continue
            term = math.comb(n, k) * (fk * gk)
            acc = term if acc is None else acc + term
        out.append(acc if acc is not None else _zero_like(a[0] * b[0]))
    return TruncSeries(out)


def exp_linear(p, order: int) -> TruncSeries:
    """EGF of ``exp(p z)``: ``c_n = p**n``."""
    out = [_one_like(p)]
    for _ in range(order):
        out.append(out[-1] * p)
    return TruncSeries(out)


def sinh_linear(q, order: int) -> TruncSeries:
    return exp_linear(q, order).odd_part()


def cosh_linear(q, order: int) -> TruncSeries:
    return exp_linear(q, order).even_part()


def _ext(p) -> SqrtExtElem:
    return SqrtExtElem(p)


_A = _ext(18 * X * X - 1)  # 18x^2 - 1
_THREE_X = _ext(3 * X)


def _hyperbolic_pair(order: int):
    """``(e^{(18x^2-1)z}, cosh(6xs z), sinh(6xs z)/s)`` as ext-ring series."""
    q = SqrtExtElem(None, 6 * X)
    e = exp_linear(_A, order)
    return e, cosh_linear(q, order), sinh_linear(q, order).div_s()


def egf_b2(order: int) -> TruncSeries:
    """Even-index balancing polynomials B*_{2n}(x)."""
    e, _, sinh_s = _hyperbolic_pair(order)
    return e * sinh_s


def egf_b1(order: int) -> TruncSeries:
    """Odd-index balancing polynomials B*_{2n+1}(x)."""
    e, cosh, sinh_s = _hyperbolic_pair(order)
    return e * (_THREE_X * sinh_s + cosh)


def egf_c2(order: int) -> TruncSeries:
    """Even-index Lucas-balancing polynomials C_{2n}(x)."""
    e, cosh, _ = _hyperbolic_pair(order)
    return e * cosh


def egf_c1(order: int) -> TruncSeries:
    """Odd-index Lucas-balancing polynomials C_{2n+1}(x)."""
    e, cosh, sinh_s = _hyperbolic_pair(order)
    # s*sinh(qz) = s^2 * (sinh(qz)/s)
    return e * (_THREE_X * cosh + _ext(MODULUS) * sinh_s)


def egf_b(order: int) -> TruncSeries:
    """All balancing polynomials: ``e^{3xz} sinh(s z) / s``."""
    return exp_linear(_THREE_X, order) * sinh_linear(S, order).div_s()


def egf_c(order: int) -> TruncSeries:
    """All Lucas-balancing polynomials: ``e^{3xz} cosh(s z)``."""
    return exp_linear(_THREE_X, order) * cosh_linear(S, order)


def egf_bernoulli(cache, arg, scale, order: int) -> TruncSeries:
    """EGF of ``H(arg, scale*z)``: ``c_n = scale**n * B_n(arg)``.

    ``arg`` is ``"zero"``, ``"half"``, ``"x"`` (keep ``B_n(x)`` symbolic) or a
    concrete evaluation point.
    """
    values = []
    for n in range(order + 1):
        if arg == "zero":
            values.append(cache.bernoulli_number(n))
        elif arg == "x":
            values.append(cache.bernoulli_poly(n))
        elif arg == "half":
            values.append(cache.bernoulli_poly(n)(mpq(1, 2)))
        else:
            values.append(cache.bernoulli_poly(n)(arg))
    out = [scale**0 * values[0]]
    power = scale
    for v in values[1:]:
        out.append(power * v)
        power = power * scale
    return TruncSeries(out)


def egf_fibonacci_ap(alpha_j, beta_j, sqrt5, order: int) -> TruncSeries:
    """EGF of ``F_{jn}`` via Binet: ``(e^{alpha^j z} - e^{beta^j z}) / sqrt5``."""
    diff = exp_linear(alpha_j, order) - exp_linear(beta_j, order)
    inv = sqrt5.inverse()
    return TruncSeries(c * inv for c in diff)
