"""Exact generators for Bernoulli, Fibonacci/Lucas and balancing families.

All memoisation lives on a :class:`SequenceCache` instance, so every
verification run (or worker) owns its tables and nothing global mutates.
"""

from __future__ import annotations

import math
from typing import Mapping

from gmpy2 import mpq

from .polyring import Poly

__all__ = [
    "SequenceCache",
    "binomial",
    "falling_factorial",
]


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def falling_factorial(y, m: int):
    """``y (y-1) ... (y-m+1)``; the empty product for ``m == 0`` is 1."""
    if m < 0:
        raise ValueError("falling factorial order must be nonnegative")
    out = 1
    for i in range(m):
        out = out * (y - i)
    return out


def _check_index(n: int) -> None:
    if n < 0:
        raise ValueError(f"negative index {n} is not defined")


class SequenceCache:
    """Append-only memo tables for one verification context.

    ``bernoulli_overrides`` replaces selected Bernoulli numbers; every
    Bernoulli polynomial derived from this cache then uses the corrupted
    values.  Only used to check that verifiers are not vacuous.
    """

    def __init__(self, bernoulli_overrides: Mapping[int, object] | None = None):
        self._overrides = {int(k): mpq(v) for k, v in (bernoulli_overrides or {}).items()}
        self._bern: list[mpq] = []
        self._bern_poly: dict[int, Poly] = {}
        self._fib = [0, 1]
        self._luc = [2, 1]
        self._bal = [Poly(), Poly((1,))]
        self._lbal = [Poly((1,)), Poly((0, 3))]

    # Bernoulli ----------------------------------------------------------

    def bernoulli_number(self, n: int) -> mpq:
        """B_n with B_1 = -1/2, from sum_{k<=n} C(n+1, k) B_k = 0."""
        _check_index(n)
        bern = self._bern
        while len(bern) <= n:
            m = len(bern)
            if m == 0:
                value = mpq(1)
            else:
                acc = mpq(0)
                # recurrence runs on true values so an override corrupts one entry only
                for k in range(m):
                    acc += math.comb(m + 1, k) * bern[k]
                value = -acc / (m + 1)
            bern.append(value)
        return self._overrides.get(n, bern[n])

    def bernoulli_poly(self, n: int) -> Poly:
        """B_n(x) = sum_k C(n, k) B_k x^(n-k)."""
        _check_index(n)
        p = self._bern_poly.get(n)
        if p is None:
            coeffs = [mpq(0)] * (n + 1)
            for k in range(n + 1):
                coeffs[n - k] = math.comb(n, k) * self.bernoulli_number(k)
            p = Poly(coeffs)
            self._bern_poly[n] = p
        return p

    # Fibonacci / Lucas ---------------------------------------------------

    def fibonacci(self, n: int) -> int:
        _check_index(n)
        f = self._fib
        while len(f) <= n:
            f.append(f[-1] + f[-2])
        return f[n]

    def lucas(self, n: int) -> int:
        _check_index(n)
        lu = self._luc
        while len(lu) <= n:
            lu.append(lu[-1] + lu[-2])
        return lu[n]

    # balancing -----------------------------------------------------------

    def balancing_poly(self, n: int) -> Poly:
        """B*_n(x): B*_0 = 0, B*_1 = 1, B*_n = 6x B*_{n-1} - B*_{n-2}."""
        _check_index(n)
        return self._extend(self._bal, n)

    def lucas_balancing_poly(self, n: int) -> Poly:
        """C_n(x): C_0 = 1, C_1 = 3x, C_n = 6x C_{n-1} - C_{n-2}."""
        _check_index(n)
        return self._extend(self._lbal, n)

    @staticmethod
    def _extend(table: list[Poly], n: int) -> Poly:
        six_x = Poly((0, 6))
        while len(table) <= n:
            table.append(six_x * table[-1] - table[-2])
        return table[n]

    def balancing_number(self, n: int):
        return self.balancing_poly(n)(1)

    def lucas_balancing_number(self, n: int):
        return self.lucas_balancing_poly(n)(1)
