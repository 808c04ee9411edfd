"""Dense univariate polynomials and the ring Q[x][s]/(s^2 - (9x^2 - 1)).

``Poly`` stores coefficients low degree first, trailing zeros trimmed, and
accepts ``mpq`` or :class:`~balident.exact.QuadraticNumber` coefficients.
``SqrtExtElem`` is a pair ``(plain, surd)`` of rational polynomials standing
for ``plain(x) + surd(x)*s`` where ``s`` is a formal square root of
``9x^2 - 1``.
"""

from __future__ import annotations

from numbers import Integral

from gmpy2 import mpq

from .exact import QuadraticNumber, is_rational

__all__ = [
    "NEG_INF",
    "Poly",
    "SqrtExtElem",
    "RootConsistencyError",
    "X",
    "S",
    "MODULUS",
]

NEG_INF = float("-inf")
_ZERO = mpq(0)


def _is_scalar(value) -> bool:
    return is_rational(value) or isinstance(value, QuadraticNumber)


def _norm_scalar(value):
    return mpq(int(value)) if isinstance(value, Integral) else value


class Poly:
    """Dense polynomial ``sum(coeffs[k] * x**k)``.  Immutable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_norm_scalar(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: list) -> "Poly":
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        p = object.__new__(cls)
        p.coeffs = tuple(coeffs)
        return p

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls([0] * k + [c])

    def __reduce__(self):
        return (Poly, (self.coeffs,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return _ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    __bool__ = lambda self: bool(self.coeffs)  # noqa: E731

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    # arithmetic -------------------------------------------------------

    @staticmethod
    def _lift(other):
        if isinstance(other, Poly):
            return other
        if _is_scalar(other):
            return Poly((other,))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw([-c for c in self.coeffs])

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            if other == 0:
                return Poly()
            return Poly._raw([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        if len(a) < len(b):
            a, b = b, a
        out = [_ZERO] * (len(a) + len(b) - 1)
        for j, bj in enumerate(b):
            if bj == 0:
                continue
            for i, ai in enumerate(a):
                out[i + j] += ai * bj
        return Poly._raw(out)

    def __rmul__(self, other):
        if _is_scalar(other):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        return Poly._raw([c / other for c in self.coeffs])

    def __pow__(self, k):
        if not isinstance(k, Integral) or k < 0:
            return NotImplemented
        result = Poly((1,))
        base = self
        k = int(k)
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # evaluation and calculus -----------------------------------------

    def __call__(self, x0):
        return self.eval(x0)

    def eval(self, x0):
        """Horner evaluation; ``x0`` may be any value that multiplies with the coefficients."""
        if not self.coeffs:
            return _ZERO
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x0 + c
        return acc

    def derivative(self) -> "Poly":
        return Poly._raw([k * c for k, c in enumerate(self.coeffs)][1:])

    def antiderivative(self) -> "Poly":
        return Poly._raw([_ZERO] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def definite_integral(self, a, b):
        F = self.antiderivative()
        return F(b) - F(a)

    def map_coeffs(self, fn) -> "Poly":
        return Poly([fn(c) for c in self.coeffs])

    # display ----------------------------------------------------------

    def __str__(self) -> str:
        return self.render("x")

    def render(self, var: str = "x") -> str:
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            terms.append(_term(c, k, var))
        if not terms:
            return "0"
        out = terms[0][0] + terms[0][1] if terms[0][0] == "-" else terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign or '+'} {body}"
        return out

    def __repr__(self) -> str:
        return f"Poly({self})"


def _term(c, k: int, var: str) -> tuple[str, str]:
    """Split a term into (sign, body) so the renderer can join with ' + '/' - '."""
    if isinstance(c, QuadraticNumber) and c.a != 0 and c.b != 0:
        sign, text = "", f"({c})"
    else:
        text = str(c)
        sign = ""
        if text.startswith("-"):
            sign, text = "-", text[1:]
    if k == 0:
        return sign, text
    mono = var if k == 1 else f"{var}^{k}"
    if text == "1":
        return sign, mono
    return sign, f"{text}*{mono}"


X = Poly((0, 1))
MODULUS = Poly((-1, 0, 9))


class RootConsistencyError(ValueError):
    """The supplied value for s does not square to 9*x0^2 - 1."""


class SqrtExtElem:
    """``plain(x) + surd(x)*s`` with ``s^2 = 9x^2 - 1``.  Immutable."""

    __slots__ = ("plain", "surd")

    def __init__(self, plain=None, surd=None):
        self.plain = _as_poly(plain)
        self.surd = _as_poly(surd)

    def __reduce__(self):
        return (SqrtExtElem, (self.plain, self.surd))

    @staticmethod
    def _lift(other):
        if isinstance(other, SqrtExtElem):
            return other
        if isinstance(other, Poly) or is_rational(other):
            return SqrtExtElem(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return SqrtExtElem(self.plain + o.plain, self.surd + o.surd)

    __radd__ = __add__

    def __neg__(self):
        return SqrtExtElem(-self.plain, -self.surd)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return SqrtExtElem(self.plain - o.plain, self.surd - o.surd)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if is_rational(other) or isinstance(other, Poly):
            return SqrtExtElem(self.plain * other, self.surd * other)
        if not isinstance(other, SqrtExtElem):
            return NotImplemented
        u1, v1, u2, v2 = self.plain, self.surd, other.plain, other.surd
        plain = u1 * u2
        if v1 and v2:
            plain = plain + v1 * v2 * MODULUS
        surd = Poly()
        if v2:
            surd = u1 * v2
        if v1:
            surd = surd + u2 * v1
        return SqrtExtElem(plain, surd)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, Integral) or k < 0:
            return NotImplemented
        result = SqrtExtElem(Poly((1,)))
        base = self
        k = int(k)
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.plain == o.plain and self.surd == o.surd

    def __hash__(self):
        return hash((self.plain, self.surd))

    def __bool__(self):
        return bool(self.plain) or bool(self.surd)

    def conjugate(self) -> "SqrtExtElem":
        return SqrtExtElem(self.plain, -self.surd)

    def div_s(self) -> "SqrtExtElem":
        """Exact division by s of an element with no plain part."""
        if self.plain:
            raise ValueError(f"{self} is not divisible by s")
        return SqrtExtElem(self.surd)

    def specialize(self, x0) -> "SqrtExtElem":
        """Substitute ``x = x0`` in both components, keeping ``s`` formal."""
        return SqrtExtElem(Poly.constant(self.plain(x0)), Poly.constant(self.surd(x0)))

    def evaluate(self, x0, s0):
        """Ring homomorphism x -> x0, s -> s0; requires ``s0**2 == 9*x0**2 - 1``."""
        lhs = s0 * s0
        rhs = 9 * x0 * x0 - 1
        if lhs != rhs:
            raise RootConsistencyError(f"s0^2 = {lhs} but 9*x0^2 - 1 = {rhs}")
        return self.plain(x0) + self.surd(x0) * s0

    def __str__(self) -> str:
        if not self.surd:
            return str(self.plain)
        surd = f"({self.surd})*s"
        if not self.plain:
            return surd
        return f"{self.plain} + {surd}"

    def __repr__(self) -> str:
        return f"SqrtExtElem({self})"


def _as_poly(value) -> Poly:
    if value is None:
        return Poly()
    if isinstance(value, Poly):
        return value
    if _is_scalar(value):
        return Poly((value,))
    raise TypeError(f"cannot make a polynomial from {value!r}")


S = SqrtExtElem(None, Poly((1,)))
