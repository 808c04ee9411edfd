"""Exact scalars: rationals (gmpy2 ``mpq``) and quadratic fields Q(sqrt d).

Rationals are plain ``gmpy2.mpq`` values; they are always reduced and
division by zero raises :class:`ZeroDivisionError`.  Quadratic numbers carry
a reference to a shared :class:`QuadraticField`, and two numbers only combine
when they live in the same field.
"""

from __future__ import annotations

import re
from numbers import Integral

from gmpy2 import mpq

Rational = mpq

__all__ = [
    "Rational",
    "FieldMismatchError",
    "QuadraticField",
    "QuadraticNumber",
    "Q5",
    "QI",
    "SQRT5",
    "ALPHA",
    "BETA",
    "I",
    "as_rational",
    "is_rational",
    "parse_number",
    "render_rational",
]

_MPQ = type(mpq(0))


class FieldMismatchError(TypeError):
    """Raised when values from two different coefficient fields are combined."""


def is_rational(value) -> bool:
    return isinstance(value, (_MPQ, Integral))


def as_rational(value) -> mpq:
    if isinstance(value, _MPQ):
        return value
    if isinstance(value, Integral):
        return mpq(int(value))
    raise TypeError(f"not a rational: {value!r}")


def render_rational(value) -> str:
    return str(mpq(value))


class QuadraticField:
    """The field Q(sqrt d) for a fixed non-square integer d.

    Instances are interned, so ``QuadraticField(5) is QuadraticField(5)``.
    """

    _cache: dict[int, "QuadraticField"] = {}

    def __new__(cls, d: int):
        d = int(d)
        field = cls._cache.get(d)
        if field is None:
            if d in (0, 1) or (d > 0 and _is_square(d)):
                raise ValueError(f"discriminant must be a non-square integer, got {d}")
            field = super().__new__(cls)
            field.d = d
            field.surd_name = "i" if d == -1 else f"sqrt{d}"
            cls._cache[d] = field
        return field

    def __reduce__(self):
        return (QuadraticField, (self.d,))

    def __repr__(self) -> str:
        return f"QuadraticField({self.d})"

    def __call__(self, rat_part=0, surd_part=0) -> "QuadraticNumber":
        return QuadraticNumber(rat_part, surd_part, self)

    def zero(self) -> "QuadraticNumber":
        return QuadraticNumber(0, 0, self)

    def one(self) -> "QuadraticNumber":
        return QuadraticNumber(1, 0, self)

    def gen(self) -> "QuadraticNumber":
        """The generator sqrt(d)."""
        return QuadraticNumber(0, 1, self)


def _is_square(n: int) -> bool:
    from gmpy2 import is_square

    return bool(is_square(n))


class QuadraticNumber:
    """An element ``rat_part + surd_part * sqrt(d)`` of Q(sqrt d); immutable."""

    __slots__ = ("a", "b", "field")

    def __init__(self, rat_part=0, surd_part=0, field: QuadraticField | int = 5):
        if not isinstance(field, QuadraticField):
            field = QuadraticField(field)
        self.a = as_rational(rat_part)
        self.b = as_rational(surd_part)
        self.field = field

    @property
    def rat_part(self) -> mpq:
        return self.a

    @property
    def surd_part(self) -> mpq:
        return self.b

    @property
    def d(self) -> int:
        return self.field.d

    def __reduce__(self):
        return (QuadraticNumber, (self.a, self.b, self.field.d))

    # coercion ---------------------------------------------------------

    def _coerce(self, other) -> "QuadraticNumber | None":
        if isinstance(other, QuadraticNumber):
            if other.field is not self.field:
                raise FieldMismatchError(
                    f"cannot combine Q(sqrt {self.d}) with Q(sqrt {other.d})"
                )
            return other
        if is_rational(other):
            return QuadraticNumber(other, 0, self.field)
        return None

    # arithmetic -------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticNumber(self.a + o.a, self.b + o.b, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticNumber(self.a - o.a, self.b - o.b, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.field)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if is_rational(other):
            return QuadraticNumber(self.a * other, self.b * other, self.field)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, e = self.a, self.b, o.a, o.b
        return QuadraticNumber(a * c + self.field.d * b * e, a * e + b * c, self.field)

    __rmul__ = __mul__

    def norm(self) -> mpq:
        return self.a * self.a - self.field.d * self.b * self.b

    def conjugate(self) -> "QuadraticNumber":
        return QuadraticNumber(self.a, -self.b, self.field)

    def inverse(self) -> "QuadraticNumber":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError(f"{self} has zero norm")
        return QuadraticNumber(self.a / n, -self.b / n, self.field)

    def __truediv__(self, other):
        if is_rational(other):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return QuadraticNumber(self.a / other, self.b / other, self.field)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, Integral):
            return NotImplemented
        k = int(k)
        base = self
        if k < 0:
            base, k = self.inverse(), -k
        result = self.field.one()
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, QuadraticNumber):
            return self.field is other.field and self.a == other.a and self.b == other.b
        if is_rational(other):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.field.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_rational(self) -> bool:
        return self.b == 0

    # display ----------------------------------------------------------

    def __str__(self) -> str:
        name = self.field.surd_name
        if self.b == 0:
            return str(self.a)
        if self.b == 1:
            surd = name
        elif self.b == -1:
            surd = f"-{name}"
        else:
            surd = f"{self.b}*{name}"
        if self.a == 0:
            return surd
        if surd.startswith("-"):
            return f"{self.a} - {surd[1:]}"
        return f"{self.a} + {surd}"

    def __repr__(self) -> str:
        return f"QuadraticNumber({self.a}, {self.b}, d={self.field.d})"


Q5 = QuadraticField(5)
QI = QuadraticField(-1)
SQRT5 = Q5.gen()
I = QI.gen()
ALPHA = Q5(mpq(1, 2), mpq(1, 2))
BETA = Q5(mpq(1, 2), mpq(-1, 2))


_RAT = r"\d+(?:/\d+)?"
_NUMBER_RE = re.compile(
    rf"""^\s*
    (?:(?P<rsign>[-+]?)\s*(?P<rat>{_RAT})(?!\s*\*|\d|/))?
    \s*
    (?:(?P<ssign>[-+]?)\s*(?:(?P<coef>{_RAT})\s*\*\s*)?(?P<surd>sqrt-?\d+|i))?
    \s*$""",
    re.VERBOSE,
)


def parse_number(text: str):
    """Parse the rendering produced by ``str()`` back into an exact value.

    Accepts ``"-691/2730"``, ``"1/2 + 3/2*sqrt5"``, ``"-i"``, ``"sqrt5"`` and so
    on.  Returns an ``mpq`` when no surd is present.
    """
    m = _NUMBER_RE.match(text)
    if m is None or (m.group("rat") is None and m.group("surd") is None):
        raise ValueError(f"cannot parse exact number: {text!r}")
    rat = mpq(0)
    if m.group("rat") is not None:
        rat = mpq(m.group("rat"))
        if m.group("rsign") == "-":
            rat = -rat
    if m.group("surd") is None:
        return rat
    if m.group("rat") is not None and not m.group("ssign"):
        raise ValueError(f"missing operator before surd in {text!r}")
    surd = m.group("surd")
    d = -1 if surd == "i" else int(surd[4:])
    coef = mpq(m.group("coef")) if m.group("coef") else mpq(1)
    if m.group("ssign") == "-":
        coef = -coef
    return QuadraticNumber(rat, coef, d)
