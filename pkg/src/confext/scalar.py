"""Exact elements of Q and of real quadratic fields Q(sqrt(d)).

A :class:`Scalar` is ``rat + surd*sqrt(d)`` with rational ``rat`` and ``surd``.
Pure rationals carry ``d == 0``.  Only one quadratic field may be mixed into a
single computation: combining sqrt(19) with sqrt(22) raises
:class:`IncompatibleFieldError`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

__all__ = [
    "Scalar",
    "IncompatibleFieldError",
    "as_scalar",
    "common_field",
    "is_squarefree",
    "ZERO",
    "ONE",
]


class IncompatibleFieldError(ValueError):
    """Raised when two scalars live in different quadratic fields."""


@lru_cache(maxsize=None)
def is_squarefree(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


def _field(d1: int, d2: int) -> int:
    if d1 == d2 or d2 == 0:
        return d1
    if d1 == 0:
        return d2
    raise IncompatibleFieldError(f"cannot mix sqrt({d1}) and sqrt({d2})")


class Scalar:
    """Immutable value ``rat + surd*sqrt(d)`` in canonical form."""

    __slots__ = ("rat", "surd", "d")

    def __init__(self, rat=0, surd=0, d: int = 0):
        rat = Fraction(rat)
        surd = Fraction(surd)
        d = int(d)
        if surd and d == 1:
            rat, surd, d = rat + surd, Fraction(0), 0
        if surd:
            if not is_squarefree(d):
                raise ValueError(f"d={d} must be a squarefree integer >= 2")
        else:
            d = 0
        object.__setattr__(self, "rat", rat)
        object.__setattr__(self, "surd", surd)
        object.__setattr__(self, "d", d)

    @classmethod
    def _make(cls, rat: Fraction, surd: Fraction, d: int) -> "Scalar":
        # trusted constructor: inputs already Fractions with valid d
        obj = object.__new__(cls)
        if not surd:
            d = 0
        object.__setattr__(obj, "rat", rat)
        object.__setattr__(obj, "surd", surd)
        object.__setattr__(obj, "d", d)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def __reduce__(self):
        return (Scalar, (self.rat, self.surd, self.d))

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.rat and not self.surd

    def is_rational(self) -> bool:
        return not self.surd

    def __bool__(self) -> bool:
        return bool(self.rat) or bool(self.surd)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        o = as_scalar(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar._make(self.rat + o.rat, self.surd + o.surd, _field(self.d, o.d))

    __radd__ = __add__

    def __neg__(self):
        return Scalar._make(-self.rat, -self.surd, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = as_scalar(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar._make(self.rat - o.rat, self.surd - o.surd, _field(self.d, o.d))

    def __rsub__(self, other):
        o = as_scalar(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = as_scalar(other)
        if o is NotImplemented:
            return NotImplemented
        if not self.surd and not o.surd:
            return Scalar._make(self.rat * o.rat, Fraction(0), 0)
        d = _field(self.d, o.d)
        a, b, c, e = self.rat, self.surd, o.rat, o.surd
        return Scalar._make(a * c + b * e * d, a * e + b * c, d)

    __rmul__ = __mul__

    def conjugate(self) -> "Scalar":
        return Scalar._make(self.rat, -self.surd, self.d)

    def norm(self) -> Fraction:
        """Field norm ``rat**2 - surd**2 * d`` (a rational)."""
        return self.rat * self.rat - self.surd * self.surd * self.d

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("Scalar division by zero")
        if not self.surd:
            return Scalar._make(1 / self.rat, Fraction(0), 0)
        n = self.norm()
        return Scalar._make(self.rat / n, -self.surd / n, self.d)

    def __truediv__(self, other):
        o = as_scalar(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("Scalar division by zero")
        _field(self.d, o.d)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = as_scalar(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        o = as_scalar(other)
        if o is NotImplemented:
            return NotImplemented
        return self.rat == o.rat and self.surd == o.surd and self.d == o.d

    def __hash__(self):
        if not self.surd:
            return hash(self.rat)
        return hash((self.rat, self.surd, self.d))

    # -- text -------------------------------------------------------------

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar('{format_scalar(self)}')"

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        return parse_scalar(text)


ZERO = Scalar._make(Fraction(0), Fraction(0), 0)
ONE = Scalar._make(Fraction(1), Fraction(0), 0)


def as_scalar(x):
    """Coerce ints, Fractions and numeric strings to :class:`Scalar`."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Rational)):
        return Scalar._make(Fraction(x), Fraction(0), 0)
    if isinstance(x, str):
        return parse_scalar(x)
    return NotImplemented


def common_field(values) -> int:
    """The quadratic field (``d``) shared by ``values``; 0 when all rational."""
    d = 0
    for v in values:
        d = _field(d, v.d)
    return d


def _fmt_frac(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(x: Scalar) -> str:
    if not x.surd:
        return _fmt_frac(x.rat)
    mag = abs(x.surd)
    body = f"sqrt({x.d})" if mag == 1 else f"{_fmt_frac(mag)}*sqrt({x.d})"
    if not x.rat:
        return body if x.surd > 0 else "-" + body
    sign = "+" if x.surd > 0 else "-"
    return f"{_fmt_frac(x.rat)}{sign}{body}"


_SCALAR_RE = re.compile(
    r"""^\s*
    (?:(?P<rat>[+-]?\d+(?:/\d+)?))?
    \s*
    (?:(?P<sign>[+-])?\s*(?:(?P<coef>\d+(?:/\d+)?)\s*\*\s*)?sqrt\(\s*(?P<d>\d+)\s*\))?
    \s*$""",
    re.VERBOSE,
)


_SURD_RE = re.compile(
    r"^\s*(?P<sign>[+-])?\s*(?:(?P<coef>\d+(?:/\d+)?)\s*\*\s*)?sqrt\(\s*(?P<d>\d+)\s*\)\s*$")


def parse_scalar(text: str) -> Scalar:
    """Parse ``"p"``, ``"p/q"`` or ``"p/q+r/s*sqrt(D)"`` (sign variants allowed)."""
    m = _SURD_RE.match(text)
    if m:
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        return Scalar(0, -coef if m.group("sign") == "-" else coef, int(m.group("d")))
    m = _SCALAR_RE.match(text)
    if not m or (m.group("rat") is None and m.group("d") is None):
        raise ValueError(f"cannot parse scalar {text!r}")
    rat = Fraction(m.group("rat")) if m.group("rat") else Fraction(0)
    if m.group("d") is None:
        return Scalar._make(rat, Fraction(0), 0)
    if m.group("rat") and m.group("sign") is None:
        raise ValueError(f"cannot parse scalar {text!r}")
    coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
    if m.group("sign") == "-":
        coef = -coef
    return Scalar(rat, coef, int(m.group("d")))
