"""Scalar models for the geometry pipeline.

Two interchangeable models: exact arithmetic in the real quadratic field
Q(sqrt5) over big rationals, and IEEE double precision.  Geometry code is
generic over a small ``Field`` object that decides degeneracy (exact zero
versus scale-free threshold) and representative normalization.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover - gmpy2 is optional
    Rational = Fraction

SQRT5 = math.sqrt(5.0)

RationalLike = "int | Fraction | Rational | str"


def rational(value, den=None):
    """Build a reduced big rational (positive denominator is canonical)."""
    if den is not None:
        return Rational(value) / Rational(den)
    if isinstance(value, str):
        return Rational(value)
    return Rational(value)


class QSqrt5:
    """Exact element a + b*sqrt(5) with rational a, b.

    Equality is structural: the (a, b) representation is unique, so two
    elements are equal iff both components match.
    """

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = rational(a)
        self.b = rational(b)

    def __repr__(self):
        return f"QSqrt5({self.a}, {self.b})"

    def __str__(self):
        return format_exact(self)

    @property
    def is_zero(self):
        return self.a == 0 and self.b == 0

    def conjugate(self):
        """The Galois conjugate a - b*sqrt(5)."""
        return QSqrt5(self.a, -self.b)

    def __eq__(self, other):
        if isinstance(other, QSqrt5):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)) or type(other) is type(self.a):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self):
        return not self.is_zero

    def __neg__(self):
        return QSqrt5(-self.a, -self.b)

    def _coerce(self, other):
        if isinstance(other, QSqrt5):
            return other
        if isinstance(other, (int, Fraction)) or type(other) is type(self.a):
            return QSqrt5(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt5(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt5(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt5(o.a - self.a, o.b - self.b)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt5(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via the conjugate: the field norm a^2 - 5 b^2
        is nonzero for every nonzero element (sqrt5 is irrational)."""
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero in Q(sqrt5)")
        n = self.a * self.a - 5 * self.b * self.b
        return QSqrt5(self.a / n, -self.b / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __float__(self):
        return float(self.a) + float(self.b) * SQRT5


ZERO = QSqrt5(0)
ONE = QSqrt5(1)

#: golden ratio (1 + sqrt5)/2 and its conjugate (1 - sqrt5)/2
PHI = QSqrt5(rational(1, 2), rational(1, 2))
PSI = QSqrt5(rational(1, 2), rational(-1, 2))


def golden_constants():
    """The pair (phi, psi) of conjugate roots of x^2 = x + 1."""
    return PHI, PSI


# -- textual literal format: `p/q` and `p/q+r/s*s5` (s5 denotes sqrt5) --

_RAT = r"-?\d+(?:/\d+)?"
_EXACT_RE = re.compile(rf"^({_RAT})(?:([+-])({_RAT.replace('-?', '')})\*s5)?$")


def format_exact(x: QSqrt5) -> str:
    def rat(r):
        return f"{r.numerator}/{r.denominator}"

    if x.b == 0:
        return rat(x.a)
    sign = "-" if x.b < 0 else "+"
    return f"{rat(x.a)}{sign}{rat(abs(x.b))}*s5"


def parse_exact(text: str) -> QSqrt5:
    m = _EXACT_RE.match(text)
    if m is None:
        raise ValueError(f"bad exact scalar literal: {text!r}")
    try:
        a = rational(m.group(1))
        if m.group(3) is None:
            return QSqrt5(a)
        b = rational(m.group(3))
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in literal: {text!r}") from None
    if m.group(2) == "-":
        b = -b
    return QSqrt5(a, b)


class ProjParam:
    """A point of the projective line: a finite scalar or infinity."""

    __slots__ = ("value",)

    def __init__(self, value):
        self.value = value

    @classmethod
    def infinity(cls):
        return cls(None)

    @property
    def is_infinite(self):
        return self.value is None

    def __eq__(self, other):
        if isinstance(other, ProjParam):
            return self.value == other.value
        return self.value == other

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return "ProjParam(inf)" if self.is_infinite else f"ProjParam({self.value})"


INF = ProjParam.infinity()


def as_param(lam) -> ProjParam:
    return lam if isinstance(lam, ProjParam) else ProjParam(lam)


def _maxabs3(v):
    return max(abs(v[0]), abs(v[1]), abs(v[2]))


class ExactField:
    """Exact Q(sqrt5) model: all zero tests are exact, no normalization."""

    name = "exact"

    zero = ZERO
    one = ONE

    def scalar(self, v):
        if isinstance(v, QSqrt5):
            return v
        if isinstance(v, float):
            raise TypeError("cannot lift a float into the exact model")
        return QSqrt5(v)

    def from_text(self, tok):
        return parse_exact(tok)

    def text(self, x):
        return format_exact(x)

    def to_float(self, x):
        return float(x)

    def scalar_is_zero(self, x):
        return x.is_zero

    def cross_is_zero(self, c, u, v):
        return c[0].is_zero and c[1].is_zero and c[2].is_zero

    def det_is_zero(self, d, rows):
        return d.is_zero

    def minor_is_zero(self, d, u2, v2):
        return d.is_zero

    def normalize(self, v):
        return v

    def pivot_key(self, x):
        # exact nonzero first, largest float magnitude among those; deep
        # iterates overflow the float conversion, and any nonzero pivot
        # is usable exactly, so rank those as infinite
        if x.is_zero:
            return (False, 0.0)
        try:
            return (True, abs(float(x)))
        except OverflowError:
            return (True, math.inf)


class FloatField:
    """Double-precision model with scale-free degeneracy thresholds."""

    name = "float"

    zero = 0.0
    one = 1.0

    def __init__(self, degenerate_threshold=1e-10):
        self.tol = degenerate_threshold

    def scalar(self, v):
        return float(v)

    def from_text(self, tok):
        return float(tok)

    def text(self, x):
        return repr(x)

    def to_float(self, x):
        return x

    def scalar_is_zero(self, x):
        return x == 0.0

    def cross_is_zero(self, c, u, v):
        return _maxabs3(c) < self.tol * _maxabs3(u) * _maxabs3(v)

    def det_is_zero(self, d, rows):
        scale = 1.0
        for r in rows:
            scale *= _maxabs3(r)
        return abs(d) < self.tol * scale

    def minor_is_zero(self, d, u2, v2):
        scale = max(abs(u2[0]), abs(u2[1])) * max(abs(v2[0]), abs(v2[1]))
        return abs(d) < self.tol * scale

    def normalize(self, v):
        m = _maxabs3(v)
        if m == 0.0:
            return v
        return type(v)(v[0] / m, v[1] / m, v[2] / m)

    def pivot_key(self, x):
        return (x != 0.0, abs(x))


EXACT = ExactField()
FLOAT = FloatField()


def field_by_name(name: str):
    if name == "exact":
        return EXACT
    if name == "float":
        return FLOAT
    raise ValueError(f"unknown field model: {name!r}")
