"""Exact extended-rational arithmetic and the plane embedding of rationals.

Values are fractions p/q kept in lowest terms with q >= 0.  There is a
single point at infinity, represented as 1/0 (so -1/0 normalizes to 1/0),
and 0 is stored as 0/1.  The vertex map sends a finite p/q to the plane
point (p/q, 1/q); the infinite value maps to the added point of
R^2 union {oo}.

Everything here is immutable after construction and safe to share between
threads.  Floating point never appears; rendering code converts to floats
at the last moment.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import DomainError, ParseError

_RATIONAL_RE = re.compile(r"\A\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*\Z")


class ExtendedRational:
    """A reduced fraction p/q with q >= 0, including the infinite value 1/0."""

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int = 1):
        if den == 0:
            if num == 0:
                raise DomainError("0/0 is not an extended rational")
            num = 1  # the unique unsigned infinity
        else:
            if den < 0:
                num, den = -num, -den
            g = math.gcd(num, den)
            if g > 1:
                num //= g
                den //= g
        self.num = num
        self.den = den

    @classmethod
    def parse(cls, text: str) -> "ExtendedRational":
        m = _RATIONAL_RE.match(text)
        if m is None:
            raise ParseError(f"not a rational: {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if num == 0 and den == 0:
            raise ParseError("0/0 is not a rational")
        return cls(num, den)

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    @property
    def is_integer(self) -> bool:
        return self.den == 1

    def floor(self) -> int:
        if self.den == 0:
            raise DomainError("floor of 1/0")
        return self.num // self.den

    def reciprocal(self) -> "ExtendedRational":
        return ExtendedRational(self.den, self.num)

    # -- arithmetic ------------------------------------------------------
    # Infinity follows the projective conventions: oo + x = oo, 1/oo = 0,
    # x/0 = oo for x != 0.  Indeterminate forms (oo + oo, 0 * oo, 0/0) raise.

    @staticmethod
    def _coerce(other):
        if isinstance(other, ExtendedRational):
            return other
        if isinstance(other, int):
            return ExtendedRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == 0 or o.den == 0:
            if self.den == 0 and o.den == 0:
                raise DomainError("1/0 + 1/0 is undefined")
            return ExtendedRational(1, 0)
        return ExtendedRational(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return ExtendedRational(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == 0 or o.den == 0:
            if self.num == 0 or o.num == 0:
                raise DomainError("0 * 1/0 is undefined")
            return ExtendedRational(1, 0)
        return ExtendedRational(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.reciprocal()

    def __abs__(self):
        return ExtendedRational(abs(self.num), self.den)

    # -- comparisons -----------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def _cmp_key(self, other):
        o = self._coerce(other)
        if o is None:
            return None
        if self.den == 0 or o.den == 0:
            raise DomainError("1/0 is not ordered against other values")
        return self.num * o.den, o.num * self.den

    def __lt__(self, other):
        k = self._cmp_key(other)
        if k is None:
            return NotImplemented
        return k[0] < k[1]

    def __le__(self, other):
        k = self._cmp_key(other)
        if k is None:
            return NotImplemented
        return k[0] <= k[1]

    def __gt__(self, other):
        k = self._cmp_key(other)
        if k is None:
            return NotImplemented
        return k[0] > k[1]

    def __ge__(self, other):
        k = self._cmp_key(other)
        if k is None:
            return NotImplemented
        return k[0] >= k[1]

    def __float__(self) -> float:
        if self.den == 0:
            return math.inf
        return self.num / self.den

    def __str__(self) -> str:
        if self.den == 0:
            return "1/0"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"ExtendedRational({self.num}, {self.den})"


INFINITY = ExtendedRational(1, 0)
ZERO = ExtendedRational(0, 1)
ONE = ExtendedRational(1, 1)


def make_rational(num: int, den: int) -> ExtendedRational:
    """Normalize an integer pair to lowest terms with den >= 0.

    (p, 0) maps to 1/0 for every p != 0; (0, 0) is rejected.
    """
    return ExtendedRational(num, den)


def is_farey_pair(a: ExtendedRational, b: ExtendedRational) -> bool:
    """True iff a = p/q, b = r/s satisfy ps - rq = +-1.

    1/0 participates normally: {1/0, k} is a Farey pair for every integer k.
    """
    det = a.num * b.den - b.num * a.den
    return det == 1 or det == -1


def mediant(a: ExtendedRational, b: ExtendedRational) -> ExtendedRational:
    """Mediant (p+r)/(q+s) of a Farey pair; completes {a, b} to a Farey triple.

    The mediant of a Farey pair is automatically in lowest terms.
    """
    if not is_farey_pair(a, b):
        raise DomainError(f"{a} and {b} are not a Farey pair")
    return ExtendedRational(a.num + b.num, a.den + b.den)


@dataclass(frozen=True)
class PlanePoint:
    """Point of R^2 union {oo} with exact rational coordinates.

    The infinite point carries no coordinates; finite points store exact
    rationals.  Floats appear only when rendering.
    """

    x: ExtendedRational | None
    y: ExtendedRational | None
    at_infinity: bool = False

    def __post_init__(self):
        if self.at_infinity:
            if self.x is not None or self.y is not None:
                raise DomainError("the infinite point has no coordinates")
        elif self.x is None or self.y is None:
            raise DomainError("finite points need both coordinates")
        elif self.x.is_infinite or self.y.is_infinite:
            raise DomainError("finite points need finite coordinates")

    @classmethod
    def finite(cls, x: ExtendedRational, y: ExtendedRational) -> "PlanePoint":
        return cls(x, y)

    def reflected(self) -> "PlanePoint":
        """Mirror image across the x-axis (fixes the infinite point)."""
        if self.at_infinity:
            return self
        return PlanePoint(self.x, -self.y)

    def __str__(self) -> str:
        if self.at_infinity:
            return "oo"
        return f"({self.x}, {self.y})"


INFINITE_POINT = PlanePoint(None, None, True)


def vertex_point(value: ExtendedRational) -> PlanePoint:
    """Embed p/q as the diagram vertex (p/q, 1/q); 1/0 maps to the infinite point.

    Injective on finite rationals, with exact y-coordinate 1/q.
    """
    if value.is_infinite:
        return INFINITE_POINT
    return PlanePoint(value, ExtendedRational(1, value.den))
