"""Line families: substituting an integer m into one slot of a standard
continued fraction sweeps out vertices that sit on two mirror-image lines.

For a standard (a0, ..., an) and a slot i in {1, ..., n}, write the
a0-free prefix product (0 1; 1 a1)...(0 1; 1 a_{i-1}) as (r t; s u) and
let (v, w) be the column (0 1; 1 a_{i+1})...(0 1; 1 an) (0, 1)^T.  Then
the substituted value is the ratio of the affine integer forms

    N(m) = t*w*m + (r*w + t*v)        (numerator)
    D(m) = u*w*m + (s*w + u*v)        (denominator)

shifted horizontally by a0.  All vertices (N/D, 1/D) lie on one extended
line through the anchor (gamma, 0), gamma = a0 + t/u, and the actual
diagram vertices land on that line when D(m) > 0 and on its mirror image
across the x-axis when D(m) < 0; D(m) = 0 puts the point at infinity.
D is strictly increasing (u*w > 0), its real root lies in (-2, 0) -- in
(-1, 0) when i = 1 -- and squared distances to the anchor shrink strictly
along both tails.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .contfrac import ContinuedFraction, IntMat2, continuant_product
from .errors import DomainError, InvariantViolation
from .rationals import (
    ExtendedRational,
    PlanePoint,
    ZERO,
    make_rational,
    vertex_point,
)


class Side(enum.Enum):
    PLUS = "PLUS"
    MINUS = "MINUS"
    INFINITE = "INFINITE"


@dataclass(frozen=True)
class ExtendedLine:
    """Euclidean line plus the infinite point, anchored on the x-axis.

    Stored as the anchor (gamma, 0) and one more exact point, so membership
    is a cleared-denominator determinant comparison with no division.
    """

    anchor: PlanePoint
    through: PlanePoint

    def __post_init__(self):
        if self.anchor.at_infinity or self.through.at_infinity:
            raise DomainError("lines are anchored at finite points")
        if self.anchor.y != ZERO:
            raise DomainError("anchor must sit on the x-axis")
        if self.through.y == ZERO:
            raise DomainError("second point must leave the x-axis")

    @property
    def includes_infinity(self) -> bool:
        """Extended lines contain the added point of the plane by definition."""
        return True

    @property
    def slope(self) -> ExtendedRational:
        return self.through.y / (self.through.x - self.anchor.x)

    def contains(self, pt: PlanePoint) -> bool:
        """Exact membership; the infinite point belongs to every extended line.

        For vertices (a/b, 1/b) this is the determinant criterion
        |p t; q u| = |a t; b u| for the line through (p/q, 1/q) and (t/u, 0).
        """
        if pt.at_infinity:
            return True
        t, u = self.anchor.x.num, self.anchor.x.den
        p, q = self.through.x.num, self.through.x.den
        e, h = self.through.y.num, self.through.y.den
        a, b = pt.x.num, pt.x.den
        f, g = pt.y.num, pt.y.den
        return (p * u - t * q) * f * b * h == (a * u - t * b) * e * g * q

    def reflected(self) -> "ExtendedLine":
        """Mirror image across the x-axis: same anchor, negated slope."""
        return ExtendedLine(self.anchor, self.through.reflected())

    def coincides(self, other: "ExtendedLine") -> bool:
        """Geometric equality: same anchor and same slope."""
        return self.anchor == other.anchor and self.slope == other.slope


@dataclass(frozen=True)
class LineFamily:
    """One slot of a standard sequence opened up to an integer parameter."""

    base: ContinuedFraction
    slot: int
    shift: int                      # a0
    prefix: tuple[int, ...]         # a_1 .. a_{i-1}
    suffix: tuple[int, ...]         # a_{i+1} .. a_n
    prefix_matrix: IntMat2          # (r t; s u)
    suffix_column: tuple[int, int]  # (v, w)
    num_coeffs: tuple[int, int]     # N(m) = num_coeffs[0]*m + num_coeffs[1]
    den_coeffs: tuple[int, int]     # D(m) = den_coeffs[0]*m + den_coeffs[1]
    anchor_x: ExtendedRational      # gamma

    @property
    def degree(self) -> int:
        return self.base.degree

    def numerator_at(self, m: int) -> int:
        return self.num_coeffs[0] * m + self.num_coeffs[1]

    def denominator_at(self, m: int) -> int:
        return self.den_coeffs[0] * m + self.den_coeffs[1]

    def sequence_for(self, m: int) -> ContinuedFraction:
        """The base sequence with the slot replaced by m."""
        terms = list(self.base.terms)
        terms[self.slot] = m
        return ContinuedFraction(tuple(terms))

    def value(self, m: int) -> ExtendedRational:
        """The substituted continued fraction's value, infinity included."""
        d = self.denominator_at(m)
        return make_rational(self.numerator_at(m) + self.shift * d, d)

    def vertex(self, m: int) -> PlanePoint:
        return vertex_point(self.value(m))

    def side(self, m: int) -> Side:
        """Which of the two lines carries the vertex: the sign of D(m).

        Guaranteed PLUS for m >= 0 and MINUS for m <= -2; the sign at
        m = -1 depends on the family and is simply reported.
        """
        d = self.denominator_at(m)
        if d > 0:
            return Side.PLUS
        if d < 0:
            return Side.MINUS
        return Side.INFINITE

    def line_pair(self) -> tuple[ExtendedLine, ExtendedLine]:
        """The upward line through (gamma, 0) and the m=1 vertex, and its mirror."""
        anchor = PlanePoint(self.anchor_x, ZERO)
        plus = ExtendedLine(anchor, self.vertex(1))
        return plus, plus.reflected()

    def denominator_root(self) -> ExtendedRational:
        """The real root of D; in (-2, 0) for n >= 2 and (-1, 0) when i = 1.

        For n = 1 the root is exactly 0 (the one family shape whose m = 0
        member is infinite).
        """
        root = make_rational(-self.den_coeffs[1], self.den_coeffs[0])
        if self.degree >= 2:
            if not (ExtendedRational(-2) < root < ZERO):
                raise InvariantViolation(f"root {root} of D outside (-2, 0)")
            if self.slot == 1 and not (ExtendedRational(-1) < root):
                raise InvariantViolation(f"root {root} outside (-1, 0) with slot 1")
        return root

    def squared_distance_profile(
        self, count: int
    ) -> tuple[tuple[ExtendedRational | None, ...], tuple[ExtendedRational | None, ...]]:
        """Exact squared distances |vertex(m) - (gamma, 0)|^2 for m = 0..count
        and m = -1..-count; None marks infinite members.

        Monotone decrease on m >= 0 and on m <= -2 is re-checked here, since
        it is an identity: the squared distance is a constant over D(m)^2.
        """
        if count < 2:
            raise DomainError("need count >= 2")

        def sq(m: int) -> ExtendedRational | None:
            val = self.value(m)
            if val.is_infinite:
                return None
            dx = val - self.anchor_x
            dy = ExtendedRational(1, val.den)
            return dx * dx + dy * dy

        pos = tuple(sq(m) for m in range(0, count + 1))
        neg = tuple(sq(m) for m in range(-1, -count - 1, -1))
        for label, seq_ in (("m>=0", pos), ("m<=-2", neg[1:])):
            prev = None
            for d in seq_:
                if d is None:
                    prev = None
                    continue
                if prev is not None and not d < prev:
                    raise InvariantViolation(f"squared distances not decreasing on {label}")
                prev = d
        return pos, neg

    def shared_line_partner(self) -> "LineFamily | None":
        """The other family with the same line pair, when one exists.

        The anchor's x-value gamma has exactly two positive-term expansions;
        rewriting the prefix between them -- (..., c) with c >= 2 versus
        (..., c-1, 1) -- keeps the anchor and |slope| and swaps the roles of
        the two lines.  Families with an empty prefix or prefix (1,) have no
        partner with the same leading term.
        """
        if self.slot < 2:
            return None
        if self.prefix == (1,):
            return None
        if self.prefix[-1] >= 2:
            new_prefix = self.prefix[:-1] + (self.prefix[-1] - 1, 1)
            new_slot = self.slot + 1
        else:
            new_prefix = self.prefix[:-2] + (self.prefix[-2] + 1,)
            new_slot = self.slot - 1
        terms = (self.shift, *new_prefix, self.base.terms[self.slot], *self.suffix)
        return line_family(ContinuedFraction(terms), new_slot)


def line_family(seq: ContinuedFraction, slot: int) -> LineFamily:
    """Open slot i of a standard sequence (n >= 1, 1 <= i <= n)."""
    if not seq.is_standard:
        raise DomainError(f"{seq} is not standard")
    n = seq.degree
    if n < 1:
        raise DomainError("single-term sequences have no slot to open")
    if not 1 <= slot <= n:
        raise DomainError(f"slot {slot} out of range 1..{n}")
    terms = seq.terms
    pm = continuant_product(terms[1:slot])
    sm = continuant_product(terms[slot + 1:])
    v, w = sm.column(1)
    r, t, s, u = pm.a, pm.b, pm.c, pm.d
    if min(r, t, s, u, v, w) < 0:
        raise InvariantViolation("negative entry in a standard prefix/suffix product")
    if u * w <= 0:
        raise InvariantViolation("denominator form must be strictly increasing")
    return LineFamily(
        base=seq,
        slot=slot,
        shift=terms[0],
        prefix=terms[1:slot],
        suffix=terms[slot + 1:],
        prefix_matrix=pm,
        suffix_column=(v, w),
        num_coeffs=(t * w, r * w + t * v),
        den_coeffs=(u * w, s * w + u * v),
        anchor_x=make_rational(terms[0] * u + t, u),
    )
