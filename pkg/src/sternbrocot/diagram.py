"""Finite windows of the Stern-Brocot diagram, funnels, and vertex indices.

The diagram lives in the plane: the vertex for p/q is (p/q, 1/q), two
vertices are joined exactly when their values form a Farey pair, and every
Farey triple bounds a triangle.  Windows are generated by recursive mediant
subdivision between consecutive integers (never by scanning denominators),
which is complete because mediant denominators strictly increase.

The funnel of a non-integer rational alpha is the strip of triangles the
vertical ray {(alpha, t) : t > 0} passes through, ordered top to bottom;
it narrows onto the vertex of alpha.  Triangles that meet the ray only at
that bottom vertex are not part of the strip.  The strip decomposes into
fans pivoting at the convergents of the standard expansion of alpha, the
fan at the (j-1)-th convergent having a_j triangles; see A. Hatcher,
"Topology of Numbers", for this correspondence.

A vertex's index counts the funnel edges at that vertex which meet the
defining ray.  Crossings are counted strictly, with one boundary
convention: in a single-fan funnel (expansions [a0; a1]) the fan's closing
spoke runs from the pivot to the bottom vertex and terminates on the ray,
and it is counted.  That convention is what makes the index at each pivot
equal the fan size for every expansion length.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from .contfrac import ContinuedFraction, convergents, evaluate, standard_expansion
from .errors import DegenerateFunnelError, DomainError
from .rationals import ExtendedRational, PlanePoint, vertex_point

Triangle = tuple[ExtendedRational, ExtendedRational, ExtendedRational]
Edge = tuple[ExtendedRational, ExtendedRational]


@dataclass(frozen=True)
class Diagram:
    """All vertices p/q with lo <= p/q <= hi and q <= max_den, plus their
    Farey edges and the Farey triangles contained in the window."""

    lo: ExtendedRational
    hi: ExtendedRational
    max_den: int
    vertices: tuple[ExtendedRational, ...]
    edges: tuple[Edge, ...]
    triangles: tuple[Triangle, ...]

    def vertex_points(self) -> tuple[PlanePoint, ...]:
        return tuple(vertex_point(v) for v in self.vertices)


def _sorted_edge(a: ExtendedRational, b: ExtendedRational) -> Edge:
    return (a, b) if a < b else (b, a)


def build_diagram(lo: ExtendedRational, hi: ExtendedRational, max_den: int) -> Diagram:
    """Mediant-subdivide the integer intervals covering [lo, hi].

    Pruning at denominators above max_den loses nothing: every vertex's
    Stern-Brocot ancestors have strictly smaller denominators.
    """
    if lo.is_infinite or hi.is_infinite:
        raise DomainError("diagram windows must be finite")
    if not lo < hi:
        raise DomainError("empty window: need lo < hi")
    if max_den < 1:
        raise DomainError("max_den must be positive")

    def in_window(v: ExtendedRational) -> bool:
        return lo <= v <= hi

    vertices: set[ExtendedRational] = set()
    edges: set[Edge] = set()
    triangles: set[Triangle] = set()

    k_lo = lo.floor()
    k_hi = -((-hi).floor())  # ceil
    for k in range(k_lo, k_hi):
        a = ExtendedRational(k)
        b = ExtendedRational(k + 1)
        for v in (a, b):
            if in_window(v):
                vertices.add(v)
        if in_window(a) and in_window(b):
            edges.add((a, b))
        stack = [(a, b)]
        while stack:
            x, y = stack.pop()
            if y <= lo or hi <= x:
                continue
            m = ExtendedRational(x.num + y.num, x.den + y.den)
            if m.den > max_den:
                continue
            if in_window(m):
                vertices.add(m)
            if in_window(x) and in_window(m):
                edges.add(_sorted_edge(x, m))
            if in_window(m) and in_window(y):
                edges.add(_sorted_edge(m, y))
            if in_window(x) and in_window(m) and in_window(y):
                triangles.add((x, m, y))
            stack.append((x, m))
            stack.append((m, y))

    return Diagram(
        lo=lo,
        hi=hi,
        max_den=max_den,
        vertices=tuple(sorted(vertices)),
        edges=tuple(sorted(edges)),
        triangles=tuple(sorted(triangles)),
    )


@dataclass(frozen=True)
class Funnel:
    """Triangle strip over a non-integer rational, top to bottom.

    left_edge / right_edge list the boundary vertices on each side of the
    ray in descending height; the bottom vertex (alpha itself) belongs to
    both boundary paths and is kept out of the lists and the index map.
    """

    alpha: ExtendedRational
    expansion: ContinuedFraction
    convergents: tuple[ExtendedRational, ...]
    triangles: tuple[Triangle, ...]
    left_edge: tuple[ExtendedRational, ...]
    right_edge: tuple[ExtendedRational, ...]
    indices: Mapping[ExtendedRational, int] = field(compare=False)

    @property
    def tip(self) -> ExtendedRational:
        return self.alpha

    def edge_set(self) -> set[Edge]:
        out: set[Edge] = set()
        for x, m, y in self.triangles:
            out.add(_sorted_edge(x, m))
            out.add(_sorted_edge(m, y))
            out.add(_sorted_edge(x, y))
        return out


def funnel(alpha: ExtendedRational) -> Funnel:
    """Build the funnel of a finite non-integer rational.

    The strip is the Stern-Brocot search path for alpha, starting from the
    consecutive-integer pair around it; each step adds the triangle of the
    current pair and its mediant and descends toward alpha.
    """
    if alpha.is_infinite:
        raise DomainError("funnels are defined for finite rationals")
    if alpha.is_integer:
        raise DegenerateFunnelError(
            f"funnel of the integer {alpha} is degenerate: the defining ray "
            "hits the diagram vertex above it"
        )
    expansion = standard_expansion(alpha)
    a0 = expansion.terms[0]
    left = [ExtendedRational(a0)]
    right = [ExtendedRational(a0 + 1)]
    lo, hi = left[0], right[0]
    triangles: list[Triangle] = []
    while True:
        m = ExtendedRational(lo.num + hi.num, lo.den + hi.den)
        triangles.append((lo, m, hi))
        if m == alpha:
            break
        if alpha < m:
            hi = m
            right.append(m)
        else:
            lo = m
            left.append(m)

    indices: dict[ExtendedRational, int] = {v: 0 for v in left + right}
    edges: set[Edge] = set()
    for x, m, y in triangles:
        edges.add(_sorted_edge(x, m))
        edges.add(_sorted_edge(m, y))
        edges.add(_sorted_edge(x, y))
    for u, v in edges:
        if u < alpha < v:
            indices[u] += 1
            indices[v] += 1
    if expansion.degree == 1:
        # Single fan: its closing spoke joins the pivot to the bottom
        # vertex and ends on the ray; counted per the fan-size convention.
        indices[left[0]] += 1

    return Funnel(
        alpha=alpha,
        expansion=expansion,
        convergents=convergents(expansion),
        triangles=tuple(triangles),
        left_edge=tuple(left),
        right_edge=tuple(right),
        indices=MappingProxyType(indices),
    )


def vertex_index(f: Funnel, v: ExtendedRational) -> int:
    """Number of funnel edges at v meeting the defining ray.

    The bottom vertex reports 0: its spokes reach the ray only at the
    vertex itself.
    """
    if v == f.alpha:
        return 0
    try:
        return f.indices[v]
    except KeyError:
        raise DomainError(f"{v} is not a vertex of the funnel of {f.alpha}") from None


@dataclass(frozen=True)
class ClauseResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class FunnelTheoremReport:
    """Pass/fail record for the three funnel/continued-fraction clauses:

    (1) even-index convergents lie on the left edge, odd on the right;
    (2) the first pivot has index a_1 and the last has index a_n;
    (3) interior pivots c_j (0 < j < n-1) have index 1 + a_{j+1}.
    """

    sequence: ContinuedFraction
    alpha: ExtendedRational
    clauses: tuple[ClauseResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.clauses)

    def as_dict(self) -> dict:
        return {
            "sequence": str(self.sequence),
            "alpha": str(self.alpha),
            "clauses": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.clauses
            ],
        }


def verify_funnel_theorem(seq: ContinuedFraction) -> FunnelTheoremReport:
    """Check the funnel of evaluate(seq) against the expansion's terms.

    Any failed clause is an implementation bug, never a property of the
    input; the report carries the offending values verbatim.
    """
    if not seq.is_standard:
        raise DomainError(f"{seq} is not standard")
    if seq.degree < 1:
        raise DomainError("need n >= 1 (a non-integer value)")
    alpha = evaluate(seq)
    f = funnel(alpha)
    terms = seq.terms
    n = seq.degree
    cs = f.convergents
    left = set(f.left_edge)
    right = set(f.right_edge)

    side_misses = []
    for j in range(n):
        ok = cs[j] in left if j % 2 == 0 else cs[j] in right
        if not ok:
            want = "left" if j % 2 == 0 else "right"
            side_misses.append(f"c_{j}={cs[j]} not on {want} edge")
    clause1 = ClauseResult(
        "convergent sides",
        not side_misses,
        "; ".join(side_misses) or f"c_0..c_{n - 1} alternate left/right",
    )

    end_misses = []
    i0 = vertex_index(f, cs[0])
    if i0 != terms[1]:
        end_misses.append(f"index(c_0)={i0}, expected a_1={terms[1]}")
    ilast = vertex_index(f, cs[n - 1])
    if ilast != terms[n]:
        end_misses.append(f"index(c_{n - 1})={ilast}, expected a_n={terms[n]}")
    clause2 = ClauseResult(
        "end indices",
        not end_misses,
        "; ".join(end_misses) or f"index(c_0)={i0}, index(c_{n - 1})={ilast}",
    )

    mid_misses = []
    for j in range(1, n - 1):
        ij = vertex_index(f, cs[j])
        if ij != 1 + terms[j + 1]:
            mid_misses.append(f"index(c_{j})={ij}, expected 1+a_{j + 1}={1 + terms[j + 1]}")
    clause3 = ClauseResult(
        "interior indices",
        not mid_misses,
        "; ".join(mid_misses) or ("vacuous" if n < 3 else "all interior pivots match"),
    )

    return FunnelTheoremReport(seq, alpha, (clause1, clause2, clause3))
