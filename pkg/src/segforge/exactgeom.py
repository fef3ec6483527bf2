"""Exact rational geometry: points, predicates, and segment relations.

All coordinates are ``fractions.Fraction`` values and every predicate is
decided by integer determinant signs after clearing denominators -- no
floating point is ever consulted.  The hot paths (pairwise segment
classification during drawing validation) run on integer point tuples
produced by :func:`hom`, so callers that check thousands of pairs convert
once and reuse.

Conventions:
  * a segment is a pair of distinct Points of equal dimension,
  * a line is also given by two distinct points,
  * ``between(a, b, c)`` means a lies on the closed segment bc.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from enum import Enum

from .errors import DegenerateLine, DegenerateSegment, DimensionMismatch

Rational = Fraction


def rat(text: str) -> Fraction:
    """Parse a rational literal, either ``num`` or ``num/den``."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def rat_str(q) -> str:
    """Serialize a rational as ``num/den``, omitting a denominator of 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Point(tuple):
    """An exact rational point in 2D or 3D."""

    __slots__ = ()

    def __new__(cls, *coords):
        if len(coords) == 1 and isinstance(coords[0], (tuple, list, Point)):
            coords = tuple(coords[0])
        if len(coords) not in (2, 3):
            raise DimensionMismatch(f"points must be 2D or 3D, got {len(coords)} coordinates")
        return tuple.__new__(cls, tuple(Fraction(c) for c in coords))

    @property
    def dim(self) -> int:
        return len(self)

    @property
    def x(self) -> Fraction:
        return self[0]

    @property
    def y(self) -> Fraction:
        return self[1]

    @property
    def z(self) -> Fraction:
        return self[2]

    def __repr__(self):
        return "Point(" + ", ".join(rat_str(c) for c in self) + ")"


def _same_dim(*pts) -> int:
    d = pts[0].dim if isinstance(pts[0], Point) else len(pts[0])
    for p in pts[1:]:
        if len(p) != d:
            raise DimensionMismatch("mixed 2D/3D points")
    return d


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vscale(a, s):
    return tuple(x * s for x in a)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def cross3(a, b):
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def det2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def det3(a, b, c):
    return (a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]))


def sign(x) -> int:
    return (x > 0) - (x < 0)


# =============================================================================
# Integer point engine
# =============================================================================
#
# hom(p) maps a rational point to an integer tuple (x0..xk, w) with w > 0.
# All incidence predicates below are invariant under the scaling, so any
# family of points brought to a common w may be treated as plain integer
# points.  Relation tests first rescale their 3-4 input points to one w.

def hom(p):
    """Integer homogeneous form of a point: (x*w, y*w[, z*w], w)."""
    w = 1
    for c in p:
        w = w * (Fraction(c).denominator // gcd(w, Fraction(c).denominator))
    return tuple(Fraction(c).numerator * (w // Fraction(c).denominator) for c in p) + (w,)


def _common(*hpts):
    """Rescale homogeneous points to a shared denominator; returns int tuples."""
    w = 1
    for hp in hpts:
        w = lcm(w, hp[-1])
    out = []
    for hp in hpts:
        f = w // hp[-1]
        out.append(tuple(c * f for c in hp[:-1]))
    return out


def _orient2i(a, b, c) -> int:
    return sign((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))


def _collinear_i(a, b, c) -> bool:
    d = len(a)
    u = tuple(b[i] - a[i] for i in range(d))
    v = tuple(c[i] - a[i] for i in range(d))
    if d == 2:
        return det2(u, v) == 0
    return cross3(u, v) == (0, 0, 0)


def _between_i(a, b, c) -> bool:
    """a on the closed integer segment bc (collinearity assumed checked here)."""
    if not _collinear_i(a, b, c):
        return False
    return dot(vsub(b, a), vsub(c, a)) <= 0


def _strictly_inside_i(p, a, b) -> bool:
    """p in the open segment ab."""
    if p == a or p == b:
        return False
    return _collinear_i(p, a, b) and dot(vsub(a, p), vsub(b, p)) < 0


class SegmentRelation(Enum):
    DISJOINT = "disjoint"
    CROSS = "cross-at-interior-point"
    SHARE_ENDPOINT = "share-endpoint"
    ENDPOINT_ON_INTERIOR = "endpoint-on-interior"
    OVERLAP = "overlap"


def _axis_of(u):
    """Index of a nonzero coordinate of u (largest magnitude for stability)."""
    best, bi = -1, 0
    for i, c in enumerate(u):
        if abs(c) > best:
            best, bi = abs(c), i
    return bi


def _relate_collinear_1d(a, b, c, d, ax):
    """All four integer points on one line: interval logic along axis ax."""
    a1, a2 = sorted((a[ax], b[ax]))
    b1, b2 = sorted((c[ax], d[ax]))
    lo, hi = max(a1, b1), min(a2, b2)
    if lo > hi:
        return SegmentRelation.DISJOINT
    if lo == hi:
        return SegmentRelation.SHARE_ENDPOINT
    return SegmentRelation.OVERLAP


def _relate_2i(a, b, c, d):
    o1 = _orient2i(a, b, c)
    o2 = _orient2i(a, b, d)
    o3 = _orient2i(c, d, a)
    o4 = _orient2i(c, d, b)

    if o1 == 0 and o2 == 0:
        return _relate_collinear_1d(a, b, c, d, _axis_of(vsub(b, a)))

    if (o1 == o2 and o1 != 0) or (o3 == o4 and o3 != 0):
        return SegmentRelation.DISJOINT

    # Shared endpoints: non-collinear lines meet at most once, so any
    # coinciding endpoint is the whole intersection.
    if a == c or a == d or b == c or b == d:
        return SegmentRelation.SHARE_ENDPOINT

    # At most one orientation can vanish now.
    if o1 == 0:
        return SegmentRelation.ENDPOINT_ON_INTERIOR if _between_i(c, a, b) else SegmentRelation.DISJOINT
    if o2 == 0:
        return SegmentRelation.ENDPOINT_ON_INTERIOR if _between_i(d, a, b) else SegmentRelation.DISJOINT
    if o3 == 0:
        return SegmentRelation.ENDPOINT_ON_INTERIOR if _between_i(a, c, d) else SegmentRelation.DISJOINT
    if o4 == 0:
        return SegmentRelation.ENDPOINT_ON_INTERIOR if _between_i(b, c, d) else SegmentRelation.DISJOINT

    if o1 != o2 and o3 != o4:
        return SegmentRelation.CROSS
    return SegmentRelation.DISJOINT


def _relate_3i(a, b, c, d):
    u = vsub(b, a)
    v = vsub(d, c)
    w = vsub(c, a)
    if det3(u, v, w) != 0:
        return SegmentRelation.DISJOINT  # skew lines

    n = cross3(u, v)
    if n == (0, 0, 0):
        # parallel directions; same line only if c sits on line ab
        if cross3(u, w) != (0, 0, 0):
            return SegmentRelation.DISJOINT
        return _relate_collinear_1d(a, b, c, d, _axis_of(u))

    # coplanar, non-parallel: project out the dominant normal axis
    drop = _axis_of(n)
    keep = [i for i in range(3) if i != drop]
    p = lambda q: (q[keep[0]], q[keep[1]])
    return _relate_2i(p(a), p(b), p(c), p(d))


def relate_h(ha, hb, hc, hd) -> SegmentRelation:
    """Segment relation on homogeneous integer points (the fast entry point)."""
    a, b, c, d = _common(ha, hb, hc, hd)
    if a == b or c == d:
        raise DegenerateSegment("segment endpoints coincide")
    if len(a) == 2:
        return _relate_2i(a, b, c, d)
    return _relate_3i(a, b, c, d)


def relate_int(a, b, c, d) -> SegmentRelation:
    """Segment relation on plain integer points sharing one implicit scale."""
    if len(a) == 2:
        return _relate_2i(a, b, c, d)
    return _relate_3i(a, b, c, d)


def scale_to_integers(point_lists):
    """Rescale families of rational points to one common integer grid.

    Takes an iterable of point sequences and returns (scaled, W): the same
    nesting with every point as an integer tuple, all multiplied by W.
    """
    w = 1
    for seq in point_lists:
        for p in seq:
            for c in p:
                d = c.denominator
                w = w * (d // gcd(w, d))
    scaled = [tuple(tuple(int(c * w) for c in p) for p in seq) for seq in point_lists]
    return scaled, w


def point_inside_h(hp, ha, hb) -> bool:
    """Is point hp strictly interior to segment ha-hb (homogeneous ints)?"""
    p, a, b = _common(hp, ha, hb)
    return _strictly_inside_i(p, a, b)


def point_on_h(hp, ha, hb) -> bool:
    """Is point hp on the closed segment ha-hb?"""
    p, a, b = _common(hp, ha, hb)
    return _between_i(p, a, b)


# =============================================================================
# Public rational predicates
# =============================================================================

def collinear(a: Point, b: Point, c: Point) -> bool:
    _same_dim(a, b, c)
    ha, hb, hc = _common(hom(a), hom(b), hom(c))
    return _collinear_i(ha, hb, hc)


def orient2d(a: Point, b: Point, c: Point) -> int:
    """Sign of the signed area of triangle abc (2D only)."""
    if _same_dim(a, b, c) != 2:
        raise DimensionMismatch("orient2d needs 2D points")
    ha, hb, hc = _common(hom(a), hom(b), hom(c))
    return _orient2i(ha, hb, hc)


def between(a: Point, b: Point, c: Point) -> bool:
    """True iff a lies on the closed segment bc (endpoints included)."""
    _same_dim(a, b, c)
    ha, hb, hc = _common(hom(a), hom(b), hom(c))
    return _between_i(ha, hb, hc)


def relate(s1, s2) -> SegmentRelation:
    """Exact relation between two nondegenerate segments (2D or 3D)."""
    (p, q), (r, s) = s1, s2
    _same_dim(p, q, r, s)
    if p == q or r == s:
        raise DegenerateSegment("segment endpoints coincide")
    return relate_h(hom(p), hom(q), hom(r), hom(s))


def skew(l1, l2) -> bool:
    """True iff two 3D lines (each given by two distinct points) are non-coplanar."""
    (p, q), (r, s) = l1, l2
    if _same_dim(p, q, r, s) != 3:
        raise DimensionMismatch("skew is a 3D predicate")
    if p == q or r == s:
        raise DegenerateLine("line defined by coincident points")
    a, b, c, d = _common(hom(p), hom(q), hom(r), hom(s))
    return det3(vsub(b, a), vsub(d, c), vsub(c, a)) != 0


def primitive_direction(u):
    """Scale a nonzero rational vector to a canonical primitive integer tuple.

    The sign is normalized so the first nonzero entry is positive, which makes
    opposite directions map to the same key after a separate sign check.
    """
    den = 1
    for c in u:
        den = lcm(den, Fraction(c).denominator)
    ints = [Fraction(c).numerator * (den // Fraction(c).denominator) for c in u]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if g == 0:
        raise DegenerateLine("zero direction vector")
    ints = [c // g for c in ints]
    for c in ints:
        if c != 0:
            if c < 0:
                ints = [-x for x in ints]
            break
    return tuple(ints)


def line_key(p: Point, q: Point):
    """Canonical key identifying the unique line through p and q.

    Key = (primitive direction, foot of the perpendicular from the origin);
    both are exact rationals so equal lines always produce equal keys.
    """
    if p == q:
        raise DegenerateLine("line defined by coincident points")
    d = primitive_direction(vsub(q, p))
    dd = dot(d, d)
    t = Fraction(dot(p, d), dd)
    anchor = tuple(c - t * di for c, di in zip(p, d))
    return (d, anchor)


def line_param(key, p: Point) -> Fraction:
    """Parameter of point p along the line identified by ``key``."""
    d, anchor = key
    ax = _axis_of(d)
    return Fraction(p[ax] - anchor[ax], d[ax])


class Line2:
    """Exact 2D line a*x + b*y + c = 0 in canonical integer form."""

    __slots__ = ("a", "b", "c")

    def __init__(self, a, b, c):
        a, b, c = Fraction(a), Fraction(b), Fraction(c)
        if a == 0 and b == 0:
            raise DegenerateLine("0 = c is not a line")
        den = lcm(a.denominator, lcm(b.denominator, c.denominator))
        ai, bi, ci = (int(a * den), int(b * den), int(c * den))
        g = gcd(gcd(abs(ai), abs(bi)), abs(ci))
        ai, bi, ci = ai // g, bi // g, ci // g
        if ai < 0 or (ai == 0 and bi < 0):
            ai, bi, ci = -ai, -bi, -ci
        self.a, self.b, self.c = ai, bi, ci

    @classmethod
    def from_points(cls, p: Point, q: Point) -> "Line2":
        if len(p) != 2 or len(q) != 2:
            raise DimensionMismatch("Line2 needs 2D points")
        if p == q:
            raise DegenerateLine("line defined by coincident points")
        a = q[1] - p[1]
        b = p[0] - q[0]
        c = -(a * p[0] + b * p[1])
        return cls(a, b, c)

    def contains(self, p: Point) -> bool:
        return self.a * p[0] + self.b * p[1] + self.c == 0

    def is_parallel(self, other: "Line2") -> bool:
        return self.a * other.b - self.b * other.a == 0

    def intersect(self, other: "Line2"):
        """Intersection point, or None for parallel (including equal) lines."""
        det = self.a * other.b - self.b * other.a
        if det == 0:
            return None
        x = Fraction(self.b * other.c - self.c * other.b, det)
        y = Fraction(self.c * other.a - self.a * other.c, det)
        return Point(x, y)

    def __eq__(self, other):
        return isinstance(other, Line2) and (self.a, self.b, self.c) == (other.a, other.b, other.c)

    def __hash__(self):
        return hash((self.a, self.b, self.c))

    def __repr__(self):
        return f"Line2({self.a}, {self.b}, {self.c})"
