"""Straight-line 3D drawings of biconnected cubic graphs on at most n+2
maximal segments.

Vertices are placed left to right along an st-numbering, vertex j getting
x-coordinate j (or j + 1/2^a when a line is extended past its last vertex to
a generic depth).  A set of support lines is maintained so that any two are
skew or meet at an already-placed vertex; every drawn edge lies on one of
these lines, which rules out crossings.  All genericity choices are
derandomized: candidate points come from a growing integer grid (or a
shrinking dyadic epsilon) and are accepted by exact integer predicates.

Whenever a line is extended through its last vertex, that vertex becomes
flat; the charging argument over the st-numbering then keeps the total
number of maximal segments at 3n/2 - flats <= n + 2.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .drawing import Drawing, straight_drawing
from .errors import InvalidInput, NotBiconnectedCubic
from .exactgeom import Point, det3, hom, primitive_direction, vsub
from .graphs import Graph, STNumbering, is_biconnected, st_numbering

F = Fraction


class _Line:
    """Support line: integer anchor (homogeneous) plus primitive direction,
    with its member vertices in placement order."""

    __slots__ = ("anchor_h", "direction", "members", "index")

    def __init__(self, index, anchor_pt, direction, members):
        self.index = index
        self.anchor_h = hom(anchor_pt)
        self.direction = direction  # primitive integer 3-tuple, positive x
        self.members = members      # vid list in increasing x order

    @property
    def last(self):
        return self.members[-1]

    def point_at_x(self, x, anchor_pt):
        t = (x - anchor_pt[0]) / F(self.direction[0])
        return Point(x, anchor_pt[1] + t * self.direction[1],
                     anchor_pt[2] + t * self.direction[2])


def _coplanar(d1, a1h, d2, a2h) -> bool:
    w1, w2 = a1h[-1], a2h[-1]
    diff = (a2h[0] * w1 - a1h[0] * w2,
            a2h[1] * w1 - a1h[1] * w2,
            a2h[2] * w1 - a1h[2] * w2)
    return det3(d1, d2, diff) == 0


def _on_line(ph, line: _Line) -> bool:
    w1, w2 = line.anchor_h[-1], ph[-1]
    diff = (ph[0] * w1 - line.anchor_h[0] * w2,
            ph[1] * w1 - line.anchor_h[1] * w2,
            ph[2] * w1 - line.anchor_h[2] * w2)
    d = line.direction
    return (diff[1] * d[2] - diff[2] * d[1] == 0
            and diff[2] * d[0] - diff[0] * d[2] == 0
            and diff[0] * d[1] - diff[1] * d[0] == 0)


def _collinear_int(ah, bh, ch) -> bool:
    wa, wb, wc = ah[-1], bh[-1], ch[-1]
    u = (bh[0] * wa - ah[0] * wb, bh[1] * wa - ah[1] * wb, bh[2] * wa - ah[2] * wb)
    v = (ch[0] * wa - ah[0] * wc, ch[1] * wa - ah[1] * wc, ch[2] * wa - ah[2] * wc)
    return (u[1] * v[2] - u[2] * v[1] == 0
            and u[2] * v[0] - u[0] * v[2] == 0
            and u[0] * v[1] - u[1] * v[0] == 0)


def _grid_candidates(limit):
    for r in range(limit):
        ring = []
        for y in range(-r, r + 1):
            for z in range(-r, r + 1):
                if max(abs(y), abs(z)) == r:
                    ring.append((y, z))
        yield from sorted(ring)


class _Builder:
    def __init__(self, g: Graph, order):
        self.g = g
        self.order = order
        self.pos = [0] * g.n
        for idx, v in enumerate(order):
            self.pos[v] = idx
        self.points = {}
        self.hpoints = {}
        self.lines = []
        self.anchor_pts = []          # rational anchor per line
        self.lines_through = {v: [] for v in range(g.n)}
        self.flat = [False] * g.n
        self.free_fallbacks = 0
        self.log = None

    # -- bookkeeping ------------------------------------------------------

    def place(self, v, pt):
        self.points[v] = pt
        self.hpoints[v] = hom(pt)

    def new_line(self, tail_vid, head_vid):
        a = self.points[tail_vid]
        b = self.points[head_vid]
        d = primitive_direction(vsub(b, a))
        if d[0] < 0:
            d = tuple(-c for c in d)
        line = _Line(len(self.lines), a, d, [tail_vid, head_vid])
        self.lines.append(line)
        self.anchor_pts.append(a)
        self.lines_through[tail_vid].append(line.index)
        self.lines_through[head_vid].append(line.index)
        if self.log is not None:
            self.log.append(("line", line.index, tail_vid, head_vid))
        return line

    def extend_line(self, line: _Line, new_vid):
        was_last = line.last
        line.members.append(new_vid)
        self.lines_through[new_vid].append(line.index)
        self.flat[was_last] = True
        if self.log is not None:
            self.log.append(("extend", line.index, was_last, new_vid))

    def last_line_of(self, v):
        """The earliest-created line on which v is the last member, or None."""
        for li in self.lines_through[v]:
            if self.lines[li].last == v:
                return self.lines[li]
        return None

    # -- exact acceptance tests --------------------------------------------

    def point_clear(self, ph, skip_line=None):
        for line in self.lines:
            if line is skip_line:
                continue
            if _on_line(ph, line):
                return False
        return True

    def new_line_ok(self, tail_vid, ph, extra_skip=None):
        """Would the line from tail_vid to the candidate point keep the
        invariant?  It must be skew to every line not through tail_vid (and
        not the optional extension line through the candidate itself), and
        must not pass through any other placed vertex."""
        th = self.hpoints[tail_vid]
        d = tuple(ph[i] * th[3] - th[i] * ph[3] for i in range(3))
        g0 = gcd(gcd(abs(d[0]), abs(d[1])), abs(d[2]))
        if g0 == 0:
            return False
        d = (d[0] // g0, d[1] // g0, d[2] // g0)
        through_tail = set(self.lines_through[tail_vid])
        for line in self.lines:
            if line.index in through_tail or line is extra_skip:
                continue
            if not _coplanar(d, th, line.direction, line.anchor_h):
                continue
            return False
        for w, wh in self.hpoints.items():
            if w != tail_vid and _collinear_int(th, ph, wh):
                return False
        return True

    # -- per-case placement -------------------------------------------------

    def place_on_extension(self, line: _Line, j, other_pred=None, max_a=80):
        """Extend ``line`` to x = j (or j + 1/2^a when a second new line from
        other_pred must be made generic); returns the placed point or None."""
        anchor = self.anchor_pts[line.index]
        if other_pred is None:
            return line.point_at_x(F(j), anchor)
        for a in range(1, max_a):
            pt = line.point_at_x(j + F(1, 2 ** a), anchor)
            ph = hom(pt)
            if self.new_line_ok(other_pred, ph, extra_skip=line):
                return pt
        return None

    def place_fresh(self, j, preds, grid=64):
        """A grid point in the plane x = j making every new line to ``preds``
        generic; None if the grid is exhausted."""
        for (y, z) in _grid_candidates(grid):
            pt = Point(j, y, z)
            ph = (j, y, z, 1)
            if not self.point_clear(ph):
                continue
            if all(self.new_line_ok(q, ph) for q in preds):
                return pt
        return None


def draw_bicubic_3d(g: Graph, numbering: STNumbering | None = None,
                    log: list | None = None, check_invariants: bool = False) -> Drawing:
    """Crossing-free straight-line 3D drawing of a biconnected cubic graph
    with at most n+2 maximal segments (and at least n/2 - 2 flat vertices)."""
    if not g.is_cubic() or not is_biconnected(g):
        raise NotBiconnectedCubic("need a biconnected cubic graph")
    if numbering is None:
        numbering = st_numbering(g)
    order = numbering.order
    b = _Builder(g, order)
    b.log = log
    n = g.n

    b.place(order[0], Point(1, 1, 1))
    for j in range(2, n + 1):
        v = order[j - 1]
        preds = [w for w in g.adj[v] if b.pos[w] < j - 1]
        if j < n and len(preds) == 1:
            _place_one_pred(b, v, preds[0], j)
        elif j < n and len(preds) == 2:
            _place_two_preds(b, v, preds, j)
        else:
            _place_final(b, v, preds, j)
        if check_invariants:
            _assert_invariant(b, j)

    d = straight_drawing(3, b.points, g.edges)
    d.free_fallbacks = b.free_fallbacks if hasattr(d, "free_fallbacks") else None
    return d


def _place_one_pred(b: _Builder, v, vi, j):
    line = b.last_line_of(vi)
    if line is not None:
        pt = b.place_on_extension(line, j)
        ph = hom(pt)
        if b.point_clear(ph, skip_line=line):
            b.place(v, pt)
            b.extend_line(line, v)
            if b.log is not None:
                b.log.append(("case", j, "I"))
            return
    pt = b.place_fresh(j, [vi])
    if pt is None:
        raise InvalidInput(f"grid exhausted at step {j}")
    b.place(v, pt)
    b.new_line(vi, v)
    if b.log is not None:
        b.log.append(("case", j, "II"))


def _place_two_preds(b: _Builder, v, preds, j):
    vi, vip = preds
    anchored = {q: b.last_line_of(q) for q in preds}
    flat_or_first = [q for q in preds if b.flat[q] or b.pos[q] == 0
                     or anchored[q] is None]
    if flat_or_first:
        # Case I': both edges get fresh generic lines
        pt = b.place_fresh(j, preds)
        if pt is None:
            raise InvalidInput(f"grid exhausted at step {j}")
        b.place(v, pt)
        b.new_line(vi, v)
        b.new_line(vip, v)
        if b.log is not None:
            b.log.append(("case", j, "I'"))
        return
    # Case II': extend one predecessor's line, preferring one that still has
    # an unplaced successor; the other predecessor contributes a new line.
    def has_later_successor(q):
        return any(b.pos[w] > j - 1 for w in b.g.adj[q])

    ordered = sorted(preds, key=lambda q: (not has_later_successor(q), q))
    for q in ordered:
        other = vip if q == vi else vi
        pt = b.place_on_extension(anchored[q], j, other_pred=other)
        if pt is not None:
            b.place(v, pt)
            b.extend_line(anchored[q], v)
            b.new_line(other, v)
            if b.log is not None:
                b.log.append(("case", j, "II'", q))
            return
    # degenerate fallback: free placement (costs one flat vertex)
    pt = b.place_fresh(j, preds)
    if pt is None:
        raise InvalidInput(f"grid exhausted at step {j}")
    b.free_fallbacks += 1
    b.place(v, pt)
    b.new_line(vi, v)
    b.new_line(vip, v)
    if b.log is not None:
        b.log.append(("case", j, "II'-fallback"))


def _place_final(b: _Builder, v, preds, j):
    pt = b.place_fresh(j, preds)
    if pt is None:
        raise InvalidInput("grid exhausted at the final vertex")
    b.place(v, pt)
    if b.log is not None:
        b.log.append(("case", j, "final"))


def _assert_invariant(b: _Builder, step):
    """Debug check: every line pair is skew or meets at a placed vertex."""
    placed = set(map(tuple, (b.points[w] for w in b.points)))
    for i1 in range(len(b.lines)):
        for i2 in range(i1 + 1, len(b.lines)):
            l1, l2 = b.lines[i1], b.lines[i2]
            if not _coplanar(l1.direction, l1.anchor_h, l2.direction, l2.anchor_h):
                continue
            common = set(l1.members) & set(l2.members)
            if common:
                continue
            raise AssertionError(
                f"step {step}: lines {i1} and {i2} coplanar without a shared vertex")
