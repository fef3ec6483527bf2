"""Explicit drawings with known segment counts for the graph families.

Each builder places the exact vertex ids produced by :mod:`segforge.families`
and is verified post-hoc in the test suite: the claimed counts below are
checked against ``decompose`` and the style validators, never trusted.

  gcat(k)        planar2d, exactly 5k-1 segments
  icycle(k)      planar2d, exactly 3k
  hcycle(k)      crossing2d, exactly 4k; free3d lift, exactly 5k
  k23gadgetf(k)  free3d, exactly 7k/2
  sfan(i)        free3d within t(i/2+3) + 3t-6; bend2d within t(i/2+3) + 3(3t-6)

The i-fan is drawn with two straight path runs meeting at the middle path
vertex, spokes paired into straight segments through the apex, plus one lone
apex spoke: i/2 + 3 segments in total.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from . import families
from .drawing import Drawing, DrawingStyle, decompose, geometry_violations
from .errors import BadParameter, InvalidWitness, OddFan, UnknownFamily
from .exactgeom import Point, SegmentRelation, dot, relate, vadd, vscale, vsub
from .families import FamilyId
from .graphs import Graph

F = Fraction


def s_family_2d_lower_bound(i: int) -> int:
    """(t_i - 3)(i - 3) with t_i = i^2 - 2i + 3: segments forced in the plane
    by the fans at the triangulation's inner vertices."""
    if i < 3:
        raise BadParameter("the fan family needs i >= 3")
    t = i * i - 2 * i + 3
    return (t - 3) * (i - 3)


@dataclass(frozen=True)
class Witness:
    drawing: Drawing
    style: DrawingStyle
    claimed: int
    exact: bool  # claimed is an exact segment count (else an upper bound)


def draw_witness(family, k: int, style: DrawingStyle | None = None) -> Witness:
    """Witness drawing for a family member, with its claimed segment count."""
    if isinstance(family, str):
        try:
            family = FamilyId(family.lower())
        except ValueError:
            raise UnknownFamily(f"unknown family {family!r}")
    if family is FamilyId.GCAT:
        _need(style, (DrawingStyle.PLANAR2D,))
        return Witness(_gcat_witness(k), DrawingStyle.PLANAR2D, 5 * k - 1, True)
    if family is FamilyId.ICYCLE:
        _need(style, (DrawingStyle.PLANAR2D,))
        return Witness(_icycle_witness(k), DrawingStyle.PLANAR2D, 3 * k, True)
    if family is FamilyId.HCYCLE:
        style = style or DrawingStyle.CROSSING2D
        _need(style, (DrawingStyle.CROSSING2D, DrawingStyle.FREE3D))
        flat = _hcycle_witness_2d(k)
        if style is DrawingStyle.CROSSING2D:
            return Witness(flat, style, 4 * k, True)
        return Witness(_hcycle_lift(flat, k), style, 5 * k, True)
    if family is FamilyId.K23GADGETF:
        _need(style, (DrawingStyle.FREE3D,))
        if k < 4 or k % 2:
            raise BadParameter("the K_{2,3}-gadget family needs even k >= 4")
        return Witness(_k23_witness(k), DrawingStyle.FREE3D, 7 * k // 2, True)
    if family is FamilyId.SFAN:
        style = style or DrawingStyle.FREE3D
        _need(style, (DrawingStyle.FREE3D, DrawingStyle.BEND2D))
        if k < 3:
            raise BadParameter("the fan family needs i >= 3")
        if k % 2:
            raise OddFan("fan drawings assume an even fan length")
        t = k * k - 2 * k + 3
        per_fan = k // 2 + 3
        if style is DrawingStyle.FREE3D:
            return Witness(_sfan_witness_3d(k), style, t * per_fan + 3 * t - 6, False)
        return Witness(_sfan_witness_bend(k), style, t * per_fan + 3 * (3 * t - 6), False)
    raise UnknownFamily(f"no witness drawing for family {family}")


def _need(style, allowed):
    if style is not None and style not in allowed:
        raise BadParameter(f"witness exists for styles {[s.value for s in allowed]}")


# =============================================================================
# The i-fan
# =============================================================================

def fan_graph(i: int) -> Graph:
    """Apex 0 joined to every vertex of the path 1..i+1."""
    edges = [(0, 1 + j) for j in range(i + 1)]
    edges += [(1 + j, 2 + j) for j in range(i)]
    return Graph(i + 2, edges)


def fan_local_points(i: int) -> dict:
    """Fan layout with apex at (0,-3): two path runs through the bend (0,0),
    spokes paired straight through the apex, one lone vertical spoke.

    Vertex v of fan_graph(i) maps to its 2D position; uses i/2+3 segments.
    """
    if i % 2:
        raise OddFan("fan drawings assume an even fan length")
    if i < 2:
        raise BadParameter("fans need i >= 2")
    half = i // 2
    pts = {0: Point(0, -3), 1 + half: Point(0, 0)}
    for j in range(half):
        t = F(half + 1 - j)
        pts[1 + j] = Point(-t, -2 * t)                    # left run, outward first
        s = 3 * t / (4 * t - 3)                           # partner across the apex
        pts[1 + half + 1 + j] = Point(s, -2 * s)
    return pts


def draw_fan(i: int, apex: Point, frame) -> Drawing:
    """Drawing of the i-fan with the apex at ``apex``; ``frame`` = (e1, e2)
    basis vectors (tuples matching the apex dimension) spanning its plane."""
    e1, e2 = frame
    pts = fan_local_points(i)

    def place(p):
        off1 = vscale(e1, p[0])
        off2 = vscale(e2, p[1] + 3)  # local apex (0,-3) lands on ``apex``
        return Point(vadd(vadd(apex, off1), off2))

    return Drawing(len(apex), {v: place(p) for v, p in pts.items()},
                   {e: () for e in fan_graph(i).edges})


# =============================================================================
# I_k: convex polygon sides swallowing the cycle, one corner cut per gadget
# =============================================================================

def _icycle_witness(k: int) -> Drawing:
    if k < 3:
        raise BadParameter("icycle needs k >= 3")
    g = families.generate(FamilyId.ICYCLE, k)
    corner = [Point(j, j * j) for j in range(k)]
    pts = {}
    for j in range(k):
        ids = families.icycle_ids(j)
        nxt = corner[(j + 1) % k]
        pts[ids["a"]] = corner[j]
        # side j carries a_j .. d_j .. c_{j+1} .. a_{j+1}
        d = Point(vadd(corner[j], vscale(vsub(nxt, corner[j]), F(1, 4))))
        pts[ids["d"]] = d
        c_next = Point(vadd(corner[j], vscale(vsub(nxt, corner[j]), F(3, 4))))
        pts[families.icycle_ids((j + 1) % k)["c"]] = c_next
    for j in range(k):
        ids = families.icycle_ids(j)
        c, d = pts[ids["c"]], pts[ids["d"]]
        pts[ids["b"]] = Point(vscale(vadd(c, d), F(1, 2)))
    return Drawing(2, pts, {e: () for e in g.edges})


# =============================================================================
# G_k: caterpillar spine with one collinear chain per gadget
# =============================================================================

def _gcat_local(sigma, direction, side):
    """Gadget points for a chain r-p-m running into ``sigma`` along
    ``direction``; q and s sit off-line on the ``side`` (+1/-1) of it.

    The off-line offset is scaled by 1/|direction|^2 so gadgets stay compact
    regardless of how steep their chain direction is."""
    normal = vscale(_rot90(direction), F(4 * side, dot(direction, direction)))

    def at(x, y):
        return Point(vadd(vadd(sigma, vscale(direction, F(x - 4, 4))),
                          vscale(normal, F(y, 4))))
    p = at(2, 0)
    q = at(1, 8)
    return {"r": at(0, 0), "p": p, "m": at(3, 0), "q": q,
            "s": Point(vscale(vadd(p, q), F(1, 2)))}


def _rot90(v):
    return (-v[1], v[0])


def _gcat_witness(k: int) -> Drawing:
    if k < 2:
        raise BadParameter("gcat needs k >= 2")
    g = families.generate(FamilyId.GCAT, k)
    pts = {}

    def set_gadget(gi, local):
        ids = families.gcat_ids(gi)
        for key, pt in local.items():
            pts[ids[key]] = pt

    if k == 2:
        # one straight chain r0-p0-m0-m1-p1-r1 on the x-axis
        set_gadget(0, _gcat_local(Point(4, 0), (F(4), F(0)), 1))
        set_gadget(1, _gcat_local(Point(4, 0), (F(-4), F(0)), -1))
        return Drawing(2, pts, {e: () for e in g.edges})

    sig = [Point(4 * j, (-1) ** j) for j in range(k - 2)]
    for j in range(k - 2):
        pts[families.gcat_spine(k, j)] = sig[j]

    def spine_dir(j):
        return vsub(sig[j + 1], sig[j])

    if k == 3:
        axis = (F(4), F(2))
        set_gadget(0, _gcat_local(sig[0], axis, 1))
        set_gadget(1, _gcat_local(sig[0], vscale(axis, -1), 1))
        set_gadget(2, _gcat_local(sig[0], (F(1), F(4)), 1))
        return Drawing(2, pts, {e: () for e in g.edges})

    # k >= 4: through-gadgets along spine edges, a merged pair at the far end,
    # and one extra gadget ending at sigma_0.
    for j in range(k - 3):
        d = spine_dir(j)
        gi = 0 if j == 0 else j + 1
        set_gadget(gi, _gcat_local(sig[j], d, (-1) ** j))
    # gadget 1 ends at sigma_0; the merged pair shares one line through the
    # last spine vertex (distinct slopes: equal frames at equal spine heights
    # would put their q-m edges on one common line)
    d1 = (F(2), F(9))
    set_gadget(1, _gcat_local(sig[0], d1, 1))
    last = sig[k - 3]
    dm = (F(2), F(11) if (k - 3) % 2 == 0 else F(-11))
    set_gadget(k - 2, _gcat_local(last, dm, 1))
    set_gadget(k - 1, _gcat_local(last, vscale(dm, -1), 1))
    return Drawing(2, pts, {e: () for e in g.edges})


# =============================================================================
# H_k: polygon of interlink chains, three internal chains per copy
# =============================================================================

def _hcycle_witness_2d(k: int) -> Drawing:
    """Convex polygon whose side i is one straight chain
    x1_i - y3_i - x3_{i+1} - y1_{i+1} - x1_{i+1}; at each corner a cut
    y1-x2-y3 and a spoke x1-y2-x2, plus the single edge x3-y2 whose
    crossings (the only ones) all involve y2."""
    if k < 3:
        raise BadParameter("hcycle needs k >= 3")
    g = families.generate(FamilyId.HCYCLE, k)
    corner = [Point(j, j * j) for j in range(k)]
    pts = {}
    for j in range(k):
        ids_next = families.hcycle_ids((j + 1) % k)
        along = vsub(corner[(j + 1) % k], corner[j])
        pts[families.hcycle_ids(j)["x1"]] = corner[j]
        pts[families.hcycle_ids(j)["y3"]] = Point(vadd(corner[j], vscale(along, F(1, 8))))
        pts[ids_next["x3"]] = Point(vadd(corner[j], vscale(along, F(6, 8))))
        pts[ids_next["y1"]] = Point(vadd(corner[j], vscale(along, F(7, 8))))
    for j in range(k):
        ids = families.hcycle_ids(j)
        x2 = Point(vscale(vadd(pts[ids["y1"]], pts[ids["y3"]]), F(1, 2)))
        pts[ids["x2"]] = x2
        pts[ids["y2"]] = Point(vscale(vadd(pts[ids["x1"]], x2), F(1, 2)))
    return Drawing(2, pts, {e: () for e in g.edges})


def _hcycle_lift(flat: Drawing, k: int) -> Drawing:
    """Raise each copy's y2 to z=1: removes every crossing and splits the
    spoke through y2, giving 5k segments."""
    pts3 = {}
    lifted = {families.hcycle_ids(j)["y2"] for j in range(k)}
    for v, p in flat.points.items():
        pts3[v] = Point(p[0], p[1], 1 if v in lifted else 0)
    return Drawing(3, pts3, {e: () for e in flat.routes})


# =============================================================================
# F_k: K_{2,3} gadgets on the corners of a convex polyhedron
# =============================================================================

def _k23_witness(k: int) -> Drawing:
    g = families.generate(FamilyId.K23GADGETF, k)
    base = families.k23_base(k)
    if k == 4:
        pos = {0: Point(0, 0, 0), 1: Point(4, 0, 0), 2: Point(0, 4, 0), 3: Point(0, 0, 4)}
    else:
        m = k // 2
        pos = {}
        for j in range(m):
            pos[j] = Point(4 * j, 4 * j * j, 0)
            pos[m + j] = Point(4 * j, 4 * j * j, 4)
    pts = {}
    for v in range(base.n):
        ids = families.k23_gadget_ids(v)
        pts[ids["w"]] = pos[v]
        for slot, nb in enumerate(base.adj[v]):
            c = Point(vadd(pos[v], vscale(vsub(pos[nb], pos[v]), F(1, 4))))
            pts[ids["c"][slot]] = c
        c0, c1 = pts[ids["c"][0]], pts[ids["c"][1]]
        pts[ids["u"]] = Point(vscale(vadd(c0, c1), F(1, 2)))
    return Drawing(3, pts, {e: () for e in g.edges})


# =============================================================================
# S_i: triangulation plus one fan per vertex
# =============================================================================

def tutte_layout(g: Graph, outer: tuple, span: int = 1 << 12) -> dict:
    """Exact barycentric layout with the face ``outer`` fixed as the outer
    triangle; every other vertex is placed at the average of its neighbors."""
    a, b, c = outer
    fixed = {a: Point(0, 0), b: Point(span, 0), c: Point(0, span)}
    free = [v for v in range(g.n) if v not in fixed]
    index = {v: i for i, v in enumerate(free)}
    nfree = len(free)
    rows = []
    for v in free:
        row = [F(0)] * (nfree + 2)
        row[index[v]] = F(g.degree(v))
        for w in g.adj[v]:
            if w in fixed:
                row[nfree] += fixed[w][0]
                row[nfree + 1] += fixed[w][1]
            else:
                row[index[w]] -= 1
        rows.append(row)
    _solve_inplace(rows, nfree)
    return {**fixed, **{v: Point(rows[index[v]][nfree], rows[index[v]][nfree + 1])
                        for v in free}}


def _solve_inplace(rows, n):
    for col in range(n):
        piv = next(r for r in range(col, n) if rows[r][col] != 0)
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]


def _tgrid_outer_face(i: int) -> tuple:
    _, front_id, _ = families.tgrid_index(i)
    return (front_id((0, 0)), front_id((1, 0)), front_id((1, 1)))


def _tgrid_layout(i: int, base: Graph) -> dict:
    """Planar straight-line layout of tgrid(i) with small coordinates.

    The exact barycentric solution carries denominators the size of a matrix
    determinant, which poisons every downstream predicate; snapping to a
    dyadic grid and re-validating keeps the layout exact but cheap.
    """
    exact = tutte_layout(base, _tgrid_outer_face(i))
    for prec in (16, 24, 40, 64):
        snapped = {v: Point(F(round(p[0] * (1 << prec)), 1 << prec),
                            F(round(p[1] * (1 << prec)), 1 << prec))
                   for v, p in exact.items()}
        if len(set(snapped.values())) < len(snapped):
            continue
        d = Drawing(2, snapped, {e: () for e in base.edges})
        if not geometry_violations(d, allow_crossings=False):
            return snapped
    return exact


def dist2_point_segment(p, a, b) -> Fraction:
    ab = vsub(b, a)
    denom = dot(ab, ab)
    t = F(dot(vsub(p, a), ab), denom)
    t = min(max(t, F(0)), F(1))
    d = vsub(p, vadd(a, vscale(ab, t)))
    return dot(d, d)


def rational_below_sqrt(q: Fraction) -> Fraction:
    """Some positive rational r with r*r < q (within a factor ~2 of sqrt q)."""
    if q <= 0:
        raise ValueError("need a positive bound")
    r = F(isqrt(q.numerator * q.denominator), q.denominator)
    if r == 0:
        r = q / 2 if q < 2 else F(1)
    while r * r >= q:
        r /= 2
    return r


_DIRECTIONS_2D = [(1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (2, 1), (1, -2),
                  (2, -1), (1, 3), (3, 1), (1, -3), (3, -1), (2, 3), (3, 2)]


def _clearance2(v_pt, skip_edges, layout_pieces) -> Fraction:
    """Min squared distance from v_pt to pieces not incident to the vertex."""
    best = None
    for (e, a, b) in layout_pieces:
        if e in skip_edges:
            continue
        d2 = dist2_point_segment(v_pt, a, b)
        if best is None or d2 < best:
            best = d2
    return best


def _sfan_witness_3d(i: int) -> Drawing:
    g = families.generate(FamilyId.SFAN, i)
    base = families.generate(FamilyId.TGRID, i)
    t = base.n
    flat = _tgrid_layout(i, base)
    pts = {v: Point(p[0], p[1], 0) for v, p in flat.items()}
    base_pieces = [(e, pts[e[0]], pts[e[1]]) for e in base.sorted_edges()]

    placements = dict(pts)
    for v in range(t):
        incident = {e for e in base.edges if v in e}
        clear2 = _clearance2(pts[v], incident, base_pieces)
        min_len2 = min(dot(vsub(pts[w], pts[v]), vsub(pts[w], pts[v]))
                       for w in base.adj[v])
        r = rational_below_sqrt(min(clear2, min_len2) / 9)
        # horizontal in-plane direction not parallel to any incident edge
        for cand in _DIRECTIONS_2D:
            if all((flat[w][0] - flat[v][0]) * cand[1]
                   - (flat[w][1] - flat[v][1]) * cand[0] != 0 for w in base.adj[v]):
                e1 = cand
                break
        local = fan_local_points(i)
        reach2 = max(dot(vsub(p, local[0]), vsub(p, local[0])) for p in local.values())
        alpha = rational_below_sqrt(r * r / reach2)
        b1 = (alpha * e1[0], alpha * e1[1], F(0))
        b2 = (F(0), F(0), alpha)
        for fv, p in local.items():
            if fv == 0:
                continue
            off = vadd(vscale(b1, p[0]), vscale(b2, p[1] + 3))
            placements[families.sfan_path_id(i, t, v, fv - 1)] = Point(vadd(pts[v], off))
    return Drawing(3, placements, {e: () for e in g.edges})


# square frames: identity plus exact rational rotations, as row pairs
_SQUARE_FRAMES = [((F(1), F(0)), (F(0), F(1))),
                  ((F(3, 5), F(4, 5)), (F(-4, 5), F(3, 5))),
                  ((F(5, 13), F(12, 13)), (F(-12, 13), F(5, 13))),
                  ((F(8, 17), F(15, 17)), (F(-15, 17), F(8, 17)))]


def _frame_coords(frame, vec):
    (f1, f2) = frame
    return (dot(f1, vec), dot(f2, vec))


def _from_frame(frame, xy):
    (f1, f2) = frame
    return (f1[0] * xy[0] + f2[0] * xy[1], f1[1] * xy[0] + f2[1] * xy[1])


def _pick_corner(v, flat, adj, h):
    """A square rotation and corner for vertex v with the corner strictly off
    every incident edge line (so stub directions are genuinely distinct)."""
    dirs = [vsub(flat[w], flat[v]) for w in adj]
    for frame in _SQUARE_FRAMES:
        for sx, sy in ((-1, 1), (-1, -1), (1, -1), (1, 1)):
            corner = _from_frame(frame, (sx * h, sy * h))
            if all(corner[0] * d[1] - corner[1] * d[0] != 0 for d in dirs):
                return frame, (sx, sy)
    raise InvalidWitness(f"no usable square corner at vertex {v}")


def _collinear_through(p, a, b):
    return (a[0] - p[0]) * (b[1] - p[1]) - (a[1] - p[1]) * (b[0] - p[0]) == 0


def _fan_ok(fan_pts, corner, local_pieces):
    """Fan pieces may meet the local stubs/middles only at the shared corner."""
    fg = fan_graph(len(fan_pts) - 2)
    for (a, b) in fg.sorted_edges():
        p, q = fan_pts[a], fan_pts[b]
        for (r, s) in local_pieces:
            rel = relate((p, q), (r, s))
            if rel is SegmentRelation.DISJOINT:
                continue
            if rel is SegmentRelation.SHARE_ENDPOINT and corner in (p, q) \
                    and corner in (r, s) and ({p, q} & {r, s}) == {corner}:
                continue
            return False
    return True


# Twelve exact unit vectors at roughly 30-degree spacing (Pythagorean
# parametrization), the rational stand-in for the paper's disk boundary.
_GON12 = [(F(1), F(0)), (F(15, 17), F(8, 17)), (F(33, 65), F(56, 65)),
          (F(0), F(1)), (F(-33, 65), F(56, 65)), (F(-15, 17), F(8, 17)),
          (F(-1), F(0)), (F(-15, 17), F(-8, 17)), (F(-33, 65), F(-56, 65)),
          (F(0), F(-1)), (F(33, 65), F(-56, 65)), (F(15, 17), F(-8, 17))]

# rotations applied to the whole 12-gon when a vertex needs another phase
_GON_ROTS = [(F(1), F(0)), (F(24, 25), F(7, 25)), (F(12, 13), F(5, 13)),
             (F(4, 5), F(3, 5)), (F(40, 41), F(9, 41)), (F(60, 61), F(11, 61))]

# rotation by about -106.3 degrees centering the fan arc on the +x axis
_FAN_CENTERING = ((F(-7, 25), F(24, 25)), (F(-24, 25), F(-7, 25)))


def _rot(rc, vec):
    c, s = rc
    return (c * vec[0] - s * vec[1], s * vec[0] + c * vec[1])


def _ray_polygon_exit(center, corners, d):
    """Exit point of the ray center + t*d (t > 0) on a convex polygon."""
    n = len(corners)
    for j in range(n):
        a, b = corners[j], corners[(j + 1) % n]
        da, db = vsub(a, center), vsub(b, center)
        ca = da[0] * d[1] - da[1] * d[0]
        cb = db[0] * d[1] - db[1] * d[0]
        if not (ca >= 0 > cb or ca > 0 >= cb):
            continue
        ab = vsub(b, a)
        den = d[0] * ab[1] - d[1] * ab[0]
        if den == 0:
            continue
        am = vsub(a, center)
        tt = F(am[0] * ab[1] - am[1] * ab[0], den)
        if tt > 0:
            return Point(center[0] + tt * d[0], center[1] + tt * d[1]), j
    raise InvalidWitness("ray does not leave the polygon")


def _sfan_witness_bend(i: int) -> Drawing:
    """Bend-style drawing following the disk trick: each vertex's edges bend
    exactly on a small convex 12-gon around it (so every shortened edge stays
    on its own line, strictly outside all 12-gons), the vertex moves to a
    12-gon corner whose two sides carry no exits, and its fan occupies the
    210-degree free wedge at that corner."""
    g = families.generate(FamilyId.SFAN, i)
    base = families.generate(FamilyId.TGRID, i)
    t = base.n
    flat = _tgrid_layout(i, base)
    base_pieces = [(e, flat[e[0]], flat[e[1]]) for e in base.sorted_edges()]

    radius = {}
    for v in range(t):
        incident = {e for e in base.edges if v in e}
        clear2 = _clearance2(flat[v], incident, base_pieces)
        min_len2 = min(dot(vsub(flat[w], flat[v]), vsub(flat[w], flat[v]))
                       for w in base.adj[v])
        radius[v] = rational_below_sqrt(min(clear2, min_len2 / 4) / 16)

    placements, exit_pt, out_dir = {}, {}, {}
    for v in range(t):
        h = radius[v]
        adj = sorted(base.adj[v])
        dirs = {w: vsub(flat[w], flat[v]) for w in adj}
        pick = None
        for rot in _GON_ROTS:
            corners = [Point(vadd(flat[v], vscale(_rot(rot, u), h))) for u in _GON12]
            exits, sides = {}, {}
            for w in adj:
                exits[w], sides[w] = _ray_polygon_exit(flat[v], corners, dirs[w])
            used = set(sides.values())
            for j in range(12):
                if j in used or (j - 1) % 12 in used:
                    continue
                c = corners[j]
                stubs = [(c, exits[w]) for w in adj]
                ok = all(not _collinear_through(c, stubs[a][1], stubs[b][1])
                         for a in range(len(stubs)) for b in range(a + 1, len(stubs)))
                if not ok:
                    continue
                for (sc, sb) in stubs:
                    for w2 in adj:
                        rel = relate((sc, sb), (exits[w2], flat[w2]))
                        if rel is SegmentRelation.DISJOINT:
                            continue
                        if rel is SegmentRelation.SHARE_ENDPOINT and sb == exits[w2]:
                            continue
                        ok = False
                        break
                    if not ok:
                        break
                if ok:
                    pick = (c, exits, _rot(rot, _GON12[j]))
                    break
            if pick:
                break
        if pick is None:
            raise InvalidWitness(f"no usable 12-gon corner at vertex {v}")
        placements[v], exit_pt[v], out_dir[v] = pick

    routes = {}
    for (u, v) in base.sorted_edges():
        routes[(u, v)] = (exit_pt[u][v], exit_pt[v][u])

    # fans: squashed, centered on the corner's outward direction, verified
    # exactly against nearby pieces with shrink retries
    all_pieces = []
    for e, bends in routes.items():
        chain = (placements[e[0]],) + bends + (placements[e[1]],)
        for apt, bpt in zip(chain, chain[1:]):
            all_pieces.append((e, apt, bpt))
    local = fan_local_points(i)
    squash = F(1, 6)
    reach2 = max((p[0] - local[0][0]) ** 2 + (squash * (p[1] - local[0][1])) ** 2
                 for p in local.values())
    for v in range(t):
        vpt = placements[v]
        h = radius[v]
        clear2 = min(dist2_point_segment(vpt, a, b)
                     for (_, a, b) in all_pieces if a != vpt and b != vpt)
        lim2 = min(clear2, h * h)
        alpha0 = rational_below_sqrt(lim2 / reach2 / 4)
        near = [(a, b) for (_, a, b) in all_pieces
                if dist2_point_segment(vpt, a, b) <= 16 * h * h]
        u = out_dir[v]
        align = ((u[0], -u[1]), (u[1], u[0]))
        placed = None
        alpha = alpha0
        for _ in range(8):
            fan_pts = {}
            for fv, p in local.items():
                xy = (p[0], squash * (p[1] + 3))
                xy = _rot((_FAN_CENTERING[0][0], _FAN_CENTERING[1][0]), xy)
                xy = _rot((align[0][0], align[1][0]), xy)
                fan_pts[fv] = Point(vpt[0] + alpha * xy[0], vpt[1] + alpha * xy[1])
            if _fan_ok(fan_pts, vpt, near):
                placed = fan_pts
                break
            alpha /= 4
        if placed is None:
            raise InvalidWitness(f"no fan placement at vertex {v}")
        for fv, p in placed.items():
            if fv != 0:
                placements[families.sfan_path_id(i, t, v, fv - 1)] = p
    routes.update({e: () for e in g.edges if e not in routes})
    return Drawing(2, placements, routes)
