"""Polyline drawings, per-style validation, and segment decomposition.

A Drawing maps vertex ids to exact rational Points and each edge to a
(possibly empty) list of bend points.  Four styles are supported:

  planar2d   2D straight-line, crossing-free
  crossing2d 2D straight-line, crossings allowed (never overlaps, never a
             vertex in an edge interior)
  bend2d     2D polyline, crossing-free, bends allowed
  free3d     3D straight-line, crossing-free

``decompose`` partitions the drawn edge pieces into inclusionwise maximal
straight segments; ``audit`` checks the segment-ends counting identity
seg = 3n/2 - f + b = n/2 + t + b for cubic graphs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .errors import (DimensionMismatch, DrawingError, DrawingFormatError,
                     NotCubic, OverlapPresent, StructureMismatch)
from .exactgeom import (Point, SegmentRelation, _strictly_inside_i, hom,
                        line_key, line_param, point_inside_h, rat, rat_str,
                        relate_h, relate_int, scale_to_integers, vsub,
                        primitive_direction)
from .graphs import Graph


class DrawingStyle(Enum):
    PLANAR2D = "planar2d"
    CROSSING2D = "crossing2d"
    BEND2D = "bend2d"
    FREE3D = "free3d"

    @property
    def dim(self) -> int:
        return 3 if self is DrawingStyle.FREE3D else 2

    @property
    def allows_crossings(self) -> bool:
        return self is DrawingStyle.CROSSING2D

    @property
    def allows_bends(self) -> bool:
        return self is DrawingStyle.BEND2D


def _edge_key(u, v):
    return (u, v) if u < v else (v, u)


class Drawing:
    """Immutable placement of a graph: vertex points plus per-edge bend lists.

    Bend lists are stored for the sorted edge (u, v) running from u to v.
    Straight-angle bends are merged away on construction so that every stored
    bend is a genuine turn.
    """

    __slots__ = ("dim", "points", "routes", "_hpoints")

    def __init__(self, dim: int, points: dict, routes: dict):
        if dim not in (2, 3):
            raise DimensionMismatch(f"drawings are 2D or 3D, got dim={dim}")
        pts = {}
        for v, p in points.items():
            p = p if isinstance(p, Point) else Point(p)
            if p.dim != dim:
                raise DimensionMismatch(f"vertex {v} has a {p.dim}D point in a {dim}D drawing")
            pts[v] = p
        if len(set(pts.values())) != len(pts):
            raise DrawingError("vertex placement is not injective")
        rts = {}
        for e, bends in routes.items():
            u, v = e
            if u not in pts or v not in pts:
                raise DrawingError(f"edge {e} references an unplaced vertex")
            if v < u:
                u, v = v, u
                bends = tuple(reversed(tuple(bends)))
            chain = [pts[u]]
            for b in bends:
                b = b if isinstance(b, Point) else Point(b)
                if b.dim != dim:
                    raise DimensionMismatch(f"bend on edge {e} has wrong dimension")
                chain.append(b)
            chain.append(pts[v])
            for a, b in zip(chain, chain[1:]):
                if a == b:
                    raise DrawingError(f"edge {e} repeats consecutive polyline points")
            rts[(u, v)] = tuple(_normalize_bends(chain))
        self.dim = dim
        self.points = pts
        self.routes = rts
        self._hpoints = None

    # -- structure ------------------------------------------------------

    @property
    def vertices(self):
        return self.points.keys()

    @property
    def edges(self):
        return self.routes.keys()

    def bends_total(self) -> int:
        return sum(len(b) for b in self.routes.values())

    def pieces(self):
        """Yield (edge, index, P, Q) for every straight piece of every edge."""
        for e, bends in sorted(self.routes.items()):
            chain = (self.points[e[0]],) + bends + (self.points[e[1]],)
            for i in range(len(chain) - 1):
                yield e, i, chain[i], chain[i + 1]

    def hpoint(self, p: Point):
        if self._hpoints is None:
            self._hpoints = {}
        hp = self._hpoints.get(p)
        if hp is None:
            hp = hom(p)
            self._hpoints[p] = hp
        return hp

    def matches(self, g: Graph) -> bool:
        return set(self.vertices) == set(range(g.n)) and set(self.edges) == set(g.edges)

    def __repr__(self):
        return f"Drawing(dim={self.dim}, |V|={len(self.points)}, |E|={len(self.routes)})"


def _normalize_bends(chain):
    """Drop straight-angle bend points; keep only genuine turns."""
    out = [chain[0]]
    for i in range(1, len(chain) - 1):
        a, b, c = out[-1], chain[i], chain[i + 1]
        u = vsub(b, a)
        v = vsub(c, b)
        if primitive_direction(u) == primitive_direction(v) and _same_ray(u, v):
            continue
        out.append(b)
    return out[1:]


def _same_ray(u, v) -> bool:
    for x, y in zip(u, v):
        if x != 0 or y != 0:
            return (x > 0 and y > 0) or (x < 0 and y < 0) or (x == y == 0)
    return True


def straight_drawing(dim: int, points: dict, edges) -> Drawing:
    """Convenience constructor for straight-line drawings."""
    return Drawing(dim, points, {_edge_key(*e): () for e in edges})


# =============================================================================
# Validation
# =============================================================================

class ViolationKind(Enum):
    CROSSING = "crossing"
    OVERLAP = "overlap"
    VERTEX_ON_EDGE = "vertex-interior-to-edge"
    BEND_PRESENT = "bend-present"
    TOUCH = "touching"
    COINCIDENT = "coincident-points"
    WRONG_DIMENSION = "wrong-dimension"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    detail: str
    involved: tuple = ()

    def __str__(self):
        return f"{self.kind.value}: {self.detail}"


@dataclass
class ValidityReport:
    style: DrawingStyle
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self):
        if self.ok:
            return f"valid ({self.style.value})"
        lines = [f"INVALID ({self.style.value}): {len(self.violations)} violation(s)"]
        lines.extend("  " + str(v) for v in self.violations)
        return "\n".join(lines)


def validate(d: Drawing, g: Graph, style: DrawingStyle) -> ValidityReport:
    """Check d against g under the given style; lists every violation found."""
    if not d.matches(g):
        raise StructureMismatch("drawing does not cover exactly the graph's vertices and edges")
    report = ValidityReport(style)
    rep = report.violations

    if d.dim != style.dim:
        rep.append(Violation(ViolationKind.WRONG_DIMENSION,
                             f"{d.dim}D drawing under style {style.value}"))
        return report

    if not style.allows_bends and d.bends_total() > 0:
        for e, bends in sorted(d.routes.items()):
            if bends:
                rep.append(Violation(ViolationKind.BEND_PRESENT,
                                     f"edge {e} has {len(bends)} bend(s)", (e,)))

    rep.extend(geometry_violations(d, allow_crossings=style.allows_crossings))
    return report


def geometry_violations(d: Drawing, *, allow_crossings: bool) -> list:
    """Style-independent geometric conflicts of a drawing.

    Reports overlaps, vertices interior to edge pieces, touching polyline
    points, coincident junction points, and (unless allowed) crossings.
    All coordinates are rescaled once to a common integer grid and candidate
    piece pairs come from a sweep over bounding boxes, so the exact
    predicates only run on nearby pairs.
    """
    rep = []

    # Junction points: vertices are injective by construction; bends must not
    # collide with vertices or other bends.
    vertex_at = {d.points[v]: v for v in d.vertices}
    bend_at = {}
    for e, bends in sorted(d.routes.items()):
        for b in bends:
            if b in vertex_at:
                rep.append(Violation(ViolationKind.COINCIDENT,
                                     f"bend of {e} coincides with vertex {vertex_at[b]}", (e,)))
            elif b in bend_at and bend_at[b] != e:
                rep.append(Violation(ViolationKind.COINCIDENT,
                                     f"bends of {bend_at[b]} and {e} coincide", (bend_at[b], e)))
            else:
                bend_at[b] = e

    verts = sorted(d.vertices)
    vpts = [d.points[v] for v in verts]
    raw_pieces = list(d.pieces())
    scaled, _ = scale_to_integers([vpts] + [(p, q) for (_, _, p, q) in raw_pieces])
    ivert = scaled[0]
    pieces = []
    for (e, idx, p1, q1), (a, b) in zip(raw_pieces, scaled[1:]):
        lo = tuple(map(min, zip(a, b)))
        hi = tuple(map(max, zip(a, b)))
        pieces.append((lo[0], hi, lo, e, idx, a, b, (p1, q1)))
    pieces.sort(key=lambda t: t[0])
    dim = d.dim

    def boxes_disjoint(lo1, hi1, lo2, hi2):
        for ax in range(1, dim):
            if lo1[ax] > hi2[ax] or lo2[ax] > hi1[ax]:
                return True
        return False

    for i in range(len(pieces)):
        minx1, hi1, lo1, e1, i1, a1, b1, orig1 = pieces[i]
        for j in range(i + 1, len(pieces)):
            minx2, hi2, lo2, e2, i2, a2, b2, orig2 = pieces[j]
            if minx2 > hi1[0]:
                break
            if boxes_disjoint(lo1, hi1, lo2, hi2):
                continue
            if e1 == e2 and abs(i1 - i2) == 1:
                continue  # consecutive pieces of one edge share their bend
            r = relate_int(a1, b1, a2, b2)
            if r is SegmentRelation.DISJOINT:
                continue
            if r is SegmentRelation.OVERLAP:
                rep.append(Violation(ViolationKind.OVERLAP,
                                     f"pieces of {e1} and {e2} overlap", (e1, e2)))
            elif r is SegmentRelation.CROSS:
                if not allow_crossings:
                    rep.append(Violation(ViolationKind.CROSSING,
                                         f"edges {e1} and {e2} cross", (e1, e2)))
            elif r is SegmentRelation.ENDPOINT_ON_INTERIOR:
                kind, what = _touch_description(d, vertex_at, e1, orig1, e2, orig2)
                rep.append(Violation(kind, what, (e1, e2)))
            elif r is SegmentRelation.SHARE_ENDPOINT:
                shared = set(orig1) & set(orig2)
                ok = False
                if e1 != e2 and shared:
                    pt = next(iter(shared))
                    v = vertex_at.get(pt)
                    ok = v is not None and v in e1 and v in e2
                if not ok:
                    rep.append(Violation(ViolationKind.TOUCH,
                                         f"pieces of {e1} and {e2} touch at a non-shared-vertex point",
                                         (e1, e2)))

    # Vertices must not sit in the interior of any piece.
    order = sorted(range(len(verts)), key=lambda k: ivert[k][0])
    vxs = [ivert[k][0] for k in order]
    from bisect import bisect_left, bisect_right
    for minx1, hi1, lo1, e1, i1, a1, b1, _ in pieces:
        for k in range(bisect_left(vxs, lo1[0]), bisect_right(vxs, hi1[0])):
            p = ivert[order[k]]
            if all(lo1[ax] <= p[ax] <= hi1[ax] for ax in range(1, dim)):
                if _strictly_inside_i(p, a1, b1):
                    v = verts[order[k]]
                    rep.append(Violation(ViolationKind.VERTEX_ON_EDGE,
                                         f"vertex {v} lies interior to a piece of edge {e1}",
                                         (v, e1)))
    return rep


def _touch_description(d, vertex_at, e1, s1, e2, s2):
    """Explain an endpoint-on-interior contact: vertex or bend point involved?"""
    for pt in s1:
        v = vertex_at.get(pt)
        if v is not None and v not in e2:
            return (ViolationKind.VERTEX_ON_EDGE,
                    f"vertex {v} lies interior to a piece of edge {e2}")
    for pt in s2:
        v = vertex_at.get(pt)
        if v is not None and v not in e1:
            return (ViolationKind.VERTEX_ON_EDGE,
                    f"vertex {v} lies interior to a piece of edge {e1}")
    return (ViolationKind.TOUCH,
            f"a polyline point of {e1} or {e2} lies interior to the other edge")


# =============================================================================
# Segment decomposition
# =============================================================================

@dataclass(frozen=True)
class Segment:
    """One maximal straight segment: an ordered chain of edge pieces."""

    line: tuple          # canonical line key
    pieces: tuple        # ((edge, piece_index), ...) in chain order
    start: Point
    end: Point


@dataclass(frozen=True)
class SegmentDecomposition:
    segments: tuple

    @property
    def count(self) -> int:
        return len(self.segments)


def decompose(d: Drawing) -> SegmentDecomposition:
    """Partition the drawing into inclusionwise maximal straight segments.

    Pieces on a common line are chained whenever consecutive pieces share an
    endpoint; interior-overlapping pieces raise OverlapPresent.
    """
    by_line = {}
    for e, i, p, q in d.pieces():
        key = line_key(p, q)
        t1, t2 = line_param(key, p), line_param(key, q)
        lo, hi = (t1, t2) if t1 < t2 else (t2, t1)
        by_line.setdefault(key, []).append((lo, hi, (e, i), p if t1 < t2 else q, q if t1 < t2 else p))

    segments = []
    for key in sorted(by_line, key=lambda k: (k[0], k[1])):
        entries = sorted(by_line[key], key=lambda ent: (ent[0], ent[1]))
        chain = [entries[0]]
        for ent in entries[1:]:
            prev = chain[-1]
            if ent[0] < prev[1]:
                raise OverlapPresent(
                    f"pieces {prev[2]} and {ent[2]} overlap on a common line")
            if ent[0] == prev[1]:
                chain.append(ent)
            else:
                segments.append(_chain_to_segment(key, chain))
                chain = [ent]
        segments.append(_chain_to_segment(key, chain))
    return SegmentDecomposition(tuple(segments))


def _chain_to_segment(key, chain):
    return Segment(line=key,
                   pieces=tuple(ent[2] for ent in chain),
                   start=chain[0][3],
                   end=chain[-1][4])


# =============================================================================
# Counting identities
# =============================================================================

@dataclass(frozen=True)
class VertexAudit:
    flats: int
    tripods: int
    bends: int

    @property
    def f(self):
        return self.flats

    @property
    def t(self):
        return self.tripods

    @property
    def b(self):
        return self.bends


def vertex_is_flat(d: Drawing, g: Graph, v: int) -> bool:
    """Degree-3 vertex with two incident pieces leaving in opposite collinear
    directions (exactly one maximal segment ends there)."""
    pv = d.points[v]
    raw = []
    for w in g.adj[v]:
        e = _edge_key(v, w)
        chain = (d.points[e[0]],) + d.routes[e] + (d.points[e[1]],)
        nxt = chain[1] if e[0] == v else chain[-2]
        raw.append(vsub(nxt, pv))
    opposite = 0
    for i in range(len(raw)):
        for j in range(i + 1, len(raw)):
            if primitive_direction(raw[i]) == primitive_direction(raw[j]) and not _same_ray(raw[i], raw[j]):
                opposite += 1
    return opposite == 1


def audit(d: Drawing, g: Graph) -> VertexAudit:
    """Flat/tripod/bend counts for a cubic drawing, with the identity check
    seg = 3n/2 - f + b = n/2 + t + b enforced exactly."""
    if not g.is_cubic():
        raise NotCubic("the counting identity applies to cubic graphs")
    if not d.matches(g):
        raise StructureMismatch("drawing does not match the graph")
    f = sum(1 for v in range(g.n) if vertex_is_flat(d, g, v))
    t = g.n - f
    b = d.bends_total()
    seg = decompose(d).count
    lhs = Fraction(3 * g.n, 2) - f + b
    rhs = Fraction(g.n, 2) + t + b
    if seg != lhs or seg != rhs:
        raise DrawingError(
            f"segment-ends identity violated: seg={seg}, 3n/2-f+b={lhs}, n/2+t+b={rhs}")
    return VertexAudit(flats=f, tripods=t, bends=b)


def lower_bounds(g: Graph, planar_hint: bool = False) -> dict:
    """Named lower bounds: odd-degree count halved, and the cubic hull bound."""
    eta = g.odd_degree_count()
    out = {"odd_half": (eta + 1) // 2}
    if planar_hint and g.is_cubic():
        out["cubic_hull"] = g.n // 2 + 3
    return out


# =============================================================================
# File format and exports
# =============================================================================

def drawing_to_text(d: Drawing) -> str:
    """Canonical structured-text form; bit-exact round-trip with parse."""
    doc = {
        "dim": d.dim,
        "vertices": {str(v): [rat_str(c) for c in d.points[v]]
                     for v in sorted(d.vertices)},
        "edges": [{"u": e[0], "v": e[1],
                   "bends": [[rat_str(c) for c in b] for b in d.routes[e]]}
                  for e in sorted(d.edges)],
    }
    return json.dumps(doc, indent=1) + "\n"


def drawing_from_text(text: str) -> Drawing:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DrawingFormatError(f"not valid drawing text: {exc}") from exc
    try:
        dim = int(doc["dim"])
        points = {int(v): Point(*(rat(c) for c in coords))
                  for v, coords in doc["vertices"].items()}
        routes = {}
        for ed in doc["edges"]:
            e = _edge_key(int(ed["u"]), int(ed["v"]))
            routes[e] = tuple(Point(*(rat(c) for c in b)) for b in ed.get("bends", []))
    except (KeyError, TypeError, ValueError) as exc:
        raise DrawingFormatError(f"malformed drawing document: {exc}") from exc
    return Drawing(dim, points, routes)


def drawing_to_svg(d: Drawing, scale: float = 40.0, radius: float = 4.0) -> str:
    """SVG export for 2D drawings: one path per maximal segment, circles for vertices."""
    if d.dim != 2:
        raise DimensionMismatch("SVG export is 2D only")
    xs = [float(p[0]) for p in d.points.values()]
    ys = [float(p[1]) for p in d.points.values()]
    for e, bends in d.routes.items():
        xs.extend(float(b[0]) for b in bends)
        ys.extend(float(b[1]) for b in bends)
    pad = 1.0
    x0, y0, x1, y1 = min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad
    w, h = (x1 - x0) * scale, (y1 - y0) * scale

    def sx(p):
        return (float(p[0]) - x0) * scale

    def sy(p):
        return (y1 - float(p[1])) * scale  # flip y for screen coordinates

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:.1f}" height="{h:.1f}" '
             f'viewBox="0 0 {w:.1f} {h:.1f}">']
    dec = decompose(d)
    for seg in dec.segments:
        pts = [seg.start]
        for (e, i) in seg.pieces:
            chain = (d.points[e[0]],) + d.routes[e] + (d.points[e[1]],)
            a, b = chain[i], chain[i + 1]
            nxt = b if a == pts[-1] else a
            pts.append(nxt)
        path = " L ".join(f"{sx(p):.2f} {sy(p):.2f}" for p in pts)
        parts.append(f'<path d="M {path}" stroke="black" stroke-width="1.5" fill="none"/>')
    for v in sorted(d.vertices):
        p = d.points[v]
        parts.append(f'<circle cx="{sx(p):.2f}" cy="{sy(p):.2f}" r="{radius}" fill="#c33"/>')
        parts.append(f'<text x="{sx(p) + 5:.1f}" y="{sy(p) - 5:.1f}" font-size="10">{v}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def drawing_to_lines3d(d: Drawing) -> str:
    """Line-set text for 3D drawings: a point list then one polyline per edge."""
    if d.dim != 3:
        raise DimensionMismatch("lines3d export is 3D only")
    pts = []
    index = {}

    def idx(p):
        if p not in index:
            index[p] = len(pts)
            pts.append(p)
        return index[p]

    polys = []
    for e in sorted(d.edges):
        chain = (d.points[e[0]],) + d.routes[e] + (d.points[e[1]],)
        polys.append((e, [idx(p) for p in chain]))
    lines = [f"points {len(pts)}"]
    lines.extend(" ".join(rat_str(c) for c in p) for p in pts)
    lines.append(f"polylines {len(polys)}")
    lines.extend(f"{e[0]} {e[1]} : " + " ".join(map(str, ids)) for e, ids in polys)
    return "\n".join(lines) + "\n"
