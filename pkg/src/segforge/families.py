"""Generators for the graph families with known segment-count behavior.

Vertex id conventions are fixed and documented per family because the witness
drawings place vertices by id:

  k4prime       K4 on 0..3 with edge (0,1) subdivided by 4
  k33me         K_{3,3} on parts {0,1,2} / {3,4,5} minus edge (2,5)
  k4me          K4 minus edge (2,3)
  gcat(k)       gadget g: p=5g, q=5g+1, r=5g+2, s=5g+3, m=5g+4 (m is the
                subdivision vertex); spine vertices 5k..6k-3
  hcycle(k)     copy i: x1,x2,x3 = 6i..6i+2, y1,y2,y3 = 6i+3..6i+5; all
                (x_a, y_b) edges except (x3, y3); link y3_i -- x3_{i+1}
  icycle(k)     copy i: a,b,c,d = 4i..4i+3; K4 minus (c,d); link d_i -- c_{i+1}
  k23gadgetf(k) base = K4 (k=4) or the circular ladder on k vertices (even
                k >= 6); base vertex v: w=5v, u=5v+1, c-slots 5v+2+j where j
                indexes v's sorted base neighbors; base edge (v,v') becomes
                c(v, slot of v') -- c(v', slot of v)
  tgrid(i)      two triangular grids of side i-1 glued along their boundary
  sfan(i)       tgrid(i) plus a fan at every vertex: apex v gets path vertices
                t + v*(i+1) + j for j = 0..i, all joined to v
  tailgadget(l) tail gadget applied to the arrangement graph of l generic lines
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction

import networkx as nx

from .errors import (BadParameter, NotArrangementShaped, NotSimpleArrangement,
                     UnknownFamily)
from .exactgeom import Line2, Point
from .graphs import Graph


class FamilyId(Enum):
    K4PRIME = "k4prime"
    GCAT = "gcat"
    K33ME = "k33me"
    HCYCLE = "hcycle"
    K4ME = "k4me"
    ICYCLE = "icycle"
    K23GADGETF = "k23gadgetf"
    TGRID = "tgrid"
    SFAN = "sfan"
    TAILGADGET = "tailgadget"


_PARAM_RANGES = {
    FamilyId.GCAT: (2, "k >= 2"),
    FamilyId.HCYCLE: (3, "k >= 3"),
    FamilyId.ICYCLE: (3, "k >= 3"),
    FamilyId.K23GADGETF: (4, "even k >= 4"),
    FamilyId.TGRID: (3, "i >= 3"),
    FamilyId.SFAN: (3, "i >= 3"),
    FamilyId.TAILGADGET: (3, "l >= 3"),
}


def generate(family, param: int | None = None) -> Graph:
    """Build a family member; BadParameter for out-of-range parameters."""
    if isinstance(family, str):
        try:
            family = FamilyId(family.lower())
        except ValueError:
            raise UnknownFamily(f"unknown family {family!r}")
    if family in _PARAM_RANGES:
        least, desc = _PARAM_RANGES[family]
        if param is None or param < least:
            raise BadParameter(f"{family.value} needs {desc}, got {param}")
        if family is FamilyId.K23GADGETF and param % 2 == 1:
            raise BadParameter(f"{family.value} needs {desc}, got {param}")
    builder = {
        FamilyId.K4PRIME: lambda p: _k4_subdivided(),
        FamilyId.K33ME: lambda p: _k33_minus_edge(),
        FamilyId.K4ME: lambda p: _k4_minus_edge(),
        FamilyId.GCAT: _gcat,
        FamilyId.HCYCLE: _hcycle,
        FamilyId.ICYCLE: _icycle,
        FamilyId.K23GADGETF: _k23_gadget_family,
        FamilyId.TGRID: _tgrid,
        FamilyId.SFAN: _sfan,
        FamilyId.TAILGADGET: lambda p: tail_gadget(arrangement_graph(tangent_lines(p)))[0],
    }[family]
    return builder(param)


def _k4_subdivided() -> Graph:
    return Graph(5, [(0, 4), (1, 4), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def _k33_minus_edge() -> Graph:
    edges = [(a, b) for a in (0, 1, 2) for b in (3, 4, 5) if (a, b) != (2, 5)]
    return Graph(6, edges)


def _k4_minus_edge() -> Graph:
    return Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def gcat_ids(g: int) -> dict:
    return {"p": 5 * g, "q": 5 * g + 1, "r": 5 * g + 2, "s": 5 * g + 3, "m": 5 * g + 4}


def gcat_spine(k: int, j: int) -> int:
    return 5 * k + j


def gcat_attachments(k: int) -> list:
    """attachment[j] = list of gadget indices hanging off spine vertex j."""
    if k == 2:
        return []
    if k == 3:
        return [[0, 1, 2]]
    att = [[] for _ in range(k - 2)]
    att[0] = [0, 1]
    for j in range(1, k - 3):
        att[j] = [j + 1]
    att[k - 3] = [k - 2, k - 1]
    return att


def _gcat(k: int) -> Graph:
    edges = []
    for g in range(k):
        v = gcat_ids(g)
        edges += [(v["p"], v["m"]), (v["q"], v["m"]), (v["p"], v["r"]),
                  (v["p"], v["s"]), (v["q"], v["r"]), (v["q"], v["s"]),
                  (v["r"], v["s"])]
    if k == 2:
        edges.append((gcat_ids(0)["m"], gcat_ids(1)["m"]))
    else:
        for j in range(k - 3):
            edges.append((gcat_spine(k, j), gcat_spine(k, j + 1)))
        for j, gs in enumerate(gcat_attachments(k)):
            for g in gs:
                edges.append((gcat_spine(k, j), gcat_ids(g)["m"]))
    n = 6 * k - 2 if k >= 3 else 10
    return Graph(n, edges)


def hcycle_ids(i: int) -> dict:
    b = 6 * i
    return {"x1": b, "x2": b + 1, "x3": b + 2, "y1": b + 3, "y2": b + 4, "y3": b + 5}


def _hcycle(k: int) -> Graph:
    edges = []
    for i in range(k):
        v = hcycle_ids(i)
        for xa in ("x1", "x2", "x3"):
            for yb in ("y1", "y2", "y3"):
                if (xa, yb) != ("x3", "y3"):
                    edges.append((v[xa], v[yb]))
        edges.append((v["y3"], hcycle_ids((i + 1) % k)["x3"]))
    return Graph(6 * k, edges)


def icycle_ids(i: int) -> dict:
    b = 4 * i
    return {"a": b, "b": b + 1, "c": b + 2, "d": b + 3}


def _icycle(k: int) -> Graph:
    edges = []
    for i in range(k):
        v = icycle_ids(i)
        edges += [(v["a"], v["b"]), (v["a"], v["c"]), (v["a"], v["d"]),
                  (v["b"], v["c"]), (v["b"], v["d"])]
        edges.append((v["d"], icycle_ids((i + 1) % k)["c"]))
    return Graph(4 * k, edges)


def circular_ladder(k: int) -> Graph:
    """Prism over a (k/2)-gon: cubic and triconnected for even k >= 6."""
    if k < 6 or k % 2:
        raise BadParameter("circular ladder needs even k >= 6")
    m = k // 2
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges += [(m + i, m + (i + 1) % m) for i in range(m)]
    edges += [(i, m + i) for i in range(m)]
    return Graph(k, edges)


def k23_base(k: int) -> Graph:
    if k == 4:
        return Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    return circular_ladder(k)


def k23_gadget_ids(v: int) -> dict:
    return {"w": 5 * v, "u": 5 * v + 1, "c": (5 * v + 2, 5 * v + 3, 5 * v + 4)}


def _k23_gadget_family(k: int) -> Graph:
    base = k23_base(k)
    edges = []
    for v in range(base.n):
        ids = k23_gadget_ids(v)
        for c in ids["c"]:
            edges.append((ids["w"], c))
            edges.append((ids["u"], c))
    for u, v in base.sorted_edges():
        cu = k23_gadget_ids(u)["c"][base.adj[u].index(v)]
        cv = k23_gadget_ids(v)["c"][base.adj[v].index(u)]
        edges.append((cu, cv))
    return Graph(5 * k, edges)


# ---------------------------------------------------------------------------
# Glued triangular grids and the fan extension
# ---------------------------------------------------------------------------

def boundary_cycle(s: int) -> list:
    """Boundary coordinates of a side-s triangular grid in cycle order."""
    cyc = [(r, 0) for r in range(s + 1)]
    cyc += [(s, c) for c in range(1, s + 1)]
    cyc += [(r, r) for r in range(s - 1, 0, -1)]
    return cyc


def tgrid_index(i: int):
    """Return (vertex_count, front_id, back_id) mapping functions for tgrid(i).

    Grid coordinates are (r, c) with 0 <= c <= r <= s, s = i-1; a coordinate
    is on the boundary iff r == s or c == 0 or c == r.  The back grid is glued
    to the front with its boundary rotated by one step, which keeps the glued
    graph simple (a position-identical gluing would duplicate the three
    corner-cut edges); back-grid interior vertices get fresh ids.
    """
    s = i - 1
    front = {}
    for r in range(s + 1):
        for c in range(r + 1):
            front[(r, c)] = len(front)
    cyc = boundary_cycle(s)
    shift = {rc: cyc[(p + 1) % len(cyc)] for p, rc in enumerate(cyc)}
    back = {}
    for r in range(s + 1):
        for c in range(r + 1):
            if not (r == s or c == 0 or c == r):
                back[(r, c)] = len(front) + len(back)

    def front_id(rc):
        return front[rc]

    def back_id(rc):
        if rc in back:
            return back[rc]
        return front[shift[rc]]

    return len(front) + len(back), front_id, back_id


def _grid_edges(s: int):
    for r in range(s + 1):
        for c in range(r + 1):
            if c < r:
                yield (r, c), (r, c + 1)
            if r < s:
                yield (r, c), (r + 1, c)
                yield (r, c), (r + 1, c + 1)


def _tgrid(i: int) -> Graph:
    s = i - 1
    n, front_id, back_id = tgrid_index(i)
    edges = set()
    for a, b in _grid_edges(s):
        edges.add(tuple(sorted((front_id(a), front_id(b)))))
        edges.add(tuple(sorted((back_id(a), back_id(b)))))
    return Graph(n, sorted(edges))


def sfan_path_id(i: int, t: int, v: int, j: int) -> int:
    return t + v * (i + 1) + j


def _sfan(i: int) -> Graph:
    base = _tgrid(i)
    t = base.n
    edges = list(base.sorted_edges())
    for v in range(t):
        for j in range(i + 1):
            pj = sfan_path_id(i, t, v, j)
            edges.append((v, pj))
            if j < i:
                edges.append((pj, sfan_path_id(i, t, v, j + 1)))
    return Graph(t * (i + 2), edges)


# ---------------------------------------------------------------------------
# Line arrangements and the tail gadget
# ---------------------------------------------------------------------------

def tangent_lines(count: int) -> list:
    """Tangents to the parabola y = x^2 at x = 0..count-1: a simple arrangement
    (pairwise intersections ((a+b)/2, ab) are all distinct)."""
    return [Line2(2 * a, -1, -a * a) for a in range(count)]


def arrangement_graph(lines) -> Graph:
    """Graph of intersection points of a simple line arrangement; adjacent
    points are consecutive along a common line."""
    lines = list(lines)
    ell = len(lines)
    if ell < 2:
        raise NotSimpleArrangement("need at least two lines")
    pts = {}
    on_line = [[] for _ in range(ell)]
    for i in range(ell):
        for j in range(i + 1, ell):
            x = lines[i].intersect(lines[j])
            if x is None:
                raise NotSimpleArrangement(f"lines {i} and {j} are parallel")
            if x in pts:
                raise NotSimpleArrangement(f"three lines meet at {x}")
            pts[x] = (i, j)
    order = sorted(pts)
    index = {p: k for k, p in enumerate(order)}
    for p, (i, j) in pts.items():
        on_line[i].append(p)
        on_line[j].append(p)
    edges = set()
    for i in range(ell):
        row = sorted(on_line[i])  # lexicographic = order along any non-vertical line
        for a, b in zip(row, row[1:]):
            edges.add(tuple(sorted((index[a], index[b]))))
    return Graph(len(order), sorted(edges))


def tail_gadget(g: Graph):
    """Append one tail to every degree-3 vertex and two to every degree-2
    vertex of an arrangement-shaped graph; returns (G', l)."""
    ell = round((1 + (1 + 8 * g.n) ** 0.5) / 2)
    if ell * (ell - 1) // 2 != g.n or g.m != ell * (ell - 2):
        raise NotArrangementShaped(
            f"no integer l with n = l(l-1)/2 and m = l(l-2) fits n={g.n}, m={g.m}")
    if any(d not in (2, 3, 4) for d in g.degrees()):
        raise NotArrangementShaped("vertex degrees must lie in {2,3,4}")
    edges = list(g.sorted_edges())
    nxt = g.n
    for v in range(g.n):
        for _ in range(4 - g.degree(v)):
            edges.append((v, nxt))
            nxt += 1
    return Graph(nxt, edges), ell


# ---------------------------------------------------------------------------
# Random corpus helper
# ---------------------------------------------------------------------------

def random_biconnected_cubic(n: int, seed: int) -> Graph:
    """Deterministic random biconnected cubic graph (rejection over seeds)."""
    if n < 4 or n % 2:
        raise BadParameter("cubic graphs need even n >= 4")
    for attempt in range(200):
        gx = nx.random_regular_graph(3, n, seed=seed * 1009 + attempt)
        if nx.is_biconnected(gx):
            return Graph(n, list(gx.edges()))
    raise BadParameter(f"no biconnected cubic graph found for n={n}, seed={seed}")
