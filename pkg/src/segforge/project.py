"""Generic parallel projection of a 3D drawing onto the plane.

Given a 3D drawing in which no two edges overlap and no edge contains a
vertex in its interior, a projection direction (a, b, 1) is chosen from a
growing integer grid so that the projected 2D drawing keeps those properties
(crossings are allowed to appear) and its maximal segment count does not
grow.  Every candidate is verified with the exact validator; the first
survivor wins, which keeps the operation deterministic.
"""

from __future__ import annotations

from .drawing import Drawing, decompose, geometry_violations
from .errors import DimensionMismatch, InvalidInput
from .exactgeom import Point


def _direction_candidates(limit: int):
    """(a, b) integer pairs ordered by Chebyshev radius, then lexicographically."""
    for r in range(limit + 1):
        ring = []
        for a in range(-r, r + 1):
            for b in range(-r, r + 1):
                if max(abs(a), abs(b)) == r:
                    ring.append((a, b))
        yield from sorted(ring)


def project_point(p: Point, a, b) -> Point:
    """Project p parallel to (a, b, 1) onto the plane z = 0."""
    return Point(p[0] - a * p[2], p[1] - b * p[2])


def generic_project(d3: Drawing, grid_limit: int = 64) -> Drawing:
    """2D drawing of d3 with no overlaps, no vertex interior to a piece, and
    segment count at most that of d3; raises InvalidInput if d3 itself
    violates those hypotheses."""
    if d3.dim != 3:
        raise DimensionMismatch("generic_project expects a 3D drawing")
    if geometry_violations(d3, allow_crossings=True):
        raise InvalidInput("input drawing has overlaps or vertices interior to edges")
    seg3 = decompose(d3).count

    for a, b in _direction_candidates(grid_limit):
        pts = {v: project_point(p, a, b) for v, p in d3.points.items()}
        if len(set(pts.values())) != len(pts):
            continue
        try:
            d2 = Drawing(2, pts,
                         {e: tuple(project_point(q, a, b) for q in bends)
                          for e, bends in d3.routes.items()})
        except Exception:
            continue  # degenerate pieces or coincidences under this direction
        if geometry_violations(d2, allow_crossings=True):
            continue
        if decompose(d2).count <= seg3:
            return d2
    raise InvalidInput(f"no valid projection direction within grid limit {grid_limit}")
