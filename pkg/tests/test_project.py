"""Generic projection: hypotheses, segment preservation, crossing counts."""

import pytest

from segforge import (DrawingStyle, Graph, Point, ViolationKind, decompose,
                      generic_project, straight_drawing, validate)
from segforge.drawing import geometry_violations
from segforge.errors import InvalidInput

P = Point


def tetrahedron():
    g = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    d = straight_drawing(3, {0: P(0, 0, 0), 1: P(1, 1, 0),
                             2: P(1, 0, 1), 3: P(0, 1, 1)}, g.edges)
    return g, d


def test_single_edge_projects_to_one_segment():
    d = straight_drawing(3, {0: P(0, 0, 0), 1: P(2, 3, 5)}, [(0, 1)])
    d2 = generic_project(d)
    assert d2.dim == 2
    assert decompose(d2).count == 1


def test_tetrahedron_projects_to_six_segments_one_crossing():
    g, d = tetrahedron()
    assert validate(d, g, DrawingStyle.FREE3D).ok
    d2 = generic_project(d)
    assert decompose(d2).count == 6
    rep = validate(d2, g, DrawingStyle.CROSSING2D)
    assert rep.ok, str(rep)
    crossings = [v for v in validate(d2, g, DrawingStyle.PLANAR2D).violations
                 if v.kind is ViolationKind.CROSSING]
    assert len(crossings) == 1


def test_flat_vertex_preserved():
    g = Graph(3, [(0, 1), (1, 2)])
    d = straight_drawing(3, {0: P(0, 0, 0), 1: P(1, 1, 1), 2: P(2, 2, 2)}, g.edges)
    assert decompose(d).count == 1
    d2 = generic_project(d)
    assert decompose(d2).count == 1


def test_segment_count_never_grows():
    g, d = tetrahedron()
    assert decompose(generic_project(d)).count <= decompose(d).count


def test_invalid_input_rejected():
    # vertex 2 interior to edge (0,1)
    d = straight_drawing(3, {0: P(0, 0, 0), 1: P(2, 0, 0), 2: P(1, 0, 0)},
                         [(0, 1), (1, 2)])
    assert geometry_violations(d, allow_crossings=True)
    with pytest.raises(InvalidInput):
        generic_project(d)
