"""segforge: low-segment-number graph drawings in 2D and 3D.

Constructs, verifies, counts, and certifies drawings of (mostly cubic)
graphs across four styles; includes the graph families with known tight
segment counts and an existential-reals encoder for seg <= k decisions.
"""

from .exactgeom import (Line2, Point, Rational, SegmentRelation, between,
                        collinear, orient2d, rat, rat_str, relate, skew)
from .graphs import (Graph, STNumbering, classify_st, connectivity,
                     format_graph, is_biconnected, is_connected, parse_graph,
                     st_numbering, check_st_property)
from .drawing import (Drawing, DrawingStyle, SegmentDecomposition, Segment,
                      ValidityReport, VertexAudit, Violation, ViolationKind,
                      audit, decompose, drawing_from_text, drawing_to_lines3d,
                      drawing_to_svg, drawing_to_text, lower_bounds,
                      straight_drawing, validate, vertex_is_flat)
from .project import generic_project
from . import errors

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
