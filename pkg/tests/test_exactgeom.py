"""Exact predicates: spec examples, symmetry properties, and a brute-force
sign-of-determinant oracle for segment classification."""

import random
from fractions import Fraction

import pytest

from segforge import (Line2, Point, SegmentRelation, between, collinear,
                      orient2d, rat, rat_str, relate, skew)
from segforge.errors import (DegenerateLine, DegenerateSegment,
                             DimensionMismatch)

P = Point


def test_between_midpoint():
    assert between(P(0, 0), P(-1, 0), P(1, 0))


def test_between_outside():
    assert not between(P(2, 0), P(0, 0), P(1, 0))


def test_between_3d_interior():
    assert between(P(1, 1, 1), P(0, 0, 0), P(3, 3, 3))


def test_between_endpoints_included():
    assert between(P(0, 0), P(0, 0), P(1, 1))
    assert between(P(1, 1), P(0, 0), P(1, 1))


def test_between_symmetry_and_degenerate_bb():
    rng = random.Random(7)
    for _ in range(200):
        a, b, c = (P(Fraction(rng.randint(-6, 6), rng.randint(1, 4)),
                     Fraction(rng.randint(-6, 6), rng.randint(1, 4)))
                   for _ in range(3))
        assert between(a, b, c) == between(a, c, b)
        assert between(b, b, c)


def test_between_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        between(P(0, 0), P(0, 0, 0), P(1, 1, 1))


def test_relate_cross():
    assert relate((P(0, 0), P(2, 0)), (P(1, -1), P(1, 1))) is SegmentRelation.CROSS


def test_relate_share_endpoint():
    assert relate((P(0, 0), P(1, 0)), (P(1, 0), P(2, 1))) is SegmentRelation.SHARE_ENDPOINT


def test_relate_overlap():
    assert relate((P(0, 0), P(2, 0)), (P(1, 0), P(3, 0))) is SegmentRelation.OVERLAP


def test_relate_collinear_touch_is_share_endpoint():
    assert relate((P(0, 0), P(1, 0)), (P(1, 0), P(3, 0))) is SegmentRelation.SHARE_ENDPOINT


def test_relate_endpoint_on_interior():
    assert relate((P(0, 0), P(2, 0)), (P(1, 0), P(1, 5))) is SegmentRelation.ENDPOINT_ON_INTERIOR


def test_relate_degenerate():
    with pytest.raises(DegenerateSegment):
        relate((P(0, 0), P(0, 0)), (P(1, 0), P(2, 0)))


def test_relate_3d_skew_pieces_disjoint():
    # segments whose supporting lines are skew never meet
    assert relate((P(0, 0, 0), P(1, 0, 0)),
                  (P(0, 0, 1), P(0, 1, 1))) is SegmentRelation.DISJOINT


def test_relate_3d_cross_requires_coplanarity():
    assert relate((P(0, 0, 0), P(2, 2, 0)),
                  (P(0, 2, 0), P(2, 0, 0))) is SegmentRelation.CROSS


# ---------------------------------------------------------------------------
# Oracle: classify two segments by brute force over orientation signs and
# closed-point-membership only, written independently of relate()'s logic.
# ---------------------------------------------------------------------------

def _on_closed(p, a, b):
    return collinear(p, a, b) and between(p, a, b)


def _oracle_2d(s1, s2):
    (a, b), (c, d) = s1, s2
    same_line = collinear(a, b, c) and collinear(a, b, d)
    if same_line:
        common = [p for p in (a, b) if _on_closed(p, c, d)] + \
                 [p for p in (c, d) if _on_closed(p, a, b)]
        if not common:
            return SegmentRelation.DISJOINT
        if all(p == common[0] for p in common):
            return SegmentRelation.SHARE_ENDPOINT
        return SegmentRelation.OVERLAP
    if a in (c, d) or b in (c, d):
        return SegmentRelation.SHARE_ENDPOINT
    # parametric intersection of the supporting lines
    l1, l2 = Line2.from_points(a, b), Line2.from_points(c, d)
    x = l1.intersect(l2)
    if x is None:
        return SegmentRelation.DISJOINT
    if not (_on_closed(x, a, b) and _on_closed(x, c, d)):
        return SegmentRelation.DISJOINT
    end1 = x in (a, b)
    end2 = x in (c, d)
    if end1 and end2:
        return SegmentRelation.SHARE_ENDPOINT
    if end1 or end2:
        return SegmentRelation.ENDPOINT_ON_INTERIOR
    return SegmentRelation.CROSS


def test_relate_agrees_with_oracle_on_random_pairs():
    rng = random.Random(20240817)
    checked = 0
    while checked < 1000:
        pts = [P(Fraction(rng.randint(-5, 5), rng.choice((1, 1, 2, 3))),
                 Fraction(rng.randint(-5, 5), rng.choice((1, 1, 2, 3))))
               for _ in range(4)]
        a, b, c, d = pts
        if a == b or c == d:
            continue
        assert relate((a, b), (c, d)) is _oracle_2d((a, b), (c, d)), (a, b, c, d)
        # symmetry
        assert relate((a, b), (c, d)) is relate((c, d), (a, b))
        checked += 1


def test_skew_standard_pair():
    assert skew((P(0, 0, 0), P(1, 0, 0)), (P(0, 0, 1), P(0, 1, 1)))


def test_skew_intersecting_axes():
    assert not skew((P(0, 0, 0), P(1, 0, 0)), (P(0, 0, 0), P(0, 1, 0)))


def test_skew_parallel_coplanar():
    assert not skew((P(0, 0, 0), P(1, 0, 0)), (P(0, 0, 1), P(1, 0, 1)))


def test_skew_degenerate():
    with pytest.raises(DegenerateLine):
        skew((P(0, 0, 0), P(0, 0, 0)), (P(0, 0, 1), P(0, 1, 1)))


def test_orient2d_signs():
    assert orient2d(P(0, 0), P(1, 0), P(0, 1)) == 1
    assert orient2d(P(0, 0), P(0, 1), P(1, 0)) == -1
    assert orient2d(P(0, 0), P(1, 1), P(2, 2)) == 0


def test_rational_round_trip():
    for text in ("3/4", "-7/2", "5", "0", "-12"):
        assert rat_str(rat(text)) == text
    assert rat_str(Fraction(6, 8)) == "3/4"


def test_line2_basics():
    l1 = Line2.from_points(P(0, 0), P(2, 2))
    assert l1.contains(P(1, 1))
    l2 = Line2.from_points(P(0, 2), P(2, 0))
    assert l1.intersect(l2) == P(1, 1)
    assert l1.intersect(Line2.from_points(P(0, 1), P(2, 3))) is None
