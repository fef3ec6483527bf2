"""Witness drawings: exact counts for G/I/H/F, bounds for S, fan counts,
and the 2D lower-bound formula."""

import pytest
from fractions import Fraction

from segforge import DrawingStyle, Point, audit, decompose, validate
from segforge.errors import BadParameter, OddFan
from segforge.families import FamilyId, generate
from segforge.witnesses import (Witness, draw_fan, draw_witness, fan_graph,
                                s_family_2d_lower_bound)


def check_witness(family, k, style, expected):
    w = draw_witness(family, k, style)
    g = generate(family, k)
    rep = validate(w.drawing, g, w.style)
    assert rep.ok, f"{family} {k}: {rep}"
    cnt = decompose(w.drawing).count
    assert w.claimed == expected
    if w.exact:
        assert cnt == expected, f"{family} {k}: {cnt} != {expected}"
    else:
        assert cnt <= expected, f"{family} {k}: {cnt} > {expected}"
    return w


@pytest.mark.parametrize("k", range(2, 11))
def test_gcat_witness(k):
    w = check_witness(FamilyId.GCAT, k, None, 5 * k - 1)
    va = audit(w.drawing, generate(FamilyId.GCAT, k))
    assert va.b == 0
    assert va.t + va.b == 2 * k  # two tripods per gadget, tight


@pytest.mark.parametrize("k", range(3, 11))
def test_icycle_witness(k):
    w = check_witness(FamilyId.ICYCLE, k, None, 3 * k)
    va = audit(w.drawing, generate(FamilyId.ICYCLE, k))
    assert va.t + va.b == k


@pytest.mark.parametrize("k", range(3, 11))
def test_hcycle_witness_crossing(k):
    check_witness(FamilyId.HCYCLE, k, DrawingStyle.CROSSING2D, 4 * k)


@pytest.mark.parametrize("k", range(3, 11))
def test_hcycle_witness_lifted(k):
    w = check_witness(FamilyId.HCYCLE, k, DrawingStyle.FREE3D, 5 * k)
    va = audit(w.drawing, generate(FamilyId.HCYCLE, k))
    assert va.t == 2 * k


def test_hcycle_2d_really_has_crossings():
    # H_k is not planar, so the flat witness must contain crossings
    from segforge import Graph, ViolationKind
    w = draw_witness(FamilyId.HCYCLE, 4)
    g = generate(FamilyId.HCYCLE, 4)
    rep = validate(w.drawing, g, DrawingStyle.PLANAR2D)
    assert any(v.kind is ViolationKind.CROSSING for v in rep.violations)


@pytest.mark.parametrize("k", [4, 6, 8, 10])
def test_k23_witness(k):
    w = check_witness(FamilyId.K23GADGETF, k, None, 7 * k // 2)
    va = audit(w.drawing, generate(FamilyId.K23GADGETF, k))
    assert va.t == k  # exactly the gadget centers are tripods


def test_k23_witness_odd_k_rejected():
    with pytest.raises(BadParameter):
        draw_witness(FamilyId.K23GADGETF, 5)


@pytest.mark.parametrize("i", [4, 6, 8])
def test_sfan_witness_3d(i):
    t = i * i - 2 * i + 3
    check_witness(FamilyId.SFAN, i, DrawingStyle.FREE3D, t * (i // 2 + 3) + 3 * t - 6)


@pytest.mark.parametrize("i", [4, 6])
def test_sfan_witness_bend(i):
    t = i * i - 2 * i + 3
    w = check_witness(FamilyId.SFAN, i, DrawingStyle.BEND2D,
                      t * (i // 2 + 3) + 3 * (3 * t - 6))
    assert all(len(b) <= 2 for b in w.drawing.routes.values())


def test_sfan_witness_odd_rejected():
    with pytest.raises(OddFan):
        draw_witness(FamilyId.SFAN, 5)


@pytest.mark.parametrize("i,expected", [(2, 4), (4, 5), (6, 6), (12, 9)])
def test_fan_counts(i, expected):
    d = draw_fan(i, Point(0, 0), ((1, 0), (0, 1)))
    assert decompose(d).count == expected == i // 2 + 3
    assert validate(d, fan_graph(i), DrawingStyle.PLANAR2D).ok


def test_fan_odd_rejected():
    with pytest.raises(OddFan):
        draw_fan(3, Point(0, 0), ((1, 0), (0, 1)))


def test_fan_in_3d_frame():
    d = draw_fan(4, Point(1, 2, 3), ((1, 0, 0), (0, 1, 1)))
    assert d.dim == 3
    assert decompose(d).count == 5


def test_s_lower_bound_formula():
    assert s_family_2d_lower_bound(3) == 0
    assert s_family_2d_lower_bound(6) == (27 - 3) * 3 == 72
    assert s_family_2d_lower_bound(10) == (83 - 3) * 7 == 560
    with pytest.raises(BadParameter):
        s_family_2d_lower_bound(2)


def test_ratio_trend_increases():
    ratios = []
    for i in (4, 6, 8):
        w = draw_witness(FamilyId.SFAN, i, DrawingStyle.FREE3D)
        cnt = decompose(w.drawing).count
        ratios.append(Fraction(s_family_2d_lower_bound(i), cnt))
    assert ratios[0] < ratios[1] < ratios[2]
