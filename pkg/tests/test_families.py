"""Family generators: closed-form sizes, regularity, connectivity classes,
arrangement graphs, and the tail-gadget round trip."""

import pytest

from segforge import Graph, Line2, Point, connectivity
from segforge.errors import (BadParameter, NotArrangementShaped,
                             NotSimpleArrangement, UnknownFamily)
from segforge.families import (FamilyId, arrangement_graph, generate,
                               random_biconnected_cubic, tail_gadget,
                               tangent_lines)


def test_fixed_gadgets():
    k4p = generate("k4prime")
    assert (k4p.n, k4p.m) == (5, 7)
    assert sorted(k4p.degrees()) == [2, 3, 3, 3, 3]
    k33 = generate("k33me")
    assert (k33.n, k33.m) == (6, 8)
    k4m = generate("k4me")
    assert (k4m.n, k4m.m) == (4, 5)


@pytest.mark.parametrize("k", range(2, 21))
def test_gcat_sizes(k):
    g = generate(FamilyId.GCAT, k)
    assert g.n == 6 * k - 2
    assert g.is_cubic()
    assert g.m == 3 * g.n // 2


@pytest.mark.parametrize("k", range(3, 21))
def test_hcycle_sizes(k):
    g = generate(FamilyId.HCYCLE, k)
    assert g.n == 6 * k and g.is_cubic()


@pytest.mark.parametrize("k", range(3, 21))
def test_icycle_sizes(k):
    g = generate(FamilyId.ICYCLE, k)
    assert g.n == 4 * k and g.is_cubic()


@pytest.mark.parametrize("k", range(4, 21, 2))
def test_k23f_sizes(k):
    g = generate(FamilyId.K23GADGETF, k)
    assert g.n == 5 * k and g.is_cubic()


@pytest.mark.parametrize("i", range(3, 21))
def test_tgrid_sizes(i):
    g = generate(FamilyId.TGRID, i)
    t = i * i - 2 * i + 3
    assert g.n == t
    assert g.m == 3 * t - 6
    assert max(g.degrees()) <= 6


@pytest.mark.parametrize("i", range(3, 13))
def test_sfan_sizes(i):
    g = generate(FamilyId.SFAN, i)
    assert g.n == i ** 3 - i + 6


def test_sfan_example_cross_check():
    # i=3: t_3 * (3+2) = 6 * 5 = 30
    assert generate(FamilyId.SFAN, 3).n == 30


def test_connectivity_classes():
    assert connectivity(generate(FamilyId.GCAT, 4)) == 1
    assert connectivity(generate(FamilyId.HCYCLE, 4)) == 2
    assert connectivity(generate(FamilyId.ICYCLE, 3)) == 2
    assert connectivity(generate(FamilyId.ICYCLE, 9)) == 2
    from segforge.families import k23_base
    assert connectivity(k23_base(4)) == 3
    assert connectivity(k23_base(8)) == 3
    assert connectivity(generate(FamilyId.TGRID, 3)) == 3  # the octahedron


def test_hcycle_not_planar():
    import networkx as nx
    g = generate(FamilyId.HCYCLE, 4)
    assert g.n == 24
    assert not nx.check_planarity(g.to_networkx())[0]


def test_icycle_planar_biconnected():
    import networkx as nx
    g = generate(FamilyId.ICYCLE, 3)
    assert (g.n, g.m) == (12, 18)
    assert nx.check_planarity(g.to_networkx())[0]
    assert nx.is_biconnected(g.to_networkx())


def test_tgrid_is_triangulation_by_euler():
    import networkx as nx
    for i in (3, 4, 5, 8):
        g = generate(FamilyId.TGRID, i)
        ok, emb = nx.check_planarity(g.to_networkx())
        assert ok
        faces = 2 - g.n + g.m  # Euler
        # every face a triangle: 2m = 3f
        assert 2 * g.m == 3 * faces


def test_bad_parameters():
    with pytest.raises(BadParameter):
        generate(FamilyId.GCAT, 1)
    with pytest.raises(BadParameter):
        generate(FamilyId.HCYCLE, 2)
    with pytest.raises(BadParameter):
        generate(FamilyId.K23GADGETF, 5)
    with pytest.raises(BadParameter):
        generate(FamilyId.SFAN, 2)
    with pytest.raises(UnknownFamily):
        generate("nonsense", 3)


def test_arrangement_triangle():
    g = arrangement_graph(tangent_lines(3))
    assert (g.n, g.m) == (3, 3)


def test_arrangement_four_lines():
    g = arrangement_graph(tangent_lines(4))
    assert (g.n, g.m) == (6, 8)
    assert set(g.degrees()) <= {2, 3, 4}


def test_arrangement_rejects_parallel_and_concurrent():
    with pytest.raises(NotSimpleArrangement):
        arrangement_graph([Line2(0, 1, 0), Line2(0, 1, -1)])
    # three concurrent lines through the origin
    with pytest.raises(NotSimpleArrangement):
        arrangement_graph([Line2(1, 0, 0), Line2(0, 1, 0), Line2(1, 1, 0)])


def test_tail_gadget_triangle():
    tri = Graph(3, [(0, 1), (1, 2), (0, 2)])
    gp, k = tail_gadget(tri)
    assert k == 3
    assert gp.n == 9
    assert sum(1 for v in range(gp.n) if gp.degree(v) == 1) == 6
    assert all(gp.degree(v) == 4 for v in range(gp.n) if gp.degree(v) != 1)


def test_tail_gadget_rejects_k4():
    k4 = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    with pytest.raises(NotArrangementShaped):
        tail_gadget(k4)


@pytest.mark.parametrize("ell", [3, 4, 5, 6])
def test_arrangement_tail_round_trip(ell):
    g = arrangement_graph(tangent_lines(ell))
    assert g.n == ell * (ell - 1) // 2
    assert g.m == ell * (ell - 2)
    gp, k = tail_gadget(g)
    assert k == ell
    non_leaves = [v for v in range(gp.n) if gp.degree(v) != 1]
    assert all(gp.degree(v) == 4 for v in non_leaves)
    assert generate(FamilyId.TAILGADGET, ell) == gp


def test_random_biconnected_cubic_deterministic():
    g1 = random_biconnected_cubic(12, seed=7)
    g2 = random_biconnected_cubic(12, seed=7)
    assert g1 == g2
    assert g1.is_cubic()
    from segforge import is_biconnected
    assert is_biconnected(g1)
