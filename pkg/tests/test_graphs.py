"""Graph core: format, connectivity classes, st-numbering, p-class histogram."""

import itertools
import random

import pytest

from segforge import (Graph, STNumbering, check_st_property, classify_st,
                      connectivity, format_graph, parse_graph, st_numbering)
from segforge.errors import (GraphFormatError, InvalidOrdering, NotAnEdge,
                             NotBiconnected, NotCubic)


def complete(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def prism():
    return Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3),
                     (0, 3), (1, 4), (2, 5)])


def test_graph_basic_invariants():
    g = complete(4)
    assert g.n == 4 and g.m == 6
    assert g.adj[0] == (1, 2, 3)
    assert g.is_cubic()
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 5)])


def test_format_round_trip():
    g = prism()
    assert parse_graph(format_graph(g)) == g


def test_parse_comments_and_errors():
    g = parse_graph("# a triangle\n3 3\n0 1\n1 2 # last\n0 2\n")
    assert g == cycle(3)
    with pytest.raises(GraphFormatError) as exc:
        parse_graph("3 3\n0 1\n1 9\n0 2\n")
    assert exc.value.line == 3
    with pytest.raises(GraphFormatError):
        parse_graph("3 2\n0 1\n")


def test_connectivity_examples():
    assert connectivity(complete(4)) == 3
    assert connectivity(prism()) == 3
    assert connectivity(cycle(5)) == 2
    # path has a cut vertex
    assert connectivity(Graph(3, [(0, 1), (1, 2)])) == 1
    # disconnected: two triangles
    assert connectivity(Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])) == 0
    # larger-than-3 connectivity is capped
    assert connectivity(complete(6)) == 3


def test_connectivity_monotone_under_edge_addition():
    rng = random.Random(99)
    for _ in range(30):
        n = rng.randint(4, 8)
        all_edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
        rng.shuffle(all_edges)
        keep = all_edges[: rng.randint(0, len(all_edges))]
        g1 = Graph(n, keep)
        extra = [e for e in all_edges if e not in set(keep)]
        add = extra[: rng.randint(0, len(extra))]
        g2 = Graph(n, keep + add)
        assert connectivity(g2) >= connectivity(g1)


def test_st_triangle_forced_order():
    g = cycle(3)
    num = st_numbering(g, 0, 2)
    assert num.order == (0, 1, 2)


def test_st_k4_passes_brute_force_validator():
    g = complete(4)
    # exhaustive check that the validator itself matches the definition
    valid_orders = [perm for perm in itertools.permutations(range(4))
                    if check_st_property(g, perm)]
    assert valid_orders  # K4 certainly has st-numberings
    for s, t in [(0, 1), (2, 3), (1, 2)]:
        num = st_numbering(g, s, t)
        assert num.order in valid_orders
        assert num.order[0] == s and num.order[-1] == t


def test_st_rejects_disconnected_and_non_edges():
    two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    with pytest.raises(NotBiconnected):
        st_numbering(two_triangles)
    with pytest.raises(NotAnEdge):
        st_numbering(prism(), 0, 4)


def test_st_numbering_random_biconnected():
    import networkx as nx
    rng = random.Random(5)
    found = 0
    while found < 60:
        n = rng.randint(4, 12)
        p = rng.uniform(0.3, 0.9)
        gx = nx.gnp_random_graph(n, p, seed=rng.randint(0, 10 ** 6))
        if n < 3 or not nx.is_connected(gx) or not nx.is_biconnected(gx):
            continue
        g = Graph(n, list(gx.edges()))
        num = st_numbering(g)
        assert check_st_property(g, num.order)
        assert sum(num.pclass) == g.m
        found += 1


def test_classify_k4():
    g = complete(4)
    assert classify_st(g, st_numbering(g)) == (1, 1, 1, 1)


def test_classify_prism():
    g = prism()
    assert classify_st(g, st_numbering(g)) == (1, 2, 2, 1)


def test_classify_requires_cubic():
    subdivided = Graph(5, [(0, 4), (1, 4), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    with pytest.raises(NotCubic):
        classify_st(subdivided, STNumbering(tuple(range(5)), (0,) * 5))
    g = prism()
    num = st_numbering(g)
    # vertex 4 placed second has no earlier neighbor (adj[4] = 1,3,5)
    bad = STNumbering((0, 4, 1, 2, 5, 3), num.pclass)
    with pytest.raises(InvalidOrdering):
        classify_st(g, bad)


def test_classify_histogram_shape_random_cubic():
    import networkx as nx
    rng = random.Random(11)
    found = 0
    while found < 25:
        n = rng.choice((8, 10, 12, 14))
        gx = nx.random_regular_graph(3, n, seed=rng.randint(0, 10 ** 6))
        if not nx.is_biconnected(gx):
            continue
        g = Graph(n, list(gx.edges()))
        hist = classify_st(g, st_numbering(g))
        assert hist == (1, (n - 2) // 2, (n - 2) // 2, 1)
        found += 1
