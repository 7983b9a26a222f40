import math

import pytest
from hypothesis import given, settings

from biphole import Graph, GraphError, NotTwoConnectedError
from biphole import complete, cycle, empty, path, petersen

from conftest import graphs


def test_from_edges_path():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert [g.degree(v) for v in g.vertices] == [1, 2, 1]


def test_from_edges_complete():
    g = complete(4)
    assert all(g.degree(v) == 3 for v in g.vertices)
    assert g.m == 6


def test_duplicate_edges_collapse():
    g = Graph.from_edges(2, [(0, 1), (1, 0)])
    assert g.m == 1


@pytest.mark.parametrize("bad", [[(0, 0)], [(0, 5)], [(-1, 0)]])
def test_construction_errors(bad):
    with pytest.raises(GraphError):
        Graph(3, bad)


def test_closed_neighborhood():
    c5 = cycle(5)
    assert c5.closed_neighborhood({0, 1}) == {4, 0, 1, 2}
    assert complete(4).closed_neighborhood({0}) == {0, 1, 2, 3}
    assert empty(5).closed_neighborhood({2}) == {2}


def test_closed_neighborhood_monotone():
    g = petersen()
    small = g.closed_neighborhood({0, 2})
    big = g.closed_neighborhood({0, 2, 5})
    assert {0, 2} <= small <= big


def test_distance():
    assert path(3).distance(0, 2) == 2
    assert complete(4).distance(0, 3) == 1
    assert empty(2).distance(0, 1) == math.inf
    assert empty(2).distance(1, 1) == 0


def test_vertices_at_distance():
    assert cycle(5).vertices_at_distance(0, 2) == {2, 3}
    assert complete(4).vertices_at_distance(0, 2) == frozenset()
    assert path(3).vertices_at_distance(1, 1) == {0, 2}


def test_connectivity():
    assert cycle(5).is_connected() and cycle(5).is_two_connected()
    p3 = path(3)
    assert p3.is_connected() and not p3.is_two_connected()
    assert p3.cut_vertices() == {1}
    assert not complete(1).is_two_connected()
    assert not Graph(4, [(0, 1), (2, 3)]).is_connected()


def test_add_edge():
    p3 = path(3)
    c3 = p3.add_edge(0, 2)
    assert c3 == cycle(3)
    assert p3.m == 2  # original untouched
    assert complete(4).add_edge(0, 1) == complete(4)
    assert empty(2).add_edge(0, 1) == complete(2)
    with pytest.raises(GraphError):
        p3.add_edge(1, 1)


def test_induced_subgraph():
    sub, mapping = cycle(5).induced_subgraph({0, 1, 2})
    assert sub == path(3) and mapping == (0, 1, 2)
    sub, mapping = complete(4).induced_subgraph({0, 1})
    assert sub == complete(2)
    sub, mapping = complete(4).induced_subgraph(())
    assert sub.n == 0 and mapping == ()


def test_two_disjoint_paths_c5():
    assert cycle(5).two_disjoint_paths(0, 2) == ([0, 1, 2], [0, 4, 3, 2])


def test_two_disjoint_paths_k4_minus_edge():
    g = Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    p1, p2 = g.two_disjoint_paths(0, 3)
    assert {tuple(p1), tuple(p2)} == {(0, 1, 3), (0, 2, 3)}


def test_two_disjoint_paths_requires_two_connected():
    with pytest.raises(NotTwoConnectedError):
        path(3).two_disjoint_paths(0, 2)


@given(graphs(min_n=1, max_n=8))
@settings(max_examples=150)
def test_degree_equals_first_layer(g):
    for v in g.vertices:
        assert g.degree(v) == len(g.vertices_at_distance(v, 1))


@given(graphs(min_n=3, max_n=8))
@settings(max_examples=150)
def test_two_connected_implies_connected(g):
    if g.is_two_connected():
        assert g.is_connected() and g.n >= 3


def _two_connected_by_deletion(g):
    if g.n < 3 or not g.is_connected():
        return False
    for v in g.vertices:
        rest = [x for x in g.vertices if x != v]
        sub, _ = g.induced_subgraph(rest)
        if not sub.is_connected():
            return False
    return True


@given(graphs(min_n=1, max_n=7))
@settings(max_examples=200)
def test_two_connected_matches_vertex_deletion(g):
    assert g.is_two_connected() == _two_connected_by_deletion(g)
    # A cut vertex is one whose removal increases the component count.
    expected_cuts = {v for v in g.vertices if _removal_disconnects(g, v)}
    assert g.cut_vertices() == expected_cuts


def _removal_disconnects(g, v):
    rest = [x for x in g.vertices if x != v]
    sub, _ = g.induced_subgraph(rest)
    return _component_count(sub) > _component_count(g)


def _component_count(g):
    seen = set()
    count = 0
    for start in g.vertices:
        if start in seen:
            continue
        count += 1
        stack = [start]
        seen.add(start)
        while stack:
            a = stack.pop()
            for b in g.neighbors(a):
                if b not in seen:
                    seen.add(b)
                    stack.append(b)
    return count


@given(graphs(min_n=3, max_n=8))
@settings(max_examples=120)
def test_two_disjoint_paths_validity(g):
    if not g.is_two_connected():
        return
    for x, y in [(0, g.n - 1), (1, 2)]:
        p1, p2 = g.two_disjoint_paths(x, y)
        for p in (p1, p2):
            assert p[0] == x and p[-1] == y
            assert all(g.has_edge(a, b) for a, b in zip(p, p[1:]))
            assert len(set(p)) == len(p)
        assert set(p1[1:-1]) & set(p2[1:-1]) == set()
