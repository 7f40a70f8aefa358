"""Graph value semantics and elementary operations."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from ucgraphs.graph import Graph, canonical_form, is_isomorphic, join


def small_graphs():
    return st.integers(0, 6).flatmap(
        lambda n: st.tuples(st.just(n),
                            st.integers(0, (1 << (n * (n - 1) // 2)) - 1)))


def test_construction_validation():
    with pytest.raises(ValueError):
        Graph(-1)
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(40)
    g = Graph(3, [(0, 1), (1, 0)])  # symmetric duplicate collapses
    assert g.edge_count == 1


def test_neighborhood():
    c4 = Graph.cycle(4)
    assert c4.neighborhood(0) == {1, 3}
    assert c4.neighborhood(0, closed=True) == {0, 1, 3}
    assert Graph.complete(3).neighborhood(0) == {1, 2}
    assert Graph(3).neighborhood(1) == set()
    with pytest.raises(ValueError):
        c4.neighborhood(4)


def test_degrees_and_edges():
    c4 = Graph.cycle(4)
    assert c4.edge_count == 4
    assert sum(c4.degree(v) for v in c4.vertices()) == 2 * c4.edge_count
    assert c4.edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert c4.non_edges() == [(0, 2), (1, 3)]


def test_complement():
    assert Graph.complete(3).complement() == Graph(3)
    c4 = Graph.cycle(4)
    assert set(c4.complement().edges()) == {(0, 2), (1, 3)}
    c5 = Graph.cycle(5)
    assert is_isomorphic(c5.complement(), c5)


@given(small_graphs())
def test_complement_involution(nm):
    n, mask = nm
    g = Graph.from_edge_mask(n, mask)
    assert g.complement().complement() == g


@given(small_graphs())
def test_edge_mask_roundtrip(nm):
    n, mask = nm
    g = Graph.from_edge_mask(n, mask)
    assert g.edge_mask() == mask
    assert Graph.from_edge_mask(n, g.edge_mask()) == g


def test_join():
    assert join(Graph(1), Graph(1)) == Graph.complete(2)
    sq = join(Graph(2), Graph(2))
    assert is_isomorphic(sq, Graph.cycle(4))
    star = join(Graph(1), Graph(2))
    assert star.degree(0) == 2 and star.edge_count == 2
    g1, g2 = Graph.cycle(3), Graph.cycle(4)
    j = join(g1, g2)
    assert j.n == 7
    assert j.edge_count == g1.edge_count + g2.edge_count + g1.n * g2.n


def test_is_connected():
    assert Graph.cycle(4).is_connected()
    assert not Graph(3).is_connected()
    assert Graph(1).is_connected()
    assert Graph(0).is_connected()
    assert not Graph(4, [(0, 1), (2, 3)]).is_connected()


def test_contains_clique():
    from ucgraphs.upper_critical import PartitionSignature, construct
    g = construct(PartitionSignature((2, 2, 1)))
    assert g.contains_clique(3)
    assert not g.contains_clique(4)
    assert not Graph.cycle(5).contains_clique(3)
    assert Graph.complete(5).contains_clique(5)
    with pytest.raises(ValueError):
        g.contains_clique(0)


def test_complete_vertex():
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert star.is_complete_vertex(0)
    assert not star.is_complete_vertex(1)
    assert Graph(1).is_complete_vertex(0)
    assert Graph.complete(4).is_complete()
    assert not star.is_complete()


def test_edge_edit_errors():
    c4 = Graph.cycle(4)
    with pytest.raises(ValueError):
        c4.add_edge(0, 1)
    with pytest.raises(ValueError):
        c4.add_edge(2, 2)
    with pytest.raises(ValueError):
        c4.remove_edge(0, 2)
    g = c4.add_edge(0, 2)
    assert g.has_edge(0, 2) and not c4.has_edge(0, 2)  # immutability


def test_delete_vertex_compacts():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    h = g.delete_vertex(1)
    # old 2,3 become 1,2; only the 2-3 edge survives
    assert h.n == 3
    assert h.edges() == [(1, 2)]
    assert g.delete_vertex(0).edges() == [(0, 1), (1, 2)]


def test_add_vertex():
    g = Graph(2, [(0, 1)])
    h = g.add_vertex(0b01)
    assert h.edges() == [(0, 1), (0, 2)]
    with pytest.raises(ValueError):
        g.add_vertex(0b100)


def test_isomorphism():
    a = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    b = Graph(4, [(0, 2), (2, 1), (1, 3), (3, 0)])
    assert is_isomorphic(a, b)
    from ucgraphs.upper_critical import PartitionSignature, construct
    assert not is_isomorphic(construct(PartitionSignature((2, 2))),
                             construct(PartitionSignature((3, 1))))
    path = Graph(3, [(0, 1), (1, 2)])
    star = Graph(3, [(1, 0), (1, 2)])
    assert is_isomorphic(path, star)
    assert canonical_form(a) == canonical_form(b)
    with pytest.raises(ValueError):
        canonical_form(Graph(9))


def test_isomorphism_is_equivalence():
    gs = [Graph.from_edge_mask(4, m) for m in range(0, 64, 7)]
    for g in gs:
        assert is_isomorphic(g, g)
    for g in gs:
        for h in gs:
            assert is_isomorphic(g, h) == is_isomorphic(h, g)


def test_hash_eq_repr():
    a = Graph.cycle(4)
    b = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert a == b and hash(a) == hash(b)
    assert a != Graph(4)
    assert "Graph(4" in repr(a)
