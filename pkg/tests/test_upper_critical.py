"""Definitional check, recognition, construction, saturation."""

from __future__ import annotations

import pytest

from ucgraphs.graph import Graph, is_isomorphic
from ucgraphs.coloring import ColorPartition, chromatic_number, \
    chromatic_partition
from ucgraphs.upper_critical import (PartitionSignature, construct,
                                     is_upper_critical_def,
                                     neighborhood_structure_holds, recognize,
                                     saturate_from_coloring)
from ucgraphs.enumeration import partitions_of


def all_signatures(max_n):
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            yield from partitions_of(n, k)


def test_signature_canonicalization():
    s = PartitionSignature((1, 3, 2))
    assert s.parts == (3, 2, 1)
    assert s.order == 6 and s.k == 3
    assert str(s) == "3,2,1"
    assert PartitionSignature((1, 3)) == PartitionSignature((3, 1))
    with pytest.raises(ValueError):
        PartitionSignature((2, 0))
    with pytest.raises(ValueError):
        PartitionSignature((-1,))
    # degenerate empty signature is tolerated (the order-0 graph)
    assert PartitionSignature(()).order == 0


def test_definitional_check():
    assert is_upper_critical_def(Graph.cycle(4))
    assert not is_upper_critical_def(Graph.cycle(5))
    assert is_upper_critical_def(Graph.complete(4))
    assert is_upper_critical_def(Graph(1))
    assert is_upper_critical_def(Graph(5))  # edgeless: adding any edge doubles chi
    assert is_upper_critical_def(Graph(3, [(0, 1), (1, 2)]))  # star
    assert not is_upper_critical_def(Graph(3, [(0, 1)]))  # K2 plus isolated


def test_recognize():
    assert recognize(Graph.cycle(4)) == PartitionSignature((2, 2))
    assert recognize(Graph.cycle(5)) is None
    assert recognize(Graph(1)) == PartitionSignature((1,))
    assert recognize(Graph(3, [(0, 1), (1, 2)])) == PartitionSignature((2, 1))
    diamond = Graph.complete(4).remove_edge(0, 1)
    assert recognize(diamond) == PartitionSignature((2, 1, 1))
    assert recognize(Graph(3, [(0, 1)])) is None
    assert recognize(Graph(0)) == PartitionSignature(())


def test_construct():
    g = construct(PartitionSignature((2, 1, 1)))
    assert g.n == 4 and g.edge_count == 5
    assert is_isomorphic(construct(PartitionSignature((2, 2))), Graph.cycle(4))
    assert construct(PartitionSignature((1, 1, 1))) == Graph.complete(3)
    with pytest.raises(ValueError):
        construct(PartitionSignature((1,) * 33))


def test_construct_recognize_roundtrip():
    for s in all_signatures(12):
        assert recognize(construct(s)) == s


def test_chi_of_construct():
    for s in all_signatures(8):
        assert chromatic_number(construct(s)) == s.k


def test_equivalence_small():
    for n in range(1, 6):
        for mask in range(1 << (n * (n - 1) // 2)):
            g = Graph.from_edge_mask(n, mask)
            assert is_upper_critical_def(g) == (recognize(g) is not None)


def test_saturate():
    c5 = Graph.cycle(5)
    p = ColorPartition.from_sets([{0, 2}, {1, 4}, {3}])
    g = saturate_from_coloring(c5, p)
    assert g.edge_count == 8
    assert recognize(g) == PartitionSignature((2, 2, 1))
    assert is_upper_critical_def(g)
    # h is a subgraph of the result
    assert all(g.has_edge(u, v) for u, v in c5.edges())

    # fixpoint on an upper-critical input
    ug = construct(PartitionSignature((3, 2)))
    assert saturate_from_coloring(ug, chromatic_partition(ug)) == ug

    two = saturate_from_coloring(Graph(2), ColorPartition.from_sets([{0}, {1}]))
    assert two == Graph.complete(2)

    with pytest.raises(ValueError):
        saturate_from_coloring(c5, ColorPartition.from_sets([{0, 1}, {2, 3, 4}]))


def test_neighborhood_structure():
    assert neighborhood_structure_holds(Graph.cycle(4))
    assert neighborhood_structure_holds(Graph.complete(5))
    assert neighborhood_structure_holds(construct(PartitionSignature((2, 2, 1))))
    assert neighborhood_structure_holds(Graph(4))
    with pytest.raises(ValueError):
        neighborhood_structure_holds(Graph.cycle(5))
