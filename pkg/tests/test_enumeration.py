"""Partition counting, signature generation, catalog table."""

from __future__ import annotations

from itertools import combinations_with_replacement

import pytest

from ucgraphs.coloring import chromatic_number
from ucgraphs.enumeration import (cell_labels, count_partitions, emit_table,
                                  enumerate_upper_critical, partitions_of,
                                  table_cells)
from ucgraphs.graph import Graph
from ucgraphs.upper_critical import (PartitionSignature, is_upper_critical_def,
                                     recognize)


def partitions_brute(N, k):
    """Independent generator: filter multisets drawn from 1..N."""
    if N == 0 and k == 0:
        return [()]
    return [tuple(sorted(c, reverse=True))
            for c in combinations_with_replacement(range(1, N + 1), k)
            if sum(c) == N]


def test_count_base_cases():
    assert count_partitions(0, 0) == 1
    assert count_partitions(3, 0) == 0
    assert count_partitions(2, 5) == 0
    assert count_partitions(4, 2) == 2
    assert count_partitions(5, 3) == 2
    assert count_partitions(6, 3) == 3


def test_count_against_brute_force():
    for N in range(0, 13):
        for k in range(0, N + 1):
            assert count_partitions(N, k) == len(partitions_brute(N, k)), (N, k)


def test_total_partition_numbers():
    totals = [sum(count_partitions(N, k) for k in range(0, N + 1))
              for N in range(1, 11)]
    assert totals[:8] == [1, 2, 3, 5, 7, 11, 15, 22]
    assert sum(totals) == 138
    assert sum(count_partitions(25, k) for k in range(0, 26)) == 1958


def test_count_errors():
    with pytest.raises(ValueError):
        count_partitions(-1, 0)
    with pytest.raises(ValueError):
        count_partitions(0, -2)
    with pytest.raises(ValueError):
        count_partitions(61, 3)
    # the bound itself is fine
    assert count_partitions(60, 1) == 1


def test_partitions_of_order_and_content():
    assert [s.parts for s in partitions_of(6, 3)] == \
        [(4, 1, 1), (3, 2, 1), (2, 2, 2)]
    assert [s.parts for s in partitions_of(5, 2)] == [(4, 1), (3, 2)]
    assert partitions_of(0, 0) == [PartitionSignature(())]
    assert partitions_of(5, 0) == []
    assert partitions_of(2, 5) == []
    with pytest.raises(ValueError):
        partitions_of(-1, 1)


def test_partitions_of_matches_count():
    for N in range(0, 15):
        for k in range(0, N + 2):
            got = partitions_of(N, k)
            assert len(got) == count_partitions(N, k)
            assert sorted(s.parts for s in got) == \
                sorted(partitions_brute(N, k))
            # descending lexicographic output order
            assert [s.parts for s in got] == \
                sorted((s.parts for s in got), reverse=True)


def test_enumerate_upper_critical():
    got = enumerate_upper_critical(4)
    sigs = [recognize(g).parts for g in got]
    assert sigs == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    # chi ascending
    assert [chromatic_number(g) for g in got] == [1, 2, 2, 3, 4]

    got = enumerate_upper_critical(4, connected_only=True)
    assert [recognize(g).parts for g in got] == \
        [(3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    got = enumerate_upper_critical(5, k=2)
    assert [recognize(g).parts for g in got] == [(4, 1), (3, 2)]

    assert enumerate_upper_critical(1) == [Graph(1)]
    assert enumerate_upper_critical(1, connected_only=True) == [Graph(1)]
    assert enumerate_upper_critical(0) == []

    for N in range(1, 7):
        graphs = enumerate_upper_critical(N)
        assert len(graphs) == sum(count_partitions(N, k)
                                  for k in range(1, N + 1))
        assert all(is_upper_critical_def(g) for g in graphs)

    with pytest.raises(ValueError):
        enumerate_upper_critical(-1)
    with pytest.raises(ValueError):
        enumerate_upper_critical(33)


def test_cell_labels():
    assert cell_labels(4, 2) == ["{1,3}", "{2,2}"]
    assert cell_labels(5, 3) == ["{1,1,3}", "{1,2,2}"]
    assert cell_labels(4, 4) == ["K_4"]
    assert cell_labels(1, 1) == ["K_1"]
    assert cell_labels(3, 1) == ["{3}"]
    assert cell_labels(4, 6) == []


def test_table_cells():
    cells = table_cells(5)
    assert len(cells) == 5 and all(len(r) == 5 for r in cells)
    assert cells[0] == [["K_1"], [], [], [], []]
    assert cells[3] == [[], ["{1,3}", "{2,2}"], ["{1,1,2}"], ["K_4"], []]
    assert cells[4] == [[], ["{1,4}", "{2,3}"], ["{1,1,3}", "{1,2,2}"],
                        ["{1,1,1,2}"], ["K_5"]]
    # k=1 column holds only K_1
    assert all(cells[N - 1][0] == [] for N in range(2, 6))
    with pytest.raises(ValueError):
        table_cells(0)


def test_emit_table():
    text = emit_table(4)
    lines = text.splitlines()
    assert lines[0].startswith("V\\k | 1")
    assert "-+-" in lines[1]
    assert len(lines) == 6
    row4 = lines[5]
    assert row4.startswith("4")
    assert "{1,3}, {2,2}" in row4
    assert "{1,1,2}" in row4
    assert "K_4" in row4
    assert text.endswith("\n")


def test_cell_count_matches_partition_count():
    for max_n in (3, 6):
        cells = table_cells(max_n)
        for N in range(1, max_n + 1):
            for k in range(2, N + 1):
                assert len(cells[N - 1][k - 1]) == count_partitions(N, k)
