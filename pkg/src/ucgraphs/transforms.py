"""Graph transformations and the (order, chi) movement predictor.

Each operation returns the transformed graph together with a MoveRecord
holding the predicted landing cell in the (N, chi) grid, the actual cell
recomputed from the result, and whether the result is upper-critical by
the definitional oracle. Predictions come purely from case analysis on
the input (complete vs non-complete operands); they are never copied
from the result, so disagreements surface instead of vanishing.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .graph import Graph
from .coloring import chromatic_number, is_critical_edge
from .upper_critical import is_upper_critical_def


class SpacePoint(NamedTuple):
    order: int
    chroma: int


class TransformKind(Enum):
    DELETE_VERTEX = "delete-vertex"
    IDENTIFY = "identify"
    CONTRACT_EDGE = "contract-edge"
    ADD_COPY = "add-copy"
    ADD_COMPLETE_VERTEX = "add-complete-vertex"
    ADD_EDGE = "add-edge"
    REMOVE_CRITICAL_EDGES = "remove-critical-edges"


@dataclass(frozen=True)
class MoveRecord:
    """Before/predicted/actual cells plus the oracle verdict.

    ``actual`` is always recomputed from the result graph. For add-edge,
    ``condition_log`` holds the evaluated side conditions as ordered
    (name, value) pairs.
    """

    before: SpacePoint
    predicted: SpacePoint
    actual: SpacePoint
    preserved: bool
    condition_log: tuple[tuple[str, bool], ...] | None = None


def predict_move(g: Graph, kind: TransformKind, *operands) -> SpacePoint:
    """Predicted landing cell for a transform, from the input graph only.

    Case analysis: deleting a complete vertex drops chi, contracting an
    edge moves chi by (number of non-complete endpoints) - 1, identifying
    non-adjacent vertices and adding a copy keep chi, adding a complete
    vertex or an in-class edge raises it, removing m critical edges drops
    it by m.
    """
    n = g.n
    k = chromatic_number(g)
    if kind is TransformKind.DELETE_VERTEX:
        (x,) = _arity(kind, operands, 1)
        if g.is_complete_vertex(x):
            return SpacePoint(n - 1, k - 1)
        return SpacePoint(n - 1, k)
    if kind is TransformKind.IDENTIFY:
        _arity(kind, operands, 2)
        return SpacePoint(n - 1, k)
    if kind is TransformKind.CONTRACT_EDGE:
        x, y = _arity(kind, operands, 2)
        noncomplete = (not g.is_complete_vertex(x)) + (not g.is_complete_vertex(y))
        return SpacePoint(n - 1, k - 1 + noncomplete)
    if kind is TransformKind.ADD_COPY:
        _arity(kind, operands, 1)
        return SpacePoint(n + 1, k)
    if kind is TransformKind.ADD_COMPLETE_VERTEX:
        _arity(kind, operands, 0)
        return SpacePoint(n + 1, k + 1)
    if kind is TransformKind.ADD_EDGE:
        _arity(kind, operands, 2)
        return SpacePoint(n, k + 1)
    if kind is TransformKind.REMOVE_CRITICAL_EDGES:
        (m,) = _arity(kind, operands, 1)
        return SpacePoint(n, k - m)
    raise ValueError(f"unknown transform kind {kind!r}")


def _arity(kind: TransformKind, operands, want: int):
    if len(operands) != want:
        raise ValueError(
            f"{kind.value} takes {want} operand(s), got {len(operands)}")
    return operands


def _record(g: Graph, predicted: SpacePoint, result: Graph,
            conditions: tuple[tuple[str, bool], ...] | None = None) -> MoveRecord:
    return MoveRecord(
        before=SpacePoint(g.n, chromatic_number(g)),
        predicted=predicted,
        actual=SpacePoint(result.n, chromatic_number(result)),
        preserved=is_upper_critical_def(result),
        condition_log=conditions,
    )


def _merge(g: Graph, x: int, y: int) -> Graph:
    """Replace x and y by one vertex with the union neighborhood.

    The merged vertex takes the lower index; the higher slot is removed
    and later indices shift down.
    """
    lo, hi = (x, y) if x < y else (y, x)
    union = (g.neighbor_mask(x) | g.neighbor_mask(y)) & ~(1 << lo) & ~(1 << hi)
    rows = list(g._rows)
    rows[lo] = union
    for v in range(g.n):
        if v == lo or v == hi:
            continue
        if union >> v & 1:
            rows[v] |= 1 << lo
        else:
            rows[v] &= ~(1 << lo)
    return Graph._from_rows(g.n, tuple(rows)).delete_vertex(hi)


def delete_vertex(g: Graph, x: int) -> tuple[Graph, MoveRecord]:
    predicted = predict_move(g, TransformKind.DELETE_VERTEX, x)
    result = g.delete_vertex(x)
    return result, _record(g, predicted, result)


def identify_vertices(g: Graph, x: int, y: int) -> tuple[Graph, MoveRecord]:
    """Merge two non-adjacent vertices."""
    if x == y:
        raise ValueError("cannot identify a vertex with itself")
    if g.has_edge(x, y):
        raise ValueError(f"vertices {x},{y} are adjacent; use contract_edge")
    predicted = predict_move(g, TransformKind.IDENTIFY, x, y)
    result = _merge(g, x, y)
    return result, _record(g, predicted, result)


def contract_edge(g: Graph, x: int, y: int) -> tuple[Graph, MoveRecord]:
    """Merge two adjacent vertices."""
    if not g.has_edge(x, y):
        raise ValueError(f"no edge {x},{y} to contract")
    predicted = predict_move(g, TransformKind.CONTRACT_EDGE, x, y)
    result = _merge(g, x, y)
    return result, _record(g, predicted, result)


def add_copy(g: Graph, x: int) -> tuple[Graph, MoveRecord]:
    """Append a new vertex with the same neighborhood as x (and not
    adjacent to x)."""
    predicted = predict_move(g, TransformKind.ADD_COPY, x)
    result = g.add_vertex(g.neighbor_mask(x))
    return result, _record(g, predicted, result)


def add_complete_vertex(g: Graph) -> tuple[Graph, MoveRecord]:
    """Append a new vertex adjacent to every existing vertex."""
    predicted = predict_move(g, TransformKind.ADD_COMPLETE_VERTEX)
    result = g.add_vertex((1 << g.n) - 1)
    return result, _record(g, predicted, result)


def add_edge_with_conditions(g: Graph, x: int, y: int) -> tuple[Graph, MoveRecord]:
    """Add the edge xy and log the side conditions under which the
    result is claimed to stay upper-critical.

    Condition 1 says the closed neighborhood of the endpoint does not
    induce a complete graph; the strict variant additionally requires
    that complete graph to have exactly chi(g) vertices. Condition 2
    bounds the complement edge count by N - chi(g). The verdict
    (``preserved``) is always taken from the definitional oracle, never
    from the conditions.
    """
    k = chromatic_number(g)
    conditions = (
        ("cond1_strict_x", not _closed_nbhd_complete_k(g, x, k, strict=True)),
        ("cond1_strict_y", not _closed_nbhd_complete_k(g, y, k, strict=True)),
        ("cond1_loose_x", not _closed_nbhd_complete_k(g, x, k, strict=False)),
        ("cond1_loose_y", not _closed_nbhd_complete_k(g, y, k, strict=False)),
        ("cond2", g.complement().edge_count <= g.n - k),
    )
    predicted = predict_move(g, TransformKind.ADD_EDGE, x, y)
    result = g.add_edge(x, y)
    return result, _record(g, predicted, result, conditions)


def _closed_nbhd_complete_k(g: Graph, x: int, k: int, strict: bool) -> bool:
    """Does N[x] induce a complete graph (of exactly k vertices, if
    strict)?"""
    mask = g.neighbor_mask(x) | 1 << x
    if strict and mask.bit_count() != k:
        return False
    m = mask
    while m:
        v = m & -m
        m &= ~v
        u = v.bit_length() - 1
        if g.neighbor_mask(u) & mask != mask & ~(1 << u):
            return False
    return True


def critical_sequence_search(k: int, m: int, *, max_k: int = 7):
    """Search K_k for a sequence of m edge removals where every removed
    edge is critical (chi drops) in the graph it leaves, ending in an
    upper-critical graph.

    Depth-first in lexicographic edge order; returns the first
    (edge sequence, final graph) found, or None. Exhaustive, so None
    means no such sequence exists.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if k > max_k:
        raise ValueError(f"k={k} exceeds exhaustive bound {max_k}")
    if not 0 <= m <= k * (k - 1) // 2:
        raise ValueError(f"m={m} out of range for K_{k}")

    path: list[tuple[int, int]] = []

    def dfs(g: Graph, depth: int) -> Graph | None:
        if depth == m:
            return g if is_upper_critical_def(g) else None
        for u, v in g.edges():
            if is_critical_edge(g, u, v):
                path.append((u, v))
                found = dfs(g.remove_edge(u, v), depth + 1)
                if found is not None:
                    return found
                path.pop()
        return None

    final = dfs(Graph.complete(k), 0)
    if final is None:
        return None
    return tuple(path), final
