"""Exact chromatic numbers and proper-partition machinery.

Everything here is exact and exhaustive, sized for the small graphs the
rest of the library works with. The chromatic number solver is a plain
branch-and-bound with a greedy clique lower bound; results are memoized
on the graph's adjacency rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .graph import Graph, _mask_to_set


@dataclass(frozen=True)
class ColorPartition:
    """A partition of {0..n-1} into non-empty color classes.

    Classes are kept sorted by smallest member, so equal partitions
    compare equal regardless of construction order.
    """

    classes: tuple[frozenset[int], ...]

    @classmethod
    def from_sets(cls, sets) -> ColorPartition:
        parts = [frozenset(s) for s in sets]
        if any(not p for p in parts):
            raise ValueError("color classes must be non-empty")
        seen: set[int] = set()
        for p in parts:
            if seen & p:
                raise ValueError("color classes must be disjoint")
            seen |= p
        if any(not isinstance(v, int) or isinstance(v, bool) or v < 0
               for v in seen):
            raise ValueError("vertices must be non-negative ints")
        parts.sort(key=min)
        return cls(tuple(parts))

    @property
    def k(self) -> int:
        return len(self.classes)

    def sizes(self) -> tuple[int, ...]:
        """Class sizes in descending order."""
        return tuple(sorted((len(c) for c in self.classes), reverse=True))

    def class_of(self, v: int) -> int:
        for i, c in enumerate(self.classes):
            if v in c:
                return i
        raise ValueError(f"vertex {v} not covered by partition")

    def covers(self, g: Graph) -> bool:
        return set().union(*self.classes) == set(range(g.n)) if self.classes \
            else g.n == 0

    def is_proper_for(self, g: Graph) -> bool:
        """Covers g and no class contains an edge."""
        if not self.covers(g):
            return False
        for c in self.classes:
            mask = 0
            for v in c:
                mask |= 1 << v
            for v in c:
                if g.neighbor_mask(v) & mask:
                    return False
        return True

    def __iter__(self):
        return iter(self.classes)


def greedy_clique_mask(g: Graph) -> int:
    """Bitmask of a maximal clique found greedily by descending degree."""
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    mask = 0
    for v in order:
        if g.neighbor_mask(v) & mask == mask:
            mask |= 1 << v
    return mask


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number; 0 for the empty graph."""
    return _chromatic_cached(g.n, g._rows)


@lru_cache(maxsize=1 << 20)
def _chromatic_cached(n: int, rows: tuple[int, ...]) -> int:
    if n == 0:
        return 0
    g = Graph._from_rows(n, rows)
    lo = greedy_clique_mask(g).bit_count()
    order = sorted(range(n), key=lambda v: (-rows[v].bit_count(), v))

    def colorable(k: int) -> bool:
        masks = [0] * k

        def place(i: int) -> bool:
            if i == n:
                return True
            v = order[i]
            used = 0
            for c in range(k):
                if masks[c] == 0:
                    # first empty class; later empties are symmetric
                    if used:
                        return False
                    used = 1
                if not masks[c] & rows[v]:
                    masks[c] |= 1 << v
                    if place(i + 1):
                        return True
                    masks[c] &= ~(1 << v)
            return False

        return place(0)

    k = lo
    while not colorable(k):
        k += 1
    return k


def enumerate_proper_partitions(g: Graph, k: int) -> Iterator[ColorPartition]:
    """All proper partitions of g into exactly k non-empty classes.

    Uses restricted growth: vertex 0 goes in class 0, and a vertex may
    open class c only if classes 0..c-1 are already open. Each partition
    therefore appears exactly once.
    """
    if k < 0:
        raise ValueError("class count must be non-negative")
    n = g.n
    if n == 0:
        if k == 0:
            yield ColorPartition(())
        return
    if k == 0 or k > n:
        return
    rows = g._rows
    masks: list[int] = []

    def place(v: int) -> Iterator[ColorPartition]:
        if v == n:
            if len(masks) == k:
                yield ColorPartition.from_sets(_mask_to_set(m) for m in masks)
            return
        # not enough vertices left to open the remaining classes?
        if k - len(masks) > n - v:
            return
        for c in range(len(masks)):
            if not masks[c] & rows[v]:
                masks[c] |= 1 << v
                yield from place(v + 1)
                masks[c] &= ~(1 << v)
        if len(masks) < k:
            masks.append(1 << v)
            yield from place(v + 1)
            masks.pop()

    yield from place(0)


def chromatic_partition(g: Graph) -> ColorPartition:
    """Some proper partition into chromatic_number(g) classes."""
    k = chromatic_number(g)
    for p in enumerate_proper_partitions(g, k):
        return p
    raise AssertionError("no partition at the chromatic number")  # unreachable


def is_uniquely_colorable(g: Graph) -> bool:
    """Exactly one proper partition into chromatic_number(g) classes."""
    k = chromatic_number(g)
    count = 0
    for _ in enumerate_proper_partitions(g, k):
        count += 1
        if count > 1:
            return False
    return count == 1


def quotient(g: Graph, p: ColorPartition) -> Graph:
    """Graph on p's classes; classes are adjacent iff some cross edge
    exists. Class order follows the partition's canonical order."""
    if not p.covers(g):
        raise ValueError("partition does not cover the graph")
    class_masks = []
    for c in p.classes:
        m = 0
        for v in c:
            m |= 1 << v
        class_masks.append(m)
    k = len(class_masks)
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)
             if any(g.neighbor_mask(v) & class_masks[j]
                    for v in _mask_to_set(class_masks[i]))]
    return Graph(k, edges)


def is_collapse(g: Graph, p: ColorPartition) -> bool:
    """True iff p is proper for g and its quotient is complete."""
    return p.is_proper_for(g) and quotient(g, p).is_complete()


def is_critical_vertex(g: Graph, v: int) -> bool:
    """Deleting v lowers the chromatic number."""
    return chromatic_number(g.delete_vertex(v)) < chromatic_number(g)


def is_critical_edge(g: Graph, u: int, v: int) -> bool:
    """Removing the edge uv lowers the chromatic number."""
    return chromatic_number(g.remove_edge(u, v)) < chromatic_number(g)
