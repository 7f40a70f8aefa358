"""Upper-critical graphs: definition, recognition, construction.

A graph is upper-critical when no edge can be added without raising the
chromatic number (complete graphs qualify vacuously). These are exactly
the complete multipartite graphs; a graph of this kind is described up
to isomorphism by its signature, the multiset of color-class sizes.

``is_upper_critical_def`` is the brute-force definitional oracle and
``recognize`` the fast structural check; they are implemented
independently so each can be tested against the other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import MAX_ORDER, Graph, _mask_to_set
from .coloring import ColorPartition, chromatic_number, chromatic_partition


@dataclass(frozen=True)
class PartitionSignature:
    """Descending multiset of class sizes, e.g. (3, 2, 2).

    Parts are sorted on construction, so any input order yields the same
    value. All parts must be positive. The empty signature is allowed as
    a degenerate value describing the graph with no vertices; it is what
    makes the partition count P(0,0) = 1 come out right.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise ValueError(f"signature parts must be positive ints, got {p!r}")
        object.__setattr__(self, "parts", tuple(sorted(parts, reverse=True)))

    @property
    def order(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


def is_upper_critical_def(g: Graph) -> bool:
    """Definitional oracle: complete, or every added edge raises chi."""
    if g.is_complete():
        return True
    k = chromatic_number(g)
    return all(chromatic_number(g.add_edge(u, v)) > k for u, v in g.non_edges())


def recognize(g: Graph) -> PartitionSignature | None:
    """Structural check in O(N^2): g is complete multipartite iff its
    complement is a disjoint union of cliques; the clique sizes are the
    signature. Returns None for anything else."""
    comp = g.complement()
    full = (1 << g.n) - 1
    seen = 0
    sizes = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        part = 1 << v
        frontier = 1 << v
        while frontier:
            u = frontier.bit_length() - 1
            frontier &= ~(1 << u)
            new = comp.neighbor_mask(u) & ~part
            part |= new
            frontier |= new
        for u in _mask_to_set(part):
            if comp.neighbor_mask(u) & part != part & ~(1 << u):
                return None
        seen |= part
        sizes.append(part.bit_count())
    assert seen == full
    return PartitionSignature(tuple(sizes))


def construct(s: PartitionSignature) -> Graph:
    """The complete multipartite graph for a signature: classes laid out
    as consecutive vertex blocks, largest class first, all cross edges."""
    n = s.order
    if n > MAX_ORDER:
        raise ValueError(f"order {n} exceeds maximum {MAX_ORDER}")
    full = (1 << n) - 1
    rows = []
    start = 0
    for size in s.parts:
        block = ((1 << size) - 1) << start
        rows.extend([full & ~block] * size)
        start += size
    return Graph._from_rows(n, tuple(rows))


def saturate_from_coloring(h: Graph, p: ColorPartition) -> Graph:
    """Add every cross-class edge of the proper partition p to h.

    The result is upper-critical with signature = class sizes of p, and
    contains h as a subgraph.
    """
    if not p.is_proper_for(h):
        raise ValueError("partition is not a proper coloring of the graph")
    full = (1 << h.n) - 1
    rows = [0] * h.n
    for c in p.classes:
        block = 0
        for v in c:
            block |= 1 << v
        for v in c:
            rows[v] = full & ~block
    return Graph._from_rows(h.n, tuple(rows))


def neighborhood_structure_holds(g: Graph) -> bool:
    """In an upper-critical graph, N(x) must be exactly the vertices
    outside x's color class, for every x. Raises if g is not
    upper-critical."""
    if not is_upper_critical_def(g):
        raise ValueError("input graph is not upper-critical")
    p = chromatic_partition(g)
    full = (1 << g.n) - 1
    for c in p.classes:
        block = 0
        for v in c:
            block |= 1 << v
        for v in c:
            if g.neighbor_mask(v) != full & ~block:
                return False
    return True
