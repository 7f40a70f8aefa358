"""Immutable simple undirected graphs on dense 0-based vertices.

Adjacency is stored as one bitmask per vertex, which keeps values small,
hashable and cheap to copy. All operations are pure: they return new
``Graph`` values and never mutate their inputs.
"""

from __future__ import annotations

from itertools import combinations, permutations

# Hard cap on vertex count; raise it (e.g. ``ucgraphs.graph.MAX_ORDER = 64``)
# if you really need larger graphs. Exhaustive routines have their own,
# much smaller bounds.
MAX_ORDER = 32

# Brute-force canonicalization is factorial; beyond 8 vertices it is refused.
ISO_BOUND = 8


class Graph:
    """A simple undirected graph: no loops, no parallel edges."""

    __slots__ = ("n", "_rows")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        if n > MAX_ORDER:
            raise ValueError(f"order {n} exceeds maximum {MAX_ORDER}")
        rows = [0] * n
        for u, v in edges:
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self._rows = tuple(rows)

    @classmethod
    def _from_rows(cls, n: int, rows: tuple[int, ...]) -> Graph:
        g = object.__new__(cls)
        g.n = n
        g._rows = rows
        return g

    @classmethod
    def empty(cls, n: int) -> Graph:
        """The edgeless graph on n vertices."""
        return cls(n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        g = cls(n)
        full = (1 << n) - 1
        rows = tuple(full & ~(1 << v) for v in range(n))
        return cls._from_rows(n, rows)

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise ValueError("cycles need at least 3 vertices")
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> Graph:
        """Inverse of :meth:`edge_mask`: bit i is the i-th pair in
        lexicographic order (0,1), (0,2), ..., (0,n-1), (1,2), ..."""
        g = cls(n)
        rows = list(g._rows)
        i = 0
        for u in range(n):
            for v in range(u + 1, n):
                if mask >> i & 1:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                i += 1
        if mask >> i:
            raise ValueError("edge mask has bits beyond the last vertex pair")
        return cls._from_rows(n, tuple(rows))

    # -- queries ---------------------------------------------------------

    def vertices(self) -> range:
        return range(self.n)

    def neighbor_mask(self, v: int) -> int:
        _check_vertex(self.n, v)
        return self._rows[v]

    def has_edge(self, u: int, v: int) -> bool:
        _check_vertex(self.n, u)
        _check_vertex(self.n, v)
        return bool(self._rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.neighbor_mask(v).bit_count()

    def neighborhood(self, v: int, closed: bool = False) -> set[int]:
        """N(v), or the closed neighborhood N[v] = N(v) + {v} if ``closed``."""
        mask = self.neighbor_mask(v)
        if closed:
            mask |= 1 << v
        return _mask_to_set(mask)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n)
                for v in range(u + 1, self.n) if self._rows[u] >> v & 1]

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n)
                for v in range(u + 1, self.n) if not self._rows[u] >> v & 1]

    def edge_mask(self) -> int:
        """Pack the upper triangle into an int, lexicographic pair order."""
        mask = 0
        i = 0
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if self._rows[u] >> v & 1:
                    mask |= 1 << i
                i += 1
        return mask

    def is_complete(self) -> bool:
        full = (1 << self.n) - 1
        return all(self._rows[v] == full & ~(1 << v) for v in range(self.n))

    def is_complete_vertex(self, v: int) -> bool:
        """True iff v is adjacent to every other vertex (N[v] = V)."""
        return self.neighbor_mask(v) | 1 << v == (1 << self.n) - 1

    def is_connected(self) -> bool:
        """Exactly one component; the 0-vertex graph and K_1 count as
        connected."""
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            v = frontier.bit_length() - 1
            frontier &= ~(1 << v)
            new = self._rows[v] & ~seen
            seen |= new
            frontier |= new
        return seen == (1 << self.n) - 1

    def contains_clique(self, k: int) -> bool:
        """Exact search for k pairwise-adjacent vertices."""
        if k < 1:
            raise ValueError("clique size must be positive")
        if k > self.n:
            return False

        rows = self._rows

        def extend(cand: int, need: int) -> bool:
            if need == 0:
                return True
            while cand.bit_count() >= need:
                v = cand & -cand
                cand &= ~v
                if extend(cand & rows[v.bit_length() - 1], need - 1):
                    return True
            return False

        return extend((1 << self.n) - 1, k)

    # -- pure edits ------------------------------------------------------

    def add_edge(self, u: int, v: int) -> Graph:
        if self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) already present")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        rows = list(self._rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._from_rows(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) not present")
        rows = list(self._rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._from_rows(self.n, tuple(rows))

    def delete_vertex(self, x: int) -> Graph:
        """Remove x; vertices above x shift down by one."""
        _check_vertex(self.n, x)
        low = (1 << x) - 1
        rows = [(r & low) | (r >> (x + 1)) << x
                for v, r in enumerate(self._rows) if v != x]
        return Graph._from_rows(self.n - 1, tuple(rows))

    def add_vertex(self, neighbors: int = 0) -> Graph:
        """Append vertex n with the given neighbor bitmask."""
        n = self.n
        if n + 1 > MAX_ORDER:
            raise ValueError(f"order {n + 1} exceeds maximum {MAX_ORDER}")
        if neighbors >> n:
            raise ValueError("neighbor mask addresses nonexistent vertices")
        rows = [r | ((neighbors >> v & 1) << n)
                for v, r in enumerate(self._rows)]
        rows.append(neighbors)
        return Graph._from_rows(n + 1, tuple(rows))

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        rows = tuple(full & ~r & ~(1 << v) for v, r in enumerate(self._rows))
        return Graph._from_rows(self.n, rows)

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.n, self._rows))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {self.edges()})"


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every cross edge; g2's vertices are relabeled
    after g1's."""
    n1, n2 = g1.n, g2.n
    if n1 + n2 > MAX_ORDER:
        raise ValueError(f"joined order {n1 + n2} exceeds maximum {MAX_ORDER}")
    top = ((1 << n2) - 1) << n1
    low = (1 << n1) - 1
    rows = [g1._rows[v] | top for v in range(n1)]
    rows += [(g2._rows[v] << n1) | low for v in range(n2)]
    return Graph._from_rows(n1 + n2, tuple(rows))


def canonical_form(g: Graph) -> int:
    """Minimum edge mask over all vertex relabelings.

    Factorial-time; only meant for the small graphs this library deals in.
    """
    n = g.n
    if n > ISO_BOUND:
        raise ValueError(f"canonicalization limited to order {ISO_BOUND}, got {n}")
    edges = g.edges()
    index = {}
    i = 0
    for u in range(n):
        for v in range(u + 1, n):
            index[u, v] = i
            i += 1
    best = None
    for perm in permutations(range(n)):
        mask = 0
        for u, v in edges:
            a, b = perm[u], perm[v]
            if a > b:
                a, b = b, a
            mask |= 1 << index[a, b]
        if best is None or mask < best:
            best = mask
    return 0 if best is None else best


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    return canonical_form(g1) == canonical_form(g2)


def _check_vertex(n: int, v: int) -> None:
    if not isinstance(v, int) or isinstance(v, bool):
        raise ValueError(f"vertex must be an int, got {v!r}")
    if not 0 <= v < n:
        raise ValueError(f"vertex {v} out of range for order {n}")


def _mask_to_set(mask: int) -> set[int]:
    out = set()
    while mask:
        v = mask & -mask
        out.add(v.bit_length() - 1)
        mask &= ~v
    return out
