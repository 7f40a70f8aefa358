"""Partition counting and the (order x chi) catalog of upper-critical
graphs.

``count_partitions`` follows the recurrence
P(N,k) = P(N-1,k-1) + P(N-k,k) with base cases P(0,0) = 1, P(N,0) = 0
for N > 0 and P(N,k) = 0 for k > N. ``partitions_of`` generates the same
objects directly, so the two sides can audit each other.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import MAX_ORDER, Graph
from .upper_critical import PartitionSignature, construct

# counting is bounds-checked here; the values stay within 64 bits
MAX_COUNT_N = 60


def count_partitions(N: int, k: int) -> int:
    """Number of multisets of k positive integers summing to N."""
    if N < 0 or k < 0:
        raise ValueError("arguments must be non-negative")
    if N > MAX_COUNT_N:
        raise ValueError(f"N={N} exceeds counting bound {MAX_COUNT_N}")
    return _count(N, k)


@lru_cache(maxsize=None)
def _count(N: int, k: int) -> int:
    if k == 0:
        return 1 if N == 0 else 0
    if k > N:
        return 0
    return _count(N - 1, k - 1) + _count(N - k, k)


def partitions_of(N: int, k: int) -> list[PartitionSignature]:
    """All signatures with exactly k parts summing to N, in descending
    lexicographic order, e.g. (6,3) -> (4,1,1), (3,2,1), (2,2,2)."""
    if N < 0 or k < 0:
        raise ValueError("arguments must be non-negative")

    out: list[PartitionSignature] = []

    def gen(total: int, parts_left: int, max_part: int, prefix: tuple[int, ...]):
        if parts_left == 0:
            if total == 0:
                out.append(PartitionSignature(prefix))
            return
        hi = min(max_part, total - (parts_left - 1))
        lo = max(-(-total // parts_left), 1)  # ceil: parts are descending
        for first in range(hi, lo - 1, -1):
            gen(total - first, parts_left - 1, first, prefix + (first,))

    gen(N, k, N, ())
    return out


def enumerate_upper_critical(N: int, k: int | None = None,
                             connected_only: bool = False) -> list[Graph]:
    """Every upper-critical graph of order N (one per signature), chi
    ascending then descending-lex within each chi.

    connected_only drops the edgeless graph {N} for N >= 2, matching the
    convention that only connected graphs are cataloged.
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    if N > MAX_ORDER:
        raise ValueError(f"order {N} exceeds maximum {MAX_ORDER}")
    ks = range(1, N + 1) if k is None else [k]
    out = []
    for kk in ks:
        if connected_only and kk == 1 and N >= 2:
            continue
        out.extend(construct(s) for s in partitions_of(N, kk))
    return out


def cell_labels(N: int, k: int) -> list[str]:
    """Signature labels for one catalog cell: K_N for the complete graph,
    otherwise {a,b,...} with parts ascending."""
    labels = []
    for s in partitions_of(N, k):
        if all(p == 1 for p in s.parts):
            labels.append(f"K_{N}")
        else:
            labels.append("{" + ",".join(str(p) for p in sorted(s.parts)) + "}")
    return labels


def table_cells(max_n: int) -> list[list[list[str]]]:
    """Rows N = 1..max_n, columns k = 1..max_n; each cell a list of
    labels. Connected convention: the k=1 column is empty for N >= 2."""
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    rows = []
    for N in range(1, max_n + 1):
        row = []
        for k in range(1, max_n + 1):
            if k == 1 and N >= 2:
                row.append([])
            else:
                row.append(cell_labels(N, k))
        rows.append(row)
    return rows


def emit_table(max_n: int) -> str:
    """Plain-text grid of the catalog."""
    cells = table_cells(max_n)
    texts = [[", ".join(c) for c in row] for row in cells]
    head = ["V\\k"] + [str(k) for k in range(1, max_n + 1)]
    widths = [len(h) for h in head]
    widths[0] = max(widths[0], *(len(str(N)) for N in range(1, max_n + 1)))
    for row in texts:
        for i, t in enumerate(row):
            widths[i + 1] = max(widths[i + 1], len(t))
    lines = [" | ".join(h.ljust(w) for h, w in zip(head, widths)).rstrip()]
    lines.append("-+-".join("-" * w for w in widths))
    for N, row in enumerate(texts, start=1):
        fields = [str(N).ljust(widths[0])]
        fields += [t.ljust(w) for t, w in zip(row, widths[1:])]
        lines.append(" | ".join(fields).rstrip())
    return "\n".join(lines) + "\n"
