"""Text formats: graph6, edge lists, signature and partition strings.

graph6 follows the standard layout: one header byte 63+n (orders up to
62), then the upper triangle packed column by column, six bits per
printable character. The edgelist format is "N M" followed by M lines
"u v"; '#' starts a comment.
"""

from __future__ import annotations

import re

from .graph import Graph
from .coloring import ColorPartition
from .upper_critical import PartitionSignature

GRAPH6_HEADER = ">>graph6<<"


def encode_graph6(g: Graph, header: bool = False) -> str:
    if g.n > 62:
        raise ValueError("graph6 single-byte orders stop at 62")
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(g.neighbor_mask(u) >> v & 1)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + g.n)]
    for i in range(0, len(bits), 6):
        group = 0
        for b in bits[i:i + 6]:
            group = group << 1 | b
        out.append(chr(63 + group))
    s = "".join(out)
    return GRAPH6_HEADER + s if header else s


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise ValueError("empty graph6 string")
    n = ord(s[0]) - 63
    if n == 63:
        raise ValueError("graph6 orders above 62 are not supported")
    if not 0 <= n <= 62:
        raise ValueError(f"invalid graph6 header byte {s[0]!r}")
    npairs = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (npairs + 5) // 6:
        raise ValueError(
            f"graph6 body has {len(body)} characters, expected {(npairs + 5) // 6}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise ValueError(f"invalid graph6 character {ch!r}")
        bits.extend(val >> i & 1 for i in range(5, -1, -1))
    if any(bits[npairs:]):
        raise ValueError("graph6 padding bits are not zero")
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return Graph(n, edges)


def serialize_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ValueError("empty edgelist")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"edgelist header must be 'N M', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError(f"edgelist header must be 'N M', got {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise ValueError("edgelist header values must be non-negative")
    if len(lines) - 1 != m:
        raise ValueError(f"edgelist declares {m} edges but has {len(lines) - 1} edge lines")
    edges = []
    seen = set()
    for line in lines[1:]:
        pair = line.split()
        if len(pair) != 2:
            raise ValueError(f"edge line must be 'u v', got {line!r}")
        try:
            u, v = int(pair[0]), int(pair[1])
        except ValueError:
            raise ValueError(f"edge line must be 'u v', got {line!r}") from None
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge {u},{v} out of range for order {n}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"duplicate edge {u},{v}")
        seen.add(key)
        edges.append((u, v))
    return Graph(n, edges)


def detect_format(text: str) -> str:
    """Guess edgelist vs graph6 from the first payload line. Digits are
    below the graph6 character range, so 'N M' headers are unambiguous."""
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            return "edgelist" if re.fullmatch(r"\d+\s+\d+", line) else "graph6"
    raise ValueError("empty input")


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    if fmt == "auto":
        fmt = detect_format(text)
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "graph6":
        return decode_graph6(text)
    raise ValueError(f"unknown format {fmt!r}")


def format_signature(s: PartitionSignature) -> str:
    return str(s)


def parse_signature(text: str) -> PartitionSignature:
    parts = []
    for tok in text.split(","):
        tok = tok.strip()
        if not re.fullmatch(r"\d+", tok or ""):
            raise ValueError(f"bad signature part {tok!r}")
        parts.append(int(tok))
    if not parts:
        raise ValueError("empty signature")
    return PartitionSignature(tuple(parts))


def parse_partition(text: str) -> ColorPartition:
    """Classes separated by '|', vertices by ',', e.g. '0,2|1,4|3'."""
    classes = []
    for chunk in text.split("|"):
        verts = []
        for tok in chunk.split(","):
            tok = tok.strip()
            if not re.fullmatch(r"\d+", tok or ""):
                raise ValueError(f"bad vertex {tok!r} in partition")
            verts.append(int(tok))
        classes.append(verts)
    return ColorPartition.from_sets(classes)
