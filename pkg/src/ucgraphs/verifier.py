"""Exhaustive falsification harness.

Each structural claim about upper-critical graphs is registered as a
property and checked over every in-bound case: all labeled graphs up to
``max_n`` for the definitional/structural equivalence, all signatures up
to ``signature_max_n`` for the per-graph and per-transform claims.
Verdicts are recomputed from the definitional oracle case by case, never
assumed. Reports are deterministic apart from elapsed time, witnesses
are capped while counting continues, and the number of cases visited is
asserted against an independently computed total so silently skipped
cases cannot pass unnoticed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Callable, Iterator

from .graph import Graph
from .coloring import (chromatic_number, chromatic_partition,
                       enumerate_proper_partitions, is_critical_edge)
from .upper_critical import construct, is_upper_critical_def, recognize
from .enumeration import count_partitions, partitions_of
from .formats import encode_graph6
from . import transforms
from .transforms import SpacePoint, TransformKind

# 2^21 labeled graphs at n=7 is the ceiling for full enumeration
MAX_ENUM_N = 7

WITNESS_CAP = 16


class TheoremId(Enum):
    UNIQUE_COLORING = "UNIQUE_COLORING"
    NEIGHBORHOOD = "NEIGHBORHOOD"
    CLIQUE_CONTAIN = "CLIQUE_CONTAIN"
    COPY_PAIR = "COPY_PAIR"
    ADD_COPY = "ADD_COPY"
    DELETE_VERTEX = "DELETE_VERTEX"
    IDENTIFY = "IDENTIFY"
    CONTRACT = "CONTRACT"
    ADD_EDGE_CONDS = "ADD_EDGE_CONDS"
    CRITICAL_SEQUENCE = "CRITICAL_SEQUENCE"
    KPARTITE_EQUIV = "KPARTITE_EQUIV"
    TABLE_TRAVEL = "TABLE_TRAVEL"


@dataclass(frozen=True)
class VerifyBound:
    """Search bounds: max_n for labeled-graph sweeps, signature_max_n
    for signature-indexed sweeps, critical_k_max for the edge-removal
    sequence search."""

    max_n: int = 6
    signature_max_n: int = 8
    critical_k_max: int = 6

    def __post_init__(self):
        if not 1 <= self.max_n <= MAX_ENUM_N:
            raise ValueError(f"max_n must be in 1..{MAX_ENUM_N}")
        if not 1 <= self.signature_max_n <= 10:
            raise ValueError("signature_max_n must be in 1..10")
        if not 2 <= self.critical_k_max <= 7:
            raise ValueError("critical_k_max must be in 2..7")


@dataclass(frozen=True)
class Witness:
    graph6: str
    detail: str


@dataclass(frozen=True)
class TheoremReport:
    theorem: TheoremId
    max_n: int
    signature_max_n: int
    cases_checked: int
    status: str
    witnesses: tuple[Witness, ...]
    notes: tuple[str, ...]
    elapsed_ms: int

    def __post_init__(self):
        if self.status not in ("verified", "falsified"):
            raise ValueError(f"bad status {self.status!r}")
        if (self.status == "falsified") != bool(self.witnesses):
            raise ValueError("falsified iff witnesses present")
        if self.cases_checked <= 0:
            raise ValueError("cases_checked must be positive")

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "max_n": self.max_n,
            "signature_max_n": self.signature_max_n,
            "cases_checked": self.cases_checked,
            "status": self.status,
            "witnesses": [{"graph6": w.graph6, "detail": w.detail}
                          for w in self.witnesses],
            "elapsed_ms": self.elapsed_ms,
            "notes": list(self.notes),
        }


class _Collector:
    def __init__(self):
        self.cases = 0
        self.failures = 0
        self.witnesses: list[Witness] = []
        self.notes: list[str] = []

    def case(self):
        self.cases += 1

    def fail(self, g: Graph, detail: str):
        self.failures += 1
        if len(self.witnesses) < WITNESS_CAP:
            self.witnesses.append(Witness(encode_graph6(g), detail))


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """All labeled simple graphs on n vertices, ascending by edge
    bitmask."""
    if not 0 <= n <= MAX_ENUM_N:
        raise ValueError(f"n must be in 0..{MAX_ENUM_N}")
    for mask in range(1 << comb(n, 2)):
        g = Graph.from_edge_mask(n, mask)
        if connected_only and not g.is_connected():
            continue
        yield g


def _signatures(upto: int) -> Iterator:
    for N in range(1, upto + 1):
        for k in range(1, N + 1):
            yield from partitions_of(N, k)


def _non_edge_count(s) -> int:
    return sum(comb(a, 2) for a in s.parts)


def _edge_count(s) -> int:
    return comb(s.order, 2) - _non_edge_count(s)


def _pt(p: SpacePoint) -> str:
    return f"({p.order},{p.chroma})"


# -- per-theorem checkers -----------------------------------------------

def _check_unique_coloring(bound: VerifyBound, col: _Collector) -> None:
    for s in _signatures(bound.signature_max_n):
        g = construct(s)
        col.case()
        k = chromatic_number(g)
        count = 0
        for _ in enumerate_proper_partitions(g, k):
            count += 1
            if count > 1:
                break
        if count != 1:
            col.fail(g, f"signature={s} chi={k} chi_partitions={count}")


def _expected_unique_coloring(bound: VerifyBound) -> int:
    return sum(count_partitions(N, k)
               for N in range(1, bound.signature_max_n + 1)
               for k in range(1, N + 1))


def _check_neighborhood(bound: VerifyBound, col: _Collector) -> None:
    literal_failures = 0
    for s in _signatures(bound.signature_max_n):
        g = construct(s)
        p = chromatic_partition(g)
        full = (1 << g.n) - 1
        for c in p.classes:
            block = 0
            for v in c:
                block |= 1 << v
            for v in c:
                col.case()
                if g.neighbor_mask(v) != full & ~block:
                    col.fail(g, f"signature={s} x={v} intended_reading_failed")
                # literal reading: N(x) equals x's own class (x included)
                if g.neighbor_mask(v) != block:
                    literal_failures += 1
    col.notes.append(
        f"literal reading (N(x) = x's own class) fails on "
        f"{literal_failures}/{col.cases} cases; status reflects the intended "
        f"reading (N(x) = all vertices of other classes)")


def _expected_neighborhood(bound: VerifyBound) -> int:
    return sum(N * count_partitions(N, k)
               for N in range(1, bound.signature_max_n + 1)
               for k in range(1, N + 1))


def _check_clique_contain(bound: VerifyBound, col: _Collector) -> None:
    for s in _signatures(bound.signature_max_n):
        g = construct(s)
        col.case()
        k = chromatic_number(g)
        if not g.contains_clique(k):
            col.fail(g, f"signature={s} chi={k} no_K_{k}")


def _check_copy_pair(bound: VerifyBound, col: _Collector) -> None:
    for s in _signatures(bound.signature_max_n):
        g = construct(s)
        for u, v in g.non_edges():
            col.case()
            if g.neighbor_mask(u) != g.neighbor_mask(v):
                col.fail(g, f"signature={s} x={u} y={v} neighborhoods_differ")


def _expected_copy_pair(bound: VerifyBound) -> int:
    return sum(_non_edge_count(s) for s in _signatures(bound.signature_max_n))


def _check_add_copy(bound: VerifyBound, col: _Collector) -> None:
    for s in _signatures(bound.signature_max_n):
        g = construct(s)
        for x in range(g.n):
            col.case()
            _, rec = transforms.add_copy(g, x)
            if not rec.preserved:
                col.fail(g, f"signature={s} x={x} result_not_upper_critical")


def _check_delete_vertex(bound: VerifyBound, col: _Collector) -> None:
    for s in _signatures(bound.signature_max_n):
        g = construct(s)
        for x in range(g.n):
            col.case()
            _, rec = transforms.delete_vertex(g, x)
            if not rec.preserved:
                col.fail(g, f"signature={s} x={x} result_not_upper_critical")


def _check_identify(bound: VerifyBound, col: _Collector) -> None:
    for s in _signatures(bound.signature_max_n):
        g = construct(s)
        for u, v in g.non_edges():
            col.case()
            result, rec = transforms.identify_vertices(g, u, v)
            if not rec.preserved:
                col.fail(g, f"signature={s} x={u} y={v} result_not_upper_critical")
            elif result != g.delete_vertex(max(u, v)):
                col.fail(g, f"signature={s} x={u} y={v} identify_differs_from_delete")


def _check_contract(bound: VerifyBound, col: _Collector) -> None:
    for s in _signatures(bound.signature_max_n):
        g = construct(s)
        for u, v in g.edges():
            col.case()
            _, rec = transforms.contract_edge(g, u, v)
            if not rec.preserved:
                col.fail(g, f"signature={s} x={u} y={v} result_not_upper_critical")


def _expected_contract(bound: VerifyBound) -> int:
    return sum(_edge_count(s) for s in _signatures(bound.signature_max_n))


def _check_add_edge_conds(bound: VerifyBound, col: _Collector) -> None:
    claims = 0
    diverged = 0
    for s in _signatures(bound.max_n):
        g = construct(s)
        for u, v in g.non_edges():
            col.case()
            _, rec = transforms.add_edge_with_conditions(g, u, v)
            conds = dict(rec.condition_log)
            if (conds["cond1_strict_x"] != conds["cond1_loose_x"]
                    or conds["cond1_strict_y"] != conds["cond1_loose_y"]):
                diverged += 1
            if any(conds.values()):
                claims += 1
                if not rec.preserved:
                    flat = " ".join(f"{name}={str(b).lower()}"
                                    for name, b in rec.condition_log)
                    col.fail(g, f"signature={s} x={u} y={v} {flat} "
                                f"result_upper_critical=false")
    col.notes.append(
        f"{claims}/{col.cases} non-edges claimed upper-critical by at least "
        f"one stated condition")
    col.notes.append(
        f"strict and loose readings of condition 1 diverged on {diverged} cases")


def _expected_add_edge_conds(bound: VerifyBound) -> int:
    return sum(_non_edge_count(s) for s in _signatures(bound.max_n))


def _check_critical_sequence(bound: VerifyBound, col: _Collector) -> None:
    for k in range(2, bound.critical_k_max + 1):
        col.case()
        found = transforms.critical_sequence_search(k, k - 2)
        if found is None:
            col.fail(Graph.complete(k), f"k={k} m={k - 2} no_critical_sequence")
            continue
        edges, final = found
        g = Graph.complete(k)
        for u, v in edges:
            if not is_critical_edge(g, u, v):
                raise RuntimeError("search returned a non-critical edge")
            g = g.remove_edge(u, v)
        if g != final or not is_upper_critical_def(final):
            raise RuntimeError("search returned an invalid sequence")


def _check_kpartite_equiv(bound: VerifyBound, col: _Collector) -> None:
    for n in range(1, bound.max_n + 1):
        for g in enumerate_graphs(n):
            col.case()
            by_def = is_upper_critical_def(g)
            by_structure = recognize(g) is not None
            if by_def != by_structure:
                col.fail(g, f"n={n} def={str(by_def).lower()} "
                            f"recognize={str(by_structure).lower()}")


def _expected_kpartite_equiv(bound: VerifyBound) -> int:
    return sum(1 << comb(n, 2) for n in range(1, bound.max_n + 1))


def _check_table_travel(bound: VerifyBound, col: _Collector,
                        predictor: Callable[..., SpacePoint]) -> None:
    copy_cases = copy_fails = narrow_cases = narrow_fails = 0
    for s in _signatures(bound.signature_max_n):
        g = construct(s)
        # item 1a: add a copy of each vertex; the claim restricts itself
        # to non-complete vertices, the broad reading takes any vertex
        for x in range(g.n):
            col.case()
            pred = predictor(g, TransformKind.ADD_COPY, x)
            _, rec = transforms.add_copy(g, x)
            ok = rec.actual == pred and rec.preserved
            copy_cases += 1
            if not g.is_complete_vertex(x):
                narrow_cases += 1
                narrow_fails += not ok
            if not ok:
                copy_fails += 1
                col.fail(g, f"item=1a x={x} predicted={_pt(pred)} "
                            f"actual={_pt(rec.actual)} "
                            f"preserved={str(rec.preserved).lower()}")
        # item 1b: add a complete vertex
        col.case()
        pred = predictor(g, TransformKind.ADD_COMPLETE_VERTEX)
        _, rec = transforms.add_complete_vertex(g)
        if not (rec.actual == pred and rec.preserved):
            col.fail(g, f"item=1b predicted={_pt(pred)} actual={_pt(rec.actual)} "
                        f"preserved={str(rec.preserved).lower()}")
        # item 2: delete each vertex
        for x in range(g.n):
            col.case()
            pred = predictor(g, TransformKind.DELETE_VERTEX, x)
            _, rec = transforms.delete_vertex(g, x)
            if not (rec.actual == pred and rec.preserved):
                col.fail(g, f"item=2 x={x} predicted={_pt(pred)} "
                            f"actual={_pt(rec.actual)} "
                            f"preserved={str(rec.preserved).lower()}")
        # item 3: identify each non-adjacent pair
        for u, v in g.non_edges():
            col.case()
            pred = predictor(g, TransformKind.IDENTIFY, u, v)
            _, rec = transforms.identify_vertices(g, u, v)
            if not (rec.actual == pred and rec.preserved):
                col.fail(g, f"item=3 x={u} y={v} predicted={_pt(pred)} "
                            f"actual={_pt(rec.actual)} "
                            f"preserved={str(rec.preserved).lower()}")
        # item 4: contract each edge
        for u, v in g.edges():
            col.case()
            pred = predictor(g, TransformKind.CONTRACT_EDGE, u, v)
            _, rec = transforms.contract_edge(g, u, v)
            if not (rec.actual == pred and rec.preserved):
                col.fail(g, f"item=4 x={u} y={v} predicted={_pt(pred)} "
                            f"actual={_pt(rec.actual)} "
                            f"preserved={str(rec.preserved).lower()}")
    col.notes.append(
        f"item 1a narrow reading (copies of non-complete vertices): "
        f"{narrow_cases - narrow_fails}/{narrow_cases} cases hold")
    col.notes.append(
        f"item 1a broad reading (copies of any vertex): "
        f"{copy_cases - copy_fails}/{copy_cases} cases hold")
    if copy_fails == 0:
        col.notes.append(
            "both readings of item 1a hold at these bounds; the non-complete "
            "restriction is not needed")
    elif narrow_fails == 0:
        col.notes.append("only the narrow reading of item 1a holds")


def _expected_table_travel(bound: VerifyBound) -> int:
    total = 0
    for s in _signatures(bound.signature_max_n):
        N = s.order
        total += N + 1 + N + _non_edge_count(s) + _edge_count(s)
    return total


_REGISTRY: dict[TheoremId, tuple[Callable, Callable[[VerifyBound], int]]] = {
    TheoremId.UNIQUE_COLORING: (_check_unique_coloring, _expected_unique_coloring),
    TheoremId.NEIGHBORHOOD: (_check_neighborhood, _expected_neighborhood),
    TheoremId.CLIQUE_CONTAIN: (_check_clique_contain, _expected_unique_coloring),
    TheoremId.COPY_PAIR: (_check_copy_pair, _expected_copy_pair),
    TheoremId.ADD_COPY: (_check_add_copy, _expected_neighborhood),
    TheoremId.DELETE_VERTEX: (_check_delete_vertex, _expected_neighborhood),
    TheoremId.IDENTIFY: (_check_identify, _expected_copy_pair),
    TheoremId.CONTRACT: (_check_contract, _expected_contract),
    TheoremId.ADD_EDGE_CONDS: (_check_add_edge_conds, _expected_add_edge_conds),
    TheoremId.CRITICAL_SEQUENCE: (_check_critical_sequence,
                                  lambda b: b.critical_k_max - 1),
    TheoremId.KPARTITE_EQUIV: (_check_kpartite_equiv, _expected_kpartite_equiv),
    TheoremId.TABLE_TRAVEL: (_check_table_travel, _expected_table_travel),
}


def verify_theorem(theorem: TheoremId, bound: VerifyBound | None = None,
                   predictor: Callable[..., SpacePoint] | None = None
                   ) -> TheoremReport:
    """Run one registered property exhaustively and report.

    ``predictor`` overrides the movement predictor for TABLE_TRAVEL
    only; the self-test uses a corrupted one to prove the harness can
    fail.
    """
    if theorem not in _REGISTRY:
        raise ValueError(f"unknown theorem {theorem!r}")
    if predictor is not None and theorem is not TheoremId.TABLE_TRAVEL:
        raise ValueError("predictor override applies only to TABLE_TRAVEL")
    bound = bound if bound is not None else VerifyBound()
    checker, expected_fn = _REGISTRY[theorem]
    col = _Collector()
    t0 = time.perf_counter()
    if theorem is TheoremId.TABLE_TRAVEL:
        checker(bound, col, predictor if predictor is not None
                else transforms.predict_move)
    else:
        checker(bound, col)
    elapsed_ms = int((time.perf_counter() - t0) * 1000)
    expected = expected_fn(bound)
    if col.cases != expected:
        raise RuntimeError(
            f"{theorem.value}: walked {col.cases} cases but the analytic "
            f"count is {expected}; the sweep is broken")
    if col.failures > len(col.witnesses):
        col.notes.append(f"{col.failures} failing cases in total; first "
                         f"{len(col.witnesses)} kept as witnesses")
    return TheoremReport(
        theorem=theorem,
        max_n=bound.max_n,
        signature_max_n=bound.signature_max_n,
        cases_checked=col.cases,
        status="falsified" if col.failures else "verified",
        witnesses=tuple(col.witnesses),
        notes=tuple(col.notes),
        elapsed_ms=elapsed_ms,
    )


def verify_all(bound: VerifyBound | None = None) -> list[TheoremReport]:
    return [verify_theorem(t, bound) for t in TheoremId]


def run_self_test(bound: VerifyBound | None = None) -> TheoremReport:
    """Re-run TABLE_TRAVEL with an off-by-one predictor; the report must
    come back falsified or the harness cannot detect anything."""
    if bound is None:
        bound = VerifyBound(max_n=4, signature_max_n=4, critical_k_max=2)

    def corrupted(g: Graph, kind: TransformKind, *operands) -> SpacePoint:
        p = transforms.predict_move(g, kind, *operands)
        return SpacePoint(p.order, p.chroma + 1)

    return verify_theorem(TheoremId.TABLE_TRAVEL, bound, predictor=corrupted)
