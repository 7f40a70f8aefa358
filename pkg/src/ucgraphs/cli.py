"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 parse or I/O failure, 3 a
verification run found a falsified property, 4 internal inconsistency
(the library disagreeing with itself).
"""

from __future__ import annotations

import argparse
import json
import sys

from .coloring import chromatic_number, chromatic_partition
from .upper_critical import (construct, is_upper_critical_def, recognize,
                             saturate_from_coloring)
from . import transforms
from .enumeration import (count_partitions, emit_table, enumerate_upper_critical,
                          table_cells)
from .formats import (encode_graph6, format_signature, parse_graph,
                      parse_partition, parse_signature, serialize_edgelist)
from .verifier import TheoremId, VerifyBound, run_self_test, verify_all, \
    verify_theorem

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_FALSIFIED = 3
EXIT_INTERNAL = 4


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; the contract here says 1
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _load_graph(args):
    g = parse_graph(_read_text(args.file), args.format)
    if not g.is_connected():
        print("warning: input graph is not connected", file=sys.stderr)
    return g


def _emit_graph(g, out_format: str) -> None:
    if out_format == "edgelist":
        sys.stdout.write(serialize_edgelist(g))
    else:
        print(encode_graph6(g))


def _bool(b) -> str:
    return str(bool(b)).lower()


def cmd_check(args) -> int:
    g = _load_graph(args)
    by_def = is_upper_critical_def(g)
    sig = recognize(g)
    if by_def != (sig is not None):
        print(f"internal error: definitional check says {_bool(by_def)} but "
              f"structural recognition says {_bool(sig is not None)}",
              file=sys.stderr)
        return EXIT_INTERNAL
    sig_text = format_signature(sig) if sig is not None and sig.parts else "-"
    print(f"upper-critical: {_bool(by_def)} chi: {chromatic_number(g)} "
          f"signature: {sig_text} connected: {_bool(g.is_connected())}")
    return EXIT_OK


def cmd_construct(args) -> int:
    _emit_graph(construct(parse_signature(args.signature)), args.out_format)
    return EXIT_OK


def cmd_saturate(args) -> int:
    g = _load_graph(args)
    p = parse_partition(args.partition) if args.partition else chromatic_partition(g)
    _emit_graph(saturate_from_coloring(g, p), args.out_format)
    return EXIT_OK


def _parse_pair(text: str) -> tuple[int, int]:
    toks = text.split(",")
    if len(toks) != 2 or not all(t.strip().isdigit() for t in toks):
        raise ValueError(f"expected 'u,v', got {text!r}")
    return int(toks[0]), int(toks[1])


def _print_record(rec: transforms.MoveRecord) -> None:
    b, p, a = rec.before, rec.predicted, rec.actual
    print(f"before ({b.order},{b.chroma}) predicted ({p.order},{p.chroma}) "
          f"actual ({a.order},{a.chroma}) preserved {_bool(rec.preserved)}")


def cmd_transform(args) -> int:
    g = _load_graph(args)
    op = args.op

    if op in ("delete-vertex", "add-copy"):
        if args.vertex is None:
            print(f"transform: --op {op} requires --vertex", file=sys.stderr)
            return EXIT_USAGE
        fn = transforms.delete_vertex if op == "delete-vertex" else transforms.add_copy
        result, rec = fn(g, args.vertex)
    elif op in ("identify", "contract-edge", "add-edge"):
        flag = args.vertices if op == "identify" else args.edge
        if flag is None:
            name = "--vertices" if op == "identify" else "--edge"
            print(f"transform: --op {op} requires {name}", file=sys.stderr)
            return EXIT_USAGE
        x, y = _parse_pair(flag)
        fn = {"identify": transforms.identify_vertices,
              "contract-edge": transforms.contract_edge,
              "add-edge": transforms.add_edge_with_conditions}[op]
        result, rec = fn(g, x, y)
    elif op == "add-complete-vertex":
        result, rec = transforms.add_complete_vertex(g)
    elif op == "remove-critical-edges":
        if args.count is None:
            print("transform: --op remove-critical-edges requires --count",
                  file=sys.stderr)
            return EXIT_USAGE
        if not g.is_complete():
            raise ValueError("remove-critical-edges needs a complete input graph")
        found = transforms.critical_sequence_search(g.n, args.count)
        if found is None:
            print(f"no critical sequence of length {args.count} from K_{g.n}")
            return EXIT_OK
        edges, result = found
        rec = transforms.MoveRecord(
            before=transforms.SpacePoint(g.n, chromatic_number(g)),
            predicted=transforms.predict_move(
                g, transforms.TransformKind.REMOVE_CRITICAL_EDGES, args.count),
            actual=transforms.SpacePoint(result.n, chromatic_number(result)),
            preserved=is_upper_critical_def(result),
        )
        _print_record(rec)
        print("edges: " + " ".join(f"{u},{v}" for u, v in edges))
        print(f"result: {encode_graph6(result)}")
        return EXIT_OK
    else:  # unreachable; argparse restricts choices
        return EXIT_USAGE

    _print_record(rec)
    if rec.condition_log is not None:
        print("conditions: " + " ".join(f"{name}={_bool(val)}"
                                        for name, val in rec.condition_log))
    print(f"result: {encode_graph6(result)}")
    return EXIT_OK


def cmd_count(args) -> int:
    if args.n < 0:
        raise ValueError("--n must be non-negative")
    if args.k is not None:
        print(count_partitions(args.n, args.k))
    else:
        print(sum(count_partitions(args.n, k) for k in range(args.n + 1)))
    return EXIT_OK


def cmd_table(args) -> int:
    if args.fmt == "json":
        print(json.dumps(table_cells(args.max_n)))
    else:
        sys.stdout.write(emit_table(args.max_n))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    graphs = enumerate_upper_critical(args.n, args.k,
                                      connected_only=not args.all)
    for g in graphs:
        sig = recognize(g)
        print(f"{format_signature(sig)} {encode_graph6(g)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    bound = VerifyBound(max_n=args.max_n, signature_max_n=args.signature_max_n,
                        critical_k_max=args.critical_k_max)
    if args.self_test:
        report = run_self_test()
        reports = [report]
    elif args.theorem:
        reports = [verify_theorem(TheoremId[args.theorem], bound)]
    else:
        reports = verify_all(bound)

    for r in reports:
        print(f"{r.theorem.value}: {r.status} cases={r.cases_checked} "
              f"witnesses={len(r.witnesses)} elapsed={r.elapsed_ms}ms")
        for note in r.notes:
            print(f"  note: {note}")
        for w in r.witnesses[:4]:
            print(f"  witness: {w.graph6} {w.detail}")
        if len(r.witnesses) > 4:
            print(f"  (+{len(r.witnesses) - 4} more witnesses)")

    if args.json:
        payload = (reports[0].to_json_dict() if args.theorem or args.self_test
                   else [r.to_json_dict() for r in reports])
        with open(args.json, "w", encoding="ascii") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")

    if args.self_test:
        if reports[0].status == "falsified":
            print("self-test ok: the corrupted predictor was caught")
            return EXIT_OK
        print("self-test FAILED: the harness did not catch the corrupted "
              "predictor", file=sys.stderr)
        return EXIT_INTERNAL
    if any(r.status == "falsified" for r in reports):
        return EXIT_FALSIFIED
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="ucgraph",
                     description="Upper-critical (complete multipartite) "
                                 "graphs: check, build, transform, count, "
                                 "enumerate, verify.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("file", help="input graph file, or - for stdin")
        p.add_argument("--format", choices=["auto", "edgelist", "graph6"],
                       default="auto")

    def add_output(p):
        p.add_argument("--out-format", choices=["graph6", "edgelist"],
                       default="graph6")

    p = sub.add_parser("check", help="is the graph upper-critical?")
    add_input(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", help="build a graph from a signature")
    p.add_argument("--signature", required=True, help="e.g. 2,2 or 3,2,1")
    add_output(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("saturate",
                       help="join all cross-class pairs of a coloring")
    add_input(p)
    p.add_argument("--partition", help="e.g. 0,2|1,4|3 (default: a minimum "
                                       "coloring is computed)")
    add_output(p)
    p.set_defaults(func=cmd_saturate)

    p = sub.add_parser("transform", help="apply one transformation")
    add_input(p)
    p.add_argument("--op", required=True,
                   choices=[k.value for k in transforms.TransformKind])
    p.add_argument("--vertex", type=int)
    p.add_argument("--vertices", help="u,v for identify")
    p.add_argument("--edge", help="u,v for contract-edge / add-edge")
    p.add_argument("--count", type=int,
                   help="edges to remove for remove-critical-edges")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("count", help="count signatures P(N,k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="the (order x chi) catalog")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", dest="fmt", choices=["text", "json"],
                   default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("enumerate", help="list all upper-critical graphs "
                                         "of an order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--all", action="store_true",
                   help="include the edgeless (chi=1) graph")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run the falsification harness")
    p.add_argument("--theorem", choices=[t.name for t in TheoremId])
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--signature-max-n", type=int, default=8)
    p.add_argument("--critical-k-max", type=int, default=6)
    p.add_argument("--json", help="write the JSON report here")
    p.add_argument("--self-test", action="store_true",
                   help="prove the harness can fail")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (ValueError, OSError) as e:
        print(f"ucgraph: error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except RuntimeError as e:
        print(f"ucgraph: internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
