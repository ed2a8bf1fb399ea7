"""Command-line front end.

Input files are plain text: full-line ``#`` comments, one ``vertices:``
line (an integer m for labels 1..m, or an explicit label list), then any
number of ``edge:`` lines listing distinct declared labels::

    # triangular prism
    vertices: 6
    edge: 1 2
    edge: 2 3

Exit codes: 0 success (for ``iso``: isomorphic; for ``verify``: all checks
pass), 1 negative semantic result, 2 parse/usage error, 3 a size cap was
exceeded.  Output is byte-stable for fixed input and flags.
"""

from __future__ import annotations

import argparse
import sys

from .checks import run_checks
from .errors import (
    CapExceeded,
    DuplicateEdge,
    HyperautError,
    ParseError,
    UnknownLabel,
)
from .groups import aut, iso
from .matrix import (
    MAX_ARITY,
    Hypergraph,
    block_matrix,
    det_initiators,
    det_leibniz,
)
from .oracle import OracleConfig, brute_aut, brute_iso
from .partials import MAX_EXPANSION, GroundSet


def parse_hypergraph_text(text: str, source: str = "<text>") -> Hypergraph:
    """Parse the hypergraph file format; errors carry line numbers."""
    labels = None
    int_labels = False
    edges = []
    edge_sets = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("vertices:"):
            if labels is not None:
                raise ParseError("second vertices: line", lineno)
            tokens = line[len("vertices:"):].split()
            if not tokens:
                raise ParseError("vertices: line lists nothing", lineno)
            if len(tokens) == 1 and _is_int(tokens[0]):
                count = int(tokens[0])
                if count < 0:
                    raise ParseError("negative vertex count", lineno)
                labels = tuple(range(1, count + 1))
                int_labels = True
            else:
                int_labels = all(_is_int(t) for t in tokens)
                labels = tuple(int(t) if int_labels else t for t in tokens)
            if len(set(labels)) != len(labels):
                raise ParseError("duplicate vertex label", lineno)
        elif line.startswith("edge:"):
            if labels is None:
                raise ParseError("edge: before vertices:", lineno)
            tokens = line[len("edge:"):].split()
            if not tokens:
                raise ParseError("edge: line lists no vertices", lineno)
            known = set(labels)
            edge = []
            for t in tokens:
                value = int(t) if int_labels and _is_int(t) else t
                if value not in known:
                    raise UnknownLabel(f"unknown vertex label {t!r}", lineno)
                edge.append(value)
            if len(set(edge)) != len(edge):
                raise ParseError("edge lists a vertex twice", lineno)
            key = frozenset(edge)
            if key in edge_sets:
                raise DuplicateEdge(f"edge {' '.join(tokens)} appears twice", lineno)
            edge_sets.add(key)
            edges.append(tuple(edge))
        else:
            raise ParseError(f"unrecognized line {line.split()[0]!r}", lineno)
    if labels is None:
        raise ParseError(f"{source}: no vertices: line")
    ground = GroundSet(labels)
    return Hypergraph(ground, tuple(tuple(ground.index(v) for v in e) for e in edges))


def parse_hypergraph(path: str) -> Hypergraph:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    try:
        return parse_hypergraph_text(text, source=path)
    except ParseError as exc:
        exc.args = (f"{path}: {exc.args[0]}",)
        raise


def _is_int(token: str) -> bool:
    try:
        int(token)
    except ValueError:
        return False
    return True


# --- output formatting -------------------------------------------------------


def fmt_tworow(perm, src: GroundSet, dst: GroundSet) -> str:
    top = " ".join(str(lab) for lab in src.labels)
    bottom = " ".join(str(dst.label(perm[i])) for i in range(src.size))
    return f"{top} / {bottom}"


def fmt_cycles(perm, ground: GroundSet) -> str:
    seen = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        nxt = perm[start]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt]
        cycles.append(cycle)
    if not cycles:
        return "()"
    cycles.sort(key=lambda c: c[0])
    return "".join(
        "(" + " ".join(str(ground.label(x)) for x in c) + ")" for c in cycles
    )


def fmt_partial_term(term, src: GroundSet, dst: GroundSet) -> str:
    if not term.pairs:
        return "()"
    doms = " ".join(str(src.label(d)) for d, _ in term.pairs)
    imgs = " ".join(str(dst.label(i)) for _, i in term.pairs)
    return f"{doms} / {imgs}"


# --- subcommands --------------------------------------------------------------


def _oracle_config(args) -> OracleConfig:
    return OracleConfig(max_ground_size=args.max_ground)


def cmd_aut(args) -> int:
    g = parse_hypergraph(args.file)
    if args.method == "brute":
        elements = sorted(brute_aut(g, _oracle_config(args)))
        order = len(elements)
    else:
        row_order = None
        if args.order_heuristic == "given":
            row_order = list(range(g.n))
        result = aut(
            g,
            engine=args.method,
            max_arity=args.max_arity,
            max_leibniz=args.max_leibniz,
            row_order=row_order,
        )
        order = result.order
        elements = None
        if args.list and args.format != "count":
            elements = sorted(result.elements(args.max_expand))
    print(order)
    if args.list and args.format != "count":
        if elements is None:
            elements = []
        for perm in elements:
            if args.format == "cycles":
                print(fmt_cycles(perm, g.ground))
            else:
                print(fmt_tworow(perm, g.ground, g.ground))
    return 0


def cmd_iso(args) -> int:
    g1 = parse_hypergraph(args.file1)
    g2 = parse_hypergraph(args.file2)
    if args.method == "brute":
        bijections = sorted(brute_iso(g1, g2, _oracle_config(args)))
        order = len(bijections)
    else:
        result = iso(
            g1,
            g2,
            engine=args.method,
            max_arity=args.max_arity,
            max_leibniz=args.max_leibniz,
        )
        order = result.order
        bijections = (
            sorted(result.elements(args.max_expand)) if args.list and order else []
        )
    print(order)
    if args.list:
        for b in bijections:
            print(fmt_tworow(b, g1.ground, g2.ground))
    return 0 if order > 0 else 1


def cmd_det(args) -> int:
    g = parse_hypergraph(args.file)
    mat = block_matrix(g, args.max_arity)
    if args.method == "leibniz":
        det = det_leibniz(mat, max_n=args.max_leibniz)
    else:
        row_order = list(range(mat.n)) if args.order_heuristic == "given" else None
        det = det_initiators(mat, row_order)
    print(len(det.terms))
    for term in det.terms:
        print(fmt_partial_term(term, g.ground, g.ground))
    return 0


def cmd_verify(args) -> int:
    g = parse_hypergraph(args.file)
    results = run_checks(g, _oracle_config(args), args.max_expand)
    failed = 0
    for res in results:
        status = "ok" if res.passed else "FAIL"
        suffix = f"  ({res.detail})" if res.detail and res.passed else ""
        print(f"{status:4s} {res.name}{suffix}")
        failed += 0 if res.passed else 1
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperaut",
        description="Hypergraph automorphism groups and graph isomorphism "
        "via determinants over the ring of partials.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--max-arity", type=int, default=MAX_ARITY,
        help="largest edge size accepted (brackets have k! terms)",
    )
    common.add_argument(
        "--max-expand", type=int, default=MAX_EXPANSION,
        help="largest explicit permutation expansion",
    )
    common.add_argument(
        "--max-leibniz", type=int, default=9,
        help="largest dimension for the permutation-sum determinant",
    )
    common.add_argument(
        "--max-ground", type=int, default=8,
        help="largest ground set swept by the brute-force engine",
    )
    common.add_argument(
        "--order-heuristic", choices=("greedy", "given"), default="greedy",
        help="row fold order for the initiator product",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_aut = sub.add_parser("aut", parents=[common],
                           help="automorphism group of a hypergraph")
    p_aut.add_argument("file")
    p_aut.add_argument("--list", action="store_true", help="print the elements")
    p_aut.add_argument("--format", choices=("tworow", "cycles", "count"),
                       default="tworow")
    p_aut.add_argument("--method", choices=("initiators", "leibniz", "brute"),
                       default="initiators")
    p_aut.set_defaults(func=cmd_aut)

    p_iso = sub.add_parser("iso", parents=[common],
                           help="isomorphism set between two hypergraphs")
    p_iso.add_argument("file1")
    p_iso.add_argument("file2")
    p_iso.add_argument("--list", action="store_true", help="print the bijections")
    p_iso.add_argument("--method", choices=("initiators", "leibniz", "brute"),
                       default="initiators")
    p_iso.set_defaults(func=cmd_iso)

    p_det = sub.add_parser("det", parents=[common],
                           help="canonical-matrix determinant, term by term")
    p_det.add_argument("file")
    p_det.add_argument("--method", choices=("initiators", "leibniz"),
                       default="initiators")
    p_det.set_defaults(func=cmd_det)

    p_verify = sub.add_parser("verify", parents=[common],
                              help="cross-check the engines on one instance")
    p_verify.add_argument("file")
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 3
    except (HyperautError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
