"""Command-line interface.

Exit codes: 0 ok, 1 verification failed, 2 parse error, 3 UNSAT or not
choosable, 4 precondition failure, 5 internal contradiction (audit printed).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import generators, io
from .colouring import verify
from .discharging import audit
from .embedding import corners_closed, euler_genus, trace_faces, triangulate
from .exceptions import DefcolorError, InternalContradiction
from .local_search import lovasz_search
from .oracle import choosable, list_colourable_search
from .reducer import reduce_colour

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_UNSAT, EXIT_PRECONDITION, EXIT_CONTRADICTION = 0, 1, 2, 3, 4, 5


def cmd_genus(args) -> int:
    rs = io.read_graph(args.file)
    faces = trace_faces(rs)
    mu = euler_genus(rs, faces)
    print(f"n={rs.n} m={rs.m} f={faces.face_count} genus={mu}")
    print("faces: " + " ".join(f"{size}x{count}" for size, count in faces.histogram().items()))
    print("note: genus of this embedding; the Euler genus of the graph is at most this")
    return EXIT_OK


def _load_instance(args):
    rs = io.read_graph(args.file)
    lists, declared_t = io.read_lists(args.lists)
    if len(lists) != rs.n:
        raise io.FormatError(f"{args.lists}: field 'lists' has {len(lists)} rows, graph has {rs.n} vertices",
                             "lists")
    t = declared_t if args.t is None else args.t
    return rs, lists, t


def cmd_colour(args) -> int:
    rs, lists, t = _load_instance(args)
    stats = ""
    if args.mode == "reduce":
        result = reduce_colour(rs, lists, t)
        colouring = result.colouring
        stats = "dispatches: " + (" ".join(f"{k}={v}" for k, v in sorted(result.dispatches.items())) or "none")
    elif args.mode == "lovasz":
        result = lovasz_search(rs.graph, lists, t)
        colouring = result.colouring
        bound = rs.graph.max_degree() // t
        stats = f"iterations={result.iterations}\nbound: defect<={bound}"
    else:
        result = list_colourable_search(rs.graph, lists, args.defect, jobs=args.jobs)
        if not result.satisfiable:
            print(f"UNSAT at defect {args.defect} nodes={result.nodes}")
            return EXIT_UNSAT
        colouring = result.colouring
        stats = f"nodes={result.nodes}"
    report = verify(rs.graph, lists, colouring)
    print(f"defect={report.defect} clustering={report.clustering}")
    print(stats)
    if args.out:
        io.write(args.out, io.colouring_to_doc(colouring))
    else:
        sys.stdout.write(io.dumps(io.colouring_to_doc(colouring)))
    return EXIT_OK


def cmd_verify(args) -> int:
    rs = io.read_graph(args.file)
    colouring = io.read_colouring(args.colouring)
    if len(colouring) != rs.n:
        raise io.FormatError(f"{args.colouring}: field 'colours' has {len(colouring)} entries, "
                             f"graph has {rs.n} vertices", "colours")
    lists = io.read_lists(args.lists)[0] if args.lists else None
    report = verify(rs.graph, lists, colouring)
    print(f"defect={report.defect} clustering={report.clustering}")
    if report.meets(args.defect, args.clustering):
        print("PASS")
        return EXIT_OK
    print("FAIL")
    if args.defect is not None and report.defect > args.defect:
        print(f"witness: vertex {report.worst_vertex} has {report.defect} same-coloured neighbours")
    if args.clustering is not None and report.clustering > args.clustering:
        print(f"witness: monochromatic component {list(report.worst_component)}")
    return EXIT_FAIL


def cmd_discharge(args) -> int:
    rs = io.read_graph(args.file)
    if not corners_closed(rs):
        if args.strict:
            print("error: embedding is not triangulated (--strict)", file=sys.stderr)
            return EXIT_PRECONDITION
        print("notice: triangulating the embedding before the audit", file=sys.stderr)
        rs = triangulate(rs)
    report = audit(rs, args.t)
    sys.stdout.write(report.to_text())
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(report.to_record(), fh, sort_keys=True)
            fh.write("\n")
    return EXIT_OK


def _parse_grid(text: str) -> tuple[int, int]:
    try:
        w, h = (int(x) for x in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected WxH, got {text!r}")
    return w, h


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "complete":
        rs = generators.complete(args.size)
    elif kind == "k7-torus":
        rs = generators.k7_torus()
    elif kind == "planar-triangulation":
        rs = generators.planar_triangulation(args.size, args.seed, args.flips)
    elif kind == "toroidal-grid":
        rs = generators.toroidal_grid(*args.grid)
    else:
        rs = generators.icosahedron()
    text = io.dumps(io.graph_to_doc(rs))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.lists is not None:
        palette = args.palette if args.palette is not None else 2 * args.lists
        lists = generators.random_lists(rs.n, args.lists, palette, args.seed)
        doc = io.lists_to_doc(lists, args.lists)
        if args.lists_out:
            io.write(args.lists_out, doc)
        else:
            sys.stdout.write(io.dumps(doc))
    return EXIT_OK


def cmd_choosable(args) -> int:
    rs = io.read_graph(args.file)
    verdict = choosable(rs.graph, args.k, args.d, args.palette,
                        canonical=not args.no_canonical, jobs=args.jobs)
    print(f"k={args.k} d={args.d} choosable={verdict.choosable} "
          f"assignments={verdict.assignments_checked} nodes={verdict.nodes}")
    if not verdict.choosable:
        print("counterexample: " + json.dumps([sorted(lst) for lst in verdict.counterexample]))
        return EXIT_UNSAT
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="defcolor", description="Defect-1 list colouring of embedded graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("genus", help="faces and Euler genus of an embedding")
    p.add_argument("file")
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("colour", aliases=["color"], help="colour a graph from lists")
    p.add_argument("file")
    p.add_argument("--lists", required=True)
    p.add_argument("--t", type=int, help="list size parameter (default: the lists file's t)")
    p.add_argument("--mode", choices=["reduce", "lovasz", "brute"], default="reduce")
    p.add_argument("--defect", type=int, default=1, help="defect bound for --mode brute")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_colour)

    p = sub.add_parser("verify", help="check a colouring against defect/clustering bounds")
    p.add_argument("file")
    p.add_argument("--colouring", "--coloring", required=True)
    p.add_argument("--lists")
    p.add_argument("--defect", type=int)
    p.add_argument("--clustering", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("discharge", help="discharging audit of a triangulated embedding")
    p.add_argument("file")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--strict", action="store_true", help="refuse to triangulate")
    p.add_argument("--json", help="also write the machine-readable record here")
    p.set_defaults(func=cmd_discharge)

    p = sub.add_parser("gen", help="generate an embedded instance")
    p.add_argument("kind", choices=["complete", "k7-torus", "planar-triangulation", "toroidal-grid", "icosahedron"])
    p.add_argument("size", nargs="?", help="N for complete/planar-triangulation, WxH for toroidal-grid")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--flips", type=int, default=0, help="random edge flips for planar-triangulation")
    p.add_argument("--lists", type=int, metavar="K", help="also emit uniform random K-lists")
    p.add_argument("--palette", type=int, metavar="P")
    p.add_argument("--out", "-o")
    p.add_argument("--lists-out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("choosable", help="brute-force (k,d)-choosability for small graphs")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--palette", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-canonical", action="store_true")
    p.set_defaults(func=cmd_choosable)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "gen":
        needs_size = args.kind in ("complete", "planar-triangulation", "toroidal-grid")
        if needs_size and args.size is None:
            parser.error(f"gen {args.kind} needs a size")
        try:
            if args.kind == "toroidal-grid":
                args.grid = _parse_grid(args.size)
            elif needs_size:
                args.size = int(args.size)
        except (ValueError, argparse.ArgumentTypeError) as exc:
            parser.error(str(exc))
    try:
        return args.func(args)
    except io.FormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InternalContradiction as exc:
        print(f"internal contradiction: {exc}", file=sys.stderr)
        if exc.audit is not None:
            sys.stderr.write(exc.audit.to_text())
        return EXIT_CONTRADICTION
    except (DefcolorError, ValueError) as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    raise SystemExit(main())
