"""Command-line front end.

    lpaspec analyze GRAPH [--field q|fp:P] [--instantiate-degree N] [--generator POLY ...]
    lpaspec poset GRAPH --dot [--field ...]
    lpaspec eval GRAPH [--field ...] EXPR
    lpaspec eval GRAPH [--field ...] --poly POLY --cycle E1.E2...
    lpaspec member GRAPH [--field ...] ELEMENT --gen EXPR [--gen EXPR ...] [--length-bound L]
    lpaspec generate FAMILY [PARAMS ...] [-o FILE]
    lpaspec selftest

Exit status: 0 ok, 1 bad input, 2 resource bound hit, 3 unsupported, 4 selftest failure.
"""
from __future__ import annotations

import argparse
import sys

from . import __version__
from .engine import LeavittAlgebra, eval_poly_at_cycle, parse_element
from .errors import LPAError, ValidationError
from .families import FAMILIES, make_family
from .fields import parse_field
from .graph import MAX_CYCLES, Cycle, parse_graph, serialize_graph
from .ideals import MAX_VERTICES
from .laurent import parse_laurent
from .oracle import MAX_PRODUCTS, spanning_membership
from .report import canonical_json, spectrum_report
from .selftest import run_selftest
from .spectrum import compute_spectrum, poset_dot

SELFTEST_FAILED = 4


def _read_graph(path: str):
    if path == "-":
        return parse_graph(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None


def _add_graph_args(p, bounds=True):
    p.add_argument("graph", help="graph file ('-' for standard input)")
    p.add_argument("--field", default="q", help="q (rationals, default) or fp:<prime>")
    if bounds:
        p.add_argument("--max-vertices", type=int, default=MAX_VERTICES)
        p.add_argument("--max-cycles", type=int, default=MAX_CYCLES)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lpaspec", description="Prime spectra of Leavitt path algebras.")
    ap.add_argument("--version", action="version", version=f"lpaspec {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="JSON spectrum report")
    _add_graph_args(p)
    p.add_argument("--instantiate-degree", type=int, default=0,
                   help="list non-graded primes for all irreducibles up to this degree (prime fields)")
    p.add_argument("--generator", action="append", default=[], metavar="POLY",
                   help="also list the non-graded primes for this Laurent polynomial")

    p = sub.add_parser("poset", help="specialization order of the graded primes")
    _add_graph_args(p)
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT (the only format)")

    p = sub.add_parser("eval", help="normalize an algebra expression")
    _add_graph_args(p, bounds=False)
    p.add_argument("expr", nargs="?")
    p.add_argument("--poly", help="Laurent polynomial to evaluate at --cycle")
    p.add_argument("--cycle", help="cycle as dot-separated edges, e.g. f1 or a.b")

    p = sub.add_parser("member", help="bounded two-sided ideal membership")
    _add_graph_args(p, bounds=False)
    p.add_argument("element")
    p.add_argument("--gen", action="append", required=True, metavar="EXPR")
    p.add_argument("--length-bound", type=int, default=None,
                   help="cap on |m| + |m'| (default 2 + twice the longest input monomial)")
    p.add_argument("--max-products", type=int, default=MAX_PRODUCTS)

    p = sub.add_parser("generate", help="write a named graph")
    p.add_argument("family", help=", ".join(FAMILIES))
    p.add_argument("params", nargs="*", help="rose N | line N | E N [S, e.g. 1,3]")
    p.add_argument("-o", "--output")

    sub.add_parser("selftest", help="run the worked-example corpus")
    return ap


def _analyze(args, out):
    g = _read_graph(args.graph)
    F = parse_field(args.field)
    gens = [parse_laurent(t, F) for t in args.generator]
    rep = spectrum_report(g, F, max_vertices=args.max_vertices, max_cycles=args.max_cycles,
                          instantiate_degree=args.instantiate_degree, generators=gens)
    out.write(canonical_json(rep))


def _poset(args, out):
    if not args.dot:
        raise ValidationError("poset currently supports only --dot output")
    g = _read_graph(args.graph)
    s = compute_spectrum(g, parse_field(args.field), args.max_vertices, args.max_cycles)
    out.write(poset_dot(s))


def _eval(args, out):
    A = LeavittAlgebra(_read_graph(args.graph), parse_field(args.field))
    if args.poly is not None or args.cycle is not None:
        if args.poly is None or args.cycle is None or args.expr is not None:
            raise ValidationError("use either EXPR or both --poly and --cycle")
        c = Cycle.from_edges(A.graph, args.cycle.split("."))
        a = eval_poly_at_cycle(parse_laurent(args.poly, A.field), c, A)
    elif args.expr is None:
        raise ValidationError("nothing to evaluate")
    else:
        a = parse_element(A, args.expr)
    out.write(a.render(degrees=True) + "\n")


def _member(args, out):
    A = LeavittAlgebra(_read_graph(args.graph), parse_field(args.field))
    a = parse_element(A, args.element)
    gens = [parse_element(A, t) for t in args.gen]
    r = spanning_membership(a, gens, args.length_bound, args.max_products)
    out.write(canonical_json({
        "element": a.render(),
        "generators": [g.render() for g in gens],
        "status": r.status,
        "length_bound": r.length_bound,
        "level": r.level,
        "products": r.products,
        "rank": r.rank,
    }))


def _generate(args, out):
    g = make_family(args.family, *args.params)
    text = serialize_graph(g, comment=" ".join([args.family, *args.params]))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)


COMMANDS = {"analyze": _analyze, "poset": _poset, "eval": _eval, "member": _member, "generate": _generate}


def run_command(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    if extra:
        # "eval GRAPH --field q EXPR": argparse has already bound the optional EXPR to nothing
        if args.command == "eval" and args.expr is None and len(extra) == 1:
            args.expr = extra[0]
        else:
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
    if args.command == "selftest":
        return 0 if run_selftest(lambda line: out.write(line + "\n")) else SELFTEST_FAILED
    try:
        COMMANDS[args.command](args, out)
    except LPAError as exc:
        err.write(f"lpaspec {args.command}: {exc}\n")
        return exc.exit_code
    return 0


def main(argv=None) -> int:
    try:
        return run_command(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:  # argparse usage errors are input errors
        return 1 if exc.code not in (0, None) else 0


if __name__ == "__main__":
    sys.exit(main())
