"""Command line interface.

Exit codes: 0 success (``compare``: isomorphic), 1 negative verdict
(``compare``: not isomorphic, ``check-tree``: a condition fails), 2
``compare`` undecided because an enumeration hit the cap, 3 input or engine
error.
"""
from __future__ import annotations

import argparse
import sys

from .algebra import build, check_condition_S, check_tree_characterization, gls_build
from .errors import SttiltError
from .formats import parse_algebra, parse_cartan, poset_records, print_algebra, to_dot, to_json
from .mutation import DEFAULT_CAP, enumerate_sttilt
from .poset import FinitePoset, is_isomorphic, sttilt_poset
from .typea import enumerate_interval_model, interval_order_geq, to_gmatrix

EXIT_OK, EXIT_NO, EXIT_UNDECIDED, EXIT_ERROR = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load_algebra(text: str):
    q, rels, nilbound = parse_algebra(text)
    return build(q, rels, nilbound)


def sttilt_records(sp) -> list[dict]:
    rows = []
    for node in sp.nodes:
        md = node.module_data
        rows.append((node.fingerprint, md.dim_vector, md.support, md.shifted))
    return poset_records(rows)


def _emit(records, hasse, complete, fmt, out):
    if fmt == "dot":
        out.write(to_dot(records, hasse))
    else:
        out.write(to_json(complete, records, hasse))


def cmd_sttilt(args, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    a = load_algebra(_read(args.file))
    sp = enumerate_sttilt(a, args.cap)
    if sp.cap_hit:
        err.write(f"warning: enumeration stopped at the cap of {args.cap} nodes\n")
    _emit(sttilt_records(sp), sp.hasse, sp.complete, args.format, out)
    return EXIT_OK


def cmd_check_tree(args, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    a = load_algebra(_read(args.file))
    report = check_tree_characterization(a)

    def verdict(x):
        return "skipped" if x is None else ("pass" if x else "fail")

    out.write(f"(a) core quiver is a tree: {verdict(report.tree)}\n")
    out.write(f"(b) arrow condition e_i A alpha = alpha A e_j: {verdict(report.arrows)}\n")
    out.write(f"(c) every core path is nonzero: {verdict(report.paths)}\n")
    out.write(f"overall: {verdict(report.ok)}\n")
    return EXIT_OK if report.ok else EXIT_NO


def cmd_compare(args, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    spa = enumerate_sttilt(load_algebra(_read(args.file_a)), args.cap)
    spb = enumerate_sttilt(load_algebra(_read(args.file_b)), args.cap)
    if spa.cap_hit or spb.cap_hit:
        err.write("undecided: an enumeration hit the cap\n")
        return EXIT_UNDECIDED
    iso = is_isomorphic(sttilt_poset(spa), sttilt_poset(spb))
    if iso is None:
        out.write(f"not isomorphic ({len(spa.nodes)} vs {len(spb.nodes)} elements)\n")
        return EXIT_NO
    out.write(f"isomorphic ({len(spa.nodes)} elements)\n")
    for i in sorted(iso):
        j = iso[i]
        out.write(f"{i} {list(spa.nodes[i].fingerprint)} -> {j} {list(spb.nodes[j].fingerprint)}\n")
    return EXIT_OK


def cmd_gls(args, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    data = parse_cartan(_read(args.file))
    q, rels, nilbound = gls_build(data)
    symmetric = check_condition_S(data)
    out.write(f"# condition (S): {'true' if symmetric else 'false'}\n")
    out.write(print_algebra(q, rels, nilbound))
    if not symmetric:
        err.write("warning: condition (S) fails for this Cartan matrix\n")
    return EXIT_OK


def cmd_typea(args, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    if args.n < 1:
        raise SttiltError("n must be positive")
    configs = enumerate_interval_model(args.n)
    geq = [[interval_order_geq(a, b) for b in configs] for a in configs]
    p = FinitePoset(list(range(len(configs))), geq)
    rows = [(to_gmatrix(c), c.dim_vector(), tuple(sorted(c.support)), c.shifted) for c in configs]
    _emit(poset_records(rows), p.hasse, True, args.format, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sttilt", description="Support tau-tilting posets of bound quiver algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sttilt", help="enumerate the support tau-tilting poset")
    p.add_argument("file", help="algebra file, or - for stdin")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_sttilt)

    p = sub.add_parser("check-tree", help="test the tree quiver characterization")
    p.add_argument("file")
    p.set_defaults(func=cmd_check_tree)

    p = sub.add_parser("compare", help="compare two posets up to isomorphism")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("gls", help="algebra file for Cartan data")
    p.add_argument("file")
    p.set_defaults(func=cmd_gls)

    p = sub.add_parser("typea", help="interval model poset for a linear A_n core")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_typea)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SttiltError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
