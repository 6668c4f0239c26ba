"""Command line entry point: ``rncbetti <subcommand> ...``.

Exit codes: 0 success, 2 parse or input error, 3 table not in the cone,
4 module not of finite length.  Errors are written to stderr as a JSON
object.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from fractions import Fraction

from . import __version__
from .cone import greedy_decompose_b, greedy_decompose_s, phi, phi_representative
from .errors import BettiError, NotFiniteColength, NotFiniteLength, NotInCone, ParseError
from .resolver import GradedIdeal, minimal_resolution, random_forms
from .tableio import TableDocument, fmt_q, parse_table, render_betti, render_m2
from .tables import (
    PureTypeB,
    PureTypeS,
    hilbert_numerator,
    hilbert_polynomial,
    pure_betti_b,
    pure_betti_s,
    validate_b_table,
)
from .totalcone import TotalVector, limit_vector, tot_membership, tot_rays
from .veronese import parse_b_generators, veronese_substitute, veronese_transfer

EXIT_PARSE = 2
EXIT_NOT_IN_CONE = 3
EXIT_NOT_FINITE = 4


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _load(path, d=None, kind=None) -> TableDocument:
    return parse_table(_read_input(path), d=d, kind=kind)


def _emit(out, text):
    out.write(text)


def _vector(src: str):
    try:
        parts = [Fraction(p) for p in src.replace(",", " ").split()]
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"malformed vector {src!r}") from None
    if len(parts) != 4:
        raise ParseError(f"expected four entries, got {len(parts)}")
    return parts


def _terms_text(terms):
    return [f"{fmt_q(c)} * {p}" for c, p in terms]


def _terms_json(terms):
    return [[fmt_q(c), list(p.key())] for c, p in terms]


def cmd_pure(args, out, meta):
    t = pure_betti_b(PureTypeB(args.d, args.d0, args.d1, args.d2, args.ell))
    _emit(out, render_betti(TableDocument.of(t, **meta), args.format, args.cols))


def cmd_pure_s(args, out, meta):
    t = pure_betti_s(PureTypeS(args.e0, args.e1, args.e2))
    _emit(out, render_betti(TableDocument.of(t, **meta), args.format))


def _decomposition_report(dec, fmt, cols):
    if fmt == "json":
        obj = {
            "d": dec.d,
            "terms": _terms_json(dec.terms),
            "remainder": [[i, j, fmt_q(v)] for (i, j), v in dec.remainder.items()],
        }
        return json.dumps(obj, sort_keys=True) + "\n"
    lines = [f"# decomposition over B, d = {dec.d}"]
    for k, ((c, p), rem) in enumerate(zip(dec.terms, dec.trace), 1):
        lines.append(f"step {k}: subtract {fmt_q(c)} * {p}; remainder:")
        lines.append(render_m2(TableDocument.of(rem), cols, header=False).rstrip("\n"))
    lines.append("result:")
    lines.extend("  " + s for s in _terms_text(dec.terms))
    return "\n".join(lines) + "\n"


def cmd_decompose(args, out, meta):
    doc = _load(args.input, d=args.d, kind="B")
    dec = greedy_decompose_b(doc.table)
    _emit(out, _decomposition_report(dec, args.format, args.cols))


def cmd_decompose_s(args, out, meta):
    doc = _load(args.input, kind="S")
    terms = greedy_decompose_s(doc.table)
    if args.format == "json":
        _emit(out, json.dumps({"terms": _terms_json(terms)}, sort_keys=True) + "\n")
    else:
        _emit(out, "# decomposition over S\n" + "".join(f"  {s}\n" for s in _terms_text(terms)))


def _matrices_text(res):
    rows = ["# d1: " + ", ".join(g.to_str("xy") for g in res.d1)]
    for row in res.d2:
        rows.append("# d2: " + ", ".join(e.to_str("xy") for e in row))
    return "\n".join(rows) + "\n"


def cmd_resolve(args, out, meta):
    if args.random_forms:
        deg, count = args.random_forms
        ideal = random_forms(deg, count, args.seed)
        meta["seed"] = args.seed
    elif args.ideal:
        ideal = GradedIdeal.parse(args.ideal)
    else:
        raise ParseError("resolve needs --ideal or --random-forms")
    res = minimal_resolution(ideal)
    meta["ideal"] = ", ".join(g.to_str("xy") for g in ideal.generators)
    _emit(out, render_betti(TableDocument.of(res.betti, **meta), args.format))
    if args.show_matrices and args.format == "m2":
        _emit(out, _matrices_text(res))


def cmd_bresolve(args, out, meta):
    ideal = veronese_substitute(parse_b_generators(args.ideal_b, args.d), args.d)
    res = minimal_resolution(ideal)
    table = veronese_transfer(res.betti, args.d)
    meta["ideal-s"] = ", ".join(g.to_str("xy") for g in ideal.generators)
    _emit(out, render_betti(TableDocument.of(table, **meta), args.format, args.cols))
    if args.decompose:
        _emit(out, _decomposition_report(greedy_decompose_b(table), args.format, args.cols))


def cmd_phi(args, out, meta):
    doc = _load(args.input, d=args.d, kind="B")
    c = phi(doc.table)
    rep = phi_representative(c)
    if args.format == "json":
        obj = {
            "d": c.d,
            "cols01": [[i, e, fmt_q(v)] for (i, e), v in sorted(c.cols01.items())],
            "blocks": [[j, fmt_q(s0), fmt_q(s1)] for j, (s0, s1) in sorted(c.blocks.items())],
            "representative": [[i, j, fmt_q(v)] for (i, j), v in rep.items()],
        }
        _emit(out, json.dumps(obj, sort_keys=True) + "\n")
        return
    lines = [f"# phi class, d = {c.d}", "j s0 s1"]
    lines += [f"{j} {fmt_q(s0)} {fmt_q(s1)}" for j, (s0, s1) in sorted(c.blocks.items())]
    lines.append("representative:")
    _emit(out, "\n".join(lines) + "\n" + render_betti(TableDocument.of(rep)))


def cmd_hilbert(args, out, meta):
    doc = _load(args.input, d=args.d, kind="B")
    num = hilbert_numerator(doc.table)
    lines = [f"numerator: {num}"]
    try:
        lines.append(f"hilbert polynomial: {hilbert_polynomial(doc.table)}")
    except NotFiniteLength:
        lines.append("hilbert polynomial: none (numerator not divisible by (1-t)^2)")
    _emit(out, "\n".join(lines) + "\n")


def cmd_validate(args, out, meta):
    doc = _load(args.input, d=args.d, kind="B")
    rep = validate_b_table(doc.table, integral=args.integral)
    lines = ["j s0 s1"] + [f"{j} {fmt_q(a)} {fmt_q(b)}" for j, (a, b) in rep.blocks.items()]
    lines += [f"violation: {v}" for v in rep.violations]
    lines.append("ok" if rep.ok else "failed")
    _emit(out, "\n".join(lines) + "\n")
    return 0 if rep.ok else 1


def _vec_text(v):
    return "(" + ", ".join(fmt_q(x) for x in v.as_tuple()) + ")"


def cmd_totcone(args, out, meta):
    if args.action == "rays":
        _emit(out, "".join(_vec_text(r) + "\n" for r in tot_rays(args.d)))
    elif args.action == "check":
        inside, slacks = tot_membership(TotalVector.of(_vector(args.vector), args.d))
        _emit(out, f"{'inside' if inside else 'outside'}\nslacks: {' '.join(fmt_q(s) for s in slacks)}\n")
        return 0 if inside else 1
    else:
        _emit(out, _vec_text(limit_vector(args.family, args.t, args.d)) + "\n")
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="rncbetti", description="Betti tables over the rational normal curve.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(p, cols=True):
        p.add_argument("--format", choices=("m2", "json"), default="m2")
        if cols:
            p.add_argument("--cols", type=int, default=5, help="last column printed for B-tables")

    p = sub.add_parser("pure", help="canonical pure B-diagram")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("d0", type=int)
    p.add_argument("d1", type=int)
    p.add_argument("d2", type=int)
    p.add_argument("--ell", type=int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_pure)

    p = sub.add_parser("pure-s", help="primitive pure S-diagram")
    for name in ("e0", "e1", "e2"):
        p.add_argument(name, type=int)
    fmt(p, cols=False)
    p.set_defaults(func=cmd_pure_s)

    p = sub.add_parser("decompose", help="greedy decomposition of a B-table")
    p.add_argument("--d", type=int)
    p.add_argument("--input", required=True)
    fmt(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("decompose-s", help="greedy decomposition of an S-table")
    p.add_argument("--input", required=True)
    fmt(p, cols=False)
    p.set_defaults(func=cmd_decompose_s)

    p = sub.add_parser("resolve", help="minimal resolution of S/I over S = Q[x,y]")
    p.add_argument("--ideal")
    p.add_argument("--random-forms", type=int, nargs=2, metavar=("DEGREE", "COUNT"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--show-matrices", action="store_true")
    fmt(p, cols=False)
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("bresolve", help="Betti table over B of B/I")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--ideal-b", required=True)
    p.add_argument("--decompose", action="store_true")
    fmt(p)
    p.set_defaults(func=cmd_bresolve)

    p = sub.add_parser("phi", help="class data of a B-table and a representative S-table")
    p.add_argument("--d", type=int)
    p.add_argument("--input", required=True)
    fmt(p, cols=False)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("hilbert", help="Hilbert numerator and polynomial of a B-table")
    p.add_argument("--d", type=int)
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("validate", help="check the column 2/3 block conditions of a B-table")
    p.add_argument("--d", type=int)
    p.add_argument("--input", required=True)
    p.add_argument("--integral", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("totcone", help="cone of total Betti vectors")
    tsub = p.add_subparsers(dest="action", required=True)
    q = tsub.add_parser("check")
    q.add_argument("vector", help="four comma-separated entries b0,b1,b2,b3")
    q.add_argument("--d", type=int, required=True)
    q = tsub.add_parser("rays")
    q.add_argument("--d", type=int, required=True)
    q = tsub.add_parser("limit")
    q.add_argument("family", choices=("mt", "nt"))
    q.add_argument("t", type=int)
    q.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_totcone)
    return ap


def _exit_code(exc):
    if isinstance(exc, NotInCone):
        return EXIT_NOT_IN_CONE
    if isinstance(exc, (NotFiniteColength, NotFiniteLength)):
        return EXIT_NOT_FINITE
    return EXIT_PARSE


def main(argv=None, out=None, err=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "cols", 5) < 2:
        parser.error("--cols must be at least 2")
    meta = {"command": "rncbetti " + shlex.join(argv)}
    try:
        code = args.func(args, out, meta)
    except BettiError as exc:
        err.write(json.dumps(exc.to_dict(), sort_keys=True) + "\n")
        return _exit_code(exc)
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
