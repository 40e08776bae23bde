"""Command-line front end.  Parsing and dispatch only; the work happens elsewhere.

Exit codes: 0 success, 1 parse or usage error, 2 domain error, 3 a check failed.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Optional

from .artin_schreier import ASCharacter
from .base_change import (
    ExtensionDesc,
    check_frobenius_invariance,
    check_functoriality_sigma,
    check_functoriality_theta,
    check_thm_left,
    check_thm_right,
    ext_invariants,
    transport,
)
from .conductor import NotRamifiedError, conductor_report
from .curve_oracle import CurveError, oracle_conductor
from .field import FieldDesc, ParseError, elem_parse, format_elem, make_field
from .finite_field import FieldError

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_CHECK = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--p", type=int, default=3, help="characteristic (odd prime)")
    common.add_argument("--qdeg", type=int, default=1, help="constant field F_{p^qdeg}")
    common.add_argument("--a", type=int, default=0, help="x-root depth of the base field")
    common.add_argument("--b", type=int, default=0, help="y-root depth of the base field")
    common.add_argument("--expr", action="append", default=[], help="element, e.g. 'x/y^9'")
    common.add_argument("--in", dest="infile", help="file with one expression per line")
    common.add_argument("--json", action="store_true", help="newline-delimited JSON output")

    ext = _Parser(add_help=False)
    ext.add_argument("--da", type=int, default=0)
    ext.add_argument("--db", type=int, default=0)

    parser = _Parser(prog="ramcalc", description="Conductors of Artin-Schreier characters t^p - t = f.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("reduce", parents=[common], help="minimal-pole representative")
    sub.add_parser("conductor", parents=[common], help="swan, total dimension, forms")
    sub.add_parser("charform", parents=[common], help="characteristic and refined swan forms")
    sub.add_parser("basechange", parents=[common, ext], help="pull back to K_{a+da,b+db}")
    chk = sub.add_parser("check", parents=[common, ext], help="run a base-change check")
    chk.add_argument("--theorem", required=True, choices=["right", "left", "frobenius", "theta", "sigma"])
    chk.add_argument("--n", type=int, default=None, help="Frobenius depth (default max(da, db))")
    orc = sub.add_parser("oracle", parents=[common], help="curve-restriction estimates")
    orc.add_argument("--max-mu", type=int, default=3)
    orc.add_argument("--max-deg", type=int, default=2)
    orc.add_argument("--trials", type=int, default=0)
    orc.add_argument("--seed", type=int, default=0)
    sub.add_parser("corpus", parents=[common], help="run the acceptance suite")
    return parser


def _expressions(args) -> list[str]:
    exprs = list(args.expr)
    if args.infile:
        from .corpus import iter_lines

        with open(args.infile) as fh:
            exprs += list(iter_lines(fh.read()))
    if not exprs:
        raise UsageError("give --expr or --in")
    return exprs


def _emit(args, payload: dict, text: str, out):
    if args.json:
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(text + "\n")


def _surface(f) -> str:
    return format_elem(f, surface=True)


def _extension(args, field: FieldDesc) -> Optional[ExtensionDesc]:
    if args.command in ("basechange", "check"):
        return ExtensionDesc.over(field, args.da, args.db)
    return None


def _run_one(args, field: FieldDesc, expr: str, out) -> int:
    ext = _extension(args, field)
    cmd = args.command
    # the characters of the "left" and "sigma" checks live upstairs
    home = ext.target if cmd == "check" and args.theorem in ("left", "sigma") else field
    c = ASCharacter.of(elem_parse(expr, home))

    if cmd == "reduce":
        payload = c.to_json()
        text = f"{expr} -> {_surface(c.f)}  (witness g = {_surface(c.witness)})"
    elif cmd in ("conductor", "charform"):
        rep = conductor_report(c)
        payload = rep.to_json()
        if cmd == "charform":
            payload = {"char_form": payload["char_form"], "rsw": payload["rsw"]}
        text = f"{expr} ~ {_surface(c.f)}: swan {rep.sw}, dimtot {rep.dt}, {rep.classification}"
        if rep.char_form is not None:
            text += f"\n  char form {rep.char_form}\n  refined swan {rep.rsw}"
            text += f"\n  cc: -[T*X] {rep.cc.divisor_coeff:+d}[D.<{rep.cc.direction}>]"
    elif cmd == "basechange":
        moved = transport(c, ext)
        rep = conductor_report(moved)
        payload = {
            "extension": ext_invariants(ext),
            "image": format_elem(moved.f),
            "image_surface": _surface(moved.f),
            "conductor": rep.to_json(),
        }
        text = f"{expr} -> {_surface(moved.f)} over {ext.target!r}: swan {rep.sw}, dimtot {rep.dt}"
    elif cmd == "check":
        rep = _check(args, c, ext)
        payload = rep.to_json()
        text = f"{args.theorem}: {rep.status}; lhs {rep.lhs}, bound {rep.bound}"
        _emit(args, payload, text, out)
        return EXIT_CHECK if rep.failed else EXIT_OK
    elif cmd == "oracle":
        res = oracle_conductor(c.f, args.max_mu, args.max_deg, args.trials, args.seed)
        payload = res.to_json()
        text = (
            f"{expr}: sw >= {res.sw_est} (ceiling {res.sw_ceiling}), "
            f"dt >= {res.dt_est} (ceiling {res.dt_ceiling}) over {res.curves} curves"
        )
    else:  # pragma: no cover
        raise UsageError(f"unknown command {cmd}")
    _emit(args, payload, text, out)
    return EXIT_OK


def _check(args, c: ASCharacter, ext: ExtensionDesc):
    if args.theorem == "right":
        return check_thm_right(c, ext)
    if args.theorem == "left":
        return check_thm_left(c, ext)
    if args.theorem == "frobenius":
        return check_frobenius_invariance(c, ext.n if args.n is None else args.n)
    if args.theorem == "theta":
        return check_functoriality_theta(c, ext)
    return check_functoriality_sigma(c, ext)


def _run_corpus(args, out) -> int:
    from .acceptance import run_all

    verdicts = run_all()
    for v in verdicts:
        payload = {"criterion": v.number, "title": v.title, "passed": v.passed,
                   "detail": v.detail, "seconds": round(v.seconds, 3)}
        _emit(args, payload, v.line(), out)
    return EXIT_OK if all(v.passed for v in verdicts) else EXIT_CHECK


def main(argv: Optional[Iterable[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(None if argv is None else list(argv))
    except UsageError as exc:
        err.write(f"ramcalc: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    try:
        field = make_field(args.p, args.a, args.b, args.qdeg)
        if args.command == "corpus":
            return _run_corpus(args, out)
        code = EXIT_OK
        for expr in _expressions(args):
            code = max(code, _run_one(args, field, expr, out))
        return code
    except (UsageError, ParseError) as exc:
        err.write(f"ramcalc: {exc}\n")
        return EXIT_USAGE
    except (FieldError, NotRamifiedError, CurveError, ArithmeticError, OSError) as exc:
        err.write(f"ramcalc: {exc}\n")
        return EXIT_DOMAIN


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
