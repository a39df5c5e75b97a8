"""Command-line front end (``csl4``).

Exit codes: 0 success, 1 domain error, 2 verification mismatch, 3 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from .coincidence import Family, NotAdmissible, RotParam, csl_closed, sigma
from .counting import f_csl, f_rot, rotation_count, series
from .harness import run_checks
from .oracle import BudgetExceeded, count_classes
from .quaternions import format_quaternion, parse_quaternion

EXIT_OK, EXIT_DOMAIN, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse exits with 2 by default
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _family(text: str) -> Family:
    try:
        return Family.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="csl4", description="Coincidence rotations, CSLs and their counting functions in 4D.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    common.add_argument("--out", help="write the result to this file instead of standard output")

    for name, helptext in (("sigma", "coincidence index of a rotation"), ("csl", "basis of the CSL / CSM")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--family", type=_family, required=True)
        p.add_argument("--q", required=True, help='quaternion "a,b,c,d"; golden components like "1+1t/2"')
        p.add_argument("--p", help="second quaternion (not used for a4)")

    for name, helptext in (("count", "counting functions for n = 1..max-n"),
                           ("series", "Euler-product expansion for n = 1..max-n")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--family", type=_family, required=True)
        p.add_argument("--max-n", type=_positive, required=True)

    p = sub.add_parser("enumerate", parents=[common], help="enumerate the classes of one index")
    p.add_argument("--family", type=_family, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--max-n", type=_positive, help="enumeration budget (overrides the default ceiling)")

    p = sub.add_parser("verify", parents=[common], help="pass/fail table against the counting layer")
    p.add_argument("--family", type=_family, action="append",
                   help="restrict to a family (repeatable); default all")
    p.add_argument("--max-n", type=_positive, help="enumerate every n up to this bound")
    p.add_argument("--all", action="store_true", help="also check reference coefficients, point groups, "
                                                     "the glcd criterion and spectra")
    return parser


def _param(args: argparse.Namespace) -> RotParam:
    fam: Family = args.family
    try:
        q = parse_quaternion(args.q, fam.ring)
        p = parse_quaternion(args.p, fam.ring) if args.p is not None else None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if fam.single_parameter and p is not None:
        raise UsageError("a4 takes --q only")
    if not fam.single_parameter and p is None:
        raise UsageError(f"{fam.value} needs both --q and --p")
    try:
        return RotParam.make(fam, q, p)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _render(rows: list[dict], fmt: str, columns: Sequence[str]) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    widths = {c: max([len(c)] + [len(r[c]) for r in rows]) for c in columns}
    lines = ["  ".join(c.rjust(widths[c]) for c in columns)]
    lines += ["  ".join(r[c].rjust(widths[c]) for c in columns) for r in rows]
    return "\n".join(lines) + "\n"


def _cmd_sigma(args) -> tuple[str, int]:
    prm = _param(args)
    s = sigma(args.family, prm)
    if args.format == "plain":
        return f"{s}\n", EXIT_OK
    return _render([{"family": args.family.value, "sigma": str(s)}], args.format, ("family", "sigma")), EXIT_OK


def _cmd_csl(args) -> tuple[str, int]:
    prm = _param(args)
    s = sigma(args.family, prm)
    mod = csl_closed(args.family, prm)
    if args.format == "json":
        out = {"family": args.family.value, "sigma": str(s), "csl": mod.to_json()}
        return json.dumps(out, indent=2) + "\n", EXIT_OK
    rows = [{f"x{i}": str(x) for i, x in enumerate(v)} for v in mod.basis]
    cols = [f"x{i}" for i in range(mod.ambient_dim)]
    if args.format == "csv":
        return _render(rows, "csv", cols), EXIT_OK
    head = f"sigma {s}; rank {mod.rank} in Q^{mod.ambient_dim}\n"
    return head + "\n".join(",".join(r[c] for c in cols) for r in rows) + "\n", EXIT_OK


COUNT_COLUMNS = ("n", "f_rot", "f_csl", "rotations", "csls")


def _count_rows(fam: Family, rot: Sequence[int], csl: Sequence[int]) -> list[dict]:
    order = fam.point_group_order
    return [
        {"n": str(n), "f_rot": str(r), "f_csl": str(c), "rotations": str(order * r), "csls": str(c)}
        for n, r, c in zip(range(1, len(rot) + 1), rot, csl)
    ]


def _cmd_count(args) -> tuple[str, int]:
    fam, N = args.family, args.max_n
    rot = [f_rot(fam, n) for n in range(1, N + 1)]
    csl = [f_csl(fam, n) for n in range(1, N + 1)]
    assert all(rotation_count(fam, n) == fam.point_group_order * r for n, r in enumerate(rot, 1))
    return _render(_count_rows(fam, rot, csl), args.format, COUNT_COLUMNS), EXIT_OK


def _cmd_series(args) -> tuple[str, int]:
    fam, N = args.family, args.max_n
    rot = series(fam, "rot", N).as_list()
    csl = series(fam, "csl", N).as_list()
    return _render(_count_rows(fam, rot, csl), args.format, COUNT_COLUMNS), EXIT_OK


def _cmd_enumerate(args) -> tuple[str, int]:
    rep = count_classes(args.family, args.n, budget=args.max_n)
    code = EXIT_OK if rep.ok else EXIT_MISMATCH
    wit = [
        {"q": format_quaternion(w.q), "p": "" if w.p is None else format_quaternion(w.p)}
        for w in rep.witnesses
    ]
    if args.format == "json":
        out = {
            "family": rep.family.value,
            "n": str(rep.n),
            "rotation_class_count": str(rep.rotation_class_count),
            "distinct_csl_count": str(rep.distinct_csl_count),
            "expected_rotation_class_count": str(rep.expected_rot),
            "expected_csl_count": str(rep.expected_csl),
            "witness_failures": rep.witness_failures,
            "witnesses": wit,
        }
        return json.dumps(out, indent=2) + "\n", code
    if args.format == "csv":
        return _render(wit, "csv", ("q", "p")), code
    lines = [
        f"{rep.family.value} n={rep.n}: {rep.rotation_class_count} rotation classes "
        f"(expected {rep.expected_rot}), {rep.distinct_csl_count} CSLs (expected {rep.expected_csl})"
    ]
    lines += rep.witness_failures
    lines += [f"  q={w['q']}" + (f"  p={w['p']}" if w["p"] else "") for w in wit]
    return "\n".join(lines) + "\n", code


VERIFY_COLUMNS = ("family", "n", "check", "expected", "actual", "pass")


def _cmd_verify(args) -> tuple[str, int]:
    fams = args.family or list(Family)
    rows = run_checks(fams, max_n=args.max_n, everything=args.all)
    code = EXIT_OK if all(r.passed for r in rows) else EXIT_MISMATCH
    for r in rows:
        if not r.passed:
            print(f"mismatch: {r.family} n={r.n} {r.check}: expected {r.expected}, got {r.actual}",
                  file=sys.stderr)
    return _render([r.as_dict() for r in rows], args.format, VERIFY_COLUMNS), code


COMMANDS = {
    "sigma": _cmd_sigma,
    "csl": _cmd_csl,
    "count": _cmd_count,
    "series": _cmd_series,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"csl4: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotAdmissible, BudgetExceeded, ValueError, ArithmeticError) as exc:
        print(f"csl4: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
