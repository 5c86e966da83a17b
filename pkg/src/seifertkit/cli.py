"""Command-line front end.

Exit codes: 0 success, 1 validation error, 2 verification failure,
3 parse error (bad document or bad command line).
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable

from . import derivation as dv
from . import invariants as inv
from .docformat import ParseError, parse
from .report import VerificationReport
from .seifert import SeifertData, SeifertValidationError

EXIT_OK, EXIT_INVALID, EXIT_VERIFY, EXIT_PARSE = 0, 1, 2, 3

VERIFY_CHOICES = ("factorization", "taylor", "series", "leading", "beta", "eta")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


class _Out:
    """Collects ``key = value`` lines in text mode, ``key=value`` in machine mode."""

    def __init__(self, machine: bool):
        self.machine = machine
        self.lines: list[str] = []

    def kv(self, key: str, value) -> None:
        self.lines.append(f"{key}={value}" if self.machine else f"{key} = {value}")

    def raw(self, line: str) -> None:
        self.lines.append(line)

    def text(self) -> str:
        return "\n".join(self.lines) + ("\n" if self.lines else "")


def _index_pairs(d: SeifertData):
    return [(i, j) for i in range(1, d.m + 1) for j in range(1, d.m + 1)]


def _eta_K(order: int) -> int:
    # x^k = O(u^2k), so K terms suffice modulo u^(2K+2)
    return max(1, (order - 1) // 2)


def run_verify(d: SeifertData, which: list[str], order: int = 10) -> list[VerificationReport]:
    """Run the selected verification suites in a fixed order."""
    reports = []
    for name in VERIFY_CHOICES:
        if name not in which:
            continue
        if name == "factorization":
            reports.append(inv.verify_factorization(d))
        elif name == "taylor":
            reports.append(inv.verify_taylor_alpha(d, order))
        elif name == "series":
            reports.append(inv.verify_inverse_series(d.M, order))
        elif name == "leading":
            reports.append(inv.leading_coefficient_check(d))
        elif name == "beta":
            for i, j in _index_pairs(d):
                V1, V2 = d.V_row(i), d.V_row(j)
                for rep in (dv.verify_beta_reduction(d.M, V1, V2, 4, 4),
                            dv.verify_beta_two_path(d.M, V1, V2, 4, 4),
                            dv.alpha_equals_beta_check(d.M, V1, V2, d.A[i - 1, j - 1], order)):
                    reports.append(_suffixed(rep, f"_{i}_{j}"))
        elif name == "eta":
            for i in range(1, d.m + 1):
                rep = inv.verify_eta_cochran(d.M, d.V_row(i), _eta_K(order), order)
                reports.append(_suffixed(rep, f"_{i}"))
    return reports


def _suffixed(rep: VerificationReport, suffix: str) -> VerificationReport:
    out = VerificationReport(rep.title + suffix)
    for c in rep.checks:
        out.checks.append(type(c)(c.name + suffix, c.passed, c.witness, c.note))
    return out


# -- subcommands ------------------------------------------------------------


def cmd_validate(d, args, out):
    if out.machine:
        out.kv("valid", "true")
        out.kv("g", d.g)
        out.kv("m", d.m)
    else:
        out.raw(f"valid: g={d.g} m={d.m}")


def cmd_conway(d, args, out):
    out.kv("nabla_L", inv.conway_link(d))


def cmd_conway_knot(d, args, out):
    nabla = inv.conway_knot(d.M)
    out.kv("nabla_K", nabla)
    out.kv("nabla_K(0)", nabla.coeff(0))


def cmd_alexander(d, args, out):
    out.kv("delta_K", inv.alexander_polynomial(d.M))
    out.kv("potential_K", inv.knot_potential(d.M))
    out.kv("potential_L", inv.potential_function(d))


def cmd_pairing(d, args, out):
    pm = inv.pairing_matrix(d)
    for i, j in _index_pairs(d):
        out.kv(f"p_{i}_{j}", pm[i - 1, j - 1])


def cmd_taylor(d, args, out):
    out.kv(f"taylor_{args.i}_{args.j}", inv.taylor_pairing(d, args.i, args.j, args.order))


def cmd_alpha(d, args, out):
    val = inv.alpha(d, args.n, args.i, args.j)
    if out.machine:
        out.kv("alpha", val)
    else:
        out.raw(str(val))


def cmd_beta(d, args, out):
    val = dv.beta(d, args.k, args.l, i=args.i, j=args.j)
    if out.machine:
        out.kv("beta", val)
    else:
        out.raw(str(val))


def cmd_eta(d, args, out):
    if not 1 <= args.i <= d.m:
        raise IndexError(f"band index {args.i} outside 1..{d.m}")
    out.kv(f"eta_{args.i}", inv.eta_function(d.M, d.V_row(args.i)))


def cmd_verify(d, args, out):
    which = [c for c in VERIFY_CHOICES if getattr(args, c)]
    if args.all or not which:
        which = list(VERIFY_CHOICES)
    reports = run_verify(d, which, args.order)
    ok = all(r.passed for r in reports)
    for r in reports:
        out.lines.extend(r.lines(machine=out.machine))
    if out.machine:
        out.kv("verified", "true" if ok else "false")
    else:
        out.raw("all checks passed" if ok else "VERIFICATION FAILED")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_report(d, args, out):
    out.machine = False
    out.raw(f"Seifert data: g={d.g}, m={d.m}")
    out.raw("")
    out.raw("Invariants")
    cmd_conway(d, args, out)
    cmd_conway_knot(d, args, out)
    cmd_alexander(d, args, out)
    cmd_pairing(d, args, out)
    for i, j in _index_pairs(d):
        out.kv(f"taylor_{i}_{j}", inv.taylor_pairing(d, i, j, args.order))
    for n, a in enumerate(inv.alpha_matrices(d, min(args.order, 6))):
        out.kv(f"alpha^{n}", a)
    for i in range(1, d.m + 1):
        out.kv(f"eta_{i}", inv.eta_function(d.M, d.V_row(i)))
    out.raw("")
    out.raw("Verification")
    return cmd_verify(d, argparse.Namespace(all=True, order=args.order,
                                            **{c: False for c in VERIFY_CHOICES}), out)


COMMANDS: dict[str, Callable] = {
    "validate": cmd_validate,
    "conway": cmd_conway,
    "conway-knot": cmd_conway_knot,
    "alexander": cmd_alexander,
    "pairing": cmd_pairing,
    "taylor": cmd_taylor,
    "alpha": cmd_alpha,
    "beta": cmd_beta,
    "eta": cmd_eta,
    "verify": cmd_verify,
    "report": cmd_report,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", default="-",
                        help="seifert-data file (default: standard input)")
    common.add_argument("--format", choices=("text", "machine"), default="text")

    parser = _Parser(prog="seifertkit",
                     description="Conway polynomials and linking pairings from Seifert data.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in ("validate", "conway", "conway-knot", "alexander", "pairing"):
        sub.add_parser(name, parents=[common])

    p = sub.add_parser("taylor", parents=[common])
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--j", type=int, default=1)

    p = sub.add_parser("alpha", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--j", type=int, default=1)

    p = sub.add_parser("beta", parents=[common])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--j", type=int, default=1)

    p = sub.add_parser("eta", parents=[common])
    p.add_argument("--i", type=int, default=1)

    p = sub.add_parser("verify", parents=[common])
    p.add_argument("--all", action="store_true")
    for c in VERIFY_CHOICES:
        p.add_argument(f"--{c}", action="store_true")
    p.add_argument("--order", type=int, default=10)

    p = sub.add_parser("report", parents=[common])
    p.add_argument("--order", type=int, default=10)
    return parser


def _read(path: str, stdin) -> str:
    if path == "-":
        return stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def main(argv: list[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "order", 1) < 1:
        print("seifertkit: error: --order must be at least 1", file=stderr)
        return EXIT_PARSE

    try:
        text = _read(args.input, stdin)
    except OSError as exc:
        print(f"seifertkit: cannot read {args.input}: {exc.strerror}", file=stderr)
        return EXIT_PARSE
    try:
        d = parse(text)
    except ParseError as exc:
        print(f"seifertkit: parse error: {exc}", file=stderr)
        return EXIT_PARSE
    except SeifertValidationError as exc:
        for v in exc.violations:
            print(f"seifertkit: invalid Seifert data: {v}", file=stderr)
        return EXIT_INVALID

    out = _Out(args.format == "machine")
    try:
        code = COMMANDS[args.command](d, args, out) or EXIT_OK
    except ArithmeticError as exc:
        print(f"seifertkit: internal identity failed: {exc}", file=stderr)
        return EXIT_VERIFY
    except (IndexError, ValueError) as exc:
        print(f"seifertkit: error: {exc}", file=stderr)
        return EXIT_INVALID
    stdout.write(out.text())
    return code


if __name__ == "__main__":
    sys.exit(main())
