"""Command-line front end.

Exit codes: 0 when the input was evaluated (whatever the verdict), 2 for
input or parse errors, 3 when a descriptor is internally inconsistent.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .charclasses import admits_ac_structure_6d, lai_indices
from .decision import decide_cr_embedding, decide_parallelizable, decide_ph_6d, decide_ph_embedding
from .descriptor import validate
from .descriptor_file import format_descriptor, read_descriptor
from .errors import CrembedError, ParityError, ValidationFailureError
from .homology import semi_characteristic
from .obstructions import gamma_homotopy, kervaire_group
from .presentation import abelianization, format_presentation, parse_presentation
from .snf import read_matrix, smith_normal_form
from .surgery import construct_M

DECISIONS = {
    "parallelizable": decide_parallelizable,
    "ph": decide_ph_embedding,
    "cr": decide_cr_embedding,
    "ac6": decide_ph_6d,
    "acstruct6": admits_ac_structure_6d,
}


def _load_checked(path):
    m = read_descriptor(path)
    problems = validate(m)
    if problems:
        raise ValidationFailureError(problems)
    return m


def _fmt(x):
    return "?" if x is None else str(x)


def cmd_invariants(args, out):
    m = _load_checked(args.file)
    t = m.betti
    out.write(f"dim = {m.dim}\n")
    out.write(f"betti_z = {','.join(_fmt(b) for b in t.betti_z)}\n")
    out.write(f"betti_z2 = {','.join(_fmt(b) for b in t.betti_z2)}\n")
    out.write(f"euler_characteristic = {_fmt(m.euler)}\n")
    if m.closed and m.dim % 2 == 1:
        out.write(f"semi_characteristic = {_fmt(semi_characteristic(t))}\n")
    if m.dim >= 1:
        out.write(f"kervaire_group = {kervaire_group(m.dim).value}\n")
    if m.pi1 is not None:
        out.write(f"pi1 = {format_presentation(m.pi1)}\n")
        out.write(f"H1 = {abelianization(m.pi1)}\n")
    if m.lai is not None and m.euler is not None:
        ip, im = lai_indices(m.euler, m.lai)
        out.write(f"lai_indices = {ip},{im}\n")
    return 0


def cmd_decide(args, out):
    m = _load_checked(args.file)
    decision = DECISIONS[args.kind](m)
    out.write("".join(line + "\n" for line in decision.lines()))
    return 0


def cmd_lai(args, out):
    m = _load_checked(args.file)
    if m.lai is None:
        raise CrembedError("descriptor has no lai.n / lai.pairings")
    if m.euler is None:
        raise CrembedError("Euler characteristic unknown; give betti_z or chi")
    ip, im = lai_indices(m.euler, m.lai)
    out.write(f"I+ = {ip}\nI- = {im}\n")
    out.write(f"cr_precondition = {'true' if (ip, im) == (0, 0) else 'false'}\n")
    return 0


def cmd_construct(args, out):
    p = parse_presentation(args.group)
    m, log = construct_M(p, args.dim)
    text = format_descriptor(m)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    if args.log:
        Path(args.log).write_text(log.text(), encoding="utf-8")
    else:
        sys.stderr.write(log.text())
    return 0


def cmd_tables(args, out):
    if args.table == "kn":
        if args.max < 1:
            raise CrembedError("--max must be at least 1")
        width = len(str(args.max))
        out.write(f"{'n':>{width}}  K_n\n")
        for n in range(1, args.max + 1):
            out.write(f"{n:>{width}}  {kervaire_group(n).value}\n")
    else:
        if args.n < 1 or args.max_k < 0:
            raise CrembedError("need --n >= 1 and --max-k >= 0")
        width = max(1, len(str(args.max_k)))
        out.write(f"{'k':>{width}}  pi_k(SO({2 * args.n})/U({args.n}))\n")
        for k in range(args.max_k + 1):
            out.write(f"{k:>{width}}  {gamma_homotopy(k, args.n).value}\n")
    return 0


def cmd_snf(args, out):
    try:
        m = read_matrix(Path(args.file).read_text(encoding="utf-8"))
    except ValueError as exc:
        raise CrembedError(str(exc)) from None
    d, u, v = smith_normal_form(m)
    out.write(" ".join(str(x) for x in d) + "\n")
    if args.transforms:
        for name, mat in (("U", u), ("V", v)):
            out.write(f"{name}:\n")
            for row in mat.to_rows():
                out.write(" ".join(str(x) for x in row) + "\n")
    return 0


def cmd_validate(args, out):
    problems = validate(read_descriptor(args.file))
    if not problems:
        out.write("OK\n")
        return 0
    out.write("".join(f"violation: {p}\n" for p in problems))
    return 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crembed", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="print the computable invariants of a descriptor")
    p.add_argument("file")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("decide", help="certified verdict for one criterion")
    p.add_argument("kind", choices=sorted(DECISIONS))
    p.add_argument("file")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("lai", help="Lai indices from the descriptor's pairing data")
    p.add_argument("file")
    p.set_defaults(func=cmd_lai)

    p = sub.add_parser("construct", help="parallelizable manifold with a given fundamental group")
    p.add_argument("--group", required=True, help='presentation, e.g. "<a, b | a b a^-1 b^-1>"')
    p.add_argument("--dim", required=True, type=int, help="even dimension >= 6")
    p.add_argument("--out", help="descriptor file (default: stdout)")
    p.add_argument("--log", help="provenance log file (default: stderr)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("tables", help="obstruction group tables")
    tables = p.add_subparsers(dest="table", required=True)
    t = tables.add_parser("kn")
    t.add_argument("--max", type=int, required=True)
    t.set_defaults(func=cmd_tables)
    t = tables.add_parser("bott")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--max-k", type=int, required=True)
    t.set_defaults(func=cmd_tables)

    p = sub.add_parser("snf", help="Smith normal form of an integer matrix file")
    p.add_argument("file")
    p.add_argument("--transforms", action="store_true", help="also print U and V")
    p.set_defaults(func=cmd_snf)

    p = sub.add_parser("validate", help="list violated consistency conditions")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)
    return parser


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args, out)
    except (ValidationFailureError, ParityError) as exc:
        sys.stderr.write(f"crembed: inconsistent descriptor: {exc}\n")
        return 3
    except (CrembedError, ValueError, OSError) as exc:
        sys.stderr.write(f"crembed: {exc}\n")
        return 2


def main():
    sys.exit(run())
