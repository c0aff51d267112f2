"""Command line front end.

Exit status: 0 when the computation succeeds or the property is verified,
1 when a violation is found or a candidate is ruled out, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import polytopes
from .colored import is_k_ffk
from .errors import BudgetExceededError, CDGammaError, NotCDExpressibleError
from .flags import flag_f, flag_h, gamma_from_delta, gamma_vector, sd_h_from_flag_h
from .io import (
    format_flag_vector,
    format_vector,
    parse_vector,
    read_shelling,
    read_structure,
    write_colored,
    write_poset,
)
from .poset import join, suspension
from .realizability import (
    conjecture_search,
    delta_ffk_report,
    pair_inequality_check,
    rank5_screen,
)
from .shelling import stanley_step, verify_c2_lower_bound
from .words import ab_to_cd, alpha_vector, psi_from_flag_h, specialize_c1

OK, VIOLATION, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load(path):
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return read_structure(text, name=p.stem)


def _kv(out, args, key, value):
    sep = "\t" if args.format == "tsv" else " = "
    out.write(f"{key}{sep}{value}\n")


def _cd(poset, jobs):
    return ab_to_cd(psi_from_flag_h(flag_h(flag_f(poset, jobs=jobs))))


def cmd_gen(args, out):
    kind, rest = args.kind, args.args
    if kind in ("simplex", "cube", "crosspoly", "polygon"):
        if len(rest) != 1 or not rest[0].isdigit():
            raise UsageError(f"gen {kind} needs one integer argument")
        poset = polytopes.builtin(kind, int(rest[0]))
    elif kind == "join":
        if len(rest) != 2:
            raise UsageError("gen join needs two poset files")
        a, b = (_load(r) for r in rest)
        poset = join(a, b, name=f"{a.name}_join_{b.name}")
    elif kind == "suspension":
        if len(rest) != 1:
            raise UsageError("gen suspension needs one poset file")
        a = _load(rest[0])
        poset = suspension(a, name=f"susp_{a.name}")
    else:
        raise UsageError(f"unknown generator {kind!r}")
    out.write(write_poset(poset))
    return OK


def cmd_flags(args, out):
    poset = _load(args.poset)
    f = flag_f(poset, jobs=args.jobs)
    h = flag_h(f)
    if args.format == "tsv":
        out.write("S\tf\th\n")
        for (s, fv), (_, hv) in zip(f.items(), h.items()):
            key = ",".join(map(str, sorted(s))) if s else "empty"
            out.write(f"{key}\t{fv}\t{hv}\n")
    else:
        out.write("flag_f\n" + format_flag_vector(f))
        out.write("flag_h\n" + format_flag_vector(h))
    return OK


def cmd_cdindex(args, out):
    poset = _load(args.poset)
    try:
        phi = _cd(poset, args.jobs)
    except NotCDExpressibleError as exc:
        out.write(f"NOT_EULERIAN residual = {exc.residual}\n")
        return VIOLATION
    delta = specialize_c1(phi)
    out.write(f"phi\t{phi}\n" if args.format == "tsv" else f"{phi}\n")
    _kv(out, args, "delta", format_vector(delta))
    if args.witness:
        report = delta_ffk_report(phi)
        out.write(f"ffk k={report.k} {'true' if report.ok else 'false'}\n")
        if not report.ok:
            return VIOLATION
        out.write("WITNESS\n" + write_colored(report.witness))
    return OK


def cmd_gamma(args, out):
    poset = _load(args.poset)
    fh = flag_h(flag_f(poset, jobs=args.jobs))
    h = sd_h_from_flag_h(fh)
    gamma = gamma_vector(h)
    scaled = gamma_from_delta(specialize_c1(ab_to_cd(psi_from_flag_h(fh))))
    match = gamma == scaled
    _kv(out, args, "h", format_vector(h))
    _kv(out, args, "gamma", format_vector(gamma))
    _kv(out, args, "2^i*delta", format_vector(scaled))
    _kv(out, args, "match", "true" if match else "false")
    return OK if match else VIOLATION


def cmd_ffk(args, out):
    vec = parse_vector(args.vector)
    ok = is_k_ffk(vec, args.k)
    out.write("true\n" if ok else "false\n")
    return OK if ok else VIOLATION


def cmd_screen5(args, out):
    report = rank5_screen(parse_vector(args.delta))
    out.write("\n".join(report.lines()) + "\n")
    return VIOLATION if report.ruled_out else OK


def cmd_shell(args, out):
    poset = _load(args.poset)
    so = read_shelling(Path(args.order).read_text(encoding="utf-8"), poset)
    status = OK
    phi = None
    for i in range(1, so.r - 1):
        step = stanley_step(so, i)
        if phi is None:
            phi = step.before
        phi = phi + step.increment
        out.write(f"stanley i={i} {'ok' if step.holds else 'FAIL'} "
                  f"phi={step.after}\n")
        if not step.holds:
            status = VIOLATION
        if i >= 2:
            good = verify_c2_lower_bound(so, i)
            out.write(f"bound i={i} {'ok' if good else 'FAIL'}\n")
            if not good:
                status = VIOLATION
    direct = _cd(poset, args.jobs)
    if phi is None:
        out.write("telescoped = (no steps)\n")
    else:
        same = phi == direct
        out.write(f"telescoped = {phi}\n")
        if not same:
            status = VIOLATION
    out.write(f"direct = {direct}\n")
    return status


def cmd_conjecture(args, out):
    poset = _load(args.poset)
    budget = args.budget_pos if args.budget_pos is not None else args.budget
    alpha = alpha_vector(_cd(poset, args.jobs))
    violations = pair_inequality_check(alpha)
    for i, j, lhs, rhs in violations:
        out.write(f"PAIR_VIOLATION i={i} j={j} {lhs}<{rhs}\n")
    try:
        witness = conjecture_search(alpha, budget=budget)
    except BudgetExceededError:
        out.write("INCONCLUSIVE budget\n")
        return VIOLATION
    if witness is None:
        out.write("RULED_OUT\n")
        return VIOLATION
    out.write("WITNESS\n" + write_colored(witness))
    return VIOLATION if violations else OK


def build_parser():
    parser = _Parser(prog="cdgamma", description=__doc__.splitlines()[0])
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--format", choices=("text", "tsv"), default="text")
    parser.add_argument("--budget", type=int, default=100_000)
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("gen")
    p.add_argument("kind")
    p.add_argument("args", nargs="*")
    p.set_defaults(func=cmd_gen)

    for verb, func in (("flags", cmd_flags), ("gamma", cmd_gamma)):
        p = sub.add_parser(verb)
        p.add_argument("poset")
        p.set_defaults(func=func)

    p = sub.add_parser("cdindex")
    p.add_argument("poset")
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_cdindex)

    p = sub.add_parser("ffk")
    p.add_argument("vector")
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_ffk)

    p = sub.add_parser("screen5")
    p.add_argument("delta")
    p.set_defaults(func=cmd_screen5)

    p = sub.add_parser("shell")
    p.add_argument("poset")
    p.add_argument("order")
    p.set_defaults(func=cmd_shell)

    p = sub.add_parser("conjecture")
    p.add_argument("poset")
    p.add_argument("budget_pos", nargs="?", type=int, metavar="budget")
    p.set_defaults(func=cmd_conjecture)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return USAGE
    except CDGammaError as exc:
        err.write(f"error {exc.code}: {exc}\n")
        return USAGE
    except (OSError, ValueError) as exc:
        err.write(f"error Input: {exc}\n")
        return USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
