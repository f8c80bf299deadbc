"""Command-line front end.

Exit codes: 0 answered, 1 usage or parse error, 2 the answer is unknown or
outside the tables (stdout starts with ``UNKNOWN:``), 3 a lift is obstructed.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from . import abgroup, cohomology, homotopy, lift, tower
from .abgroup import FgAbGroup, IntegerMatrix

EXIT_OK, EXIT_USAGE, EXIT_UNKNOWN, EXIT_OBSTRUCTED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Unknown(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _classifying(text: str, allowed: tuple[str, ...]) -> tuple[str, int]:
    m = re.fullmatch(r"\s*([A-Za-z]+)\s*\(\s*(\d+)\s*\)\s*", text)
    if not m or m.group(1) not in allowed:
        raise UsageError(f"expected one of {', '.join(a + '(n)' for a in allowed)}, got {text!r}")
    return m.group(1), int(m.group(2))


def _descriptor(text: str) -> homotopy.GroupDescriptor:
    try:
        return homotopy.parse_descriptor(text)
    except ValueError as err:
        raise UsageError(str(err)) from None


def _group(text: str) -> FgAbGroup:
    try:
        return abgroup.parse_group(text)
    except ValueError as err:
        raise UsageError(str(err)) from None


def _matrix(text: str) -> IntegerMatrix:
    rows = [r for r in (row.strip() for row in text.split(";")) if r]
    try:
        data = [[int(x) for x in re.split(r"[\s,]+", r)] for r in rows]
        return IntegerMatrix.from_rows(data)
    except ValueError as err:
        raise UsageError(f"bad matrix {text!r}: {err}") from None


def _fmt_matrix(m: IntegerMatrix) -> str:
    return "; ".join(" ".join(str(x) for x in row) for row in m.to_rows()) or "(empty)"


def _build_parser() -> _Parser:
    parser = _Parser(prog="stringtower", description=__doc__.splitlines()[0])
    parser.add_argument("--unicode", action="store_true", help="render groups with ℤ and ×")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("pi", help="homotopy group pi_i of a group")
    p.add_argument("descriptor")
    p.add_argument("degree", type=int)

    p = sub.add_parser("tower", help="connected-cover tower and its obstructions")
    p.add_argument("descriptor")

    p = sub.add_parser("homology", help="H_k(BSO(n)) or H_k(BSpin(n))")
    p.add_argument("space")
    p.add_argument("degree", type=int)

    p = sub.add_parser("betti", help="Betti number of BSpin(n) in degree k")
    p.add_argument("space")
    p.add_argument("degree", type=int)

    p = sub.add_parser("h4", help="H^4(BSpin(n); Z) and its generators")
    p.add_argument("space")

    p = sub.add_parser("ring", help="cohomology ring generators")
    p.add_argument("space")

    p = sub.add_parser("abgroup", help="abelian group arithmetic")
    p.add_argument("op", choices=["tensor", "hom", "ext", "tor", "sum", "snf"])
    p.add_argument("args", nargs="+")

    p = sub.add_parser("lift", help="lifting verdict for a cohomology profile")
    p.add_argument("--profile", required=True)
    p.add_argument("--target", default=None, help="stage key (SO, Spin, String, cover) or index")
    p.add_argument("descriptor")

    p = sub.add_parser("twisted", help="twisted lifting verdict")
    p.add_argument("--profile", required=True)
    p.add_argument("--kind", required=True, choices=["SO", "Spin", "String", "GS"])
    p.add_argument("descriptor", nargs="?")
    return parser


def _load_profile(path: str) -> lift.CohomologyProfile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise UsageError(f"cannot read profile {path}: {err.strerror}") from None
    try:
        return lift.parse_profile(text)
    except lift.ProfileError as err:
        raise UsageError(f"{path}: {err}") from None


def _verdict(v: lift.LiftVerdict, out: list[str]) -> int:
    if v.status is lift.Status.LIFTS:
        out.append("LIFTS")
        return EXIT_OK
    if v.status is lift.Status.OBSTRUCTED:
        out.append(str(v))
        return EXIT_OBSTRUCTED
    out.append(f"UNKNOWN: {v}")
    return EXIT_UNKNOWN


def _dispatch(args, out: list[str]) -> int:
    uni = args.unicode

    def show(g: FgAbGroup) -> str:
        return g.to_string(uni)

    verb = args.verb
    if verb == "pi":
        if args.degree < 0:
            raise UsageError("degree must be nonnegative")
        answer = homotopy.pi(_descriptor(args.descriptor), args.degree)
        if isinstance(answer, homotopy.Unknown):
            raise _Unknown(answer.reason)
        out.append(show(answer))
    elif verb == "tower":
        try:
            t = tower.build_tower(_descriptor(args.descriptor))
        except ValueError as err:
            raise UsageError(str(err)) from None
        out.append(t.render(uni))
    elif verb == "homology":
        family, n = _classifying(args.space, ("BSO", "BSpin"))
        if args.degree < 0:
            raise UsageError("degree must be nonnegative")
        f = cohomology.homology_bso if family == "BSO" else cohomology.homology_bspin
        out.append(show(f(n, args.degree)))
    elif verb == "betti":
        _, n = _classifying(args.space, ("BSpin",))
        if n < 3 or args.degree < 0:
            raise UsageError("betti needs n >= 3 and a nonnegative degree")
        out.append(str(cohomology.betti_bspin(n, args.degree)))
    elif verb == "h4":
        _, n = _classifying(args.space, ("BSpin",))
        if n < 3:
            raise _Unknown(f"H^4(BSpin({n})) is not generated by half_p1; see 'homology BSpin({n}) 4'")
        group, gens = cohomology.h4_bspin(n)
        out.append(f"{show(group)} generated by {', '.join(g.label for g in gens)}")
    elif verb == "ring":
        family, n = _classifying(args.space, ("BU", "BSU", "BSp", "BSOQ"))
        pres = cohomology.ring_generators("BSO_rational" if family == "BSOQ" else family, n)
        out.extend(f"{name} {deg}" for name, deg in pres.generators)
        out.extend(f"relation {r}" for r in pres.relations)
    elif verb == "abgroup":
        if args.op == "snf":
            if len(args.args) != 1:
                raise UsageError("abgroup snf takes one matrix argument")
            m = _matrix(args.args[0])
            d, u, v = abgroup.smith_normal_form(m)
            out += [f"D = {_fmt_matrix(d)}", f"U = {_fmt_matrix(u)}", f"V = {_fmt_matrix(v)}",
                    f"cokernel = {show(abgroup.cokernel(m))}"]
        else:
            if len(args.args) != 2:
                raise UsageError(f"abgroup {args.op} takes two group arguments")
            a, b = (_group(x) for x in args.args)
            op = {"tensor": abgroup.tensor, "hom": abgroup.hom, "ext": abgroup.ext,
                  "tor": abgroup.tor, "sum": abgroup.direct_sum}[args.op]
            out.append(show(op(a, b)))
    elif verb == "lift":
        profile = _load_profile(args.profile)
        try:
            t = tower.build_tower(_descriptor(args.descriptor))
            target = t.stage_index(args.target) if args.target else None
            return _verdict(lift.evaluate_lift(profile, t, target), out)
        except lift.VocabularyMismatch as err:
            raise UsageError(f"vocabulary mismatch: {err}") from None
        except ValueError as err:
            raise UsageError(str(err)) from None
    elif verb == "twisted":
        profile = _load_profile(args.profile)
        try:
            if args.kind == "GS":
                spec = tower.green_schwarz_spec()
            else:
                if not args.descriptor:
                    raise UsageError(f"twisted --kind {args.kind} needs a descriptor")
                d = _descriptor(args.descriptor)
                spec = tower.twisted_descriptor(args.kind, d.p, d.q)
            return _verdict(lift.evaluate_twisted(profile, spec), out)
        except lift.VocabularyMismatch as err:
            raise UsageError(f"vocabulary mismatch: {err}") from None
        except ValueError as err:
            raise UsageError(str(err)) from None
    return EXIT_OK


def run(argv: list[str]) -> tuple[int, str]:
    """Execute one command; diagnostics go to stderr, the answer is returned."""
    out: list[str] = []
    try:
        args = _build_parser().parse_args(argv)
        code = _dispatch(args, out)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE, ""
    except _Unknown as err:
        return EXIT_UNKNOWN, f"UNKNOWN: {err}\n"
    except cohomology.OutsideTable as err:
        return EXIT_UNKNOWN, f"UNKNOWN: {err}\n"
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE, ""
    return code, "".join(line + "\n" for line in out)


def main(argv: list[str] | None = None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
