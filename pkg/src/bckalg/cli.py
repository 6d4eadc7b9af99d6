"""Command-line surface.

Subcommands: verify, convert, iseki, enumerate, sub, iso, check-paper.
Exit codes: 0 pass, 1 semantic failure (axiom violation, non-isomorphic,
failed golden check), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .core import AlgebraError, FiniteAlgebra, Kind
from .axioms import (
    VerificationReport,
    check_bck,
    check_mv,
    check_wajsberg,
    is_commutative,
    is_implicative,
    is_positive_implicative,
)
from .transforms import (
    bck_to_mv,
    bck_to_wajsberg,
    iseki_extension,
    mv_to_bck,
    mv_to_wajsberg,
    wajsberg_to_bck,
    wajsberg_to_mv,
)
from .enumeration import enumerate_wajsberg, factorizations, find_isomorphism, poset_isomorphic
from .substructures import ideals, subalgebras
from .algfile import fixture_dir, load_algebra, render_algebra, save_algebra
from .golden import run_check_paper


class _InputError(Exception):
    pass


def _load(path: str) -> FiniteAlgebra:
    try:
        return load_algebra(path)
    except OSError as exc:
        raise _InputError(str(exc)) from None
    except AlgebraError as exc:
        raise _InputError(f"{path}: {exc}") from None


def _print_report(alg: FiniteAlgebra, report: VerificationReport) -> bool:
    if report.passed:
        print(f"PASS {report.checked}")
        return True
    for v in report.failures:
        witness = ",".join(alg.names[i] for i in v.witness)
        print(f"FAIL {v.axiom} at ({witness})")
    return False


def _cmd_verify(args: argparse.Namespace) -> int:
    alg = _load(args.file)
    if alg.kind.value != args.kind:
        raise _InputError(f"{args.file} declares kind {alg.kind.value}, not {args.kind}")
    extras = [
        (args.commutative, is_commutative),
        (args.implicative, is_implicative),
        (args.positive_implicative, is_positive_implicative),
    ]
    if any(flag for flag, _ in extras) and alg.kind is not Kind.BCK:
        raise _InputError("--commutative/--implicative/--positive-implicative apply to bck files only")
    checkers = {"bck": check_bck, "wajsberg": check_wajsberg, "mv": check_mv}
    passed = _print_report(alg, checkers[args.kind](alg))
    for flag, checker in extras:
        if flag:
            passed &= _print_report(alg, checker(alg))
    return 0 if passed else 1


_CONVERSIONS = {
    (Kind.BCK, Kind.MV): bck_to_mv,
    (Kind.BCK, Kind.WAJSBERG): bck_to_wajsberg,
    (Kind.MV, Kind.BCK): mv_to_bck,
    (Kind.MV, Kind.WAJSBERG): mv_to_wajsberg,
    (Kind.WAJSBERG, Kind.MV): wajsberg_to_mv,
    (Kind.WAJSBERG, Kind.BCK): wajsberg_to_bck,
}


def _cmd_convert(args: argparse.Namespace) -> int:
    alg = _load(args.file)
    if args.source is not None and alg.kind.value != args.source:
        raise _InputError(f"{args.file} declares kind {alg.kind.value}, not {args.source}")
    to = Kind(args.to)
    try:
        converted = alg if to is alg.kind else _CONVERSIONS[(alg.kind, to)](alg)
    except AlgebraError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    sys.stdout.write(render_algebra(converted))
    return 0


def _cmd_iseki(args: argparse.Namespace) -> int:
    alg = _load(args.file)
    if alg.kind is not Kind.BCK:
        raise _InputError(f"iseki extension takes a bck file, got kind {alg.kind.value}")
    sys.stdout.write(render_algebra(iseki_extension(alg)))
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if args.order < 2:
        raise _InputError("--order must be >= 2")
    algebras = enumerate_wajsberg(args.order)
    if args.kind == "bck":
        algebras = [wajsberg_to_bck(a) for a in algebras]
    print(f"pi_{args.order} = {len(algebras)}")
    if args.out is not None:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        prefix = "w" if args.kind == "wajsberg" else "bck"
        for fact, alg in zip(factorizations(args.order), algebras):
            path = out / f"{prefix}{args.order}_{fact.label}.alg"
            save_algebra(alg, path)
            print(f"wrote {path}")
    return 0


def _cmd_sub(args: argparse.Namespace) -> int:
    alg = _load(args.file)
    if alg.kind is not Kind.BCK:
        raise _InputError(f"sub takes a bck file, got kind {alg.kind.value}")
    proper = not args.all
    want_subs = args.subalgebras or not (args.subalgebras or args.ideals)
    want_ideals = args.ideals or not (args.subalgebras or args.ideals)
    scope = "proper" if proper else "all"
    if want_subs:
        subs = subalgebras(alg, proper_only=proper)
        print(f"subalgebras ({scope}, {len(subs)}):")
        for s in subs:
            print("  {" + ",".join(alg.names[i] for i in sorted(s)) + "}")
    if want_ideals:
        ids = ideals(alg, proper_only=proper)
        print(f"ideals ({scope}, {len(ids)}):")
        for s in ids:
            print("  {" + ",".join(alg.names[i] for i in sorted(s)) + "}")
    return 0


def _cmd_iso(args: argparse.Namespace) -> int:
    a = _load(args.a)
    b = _load(args.b)
    if args.poset:
        if poset_isomorphic(a, b):
            print("poset-isomorphic")
            return 0
        print("non-isomorphic")
        return 1
    try:
        mapping = find_isomorphism(a, b)
    except AlgebraError as exc:
        raise _InputError(str(exc)) from None
    if mapping is None:
        print("non-isomorphic")
        return 1
    for i, j in enumerate(mapping):
        print(f"{a.names[i]} -> {b.names[j]}")
    return 0


def _cmd_check_paper(args: argparse.Namespace) -> int:
    fixtures = Path(args.fixtures) if args.fixtures is not None else fixture_dir()
    try:
        lines, ok = run_check_paper(fixtures)
    except (OSError, AlgebraError) as exc:
        raise _InputError(str(exc)) from None
    for line in lines:
        print(line)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bckalg", description="Finite BCK/MV/Wajsberg algebra toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check the axioms of an algebra file")
    p.add_argument("--kind", required=True, choices=["bck", "wajsberg", "mv"])
    p.add_argument("--commutative", action="store_true")
    p.add_argument("--implicative", action="store_true")
    p.add_argument("--positive-implicative", dest="positive_implicative", action="store_true")
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("convert", help="translate an algebra to another kind")
    p.add_argument("--to", required=True, choices=["bck", "wajsberg", "mv"])
    p.add_argument("--from", dest="source", choices=["bck", "wajsberg", "mv"])
    p.add_argument("file")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("iseki", help="adjoin a fresh top to a bck algebra")
    p.add_argument("file")
    p.set_defaults(func=_cmd_iseki)

    p = sub.add_parser("enumerate", help="generate all order-n algebras, one per factorization")
    p.add_argument("--order", required=True, type=int)
    p.add_argument("--kind", choices=["wajsberg", "bck"], default="wajsberg")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("sub", help="list subalgebras and ideals of a bck file")
    p.add_argument("--subalgebras", action="store_true")
    p.add_argument("--ideals", action="store_true")
    p.add_argument("--all", action="store_true", help="include {zero} and the full carrier")
    p.add_argument("file")
    p.set_defaults(func=_cmd_sub)

    p = sub.add_parser("iso", help="search for an isomorphism between two algebra files")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--poset", action="store_true", help="compare derived orders only")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("check-paper", help="run the golden suite over a fixtures directory")
    p.add_argument("fixtures", nargs="?")
    p.set_defaults(func=_cmd_check_paper)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
