"""Command-line front end.

    homlie check     --poset X.poset --endo M.endo   [--field Q|p=N]
    homlie decompose --poset X.poset --endo M.endo   [--field ...]
    homlie build     --poset X.poset --params P.hlp  [--field ...]
    homlie sweep     [--max-size 5] [--field Q --field p=2 ...] [--trials 100] [--seed 0]

Exit codes: 0 success (regular Hom-Lie / PASS), 1 rejection (or FAIL),
2 usage, parse or context errors (message on stderr only).
"""

from __future__ import annotations

import argparse
import sys

from .decide import decide_regular_homlie, format_decision
from .errors import HomLieError
from .formats import format_endo, format_params, parse_endo, parse_params, parse_poset
from .incidence import IncidenceAlgebra
from .scalars import Field
from .structures import build_regular_homlie
from .sweep import run_verify_sweep


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _algebra(args) -> IncidenceAlgebra:
    return IncidenceAlgebra(parse_poset(_read(args.poset)), Field.parse(args.field))


def cmd_check(args) -> int:
    alg = _algebra(args)
    decision = decide_regular_homlie(parse_endo(_read(args.endo), alg))
    print(format_decision(decision))
    return 0 if decision.ok else 1


def cmd_decompose(args) -> int:
    alg = _algebra(args)
    decision = decide_regular_homlie(parse_endo(_read(args.endo), alg))
    if not decision.ok:
        print(format_decision(decision))
        return 1
    sys.stdout.write(format_params(decision.params))
    return 0


def cmd_build(args) -> int:
    alg = _algebra(args)
    params = parse_params(_read(args.params), alg)
    sys.stdout.write(format_endo(build_regular_homlie(params)))
    return 0


def cmd_sweep(args) -> int:
    flags = []
    for f in args.field or ["Q"]:
        flags += [s for s in f.split(",") if s]
    fields = [Field.parse(f) for f in flags]
    report = run_verify_sweep(args.max_size, fields, args.trials, args.seed)
    sys.stdout.write(report.render(timing=args.timing))
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="homlie", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_poset(p, endo=False, params=False):
        p.add_argument("--poset", required=True, help="poset file (.poset)")
        if endo:
            p.add_argument("--endo", required=True, help="endomorphism file (.endo)")
        if params:
            p.add_argument("--params", required=True, help="parameter file (.hlp)")
        p.add_argument("--field", default="Q", help="Q or p=N (default Q)")

    p = sub.add_parser("check", help="decide whether an endomorphism is a regular Hom-Lie structure")
    with_poset(p, endo=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decompose", help="print the parameters of a regular Hom-Lie structure")
    with_poset(p, endo=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("build", help="build the endomorphism from parameters")
    with_poset(p, params=True)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("sweep", help="verify the characterization on all small connected posets")
    p.add_argument("--max-size", type=int, default=5)
    p.add_argument("--field", action="append", help="Q or p=N; repeat or comma-separate")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timing", action="store_true", help="append wall times (breaks byte-identity)")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (HomLieError, OSError, ValueError) as exc:
        print(f"homlie: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
