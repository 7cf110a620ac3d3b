"""Command line entry point.

Subcommands
-----------
spectrum   grouped eigenvalues of Q(H), optionally with the exact charpoly
analyze    full structural report; exit status 1 if any check failed
power      build H^r_s and predict (optionally verify) its spectrum
gen        seeded random k-graph in the text file format
verify     randomised property suites over every identity and bound

Examples
--------
  hyperq spectrum examples/k4.txt --exact-charpoly
  hyperq power p3.txt --s 1 --r 3 --verify
  hyperq gen --k 3 --n 6 --m 5 --seed 7 > h.txt
  hyperq verify --trials 100 --n-max 8 --seed 1
"""

from __future__ import annotations

import argparse
import json
import sys

from . import _config
from .errors import HypergraphError
from .generate import random_hypergraph
from .io import parse, serialize
from .power import PowerParams
from .report import analysis_report, power_report, spectrum_report
from .suites import run_verify


def _emit(doc, args) -> None:
    text = json.dumps(doc, indent=2, sort_keys=False)
    if getattr(args, "json_out", None):
        with open(args.json_out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_spectrum(args) -> int:
    h = parse(args.file)
    _emit(spectrum_report(h, exact_charpoly=args.exact_charpoly), args)
    return 0


def cmd_analyze(args) -> int:
    doc = analysis_report(parse(args.file))
    _emit(doc, args)
    if not doc["ok"]:
        print(f"failed assertion: {doc['first_failure']}", file=sys.stderr)
        return 1
    return 0


def cmd_power(args) -> int:
    doc = power_report(parse(args.file), PowerParams(args.s, args.r), verify=args.verify)
    _emit(doc, args)
    return 0 if doc["verified"] in (None, True) else 1


def cmd_gen(args) -> int:
    h = random_hypergraph(args.k, args.n, args.m, seed=args.seed)
    text = serialize(h)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    ks = tuple(int(k) for k in args.k.split(","))
    doc = run_verify(args.trials, seed=args.seed, n_max=args.n_max, ks=ks, jobs=args.jobs)
    _emit(doc, args)
    return 0 if doc["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol-zero", type=float, default=None,
                        help=f"relative zero threshold (default {_config.TOL_ZERO})")
    common.add_argument("--tol-group", type=float, default=None,
                        help=f"relative multiplicity clustering gap (default {_config.TOL_GROUP})")
    common.add_argument("--json-out", metavar="PATH", help="write the JSON document here instead of stdout")

    parser = argparse.ArgumentParser(prog="hyperq", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="signless Laplacian spectrum")
    p.add_argument("file")
    p.add_argument("--exact-charpoly", action="store_true",
                   help=f"add integer charpoly coefficients (n <= {_config.CHARPOLY_MAX_ORDER})")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("analyze", parents=[common], help="structural report")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("power", parents=[common], help="power hypergraph H^r_s")
    p.add_argument("file")
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="eigendecompose the construction and compare")
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("gen", help="random k-graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", "-o", metavar="PATH")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", parents=[common], help="randomised property suites")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--k", default="2,3", help="comma-separated uniformities")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    _config.configure(tol_zero=getattr(args, "tol_zero", None), tol_group=getattr(args, "tol_group", None))
    try:
        return args.func(args)
    except HypergraphError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
