"""Command-line front end.

Subcommands: ``minimize`` an automaton file, ``generate`` random inputs,
``check`` two automata for language equality or isomorphism, and
``bench`` a timing grid to CSV.  ``-`` means stdin/stdout.  Exit codes:
0 ok, 1 bad input data, 2 usage error, 3 checked relation false.
"""

import argparse
import sys

from .automaton import AutomatonError, is_isomorphic, parse, serialize
from .oracle import language_equal
from .workload import ALGORITHMS, bench, generate, parse_grid, rows_to_csv

EXIT_OK = 0
EXIT_DATA = 1
EXIT_USAGE = 2
EXIT_FALSE = 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _usage(message: str) -> int:
    print(f"usage error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _cmd_minimize(args) -> int:
    d = parse(_read(args.inp))
    out, stats = ALGORITHMS[args.algo](d)
    _write(args.out, serialize(out))
    if args.stats:
        for line in stats.as_lines():
            print(line, file=sys.stderr)
    return EXIT_OK


def _cmd_generate(args) -> int:
    if args.states < 1:
        return _usage("--states must be at least 1")
    if args.alphabet < 1:
        return _usage("--alphabet must be at least 1")
    if not 0.0 < args.density <= 1.0:
        return _usage("--density must be in (0, 1]")
    finals = args.states // 2 if args.finals is None else args.finals
    if not 0 <= finals <= args.states:
        return _usage("--finals out of range")
    d = generate(args.states, args.alphabet, args.density, finals, args.seed)
    _write(args.out, serialize(d))
    return EXIT_OK


def _cmd_check(args) -> int:
    if args.equiv:
        a, b = (parse(_read(path)) for path in args.equiv)
        return EXIT_OK if language_equal(a, b) else EXIT_FALSE
    a, b = (parse(_read(path)) for path in args.isomorphic)
    return EXIT_OK if is_isomorphic(a, b) else EXIT_FALSE


def _cmd_bench(args) -> int:
    cells = []
    if args.grid:
        try:
            cells.extend(parse_grid(_read(args.grid)))
        except ValueError as exc:
            return _usage(str(exc))
    for cell_arg in args.cell or ():
        parts = cell_arg.split(",")
        if len(parts) != 3:
            return _usage(f"bad --cell {cell_arg!r}, expected n,alpha,p")
        try:
            cells.append((int(parts[0]), int(parts[1]), float(parts[2])))
        except ValueError:
            return _usage(f"bad --cell {cell_arg!r}, expected numbers")
    if not cells:
        return _usage("no cells given (use --cell or --grid)")
    algos = args.algo.split(",")
    for algo in algos:
        if algo not in ALGORITHMS:
            return _usage(f"unknown algorithm {algo!r}")
    if args.seeds < 1:
        return _usage("--seeds must be at least 1")
    rows = bench(cells, algos=algos, seeds=range(args.seeds))
    _write(args.csv, rows_to_csv(rows))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ptdfa",
        description="Minimize DFAs with partial transition functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("minimize", help="minimize an automaton file")
    p.add_argument("--in", dest="inp", default="-", metavar="PATH")
    p.add_argument("--out", default="-", metavar="PATH")
    p.add_argument("--algo", choices=sorted(ALGORITHMS), default="valmari")
    p.add_argument("--stats", action="store_true",
                   help="print run statistics to stderr")
    p.set_defaults(func=_cmd_minimize)

    p = sub.add_parser("generate", help="emit a seeded random automaton")
    p.add_argument("--states", type=int, required=True)
    p.add_argument("--alphabet", type=int, required=True)
    p.add_argument("--density", type=float, required=True)
    p.add_argument("--finals", type=int, default=None,
                   help="final-state count (default: states // 2)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-", metavar="PATH")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("check", help="compare two automata")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--equiv", nargs=2, metavar=("A", "B"),
                       help="language equality")
    group.add_argument("--isomorphic", nargs=2, metavar=("A", "B"),
                       help="equality up to state renaming")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("bench", help="run a timing grid, emit CSV")
    p.add_argument("--cell", action="append", metavar="N,ALPHA,P",
                   help="one grid cell; may repeat")
    p.add_argument("--grid", metavar="PATH", help="grid file of n,alpha,p lines")
    p.add_argument("--seeds", type=int, default=1,
                   help="seeds 0..K-1 per cell (default 1)")
    p.add_argument("--algo", default="valmari",
                   help="comma-separated algorithms (default valmari)")
    p.add_argument("--csv", default="-", metavar="PATH")
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except AutomatonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
