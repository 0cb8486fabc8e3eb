"""Command-line front end: pass pipelines, fold queries and the law suites.

Exit codes: 0 success, 1 parse/decode error or failing law, 2 usage error.
Results go to stdout; diagnostics only ever go to stderr.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Any, Sequence

from .minilang import SORTS, DecodeError, SExprError, decode_ast, encode_ast, infer_sort
from .minilang import parse_sexpr, print_sexpr
from .minilang.enumerate import universe as term_universe
from .minilang.passes import FOLDS, PASSES
from .suites import DEFAULT_TERM_SIZE, MAX_TERM_SIZE, SUITES

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _error(message: str) -> None:
    print(f"multiplate: {message}", file=sys.stderr)


def _parse_passes(csv: str) -> list[str]:
    names = [n.strip() for n in csv.split(",")]
    unknown = [n for n in names if n not in PASSES]
    if unknown:
        raise UsageError(f"unknown pass {unknown[0]!r} (choose from {', '.join(PASSES)})")
    return names


def _read_input(path: str) -> bytes:
    try:
        if path == "-":
            return sys.stdin.buffer.read()
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _load(path: str, root: str | None) -> Any:
    sexpr = parse_sexpr(_read_input(path))
    sort = root if root is not None else infer_sort(sexpr)
    return decode_ast(sexpr, sort)


def cmd_run(args: argparse.Namespace) -> int:
    passes = _parse_passes(args.passes)
    term = _load(args.input, args.root)
    for name in passes:
        term = PASSES[name](term)
    text = print_sexpr(encode_ast(term)) + "\n"
    if args.output is None:
        sys.stdout.write(text)
    else:
        try:
            with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc.strerror}") from exc
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    result = FOLDS[args.fold](_load(args.input, args.root))
    if isinstance(result, list):
        for name in result:
            sys.stdout.write(f"{name}\n")
    else:
        sys.stdout.write(f"{result}\n")
    return EXIT_OK


def cmd_laws(args: argparse.Namespace) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    size = args.size
    if size is not None and not 1 <= size <= MAX_TERM_SIZE:
        raise UsageError(f"--size must be between 1 and {MAX_TERM_SIZE}, got {size}")
    all_ok = True
    for name in names:
        start = time.perf_counter()
        if name == "multiplate":
            n = DEFAULT_TERM_SIZE if size is None else size
            count = sum(len(ts) for ts in term_universe(n).values())
            print(f"[{name}] {count} terms of size <= {n}")
        for r in SUITES[name](size=size, broken=args.broken):
            print(f"  {name}: {r.law}: {r.verdict.describe()}")
            all_ok = all_ok and r.ok
        print(f"[{name}] done in {time.perf_counter() - start:.2f}s")
    print("all laws hold" if all_ok else "some laws FAILED")
    return EXIT_OK if all_ok else EXIT_FAILURE


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse prints usage and exits 2
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="multiplate", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    run = sub.add_parser("run", help="apply a pipeline of passes to a program")
    run.add_argument("--pass", dest="passes", required=True, help="comma-separated: rename,constfold")
    run.add_argument("--root", choices=SORTS, help="sort of the input (default: inferred)")
    run.add_argument("-o", "--output", help="write here instead of stdout")
    run.add_argument("input", help="s-expression file, or - for stdin")
    run.set_defaults(func=cmd_run)

    stats = sub.add_parser("stats", help="run a fold over a program")
    stats.add_argument("--fold", choices=sorted(FOLDS), required=True)
    stats.add_argument("--root", choices=SORTS, help="sort of the input (default: inferred)")
    stats.add_argument("input", help="s-expression file, or - for stdin")
    stats.set_defaults(func=cmd_stats)

    laws = sub.add_parser("laws", help="run the exhaustive law suites")
    laws.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    laws.add_argument("--size", type=int, help=f"term size bound, 1..{MAX_TERM_SIZE} (default {DEFAULT_TERM_SIZE})")
    laws.add_argument("--broken", action="store_true", help="add a deliberately unlawful fixture")
    laws.set_defaults(func=cmd_laws)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        _error(str(exc))
        return EXIT_USAGE
    except SExprError as exc:
        _error(f"parse error: {exc}")
        return EXIT_FAILURE
    except DecodeError as exc:
        _error(f"decode error: {exc}")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
