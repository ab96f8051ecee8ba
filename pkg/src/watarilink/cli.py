"""Command-line front end: solve, verify, reduce, lift, unlift, render.

Exit codes: 0 success, 1 usage or parse failure, 2 negative result
(unsolvable instance or rejected solution), 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path as FilePath
from typing import Optional

from . import lifting, numberlink, reduction, render, wataridori
from .errors import PuzzleError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NEGATIVE = 2
EXIT_BUDGET = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _read(path: str) -> str:
    try:
        return FilePath(path).read_text()
    except OSError as exc:
        raise PuzzleError("IO_ERROR", f"cannot read {path}: {exc}")


def _write(path: Optional[str], text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        FilePath(path).write_text(text)
    except OSError as exc:
        raise PuzzleError("IO_ERROR", f"cannot write {path}: {exc}")


def _puzzle_kind(text: str) -> str:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PuzzleError("MALFORMED_JSON", f"not valid JSON: {exc.msg}")
    if not isinstance(doc, dict) or "puzzle" not in doc:
        raise PuzzleError("MISSING_FIELD", "document has no 'puzzle' field")
    kind = doc["puzzle"]
    if kind not in ("numberlink", "wataridori"):
        raise PuzzleError("WRONG_PUZZLE", f"unknown puzzle kind {kind!r}")
    return kind


def cmd_solve(args) -> int:
    text = _read(args.puzzle)
    kind = _puzzle_kind(text)
    if kind == "numberlink":
        inst = numberlink.parse_instance(text)
        result = numberlink.solve(numberlink.validate_instance(inst),
                                  budget=args.budget)
        serialize = numberlink.serialize_solution
    else:
        inst = wataridori.parse_instance(text)
        result = wataridori.solve(inst, budget=args.budget)
        serialize = wataridori.serialize_solution
    if result.status == "budget_exceeded":
        print(f"BUDGET_EXCEEDED after {result.nodes} nodes", file=sys.stderr)
        return EXIT_BUDGET
    if result.status == "unsat":
        print("UNSAT", file=sys.stderr)
        return EXIT_NEGATIVE
    _write(args.output, serialize(result.solution))
    return EXIT_OK


def cmd_verify(args) -> int:
    text = _read(args.puzzle)
    kind = _puzzle_kind(text)
    sol_text = _read(args.solution)
    if kind == "numberlink":
        inst = numberlink.validate_instance(numberlink.parse_instance(text))
        sol = numberlink.parse_solution(sol_text)
        verdict = numberlink.verify_solution(
            inst, sol, require_full_coverage=args.require_coverage)
    else:
        inst = wataridori.parse_instance(text)
        sol = wataridori.parse_solution(sol_text)
        verdict = wataridori.verify_solution(inst, sol)
    print(str(verdict))
    return EXIT_OK if verdict else EXIT_NEGATIVE


def cmd_reduce(args) -> int:
    g = numberlink.parse_instance(_read(args.input))
    h, rmap = reduction.reduce_instance(g)
    _write(args.output, wataridori.serialize_instance(h))
    _write(args.map, reduction.serialize_map(rmap))
    return EXIT_OK


def cmd_lift(args) -> int:
    g = numberlink.validate_instance(
        numberlink.parse_instance(_read(args.source)))
    sol = numberlink.parse_solution(_read(args.solution))
    rmap = reduction.parse_map(_read(args.map))
    h_sol = lifting.lift(g, sol, rmap)
    _write(args.output, wataridori.serialize_solution(h_sol))
    return EXIT_OK


def cmd_unlift(args) -> int:
    h_sol = wataridori.parse_solution(_read(args.solution))
    rmap = reduction.parse_map(_read(args.map))
    _, h = reduction.reconstruct(rmap)
    verdict = wataridori.verify_solution(h, h_sol)
    if not verdict:
        print(str(verdict))
        return EXIT_NEGATIVE
    g_sol = lifting.unlift(h_sol, rmap)
    _write(args.output, numberlink.serialize_solution(g_sol))
    return EXIT_OK


def cmd_render(args) -> int:
    text = _read(args.puzzle)
    kind = _puzzle_kind(text)
    sol_text = _read(args.solution) if args.solution else None
    if kind == "numberlink":
        inst = numberlink.parse_instance(text)
        sol = (numberlink.parse_solution(sol_text)
               if sol_text is not None else None)
        out = (render.render_numberlink_ascii(inst, sol)
               if args.format == "ascii"
               else render.render_numberlink_svg(inst, sol))
    else:
        inst = wataridori.parse_instance(text)
        sol = (wataridori.parse_solution(sol_text)
               if sol_text is not None else None)
        out = (render.render_wataridori_ascii(inst, sol)
               if args.format == "ascii"
               else render.render_wataridori_svg(inst, sol))
    _write(args.output, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="watarilink",
                     description="solve, verify, and translate grid "
                                 "path-pairing puzzles")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve a puzzle file")
    p.add_argument("puzzle")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--budget", type=int, default=numberlink.DEFAULT_BUDGET,
                   help="search node limit")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="verify a solution file")
    p.add_argument("puzzle")
    p.add_argument("solution")
    p.add_argument("--require-coverage", action="store_true",
                   help="demand every cell be covered (numberlink only)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce",
                       help="translate a numberlink instance into an "
                            "equivalent wataridori instance")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--map", required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("lift", help="carry a source solution onto the "
                                    "reduced instance")
    p.add_argument("-g", "--source", required=True)
    p.add_argument("-s", "--solution", required=True)
    p.add_argument("--map", required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("unlift", help="recover a source solution from a "
                                      "reduced-instance solution")
    p.add_argument("-s", "--solution", required=True)
    p.add_argument("--map", required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_unlift)

    p = sub.add_parser("render", help="render a puzzle (and solution)")
    p.add_argument("puzzle")
    p.add_argument("solution", nargs="?", default=None)
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PuzzleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
