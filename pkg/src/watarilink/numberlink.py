"""Numberlink: model, validator, verifier, exact solver, serialization.

The default rule set is the non-covering variant: paths connect each label's
two terminals, pairwise cell-disjoint, and uncovered cells are allowed.
Full coverage can be demanded at verification time with a flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from . import documents as docs
from . import errors
from .errors import ParseError, ValidationError, Verdict, accept, reject
from .grid import Cell, Path, is_simple_orthogonal_path

DEFAULT_BUDGET = 10_000_000

SOLVED = "solved"
UNSAT = "unsat"
BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class NumberlinkInstance:
    width: int
    height: int
    # (label, first cell, second cell); one entry per label
    terminals: Tuple[Tuple[int, Cell, Cell], ...]

    @property
    def pair_count(self) -> int:
        return len(self.terminals)


@dataclass(frozen=True)
class NumberlinkSolution:
    paths: Tuple[Tuple[int, Path], ...]


@dataclass(frozen=True)
class SolveResult:
    status: str
    solution: Optional[NumberlinkSolution] = None
    nodes: int = 0


def validate_instance(inst: NumberlinkInstance) -> NumberlinkInstance:
    """Check structure and return the normalized form of the instance.

    Labels are renumbered 1..p in first-appearance order and each pair's
    two cells are ordered by (y, x), so equal puzzles compare equal no
    matter how they were written down.
    """
    if inst.width < 1 or inst.height < 1:
        raise ValidationError("BAD_DIMENSIONS",
                              f"grid must be non-empty, got "
                              f"{inst.width}x{inst.height}")
    if not inst.terminals:
        raise ValidationError("NO_LABELS", "instance has no terminal pairs")
    seen_labels = set()
    seen_cells: Dict[Cell, int] = {}
    normalized = []
    for label, a, b in inst.terminals:
        if label in seen_labels:
            raise ValidationError("LABEL_MULTIPLICITY",
                                  f"label {label} appears more than twice")
        seen_labels.add(label)
        for cell in (a, b):
            x, y = cell
            if not (0 <= x < inst.width and 0 <= y < inst.height):
                raise ValidationError("OUT_OF_BOUNDS",
                                      f"terminal {cell} outside grid")
            if cell in seen_cells:
                raise ValidationError("DUPLICATE_TERMINAL",
                                      f"cell {cell} holds two terminals")
            seen_cells[cell] = label
        a, b = sorted((a, b), key=lambda c: (c[1], c[0]))
        normalized.append((len(normalized) + 1, a, b))
    return NumberlinkInstance(inst.width, inst.height, tuple(normalized))


def verify_solution(inst: NumberlinkInstance, sol: NumberlinkSolution,
                    require_full_coverage: bool = False) -> Verdict:
    """Accept iff the solution satisfies every rule; name the first violation.

    Checks run in a fixed order: label matching, path structure, endpoints,
    cell-disjointness, terminals not crossed, then (optionally) coverage.
    """
    terminals = {label: (a, b) for label, a, b in inst.terminals}
    all_terminal_cells = {c for _, a, b in inst.terminals for c in (a, b)}

    seen_labels = set()
    for idx, (label, _) in enumerate(sol.paths):
        if label not in terminals:
            return reject(errors.UNKNOWN_LABEL, path_index=idx,
                          detail=f"no terminal pair labeled {label}")
        if label in seen_labels:
            return reject(errors.DUPLICATE_PATH_LABEL, path_index=idx,
                          detail=f"two paths labeled {label}")
        seen_labels.add(label)
    for label, (a, _) in terminals.items():
        if label not in seen_labels:
            return reject(errors.MISSING_PATH, cell=a,
                          detail=f"no path for label {label}")

    for idx, (label, path) in enumerate(sol.paths):
        if not is_simple_orthogonal_path(path, inst.width, inst.height):
            cell = path[0] if path else None
            return reject(errors.BAD_PATH, path_index=idx, cell=cell,
                          detail="not a simple orthogonal path")
        a, b = terminals[label]
        if {path[0], path[-1]} != {a, b}:
            return reject(errors.ENDPOINT_MISMATCH, path_index=idx,
                          cell=path[0],
                          detail=f"endpoints do not match terminals of "
                                 f"label {label}")

    for idx, (_, path) in enumerate(sol.paths):
        for cell in path[1:-1]:
            if cell in all_terminal_cells:
                return reject(errors.TERMINAL_CROSSED, path_index=idx,
                              cell=cell)

    owner: Dict[Cell, int] = {}
    for idx, (_, path) in enumerate(sol.paths):
        for cell in path:
            if owner.setdefault(cell, idx) != idx:
                return reject(errors.CELL_SHARED, path_index=idx, cell=cell)

    if require_full_coverage:
        covered = set(owner)
        for y in range(inst.height - 1, -1, -1):
            for x in range(inst.width):
                if (x, y) not in covered:
                    return reject(errors.UNCOVERED_CELL, cell=(x, y))
    return accept()


class _Budget:
    __slots__ = ("limit", "nodes")

    def __init__(self, limit: int):
        self.limit = limit
        self.nodes = 0

    def spend(self) -> bool:
        self.nodes += 1
        return self.nodes > self.limit


class _OutOfBudget(Exception):
    pass


def solve(inst: NumberlinkInstance, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Complete deterministic backtracking search.

    Labels are routed in order 1..p; each path grows with fixed neighbor
    order (up, down, left, right).  A partial state is cut when any pending
    pair's endpoints are no longer connectable through free cells, which
    never discards a completable state.
    """
    inst = validate_instance(inst)
    width, height = inst.width, inst.height
    occ = [[0] * width for _ in range(height)]
    for label, a, b in inst.terminals:
        occ[a[1]][a[0]] = label
        occ[b[1]][b[0]] = label

    pairs = list(inst.terminals)
    bud = _Budget(budget)
    paths: List[List[Cell]] = []

    def reachable(src: Cell, dst: Cell) -> bool:
        if src == dst:
            return True
        seen = {src}
        stack = [src]
        while stack:
            x, y = stack.pop()
            for nxt in ((x, y + 1), (x, y - 1), (x - 1, y), (x + 1, y)):
                nx, ny = nxt
                if not (0 <= nx < width and 0 <= ny < height):
                    continue
                if nxt == dst:
                    return True
                if nxt in seen or occ[ny][nx] != 0:
                    continue
                seen.add(nxt)
                stack.append(nxt)
        return False

    def pending_ok(current_idx: int, head: Cell) -> bool:
        if not reachable(head, pairs[current_idx][2]):
            return False
        for label, a, b in pairs[current_idx + 1:]:
            if not reachable(a, b):
                return False
        return True

    def route(idx: int) -> bool:
        if idx == len(pairs):
            return True
        label, a, b = pairs[idx]
        path = [a]
        paths.append(path)
        ok = extend(idx, path, b)
        if not ok:
            paths.pop()
        return ok

    def extend(idx: int, path: List[Cell], goal: Cell) -> bool:
        head = path[-1]
        x, y = head
        for nxt in ((x, y + 1), (x, y - 1), (x - 1, y), (x + 1, y)):
            nx, ny = nxt
            if not (0 <= nx < width and 0 <= ny < height):
                continue
            if bud.spend():
                raise _OutOfBudget
            if nxt == goal:
                path.append(nxt)
                if route(idx + 1):
                    return True
                path.pop()
                continue
            if occ[ny][nx] != 0:
                continue
            occ[ny][nx] = pairs[idx][0]
            path.append(nxt)
            if pending_ok(idx, nxt) and extend(idx, path, goal):
                return True
            path.pop()
            occ[ny][nx] = 0
        return False

    try:
        found = route(0)
    except _OutOfBudget:
        return SolveResult(BUDGET_EXCEEDED, nodes=bud.nodes)
    if not found:
        return SolveResult(UNSAT, nodes=bud.nodes)
    sol = NumberlinkSolution(tuple(
        (label, tuple(path))
        for (label, _, _), path in zip(pairs, paths)))
    return SolveResult(SOLVED, solution=sol, nodes=bud.nodes)


def normalize_solution(sol: NumberlinkSolution) -> NumberlinkSolution:
    """Canonical direction and order: each path starts at its smaller (y, x)
    endpoint; paths sorted by label."""
    fixed = []
    for label, path in sol.paths:
        first, last = path[0], path[-1]
        if (last[1], last[0]) < (first[1], first[0]):
            path = tuple(reversed(path))
        fixed.append((label, path))
    fixed.sort(key=lambda lp: lp[0])
    return NumberlinkSolution(tuple(fixed))


# ------------------------------------------------------------- documents

def parse_instance(text: str) -> NumberlinkInstance:
    doc = docs.require_object(docs.loads(text), "document")
    docs.check_fields(doc, ["puzzle", "width", "height", "terminals"], [],
                      "document")
    if doc["puzzle"] != "numberlink":
        raise ParseError("WRONG_PUZZLE",
                         f"expected puzzle 'numberlink', got {doc['puzzle']!r}",
                         "puzzle")
    width = docs.as_int(doc["width"], "width")
    height = docs.as_int(doc["height"], "height")
    terminals = []
    for i, entry in enumerate(docs.as_list(doc["terminals"], "terminals")):
        loc = f"terminals[{i}]"
        entry = docs.require_object(entry, loc)
        docs.check_fields(entry, ["label", "cells"], [], loc)
        label = docs.as_int(entry["label"], loc + ".label")
        cells = docs.as_cells(entry["cells"], loc + ".cells")
        if len(cells) != 2:
            raise ParseError("BAD_TERMINAL",
                             "a terminal entry needs exactly two cells",
                             loc + ".cells")
        terminals.append((label, cells[0], cells[1]))
    return NumberlinkInstance(width, height, tuple(terminals))


def serialize_instance(inst: NumberlinkInstance) -> str:
    doc = {
        "puzzle": "numberlink",
        "width": inst.width,
        "height": inst.height,
        "terminals": [
            {"label": label, "cells": [list(a), list(b)]}
            for label, a, b in inst.terminals
        ],
    }
    return docs.dumps_canonical(doc)


def parse_solution(text: str) -> NumberlinkSolution:
    doc = docs.require_object(docs.loads(text), "document")
    docs.check_fields(doc, ["paths"], [], "document")
    paths = []
    for i, entry in enumerate(docs.as_list(doc["paths"], "paths")):
        loc = f"paths[{i}]"
        entry = docs.require_object(entry, loc)
        docs.check_fields(entry, ["label", "cells"], [], loc)
        label = docs.as_int(entry["label"], loc + ".label")
        cells = docs.as_cells(entry["cells"], loc + ".cells")
        paths.append((label, tuple(cells)))
    return NumberlinkSolution(tuple(paths))


def serialize_solution(sol: NumberlinkSolution) -> str:
    doc = {
        "paths": [
            {"label": label, "cells": [list(c) for c in path]}
            for label, path in sol.paths
        ],
    }
    return docs.dumps_canonical(doc)
