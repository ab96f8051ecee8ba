"""Wataridori: model, region-run verifier, exact solver, serialization.

Paths pair up all circles.  A path's quality is measured in region runs:
its per-cell region ids with consecutive duplicates collapsed.  A path may
enter and exit a region at most once, and the run total must equal the
number on its endpoint circles (wildcard circles accept any total).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from . import documents as docs
from . import errors
from .errors import ParseError, ValidationError, Verdict, accept, reject
from .grid import (Cell, Path, RegionMap, is_simple_orthogonal_path,
                   region_map_from_rows, region_runs)

DEFAULT_BUDGET = 10_000_000

SOLVED = "solved"
UNSAT = "unsat"
BUDGET_EXCEEDED = "budget_exceeded"


class Circle(NamedTuple):
    x: int
    y: int
    number: Optional[int] = None  # None is a wildcard

    @property
    def cell(self) -> Cell:
        return (self.x, self.y)


@dataclass(frozen=True)
class WataridoriInstance:
    regions: RegionMap
    circles: Tuple[Circle, ...]

    @property
    def width(self) -> int:
        return self.regions.width

    @property
    def height(self) -> int:
        return self.regions.height


@dataclass(frozen=True)
class WataridoriSolution:
    paths: Tuple[Path, ...]


@dataclass(frozen=True)
class SolveResult:
    status: str
    solution: Optional[WataridoriSolution] = None
    nodes: int = 0


def validate_instance(inst: WataridoriInstance) -> WataridoriInstance:
    seen = set()
    for circle in inst.circles:
        if not inst.regions.in_bounds(circle.cell):
            raise ValidationError("OUT_OF_BOUNDS",
                                  f"circle at {circle.cell} outside grid")
        if circle.cell in seen:
            raise ValidationError("DUPLICATE_CIRCLE",
                                  f"two circles on cell {circle.cell}")
        seen.add(circle.cell)
        if circle.number is not None and circle.number < 1:
            raise ValidationError("BAD_NUMBER",
                                  f"circle number must be positive, got "
                                  f"{circle.number}")
    return inst


def verify_solution(inst: WataridoriInstance,
                    sol: WataridoriSolution) -> Verdict:
    """Accept iff the paths pair all circles and satisfy the run rules.

    Check order: path structure, endpoints-are-circles, every circle paired
    exactly once, cell-disjointness, no region re-entry, run counts.
    """
    rmap = inst.regions
    circle_at: Dict[Cell, Circle] = {c.cell: c for c in inst.circles}

    for idx, path in enumerate(sol.paths):
        if not is_simple_orthogonal_path(path, rmap.width, rmap.height):
            cell = path[0] if path else None
            return reject(errors.BAD_PATH, path_index=idx, cell=cell,
                          detail="not a simple orthogonal path")

    for idx, path in enumerate(sol.paths):
        for end in (path[0], path[-1]):
            if end not in circle_at:
                return reject(errors.ENDPOINT_NOT_CIRCLE, path_index=idx,
                              cell=end)

    degree: Dict[Cell, int] = {c.cell: 0 for c in inst.circles}
    for path in sol.paths:
        degree[path[0]] += 1
        degree[path[-1]] += 1
    for circle in inst.circles:
        if degree[circle.cell] != 1:
            return reject(errors.UNPAIRED_CIRCLE, cell=circle.cell,
                          detail=f"circle is an endpoint of "
                                 f"{degree[circle.cell]} paths")

    owner: Dict[Cell, int] = {}
    for idx, path in enumerate(sol.paths):
        for cell in path:
            if owner.setdefault(cell, idx) != idx:
                return reject(errors.CELL_SHARED, path_index=idx, cell=cell)

    for idx, path in enumerate(sol.paths):
        runs = region_runs(path, rmap)
        seen_rids = set()
        for pos, rid in enumerate(runs):
            if rid in seen_rids:
                return reject(errors.REGION_REENTERED, path_index=idx,
                              cell=_run_start(path, rmap, pos),
                              detail=f"region {rid} entered twice")
            seen_rids.add(rid)
        a = circle_at[path[0]]
        b = circle_at[path[-1]]
        r = len(runs)
        for circle in (a, b):
            if circle.number is not None and circle.number != r:
                return reject(errors.COUNT_MISMATCH, path_index=idx,
                              cell=circle.cell,
                              detail=f"path has {r} region runs, circle "
                                     f"wants {circle.number}")
        if a.number is not None and b.number is not None \
                and a.number != b.number:
            return reject(errors.COUNT_MISMATCH, path_index=idx, cell=a.cell,
                          detail="endpoint numbers differ")
    return accept()


def _run_start(path: Sequence[Cell], rmap: RegionMap, run_index: int) -> Cell:
    idx = -1
    last = None
    for cell in path:
        rid = rmap.id_at(cell)
        if rid != last:
            idx += 1
            last = rid
        if idx == run_index:
            return cell
    return path[-1]


class _OutOfBudget(Exception):
    pass


def solve(inst: WataridoriInstance,
          budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Complete deterministic search over pairings and routed paths.

    Circles are ordered by (y, x).  The lowest unpaired circle is paired
    with each compatible partner in order; each pair is routed immediately
    by DFS with fixed neighbor order before later pairs are chosen.  A
    partial path is cut when it re-enters a region or exceeds its target
    run count, both of which persist under any extension.  Designed for
    boards up to about 7x7 with up to about 16 circles.
    """
    inst = validate_instance(inst)
    rmap = inst.regions
    width, height = rmap.width, rmap.height
    circles = sorted(inst.circles, key=lambda c: (c.y, c.x))
    n = len(circles)
    if n % 2 == 1:
        return SolveResult(UNSAT, nodes=0)

    circle_cells = {c.cell for c in circles}
    occupied = [[False] * width for _ in range(height)]
    nodes = 0
    limit = budget
    paths: List[Tuple[Cell, ...]] = []
    paired = [False] * n

    def compatible(a: Circle, b: Circle) -> bool:
        return a.number is None or b.number is None or a.number == b.number

    def spend() -> None:
        nonlocal nodes
        nodes += 1
        if nodes > limit:
            raise _OutOfBudget

    def route_and_recurse(a: Circle, b: Circle) -> bool:
        target = a.number if a.number is not None else b.number
        goal = b.cell
        start = a.cell
        run_ids = [rmap.id_at(start)]
        run_set = {run_ids[0]}
        path = [start]
        occupied[start[1]][start[0]] = True

        def dfs() -> bool:
            x, y = path[-1]
            for nxt in ((x, y + 1), (x, y - 1), (x - 1, y), (x + 1, y)):
                nx, ny = nxt
                if not (0 <= nx < width and 0 <= ny < height):
                    continue
                spend()
                rid = rmap.ids[ny][nx]
                if nxt == goal:
                    if rid == run_ids[-1]:
                        total = len(run_ids)
                    elif rid in run_set:
                        continue
                    else:
                        total = len(run_ids) + 1
                    if target is not None and total != target:
                        continue
                    occupied[ny][nx] = True
                    path.append(nxt)
                    paths.append(tuple(path))
                    if pair_next():
                        return True
                    paths.pop()
                    path.pop()
                    occupied[ny][nx] = False
                    continue
                if occupied[ny][nx] or nxt in circle_cells:
                    continue
                new_run = rid != run_ids[-1]
                if new_run:
                    if rid in run_set:
                        continue
                    if target is not None and len(run_ids) + 1 > target:
                        continue
                    run_ids.append(rid)
                    run_set.add(rid)
                occupied[ny][nx] = True
                path.append(nxt)
                if dfs():
                    return True
                path.pop()
                occupied[ny][nx] = False
                if new_run:
                    run_ids.pop()
                    run_set.discard(rid)
            return False

        ok = dfs()
        if not ok:
            occupied[start[1]][start[0]] = False
        return ok

    def pair_next() -> bool:
        first = next((i for i in range(n) if not paired[i]), None)
        if first is None:
            return True
        paired[first] = True
        for j in range(first + 1, n):
            if paired[j] or not compatible(circles[first], circles[j]):
                continue
            spend()
            paired[j] = True
            if route_and_recurse(circles[first], circles[j]):
                return True
            paired[j] = False
        paired[first] = False
        return False

    try:
        found = pair_next()
    except _OutOfBudget:
        return SolveResult(BUDGET_EXCEEDED, nodes=nodes)
    if not found:
        return SolveResult(UNSAT, nodes=nodes)
    return SolveResult(SOLVED, solution=WataridoriSolution(tuple(paths)),
                       nodes=nodes)


# ------------------------------------------------------------- documents

def parse_instance(text: str) -> WataridoriInstance:
    doc = docs.require_object(docs.loads(text), "document")
    docs.check_fields(doc, ["puzzle", "width", "height", "regions",
                            "circles"], [], "document")
    if doc["puzzle"] != "wataridori":
        raise ParseError("WRONG_PUZZLE",
                         f"expected puzzle 'wataridori', got "
                         f"{doc['puzzle']!r}", "puzzle")
    width = docs.as_int(doc["width"], "width")
    height = docs.as_int(doc["height"], "height")
    rows = docs.as_list(doc["regions"], "regions")
    if len(rows) != height:
        raise ParseError("BAD_REGIONS", f"expected {height} region rows, "
                         f"got {len(rows)}", "regions")
    parsed_rows = []
    for i, row in enumerate(rows):
        row = docs.as_list(row, f"regions[{i}]")
        if len(row) != width:
            raise ParseError("BAD_REGIONS",
                             f"region row length {len(row)} != width {width}",
                             f"regions[{i}]")
        parsed_rows.append([docs.as_int(v, f"regions[{i}][{j}]")
                            for j, v in enumerate(row)])
    try:
        rmap = region_map_from_rows(parsed_rows)
    except ValidationError as exc:
        raise ParseError(exc.code, exc.message, "regions")
    circles = []
    for i, entry in enumerate(docs.as_list(doc["circles"], "circles")):
        loc = f"circles[{i}]"
        entry = docs.require_object(entry, loc)
        docs.check_fields(entry, ["x", "y"], ["number"], loc)
        number = None
        if "number" in entry:
            number = docs.as_int(entry["number"], loc + ".number")
        circles.append(Circle(docs.as_int(entry["x"], loc + ".x"),
                              docs.as_int(entry["y"], loc + ".y"), number))
    inst = WataridoriInstance(rmap, tuple(circles))
    try:
        return validate_instance(inst)
    except ValidationError as exc:
        raise ParseError(exc.code, exc.message, "circles")


def serialize_instance(inst: WataridoriInstance) -> str:
    circles = sorted(inst.circles, key=lambda c: (c.y, c.x))
    circle_docs = []
    for c in circles:
        entry = {"x": c.x, "y": c.y}
        if c.number is not None:
            entry["number"] = c.number
        circle_docs.append(entry)
    doc = {
        "puzzle": "wataridori",
        "width": inst.width,
        "height": inst.height,
        "regions": [list(row) for row in inst.regions.ids],
        "circles": circle_docs,
    }
    return docs.dumps_canonical(doc)


def parse_solution(text: str) -> WataridoriSolution:
    doc = docs.require_object(docs.loads(text), "document")
    docs.check_fields(doc, ["paths"], [], "document")
    paths = []
    for i, entry in enumerate(docs.as_list(doc["paths"], "paths")):
        loc = f"paths[{i}]"
        entry = docs.require_object(entry, loc)
        docs.check_fields(entry, ["cells"], [], loc)
        paths.append(tuple(docs.as_cells(entry["cells"], loc + ".cells")))
    return WataridoriSolution(tuple(paths))


def serialize_solution(sol: WataridoriSolution) -> str:
    doc = {
        "paths": [{"cells": [list(c) for c in path]} for path in sol.paths],
    }
    return docs.dumps_canonical(doc)
