"""Carry solutions across the reduction, in both directions.

`lift` turns a verified Numberlink solution into a Wataridori solution of
the reduced instance: each source path becomes one long path between the
two matching center circles, accumulating exactly the required number of
region runs via zig-zags in the endpoint blocks, plus one two-cell path
per filler pair.  `unlift` inverts this for any verified solution of the
reduced instance by collapsing each center-to-center path to the sequence
of blocks it traverses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .errors import ValidationError
from .grid import Cell, Path
from .numberlink import (NumberlinkInstance, NumberlinkSolution,
                         normalize_solution, verify_solution)
from .reduction import NUMBER, ReductionMap, source_instance_from_map
from .wataridori import WataridoriSolution

EAST = "east"
NORTH = "north"
WEST = "west"
SOUTH = "south"

_ARMS = (EAST, NORTH, WEST, SOUTH)


@dataclass(frozen=True)
class ArmRoute:
    """Block-local path from the center circle to one arm's entry cell."""

    arm: str
    zigzags: int
    cells: Path


def zigzag_split(label: int, k: int) -> Tuple[int, int]:
    """Split the label's required label-1 zig-zags across the two endpoint
    blocks, loading the first block as heavily as possible."""
    if not 1 <= label <= 2 * k + 1:
        raise ValidationError("BAD_LABEL",
                              f"label {label} outside 1..{2 * k + 1}")
    za = min(label - 1, k)
    return za, label - 1 - za


def _rot_cell(cell: Cell, size: int) -> Cell:
    x, y = cell
    return (size - 1 - y, x)


def route_arm(k: int, arm: str, zigzags: int) -> ArmRoute:
    """Deterministic center-to-entry route with `zigzags` dips.

    The east template runs along the corridor row, dipping into the flank
    row at the lowest-index ladder columns; the other arms are its
    rotations.  Each dip adds two region runs, so the route crosses
    2k + 2*zigzags + 1 regions before the entry cell's corridor region.
    """
    if arm not in _ARMS:
        raise ValidationError("BAD_ARM", f"unknown arm {arm!r}")
    if not 0 <= zigzags <= k:
        raise ValidationError("BAD_ZIGZAG_COUNT",
                              f"zig-zag count {zigzags} outside 0..{k}")
    s = 4 * k + 5
    c = 2 * k + 2
    cells: List[Cell] = [(c, c), (c + 1, c)]
    x = c + 2
    for _ in range(zigzags):
        cells += [(x, c), (x, c - 1), (x + 1, c - 1), (x + 1, c)]
        x += 2
    while x <= s - 2:
        cells.append((x, c))
        x += 1
    cells.append((s - 1, c))
    for _ in range(_ARMS.index(arm)):
        cells = [_rot_cell(cell, s) for cell in cells]
    return ArmRoute(arm=arm, zigzags=zigzags, cells=tuple(cells))


def _direction(frm: Cell, to: Cell) -> str:
    dx, dy = to[0] - frm[0], to[1] - frm[1]
    if (dx, dy) == (1, 0):
        return EAST
    if (dx, dy) == (-1, 0):
        return WEST
    if (dx, dy) == (0, 1):
        return NORTH
    if (dx, dy) == (0, -1):
        return SOUTH
    raise ValidationError("BAD_PATH", f"{frm} and {to} are not adjacent")


def _arm_line(arm: str, s: int) -> List[Cell]:
    """Corridor cells from just outside the center to the border, inclusive."""
    c = (s - 5) // 2 + 2  # == 2k + 2
    if arm == EAST:
        return [(x, c) for x in range(c + 1, s)]
    if arm == WEST:
        return [(x, c) for x in range(c - 1, -1, -1)]
    if arm == NORTH:
        return [(c, y) for y in range(c + 1, s)]
    return [(c, y) for y in range(c - 1, -1, -1)]


def _corridor_route(s: int, enter_arm: str, exit_arm: str) -> List[Cell]:
    """Cross an empty block from one border cell to another via the center."""
    c = (s - 5) // 2 + 2
    entry = list(reversed(_arm_line(enter_arm, s)))
    exit_ = _arm_line(exit_arm, s)
    return entry + [(c, c)] + exit_


def _offset(cells: Sequence[Cell], ox: int, oy: int) -> List[Cell]:
    return [(x + ox, y + oy) for x, y in cells]


def lift(g: NumberlinkInstance, sol: NumberlinkSolution,
         rmap: ReductionMap) -> WataridoriSolution:
    """Map a verified source solution onto the reduced instance."""
    verdict = verify_solution(g, sol)
    if not verdict:
        raise ValidationError("LIFT_PRECONDITION",
                              f"source solution does not verify: {verdict}")
    k, s = rmap.k, rmap.block_size
    paths: List[Path] = []
    for label, gpath in sorted(sol.paths, key=lambda lp: lp[0]):
        za, zb = zigzag_split(label, k)
        first_arm = _direction(gpath[0], gpath[1])
        last_arm = _direction(gpath[-1], gpath[-2])
        cells: List[Cell] = []
        cells += _offset(route_arm(k, first_arm, za).cells,
                         s * gpath[0][0], s * gpath[0][1])
        for j in range(1, len(gpath) - 1):
            enter_arm = _direction(gpath[j], gpath[j - 1])
            exit_arm = _direction(gpath[j], gpath[j + 1])
            cells += _offset(_corridor_route(s, enter_arm, exit_arm),
                             s * gpath[j][0], s * gpath[j][1])
        cells += _offset(reversed(route_arm(k, last_arm, zb).cells),
                         s * gpath[-1][0], s * gpath[-1][1])
        paths.append(tuple(cells))
    for a, b in rmap.filler_pairs:
        paths.append((a, b))
    return WataridoriSolution(tuple(paths))


def unlift(sol: WataridoriSolution, rmap: ReductionMap) -> NumberlinkSolution:
    """Collapse a verified solution of the reduced instance back to the
    source grid.

    Center-to-center paths are identified by their endpoints; each one is
    compressed to its per-block sequence, which must visit every block in
    a single maximal run and start/end at the matching terminal blocks.
    The result is verified against the source instance before returning.
    """
    g = source_instance_from_map(rmap)
    s = rmap.block_size
    center_label: Dict[Cell, int] = {}
    for block in rmap.blocks:
        if block.kind == NUMBER:
            center_label[block.center] = block.label

    recovered: Dict[int, Path] = {}
    for path in sol.paths:
        a_label = center_label.get(path[0])
        b_label = center_label.get(path[-1])
        if a_label is None and b_label is None:
            continue  # filler path
        if a_label is None or b_label is None or a_label != b_label:
            raise ValidationError("UNLIFT_BAD_MAIN",
                                  "a main path must join the two centers "
                                  "of one label")
        label = a_label
        if label in recovered:
            raise ValidationError("UNLIFT_BAD_MAIN",
                                  f"two main paths for label {label}")
        blocks: List[Cell] = []
        for x, y in path:
            here = (x // s, y // s)
            if not blocks or blocks[-1] != here:
                blocks.append(here)
        if len(set(blocks)) != len(blocks):
            raise ValidationError("UNLIFT_BLOCK_REVISITED",
                                  f"main path for label {label} re-enters "
                                  f"a block")
        recovered[label] = tuple(blocks)

    expected = {label for label, _, _ in g.terminals}
    if set(recovered) != expected:
        missing = sorted(expected - set(recovered))
        raise ValidationError("UNLIFT_BAD_MAIN",
                              f"missing main paths for labels {missing}")
    result = normalize_solution(NumberlinkSolution(
        tuple((label, recovered[label]) for label in sorted(recovered))))
    verdict = verify_solution(g, result)
    if not verdict:
        raise ValidationError("UNLIFT_RESULT_INVALID",
                              f"recovered solution does not verify: "
                              f"{verdict}")
    return result
