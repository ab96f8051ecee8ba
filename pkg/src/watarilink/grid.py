"""Grid geometry: cells, wall segments, region maps, and path predicates.

Coordinates are (x, y) with x growing rightward and y growing upward, so the
bottom-left cell of a grid is (0, 0).  All values are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, NamedTuple, Sequence, Set, Tuple

from .errors import ValidationError

Cell = Tuple[int, int]
Path = Tuple[Cell, ...]

HORIZONTAL = "h"
VERTICAL = "v"


class Wall(NamedTuple):
    """Unit wall segment on the grid-line lattice.

    A horizontal wall at (x, y) runs from lattice point (x, y) to (x+1, y)
    and separates cell (x, y-1) from (x, y).  A vertical wall at (x, y) runs
    from (x, y) to (x, y+1) and separates cell (x-1, y) from (x, y).
    """

    kind: str
    x: int
    y: int


def orthogonal_neighbors(cell: Cell, width: int, height: int) -> List[Cell]:
    """In-bounds neighbors of `cell` in fixed order: up, down, left, right."""
    x, y = cell
    if not (0 <= x < width and 0 <= y < height):
        raise ValidationError("OUT_OF_BOUNDS",
                              f"cell {cell} outside {width}x{height} grid")
    out = []
    for nx, ny in ((x, y + 1), (x, y - 1), (x - 1, y), (x + 1, y)):
        if 0 <= nx < width and 0 <= ny < height:
            out.append((nx, ny))
    return out


def is_simple_orthogonal_path(cells: Sequence[Cell], width: int,
                              height: int) -> bool:
    """True iff `cells` is an in-bounds simple path of unit orthogonal steps."""
    if len(cells) < 2:
        return False
    seen = set()
    prev = None
    for cell in cells:
        x, y = cell
        if not (0 <= x < width and 0 <= y < height):
            return False
        if cell in seen:
            return False
        seen.add(cell)
        if prev is not None and abs(x - prev[0]) + abs(y - prev[1]) != 1:
            return False
        prev = cell
    return True


def paths_pairwise_disjoint(paths: Sequence[Sequence[Cell]]) -> bool:
    """True iff no cell occurs in two distinct paths."""
    owner = {}
    for idx, path in enumerate(paths):
        for cell in path:
            if owner.setdefault(cell, idx) != idx:
                return False
    return True


@dataclass(frozen=True)
class RegionMap:
    """Partition of a grid into orthogonally connected regions.

    ids[y][x] is the region of cell (x, y).  Ids are dense (0..count-1) and
    canonical: assigned in scan order, top row first, of each region's
    first-seen cell.
    """

    width: int
    height: int
    ids: Tuple[Tuple[int, ...], ...]
    region_count: int

    def id_at(self, cell: Cell) -> int:
        x, y = cell
        return self.ids[y][x]

    def in_bounds(self, cell: Cell) -> bool:
        x, y = cell
        return 0 <= x < self.width and 0 <= y < self.height


def _check_wall(wall: Wall, width: int, height: int) -> None:
    kind, x, y = wall
    if kind == HORIZONTAL:
        if 0 <= x < width and 0 <= y <= height:
            return
    elif kind == VERTICAL:
        if 0 <= x <= width and 0 <= y < height:
            return
    else:
        raise ValidationError("BAD_WALL", f"unknown wall kind {kind!r}")
    raise ValidationError("BAD_WALL",
                          f"wall {wall} off the {width}x{height} lattice")


def regions_from_walls(walls: Iterable[Wall], width: int,
                       height: int) -> RegionMap:
    """Flood-fill the grid into regions separated by `walls`.

    The outer boundary is implicitly walled.  Two orthogonally adjacent
    cells share a region iff no wall separates them.
    """
    if width < 1 or height < 1:
        raise ValidationError("BAD_DIMENSIONS",
                              f"grid must be non-empty, got {width}x{height}")
    hset: Set[Tuple[int, int]] = set()
    vset: Set[Tuple[int, int]] = set()
    for wall in walls:
        _check_wall(wall, width, height)
        if wall.kind == HORIZONTAL:
            hset.add((wall.x, wall.y))
        else:
            vset.add((wall.x, wall.y))

    ids = [[-1] * width for _ in range(height)]
    count = 0
    # Scan top row first so first-seen order matches the canonical id rule.
    for sy in range(height - 1, -1, -1):
        for sx in range(width):
            if ids[sy][sx] != -1:
                continue
            stack = [(sx, sy)]
            ids[sy][sx] = count
            while stack:
                x, y = stack.pop()
                if y + 1 < height and ids[y + 1][x] == -1 \
                        and (x, y + 1) not in hset:
                    ids[y + 1][x] = count
                    stack.append((x, y + 1))
                if y > 0 and ids[y - 1][x] == -1 and (x, y) not in hset:
                    ids[y - 1][x] = count
                    stack.append((x, y - 1))
                if x > 0 and ids[y][x - 1] == -1 and (x, y) not in vset:
                    ids[y][x - 1] = count
                    stack.append((x - 1, y))
                if x + 1 < width and ids[y][x + 1] == -1 \
                        and (x + 1, y) not in vset:
                    ids[y][x + 1] = count
                    stack.append((x + 1, y))
            count += 1
    return RegionMap(width=width, height=height,
                     ids=tuple(tuple(row) for row in ids),
                     region_count=count)


def region_map_from_rows(rows: Sequence[Sequence[int]]) -> RegionMap:
    """Build a RegionMap from per-cell ids (bottom row first).

    Input ids must be dense and every region orthogonally connected; they are
    relabeled into canonical scan order.
    """
    height = len(rows)
    if height < 1 or any(len(r) < 1 for r in rows):
        raise ValidationError("BAD_DIMENSIONS", "empty region rows")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValidationError("RAGGED_ROWS",
                              "region rows have differing lengths")
    labels = {v for row in rows for v in row}
    if labels != set(range(len(labels))):
        raise ValidationError("IDS_NOT_DENSE",
                              f"region ids must be 0..{len(labels) - 1}")
    # Connectivity: flood the walls implied by id boundaries and compare.
    walls = walls_between_regions(rows)
    rebuilt = regions_from_walls(walls, width, height)
    if rebuilt.region_count != len(labels):
        raise ValidationError("REGION_NOT_CONNECTED",
                              "some region id labels a disconnected set")
    return rebuilt


def walls_between_regions(rows: Sequence[Sequence[int]]) -> List[Wall]:
    """Wall segments separating cells with different region ids."""
    height = len(rows)
    width = len(rows[0])
    walls = []
    for y in range(height):
        for x in range(width):
            if x + 1 < width and rows[y][x] != rows[y][x + 1]:
                walls.append(Wall(VERTICAL, x + 1, y))
            if y + 1 < height and rows[y][x] != rows[y + 1][x]:
                walls.append(Wall(HORIZONTAL, x, y + 1))
    return walls


def region_runs(path: Sequence[Cell], rmap: RegionMap) -> List[int]:
    """Per-cell region ids along `path` with consecutive duplicates collapsed."""
    runs: List[int] = []
    for cell in path:
        if not rmap.in_bounds(cell):
            raise ValidationError("OUT_OF_BOUNDS",
                                  f"path cell {cell} outside region map")
        rid = rmap.id_at(cell)
        if not runs or runs[-1] != rid:
            runs.append(rid)
    return runs
