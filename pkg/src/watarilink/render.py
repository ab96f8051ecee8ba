"""Deterministic ASCII and SVG renderings of puzzles and solutions.

Both renderers flip the y axis for display: the top row of the board is
printed first, while all document coordinates stay y-up.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Set, Tuple

from .grid import Cell, HORIZONTAL, VERTICAL, Wall, walls_between_regions
from .numberlink import NumberlinkInstance, NumberlinkSolution
from .wataridori import WataridoriInstance, WataridoriSolution

_SVG_UNIT = 40


def _wall_sets(walls: Sequence[Wall], width: int,
               height: int) -> Tuple[Set[Tuple[int, int]],
                                     Set[Tuple[int, int]]]:
    hset = {(w.x, w.y) for w in walls if w.kind == HORIZONTAL}
    vset = {(w.x, w.y) for w in walls if w.kind == VERTICAL}
    for x in range(width):
        hset.add((x, 0))
        hset.add((x, height))
    for y in range(height):
        vset.add((0, y))
        vset.add((width, y))
    return hset, vset


def _ascii_board(width: int, height: int, hset: Set[Tuple[int, int]],
                 vset: Set[Tuple[int, int]],
                 content: Dict[Cell, str], cell_w: int) -> str:
    lines = []
    for y in range(height, -1, -1):
        top = []
        for x in range(width):
            top.append("+")
            top.append(("-" * cell_w) if (x, y) in hset else (" " * cell_w))
        top.append("+")
        lines.append("".join(top))
        if y == 0:
            break
        row = []
        cy = y - 1
        for x in range(width):
            row.append("|" if (x, cy) in vset else " ")
            row.append(content.get((x, cy), "").center(cell_w))
        row.append("|" if (width, cy) in vset else " ")
        lines.append("".join(row).rstrip())
    return "\n".join(lines) + "\n"


def render_wataridori_ascii(inst: WataridoriInstance,
                            sol: Optional[WataridoriSolution] = None) -> str:
    rmap = inst.regions
    walls = walls_between_regions(rmap.ids)
    hset, vset = _wall_sets(walls, rmap.width, rmap.height)
    content: Dict[Cell, str] = {}
    if sol is not None:
        for path in sol.paths:
            for cell in path:
                content[cell] = "*"
    numbers = [c.number for c in inst.circles if c.number is not None]
    cell_w = max(3, (max(map(len, map(str, numbers))) if numbers else 1) + 2)
    for c in sorted(inst.circles, key=lambda c: (c.y, c.x)):
        content[c.cell] = f"({c.number})" if c.number is not None else "( )"
    return _ascii_board(rmap.width, rmap.height, hset, vset, content, cell_w)


def render_numberlink_ascii(inst: NumberlinkInstance,
                            sol: Optional[NumberlinkSolution] = None) -> str:
    hset = {(x, y) for x in range(inst.width)
            for y in range(inst.height + 1)}
    vset = {(x, y) for x in range(inst.width + 1)
            for y in range(inst.height)}
    content: Dict[Cell, str] = {}
    if sol is not None:
        for _, path in sol.paths:
            for cell in path:
                content[cell] = "*"
    for label, a, b in inst.terminals:
        content[a] = str(label)
        content[b] = str(label)
    cell_w = max(3, max(len(str(label)) for label, _, _ in inst.terminals) + 2)
    return _ascii_board(inst.width, inst.height, hset, vset, content, cell_w)


def _svg_open(width: int, height: int) -> List[str]:
    u = _SVG_UNIT
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="0 0 {width * u} {height * u}" '
        f'width="{width * u}" height="{height * u}">',
        f'<rect x="0" y="0" width="{width * u}" height="{height * u}" '
        f'fill="white"/>',
    ]


def _svg_grid(width: int, height: int) -> List[str]:
    u = _SVG_UNIT
    parts = []
    for x in range(width + 1):
        parts.append(f'<line x1="{x * u}" y1="0" x2="{x * u}" '
                     f'y2="{height * u}" stroke="#cccccc" stroke-width="1"/>')
    for y in range(height + 1):
        parts.append(f'<line x1="0" y1="{y * u}" x2="{width * u}" '
                     f'y2="{y * u}" stroke="#cccccc" stroke-width="1"/>')
    return parts


def _svg_walls(walls: Sequence[Wall], height: int) -> List[str]:
    u = _SVG_UNIT
    parts = []
    for wall in sorted(set(walls)):
        if wall.kind == HORIZONTAL:
            x1, y1 = wall.x * u, (height - wall.y) * u
            x2, y2 = (wall.x + 1) * u, (height - wall.y) * u
        else:
            x1, y1 = wall.x * u, (height - wall.y) * u
            x2, y2 = wall.x * u, (height - wall.y - 1) * u
        parts.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                     f'stroke="black" stroke-width="4"/>')
    return parts


def _svg_paths(paths: Sequence[Sequence[Cell]], height: int) -> List[str]:
    u = _SVG_UNIT
    parts = []
    for path in paths:
        points = " ".join(
            f"{x * u + u // 2},{(height - y) * u - u // 2}" for x, y in path)
        parts.append(f'<polyline points="{points}" fill="none" '
                     f'stroke="red" stroke-width="4"/>')
    return parts


def _svg_circle(x: int, y: int, height: int, text: str) -> List[str]:
    u = _SVG_UNIT
    cx, cy = x * u + u // 2, (height - y) * u - u // 2
    parts = [f'<circle cx="{cx}" cy="{cy}" r="{u * 3 // 8}" fill="white" '
             f'stroke="black" stroke-width="2"/>']
    if text:
        parts.append(f'<text x="{cx}" y="{cy}" font-size="{u // 2}" '
                     f'text-anchor="middle" dominant-baseline="central">'
                     f'{text}</text>')
    return parts


def render_wataridori_svg(inst: WataridoriInstance,
                          sol: Optional[WataridoriSolution] = None) -> str:
    rmap = inst.regions
    w, h = rmap.width, rmap.height
    parts = _svg_open(w, h)
    parts += _svg_grid(w, h)
    boundary = [Wall(HORIZONTAL, x, y) for x in range(w) for y in (0, h)]
    boundary += [Wall(VERTICAL, x, y) for x in (0, w) for y in range(h)]
    parts += _svg_walls(list(walls_between_regions(rmap.ids)) + boundary, h)
    if sol is not None:
        parts += _svg_paths(sol.paths, h)
    for c in sorted(inst.circles, key=lambda c: (c.y, c.x)):
        parts += _svg_circle(c.x, c.y, h,
                             "" if c.number is None else str(c.number))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_numberlink_svg(inst: NumberlinkInstance,
                          sol: Optional[NumberlinkSolution] = None) -> str:
    w, h = inst.width, inst.height
    parts = _svg_open(w, h)
    parts += _svg_grid(w, h)
    boundary = [Wall(HORIZONTAL, x, y) for x in range(w) for y in (0, h)]
    boundary += [Wall(VERTICAL, x, y) for x in (0, w) for y in range(h)]
    parts += _svg_walls(boundary, h)
    if sol is not None:
        parts += _svg_paths([path for _, path in sol.paths], h)
    u = _SVG_UNIT
    for label, a, b in inst.terminals:
        for x, y in (a, b):
            cx, cy = x * u + u // 2, (h - y) * u - u // 2
            parts.append(f'<text x="{cx}" y="{cy}" font-size="{u // 2}" '
                         f'text-anchor="middle" '
                         f'dominant-baseline="central">{label}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
