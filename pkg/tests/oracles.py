"""Brute-force reference implementations used to cross-check the library.

Everything here is deliberately naive: per-cell BFS for region partitions
and exhaustive enumeration of path systems for solvability.  The verifiers
remain the single arbiter of the rules; the enumerators only generate
candidates.
"""

from collections import deque

from watarilink import numberlink as nl
from watarilink import wataridori as wd
from watarilink.grid import HORIZONTAL, VERTICAL


def wall_blocks(walls, a, b):
    (x1, y1), (x2, y2) = a, b
    if x1 == x2:
        return (HORIZONTAL, x1, max(y1, y2)) in walls
    return (VERTICAL, max(x1, x2), y1) in walls


def region_partition_by_reachability(walls, width, height):
    """Partition the grid by per-cell BFS reachability around the walls."""
    walls = set(walls)
    groups = []
    seen = set()
    for sy in range(height):
        for sx in range(width):
            if (sx, sy) in seen:
                continue
            comp = {(sx, sy)}
            queue = deque([(sx, sy)])
            while queue:
                x, y = queue.popleft()
                for nxt in ((x, y + 1), (x, y - 1), (x - 1, y), (x + 1, y)):
                    nx, ny = nxt
                    if not (0 <= nx < width and 0 <= ny < height):
                        continue
                    if nxt in comp or wall_blocks(walls, (x, y), nxt):
                        continue
                    comp.add(nxt)
                    queue.append(nxt)
            seen |= comp
            groups.append(frozenset(comp))
    return frozenset(groups)


def partition_of_region_map(rmap):
    groups = {}
    for y in range(rmap.height):
        for x in range(rmap.width):
            groups.setdefault(rmap.ids[y][x], set()).add((x, y))
    return frozenset(frozenset(g) for g in groups.values())


def _all_simple_paths(start, goal, width, height, forbidden):
    """Every simple orthogonal path from start to goal avoiding cells in
    `forbidden` (endpoints excepted)."""
    out = []
    path = [start]
    on_path = {start}

    def walk():
        x, y = path[-1]
        for nxt in ((x, y + 1), (x, y - 1), (x - 1, y), (x + 1, y)):
            nx, ny = nxt
            if not (0 <= nx < width and 0 <= ny < height):
                continue
            if nxt == goal:
                out.append(tuple(path) + (goal,))
                continue
            if nxt in on_path or nxt in forbidden:
                continue
            on_path.add(nxt)
            path.append(nxt)
            walk()
            path.pop()
            on_path.discard(nxt)

    walk()
    return out


def numberlink_brute_solvable(inst):
    """Try every combination of simple paths, judged by the verifier."""
    inst = nl.validate_instance(inst)
    terminal_cells = {c for _, a, b in inst.terminals for c in (a, b)}

    def place(idx, used):
        if idx == len(inst.terminals):
            return []
        label, a, b = inst.terminals[idx]
        forbidden = (terminal_cells - {a, b}) | used
        for path in _all_simple_paths(a, b, inst.width, inst.height,
                                      forbidden):
            cells = set(path)
            if cells & used:
                continue
            rest = place(idx + 1, used | cells)
            if rest is not None:
                return [(label, path)] + rest
        return None

    paths = place(0, set())
    if paths is None:
        return False
    sol = nl.NumberlinkSolution(tuple(paths))
    assert nl.verify_solution(inst, sol), "oracle produced a bad candidate"
    return True


def wataridori_brute_solvable(inst, return_solution=False):
    """Enumerate every pairing and every disjoint path system; accept the
    first candidate the verifier accepts."""
    inst = wd.validate_instance(inst)
    circles = sorted(inst.circles, key=lambda c: (c.y, c.x))
    if len(circles) % 2 == 1:
        return (False, None) if return_solution else False
    width, height = inst.width, inst.height
    circle_cells = {c.cell for c in circles}

    def pairings(items):
        if not items:
            yield []
            return
        first = items[0]
        for j in range(1, len(items)):
            rest = items[1:j] + items[j + 1:]
            for tail in pairings(rest):
                yield [(first, items[j])] + tail

    def place(pairs, idx, used, acc):
        if idx == len(pairs):
            sol = wd.WataridoriSolution(tuple(acc))
            if wd.verify_solution(inst, sol):
                return sol
            return None
        a, b = pairs[idx]
        forbidden = (circle_cells - {a.cell, b.cell}) | used
        for path in _all_simple_paths(a.cell, b.cell, width, height,
                                      forbidden):
            cells = set(path)
            if cells & used:
                continue
            found = place(pairs, idx + 1, used | cells, acc + [path])
            if found is not None:
                return found
        return None

    for pairing in pairings(circles):
        found = place(pairing, 0, set(), [])
        if found is not None:
            return (True, found) if return_solution else True
    return (False, None) if return_solution else False
