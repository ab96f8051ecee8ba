"""Two grid path-pairing puzzles and the polynomial translation between them.

The package models Numberlink (pair up equal labels with disjoint paths)
and Wataridori (pair up circles with disjoint paths whose region-run
counts match the circled numbers), provides exact solvers and verifiers
for both, and implements a size-polynomial translation of any Numberlink
instance into an equivalent Wataridori instance together with solution
lifting in both directions.
"""

from .errors import ParseError, PuzzleError, ValidationError, Verdict
from .grid import (Cell, Path, RegionMap, Wall, is_simple_orthogonal_path,
                   orthogonal_neighbors, paths_pairwise_disjoint,
                   region_runs, regions_from_walls)
from .lifting import ArmRoute, lift, route_arm, unlift, zigzag_split
from .numberlink import NumberlinkInstance, NumberlinkSolution
from .reduction import (BlockTemplate, ReductionMap, build_empty_block,
                        build_number_block, choose_k, reduce_instance)
from .wataridori import Circle, WataridoriInstance, WataridoriSolution

__version__ = "0.1.0"

__all__ = [
    "ArmRoute", "BlockTemplate", "Cell", "Circle", "NumberlinkInstance",
    "NumberlinkSolution", "ParseError", "Path", "PuzzleError", "ReductionMap",
    "RegionMap", "ValidationError", "Verdict", "Wall", "WataridoriInstance",
    "WataridoriSolution", "build_empty_block", "build_number_block",
    "choose_k", "is_simple_orthogonal_path", "lift", "orthogonal_neighbors",
    "paths_pairwise_disjoint", "reduce_instance", "region_runs",
    "regions_from_walls", "route_arm", "unlift", "zigzag_split",
]
