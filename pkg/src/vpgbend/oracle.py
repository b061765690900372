"""Bounded-grid backtracking search for small representations.

The search assigns grid paths vertex by vertex (highest degree first), prunes
as soon as a placed pair contradicts the target graph, and re-verifies any
complete assignment with the real checkers before returning it.  A `None`
result means "not found within budget" and never implies non-realizability.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional

from .errors import ParameterError
from .geometry import Point, RectPath, Segment, segment_intersection
from .graphs import Graph
from .representation import VpgRepresentation, is_proper, path_intersections, verify_realizes


class _BudgetExhausted(Exception):
    pass


@dataclass(frozen=True)
class GridSearchBudget:
    grid_width: int
    grid_height: int
    max_bends: int
    node_limit: int

    def __post_init__(self):
        if self.grid_width < 1 or self.grid_height < 1 or self.node_limit < 1:
            raise ParameterError("grid dimensions and node limit must be positive")
        if self.max_bends < 0:
            raise ParameterError("max_bends must be nonnegative")


def _grid_paths(budget: GridSearchBudget) -> Iterator[RectPath]:
    """All simple rectilinear paths with corners on the grid, each geometric
    path exactly once (canonical corner order), in a fixed enumeration order."""
    w, h, max_segments = budget.grid_width, budget.grid_height, budget.max_bends + 1

    def extend(corners: List[Point], segs: List[Segment], horizontal_next: bool):
        last = corners[-1]
        rng = range(w) if horizontal_next else range(h)
        for c in rng:
            nxt = Point(c, last.y) if horizontal_next else Point(last.x, c)
            if nxt == last:
                continue
            new_seg = Segment(last, nxt)
            ok = True
            for old in segs[:-1]:
                pt, ov = segment_intersection(new_seg, old)
                if pt is not None or ov is not None:
                    ok = False
                    break
            if not ok:
                continue
            corners.append(nxt)
            segs.append(new_seg)
            if corners[0] <= corners[-1]:
                yield RectPath(list(corners))
            if len(segs) < max_segments:
                yield from extend(corners, segs, not horizontal_next)
            corners.pop()
            segs.pop()

    for y in range(h):
        for x in range(w):
            start = Point(x, y)
            for horizontal_first in (True, False):
                yield from extend([start], [], horizontal_first)


def search_representation(
    g: Graph, budget: GridSearchBudget, require_proper: bool = False
) -> Optional[VpgRepresentation]:
    """A verified representation of `g` within the budget, else None."""
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), g.index(v)))
    placed: Dict = {}
    nodes = 0

    def place(idx: int) -> Optional[VpgRepresentation]:
        nonlocal nodes
        if idx == len(order):
            assignment = {v: placed[v] for v in g.vertices}
            rep = VpgRepresentation(assignment)
            if verify_realizes(rep, g).ok and (not require_proper or is_proper(rep).ok):
                return rep
            return None
        v = order[idx]
        for path in _grid_paths(budget):
            nodes += 1
            if nodes > budget.node_limit:
                raise _BudgetExhausted
            ok = True
            for u, pu in placed.items():
                inter = path_intersections(path, pu)
                if bool(inter) != g.has_edge(u, v):
                    ok = False
                    break
                if require_proper and inter.overlaps:
                    ok = False
                    break
            if not ok:
                continue
            placed[v] = path
            result = place(idx + 1)
            if result is not None:
                return result
            del placed[v]
        return None

    try:
        return place(0)
    except _BudgetExhausted:
        return None
