"""VPG representations: realization, properness, bend stats, path trimming."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple

from .errors import DegenerateTrimError, DomainError, ValidationError
from .geometry import (
    Point,
    RectPath,
    bend_count,
    path_intersections,
    rational,
    transversal_at,
)
from .graphs import Graph, Label, label_str


class VpgRepresentation:
    """Finite map from vertex labels to rectilinear paths."""

    __slots__ = ("assignment",)

    def __init__(self, assignment: Dict[Label, RectPath]):
        for label, path in assignment.items():
            if not isinstance(path, RectPath):
                raise ValidationError(f"vertex {label!r} is not assigned a RectPath")
        self.assignment = dict(assignment)

    def labels(self) -> Tuple[Label, ...]:
        return tuple(self.assignment)

    def path(self, label: Label) -> RectPath:
        return self.assignment[label]

    def __len__(self):
        return len(self.assignment)

    def restricted(self, labels: Iterable[Label]) -> "VpgRepresentation":
        keep = set(labels)
        return VpgRepresentation({l: p for l, p in self.assignment.items() if l in keep})

    def __eq__(self, other):
        return (
            isinstance(other, VpgRepresentation) and self.assignment == other.assignment
        )


def _bbox(path: RectPath):
    xs = [c.x for c in path.corners]
    ys = [c.y for c in path.corners]
    return min(xs), min(ys), max(xs), max(ys)


def _bbox_disjoint(b1, b2) -> bool:
    return b1[2] < b2[0] or b2[2] < b1[0] or b1[3] < b2[1] or b2[3] < b1[1]


def _pairwise_intersections(rep: VpgRepresentation):
    """Yield (u, v, PathIntersections) for label pairs with nonempty bbox overlap."""
    labels = rep.labels()
    boxes = {l: _bbox(rep.path(l)) for l in labels}
    for i, u in enumerate(labels):
        for v in labels[i + 1 :]:
            if _bbox_disjoint(boxes[u], boxes[v]):
                continue
            inter = path_intersections(rep.path(u), rep.path(v))
            if inter:
                yield u, v, inter


def intersection_graph(rep: VpgRepresentation) -> Graph:
    """Graph on the representation's labels; edge iff the paths intersect."""
    g = Graph(rep.labels())
    for u, v, _ in _pairwise_intersections(rep):
        g.add_edge(u, v)
    return g


@dataclass(frozen=True)
class RealizationReport:
    ok: bool
    missing_edges: Tuple[Tuple[str, str], ...]
    spurious_edges: Tuple[Tuple[str, str], ...]

    def __bool__(self):
        return self.ok

    def lines(self) -> List[str]:
        out = []
        for u, v in self.missing_edges:
            out.append(f"missing edge: {u} {v}")
        for u, v in self.spurious_edges:
            out.append(f"spurious edge: {u} {v}")
        return out


def verify_realizes(rep: VpgRepresentation, g: Graph) -> RealizationReport:
    """Check intersection_graph(rep) == g, reporting each mismatched edge."""
    if set(rep.labels()) != set(g.vertices):
        raise DomainError("representation and graph have different vertex label sets")
    derived = intersection_graph(rep)
    missing = sorted(
        tuple(sorted((label_str(u), label_str(v))))
        for u, v in g.edges()
        if not derived.has_edge(u, v)
    )
    spurious = sorted(
        tuple(sorted((label_str(u), label_str(v))))
        for u, v in derived.edges()
        if not g.has_edge(u, v)
    )
    return RealizationReport(
        ok=not missing and not spurious,
        missing_edges=tuple(missing),
        spurious_edges=tuple(spurious),
    )


@dataclass(frozen=True)
class PropernessReport:
    ok: bool
    violations: Tuple[str, ...]

    def __bool__(self):
        return self.ok


def is_proper(rep: VpgRepresentation) -> PropernessReport:
    """Check the three properness conditions.

    (a) no two paths share an overlap sub-segment, (b) every isolated
    intersection point lies on exactly two paths, (c) every intersection is a
    transversal crossing (interior of a horizontal segment of one path and of
    a vertical segment of the other).
    """
    violations: List[str] = []
    point_owners: Dict[Point, set] = {}
    for u, v, inter in _pairwise_intersections(rep):
        su, sv = label_str(u), label_str(v)
        for ov in inter.overlaps:
            violations.append(f"overlap between {su} and {sv} along {ov}")
        for pt in inter.points:
            point_owners.setdefault(pt, set()).update((u, v))
            if not transversal_at(rep.path(u), rep.path(v), pt):
                violations.append(f"non-crossing touch of {su} and {sv} at {pt}")
    for pt, owners in sorted(point_owners.items(), key=lambda kv: kv[0]):
        if len(owners) > 2:
            names = ",".join(sorted(label_str(o) for o in owners))
            violations.append(f"point {pt} lies on {len(owners)} paths ({names})")
    return PropernessReport(ok=not violations, violations=tuple(sorted(violations)))


def max_bends(rep: VpgRepresentation) -> int:
    """Largest bend count over all paths of the representation."""
    if not rep.assignment:
        return 0
    return max(bend_count(p) for p in rep.assignment.values())


def arc_position(path: RectPath, pt: Point) -> Fraction:
    """Arc length from the first corner to `pt` (which must lie on the path)."""
    total = Fraction(0)
    for seg, a, b in zip(path.segments(), path.corners, path.corners[1:]):
        if seg.contains(pt):
            return total + abs(pt.x - a.x) + abs(pt.y - a.y)
        total += seg.length
    raise DomainError(f"{pt} does not lie on the path")


def subpath_between(path: RectPath, start: Point, end: Point) -> RectPath:
    """Contiguous subpath of `path` from `start` to `end` (both on the path)."""
    s_pos, e_pos = arc_position(path, start), arc_position(path, end)
    if s_pos > e_pos:
        start, end, s_pos, e_pos = end, start, e_pos, s_pos
    if s_pos == e_pos:
        raise DomainError("degenerate subpath (start equals end)")
    corners = [start]
    total = Fraction(0)
    for seg, a, b in zip(path.segments(), path.corners, path.corners[1:]):
        nxt = total + seg.length
        if s_pos < nxt and total < e_pos:
            corners.append(b)
        total = nxt
    corners[-1] = end
    return RectPath(corners)


def clique_hit_sequence(
    rep: VpgRepresentation, b: Label, clique_verts: Iterable[Label]
) -> List[Tuple[Label, Point]]:
    """Clique vertices hit by P(b), ordered by arc length along P(b).

    Requires all intersections with clique paths to be isolated points.
    """
    pb = rep.path(b)
    hits: List[Tuple[Fraction, Label, Point]] = []
    for a in clique_verts:
        if a == b:
            continue
        inter = path_intersections(pb, rep.path(a))
        if inter.overlaps:
            raise DomainError(
                f"path of {label_str(b)} overlaps clique path {label_str(a)}"
            )
        for pt in inter.points:
            hits.append((arc_position(pb, pt), a, pt))
    hits.sort(key=lambda h: h[0])
    return [(a, pt) for _, a, pt in hits]


def leaf_trim_window(labels: List[Label]) -> Tuple[int, int]:
    """Surviving index window after the recurring-leaf rule.

    A leaf is dropped while its element also occurs elsewhere in the remaining
    sequence, first from the front and then from the back; afterwards both
    leaves are distinct (or the window has collapsed to one hit).
    """
    lo, hi = 0, len(labels) - 1
    while lo < hi and labels[lo] in labels[lo + 1 : hi + 1]:
        lo += 1
    while lo < hi and labels[hi] in labels[lo:hi]:
        hi -= 1
    return lo, hi


def trim_independent_path(
    rep: VpgRepresentation, b: Label, clique_verts: Iterable[Label]
) -> RectPath:
    """Leaf-trimmed minimal subpath of P(b) per the recurring-leaf rule.

    Walks P(b) end to end, records the ordered sequence of clique vertices
    hit, removes a leaf while its element recurs in the remaining sequence
    (first from the front, then from the back), and returns the subpath
    spanning the surviving hits.  The subpath ends exactly at the surviving
    end hits, so it still meets every clique vertex the sequence retains.
    """
    hits = clique_hit_sequence(rep, b, clique_verts)
    if not hits:
        raise DomainError(f"path of {label_str(b)} hits no clique path")
    lo, hi = leaf_trim_window([h[0] for h in hits])
    if lo == hi:
        raise DegenerateTrimError(
            f"trimmed hit sequence of {label_str(b)} has a single element"
        )
    return subpath_between(rep.path(b), hits[lo][1], hits[hi][1])


def write_representation_text(rep: VpgRepresentation) -> str:
    """One record per vertex: 'label : (x1,y1) (x2,y2) ...'."""
    lines = []
    for label in rep.labels():
        pts = " ".join(str(c) for c in rep.path(label).corners)
        lines.append(f"{label_str(label)} : {pts}")
    return "\n".join(lines) + "\n"


def read_representation_text(text: str) -> VpgRepresentation:
    assignment: Dict[Label, RectPath] = {}
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln:
            continue
        if " : " not in ln:
            raise ValidationError(f"bad representation line {ln!r}")
        label, rest = ln.split(" : ", 1)
        corners = []
        for tok in rest.split():
            if not (tok.startswith("(") and tok.endswith(")")):
                raise ValidationError(f"bad corner token {tok!r}")
            xs, ys = tok[1:-1].split(",")
            corners.append(Point(rational(xs), rational(ys)))
        label = label.strip()
        if label in assignment:
            raise ValidationError(f"duplicate label {label!r}")
        assignment[label] = RectPath(corners)
    return VpgRepresentation(assignment)
