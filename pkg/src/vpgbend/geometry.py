"""Exact rational geometry for axis-parallel (rectilinear) paths.

Every coordinate is a `fractions.Fraction`, so all predicates (containment,
crossing, overlap) are exact.  Floats are rejected outright: the layered
epsilon offsets used by the constructions only make sense with exact
arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Tuple, Union

from .errors import GeometryError

Coord = Union[int, str, Fraction]

HORIZONTAL = "horizontal"
VERTICAL = "vertical"

# direction-vector symbols
RIGHT, LEFT, UP, DOWN = "R", "L", "U", "D"


def rational(value: Coord) -> Fraction:
    """Convert an exact value (int, Fraction, or 'num/den' string) to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise GeometryError(f"not an exact coordinate: {value!r}")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise GeometryError(f"not an exact coordinate: {value!r} (floats are not allowed)")


def format_rational(value: Fraction) -> str:
    """Canonical text form: '3' for integers, '3/4' otherwise."""
    return str(value)


@dataclass(frozen=True, order=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", rational(self.x))
        object.__setattr__(self, "y", rational(self.y))

    def translated(self, dx: Coord, dy: Coord) -> "Point":
        return Point(self.x + rational(dx), self.y + rational(dy))

    def __str__(self):
        return f"({format_rational(self.x)},{format_rational(self.y)})"


@dataclass(frozen=True)
class Segment:
    """Closed axis-parallel segment; endpoints stored in increasing order."""

    a: Point
    b: Point

    def __post_init__(self):
        a, b = self.a, self.b
        if a == b:
            raise GeometryError("zero-length segment")
        if a.x != b.x and a.y != b.y:
            raise GeometryError(f"segment {a}-{b} is not axis-parallel")
        if (b.x, b.y) < (a.x, a.y):
            object.__setattr__(self, "a", b)
            object.__setattr__(self, "b", a)

    @property
    def orientation(self) -> str:
        return HORIZONTAL if self.a.y == self.b.y else VERTICAL

    @property
    def length(self) -> Fraction:
        return (self.b.x - self.a.x) + (self.b.y - self.a.y)

    def contains(self, pt: Point) -> bool:
        if self.orientation == HORIZONTAL:
            return pt.y == self.a.y and self.a.x <= pt.x <= self.b.x
        return pt.x == self.a.x and self.a.y <= pt.y <= self.b.y

    def interior_contains(self, pt: Point) -> bool:
        return self.contains(pt) and pt != self.a and pt != self.b

    def translated(self, dx: Coord, dy: Coord) -> "Segment":
        return Segment(self.a.translated(dx, dy), self.b.translated(dx, dy))

    def __str__(self):
        return f"[{self.a}-{self.b}]"


def segment_intersection(
    s: Segment, t: Segment
) -> Tuple[Optional[Point], Optional[Segment]]:
    """Intersection of two segments: (isolated point, positive-length overlap).

    At most one of the two results is non-None.  Collinear segments sharing a
    single endpoint yield an isolated point, not an overlap.
    """
    if s.orientation != t.orientation:
        h, v = (s, t) if s.orientation == HORIZONTAL else (t, s)
        x, y = v.a.x, h.a.y
        if h.a.x <= x <= h.b.x and v.a.y <= y <= v.b.y:
            return Point(x, y), None
        return None, None
    if s.orientation == HORIZONTAL:
        if s.a.y != t.a.y:
            return None, None
        y = s.a.y
        lo, hi = max(s.a.x, t.a.x), min(s.b.x, t.b.x)
        if lo > hi:
            return None, None
        if lo == hi:
            return Point(lo, y), None
        return None, Segment(Point(lo, y), Point(hi, y))
    if s.a.x != t.a.x:
        return None, None
    x = s.a.x
    lo, hi = max(s.a.y, t.a.y), min(s.b.y, t.b.y)
    if lo > hi:
        return None, None
    if lo == hi:
        return Point(x, lo), None
    return None, Segment(Point(x, lo), Point(x, hi))


def _normalize_corners(points) -> list:
    out = []
    for pt in points:
        if out and pt == out[-1]:
            continue
        if len(out) >= 2:
            a, b = out[-2], out[-1]
            same_x = a.x == b.x == pt.x
            same_y = a.y == b.y == pt.y
            if same_x and (pt.y - b.y) * (b.y - a.y) > 0:
                out[-1] = pt
                continue
            if same_y and (pt.x - b.x) * (b.x - a.x) > 0:
                out[-1] = pt
                continue
        out.append(pt)
    return out


class RectPath:
    """Axis-parallel path stored by its corner sequence.

    Invariants enforced on construction: at least two corners, consecutive
    corners differ in exactly one coordinate, consecutive segments alternate
    orientation (straight continuations are merged away), and the path is
    simple.
    """

    __slots__ = ("corners",)

    def __init__(self, corners: Iterable):
        pts = []
        for c in corners:
            if isinstance(c, Point):
                pts.append(c)
            else:
                x, y = c
                pts.append(Point(rational(x), rational(y)))
        pts = _normalize_corners(pts)
        if len(pts) < 2:
            raise GeometryError("a path needs at least two distinct corners")
        segs = []
        for a, b in zip(pts, pts[1:]):
            if a.x != b.x and a.y != b.y:
                raise GeometryError(f"diagonal move {a} -> {b}")
            segs.append(Segment(a, b))
        for s1, s2 in zip(segs, segs[1:]):
            if s1.orientation == s2.orientation:
                raise GeometryError("consecutive segments on the same axis (backtracking)")
        for i in range(len(segs)):
            for j in range(i + 2, len(segs)):
                pt, ov = segment_intersection(segs[i], segs[j])
                if pt is not None or ov is not None:
                    raise GeometryError("path is not simple")
        self.corners = tuple(pts)

    def segments(self) -> Tuple[Segment, ...]:
        return tuple(Segment(a, b) for a, b in zip(self.corners, self.corners[1:]))

    def reversed(self) -> "RectPath":
        return RectPath(tuple(reversed(self.corners)))

    def translated(self, dx: Coord, dy: Coord) -> "RectPath":
        return RectPath(tuple(c.translated(dx, dy) for c in self.corners))

    def __eq__(self, other):
        return isinstance(other, RectPath) and self.corners == other.corners

    def __hash__(self):
        return hash(self.corners)

    def __repr__(self):
        return f"RectPath({[str(c) for c in self.corners]})"


def bend_count(p: RectPath) -> int:
    """Number of bends: segments minus one."""
    return len(p.corners) - 2


def direction_vector(p: RectPath) -> Tuple[str, ...]:
    """Per-segment movement symbols (R/L/U/D), one per corner transition."""
    out = []
    for a, b in zip(p.corners, p.corners[1:]):
        if a.y == b.y:
            out.append(RIGHT if b.x > a.x else LEFT)
        else:
            out.append(UP if b.y > a.y else DOWN)
    return tuple(out)


@dataclass(frozen=True)
class PathIntersections:
    """Decomposition of the intersection of two paths.

    `points` are the isolated intersection points (sorted); `overlaps` are the
    maximal collinear shared sub-segments of positive length.
    """

    points: Tuple[Point, ...]
    overlaps: Tuple[Segment, ...]

    def __bool__(self):
        return bool(self.points or self.overlaps)


def _merge_overlaps(overlaps) -> Tuple[Segment, ...]:
    groups = {}
    for ov in overlaps:
        if ov.orientation == HORIZONTAL:
            key = (HORIZONTAL, ov.a.y)
            iv = (ov.a.x, ov.b.x)
        else:
            key = (VERTICAL, ov.a.x)
            iv = (ov.a.y, ov.b.y)
        groups.setdefault(key, []).append(iv)
    merged = []
    for (orient, fixed), ivs in sorted(groups.items()):
        ivs.sort()
        cur_lo, cur_hi = ivs[0]
        for lo, hi in ivs[1:]:
            if lo <= cur_hi:
                cur_hi = max(cur_hi, hi)
            else:
                merged.append((orient, fixed, cur_lo, cur_hi))
                cur_lo, cur_hi = lo, hi
        merged.append((orient, fixed, cur_lo, cur_hi))
    out = []
    for orient, fixed, lo, hi in merged:
        if orient == HORIZONTAL:
            out.append(Segment(Point(lo, fixed), Point(hi, fixed)))
        else:
            out.append(Segment(Point(fixed, lo), Point(fixed, hi)))
    return tuple(sorted(out, key=lambda s: (s.a, s.b)))


def path_intersections(p: RectPath, q: RectPath) -> PathIntersections:
    """All isolated intersection points and maximal overlaps of two paths."""
    pts = set()
    raw_overlaps = []
    for sp in p.segments():
        for sq in q.segments():
            pt, ov = segment_intersection(sp, sq)
            if pt is not None:
                pts.add(pt)
            elif ov is not None:
                raw_overlaps.append(ov)
    overlaps = _merge_overlaps(raw_overlaps)
    isolated = tuple(
        sorted(pt for pt in pts if not any(ov.contains(pt) for ov in overlaps))
    )
    return PathIntersections(points=isolated, overlaps=overlaps)


def transversal_at(p: RectPath, q: RectPath, pt: Point) -> bool:
    """Crossing test without domain validation: `pt` must already be known to
    be an isolated intersection point of the two paths."""

    def interior_hits(path):
        h = v = False
        for s in path.segments():
            if s.interior_contains(pt):
                if s.orientation == HORIZONTAL:
                    h = True
                else:
                    v = True
        return h, v

    ph, pv = interior_hits(p)
    qh, qv = interior_hits(q)
    return (ph and qv) or (pv and qh)


def is_crossing_point(p: RectPath, q: RectPath, pt: Point) -> bool:
    """True iff the paths cross transversally at `pt`.

    Requires `pt` to be an isolated intersection point of the two paths.  The
    point must lie in the interior of a horizontal segment of one path and the
    interior of a vertical segment of the other; touching at a segment
    endpoint (in particular at any corner) does not count as a crossing.
    """
    inter = path_intersections(p, q)
    if pt not in inter.points:
        raise GeometryError(f"{pt} is not an isolated intersection point of the paths")
    return transversal_at(p, q, pt)
