"""Good k-set enumeration, bend lower-bound certificates, counting validators,
and the auxiliary planar graphs built from proper representations.

Probe enumeration is event-driven: the set of paths met by an axis-parallel
probe can only change when one of its coordinates crosses a segment endpoint
or a segment line, so sweeping a refined position set (every event coordinate
plus two interior points per open cell plus one value beyond each extreme) is
exhaustive, and every realizable hit-set gets a positive-length witness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .errors import ConstructionError, DomainError, ParameterError
from .geometry import (
    HORIZONTAL,
    VERTICAL,
    Point,
    Segment,
    bend_count,
    path_intersections,
    segment_intersection,
)
from .graphs import Graph, Label
from .representation import VpgRepresentation, arc_position, is_proper, leaf_trim_window


@dataclass(frozen=True)
class InducedGrid:
    """Lines extending every segment of the clique paths plus the endpoint lines."""

    x_lines: Tuple[Fraction, ...]
    y_lines: Tuple[Fraction, ...]


def induced_grid(ra: VpgRepresentation) -> InducedGrid:
    if not ra.assignment:
        raise DomainError("empty representation has no grid")
    xs, ys = set(), set()
    for path in ra.assignment.values():
        for seg in path.segments():
            if seg.orientation == VERTICAL:
                xs.add(seg.a.x)
            else:
                ys.add(seg.a.y)
        for endpoint in (path.corners[0], path.corners[-1]):
            xs.add(endpoint.x)
            ys.add(endpoint.y)
    return InducedGrid(x_lines=tuple(sorted(xs)), y_lines=tuple(sorted(ys)))


@dataclass(frozen=True)
class GoodKSet:
    members: Tuple[Label, ...]
    orientation: str
    witness: Segment


def _positions(events: Sequence[Fraction]) -> List[Fraction]:
    if not events:
        return []
    out = [events[0] - 1]
    for a, b in zip(events, events[1:]):
        gap = b - a
        out.extend((a, a + gap / 3, a + 2 * gap / 3))
    out.append(events[-1])
    out.append(events[-1] + 1)
    return out


def _probe_sets_one_axis(ra: VpgRepresentation, k: int, vertical: bool):
    """All exactly-k hit-sets of one probe orientation, with witnesses."""
    labels = list(ra.assignment)

    def lo_coord(pt: Point) -> Fraction:
        return pt.y if vertical else pt.x

    def fix_coord(pt: Point) -> Fraction:
        return pt.x if vertical else pt.y

    events = set()
    for label in labels:
        for seg in ra.path(label).segments():
            along = seg.orientation == (HORIZONTAL if vertical else VERTICAL)
            if along:
                events.add(fix_coord(seg.a))
                events.add(fix_coord(seg.b))
            else:
                events.add(fix_coord(seg.a))
    found: Dict[frozenset, GoodKSet] = {}
    for x in _positions(sorted(events)):
        atoms = []  # (lo, hi, label)
        for label in labels:
            for seg in ra.path(label).segments():
                along = seg.orientation == (HORIZONTAL if vertical else VERTICAL)
                if along:
                    if fix_coord(seg.a) <= x <= fix_coord(seg.b):
                        y = lo_coord(seg.a)
                        atoms.append((y, y, label))
                else:
                    if fix_coord(seg.a) == x:
                        atoms.append((lo_coord(seg.a), lo_coord(seg.b), label))
        if not atoms:
            continue
        ys = set()
        for lo, hi, _ in atoms:
            ys.add(lo)
            ys.add(hi)
        pos = _positions(sorted(ys))
        atoms.sort(key=lambda a: (a[0], a[1]))
        for ai in range(len(pos)):
            ya = pos[ai]
            active = [a for a in atoms if a[1] >= ya]
            hit: set = set()
            ptr = 0
            for bi in range(ai + 1, len(pos)):
                yb = pos[bi]
                while ptr < len(active) and active[ptr][0] <= yb:
                    hit.add(active[ptr][2])
                    ptr += 1
                if len(hit) > k:
                    break
                if len(hit) == k:
                    key = frozenset(hit)
                    if key not in found:
                        if vertical:
                            witness = Segment(Point(x, ya), Point(x, yb))
                        else:
                            witness = Segment(Point(ya, x), Point(yb, x))
                        found[key] = GoodKSet(
                            members=tuple(sorted(hit, key=str)),
                            orientation=VERTICAL if vertical else HORIZONTAL,
                            witness=witness,
                        )
    return found


def enumerate_good_sets(ra: VpgRepresentation, k: int) -> List[GoodKSet]:
    """Every k-subset of path labels met exactly by some axis-parallel probe.

    One witness probe per set; a set realizable by both orientations is
    reported once (vertical witness preferred).
    """
    if k < 1:
        raise ParameterError("need k >= 1")
    found = _probe_sets_one_axis(ra, k, vertical=True)
    for key, gs in _probe_sets_one_axis(ra, k, vertical=False).items():
        found.setdefault(key, gs)
    return [found[key] for key in sorted(found, key=lambda s: tuple(sorted(s, key=str)))]


def probe_hit_set(ra: VpgRepresentation, probe: Segment) -> frozenset:
    """Labels of paths met by a probe segment (independent witness re-check)."""
    hit = set()
    for label, path in ra.assignment.items():
        for seg in path.segments():
            pt, ov = segment_intersection(seg, probe)
            if pt is not None or ov is not None:
                hit.add(label)
                break
    return frozenset(hit)


def kset_distance(s1: Iterable, s2: Iterable) -> int:
    """|S1 \\ S2| for equal-size sets."""
    f1, f2 = frozenset(s1), frozenset(s2)
    if len(f1) != len(f2):
        raise DomainError("k-set distance needs equal-size sets")
    return len(f1 - f2)


def strip_small_sets(ra: VpgRepresentation, k: int) -> List[frozenset]:
    """For each grid strip met by fewer than k paths, the set of those paths.

    A vertical strip is crossed only by horizontal segments (vertical segments
    lie on grid lines), so its unique maximal probe hit-set is exactly the set
    of paths with a horizontal segment spanning the strip interior; similarly
    for horizontal strips.
    """
    grid = induced_grid(ra)
    out: List[frozenset] = []
    for lines, orient in ((grid.x_lines, HORIZONTAL), (grid.y_lines, VERTICAL)):
        for g1, g2 in zip(lines, lines[1:]):
            members = set()
            for label, path in ra.assignment.items():
                for seg in path.segments():
                    if seg.orientation != orient:
                        continue
                    lo = seg.a.x if orient == HORIZONTAL else seg.a.y
                    hi = seg.b.x if orient == HORIZONTAL else seg.b.y
                    if lo < g2 and hi > g1:
                        members.add(label)
                        break
            if 0 < len(members) < k:
                out.append(frozenset(members))
    return out


def pad_to_k(members: frozenset, n: int, k: int) -> frozenset:
    """Pad a small set with the lexicographically smallest absent labels of [n]."""
    need = k - len(members)
    if need <= 0:
        return members
    extra = [l for l in range(1, n + 1) if l not in members][:need]
    return members | set(extra)


def augmented_good_sets(ra: VpgRepresentation, k: int, n: int) -> List[frozenset]:
    """Good k-sets plus the padded unique small sets of deficient strips."""
    sets = [frozenset(g.members) for g in enumerate_good_sets(ra, k)]
    sets.extend(pad_to_k(m, n, k) for m in strip_small_sets(ra, k))
    return sets


def find_far_kset(good_sets: Iterable[Iterable], n: int, k: int) -> Optional[Tuple[int, ...]]:
    """First k-subset of [n] at distance > k-3 from every given k-set, or None."""
    sets = [frozenset(s) for s in good_sets]
    for t in combinations(range(1, n + 1), k):
        ft = frozenset(t)
        if all(len(ft - s) > k - 3 for s in sets):
            return t
    return None


def certificate_candidates(ra: VpgRepresentation, k: int) -> List[frozenset]:
    """Good k-sets plus unpadded deficient-strip sets, reusable across targets."""
    candidates = [frozenset(g.members) for g in enumerate_good_sets(ra, k)]
    candidates.extend(strip_small_sets(ra, k))
    return candidates


def bend_lb_certificate(
    ra: VpgRepresentation,
    target: Iterable,
    candidates: Optional[List[frozenset]] = None,
) -> Optional[int]:
    """Bend lower bound for any path meeting exactly the clique paths of `target`.

    Every segment of such a path is a probe, so it meets at most
    c = max over good/strip sets S of |target intersect S| members; k members
    then need at least ceil(k/c) segments.  Returns None when c = 0 (no probe
    meets any member: unrealizable).  Pass `candidates` from
    `certificate_candidates` to amortize the probe sweep over many targets.
    """
    t = frozenset(target)
    k = len(t)
    if k < 1:
        raise ParameterError("empty target set")
    if candidates is None:
        candidates = certificate_candidates(ra, k)
    c = max((len(t & s) for s in candidates), default=0)
    if c == 0:
        return None
    return -(-k // c) - 1


@dataclass(frozen=True)
class CountingReport:
    """Exact big-integer checks of the counting chain."""

    observation_bound: bool          # 8 n^2 (t+1)^2 <= 2 n^2 k^2
    factorial_split: Optional[bool]  # k! < ceil(k/2)! floor(k/2)! (k-5)!
    simplified_growth: bool          # 2 n^2 k^2 k! < n(n-1)(n-2)
    claim_chain: Optional[bool]      # 2 n^2 k^2 (k-3) C(k,ceil k/2) C(n-k,k-3) < C(n,k)

    def all_defined_true(self) -> bool:
        return all(v for v in (self.observation_bound, self.factorial_split,
                               self.simplified_growth, self.claim_chain)
                   if v is not None)

    def lines(self) -> List[str]:
        def show(v):
            return "undefined" if v is None else ("true" if v else "false")

        return [
            f"(a) 8n^2(t+1)^2 <= 2n^2k^2: {show(self.observation_bound)}",
            f"(b) k! < ceil(k/2)! floor(k/2)! (k-5)!: {show(self.factorial_split)}",
            f"(c) 2n^2k^2 k! < n(n-1)(n-2): {show(self.simplified_growth)}",
            f"(d) 2n^2k^2(k-3) C(k,ceil(k/2)) C(n-k,k-3) < C(n,k): {show(self.claim_chain)}",
        ]


def validate_counting(n: int, k: int, t: int) -> CountingReport:
    """Evaluate the counting inequalities exactly with arbitrary precision."""
    if not (n > k >= 1) or t < 0:
        raise ParameterError(f"need n > k >= 1 and t >= 0, got n={n}, k={k}, t={t}")
    a = 8 * n * n * (t + 1) ** 2 <= 2 * n * n * k * k
    if k >= 5:
        b = math.factorial(k) < (
            math.factorial(-(-k // 2)) * math.factorial(k // 2) * math.factorial(k - 5)
        )
    else:
        b = None
    c = 2 * n * n * k * k * math.factorial(k) < n * (n - 1) * (n - 2)
    if k >= 3:
        lhs = 2 * n * n * k * k * (k - 3) * math.comb(k, -(-k // 2)) * math.comb(n - k, k - 3)
        d = lhs < math.comb(n, k)
    else:
        d = None
    return CountingReport(
        observation_bound=a, factorial_split=b, simplified_growth=c, claim_chain=d
    )


def count_good_sets_vs_bound(ra: VpgRepresentation, k: int, t: int) -> Tuple[int, int, bool]:
    """(number of good k-sets, 8 n^2 (t+1)^2, count <= bound)."""
    n = len(ra)
    worst = max((bend_count(p) for p in ra.assignment.values()), default=0)
    if worst > t:
        raise ParameterError(f"a path has {worst} bends, above the declared t={t}")
    count = len(enumerate_good_sets(ra, k))
    bound = 8 * n * n * (t + 1) ** 2
    return count, bound, count <= bound


# ---------------------------------------------------------------------------
# auxiliary graphs of proper representations of the 3-subset split graph


def _hit_details(rep: VpgRepresentation, b: Label, clique_verts) -> List[Tuple[Label, str, int, Point]]:
    """Ordered (clique label, orientation, segment index, point) hits of P(b).

    Overlap hits contribute with the orientation of the shared portion; point
    hits take the orientation of the unique clique-path segment whose interior
    contains the point (segment endpoints fall back to any containing segment).
    """
    pb = rep.path(b)
    out = []
    for a in clique_verts:
        if a == b:
            continue
        pa = rep.path(a)
        inter = path_intersections(pb, pa)
        segs = list(pa.segments())
        for pt in inter.points:
            owner = None
            for idx, seg in enumerate(segs):
                if seg.interior_contains(pt):
                    owner = (idx, seg.orientation)
                    break
            if owner is None:
                for idx, seg in enumerate(segs):
                    if seg.contains(pt):
                        owner = (idx, seg.orientation)
                        break
            out.append((arc_position(pb, pt), a, owner[1], owner[0], pt))
        for ov in inter.overlaps:
            for idx, seg in enumerate(segs):
                if segment_intersection(seg, ov)[1] is not None:
                    out.append((arc_position(pb, ov.a), a, seg.orientation, idx, ov.a))
                    break
    out.sort(key=lambda h: h[0])
    return [(a, ori, idx, pt) for _, a, ori, idx, pt in out]


def classify_sh_sv(rep: VpgRepresentation, clique_verts, indep_verts):
    """Partition-cover (S_H, S_V): b lands in S_H when it meets horizontal
    segments of at least two of its three clique neighbors, S_V symmetrically."""
    clique_verts = list(clique_verts)
    s_h, s_v = [], []
    for b in indep_verts:
        details = _hit_details(rep, b, clique_verts)
        nbrs = {a for a, _, _, _ in details}
        if len(nbrs) < 3:
            raise DomainError(f"independent vertex {b!r} meets {len(nbrs)} clique paths")
        horiz = {a for a, ori, _, _ in details if ori == HORIZONTAL}
        vert = {a for a, ori, _, _ in details if ori == VERTICAL}
        if len(horiz) >= 2:
            s_h.append(b)
        if len(vert) >= 2:
            s_v.append(b)
    if set(s_h) | set(s_v) != set(indep_verts):
        raise ConstructionError("S_H and S_V fail to cover the independent set")
    return tuple(s_h), tuple(s_v)


def _contract_same_path_edges(f: Graph) -> Graph:
    parent: Dict = {v: v for v in f.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in f.edges():
        if u[1] == v[1]:  # same clique path owns both segments
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[rv] = ru
    reps = []
    seen = set()
    for v in f.vertices:
        r = find(v)
        if r not in seen:
            seen.add(r)
            reps.append(r)
    out = Graph(reps)
    for u, v in f.edges():
        ru, rv = find(u), find(v)
        if ru != rv:
            out.add_edge(ru, rv)
    return out


def build_auxiliary_fh_fv(rep: VpgRepresentation, clique_verts, indep_verts):
    """(F_h, F_v, F'_h, F'_v) for a proper representation.

    F_h has one vertex per horizontal segment of a clique path; consecutive
    horizontal hits of an independent path contribute an edge.  F'_h contracts
    the edges joining segments of the same clique path.  F_v / F'_v mirror the
    construction on vertical segments.

    Each independent path is first trimmed by the recurring-leaf rule; only
    hits inside the surviving window generate edges (the window equals the hit
    sequence of the trimmed subpath, so the given representation stays whole
    and proper).
    """
    report = is_proper(rep)
    if not report.ok:
        raise DomainError("representation is not proper: " + "; ".join(report.violations[:3]))
    clique_verts = list(clique_verts)
    h_vertices, v_vertices = [], []
    for a in clique_verts:
        for idx, seg in enumerate(rep.path(a).segments()):
            if seg.orientation == HORIZONTAL:
                h_vertices.append(("h", a, idx))
            else:
                v_vertices.append(("v", a, idx))
    f_h = Graph(h_vertices)
    f_v = Graph(v_vertices)
    for b in indep_verts:
        details = _hit_details(rep, b, clique_verts)
        lo, hi = leaf_trim_window([a for a, _, _, _ in details])
        details = details[lo : hi + 1]
        h_hits = [("h", a, idx) for a, ori, idx, _ in details if ori == HORIZONTAL]
        v_hits = [("v", a, idx) for a, ori, idx, _ in details if ori == VERTICAL]
        for hits, f in ((h_hits, f_h), (v_hits, f_v)):
            for u, v in zip(hits, hits[1:]):
                if u != v:
                    f.add_edge(u, v)
    return f_h, f_v, _contract_same_path_edges(f_h), _contract_same_path_edges(f_v)


def is_planar(g: Graph) -> bool:
    """Planarity via the standard linear-time test."""
    ng = nx.Graph()
    ng.add_nodes_from(g.vertices)
    ng.add_edges_from(g.edges())
    ok, _ = nx.check_planarity(ng, counterexample=False)
    return ok
