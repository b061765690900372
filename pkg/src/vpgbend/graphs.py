"""Finite simple graphs, split partitions, and the graph families used here.

Vertex labels are opaque hashables (ints for clique vertices, sorted tuples
for subset-indexed vertices).  Iteration order is the vertex insertion order,
and neighbor lists are kept sorted by that order, so all derived output is
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Hashable, Iterable, List, Sequence, Tuple

from .errors import DomainError, GraphError, ParameterError

Label = Hashable


class Graph:
    """Undirected simple graph (no loops, no multi-edges)."""

    __slots__ = ("_vertices", "_index", "_adj")

    def __init__(self, vertices: Iterable[Label], edges: Iterable[Tuple[Label, Label]] = ()):
        self._vertices: Tuple[Label, ...] = tuple(vertices)
        self._index: Dict[Label, int] = {}
        for i, v in enumerate(self._vertices):
            if v in self._index:
                raise GraphError(f"duplicate vertex label {v!r}")
            self._index[v] = i
        self._adj: Dict[Label, set] = {v: set() for v in self._vertices}
        for u, v in edges:
            self.add_edge(u, v)

    def add_edge(self, u: Label, v: Label) -> None:
        if u not in self._index or v not in self._index:
            raise GraphError(f"edge ({u!r},{v!r}) uses an unknown vertex")
        if u == v:
            raise GraphError(f"self-loop at {u!r}")
        self._adj[u].add(v)
        self._adj[v].add(u)

    @property
    def vertices(self) -> Tuple[Label, ...]:
        return self._vertices

    def index(self, v: Label) -> int:
        return self._index[v]

    def __contains__(self, v: Label) -> bool:
        return v in self._index

    def __len__(self) -> int:
        return len(self._vertices)

    def neighbors(self, v: Label) -> List[Label]:
        return sorted(self._adj[v], key=self._index.__getitem__)

    def degree(self, v: Label) -> int:
        return len(self._adj[v])

    def has_edge(self, u: Label, v: Label) -> bool:
        return v in self._adj.get(u, ())

    def edges(self) -> List[Tuple[Label, Label]]:
        """Edges as index-ordered pairs, sorted by index."""
        out = []
        for u in self._vertices:
            iu = self._index[u]
            for v in self._adj[u]:
                if self._index[v] > iu:
                    out.append((u, v))
        out.sort(key=lambda e: (self._index[e[0]], self._index[e[1]]))
        return out

    def edge_count(self) -> int:
        return sum(len(s) for s in self._adj.values()) // 2

    def edge_set(self) -> frozenset:
        return frozenset(frozenset(e) for e in self.edges())

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return set(self._vertices) == set(other._vertices) and self.edge_set() == other.edge_set()

    def __hash__(self):
        return hash((frozenset(self._vertices), self.edge_set()))

    def __repr__(self):
        return f"Graph({len(self)} vertices, {self.edge_count()} edges)"

    def is_clique(self, subset: Iterable[Label]) -> bool:
        vs = list(subset)
        return all(self.has_edge(u, v) for u, v in combinations(vs, 2))

    def is_independent(self, subset: Iterable[Label]) -> bool:
        vs = list(subset)
        return not any(self.has_edge(u, v) for u, v in combinations(vs, 2))


@dataclass(frozen=True)
class SplitPartition:
    clique: Tuple[Label, ...]
    independent: Tuple[Label, ...]


def check_split_partition(g: Graph, part: SplitPartition) -> None:
    """Raise unless `part` is a valid split partition of `g`."""
    c, i = set(part.clique), set(part.independent)
    if c & i:
        raise DomainError("clique and independent parts overlap")
    if c | i != set(g.vertices):
        raise DomainError("partition does not cover the vertex set")
    if not g.is_clique(part.clique):
        raise DomainError("clique part does not induce a complete graph")
    if not g.is_independent(part.independent):
        raise DomainError("independent part induces an edge")


def ksubsets(n: int, k: int) -> List[Tuple[int, ...]]:
    """All k-element subsets of [n] = {1..n} as sorted tuples, lexicographic."""
    return [tuple(c) for c in combinations(range(1, n + 1), k)]


def build_split_knk(n: int, k: int) -> Tuple[Graph, SplitPartition]:
    """Split graph with clique [n] and one independent vertex per k-subset.

    The independent vertex labeled by a sorted k-tuple S is adjacent exactly
    to the clique vertices in S.
    """
    if not 1 <= k < n:
        raise ParameterError(f"need 1 <= k < n, got k={k}, n={n}")
    clique = list(range(1, n + 1))
    indep = ksubsets(n, k)
    g = Graph(clique + indep)
    for u, v in combinations(clique, 2):
        g.add_edge(u, v)
    for subset in indep:
        for w in subset:
            g.add_edge(subset, w)
    return g, SplitPartition(clique=tuple(clique), independent=tuple(indep))


def all_qedges(n: int, k: int) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """All unordered pairs of distinct k-subsets of [n]."""
    return list(combinations(ksubsets(n, k), 2))


def build_hnk_member(n: int, k: int, q_edges: Iterable[Tuple[Sequence[int], Sequence[int]]]) -> Graph:
    """Member of the family with clique [n], k-subset vertices Q attached to
    their elements, and exactly the given edges inside Q."""
    if not (n > k >= 1):
        raise ParameterError(f"need n > k >= 1, got n={n}, k={k}")
    clique = list(range(1, n + 1))
    q = ksubsets(n, k)
    qset = set(q)
    g = Graph(clique + q)
    for u, v in combinations(clique, 2):
        g.add_edge(u, v)
    for subset in q:
        for w in subset:
            g.add_edge(subset, w)
    for s, t in q_edges:
        s, t = tuple(sorted(s)), tuple(sorted(t))
        if s not in qset or t not in qset:
            raise ParameterError(f"q-edge ({s},{t}) is not a pair of k-subsets of [n]")
        if s == t:
            raise ParameterError(f"q-edge joins {s} to itself")
        g.add_edge(s, t)
    return g


def has_long_induced_cycle(g: Graph, L: int) -> bool:
    """True iff `g` contains an induced (chordless) cycle of length >= L.

    Exhaustive search over induced paths whose minimum-index vertex comes
    first; intended for desk-scale graphs only.
    """
    if L < 3:
        raise ParameterError("cycle length threshold must be >= 3")
    order = {v: i for i, v in enumerate(g.vertices)}

    def extend(path, on_path):
        v0, last = path[0], path[-1]
        for w in g.neighbors(last):
            if order[w] <= order[v0] or w in on_path:
                continue
            if len(path) == 1:
                if extend(path + [w], on_path | {w}):
                    return True
                continue
            # keep the path induced: w may touch only `last`, except v0 when closing
            chord = any(g.has_edge(w, u) for u in path[1:-1])
            if chord:
                continue
            if g.has_edge(w, v0):
                if len(path) + 1 >= L:
                    return True
                continue  # closing early; extending past w would leave a chord to v0
            if extend(path + [w], on_path | {w}):
                return True
        return False

    for v in g.vertices:
        if extend([v], {v}):
            return True
    return False


def contract_edge(g: Graph, u: Label, v: Label) -> Graph:
    """Contract edge uv: v disappears, u absorbs v's neighborhood (simple result)."""
    if not g.has_edge(u, v):
        raise DomainError(f"({u!r},{v!r}) is not an edge")
    vertices = [w for w in g.vertices if w != v]
    out = Graph(vertices)
    for a, b in g.edges():
        a2 = u if a == v else a
        b2 = u if b == v else b
        if a2 != b2:
            out.add_edge(a2, b2)
    return out


def complement(g: Graph) -> Graph:
    out = Graph(g.vertices)
    for a, b in combinations(g.vertices, 2):
        if not g.has_edge(a, b):
            out.add_edge(a, b)
    return out


def label_str(label: Label) -> str:
    """Canonical text form of a vertex label (tuples join with commas)."""
    if isinstance(label, tuple):
        return ",".join(str(x) for x in label)
    return str(label)


def write_graph_text(g: Graph) -> str:
    """Graph text format: 'n m', vertex labels, then edge lines 'u v'."""
    lines = [f"{len(g)} {g.edge_count()}"]
    lines.extend(label_str(v) for v in g.vertices)
    for u, v in g.edges():
        lines.append(f"{label_str(u)} {label_str(v)}")
    return "\n".join(lines) + "\n"


def read_graph_text(text: str) -> Graph:
    """Parse the graph text format; labels stay strings."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphError("empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError(f"bad header line {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphError(f"bad header line {lines[0]!r}")
    if len(lines) != 1 + n + m:
        raise GraphError(f"expected {1 + n + m} lines, found {len(lines)}")
    vertices = lines[1 : 1 + n]
    g = Graph(vertices)
    for ln in lines[1 + n :]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {ln!r}")
        g.add_edge(parts[0], parts[1])
    return g
