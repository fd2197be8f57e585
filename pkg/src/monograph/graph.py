"""Connected multigraphs with canonically oriented edges.

A graph is stored as a vertex count plus a list of (source, target) pairs;
each unoriented edge carries exactly one canonical orientation, fixed at
construction.  Parallel edges are allowed, loops are not: loops would break
the column-sum invariant of the incidence matrix, and the curve
configurations this models never produce them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .linalg import Mat


class GraphError(ValueError):
    pass


class LoopEdgeError(GraphError):
    """An edge joins a vertex to itself."""


class DisconnectedError(GraphError):
    """The graph is not connected."""


@dataclass(frozen=True)
class DualGraph:
    """A multigraph; vertices are 0..n-1, edges canonical (source, target)."""

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError("need at least one vertex")
        object.__setattr__(self, "edges", tuple((int(s), int(t)) for s, t in self.edges))
        for s, t in self.edges:
            if not (0 <= s < self.n and 0 <= t < self.n):
                raise GraphError("edge (%d,%d) out of range for %d vertices"
                                 % (s, t, self.n))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != self.n:
                raise GraphError("%d labels for %d vertices"
                                 % (len(self.labels), self.n))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertex_name(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else "v%d" % v

    def validate(self) -> None:
        """Raise LoopEdgeError or DisconnectedError if the graph is invalid."""
        for e, (s, t) in enumerate(self.edges):
            if s == t:
                raise LoopEdgeError("edge %d is a loop at vertex %s"
                                    % (e, self.vertex_name(s)))
        adjacency: list[list[int]] = [[] for _ in range(self.n)]
        for s, t in self.edges:
            adjacency[s].append(t)
            adjacency[t].append(s)
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for w in adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        if not all(seen):
            missing = [self.vertex_name(v) for v, ok in enumerate(seen) if not ok]
            raise DisconnectedError("unreachable vertices: %s" % ", ".join(missing))

    def is_valid(self) -> bool:
        try:
            self.validate()
        except GraphError:
            return False
        return True

    def degree(self, v: int) -> int:
        """Number of edge ends at v (parallel edges count separately)."""
        self._check_vertex(v)
        return sum((s == v) + (t == v) for s, t in self.edges)

    def star(self, v: int) -> tuple[tuple[int, bool], ...]:
        """Incident edges as (edge index, v is the canonical source)."""
        self._check_vertex(v)
        return tuple((e, s == v) for e, (s, t) in enumerate(self.edges)
                     if v in (s, t))

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Other endpoints of the star, one entry per incident edge."""
        out = []
        for e, is_source in self.star(v):
            s, t = self.edges[e]
            out.append(t if is_source else s)
        return tuple(out)

    def reorient_edge(self, e: int) -> DualGraph:
        """Same graph with edge e's canonical orientation swapped."""
        if not (0 <= e < self.m):
            raise GraphError("no edge %d" % e)
        s, t = self.edges[e]
        edges = self.edges[:e] + ((t, s),) + self.edges[e + 1:]
        return DualGraph(self.n, edges, self.labels)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError("no vertex %d" % v)


def incidence_matrix(g: DualGraph) -> Mat:
    """n x m matrix: +1 at (source, e), -1 at (target, e)."""
    entries = [[Fraction(0)] * g.m for _ in range(g.n)]
    for e, (s, t) in enumerate(g.edges):
        entries[s][e] += 1
        entries[t][e] -= 1
    return Mat.from_rows(entries, cols=g.m)


def laplacian(g: DualGraph) -> Mat:
    """n x n matrix with vertex degrees on the diagonal and, off the
    diagonal, minus the number of edges between the two vertices."""
    entries = [[Fraction(0)] * g.n for _ in range(g.n)]
    for s, t in g.edges:
        entries[s][s] += 1
        entries[t][t] += 1
        entries[s][t] -= 1
        entries[t][s] -= 1
    return Mat.from_rows(entries, cols=g.n)


def cycle_graph(m: int, labels: tuple[str, ...] | None = None) -> DualGraph:
    """Cycle on m >= 2 vertices.

    Edges run i -> i+1, and the closing edge is oriented 0 -> m-1, so the
    m = 3 instance has edge list (0,1), (1,2), (0,2).  m = 1 would force a
    loop and is rejected.
    """
    if m < 2:
        raise GraphError("cycle needs at least 2 vertices, got %d" % m)
    edges = tuple((i, i + 1) for i in range(m - 1)) + ((0, m - 1),)
    return DualGraph(m, edges, labels)
