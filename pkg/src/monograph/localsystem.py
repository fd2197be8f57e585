"""Local coefficient systems on a dual graph.

A rank-r system assigns each edge an invertible r x r transition matrix
expressing the target-vertex frame in the source-vertex frame along the
canonical orientation.  The transition along the reversed edge is the
inverse; it is always derived, never stored, so the one matrix per edge is
the single source of truth.

Edge cochains hold one r-vector per edge, pinned to the source-vertex
frame.  The value seen from the target side is minus the inverse-transported
vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .graph import DualGraph
from .linalg import DimensionMismatch, Mat, Vector, rref, vec


def _inverse(m: Mat) -> Mat:
    """Invert via Gauss-Jordan on [m | I]; raises on singular input."""
    if m.rows != m.cols:
        raise DimensionMismatch("inverse of %dx%d matrix" % (m.rows, m.cols))
    n = m.rows
    augmented = Mat.block([[m, Mat.identity(n)]])
    reduced, pivots = rref(augmented)
    if tuple(pivots) != tuple(range(n)):
        raise ValueError("matrix is singular")
    return Mat.from_rows([reduced.row(i)[n:] for i in range(n)], cols=n)


@dataclass(frozen=True)
class LocalSystem:
    """Per-edge invertible transitions over a validated graph."""

    graph: DualGraph
    rank: int
    transitions: tuple[Mat, ...]

    def __post_init__(self) -> None:
        self.graph.validate()
        if self.rank < 1:
            raise ValueError("rank must be >= 1")
        object.__setattr__(self, "transitions", tuple(self.transitions))
        if len(self.transitions) != self.graph.m:
            raise ValueError("%d transitions for %d edges"
                             % (len(self.transitions), self.graph.m))
        for e, u in enumerate(self.transitions):
            if u.rows != self.rank or u.cols != self.rank:
                raise DimensionMismatch("transition %d has shape %dx%d, rank is %d"
                                        % (e, u.rows, u.cols, self.rank))
        # invertibility check doubles as the inverse cache
        object.__setattr__(self, "_inverses",
                           tuple(_inverse(u) for u in self.transitions))

    @classmethod
    def trivial(cls, g: DualGraph, r: int) -> LocalSystem:
        """All transitions identity."""
        return cls(g, r, tuple(Mat.identity(r) for _ in range(g.m)))

    @classmethod
    def unipotent_rank2(cls, g: DualGraph,
                        gvals: Sequence[int | str | Fraction]) -> LocalSystem:
        """Rank-2 system with transition [[1, g_e], [0, 1]] on each edge."""
        values = vec(gvals)
        if len(values) != g.m:
            raise ValueError("%d cocycle values for %d edges" % (len(values), g.m))
        return cls(g, 2, tuple(Mat.from_rows([[1, ge], [0, 1]]) for ge in values))

    def transition_inverse(self, e: int) -> Mat:
        return self._inverses[e]  # type: ignore[attr-defined]

    def transport(self, e: int, v: Sequence[Fraction], reverse: bool = False) -> Vector:
        """Move a vector across edge e: target frame to source frame along
        the canonical orientation, the inverse against it."""
        u = self.transition_inverse(e) if reverse else self.transitions[e]
        return u.mul_vec(v)

    def extend_by_trivial(self, c: EdgeCochain) -> LocalSystem:
        """Rank r+1 system with block transitions [[U_e, c_e], [0, 1]].

        The first r coordinates embed this system; the last coordinate
        projects onto the trivial rank-1 system.
        """
        if c.system != self:
            raise ValueError("cochain is valued in a different system")
        transitions = []
        for e, u in enumerate(self.transitions):
            transitions.append(Mat.block([
                [u, Mat.column(c.values[e])],
                [Mat.zeros(1, self.rank), Mat.identity(1)],
            ]))
        return LocalSystem(self.graph, self.rank + 1, tuple(transitions))

    def reorient_edge(self, e: int) -> LocalSystem:
        """Equivalent system with edge e's canonical orientation swapped;
        the stored transition becomes its inverse."""
        transitions = (self.transitions[:e] + (self.transition_inverse(e),)
                       + self.transitions[e + 1:])
        return LocalSystem(self.graph.reorient_edge(e), self.rank, transitions)

    def is_unipotent_upper_triangular(self) -> bool:
        return all(u[i, j] == (1 if i == j else 0)
                   for u in self.transitions
                   for i in range(self.rank) for j in range(i + 1))


@dataclass(frozen=True)
class EdgeCochain:
    """One r-vector per edge, in the source-vertex frame."""

    system: LocalSystem
    values: tuple[Vector, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(vec(v) for v in self.values))
        if len(self.values) != self.system.graph.m:
            raise ValueError("%d edge values for %d edges"
                             % (len(self.values), self.system.graph.m))
        for e, v in enumerate(self.values):
            if len(v) != self.system.rank:
                raise DimensionMismatch("value on edge %d has length %d, rank is %d"
                                        % (e, len(v), self.system.rank))

    @classmethod
    def from_values(cls, system: LocalSystem,
                    values: Iterable[Sequence[int | str | Fraction]]) -> EdgeCochain:
        return cls(system, tuple(vec(v) for v in values))

    def reversed_value(self, e: int) -> Vector:
        """The cochain value seen from the target end: -(U_e^-1 value)."""
        return tuple(-x for x in self.system.transport(e, self.values[e], reverse=True))
