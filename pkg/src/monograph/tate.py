"""End-to-end workbench for the degenerate elliptic curve whose dual graph
is an m-cycle.

The coefficient system is the rank-2 unipotent one determined by one cocycle
value per edge.  The report collects the system matrix with its determinant,
rank and kernel, the edge-space images of the kernel generators, the signed
holonomy of the cocycle around the cycle, and the exactness defect.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cohomology import edge_image, obstruction, system_matrix
from .graph import DualGraph, cycle_graph
from .linalg import Mat, Subspace, Vector, det, nullspace, rank, vec
from .localsystem import LocalSystem


def build_tate(m: int, gvals: Sequence[int | str | Fraction]) -> tuple[DualGraph, LocalSystem]:
    """Cycle graph on m >= 2 vertices with the rank-2 unipotent system."""
    values = vec(gvals)
    if len(values) != m:
        raise ValueError("%d cocycle values for a %d-cycle" % (len(values), m))
    g = cycle_graph(m)
    return g, LocalSystem.unipotent_rank2(g, values)


def holonomy(gvals: Sequence[Fraction]) -> Fraction:
    """Signed sum of the cocycle around the cycle.

    The closing edge is oriented 0 -> m-1, against the direction of travel,
    so it enters with a minus sign: g_0 + ... + g_{m-2} - g_{m-1}.
    """
    return sum(gvals[:-1], Fraction(0)) - gvals[-1]


@dataclass(frozen=True)
class TateReport:
    """Everything the m-cycle example produces, exactly."""

    m: int
    gvals: tuple[Fraction, ...]
    system: Mat
    det: Fraction
    rank: int
    kernel: Subspace
    edge_images: tuple[Vector, ...]
    holonomy: Fraction
    defect: int
    quotient_dim: int


def tate_report(m: int, gvals: Sequence[int | str | Fraction]) -> TateReport:
    """Compute the full report for the m-cycle with the given cocycle.

    The defect is computed from the obstruction space itself; the holonomy
    dichotomy (defect 1 exactly when the holonomy is nonzero) is a property
    of this family, checked in the test suite rather than assumed here.
    The quotient dimension measures the span of the nonzero kernel image
    inside the obstruction space, which is the residue shadow of the
    one-dimensional quotient the example exhibits.
    """
    g, sys = build_tate(m, gvals)
    a = system_matrix(sys)
    kernel = nullspace(a)
    images = tuple(edge_image(sys, k) for k in kernel.vectors())
    blocked = obstruction(sys)
    nonzero = next((img for img in images if any(x != 0 for x in img)), None)
    if nonzero is None:
        quotient_dim = 0
    else:
        line = Subspace.from_vectors(g.m * sys.rank, [nonzero])
        quotient_dim = line.intersect(blocked).dim
    return TateReport(
        m=m,
        gvals=vec(gvals),
        system=a,
        det=det(a),
        rank=rank(a),
        kernel=kernel,
        edge_images=images,
        holonomy=holonomy(vec(gvals)),
        defect=blocked.dim,
        quotient_dim=quotient_dim,
    )
