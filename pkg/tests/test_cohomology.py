"""The coboundary map, residue constraints, system matrix and obstruction."""

import random
from fractions import Fraction

from monograph.checks import (random_connected_multigraph, random_rational,
                              random_unipotent_system)
from monograph.cohomology import (coboundary, coboundary_matrix, edge_image,
                                  h0, h1_dim, invariant_cycles_report,
                                  obstruction, residue_constraint_matrix,
                                  residue_kernel, system_matrix)
from monograph.graph import DualGraph, cycle_graph
from monograph.linalg import Mat, Subspace, nullspace, vec
from monograph.localsystem import EdgeCochain, LocalSystem
from monograph.tate import build_tate


def trivial_triangle():
    return LocalSystem.trivial(cycle_graph(3), 1)


def cycle_system(gvals):
    return build_tate(len(gvals), gvals)[1]


class TestCoboundaryMatrix:
    def test_single_edge(self):
        sys = LocalSystem.trivial(DualGraph(2, ((0, 1),)), 1)
        assert coboundary_matrix(sys) == Mat.from_rows([[1, -1]])

    def test_trivial_triangle_is_incidence_transpose(self):
        from monograph.graph import incidence_matrix
        sys = trivial_triangle()
        assert coboundary_matrix(sys) == incidence_matrix(sys.graph).transpose()

    def test_rank2_cycle_relations(self):
        # all six difference relations for g = (1, 2, 4), frozen
        expected = Mat.from_rows([
            [1, 0, -1, -1, 0, 0],
            [0, 1, 0, -1, 0, 0],
            [0, 0, 1, 0, -1, -2],
            [0, 0, 0, 1, 0, -1],
            [1, 0, 0, 0, -1, -4],
            [0, 1, 0, 0, 0, -1],
        ])
        assert coboundary_matrix(cycle_system((1, 2, 4))) == expected


class TestH0:
    def test_trivial_rank1_constants(self):
        rng = random.Random(43)
        for _ in range(10):
            g = random_connected_multigraph(rng, max_vertices=8)
            sys = LocalSystem.trivial(g, 1)
            assert h0(sys) == Subspace.from_vectors(g.n, [[1] * g.n])

    def test_generic_cocycle_one_section(self):
        sys = cycle_system((1, 2, 4))
        assert h0(sys) == Subspace.from_vectors(6, [(1, 0, 1, 0, 1, 0)])

    def test_balanced_cocycle_two_sections(self):
        # 1 + 2 - 3 = 0: the holonomy constraint disappears
        assert h0(cycle_system((1, 2, 3))).dim == 2


class TestH1:
    def test_tree(self):
        path = DualGraph(3, ((0, 1), (1, 2)))
        assert h1_dim(LocalSystem.trivial(path, 1)) == 0

    def test_trivial_triangle(self):
        assert h1_dim(trivial_triangle()) == 1

    def test_generic_cocycle(self):
        assert h1_dim(cycle_system((1, 2, 4))) == 1


class TestResidueConstraints:
    def test_single_edge_forces_zero(self):
        sys = LocalSystem.trivial(DualGraph(2, ((0, 1),)), 1)
        assert residue_constraint_matrix(sys) == Mat.from_rows([[1], [-1]])
        assert residue_kernel(sys) == Subspace.zero(1)

    def test_trivial_triangle_kernel(self):
        assert residue_kernel(trivial_triangle()) == \
            Subspace.from_vectors(3, [(1, 1, -1)])

    def test_rank2_cycle_constraints(self):
        # per-vertex transported sums for g = (1, 2, 4), frozen
        expected = Mat.from_rows([
            [1, 0, 0, 0, 1, 0],
            [0, 1, 0, 0, 0, 1],
            [-1, 1, 1, 0, 0, 0],
            [0, -1, 0, 1, 0, 0],
            [0, 0, -1, 2, -1, 4],
            [0, 0, 0, -1, 0, -1],
        ])
        assert residue_constraint_matrix(cycle_system((1, 2, 4))) == expected


class TestSystemMatrix:
    def test_trivial_triangle_is_laplacian(self):
        from monograph.graph import laplacian
        sys = trivial_triangle()
        assert system_matrix(sys) == laplacian(sys.graph)

    def test_rank2_cycle_entries(self):
        expected = Mat.from_rows([
            [2, 0, -1, -1, -1, -4],
            [0, 2, 0, -1, 0, -1],
            [-1, 1, 2, 0, -1, -2],
            [0, -1, 0, 2, 0, -1],
            [-1, 4, -1, 2, 2, 0],
            [0, -1, 0, -1, 0, 2],
        ])
        assert system_matrix(cycle_system((1, 2, 4))) == expected

    def test_symbolic_pattern_across_instances(self):
        # the matrix is affine in the cocycle: g enters only at the four
        # marked slots, with the reversed-edge values negated
        for g1, g2, g3 in [(1, 1, 1), (2, -5, Fraction(1, 3)), (0, 7, -2)]:
            a = system_matrix(cycle_system((g1, g2, g3)))
            expected = Mat.from_rows([
                [2, 0, -1, -g1, -1, -g3],
                [0, 2, 0, -1, 0, -1],
                [-1, g1, 2, 0, -1, -g2],
                [0, -1, 0, 2, 0, -1],
                [-1, g3, -1, g2, 2, 0],
                [0, -1, 0, -1, 0, 2],
            ])
            assert a == expected

    def test_trivial_rank2_is_two_copies(self):
        # laplacian tensor identity, vertex-major component-minor ordering
        sys = LocalSystem.trivial(cycle_graph(3), 2)
        expected = Mat.from_rows([
            [2, 0, -1, 0, -1, 0],
            [0, 2, 0, -1, 0, -1],
            [-1, 0, 2, 0, -1, 0],
            [0, -1, 0, 2, 0, -1],
            [-1, 0, -1, 0, 2, 0],
            [0, -1, 0, -1, 0, 2],
        ])
        assert system_matrix(sys) == expected

    def test_factors_through_residue_and_coboundary(self):
        rng = random.Random(47)
        for _ in range(25):
            g = random_connected_multigraph(rng, max_vertices=7)
            sys = random_unipotent_system(rng, g, rng.randint(1, 3))
            assert residue_constraint_matrix(sys) @ coboundary_matrix(sys) \
                == system_matrix(sys)


class TestObstruction:
    def test_trivial_rank1_always_zero(self):
        rng = random.Random(53)
        for _ in range(15):
            g = random_connected_multigraph(rng, max_vertices=8)
            sys = LocalSystem.trivial(g, 1)
            assert obstruction(sys) == Subspace.zero(g.m)

    def test_trivial_rank_r_always_zero(self):
        rng = random.Random(59)
        for r in (1, 2, 3):
            g = random_connected_multigraph(rng, max_vertices=6)
            sys = LocalSystem.trivial(g, r)
            assert obstruction(sys).dim == 0

    def test_generic_cocycle_line(self):
        sys = cycle_system((1, 2, 4))
        assert obstruction(sys) == Subspace.from_vectors(6, [(1, 0, 1, 0, -1, 0)])

    def test_balanced_cocycle_zero(self):
        # holonomy 1 + 2 - 3 = 0 kills the obstruction generator
        assert obstruction(cycle_system((1, 2, 3))) == Subspace.zero(6)

    def test_equals_image_of_system_kernel(self):
        rng = random.Random(61)
        for _ in range(20):
            g = random_connected_multigraph(rng, max_vertices=6)
            sys = random_unipotent_system(rng, g, rng.randint(1, 3))
            kernel = nullspace(system_matrix(sys))
            via_kernel = Subspace.from_vectors(
                g.m * sys.rank, [edge_image(sys, k) for k in kernel.vectors()])
            assert via_kernel == obstruction(sys)
            assert obstruction(sys).dim == kernel.dim - h0(sys).dim


class TestInvariantCyclesReport:
    def test_trivial_rank1_is_exact(self):
        rng = random.Random(67)
        for _ in range(10):
            g = random_connected_multigraph(rng, max_vertices=8)
            report = invariant_cycles_report(LocalSystem.trivial(g, 1))
            assert report.exact and report.defect == 0

    def test_generic_cocycle_defect_one(self):
        report = invariant_cycles_report(cycle_system((1, 2, 4)))
        assert not report.exact
        assert report.defect == 1
        assert report.h0_dim == 1 and report.h1_dim == 1

    def test_zero_cocycle_splits(self):
        report = invariant_cycles_report(cycle_system((0, 0, 0)))
        assert report.exact and report.h0_dim == 2

    def test_single_vertex(self):
        sys = LocalSystem.trivial(DualGraph(1, ()), 2)
        report = invariant_cycles_report(sys)
        assert report.h0_dim == 2 and report.h1_dim == 0
        assert report.exact

    def test_euler_characteristic(self):
        rng = random.Random(71)
        for _ in range(20):
            g = random_connected_multigraph(rng, max_vertices=7)
            sys = random_unipotent_system(rng, g, rng.randint(1, 3))
            report = invariant_cycles_report(sys)
            assert report.h0_dim - report.h1_dim == sys.rank * (g.n - g.m)


class TestReorientationInvariance:
    def test_dims_unchanged_under_edge_flip(self):
        rng = random.Random(73)
        for _ in range(15):
            g = random_connected_multigraph(rng, max_vertices=6)
            sys = random_unipotent_system(rng, g, rng.randint(1, 3))
            before = invariant_cycles_report(sys)
            flipped = sys.reorient_edge(rng.randrange(g.m))
            after = invariant_cycles_report(flipped)
            assert (before.h0_dim, before.h1_dim, before.defect) == \
                (after.h0_dim, after.h1_dim, after.defect)


class TestCoboundaryInvariance:
    def test_cohomologous_cochains_same_dims(self):
        # shifting the extension cochain by a coboundary gives an
        # equivalent system: all reported dimensions agree
        rng = random.Random(79)
        for _ in range(12):
            g = random_connected_multigraph(rng, max_vertices=6)
            base = random_unipotent_system(rng, g, rng.randint(1, 2))
            values = [tuple(random_rational(rng) for _ in range(base.rank))
                      for _ in range(g.m)]
            c = EdgeCochain.from_values(base, values)
            vertex_data = vec([random_rational(rng)
                               for _ in range(g.n * base.rank)])
            shift = coboundary(base, vertex_data)
            shifted = EdgeCochain(base, tuple(
                tuple(x + y for x, y in zip(cv, sv))
                for cv, sv in zip(c.values, shift.values)))
            one = invariant_cycles_report(base.extend_by_trivial(c))
            two = invariant_cycles_report(base.extend_by_trivial(shifted))
            assert (one.h0_dim, one.h1_dim, one.defect) == \
                (two.h0_dim, two.h1_dim, two.defect)
