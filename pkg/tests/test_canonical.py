"""Canonical modules, a-invariants, Gorenstein tests, chordless cycles."""

import itertools
from fractions import Fraction

import pytest

from roundnorm.algebras import build_algebra
from roundnorm.canonical import (
    canonical_via_dual_cone,
    complete_intersection_check,
    downset_canonical_module,
    gorenstein_conjecture_scan,
    gorenstein_tests,
)
from roundnorm.clutters import (
    complete_bipartite_graph,
    connected_graphs,
    cycle_graph,
    incidence_matrix,
    path_graph,
)
from roundnorm.errors import DomainError
from roundnorm.exact import ExactMatrix, dot
from roundnorm.hilbert import semigroup_membership
from roundnorm.polyhedra import PolyhedronRep, dd_convert, lattice_points, polytope_P

C3 = incidence_matrix(cycle_graph(3))
C5 = incidence_matrix(cycle_graph(5))
I2 = ExactMatrix(((1, 0), (0, 1)))
K2 = incidence_matrix(path_graph(2))


class TestPentagonSuite:
    def test_canonical_module(self):
        r = downset_canonical_module(C5)
        assert sorted(m.denominator for m in r.maximal_vertices) == \
            [1, 1, 1, 1, 1, 2]
        half = [m for m in r.maximal_vertices if m.denominator == 2]
        assert half[0].vertex == (Fraction(1, 2),) * 5
        assert r.a_invariant == -3
        assert r.gorenstein is True
        assert r.omega_generators == ((1, 1, 1, 1, 1, 3),)
        assert r.gorenstein_route == "exact-degree-condition"
        assert r.proof_form_agrees is True

    def test_gorenstein_report(self):
        g = gorenstein_tests(C5)
        assert g.gorenstein and g.a_invariant == -3
        assert g.exact_degree_condition is True
        assert g.polytope_integral is False
        assert g.integral_criterion is None
        assert g.integral_vertex_sums_uniform is None


class TestSmallDownsetModules:
    def test_two_free_variables(self):
        r = downset_canonical_module(I2)
        assert [m.vertex for m in r.maximal_vertices] == [(1, 1)]
        assert r.a_invariant == -3
        assert r.omega_generators == ((1, 1, 3),)
        g = gorenstein_tests(I2)
        assert g.polytope_integral is True and g.integral_criterion is True
        assert g.integral_vertex_sums_uniform is True

    def test_single_edge(self):
        r = downset_canonical_module(K2)
        assert sorted(m.vertex for m in r.maximal_vertices) == [(0, 1), (1, 0)]
        assert r.a_invariant == -2
        assert r.omega_generators == ((1, 1, 2),)

    def test_triangle(self):
        r = downset_canonical_module(C3)
        assert r.a_invariant == -2
        assert r.gorenstein is True
        assert r.omega_generators == ((1, 1, 1, 2),)

    def test_square_integral_polytope(self):
        c4 = incidence_matrix(cycle_graph(4))
        r = downset_canonical_module(c4)
        assert r.a_invariant == -3
        g = gorenstein_tests(c4)
        assert g.polytope_integral is True
        assert g.integral_criterion == g.gorenstein


class TestDualConeRoute:
    def test_four_cycle_column_algebra(self):
        gens = ((1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 1, 0, 0),
                (0, 0, 0, 1, 0), (1, 1, 0, 0, 1), (0, 1, 1, 0, 1),
                (0, 0, 1, 1, 1), (1, 0, 0, 1, 1))
        d = canonical_via_dual_cone(gens, (1, 1, 1, 1, -1))
        assert set(d.integral_basis) == {
            (1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 1, 0, 0),
            (0, 0, 0, 1, 0), (0, 0, 0, 0, 1), (0, 1, 0, 1, -1),
            (1, 0, 1, 0, -1)}
        assert d.b_vector == (-1,) * 7
        assert set(n for n, _ in d.omega_inequalities) == set(d.integral_basis)
        assert d.a_invariant == -3
        assert d.minimizer == (1, 1, 1, 1, 1)

    def test_polynomial_rings(self):
        for n in (1, 2, 3, 4):
            basis = tuple(tuple(1 if j == i else 0 for j in range(n))
                          for i in range(n))
            d = canonical_via_dual_cone(basis, (1,) * n)
            assert set(d.integral_basis) == set(basis)
            assert d.a_invariant == -n
            assert d.minimizer == (1,) * n

    def test_plane_fan(self):
        d = canonical_via_dual_cone(((1, 0), (1, 1), (1, 2)), (1, 0))
        assert set(d.integral_basis) == {(0, 1), (1, 0), (2, -1)}
        assert d.a_invariant == -1

    def test_lower_dimensional_cone(self):
        d = canonical_via_dual_cone(((1, 0),), (1, 0))
        assert d.a_invariant == -1
        assert d.minimizer == (1, 0)

    def test_agrees_with_downset_route(self):
        for matrix, expected in ((K2, -2), (I2, -3), (C5, -3)):
            spec = build_algebra("S_downset", matrix)
            grading = (0,) * matrix.rows + (1,)
            d = canonical_via_dual_cone(spec.generator_vectors, grading)
            assert d.a_invariant == expected

    def test_rejects_bad_grading(self):
        with pytest.raises(DomainError, match="grading"):
            canonical_via_dual_cone(((1, 0), (1, 1)), (0, 1))
        with pytest.raises(DomainError):
            canonical_via_dual_cone(
                ((2, 1), (1, 2)), (Fraction(1, 3), Fraction(1, 3)))

    def test_rejects_non_hilbert_basis_generators(self):
        with pytest.raises(DomainError, match="missing"):
            canonical_via_dual_cone(((1, 1), (1, -1)), (1, 0))


class TestOmegaRegionsAgree:
    def test_both_routes_cut_the_same_lattice_points(self):
        # the facet-by-facet description from the maximal vertices and the
        # dual-cone integral-basis description carve out the same interior
        # lattice points, degree slice by degree slice
        for matrix in (K2, I2, C3):
            n = matrix.rows
            report = downset_canonical_module(matrix)
            spec = build_algebra("S_downset", matrix)
            dual = canonical_via_dual_cone(
                spec.generator_vectors, (0,) * n + (1,))
            for b in range(0, 5):
                facet_pts = set(self.slice_points(report, n, b))
                dual_pts = {
                    p for p in self.box_candidates(report, n, b)
                    if all(dot(c, p + (b,)) >= rhs
                           for c, rhs in dual.omega_inequalities)}
                assert facet_pts == dual_pts, (matrix, b)

    @staticmethod
    def box_candidates(report, n, b):
        bound = max(2 * b + 2, 4)
        return [p for p in itertools.product(range(0, bound), repeat=n)]

    @staticmethod
    def slice_points(report, n, b):
        out = []
        for p in TestOmegaRegionsAgree.box_candidates(report, n, b):
            if any(x < 1 for x in p):
                continue
            ok = True
            for m in report.maximal_vertices:
                lhs = m.denominator * b - sum(
                    int(m.denominator * li) * x
                    for li, x in zip(m.vertex, p))
                if lhs < 1:
                    ok = False
                    break
            if ok:
                out.append(p)
        return out


class TestOmegaDecomposition:
    def test_low_degree_points_decompose_over_generators(self):
        for matrix in (K2, I2, C3, incidence_matrix(cycle_graph(4)), C5):
            n = matrix.rows
            report = downset_canonical_module(matrix)
            spec = build_algebra("S_downset", matrix)
            top = -report.a_invariant + 2
            for b in range(1, top + 1):
                ineqs = [(tuple(-(i == j) for j in range(n)), -1)
                         for i in range(n)]
                for m in report.maximal_vertices:
                    row = tuple(int(m.denominator * li) for li in m.vertex)
                    ineqs.append((row, m.denominator * b - 1))
                slice_rep = dd_convert(
                    PolyhedronRep.from_inequalities(ineqs, n))
                if slice_rep.is_empty:
                    continue
                for p in lattice_points(slice_rep):
                    target = p + (b,)
                    assert any(
                        all(x >= 0 for x in
                            (t - g for t, g in zip(target, gen)))
                        and semigroup_membership(
                            tuple(t - g for t, g in zip(target, gen)),
                            spec.generator_vectors)[0]
                        for gen in report.omega_generators), (matrix, target)


class TestGorensteinSufficiency:
    def test_equal_exact_degrees_force_gorenstein(self):
        # when every maximal vertex attains the same exact value of
        # 1/d + |l|, the ring is Gorenstein; sweep the small graphs
        hits = 0
        for n in range(2, 6):
            for g in connected_graphs(n):
                if not g.edges:
                    continue
                m = incidence_matrix(g)
                try:
                    report = downset_canonical_module(m)
                except DomainError:
                    continue
                values = {
                    Fraction(1, mv.denominator) + mv.coordinate_sum
                    for mv in report.maximal_vertices}
                if len(values) == 1:
                    assert report.gorenstein is True, g
                    hits += 1
        assert hits >= 3


class TestCompleteIntersection:
    def test_square(self):
        assert complete_intersection_check(cycle_graph(4)) is True

    def test_two_three_bipartite(self):
        assert complete_intersection_check(complete_bipartite_graph(2, 3)) is False

    def test_path(self):
        assert complete_intersection_check(path_graph(4)) is True

    def test_non_bipartite_rejected(self):
        with pytest.raises(DomainError, match="bipartite"):
            complete_intersection_check(cycle_graph(5))


class TestConjectureScan:
    def test_small_graphs_have_no_mismatches(self):
        records, mismatches = gorenstein_conjecture_scan(4)
        assert len(records) == 9
        assert not mismatches
        assert all(r.denominators_in_one_two for r in records)
