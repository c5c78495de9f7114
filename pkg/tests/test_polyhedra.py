"""Double description, antiblockers/blockers, maximal-vertex data."""

import itertools
import random
from fractions import Fraction

import pytest

import oracles
from roundnorm.clutters import cycle_graph, incidence_matrix
from roundnorm.errors import DomainError
from roundnorm.exact import ExactMatrix, dot
from roundnorm.polyhedra import (
    PolyhedronRep,
    antiblocker_from_matrix,
    blocker_from_matrix,
    covering_polyhedron,
    dd_convert,
    downset_vectors,
    is_integral_polytope,
    lattice_points,
    maximal_vertex_data,
    polytope_P,
)

I2 = ExactMatrix(((1, 0), (0, 1)))
C3 = incidence_matrix(cycle_graph(3))
C4 = incidence_matrix(cycle_graph(4))
C5 = incidence_matrix(cycle_graph(5))


def e(i, n):
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def random_input_matrix(rng, max_n=5, max_q=5, max_entry=3):
    while True:
        n = rng.randint(1, max_n)
        q = rng.randint(1, max_q)
        rows = [[rng.randint(0, max_entry) for _ in range(q)] for _ in range(n)]
        m = ExactMatrix.from_rows(rows)
        try:
            return m.require_input_matrix()
        except DomainError:
            continue


class TestDoubleDescription:
    def test_unit_square_vertices(self):
        rep = dd_convert(polytope_P(I2))
        assert set(rep.vertices) == {
            (Fraction(0), Fraction(0)), e(0, 2), e(1, 2),
            (Fraction(1), Fraction(1))}
        assert rep.rays == ()

    def test_pentagon_vertex_list(self):
        rep = dd_convert(polytope_P(C5))
        half = (Fraction(1, 2),) * 5
        pairs = {(1, 0, 1, 0, 0), (1, 0, 0, 1, 0), (0, 1, 0, 1, 0),
                 (0, 1, 0, 0, 1), (0, 0, 1, 0, 1)}
        expected = {(Fraction(0),) * 5, half}
        expected |= {e(i, 5) for i in range(5)}
        expected |= {tuple(Fraction(x) for x in p) for p in pairs}
        assert set(rep.vertices) == expected
        assert len(rep.vertices) == 12

    def test_covering_triangle(self):
        rep = dd_convert(covering_polyhedron(C3))
        expected = {(Fraction(1, 2),) * 3}
        expected |= {tuple(Fraction(x) for x in p)
                     for p in ((1, 1, 0), (1, 0, 1), (0, 1, 1))}
        assert set(rep.vertices) == expected
        assert set(rep.rays) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}

    def test_empty_is_a_value(self):
        rep = dd_convert(PolyhedronRep.from_inequalities(
            [((1,), 0), ((-1,), -1)], 1))
        assert rep.is_empty and rep.vertices == ()

    def test_inconsistent_two_sided_rep_rejected(self):
        bad = PolyhedronRep(
            ambient_dim=1, inequalities=(((1,), 1), ((-1,), 0)),
            vertices=((Fraction(2),),), has_h=True, has_v=True)
        with pytest.raises(DomainError, match="inconsistent"):
            dd_convert(bad)

    def test_round_trip_random(self):
        rng = random.Random(2601)
        for _ in range(100):
            m = random_input_matrix(rng)
            v1 = dd_convert(polytope_P(m))
            h = dd_convert(PolyhedronRep.from_generators(
                v1.vertices, v1.rays, v1.ambient_dim))
            v2 = dd_convert(PolyhedronRep.from_inequalities(
                h.inequalities, h.ambient_dim))
            assert (v2.vertices, v2.rays) == (v1.vertices, v1.rays)

    def test_vertices_against_subset_enumeration(self):
        rng = random.Random(2602)
        for _ in range(25):
            m = random_input_matrix(rng, max_n=3, max_q=3)
            rep = dd_convert(polytope_P(m))
            cons = [(tuple(-x for x in e(j, m.rows)), 0) for j in range(m.rows)]
            cons += [(col, 1) for col in m.columns()]
            assert set(rep.vertices) == oracles.brute_vertices(cons, m.rows)


class TestAntiblocker:
    def test_identity(self):
        rep = antiblocker_from_matrix(I2)
        both = dd_convert(rep)
        assert set(both.vertices) == {(Fraction(0),) * 2, e(0, 2), e(1, 2)}
        assert set(both.inequalities) == {
            ((-1, 0), 0), ((0, -1), 0), ((1, 1), 1)}

    def test_pentagon_normals_are_maximal_vertices(self):
        rep = dd_convert(antiblocker_from_matrix(C5))
        mvd = maximal_vertex_data(dd_convert(polytope_P(C5)))
        expected = {(tuple(-x for x in e(j, 5)), 0) for j in range(5)}
        for m in mvd:
            scaled = tuple(x * m.denominator for x in m.vertex)
            expected.add((tuple(int(x) for x in scaled), m.denominator))
        assert set(rep.inequalities) == expected
        assert len(mvd) == 6

    def test_one_dimensional(self):
        a2 = ExactMatrix(((2,),))
        assert downset_vectors(a2) == ((0,), (1,), (2,))
        rep = dd_convert(antiblocker_from_matrix(a2))
        assert set(rep.vertices) == {(Fraction(0),), (Fraction(2),)}


class TestBlocker:
    def test_single_column(self):
        rep = dd_convert(blocker_from_matrix(ExactMatrix(((1,), (1,)))))
        assert rep.vertices == ((Fraction(1), Fraction(1)),)
        assert set(rep.rays) == {(1, 0), (0, 1)}

    def test_triangle(self):
        rep = dd_convert(blocker_from_matrix(C3))
        expected = {tuple(Fraction(x) for x in p)
                    for p in ((1, 1, 0), (0, 1, 1), (1, 0, 1))}
        assert set(rep.vertices) == expected
        assert set(rep.rays) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}

    def test_square_grid_membership(self):
        rep = dd_convert(blocker_from_matrix(C4))
        qverts = dd_convert(covering_polyhedron(C4)).vertices
        grid = itertools.product([Fraction(k, 2) for k in range(0, 7)], repeat=4)
        for z in grid:
            in_h = all(dot(nrm, z) <= b for nrm, b in rep.inequalities)
            defining = all(dot(z, x) >= 1 for x in qverts)
            assert in_h == defining, z


class TestMaximalVertexData:
    def test_pentagon(self):
        mvd = maximal_vertex_data(dd_convert(polytope_P(C5)))
        assert sorted(m.denominator for m in mvd) == [1, 1, 1, 1, 1, 2]
        half = [m for m in mvd if m.denominator == 2]
        assert half[0].vertex == (Fraction(1, 2),) * 5
        assert half[0].coordinate_sum == Fraction(5, 2)
        ones = sorted(m.vertex for m in mvd if m.denominator == 1)
        assert all(sum(v) == 2 for v in ones)

    def test_identity(self):
        mvd = maximal_vertex_data(dd_convert(polytope_P(I2)))
        assert [(m.vertex, m.denominator) for m in mvd] == [
            ((Fraction(1), Fraction(1)), 1)]

    def test_half_interval(self):
        mvd = maximal_vertex_data(dd_convert(polytope_P(ExactMatrix(((2,),)))))
        assert [(m.vertex, m.denominator, m.coordinate_sum) for m in mvd] == [
            ((Fraction(1, 2),), 2, Fraction(1, 2))]

    def test_unbounded_rejected(self):
        with pytest.raises(DomainError):
            maximal_vertex_data(dd_convert(covering_polyhedron(C3)))


class TestIntegrality:
    def test_unit_square(self):
        assert is_integral_polytope(dd_convert(polytope_P(I2))) is True

    def test_pentagon(self):
        assert is_integral_polytope(dd_convert(polytope_P(C5))) is False

    def test_square_cycle(self):
        assert is_integral_polytope(dd_convert(polytope_P(C4))) is True


class TestLatticePoints:
    def test_unit_square(self):
        pts = lattice_points(polytope_P(I2))
        assert pts == ((0, 0), (0, 1), (1, 0), (1, 1))

    def test_unbounded_rejected(self):
        with pytest.raises(DomainError):
            lattice_points(covering_polyhedron(C3))


class TestDualityEquations:
    def test_antiblocker_of_downset_recovers_p(self):
        rng = random.Random(2603)
        for _ in range(30):
            m = random_input_matrix(rng, max_n=4, max_q=3, max_entry=2)
            w = downset_vectors(m)
            back = dd_convert(PolyhedronRep.from_inequalities(
                [(tuple(-x for x in e(j, m.rows)), 0) for j in range(m.rows)]
                + [(wi, 1) for wi in w if any(wi)], m.rows))
            p = dd_convert(polytope_P(m))
            assert set(back.vertices) == set(p.vertices), m

    def test_downset_polytope_equals_its_down_closure_in_orthant(self):
        rng = random.Random(2604)
        for _ in range(20):
            m = random_input_matrix(rng, max_n=4, max_q=3, max_entry=2)
            n = m.rows
            w = downset_vectors(m)
            hull = dd_convert(PolyhedronRep.from_generators(w, [], n))
            closure = dd_convert(PolyhedronRep.from_generators(
                w, [tuple(-(i == j) for j in range(n)) for i in range(n)], n))
            box = [max(v[i] for v in w) + 1 for i in range(n)]
            for p in itertools.product(*(range(b + 1) for b in box)):
                in_hull = all(dot(nrm, p) <= b for nrm, b in hull.inequalities)
                in_closure = all(
                    dot(nrm, p) <= b for nrm, b in closure.inequalities)
                assert in_hull == (all(x >= 0 for x in p) and in_closure), (m, p)
