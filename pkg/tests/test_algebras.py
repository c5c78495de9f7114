"""Monomial-algebra generator sets and normality decisions."""

import itertools
import random

import pytest

from roundnorm.algebras import (
    ALGEBRA_KINDS,
    build_algebra,
    ehrhart_equality,
    extended_rees_normal,
    is_normal,
)
from roundnorm.clutters import (
    Graph,
    connected_graphs,
    cycle_graph,
    disjoint_union,
    incidence_matrix,
)
from roundnorm.errors import DomainError
from roundnorm.exact import ExactMatrix, dot
from roundnorm.polyhedra import cone_double_description

C3 = incidence_matrix(cycle_graph(3))
C4 = incidence_matrix(cycle_graph(4))
C5 = incidence_matrix(cycle_graph(5))
K2 = ExactMatrix(((1,), (1,)))
I3 = ExactMatrix(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
TWO_TRIANGLES = incidence_matrix(disjoint_union(cycle_graph(3), cycle_graph(3)))
TWO_PENTAGONS = incidence_matrix(disjoint_union(cycle_graph(5), cycle_graph(5)))


class TestGeneratorSets:
    def test_rees_of_triangle(self):
        spec = build_algebra("rees", C3)
        assert set(spec.generator_vectors) == {
            (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0),
            (1, 1, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)}
        assert len(spec.generator_vectors) == 6

    def test_downset_of_half_interval(self):
        spec = build_algebra("S_downset", ExactMatrix(((2,),)))
        assert spec.generator_vectors == ((0, 1), (1, 1), (2, 1))

    def test_column_cone_with_unit_of_pentagon(self):
        spec = build_algebra("kft_t", C5)
        assert len(spec.generator_vectors) == 6
        assert spec.ambient_dim == 6
        assert (0, 0, 0, 0, 0, 1) in spec.generator_vectors

    def test_all_kinds_buildable(self):
        for kind in ALGEBRA_KINDS:
            spec = build_algebra(kind, C3)
            assert spec.kind == kind


class TestNormality:
    def test_pentagon_downset_normal(self):
        assert is_normal(build_algebra("S_downset", C5)).verdict is True

    def test_two_pentagons_rees_not_normal(self):
        # all ten vertices at multiplicity one in degree five: the two odd
        # cycles force half-integral edge weights, so no integral lift exists
        cert = is_normal(build_algebra("rees", TWO_PENTAGONS))
        assert cert.verdict is False
        assert cert.witness == (1,) * 10 + (5,)
        self.check_witness_sound(TWO_PENTAGONS, cert.witness)

    def test_two_triangles_rees_not_normal(self):
        cert = is_normal(build_algebra("rees", TWO_TRIANGLES))
        assert cert.verdict is False
        assert cert.witness == (1, 1, 1, 1, 1, 1, 3)
        self.check_witness_sound(TWO_TRIANGLES, cert.witness)

    @staticmethod
    def check_witness_sound(matrix, witness):
        from roundnorm.hilbert import semigroup_membership
        spec = build_algebra("rees", matrix)
        ok, _ = semigroup_membership(witness, spec.generator_vectors)
        assert ok is False

    def test_bipartite_column_algebra_normal(self):
        assert is_normal(build_algebra("kf", C4)).verdict is True


class TestExtendedRees:
    def test_matches_rees_verdicts(self):
        assert extended_rees_normal(C4) is True
        assert extended_rees_normal(K2) is True
        assert extended_rees_normal(TWO_PENTAGONS) is False

    def test_direct_generator_route_agrees(self):
        assert is_normal(build_algebra("extended_rees", C3)).verdict is True


class TestEhrhartEquality:
    def test_square(self):
        assert ehrhart_equality(C4) is True

    def test_triangle(self):
        assert ehrhart_equality(C3) is False

    def test_identity(self):
        assert ehrhart_equality(I3) is True


class TestFreeVariableInvariance:
    def test_uniform_column_sums(self):
        # every tested matrix has constant column sums, the stated hypothesis
        for m in (C3, C4, C5, I3, TWO_TRIANGLES):
            assert len({sum(col) for col in m.columns()}) == 1
            base = build_algebra("kft_t", m)
            verdict = is_normal(base).verdict
            extended = [g + (0,) for g in base.generator_vectors]
            extended.append((0,) * base.ambient_dim + (1,))
            from roundnorm.hilbert import is_hilbert_basis
            # normality lives in the lattice the generators span, for the
            # lifted set just as for the original one
            lifted = is_hilbert_basis(
                extended, ambient_dim=base.ambient_dim + 1, lattice=extended)
            assert lifted.verdict == verdict, m


def brute_rees_normal(matrix):
    """Normality of the Rees generators by zonotope-box enumeration.

    Every cone lattice point reduces, modulo integer multiples of the
    generators, to a residue inside the box [0, sum of generators], so the
    semigroup is saturated iff every cone lattice point in that box is a
    nonnegative integer combination.  Reachability is a breadth-first
    search from the origin; generators are nonnegative, so decompositions
    never leave the box.
    """
    n = matrix.rows
    gens = [tuple(1 if j == i else 0 for j in range(n + 1)) for i in range(n)]
    gens += [tuple(col) + (1,) for col in matrix.columns()]
    dim = n + 1
    box = tuple(sum(g[i] for g in gens) for i in range(dim))
    facets, lineality = cone_double_description(gens, dim)
    assert not lineality

    def in_cone(p):
        return all(dot(f, p) >= 0 for f in facets)

    reachable = {(0,) * dim}
    frontier = [(0,) * dim]
    while frontier:
        p = frontier.pop()
        for g in gens:
            q = tuple(a + b for a, b in zip(p, g))
            if all(a <= b for a, b in zip(q, box)) and q not in reachable:
                reachable.add(q)
                frontier.append(q)
    for p in itertools.product(*(range(b + 1) for b in box)):
        if in_cone(p) and p not in reachable:
            return False, p
    return True, None


class TestBruteForceNormalityAgreement:
    def test_connected_graphs_up_to_five_vertices(self):
        for n in range(2, 6):
            for g in connected_graphs(n):
                if not g.edges:
                    continue
                m = incidence_matrix(g)
                verdict = is_normal(build_algebra("rees", m)).verdict
                brute, _ = brute_rees_normal(m)
                assert verdict == brute, g

    def test_sampled_graphs_with_disconnected_cases(self):
        rng = random.Random(61)
        pairs = list(itertools.combinations(range(1, 6), 2))
        checked = 0
        for _ in range(40):
            k = rng.randint(1, len(pairs))
            edges = rng.sample(pairs, k)
            used = sorted({v for e in edges for v in e})
            relabel = {v: i + 1 for i, v in enumerate(used)}
            g = Graph.from_edges(
                len(used), [(relabel[u], relabel[v]) for u, v in edges])
            m = incidence_matrix(g)
            verdict = is_normal(build_algebra("rees", m)).verdict
            brute, witness = brute_rees_normal(m)
            assert verdict == brute, (g, witness)
            checked += 1
        assert checked == 40

    def test_six_vertex_spot_checks(self):
        c6 = incidence_matrix(cycle_graph(6))
        assert is_normal(build_algebra("rees", c6)).verdict is True
        assert brute_rees_normal(c6)[0] is True
        brute, witness = brute_rees_normal(TWO_TRIANGLES)
        assert brute is False and witness == (1, 1, 1, 1, 1, 1, 3)


class TestDomainErrors:
    def test_zero_column_rejected(self):
        with pytest.raises(DomainError):
            build_algebra("rees", ExactMatrix(((1, 0), (1, 0))))

    def test_unknown_kind_rejected(self):
        with pytest.raises(DomainError):
            build_algebra("weird", C3)
