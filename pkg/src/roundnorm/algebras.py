"""The seven monomial algebras attached to a nonnegative integer matrix.

Each algebra is represented by its exponent data only: a generator set
in the right ambient dimension together with the lattice its normality
question lives in.  A monomial algebra generated by monomials x^a is
normal exactly when the generating exponents reach every lattice point
of their cone, so every normality verdict here reduces to a Hilbert
basis test.

The seven kinds, for A with columns v_1..v_q in N^n:

==============  ==========================================  ==========
kind            generators                                  lattice
==============  ==========================================  ==========
rees            e_1..e_n, (v_1,1)..(v_q,1)                  Z^(n+1)
extended_rees   the above plus (0,-1)                       Z^(n+1)
kf              v_1..v_q                                    Z{v_j}
kft             (v_1,1)..(v_q,1)                            Z{(v_j,1)}
kft_t           (v_1,1)..(v_q,1), (0,1)                     Z{gens}
S_downset       (w,1) for every 0 <= w <= some v_j          Z^(n+1)
ehrhart         intensional: lattice points of dilations    Z^(n+1)
==============  ==========================================  ==========

The Ehrhart ring is not materialized by generators: it is normal by
construction, and the only question ever asked of it is whether it
coincides with the kind ``kft_t`` subring, which is a Hilbert basis
condition on that subring's generators in the full lattice.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .exact import ExactMatrix, as_int
from .hilbert import HilbertCertificate, is_hilbert_basis
from .polyhedra import DOWNSET_CAP_DEFAULT, downset_vectors

ALGEBRA_KINDS = (
    "rees", "extended_rees", "kf", "kft", "kft_t", "S_downset", "ehrhart",
)


@dataclass(frozen=True)
class AlgebraSpec:
    """Exponent data of one monomial algebra.

    ``lattice`` is None for the full integer lattice of the ambient
    space, otherwise a spanning set of the relevant sublattice.
    """

    kind: str
    source_matrix: ExactMatrix
    ambient_dim: int
    generator_vectors: tuple[tuple[int, ...], ...]
    lattice: tuple[tuple[int, ...], ...] | None


def _columns(matrix: ExactMatrix):
    matrix.require_input_matrix()
    return tuple(tuple(as_int(x) for x in col) for col in matrix.columns())


def build_algebra(kind: str, matrix: ExactMatrix,
                  downset_cap: int = DOWNSET_CAP_DEFAULT) -> AlgebraSpec:
    """Generator set and lattice of one of the seven algebra kinds."""
    if kind not in ALGEBRA_KINDS:
        raise DomainError(
            f"unknown algebra kind {kind!r}; expected one of {ALGEBRA_KINDS}")
    cols = _columns(matrix)
    n = matrix.rows
    units = tuple(tuple(1 if j == i else 0 for j in range(n + 1))
                  for i in range(n))
    lifted = tuple(v + (1,) for v in cols)
    zero_one = (0,) * n + (1,)

    if kind == "rees":
        gens, lattice, dim = units + lifted, None, n + 1
    elif kind == "extended_rees":
        gens = units + lifted + ((0,) * n + (-1,),)
        lattice, dim = None, n + 1
    elif kind == "kf":
        gens, lattice, dim = cols, cols, n
    elif kind == "kft":
        gens, lattice, dim = lifted, lifted, n + 1
    elif kind == "kft_t":
        gens = lifted + (zero_one,)
        lattice, dim = gens, n + 1
    elif kind == "S_downset":
        downs = downset_vectors(matrix, downset_cap)
        gens = tuple(w + (1,) for w in downs)
        lattice, dim = None, n + 1
    else:  # ehrhart: intensional, cone data only
        gens = lifted + (zero_one,)
        lattice, dim = None, n + 1

    return AlgebraSpec(kind=kind, source_matrix=matrix, ambient_dim=dim,
                       generator_vectors=gens, lattice=lattice)


def is_normal(spec: AlgebraSpec) -> HilbertCertificate:
    """Does the generator set reach every lattice point of its cone?

    The Ehrhart kind is normal by construction and returns a bare
    positive certificate.
    """
    if spec.kind == "ehrhart":
        return HilbertCertificate(verdict=True)
    return is_hilbert_basis(spec.generator_vectors, spec.ambient_dim,
                            spec.lattice)


def extended_rees_normal(matrix: ExactMatrix) -> bool:
    """Normality of the extended algebra R[It, 1/t].

    Adjoining the inverse grading variable does not change normality,
    so this is answered by the plain ``rees`` check.
    """
    return is_normal(build_algebra("rees", matrix)).verdict


def ehrhart_equality(matrix: ExactMatrix) -> bool:
    """Does the kind ``kft_t`` subring equal the Ehrhart ring of P?

    P = conv(v_1..v_q, 0).  Equality holds exactly when the generators
    {(v_j,1), (0,1)} form a Hilbert basis with respect to the full
    integer lattice (not merely the lattice they span).
    """
    spec = build_algebra("kft_t", matrix)
    return is_hilbert_basis(spec.generator_vectors, spec.ambient_dim,
                            lattice=None).verdict
