"""Exact double description of rational polyhedra.

The converter is the certified kernel of the package: every cone,
polytope, vertex set and facet list elsewhere is produced by it.  The
algorithm is incremental double description on the homogenization, with
lineality tracked explicitly, adjacency decided by rank, constraints
inserted in lexicographic order, and all output canonicalized (primitive
integer scaling, duplicate-free, lexicographically sorted).

Inequalities are pairs (normal, offset) meaning <normal, x> <= offset.
An empty polyhedron is a value, not an error.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .errors import DomainError
from .exact import (
    ExactMatrix,
    as_int,
    dot,
    int_vector,
    is_integer_vector,
    kernel_basis,
    lcm_of_denominators,
    primitive_vector,
    rank,
    vneg,
    vsub,
)

# ---------------------------------------------------------------------------
# cone-level double description


class _Ray:
    __slots__ = ("vec", "tight")

    def __init__(self, vec, tight):
        self.vec = vec
        self.tight = tight  # bitmask over inserted constraint indices


def _canonical_lineality(vectors):
    """Echelonized primitive basis of a lineality space, deterministic."""
    if not vectors:
        return ()
    basis = []
    rows = [ [Fraction(x) for x in v] for v in vectors ]
    n = len(rows[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return tuple(primitive_vector(tuple(row)) for row in rows[:r])


def cone_double_description(normals, dim):
    """Extreme rays and lineality of {x : <h, x> >= 0 for all h}.

    Returns (rays, lineality): rays are primitive integer tuples, extreme
    modulo the lineality space; both lists canonically sorted.  Insertion
    follows lexicographic order of the (deduplicated, primitivized)
    normals so the run is reproducible bit for bit.
    """
    cleaned = []
    for h in normals:
        p = primitive_vector(h)
        if any(x != 0 for x in p):
            cleaned.append(p)
    cleaned = sorted(set(cleaned))

    lineality = [tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)]
    rays: list[_Ray] = []

    for k, h in enumerate(cleaned):
        bit = 1 << k
        lin_vals = [dot(h, l) for l in lineality]
        if any(v != 0 for v in lin_vals):
            i0 = next(i for i, v in enumerate(lin_vals) if v != 0)
            l0, v0 = lineality[i0], lin_vals[i0]
            if v0 < 0:
                l0, v0 = vneg(l0), -v0
            new_lin = []
            for i, l in enumerate(lineality):
                if i == i0:
                    continue
                v = lin_vals[i]
                if v == 0:
                    new_lin.append(l)
                else:
                    new_lin.append(primitive_vector(tuple(v0 * a - v * b for a, b in zip(l, l0))))
            all_prev = bit - 1
            for r in rays:
                v = dot(h, r.vec)
                if v != 0:
                    r.vec = primitive_vector(tuple(v0 * a - v * b for a, b in zip(r.vec, l0)))
                r.tight |= bit
            rays.append(_Ray(l0, all_prev))
            lineality = new_lin
            continue

        pos, zero, neg = [], [], []
        for r in rays:
            v = dot(h, r.vec)
            if v > 0:
                pos.append((r, v))
            elif v < 0:
                neg.append((r, v))
            else:
                zero.append(r)
        if not neg:
            for r in zero:
                r.tight |= bit
            rays = [r for r, _ in pos] + zero
            continue
        needed = dim - len(lineality) - 2
        new_rays = [r for r, _ in pos]
        for r in zero:
            r.tight |= bit
            new_rays.append(r)
        for rp, vp in pos:
            for rn, vn in neg:
                common = rp.tight & rn.tight
                if bin(common).count("1") < max(needed, 0):
                    continue
                tight_normals = [cleaned[c] for c in _bits(common)]
                if rank(tight_normals) != needed:
                    continue
                vec = tuple(vp * b - vn * a for a, b in zip(rp.vec, rn.vec))
                if all(x == 0 for x in vec):
                    continue
                new_rays.append(_Ray(primitive_vector(vec), (common | bit)))
        rays = new_rays

    out_rays = sorted({r.vec for r in rays})
    return tuple(out_rays), _canonical_lineality(lineality)


def _bits(mask):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def cone_dual_rays(generators, dim):
    """Extreme rays + lineality of the dual cone {y : <g, y> >= 0 for all g}."""
    return cone_double_description(generators, dim)


# ---------------------------------------------------------------------------
# polyhedron representation


@dataclass(frozen=True)
class PolyhedronRep:
    """Double-sided description of a rational polyhedron.

    Either side may be absent (empty tuple + flag).  Canonical form:
    inequalities primitive integer, vertices exact rationals, rays
    primitive integer, each list sorted and duplicate-free.
    """

    ambient_dim: int
    inequalities: tuple = ()       # ((normal ints...), offset int)
    vertices: tuple = ()           # tuples of Fraction
    rays: tuple = ()               # tuples of int
    has_h: bool = False
    has_v: bool = False
    is_empty: bool = False

    @classmethod
    def from_inequalities(cls, ineqs, ambient_dim):
        canon = _canonical_inequalities(ineqs, ambient_dim)
        if canon is None:  # a 0 <= negative row: plainly infeasible
            return cls(ambient_dim, inequalities=((tuple([0] * ambient_dim), -1),),
                       has_h=True, is_empty=True)
        return cls(ambient_dim, inequalities=canon, has_h=True)

    @classmethod
    def from_generators(cls, vertices, rays, ambient_dim):
        vs = tuple(sorted({tuple(Fraction(x) for x in v) for v in vertices}))
        rs = tuple(sorted({primitive_vector(r) for r in rays if any(x != 0 for x in r)}))
        if not vs:
            if rs:
                raise DomainError("generator representation with rays but no vertex")
            return cls(ambient_dim, inequalities=((tuple([0] * ambient_dim), -1),),
                       vertices=(), rays=(), has_h=True, has_v=True, is_empty=True)
        return cls(ambient_dim, vertices=vs, rays=rs, has_v=True)


def _canonical_inequalities(ineqs, dim):
    out = set()
    for normal, offset in ineqs:
        if len(normal) != dim:
            raise DomainError("inequality normal has wrong dimension")
        row = tuple(normal) + (offset,)
        mult = lcm_of_denominators(row)
        row = tuple(as_int(x * mult) if isinstance(x, Fraction) else x * mult for x in row)
        p = primitive_vector(row)
        if all(x == 0 for x in p[:-1]):
            if p[-1] < 0:
                return None
            continue  # trivially true, drop
        out.add((p[:-1], p[-1]))
    return tuple(sorted(out))


def dd_convert(rep: PolyhedronRep) -> PolyhedronRep:
    """Complete a one-sided representation; round trips are identities.

    Given H, computes the vertices and extreme rays; given V, computes the
    irredundant inequalities (equalities appear as opposite pairs).  A rep
    carrying both sides is checked for consistency instead.
    """
    if rep.has_h and rep.has_v:
        redo = dd_convert(PolyhedronRep.from_inequalities(rep.inequalities, rep.ambient_dim))
        if (redo.vertices, redo.rays, redo.is_empty) != (rep.vertices, rep.rays, rep.is_empty):
            raise DomainError("inconsistent representation: sides describe different polyhedra")
        return redo
    if rep.has_h:
        return _h_to_v(rep)
    if rep.has_v:
        return _v_to_h(rep)
    raise DomainError("representation has neither side populated")


def _h_to_v(rep: PolyhedronRep) -> PolyhedronRep:
    d = rep.ambient_dim
    if rep.is_empty:
        return PolyhedronRep(d, inequalities=rep.inequalities, has_h=True, has_v=True,
                             is_empty=True)
    normals = [tuple(-x for x in n) + (b,) for n, b in rep.inequalities]
    normals.append(tuple([0] * d) + (1,))  # homogenization: t >= 0
    rays, lin = cone_double_description(normals, d + 1)
    verts, rec = [], []
    for r in rays:
        t = r[-1]
        if t > 0:
            verts.append(tuple(Fraction(x, t) for x in r[:-1]))
        else:
            rec.append(primitive_vector(r[:-1]))
    if not verts:
        return PolyhedronRep(d, inequalities=rep.inequalities, has_h=True, has_v=True,
                             is_empty=True)
    if lin:
        raise DomainError("polyhedron has a nonzero lineality space; "
                          "its vertex form does not exist")
    return PolyhedronRep(
        d,
        inequalities=rep.inequalities,
        vertices=tuple(sorted(set(verts))),
        rays=tuple(sorted(set(rec))),
        has_h=True,
        has_v=True,
    )


def _v_to_h(rep: PolyhedronRep) -> PolyhedronRep:
    d = rep.ambient_dim
    if rep.is_empty or not rep.vertices:
        empty = PolyhedronRep.from_inequalities(((tuple([0] * d), -1),), d)
        return PolyhedronRep(d, inequalities=empty.inequalities, has_h=True, has_v=True,
                             is_empty=True)
    gens = [primitive_vector(tuple(v) + (1,)) for v in rep.vertices]
    gens += [tuple(r) + (0,) for r in rep.rays]
    dual_rays, dual_lin = cone_double_description(gens, d + 1)
    ineqs = []
    for a in dual_lin:
        ineqs.append((vneg(a[:-1]), a[-1]))
        ineqs.append((a[:-1], -a[-1]))
    for a in dual_rays:
        if all(x == 0 for x in a[:-1]):
            continue  # the homogenization artifact 0 <= t
        ineqs.append((vneg(a[:-1]), a[-1]))
    canon = _canonical_inequalities(ineqs, d)
    # recompute the canonical vertex side so non-extreme input generators
    # are dropped and the result is a fixed point of dd_convert
    back = _h_to_v(PolyhedronRep(d, inequalities=canon, has_h=True))
    return back


def lattice_points(rep: PolyhedronRep):
    """All integer points of a bounded polyhedron, lexicographically sorted."""
    rep = _ensure_both(rep)
    if rep.is_empty:
        return ()
    if rep.rays:
        raise DomainError("polyhedron is unbounded")
    d = rep.ambient_dim
    lo = [min(v[i] for v in rep.vertices) for i in range(d)]
    hi = [max(v[i] for v in rep.vertices) for i in range(d)]
    lo = [x.numerator // x.denominator if isinstance(x, Fraction) else x for x in lo]
    hi = [-((-x.numerator) // x.denominator) if isinstance(x, Fraction) else x for x in hi]
    out = []
    point = [0] * d

    def rec(i):
        if i == d:
            p = tuple(point)
            if all(dot(n, p) <= b for n, b in rep.inequalities):
                out.append(p)
            return
        for x in range(lo[i], hi[i] + 1):
            point[i] = x
            rec(i + 1)

    rec(0)
    return tuple(out)


def _ensure_both(rep: PolyhedronRep) -> PolyhedronRep:
    if rep.has_h and rep.has_v:
        return rep
    return dd_convert(rep)


# ---------------------------------------------------------------------------
# the standard constructions from an input matrix


def polytope_P(matrix: ExactMatrix) -> PolyhedronRep:
    """{x >= 0 : xA <= 1}, always a polytope under the input assumptions."""
    matrix.require_input_matrix()
    n = matrix.rows
    ineqs = [(col, 1) for col in matrix.columns()]
    ineqs += [(tuple(-1 if i == j else 0 for j in range(n)), 0) for i in range(n)]
    return dd_convert(PolyhedronRep.from_inequalities(ineqs, n))


def covering_polyhedron(matrix: ExactMatrix) -> PolyhedronRep:
    """Q(A) = {x >= 0 : xA >= 1}; unbounded, recession cone the orthant."""
    matrix.require_input_matrix()
    n = matrix.rows
    ineqs = [(vneg(col), -1) for col in matrix.columns()]
    ineqs += [(tuple(-1 if i == j else 0 for j in range(n)), 0) for i in range(n)]
    return dd_convert(PolyhedronRep.from_inequalities(ineqs, n))


@dataclass(frozen=True)
class MaximalVertexData:
    """A componentwise-maximal vertex with its denominator and coordinate sum.

    ``denominator`` is the unique d making (-d * vertex, d) a primitive
    integer vector, i.e. the lcm of the coordinate denominators.
    """

    vertex: tuple
    denominator: int
    coordinate_sum: Fraction


def maximal_vertex_data(rep: PolyhedronRep) -> tuple[MaximalVertexData, ...]:
    """Componentwise-maximal vertices of a bounded polyhedron.

    The order follows the canonical (lexicographic) vertex order.
    """
    rep = _ensure_both(rep)
    if rep.is_empty:
        raise DomainError("empty polyhedron has no vertices")
    if rep.rays:
        raise DomainError("polyhedron is unbounded")
    verts = rep.vertices
    out = []
    for v in verts:
        if any(w != v and all(a >= b for a, b in zip(w, v)) for w in verts):
            continue
        d = lcm_of_denominators(v)
        scaled = tuple(-d * x for x in v) + (d,)
        prim = primitive_vector(scaled)
        if prim != tuple(as_int(x) for x in scaled):
            raise DomainError("denominator normalization failed; vertex not canonical")
        out.append(MaximalVertexData(vertex=v, denominator=d,
                                     coordinate_sum=sum(v, Fraction(0))))
    return tuple(out)


def is_integral_polytope(rep: PolyhedronRep) -> bool:
    rep = _ensure_both(rep)
    if rep.is_empty:
        raise DomainError("empty polyhedron")
    if rep.rays:
        raise DomainError("polyhedron is unbounded")
    return all(is_integer_vector(v) for v in rep.vertices)


DOWNSET_CAP_DEFAULT = 200_000


def downset_vectors(matrix: ExactMatrix, cap: int = DOWNSET_CAP_DEFAULT):
    """All integer vectors 0 <= w <= some column of A, deduplicated, sorted.

    The size estimate sum_j prod_i (a_ij + 1) is checked against the cap
    before anything is materialized.
    """
    from .errors import ResourceCapError

    matrix.require_input_matrix()
    est = 0
    for col in matrix.columns():
        p = 1
        for x in col:
            p *= as_int(x) + 1
        est += p
    if est > cap:
        raise ResourceCapError("downset_cap", cap, f"estimated down-set size {est}")
    seen = set()
    for col in matrix.columns():
        stack = [()]
        for x in col:
            xi = as_int(x)
            stack = [t + (i,) for t in stack for i in range(xi + 1)]
        seen.update(stack)
    return tuple(sorted(seen))


def antiblocker_from_matrix(matrix: ExactMatrix, cap: int = DOWNSET_CAP_DEFAULT) -> PolyhedronRep:
    """Antiblocking polyhedron: convex hull of the down-set of the columns.

    Certifies the generator-side hull against the inequality description
    {x >= 0 : <x, l> <= 1 for every maximal vertex l of P}; disagreement
    would be an internal soundness failure.
    """
    from .errors import SoundnessError

    n = matrix.rows
    w = downset_vectors(matrix, cap)
    hull = dd_convert(PolyhedronRep.from_generators(w, (), n))
    data = maximal_vertex_data(polytope_P(matrix))
    ineqs = [(tuple(x * m.denominator for x in m.vertex), m.denominator) for m in data]
    ineqs += [(tuple(-1 if i == j else 0 for j in range(n)), 0) for i in range(n)]
    byineq = dd_convert(PolyhedronRep.from_inequalities(ineqs, n))
    if (hull.vertices, hull.rays, hull.is_empty) != (byineq.vertices, byineq.rays, byineq.is_empty):
        raise SoundnessError("antiblocker: generator and inequality descriptions disagree")
    return hull


def blocker_from_matrix(matrix: ExactMatrix) -> PolyhedronRep:
    """Blocking polyhedron: the orthant plus the convex hull of the columns."""
    matrix.require_input_matrix()
    n = matrix.rows
    cols = [int_vector(c) for c in matrix.columns()]
    rays = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    return dd_convert(PolyhedronRep.from_generators(cols, rays, n))
