"""Exact scalar, vector and lattice arithmetic.

Everything downstream (cones, Hilbert bases, rounding verdicts) reduces
to predicates over integers and rationals, so this module is the only
arithmetic layer: plain ``int``, ``fractions.Fraction``, tuples for
vectors, tuples of tuples for matrices.  No floating point exists
anywhere in a decision path.

All values are immutable after construction; every function is pure, so
the whole package is safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import DomainError

# A scalar in this package is an int or a Fraction.  Fraction already
# guarantees the canonical form (reduced, positive denominator).
ExactScalar = Fraction


# ---------------------------------------------------------------------------
# vectors


def dot(u, v):
    """Exact inner product of two equal-length vectors."""
    return sum(a * b for a, b in zip(u, v, strict=True))


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vneg(u):
    return tuple(-a for a in u)


def vscale(c, u):
    return tuple(c * a for a in u)


def is_zero_vector(u) -> bool:
    return all(a == 0 for a in u)


def as_int(x) -> int:
    """Coerce an exact scalar known to be integral; reject anything else."""
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    raise DomainError(f"expected an integer value, got {x!r}")


def is_integer_vector(u) -> bool:
    return all(isinstance(a, int) or (isinstance(a, Fraction) and a.denominator == 1) for a in u)


def int_vector(u) -> tuple[int, ...]:
    return tuple(as_int(a) for a in u)


def lcm_of_denominators(u) -> int:
    out = 1
    for a in u:
        if isinstance(a, Fraction):
            out = lcm(out, a.denominator)
    return out


def primitive_vector(u) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers, preserving direction.

    The zero vector stays zero.  The sign is preserved, not normalized:
    direction matters for rays and for inequality normals.
    """
    mult = lcm_of_denominators(u)
    ints = [as_int(a * mult) if isinstance(a, Fraction) else a * mult for a in u]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g == 0:
        return tuple(ints)
    return tuple(a // g for a in ints)


# ---------------------------------------------------------------------------
# dense rational linear algebra (small sizes; clarity over asymptotics)


def mat_mul(a, b):
    bt = list(zip(*b))
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def mat_vec(a, v):
    return tuple(dot(row, v) for row in a)


def identity_matrix(n: int):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(a):
    return tuple(zip(*a))


def det(rows) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(map(as_int, r)) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank(rows) -> int:
    """Rank of a rational matrix."""
    if not rows:
        return 0
    a = [[Fraction(x) for x in r] for r in rows]
    m, n = len(a), len(a[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c]
        a[r] = [x / inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == m:
            break
    return r


def solve_linear(rows, rhs):
    """One exact solution of ``rows @ x = rhs``, or None if inconsistent.

    Underdetermined systems get free variables pinned to zero, which keeps
    the output deterministic.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    a = [[Fraction(x) for x in rows[i]] + [Fraction(rhs[i])] for i in range(m)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c]
        a[r] = [x / inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if a[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = a[i][n]
    return tuple(x)


def kernel_basis(rows):
    """Primitive integer basis of the right kernel of a rational matrix.

    Deterministic: reduced row echelon form with free variables taken in
    column order, each basis vector scaled primitive with its leading
    (free-position) entry positive.
    """
    if not rows:
        return ()
    m, n = len(rows), len(rows[0])
    a = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c]
        a[r] = [x / inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -a[i][fc]
        basis.append(primitive_vector(tuple(v)))
    return tuple(basis)


def invert_unimodular(rows):
    """Inverse of a square integer matrix with determinant +-1."""
    n = len(rows)
    d = det(rows)
    if d not in (1, -1):
        raise DomainError("matrix is not unimodular")
    cols = []
    for j in range(n):
        e = tuple(1 if i == j else 0 for i in range(n))
        sol = solve_linear(rows, e)
        cols.append(int_vector(sol))
    return tuple(zip(*cols))


# ---------------------------------------------------------------------------
# the public matrix type


@dataclass(frozen=True)
class ExactMatrix:
    """Immutable dense matrix of exact scalars.

    ``entries`` is a tuple of row tuples.  Columns of an input matrix are
    the exponent vectors everything else in the package is built from.
    """

    entries: tuple[tuple, ...]

    @classmethod
    def from_rows(cls, rows) -> "ExactMatrix":
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise DomainError("matrix rows must be nonempty and of equal length")
        norm = tuple(
            tuple(x if isinstance(x, (int, Fraction)) else Fraction(x) for x in r) for r in rows
        )
        return cls(norm)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(r[j] for r in self.entries)

    def columns(self):
        return tuple(zip(*self.entries)) if self.entries else ()

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(tuple(zip(*self.entries)))

    def is_integer(self) -> bool:
        return all(is_integer_vector(r) for r in self.entries)

    def is_zero_one(self) -> bool:
        return all(x in (0, 1) for r in self.entries for x in r)

    def require_input_matrix(self) -> "ExactMatrix":
        """Validate the standing input assumptions: entries are nonnegative
        integers and no row or column is identically zero."""
        for i, r in enumerate(self.entries):
            for j, x in enumerate(r):
                if not (isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1)):
                    raise DomainError(f"entry ({i},{j}) is not an integer")
                if x < 0:
                    raise DomainError(f"entry ({i},{j}) is negative")
        for i, r in enumerate(self.entries):
            if all(x == 0 for x in r):
                raise DomainError(f"row {i} is zero")
        for j in range(self.cols):
            if all(r[j] == 0 for r in self.entries):
                raise DomainError(f"column {j} is zero")
        return self


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class LatticeNormalForm:
    """Diagonalization ``left @ matrix @ right == diagonal`` with both
    transforms unimodular and the diagonal entries forming a divisibility
    chain d1 | d2 | ... (zeros trailing)."""

    diagonal: tuple[int, ...]
    left: ExactMatrix
    right: ExactMatrix


def _pivot_select(a, k, n, m):
    """Smallest |entry| among nonzero entries of the trailing submatrix,
    ties broken by lexicographically least (row, col)."""
    best = None
    for i in range(k, n):
        for j in range(k, m):
            if a[i][j] != 0:
                key = (abs(a[i][j]), i, j)
                if best is None or key < best:
                    best = key
    if best is None:
        return None
    return best[1], best[2]


def smith_normal_form(matrix) -> LatticeNormalForm:
    """Smith normal form of an integer matrix, with transforms.

    Deterministic by construction: the pivot is always the entry of
    smallest absolute value in the working submatrix, ties broken by
    least (row, col) position.
    """
    if isinstance(matrix, ExactMatrix):
        ent = matrix.entries
    else:
        ent = tuple(tuple(r) for r in matrix)
    n = len(ent)
    m = len(ent[0]) if n else 0
    a = [[as_int(x) for x in r] for r in ent]
    left = [list(r) for r in identity_matrix(n)]
    right = [list(r) for r in identity_matrix(m)]

    def row_op(i, j, q):  # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        left[i] = [x - q * y for x, y in zip(left[i], left[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in a:
            r[i] -= q * r[j]
        for r in right:
            r[i] -= q * r[j]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in right:
            r[i], r[j] = r[j], r[i]

    def row_negate(i):
        a[i] = [-x for x in a[i]]
        left[i] = [-x for x in left[i]]

    k = 0
    while k < min(n, m):
        pos = _pivot_select(a, k, n, m)
        if pos is None:
            break
        while True:
            i, j = pos
            if (i, j) != (k, k):
                if i != k:
                    row_swap(k, i)
                if j != k:
                    col_swap(k, j)
            p = a[k][k]
            dirty = False
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    row_op(i, k, a[i][k] // p)
                    if a[i][k] != 0:
                        dirty = True
            for j in range(k + 1, m):
                if a[k][j] != 0:
                    col_op(j, k, a[k][j] // p)
                    if a[k][j] != 0:
                        dirty = True
            if dirty:
                pos = _pivot_select(a, k, n, m)
                continue
            # pivot must divide the whole remaining submatrix
            bad = None
            for i in range(k + 1, n):
                for j in range(k + 1, m):
                    if a[i][j] % p != 0:
                        bad = (i, j)
                        break
                if bad:
                    break
            if bad is None:
                break
            # fold the offending row into row k and keep reducing
            row_op(k, bad[0], -1)
            pos = _pivot_select(a, k, n, m)
        if a[k][k] < 0:
            row_negate(k)
        k += 1

    diag = tuple(a[i][i] if i < m else 0 for i in range(min(n, m)))
    return LatticeNormalForm(
        diagonal=diag,
        left=ExactMatrix(tuple(tuple(r) for r in left)),
        right=ExactMatrix(tuple(tuple(r) for r in right)),
    )


def torsion_of_quotient(matrix) -> tuple[int, ...]:
    """Invariant factors > 1 of Z^n modulo the column lattice of the matrix.

    The trivial factors (ones) and the free part (zeros) are dropped, so an
    empty result means the quotient is torsion-free.
    """
    nf = smith_normal_form(matrix)
    return tuple(d for d in nf.diagonal if d > 1)


# ---------------------------------------------------------------------------
# Hermite form (column style) and sublattices


def column_hermite_form(matrix):
    """Lower-triangular column Hermite form of a nonsingular integer matrix.

    Returns H with positive diagonal and the same column lattice as the
    input.  Used for enumerating coset representatives: the box
    ``0 <= c_i < H[i][i]`` hits every residue class exactly once.
    """
    ent = matrix.entries if isinstance(matrix, ExactMatrix) else matrix
    n = len(ent)
    a = [[as_int(ent[i][j]) for j in range(len(ent[0]))] for i in range(n)]
    m = len(a[0])

    def cswap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]

    def cop(i, j, q):  # col_i -= q * col_j
        for r in a:
            r[i] -= q * r[j]

    piv = 0
    for row in range(n):
        # gcd the row tail into the pivot column
        while True:
            nz = [j for j in range(piv, m) if a[row][j] != 0]
            if not nz:
                break
            jmin = min(nz, key=lambda j: (abs(a[row][j]), j))
            if jmin != piv:
                cswap(piv, jmin)
            if a[row][piv] < 0:
                for r in a:
                    r[piv] = -r[piv]
            done = True
            for j in range(piv + 1, m):
                if a[row][j] != 0:
                    cop(j, piv, a[row][j] // a[row][piv])
                    if a[row][j] != 0:
                        done = False
            if done:
                break
        if piv < m and a[row][piv] != 0:
            # reduce earlier columns against this pivot for canonical form
            for j in range(piv):
                q = a[row][j] // a[row][piv]
                if q:
                    cop(j, piv, q)
            piv += 1
    return tuple(tuple(r) for r in a)


class Sublattice:
    """Full-column-rank integer lattice with exact membership tests.

    Membership is decided through the Smith normal form of the basis
    matrix: x is in the lattice iff the transformed coordinates divide out.
    """

    def __init__(self, basis_vectors, ambient_dim: int):
        self.ambient_dim = ambient_dim
        self.basis = tuple(int_vector(v) for v in basis_vectors)
        if not self.basis:
            raise DomainError("sublattice needs at least one basis vector")
        mat = tuple(zip(*self.basis))  # columns are the basis vectors
        self.rank = rank(mat)
        nf = smith_normal_form(mat)
        self._left = nf.left.entries
        self._diag = nf.diagonal

    def contains(self, v) -> bool:
        if len(v) != self.ambient_dim:
            raise DomainError("dimension mismatch")
        w = mat_vec(self._left, v)
        for i, x in enumerate(w):
            d = self._diag[i] if i < len(self._diag) else 0
            if d == 0:
                if x != 0:
                    return False
            elif x % d != 0:
                return False
        return True

    def multiple_order(self, v) -> int:
        """Least k >= 1 with k*v in the lattice; DomainError if none exists."""
        w = mat_vec(self._left, v)
        k = 1
        for i, x in enumerate(w):
            d = self._diag[i] if i < len(self._diag) else 0
            if d == 0:
                if x != 0:
                    raise DomainError("vector is not in the rational span of the lattice")
            elif x % d != 0:
                g = gcd(x % d, d)
                k = lcm(k, d // g)
        return k
