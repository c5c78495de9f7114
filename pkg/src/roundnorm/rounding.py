"""Integer rounding properties and max-flow min-cut, decided two ways.

Three systems are covered, each defined by comparing an integer program
with the rounded optimum of its linear relaxation for every integral
right-hand side a:

* ``leq1``  (x >= 0; xA <= 1):  ceil(min{<y,1> : y >= 0, Ay >= a})
  equals min{<y,1> : Ay >= a, y in N^q};
* ``geq1``  (x >= 0; xA >= 1):  floor(max{<y,1> : y >= 0, Ay <= a})
  equals max{<y,1> : Ay <= a, y in N^q};
* ``eq1``   (xA <= 1, equality duals):  ceil(min{<y,1> : y >= 0,
  Ay = a}) equals min{<y,1> : Ay = a, y in N^q}, an infeasible integer
  side counting as failure.

Each property has a theorem route (a normality or Hilbert-basis test on
the matching monomial algebra) and an optional brute-force oracle route
sweeping right-hand sides over a box.  The two routes must agree; a
disagreement is raised as a soundness failure, never reported as a
result.  The oracle exists to catch implementation bugs — the theorem
route is the authoritative verdict, and an oracle "true" alone only
means "no counterexample up to the box".

LP optima are computed by exact vertex enumeration (the feasible
regions are tiny), integer optima by memoized residual recursion over
the probe box, and the general-purpose entry points ``lp_opt_exact`` /
``ip_opt_exact`` expose the same machinery for one-off programs.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .algebras import build_algebra, is_normal
from .errors import DomainError, ResourceCapError, SoundnessError
from .exact import (
    ExactMatrix,
    as_int,
    dot,
    kernel_basis,
    torsion_of_quotient,
)
from .hilbert import is_hilbert_basis
from .polyhedra import (
    PolyhedronRep,
    _ensure_both,
    cone_double_description,
    covering_polyhedron,
    polytope_P,
)

SYSTEMS = ("leq1", "geq1", "eq1")
LP_DIM_CAP = 12


@dataclass(frozen=True)
class LpResult:
    """Exact outcome of a linear program: status is one of 'optimal',
    'infeasible', 'unbounded'; value and point are set when optimal."""

    status: str
    value: Fraction | None = None
    point: tuple[Fraction, ...] | None = None


@dataclass(frozen=True)
class IpResult:
    """Exact outcome of an integer program over a derived search box."""

    status: str
    value: int | None = None
    point: tuple[int, ...] | None = None
    search_bound: tuple[tuple[int, int], ...] | None = None


@dataclass(frozen=True)
class RoundingVerdict:
    """Verdict of one rounding property with its evidence.

    ``counterexample`` is (a, lp_value, rounded_lp, ip_value) for the
    first failing right-hand side; ``theorem_witness`` is the Hilbert
    witness behind a negative theorem verdict.  The last three fields
    report the subring-normality/torsion decomposition of the ``eq1``
    criterion (None for the other systems): a true ``eq1`` forces a
    normal column subring and torsion-free column quotient, and the
    converse holds when all column sums agree.
    """

    system: str
    theorem_route: bool
    theorem_witness: tuple[int, ...] | None = None
    oracle_route: bool | None = None
    oracle_box: int | None = None
    counterexample: tuple | None = None
    kf_normal: bool | None = None
    torsion_free: bool | None = None
    column_sums_uniform: bool | None = None


@dataclass(frozen=True)
class MfmcVerdict:
    """Max-flow min-cut verdict: integral covering polyhedron plus a
    normal Rees algebra, with the optional LP/IP oracle sweep."""

    verdict: bool
    covering_integral: bool
    rees_normal: bool
    fractional_vertex: tuple[Fraction, ...] | None = None
    rees_witness: tuple[int, ...] | None = None
    oracle_route: bool | None = None
    oracle_box: int | None = None
    counterexample: tuple | None = None


# ---------------------------------------------------------------------------
# exact LP / IP entry points


def lp_opt_exact(objective, constraints, equalities=(), sense="min") -> LpResult:
    """Exact rational optimum of <objective, x> over a constraint system.

    ``constraints`` holds pairs (normal, bound) meaning <normal,x> <=
    bound; ``equalities`` likewise with equality.  The feasible region's
    lineality space is split off first (the objective must vanish on it,
    otherwise the program is unbounded whenever feasible), then the
    pointed remainder is enumerated by double description.
    """
    if sense not in ("min", "max"):
        raise DomainError(f"unknown sense {sense!r}")
    c = tuple(Fraction(x) for x in objective)
    d = len(c)
    if d > LP_DIM_CAP:
        raise ResourceCapError("lp_dim_cap", LP_DIM_CAP, f"{d} variables")
    rows = []
    for n, b in constraints:
        rows.append((tuple(Fraction(x) for x in n), Fraction(b)))
    for n, b in equalities:
        nn = tuple(Fraction(x) for x in n)
        rows.append((nn, Fraction(b)))
        rows.append((tuple(-x for x in nn), -Fraction(b)))
    live = []
    for n, b in rows:
        if all(x == 0 for x in n):
            if b < 0:
                return LpResult("infeasible")
            continue
        live.append((n, b))
    if not live:
        if all(x == 0 for x in c):
            return LpResult("optimal", Fraction(0), (Fraction(0),) * d)
        return LpResult("unbounded")

    lin = kernel_basis(tuple(n for n, _ in live))
    drift = any(dot(c, l) != 0 for l in lin)
    if lin:
        basis = kernel_basis(lin)
    else:
        basis = tuple(tuple(Fraction(1 if j == i else 0) for j in range(d))
                      for i in range(d))
    m = len(basis)
    if m == 0:
        # the whole space is lineality and every constraint is trivial
        return LpResult("optimal", Fraction(0), (Fraction(0),) * d)
    zcons = [(tuple(dot(n, w) for w in basis), b) for n, b in live]
    rep = _ensure_both(PolyhedronRep.from_inequalities(zcons, m))
    if rep.is_empty:
        return LpResult("infeasible")
    if drift:
        return LpResult("unbounded")
    cz = tuple(dot(c, w) for w in basis)
    better = (lambda v, best: v > best) if sense == "max" else (lambda v, best: v < best)
    for r in rep.rays:
        v = dot(cz, r)
        if (sense == "max" and v > 0) or (sense == "min" and v < 0):
            return LpResult("unbounded")
    best = None
    best_z = None
    for vert in rep.vertices:
        v = dot(cz, vert)
        if best is None or better(v, best) or (v == best and vert < best_z):
            best, best_z = v, vert
    point = tuple(sum(z * w[i] for z, w in zip(best_z, basis))
                  for i in range(d))
    return LpResult("optimal", best, point)


class _BoxUnderivable(Exception):
    def __init__(self, variable):
        self.variable = variable


def _enumerate_ip(objective, constraints, equalities, sense, cutoff,
                  point_cap) -> IpResult:
    """Enumerate integer points of the (possibly cutoff-restricted) region.

    Raises _BoxUnderivable when some variable stays LP-unbounded.
    """
    c = tuple(Fraction(x) for x in objective)
    d = len(c)
    rows = list(constraints)
    if cutoff is not None:
        if sense == "min":
            rows.append((c, Fraction(cutoff)))
        else:
            rows.append((tuple(-x for x in c), -Fraction(cutoff)))
    bounds = []
    for j in range(d):
        e = tuple(Fraction(1 if i == j else 0) for i in range(d))
        hi = lp_opt_exact(e, rows, equalities, "max")
        lo = lp_opt_exact(e, rows, equalities, "min")
        if hi.status == "infeasible" or lo.status == "infeasible":
            return IpResult("infeasible")
        if hi.status != "optimal" or lo.status != "optimal":
            raise _BoxUnderivable(j)
        bounds.append((math.ceil(lo.value), math.floor(hi.value)))
    total = 1
    for lo, hi in bounds:
        total *= max(0, hi - lo + 1)
        if total > point_cap:
            raise ResourceCapError("ip_point_cap", point_cap)
    ineqs = [(tuple(Fraction(x) for x in n), Fraction(b)) for n, b in rows]
    eqs = [(tuple(Fraction(x) for x in n), Fraction(b)) for n, b in equalities]
    best = None
    best_y = None
    better = (lambda v, b: v > b) if sense == "max" else (lambda v, b: v < b)
    for y in itertools.product(*(range(lo, hi + 1) for lo, hi in bounds)):
        if any(dot(n, y) > b for n, b in ineqs):
            continue
        if any(dot(n, y) != b for n, b in eqs):
            continue
        v = dot(c, y)
        if best is None or better(v, best) or (v == best and y < best_y):
            best, best_y = v, y
    if best is None:
        return IpResult("infeasible", search_bound=tuple(bounds))
    return IpResult("optimal", as_int(best) if best.denominator == 1 else best,
                    best_y, tuple(bounds))


IP_CUTOFF_MARGIN_CAP = 128


def ip_opt_exact(objective, constraints, equalities=(), sense="min",
                 integrality="all", value_cutoff=None,
                 point_cap: int = 200_000) -> IpResult:
    """Exact integer optimum by bounded exhaustive enumeration.

    The search box comes from per-variable LP extremes.  When the region
    is unbounded but the objective is not, an objective cutoff at the
    rounded relaxation value (widened by doubling, up to a fixed margin)
    closes the search: any point found inside the cutoff is a true
    optimum, since a better point would lie inside it as well.  An
    explicit ``value_cutoff`` is instead added as a hard constraint.
    A region that stays unbounded in some variable even under the
    cutoff, or yields no point within the margin, is a resource error.
    The box actually enumerated is recorded.
    """
    if integrality != "all":
        raise DomainError("only fully integral programs are supported")
    if sense not in ("min", "max"):
        raise DomainError(f"unknown sense {sense!r}")
    relax = lp_opt_exact(objective, constraints, equalities, sense)
    if relax.status == "infeasible":
        return IpResult("infeasible")
    if relax.status == "unbounded":
        # no finite search box exists, and integer feasibility of an
        # unbounded region is not decidable by enumeration
        raise ResourceCapError(
            "ip_box", None, "objective is unbounded on the linear relaxation")
    try:
        return _enumerate_ip(objective, constraints, equalities, sense,
                             value_cutoff, point_cap)
    except _BoxUnderivable as u:
        if value_cutoff is not None:
            raise ResourceCapError(
                "ip_box", None,
                f"variable {u.variable} is unbounded even under the cutoff")
    base = math.ceil(relax.value) if sense == "min" else math.floor(relax.value)
    margin = 0
    while margin <= IP_CUTOFF_MARGIN_CAP:
        cutoff = base + margin if sense == "min" else base - margin
        try:
            res = _enumerate_ip(objective, constraints, equalities, sense,
                                cutoff, point_cap)
        except _BoxUnderivable as u:
            raise ResourceCapError(
                "ip_box", None,
                f"variable {u.variable} is unbounded even under an objective cutoff")
        if res.status == "optimal":
            return res
        margin = 1 if margin == 0 else 2 * margin
    raise ResourceCapError(
        "ip_cutoff", IP_CUTOFF_MARGIN_CAP,
        "no integer point within the cutoff margin of the relaxation value")


# ---------------------------------------------------------------------------
# per-matrix sweep data


class _SweepData:
    """Precomputed LP vertex data and memoized IP tables for one matrix.

    The LP optima come from fixed vertex lists: the packing value
    max{<a,x> : x in P} for ``leq1`` (equal by duality to the covering
    minimum the definition uses), min{<a,x> : x in Q(A)} for ``geq1``,
    and max{<a,x> : xA <= 1} over the lineality-reduced dual region for
    ``eq1``.  The IP optima come from residual recursions over the
    columns, memoized across the whole sweep.
    """

    def __init__(self, matrix: ExactMatrix):
        matrix.require_input_matrix()
        self.matrix = matrix
        self.n = matrix.rows
        self.cols = tuple(tuple(as_int(x) for x in col)
                          for col in matrix.columns())
        self._p_verts = None
        self._q_verts = None
        self._dual_region = None
        self._member_data = None
        self._cover_memo: dict = {}
        self._pack_memo: dict = {}
        self._exact_memo: dict = {}

    # -- LP side ------------------------------------------------------------

    def lp_leq1(self, a) -> Fraction:
        """min{<y,1> : y >= 0, Ay >= a} = max{<a,x> : x in P}; finite
        for every a since P is a polytope containing the origin."""
        if self._p_verts is None:
            rep = _ensure_both(polytope_P(self.matrix))
            if rep.rays:
                raise SoundnessError("P is expected to be bounded")
            self._p_verts = rep.vertices
        return max(dot(a, v) for v in self._p_verts)

    def lp_geq1(self, a) -> Fraction:
        """max{<y,1> : y >= 0, Ay <= a} = min{<a,x> : x in Q(A)}."""
        if self._q_verts is None:
            rep = _ensure_both(covering_polyhedron(self.matrix))
            self._q_verts = rep.vertices
        return min(dot(a, v) for v in self._q_verts)

    def q_vertices(self):
        self.lp_geq1((0,) * self.n)
        return self._q_verts

    def eq1_feasible(self, a) -> bool:
        """Is a in cone(columns), i.e. is the equality LP feasible?"""
        if self._member_data is None:
            self._member_data = cone_double_description(self.cols, self.n)
        rays, lin = self._member_data
        return (all(dot(r, a) >= 0 for r in rays)
                and all(dot(l, a) == 0 for l in lin))

    def lp_eq1(self, a) -> Fraction:
        """min{<y,1> : y >= 0, Ay = a} = max{<a,x> : xA <= 1} for
        feasible a, optimized over the lineality-reduced dual region."""
        if self._dual_region is None:
            lin = kernel_basis(self.cols)
            basis = kernel_basis(lin) if lin else tuple(
                tuple(1 if j == i else 0 for j in range(self.n))
                for i in range(self.n))
            zcons = [(tuple(dot(v, w) for w in basis), 1) for v in self.cols]
            rep = _ensure_both(PolyhedronRep.from_inequalities(zcons, len(basis)))
            self._dual_region = (basis, rep)
        basis, rep = self._dual_region
        cz = tuple(dot(a, w) for w in basis)
        for r in rep.rays:
            if dot(cz, r) > 0:
                raise SoundnessError(
                    "equality LP reported unbounded for a feasible right-hand side")
        return max(dot(cz, v) for v in rep.vertices)

    # -- IP side ------------------------------------------------------------

    def ip_cover(self, a) -> int:
        """min{<y,1> : Ay >= a, y in N^q} via residual recursion."""
        key = tuple(x if x > 0 else 0 for x in a)
        memo = self._cover_memo
        known = memo.get(key)
        if known is not None:
            return known
        if all(x == 0 for x in key):
            memo[key] = 0
            return 0
        best = None
        for v in self.cols:
            nxt = tuple(x - y if x > y else 0 for x, y in zip(key, v))
            if nxt == key:
                continue  # column does not reduce the residual demand
            cand = 1 + self.ip_cover(nxt)
            if best is None or cand < best:
                best = cand
        if best is None:
            raise SoundnessError("covering recursion stalled on " + repr(key))
        memo[key] = best
        return best

    def ip_pack(self, a) -> int:
        """max{<y,1> : Ay <= a, y in N^q} via residual recursion."""
        key = tuple(a)
        memo = self._pack_memo
        known = memo.get(key)
        if known is not None:
            return known
        best = 0
        for v in self.cols:
            if all(x >= y for x, y in zip(key, v)):
                nxt = tuple(x - y for x, y in zip(key, v))
                cand = 1 + self.ip_pack(nxt)
                if cand > best:
                    best = cand
        memo[key] = best
        return best

    def ip_exact(self, a) -> int | None:
        """min{<y,1> : Ay = a, y in N^q}, or None when infeasible."""
        key = tuple(a)
        memo = self._exact_memo
        if key in memo:
            return memo[key]
        if all(x == 0 for x in key):
            memo[key] = 0
            return 0
        best = None
        for v in self.cols:
            if all(x >= y for x, y in zip(key, v)):
                sub = self.ip_exact(tuple(x - y for x, y in zip(key, v)))
                if sub is not None and (best is None or 1 + sub < best):
                    best = 1 + sub
        memo[key] = best
        return best


def _probe_box(n: int, box: int):
    return itertools.product(range(box + 1), repeat=n)


# ---------------------------------------------------------------------------
# the rounding verdicts


def irp_check(system: str, matrix: ExactMatrix,
              oracle_box: int | None = None) -> RoundingVerdict:
    """Decide one integer rounding property by theorem and oracle.

    Theorem routes: ``leq1`` is the normality of the down-set subring,
    ``geq1`` the normality of the Rees algebra, ``eq1`` the Hilbert
    basis property of the lifted columns plus (0,1) in the full
    lattice.  The oracle (when a box is given) compares rounded LP
    optima with integer optima for every a in [0, box]^n and must agree
    with the theorem route.
    """
    if system not in SYSTEMS:
        raise DomainError(f"unknown system {system!r}; expected one of {SYSTEMS}")
    matrix.require_input_matrix()

    kf_normal = torsion_free = uniform = None
    if system == "leq1":
        cert = is_normal(build_algebra("S_downset", matrix))
    elif system == "geq1":
        cert = is_normal(build_algebra("rees", matrix))
    else:
        spec = build_algebra("kft_t", matrix)
        cert = is_hilbert_basis(spec.generator_vectors, spec.ambient_dim,
                                lattice=None)
        kf_normal = is_normal(build_algebra("kf", matrix)).verdict
        torsion_free = torsion_of_quotient(matrix.entries) == ()
        sums = {sum(as_int(x) for x in col) for col in matrix.columns()}
        uniform = len(sums) == 1
        if cert.verdict and not (kf_normal and torsion_free):
            raise SoundnessError(
                "eq1 rounding holds but the column subring is not normal "
                "or the column quotient has torsion")
        if uniform and cert.verdict != (kf_normal and torsion_free):
            raise SoundnessError(
                "uniform column sums: eq1 rounding must match normal + torsion-free")

    theorem = cert.verdict
    oracle = None
    counterexample = None
    if oracle_box is not None:
        data = _SweepData(matrix)
        oracle = True
        for a in _probe_box(matrix.rows, oracle_box):
            if system == "leq1":
                lp = data.lp_leq1(a)
                rounded = math.ceil(lp)
                ip = data.ip_cover(a)
            elif system == "geq1":
                lp = data.lp_geq1(a)
                rounded = math.floor(lp)
                ip = data.ip_pack(a)
            else:
                if not data.eq1_feasible(a):
                    continue
                lp = data.lp_eq1(a)
                rounded = math.ceil(lp)
                ip = data.ip_exact(a)
            if ip != rounded:
                oracle = False
                counterexample = (a, lp, rounded, ip)
                break
        if oracle != theorem:
            raise SoundnessError(
                f"route disagreement for {system}: theorem {theorem}, "
                f"oracle {oracle} (box {oracle_box}, "
                f"counterexample {counterexample}, witness {cert.witness})")

    return RoundingVerdict(
        system=system, theorem_route=theorem, theorem_witness=cert.witness,
        oracle_route=oracle, oracle_box=oracle_box,
        counterexample=counterexample, kf_normal=kf_normal,
        torsion_free=torsion_free, column_sums_uniform=uniform)


def _minimal_covers(cols, n, cap_vertices: int = 20):
    """Minimal 0/1 covers: subsets meeting the support of every column."""
    if n > cap_vertices:
        raise ResourceCapError("cover_enum_cap", cap_vertices, f"{n} vertices")
    supports = [frozenset(i for i in range(n) if v[i]) for v in cols]
    covers = []
    for bits in range(1 << n):
        s = frozenset(i for i in range(n) if bits >> i & 1)
        if all(s & sup for sup in supports):
            covers.append(s)
    minimal = [s for s in covers
               if not any(t < s for t in covers)]
    return minimal


def mfmc_check(matrix: ExactMatrix,
               oracle_box: int | None = None) -> MfmcVerdict:
    """Max-flow min-cut: an integral covering polyhedron and a normal
    Rees algebra; oracle route checks both sides of the covering /
    packing duality for integral optima on every probed a."""
    matrix.require_input_matrix()
    if not matrix.is_zero_one():
        raise DomainError("max-flow min-cut applies to 0/1 incidence matrices")
    data = _SweepData(matrix)
    frac = None
    for v in data.q_vertices():
        if any(x.denominator != 1 for x in v):
            frac = v
            break
    covering_integral = frac is None
    cert = is_normal(build_algebra("rees", matrix))
    verdict = covering_integral and cert.verdict

    oracle = None
    counterexample = None
    if oracle_box is not None:
        oracle = True
        covers = _minimal_covers(data.cols, data.n)
        for a in _probe_box(data.n, oracle_box):
            lp = data.lp_geq1(a)
            cover_ip = min(sum(a[i] for i in s) for s in covers)
            pack_ip = data.ip_pack(a)
            if not (cover_ip == lp == pack_ip):
                oracle = False
                counterexample = (a, lp, cover_ip, pack_ip)
                break
        if oracle != verdict:
            raise SoundnessError(
                f"max-flow min-cut route disagreement: theorem {verdict}, "
                f"oracle {oracle} (counterexample {counterexample})")

    return MfmcVerdict(
        verdict=verdict, covering_integral=covering_integral,
        rees_normal=cert.verdict, fractional_vertex=frac,
        rees_witness=cert.witness, oracle_route=oracle,
        oracle_box=oracle_box, counterexample=counterexample)
