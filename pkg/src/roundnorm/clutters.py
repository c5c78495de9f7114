"""Clutters, graphs, duals, and matroid bases — the combinatorial front end.

A clutter is a finite vertex set with a family of incomparable edges
(no edge contains another); a graph is the special case of edge size
two.  Vertices are numbered 1..n, matching the text file format, and
edges are kept as lexicographically sorted tuples so every derived
matrix has a deterministic column order.

The operations here produce the incidence matrices consumed by the
algebra and rounding modules and implement the combinatorial duals:
the entrywise complement matrix, the Alexander dual (blocker) of a
clutter, matroid basis clutters, and chordless cycle enumeration.
``verify_duality_theorem`` ties the package together by computing five
independently defined conditions that are provably equivalent and
insisting that they agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebras import build_algebra, is_normal
from .errors import DomainError, ResourceCapError, SoundnessError
from .exact import ExactMatrix, as_int
from .hilbert import is_hilbert_basis
from .rounding import irp_check

GRAPH_ENUM_CAP = 6
COVER_ENUM_CAP = 20
MATROID_ENUM_CAP = 1_000_000


@dataclass(frozen=True)
class Clutter:
    """Vertex set 1..vertex_count with pairwise incomparable edges."""

    vertex_count: int
    edges: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, vertex_count: int, edges) -> "Clutter":
        if vertex_count < 1:
            raise DomainError("a clutter needs at least one vertex")
        edges = [tuple(e) for e in edges]
        for e in edges:
            for v in e:
                if not (isinstance(v, int) and 1 <= v <= vertex_count):
                    raise DomainError(
                        f"vertex {v!r} outside the range 1..{vertex_count}")
        canon = sorted({tuple(sorted(set(e))) for e in edges})
        sets = [frozenset(e) for e in canon]
        for i, s in enumerate(sets):
            for j, t in enumerate(sets):
                if i != j and s <= t:
                    raise DomainError(
                        f"edge {canon[i]} is contained in edge {canon[j]}")
        return cls(vertex_count, tuple(canon))

    def edge_sets(self):
        return tuple(frozenset(e) for e in self.edges)

    def isolated_vertices(self):
        used = set().union(*map(set, self.edges)) if self.edges else set()
        return tuple(v for v in range(1, self.vertex_count + 1) if v not in used)

    def is_uniform(self) -> bool:
        return len({len(e) for e in self.edges}) <= 1


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 1..vertex_count; edges sorted pairs."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_edges(cls, vertex_count: int, edges) -> "Graph":
        if vertex_count < 1:
            raise DomainError("a graph needs at least one vertex")
        canon = set()
        for e in edges:
            e = tuple(e)
            if len(e) != 2:
                raise DomainError(f"graph edge {e!r} is not a vertex pair")
            u, v = e
            if not (isinstance(u, int) and isinstance(v, int)):
                raise DomainError(f"non-integer edge {e!r}")
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
                raise DomainError(f"edge {e!r} outside the range 1..{vertex_count}")
            canon.add((min(u, v), max(u, v)))
        return cls(vertex_count, tuple(sorted(canon)))

    def clutter(self) -> Clutter:
        return Clutter.from_edges(self.vertex_count, self.edges)

    def adjacency(self):
        nbrs = {v: set() for v in range(1, self.vertex_count + 1)}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return nbrs

    def is_connected(self) -> bool:
        if self.vertex_count == 1:
            return True
        nbrs = self.adjacency()
        seen = {1}
        stack = [1]
        while stack:
            for w in nbrs[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.vertex_count

    def is_bipartite(self) -> bool:
        nbrs = self.adjacency()
        color = {}
        for start in range(1, self.vertex_count + 1):
            if start in color:
                continue
            color[start] = 0
            stack = [start]
            while stack:
                u = stack.pop()
                for w in nbrs[u]:
                    if w not in color:
                        color[w] = 1 - color[u]
                        stack.append(w)
                    elif color[w] == color[u]:
                        return False
        return True

    def has_triangle(self) -> bool:
        sets = self.adjacency()
        return any(sets[u] & sets[v] for u, v in self.edges)

    def isolated_vertices(self):
        return self.clutter().isolated_vertices()

    def complement(self) -> "Graph":
        present = set(self.edges)
        comp = [p for p in itertools.combinations(range(1, self.vertex_count + 1), 2)
                if p not in present]
        return Graph.from_edges(self.vertex_count, comp)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError("a cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(1, n + 1), 2))


def complete_bipartite_graph(m: int, k: int) -> Graph:
    return Graph.from_edges(
        m + k, [(i, m + j) for i in range(1, m + 1) for j in range(1, k + 1)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.vertex_count
    edges = list(g.edges) + [(u + shift, v + shift) for u, v in h.edges]
    return Graph.from_edges(g.vertex_count + h.vertex_count, edges)


# ---------------------------------------------------------------------------
# matrices


def incidence_matrix(c) -> ExactMatrix:
    """Vertex-edge incidence matrix; columns are the characteristic
    vectors of the edges in canonical order."""
    if isinstance(c, Graph):
        c = c.clutter()
    if not c.edges:
        raise DomainError("clutter has no edges")
    rows = [[1 if v + 1 in e else 0 for e in map(set, c.edges)]
            for v in range(c.vertex_count)]
    return ExactMatrix.from_rows(rows)


def dual_matrix(a: ExactMatrix) -> ExactMatrix:
    """Entrywise complement a* = 1 - a; an involution on 0/1 matrices.

    May create zero rows or columns (an edge equal to the whole vertex
    set, or a vertex in every edge); downstream matrix operations
    reject those by name rather than dropping them silently.
    """
    if not a.is_zero_one():
        raise DomainError("entrywise complement applies to 0/1 matrices")
    return ExactMatrix.from_rows(
        tuple(tuple(1 - x for x in row) for row in a.entries))


def clutter_from_matrix(a: ExactMatrix) -> Clutter:
    """The clutter whose edges are the supports of the columns."""
    if not a.is_zero_one():
        raise DomainError("a clutter incidence matrix must be 0/1")
    edges = [tuple(i + 1 for i in range(a.rows) if col[i])
             for col in a.columns()]
    return Clutter.from_edges(a.rows, edges)


# ---------------------------------------------------------------------------
# Alexander dual (blocker)


def _minimal_cover_masks(edge_masks, n: int):
    full = (1 << n) - 1
    covers = []
    for s in range(full + 1):
        if all(s & m for m in edge_masks):
            # minimal iff dropping any single vertex of s breaks some edge:
            # every v in s has an edge meeting s only in v
            if all(any((m & s) == (1 << v) for m in edge_masks)
                   for v in range(n) if s >> v & 1):
                covers.append(s)
    return covers


def alexander_dual(c: Clutter, cap_vertices: int = COVER_ENUM_CAP) -> Clutter:
    """The clutter of all minimal vertex covers (the blocker).

    Computed by full subset enumeration with a local minimality test; an
    involution on clutters.  A clutter without edges dualizes to the
    single empty cover, and a clutter containing the empty edge has no
    covers at all, which makes the double dual land back on the input.
    """
    n = c.vertex_count
    if n > cap_vertices:
        raise ResourceCapError("cover_enum_cap", cap_vertices, f"{n} vertices")
    edge_masks = [sum(1 << (v - 1) for v in e) for e in c.edges]
    if any(m == 0 for m in edge_masks):
        return Clutter.from_edges(n, [])
    covers = _minimal_cover_masks(edge_masks, n)
    return Clutter.from_edges(
        n, [tuple(v + 1 for v in range(n) if s >> v & 1) for s in covers])


# ---------------------------------------------------------------------------
# edge-ideal dualities


@dataclass(frozen=True)
class ComplementCoverReport:
    """Outcome of comparing the blocker ideal of the complement graph
    with the ideal of monomial edge complements."""

    triangle_free: bool
    ideals_equal: bool


def complement_cover_duality(g: Graph) -> ComplementCoverReport:
    """For a graph without isolated vertices: the blocker ideal of the
    complement graph equals the ideal generated by the degree-(n-2)
    edge complements exactly when the graph is triangle free.  Both
    sides are computed independently and the equivalence is enforced.
    """
    isolated = g.isolated_vertices()
    if isolated:
        raise DomainError(f"vertex {isolated[0]} is isolated")
    n = g.vertex_count
    dual = alexander_dual(g.complement().clutter())
    lhs = {frozenset(e) for e in dual.edges}
    full = frozenset(range(1, n + 1))
    rhs = {full - set(e) for e in g.edges}
    triangle_free = not g.has_triangle()
    equal = lhs == rhs
    if triangle_free != equal:
        raise SoundnessError(
            "complement-cover duality disagrees with triangle-freeness: "
            f"triangle_free={triangle_free}, ideals_equal={equal}")
    return ComplementCoverReport(triangle_free=triangle_free, ideals_equal=equal)


@dataclass(frozen=True)
class DualityReport:
    """The five provably equivalent conditions, computed independently.

    rees_normal: the Rees algebra of the edge ideal of A is normal;
    dual_downset_normal: the down-set subring built from the complement
    matrix is normal; gamma_hilbert_basis: the negative unit vectors
    together with the lifted complement columns form a Hilbert basis;
    covering_rounding: the system x >= 0, xA >= 1 has the rounding
    property; dual_packing_rounding: x >= 0, xA* <= 1 has it.
    """

    rees_normal: bool
    dual_downset_normal: bool
    gamma_hilbert_basis: bool
    covering_rounding: bool
    dual_packing_rounding: bool
    verdict: bool


def _require_nonzero_rows_cols(a: ExactMatrix, label: str):
    for i, row in enumerate(a.entries):
        if all(x == 0 for x in row):
            raise DomainError(f"{label} has zero row {i + 1}")
    for j in range(a.cols):
        if all(r[j] == 0 for r in a.entries):
            raise DomainError(f"{label} has zero column {j + 1}")


def verify_duality_theorem(c: Clutter) -> DualityReport:
    """Compute the five equivalent normality/rounding conditions for a
    clutter and its complement matrix; any disagreement is a soundness
    failure, never a reportable outcome."""
    a = incidence_matrix(c)
    a_star = dual_matrix(a)
    _require_nonzero_rows_cols(a, "incidence matrix")
    _require_nonzero_rows_cols(a_star, "complement matrix")
    n = a.rows
    rees_normal = is_normal(build_algebra("rees", a)).verdict
    dual_downset_normal = is_normal(build_algebra("S_downset", a_star)).verdict
    gamma = [tuple(-(i == j) for j in range(n)) + (0,) for i in range(n)]
    gamma += [tuple(as_int(x) for x in col) + (1,) for col in a_star.columns()]
    gamma_hb = is_hilbert_basis(gamma, n + 1).verdict
    covering = irp_check("geq1", a).theorem_route
    dual_packing = irp_check("leq1", a_star).theorem_route
    values = (rees_normal, dual_downset_normal, gamma_hb, covering, dual_packing)
    if len(set(values)) != 1:
        raise SoundnessError(
            "the five equivalent duality conditions disagree: "
            f"rees={rees_normal}, dual_downset={dual_downset_normal}, "
            f"gamma={gamma_hb}, covering={covering}, dual_packing={dual_packing}")
    return DualityReport(*values, verdict=values[0])


@dataclass(frozen=True)
class GraphDualReport:
    rees_edge_ideal: bool
    rees_dual_edge_ideal: bool


def graph_dual_normality(g: Graph) -> GraphDualReport:
    """For a connected graph, Rees normality of the edge ideal and of
    the dual edge ideal (complement columns); provably equal, and the
    equality is enforced."""
    if not g.is_connected():
        raise DomainError("graph is not connected")
    a = incidence_matrix(g)
    a_star = dual_matrix(a)
    left = is_normal(build_algebra("rees", a)).verdict
    right = is_normal(build_algebra("rees", a_star)).verdict
    if left != right:
        raise SoundnessError(
            f"edge ideal and dual edge ideal disagree on Rees normality: "
            f"{left} vs {right}")
    return GraphDualReport(rees_edge_ideal=left, rees_dual_edge_ideal=right)


# ---------------------------------------------------------------------------
# matroid basis clutters


def uniform_matroid_clutter(n: int, k: int) -> Clutter:
    """Bases of the uniform matroid: all k-subsets of 1..n."""
    if not 1 <= k <= n:
        raise DomainError(f"uniform matroid needs 1 <= k <= n, got k={k}, n={n}")
    return Clutter.from_edges(n, itertools.combinations(range(1, n + 1), k))


def graphic_matroid_clutter(g: Graph) -> Clutter:
    """Bases of the graphic matroid: spanning trees, as subsets of the
    edge index set 1..q in canonical edge order."""
    if not g.is_connected():
        raise DomainError("graphic matroid bases need a connected graph")
    q = len(g.edges)
    size = g.vertex_count - 1
    if size == 0:
        raise DomainError("a single vertex has no spanning-tree edges")
    count = 1
    for i in range(size):
        count = count * (q - i) // (i + 1)
    if count > MATROID_ENUM_CAP:
        raise ResourceCapError("matroid_enum_cap", MATROID_ENUM_CAP,
                               f"{count} candidate subsets")
    bases = []
    for subset in itertools.combinations(range(q), size):
        sub = Graph.from_edges(g.vertex_count, [g.edges[i] for i in subset])
        if sub.is_connected():
            bases.append(tuple(i + 1 for i in subset))
    return Clutter.from_edges(q, bases)


def matroid_basis_clutter(kind: str, *, n: int | None = None,
                          k: int | None = None,
                          graph: Graph | None = None) -> Clutter:
    if kind == "uniform":
        if n is None or k is None:
            raise DomainError("uniform matroid needs n and k")
        return uniform_matroid_clutter(n, k)
    if kind == "graphic":
        if graph is None:
            raise DomainError("graphic matroid needs a graph")
        return graphic_matroid_clutter(graph)
    raise DomainError(f"unknown matroid kind {kind!r}")


# ---------------------------------------------------------------------------
# chordless cycles


def primitive_cycles(g: Graph):
    """All chordless cycles of length >= 3, each once, as vertex tuples.

    Canonical form: the cycle starts at its smallest vertex and runs
    toward the smaller of that vertex's two cycle neighbours, which is
    the minimal rotation of the lexicographically smaller orientation.
    A cycle is chordless exactly when the subgraph induced on its
    vertex set has no edges beyond the cycle itself.
    """
    nbrs = g.adjacency()
    out = []

    def extend(path, on_path):
        start = path[0]
        last = path[-1]
        for w in sorted(nbrs[last]):
            if w == start and len(path) >= 3 and path[1] < last:
                induced = sum(1 for u, v in g.edges
                              if u in on_path and v in on_path)
                if induced == len(path):
                    out.append(tuple(path))
            elif w not in on_path and w > start:
                path.append(w)
                on_path.add(w)
                extend(path, on_path)
                path.pop()
                on_path.remove(w)

    for s in range(1, g.vertex_count + 1):
        extend([s], {s})
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# random clutters for seeded sweeps


def random_clutter(rng, max_vertices: int = 5, max_edges: int = 5,
                   attempts: int = 1000) -> Clutter:
    """One random clutter drawn with the given ``random.Random``:
    uniform vertex count, then edge sets resampled until no edge
    contains another (duplicates merge silently)."""
    n = rng.randint(1, max_vertices)
    for _ in range(attempts):
        q = rng.randint(1, max_edges)
        edges = [tuple(sorted(rng.sample(range(1, n + 1),
                                         rng.randint(1, n))))
                 for _ in range(q)]
        try:
            return Clutter.from_edges(n, edges)
        except DomainError:
            continue
    raise ResourceCapError("clutter_sample_cap", attempts,
                           "no antichain found")


# ---------------------------------------------------------------------------
# connected graphs up to isomorphism


def _edge_pairs(n: int):
    return tuple(itertools.combinations(range(1, n + 1), 2))


def connected_graphs(n: int):
    """All connected graphs on n vertices up to isomorphism.

    Edge-set bitmasks are scanned in increasing order; the first mask of
    each isomorphism class is kept and its whole relabeling orbit is
    marked as seen, so the canonical representative is the least mask.
    """
    if not 1 <= n <= GRAPH_ENUM_CAP:
        raise ResourceCapError("graph_enum_cap", GRAPH_ENUM_CAP, f"n={n}")
    pairs = _edge_pairs(n)
    index = {p: i for i, p in enumerate(pairs)}
    perms = list(itertools.permutations(range(1, n + 1)))
    seen = set()
    reps = []
    for mask in range(1 << len(pairs)):
        if mask in seen:
            continue
        g = Graph.from_edges(n, [pairs[i] for i in range(len(pairs))
                                 if mask >> i & 1])
        if not g.is_connected():
            continue
        reps.append(g)
        for perm in perms:
            m = 0
            for u, v in g.edges:
                a, b = perm[u - 1], perm[v - 1]
                m |= 1 << index[(min(a, b), max(a, b))]
            seen.add(m)
    return tuple(reps)
