"""Exact decision procedures for integer rounding properties and normality.

The package decides, in exact rational arithmetic, questions about the
linear systems attached to a nonnegative integer matrix A: whether the
covering, packing and equality programs round, whether the associated
monomial algebras are normal, whether max-flow-min-cut holds, and what
the canonical module and a-invariant of the down-set subring look like.
Clutters and graphs provide the combinatorial front end; a double
description kernel and Hilbert basis engine do the geometry underneath.
"""

from .algebras import ALGEBRA_KINDS, AlgebraSpec, build_algebra, is_normal
from .canonical import (
    CanonicalModuleReport,
    DualConeReport,
    GorensteinReport,
    canonical_via_dual_cone,
    complete_intersection_check,
    downset_canonical_module,
    gorenstein_conjecture_scan,
    gorenstein_tests,
)
from .clutters import (
    Clutter,
    Graph,
    alexander_dual,
    complement_cover_duality,
    clutter_from_matrix,
    complete_bipartite_graph,
    complete_graph,
    connected_graphs,
    cycle_graph,
    disjoint_union,
    dual_matrix,
    graph_dual_normality,
    graphic_matroid_clutter,
    incidence_matrix,
    matroid_basis_clutter,
    path_graph,
    primitive_cycles,
    random_clutter,
    uniform_matroid_clutter,
    verify_duality_theorem,
)
from .errors import DomainError, ParseError, ResourceCapError, SoundnessError
from .exact import (
    ExactMatrix,
    ExactScalar,
    LatticeNormalForm,
    smith_normal_form,
    torsion_of_quotient,
)
from .formats import InputDocument, format_input, parse_input
from .hilbert import (
    ConeSpec,
    HilbertCertificate,
    hilbert_basis,
    integer_decomposition_check,
    is_hilbert_basis,
    semigroup_membership,
)
from .polyhedra import (
    MaximalVertexData,
    PolyhedronRep,
    antiblocker_from_matrix,
    blocker_from_matrix,
    covering_polyhedron,
    dd_convert,
    is_integral_polytope,
    maximal_vertex_data,
    polytope_P,
)
from .rounding import (
    IpResult,
    LpResult,
    MfmcVerdict,
    RoundingVerdict,
    ip_opt_exact,
    irp_check,
    lp_opt_exact,
    mfmc_check,
)

__version__ = "0.1.0"
