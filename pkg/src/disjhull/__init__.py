"""Exact convex hulls of polytope disjunctions in the extended space.

Given polytopes P_0, ..., P_n in R^d and binary indicators z, this
package constructs and certifies the convex hull of the lifted polytopes
in R^{d+n}: full optimal big-M liftings, complete facet enumeration by
the fixed-dimension signature algorithm, MIR cut derivation, the
common-constraint-matrix condition Phi, and a brute-force hull oracle.
All arithmetic is exact rational.
"""

from ._kernels import IMPLEMENTATION as kernel_implementation
from .cuts import aggregate, derive_reflected_simplex_cuts, involute, mir
from .families import (
    PhiReport,
    check_phi,
    common_matrix_hull,
    gen_hyperrect,
    gen_padded_reflected_simplex,
    gen_reflected_simplex,
    gen_rhs_perturbation,
    hyperrect_hull,
    reflected_simplex_hull,
)
from .hullenum import (
    Signature,
    compare,
    enumerate_facets,
    enumerate_signatures,
    oracle_hull,
)
from .lifting import (
    DisjunctionInstance,
    LiftingResult,
    full_lifting_system,
    lift_from_p0,
    lift_from_pk,
)
from .lp import BasicPartition, LpOutcome, enumerate_basic_partitions, maximize
from .polyops import (
    FacetEntry,
    FacetList,
    HPolytope,
    LinearInequality,
    canonicalize,
    extreme_points,
    face_tight_points,
    is_bounded,
    is_full_dimensional,
    remove_redundant,
)
from .ratgeom import LiftedPoint, affine_rank, hyperplane_through, solve_linear_system

__version__ = "0.1.0"

__all__ = [
    "BasicPartition",
    "DisjunctionInstance",
    "FacetEntry",
    "FacetList",
    "HPolytope",
    "LiftedPoint",
    "LiftingResult",
    "LinearInequality",
    "LpOutcome",
    "PhiReport",
    "Signature",
    "affine_rank",
    "aggregate",
    "canonicalize",
    "check_phi",
    "common_matrix_hull",
    "compare",
    "derive_reflected_simplex_cuts",
    "enumerate_basic_partitions",
    "enumerate_facets",
    "enumerate_signatures",
    "extreme_points",
    "face_tight_points",
    "full_lifting_system",
    "gen_hyperrect",
    "gen_padded_reflected_simplex",
    "gen_reflected_simplex",
    "gen_rhs_perturbation",
    "hyperplane_through",
    "hyperrect_hull",
    "involute",
    "is_bounded",
    "is_full_dimensional",
    "kernel_implementation",
    "lift_from_p0",
    "lift_from_pk",
    "maximize",
    "mir",
    "oracle_hull",
    "reflected_simplex_hull",
    "remove_redundant",
    "solve_linear_system",
    "__version__",
]
