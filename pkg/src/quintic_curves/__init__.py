"""Exact-arithmetic invariants of rational curves in P^4 and on quintic
threefolds: ideal-sheaf cohomology, bundle splitting types, balanced
normal sheaves, and the dimension counts of the incidence-scheme strata.
"""

from .bundles import (
    SplittingType,
    cotangent_kernel_dim,
    cotangent_splitting,
    generic_cotangent_splitting,
    is_balanced,
    normal_h0,
    normal_in_F_h0,
    normal_in_F_splitting,
    normal_splitting,
    smooth_along,
)
from .cohomology import (
    CohomologyReport,
    QuinticForm,
    generic_ideal_h,
    hyperplane_ideal_cohomology,
    ideal_cohomology,
    is_maximal_rank,
    quintics_through,
    random_quintic_through,
    regularity,
    restriction_matrix,
    span_dimension,
)
from .curves import (
    RationalCurveMap,
    ValidationReport,
    curve_from_json,
    curve_in_hyperplane,
    curve_on_quadric,
    curve_to_json,
    random_curve,
    rational_normal_curve,
    validate,
)
from .field import DEFAULT_PRIME, FieldConfig, FieldError
from .forms import BinaryForm, derivative, gcd, multiply
from .linalg import ConsistencyError, kernel_basis, rank, rank_exact
from .strata import (
    ExperimentConfig,
    ExperimentReport,
    dim_J,
    dim_K,
    hypersurface_family_bound,
    jd_membership,
    kd_membership,
    m0_membership,
    max_hypersurface_family_bound,
    reducibility_verdict,
    run_experiment,
    surface_pair_dims,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
