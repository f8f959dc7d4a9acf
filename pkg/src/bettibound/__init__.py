"""Exact evaluation of Betti-number bounds for real algebraic and semi-algebraic sets.

The package has five layers:

* :mod:`bettibound.combinat` -- exact binomials, multinomials, complete
  homogeneous sums, contingency-table counts and alternating binomial sums;
* :mod:`bettibound.polytope` -- simplices, boxes, block products and their
  Minkowski sums, with exact volumes and mixed volumes;
* :mod:`bettibound.generic` -- Euler characteristics and Betti sums of
  generic complete intersections from their supports, plus closed forms;
* :mod:`bettibound.catalog` and :mod:`bettibound.applications` -- every
  explicit bound as a :class:`~bettibound.catalog.BoundResult`;
* :mod:`bettibound.registry`, :mod:`bettibound.verify`, :mod:`bettibound.cli`
  -- lookup by identifier, cross-check suites and the command line.

All arithmetic is on ``int`` and :class:`fractions.Fraction`.
"""

from types import ModuleType as _ModuleType

from .applications import (
    FourierMukai,
    Image,
    PullBack,
    Transversal,
    fourier_mukai_bound,
    image_bound,
    pull_back_bound,
    transversal_bound,
)
from .catalog import (
    BoundResult,
    bb_new_bounds,
    barone_basu_bound,
    box_bounds,
    box_variety_bound,
    bpr_new_bounds,
    classic_bound,
    g_min,
    h_full,
    k_full,
    leading_coefficient_comparison,
    m_full,
    multi_semi_bounds,
    optm_bound,
    partially_quadratic_bounds,
    partially_quadratic_multi_bounds,
    partially_quadratic_multi_variety_bound,
    partially_quadratic_variety_bound,
    projective_quadrics_bound,
    refined_F,
    round_up_even,
    total_degree_variety_bound,
    two_degree_variety_bound,
)
from .combinat import (
    alternating_binomial_A,
    binomial,
    complete_homogeneous,
    contingency_count,
    multinomial,
    parse_exact,
    render_exact,
)
from .errors import (
    BettiBoundError,
    HypothesisError,
    ShapeMismatchError,
    UnknownBoundError,
    UnsupportedFamilyError,
)
from .generic import (
    ChiReport,
    GenericSystem,
    betti_boxes_generic,
    betti_boxes_weighted,
    betti_ci_total_distinct,
    betti_generic,
    betti_one_multi,
    chern_chi_projective,
    chi_khovanskii,
    lefschetz_chi_affine,
    quadrics_projective,
)
from .polytope import (
    BlockProduct,
    Box,
    MinkowskiSum,
    MixedVolumeQuery,
    ScaledSimplex,
    mixed_volume,
    mixed_volume_oracle_interpolation,
    n_coarse_bound,
    n_refined,
    volume,
)
from .registry import REGISTRY, evaluate

__version__ = "0.1.0"

__all__ = sorted(
    name for name, obj in globals().items() if not name.startswith("_") and not isinstance(obj, _ModuleType)
)
