"""Exact log-concavity toolkit: sequences, dependent sums, combinatorial
triangles, geometric sums and real-rootedness."""
from .seq_core import (
    ExactSeq,
    LcReport,
    abel_oracle,
    as_fraction,
    convolve,
    has_internal_zero,
    is_log_concave,
    is_unimodal,
    normalize,
)
from .kernel import (
    AMatrix,
    Condition1Report,
    Kernel,
    a_matrix,
    a_matrix_discriminant_adjusted,
    check_condition1,
    dependent_sum,
    eulerian_kernel,
    geometric_joint_kernel,
    independent_kernel,
    kernel_from_json,
    stirling2_kernel,
    tabular_kernel,
    verify_main_theorem,
)
from .combinat import (
    TriangleRow,
    bernoulli_sum,
    bell_number,
    binomial_row,
    eulerian_row,
    inversion_numbers,
    q_stirling2_row,
    stirling1_row,
    stirling2_row,
)
from .geomlab import (
    GeomParam,
    NoThresholdError,
    cv_membership,
    gap_detect,
    geom_sum_analyze,
    min_lc_geom_param,
    mix_coefficients,
    ratio_bound_test,
    verify_order,
)
from .polyroots import (
    ExactPoly,
    all_roots_real_negative,
    poly_from_seq,
    realroots_implies_lc_check,
    sturm_real_root_count,
)

__version__ = "0.1.0"
