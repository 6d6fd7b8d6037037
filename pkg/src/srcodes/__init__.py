"""Linear sum-rank-metric codes: construction, certification, bounds.

The sum-rank weight of a tuple of matrices over F_q is the sum of the
ranks of its blocks.  This package builds explicit linear codes for that
metric, certifies their minimum distance by exhaustive enumeration at
desk scale, and evaluates the standard bounds (Singleton-like exponent,
ball volumes, entropy, Gilbert-Varshamov-like rate guarantees).
"""

from .block_codes import (
    BlockCode,
    DistanceInfo,
    bch_code,
    bch_defining_set,
    bch_dimension,
    cyclotomic_coset,
    export_generator_matrix,
    import_generator_matrix,
    min_hamming_distance,
    repetition_code,
    rs_code,
)
from .bounds import (
    GvParams,
    ball_volume,
    entropy_hsr,
    f_poly_coeffs,
    f_poly_eval,
    gamma_q,
    gaussian_binomial,
    gv_asymptotic,
    gv_rhs,
    rank_count,
    tradeoff_lhs,
    tradeoff_rhs,
    weight_distribution,
)
from .constructions import (
    BchFamily,
    bch_dimension_formula,
    bch_family,
    from_coefficient_codes,
    from_extension_code,
    msrd_code,
    reed_solomon_pair,
)
from .gf import (
    ExtField,
    FieldTower,
    FiniteField,
    PrimeField,
    SizeLimitError,
    extend_field,
    factor_prime_power,
    make_tower,
    prime_field,
)
from .linearized import (
    GabidulinCode,
    LinearizedPoly,
    lin_eval,
    lin_kernel,
    lin_rank,
    lin_to_matrix,
    qpoly,
)
from .scan import BACKEND, DEFAULT_BUDGET, BudgetExceededError, backends
from .sumrank import (
    SumRankCode,
    SumRankSpace,
    defect,
    export_sumrank_code,
    hamming_as_sumrank,
    import_sumrank_code,
    max_distance_for_dimension,
    min_srd_exhaustive,
    rate_and_relative_distance,
    singleton_bound,
    singleton_gap,
    sr_distance,
    sr_weight,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BchFamily",
    "BlockCode",
    "BudgetExceededError",
    "DEFAULT_BUDGET",
    "DistanceInfo",
    "ExtField",
    "FieldTower",
    "FiniteField",
    "GabidulinCode",
    "GvParams",
    "LinearizedPoly",
    "PrimeField",
    "SizeLimitError",
    "SumRankCode",
    "SumRankSpace",
    "backends",
    "ball_volume",
    "bch_code",
    "bch_defining_set",
    "bch_dimension",
    "bch_dimension_formula",
    "bch_family",
    "cyclotomic_coset",
    "defect",
    "entropy_hsr",
    "export_generator_matrix",
    "export_sumrank_code",
    "extend_field",
    "f_poly_coeffs",
    "f_poly_eval",
    "factor_prime_power",
    "from_coefficient_codes",
    "from_extension_code",
    "gamma_q",
    "gaussian_binomial",
    "gv_asymptotic",
    "gv_rhs",
    "hamming_as_sumrank",
    "import_generator_matrix",
    "import_sumrank_code",
    "lin_eval",
    "lin_kernel",
    "lin_rank",
    "lin_to_matrix",
    "make_tower",
    "max_distance_for_dimension",
    "min_hamming_distance",
    "min_srd_exhaustive",
    "msrd_code",
    "prime_field",
    "qpoly",
    "rank_count",
    "rate_and_relative_distance",
    "reed_solomon_pair",
    "repetition_code",
    "rs_code",
    "singleton_bound",
    "singleton_gap",
    "sr_distance",
    "sr_weight",
    "tradeoff_lhs",
    "tradeoff_rhs",
    "weight_distribution",
]
