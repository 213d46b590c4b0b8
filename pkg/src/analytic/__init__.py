"""
Floating-point evaluation, slash checks and completed L-functions
"""
from .evaluation import NumericValue, envelope, eval_series, tail_bound
from .slash import (
    IDENTITY,
    T_HALF,
    V2,
    W2,
    W4,
    SlashMatrix,
    automorphy_sample,
    fricke,
    random_automorphy_words,
    sample_points,
    slash_numeric,
)
from .lfunction import i_power, lambda_direct, lambda_incomplete_gamma
from .checks import (
    default_s_grid,
    functional_equation_residuals,
    verify_chi_automorphy,
    verify_corollary_1_4,
    verify_fricke,
    verify_involution_conjugation,
    verify_prime_level_fricke,
)

__all__ = [
    "NumericValue",
    "envelope",
    "eval_series",
    "tail_bound",
    "IDENTITY",
    "T_HALF",
    "V2",
    "W2",
    "W4",
    "SlashMatrix",
    "automorphy_sample",
    "fricke",
    "random_automorphy_words",
    "sample_points",
    "slash_numeric",
    "i_power",
    "lambda_direct",
    "lambda_incomplete_gamma",
    "default_s_grid",
    "functional_equation_residuals",
    "verify_chi_automorphy",
    "verify_corollary_1_4",
    "verify_fricke",
    "verify_involution_conjugation",
    "verify_prime_level_fricke",
]
