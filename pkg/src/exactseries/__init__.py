"""
Exact q-expansion arithmetic
"""
from .qexpansion import (
    Grid,
    QExpansion,
    add,
    as_half,
    format_rational,
    from_json,
    mul,
    normalize_grid,
    parse_rational,
    render,
    rescale_variable,
    scale,
    to_json,
    translation_sign_action,
    truncate,
)
from .arithmetic import sigma, sigma_odd, sigma_power
from .eta import eta_product, eta_shift, euler_power

__all__ = [
    "Grid",
    "QExpansion",
    "add",
    "as_half",
    "format_rational",
    "from_json",
    "mul",
    "normalize_grid",
    "parse_rational",
    "render",
    "rescale_variable",
    "scale",
    "to_json",
    "translation_sign_action",
    "truncate",
    "sigma",
    "sigma_odd",
    "sigma_power",
    "eta_product",
    "eta_shift",
    "euler_power",
]
