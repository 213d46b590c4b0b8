"""
Generator series and exact bases of form spaces
"""
from .labels import CharacterLabel, GroupLabel, SpaceKind
from .eisenstein import (
    RingGenerator,
    cusp_generator,
    delta_series,
    eisenstein,
    odd_divisor_series,
    ring_generators,
    theta4,
    theta_series,
    x2_series,
)
from .echelon import contains, coordinates, echelon, in_span, reduce_rows, span_equal
from .spaces import (
    FormSpace,
    basis_M,
    basis_S,
    basis_S_chi,
    build_space,
    dimension_M,
    dimension_S,
    dimension_S_chi,
    monomials,
    reexpand,
    resolve_precision,
    sturm_bound,
    subspace,
    working_precision,
)

__all__ = [
    "CharacterLabel",
    "GroupLabel",
    "SpaceKind",
    "RingGenerator",
    "cusp_generator",
    "delta_series",
    "eisenstein",
    "odd_divisor_series",
    "ring_generators",
    "theta4",
    "theta_series",
    "x2_series",
    "contains",
    "coordinates",
    "echelon",
    "in_span",
    "reduce_rows",
    "span_equal",
    "FormSpace",
    "basis_M",
    "basis_S",
    "basis_S_chi",
    "build_space",
    "dimension_M",
    "dimension_S",
    "dimension_S_chi",
    "monomials",
    "reexpand",
    "resolve_precision",
    "sturm_bound",
    "subspace",
    "working_precision",
]
