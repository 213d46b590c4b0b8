"""
Old and new subspaces at levels 2 and 4

The newspace is the kernel of c_new(A) where A is a Hecke operator on the
full cusp space, c_old its characteristic polynomial on the oldspace and
c_new = charpoly(A) / c_old. Neither ker U_2 nor odd support characterizes
the newspace; both admit old vectors.
"""
from functools import lru_cache
from typing import List, Optional

from sympy import Matrix, Poly, Symbol, eye, gcd

from src.exactseries import QExpansion
from src.generators import (
    FormSpace,
    GroupLabel,
    SpaceKind,
    basis_S,
    resolve_precision,
    subspace,
)
from src.heckeforms.operators import (
    OperatorLabel,
    apply_Vd,
    from_sympy,
    operator_matrix,
    separating_operators,
)
from src.utils.errors import DimensionMismatch, SeparationFailure, UnsupportedWeight
from src.utils.logging_config import get_logger

# Initialize logger
logger = get_logger(__name__)

x = Symbol("x")

# lower level whose forms span the oldspace at each level
LOWER_LEVEL = {GroupLabel.GAMMA0_4: GroupLabel.GAMMA0_2, GroupLabel.GAMMA0_2: GroupLabel.SL2Z}


def charpoly(matrix: Matrix) -> Poly:
    """Characteristic polynomial det(x I - A) over QQ"""
    if matrix.rows == 0:
        return Poly(1, x, domain="QQ")
    return Poly(matrix.charpoly(x).as_expr(), x, domain="QQ")


def evaluate_poly(poly: Poly, matrix: Matrix) -> Matrix:
    """poly(A) by Horner's rule"""
    n = matrix.rows
    result = Matrix.zeros(n, n)
    for c in poly.all_coeffs():
        result = result * matrix + c * eye(n)
    return result


def _check_weight(k: int) -> None:
    if k < 4 or k % 2:
        error_msg = f"Old/new splitting needs an even weight k >= 4, got {k}"
        logger.error(error_msg)
        raise UnsupportedWeight(error_msg)


@lru_cache(maxsize=64)
def oldspace(group: GroupLabel, k: int, precision: Optional[int] = None) -> FormSpace:
    """
    Span of S_k(lower) and V_2 S_k(lower) inside S_k(group)

    Raises:
        DimensionMismatch: If the span does not have dimension 2 dim S_k(lower) - dim S_k(lower of lower)
    """
    _check_weight(k)
    group = GroupLabel(group)
    lower = LOWER_LEVEL[group]
    _, precision = resolve_precision(group, k, precision)
    ambient = basis_S(group, k, precision)
    lower_space = basis_S(lower, k, precision)
    generators = list(lower_space.basis) + [apply_Vd(f, 2) for f in lower_space.basis]
    old = subspace(ambient, SpaceKind.OLD, generators)

    expected = 2 * lower_space.dim
    if lower in LOWER_LEVEL:
        expected -= basis_S(LOWER_LEVEL[lower], k, precision).dim
    if old.dim != expected:
        error_msg = f"Oldspace of S_{k}({group.value}) has dimension {old.dim}, expected {expected}"
        logger.error(error_msg)
        raise DimensionMismatch(error_msg)
    if not ambient.contains_space(old):
        error_msg = f"Oldspace of weight {k} is not contained in S_{k}({group.value})"
        logger.error(error_msg)
        raise DimensionMismatch(error_msg)
    return old


def oldspace_level4(k: int, precision: Optional[int] = None) -> FormSpace:
    return oldspace(GroupLabel.GAMMA0_4, k, precision)


def oldspace_level2(k: int, precision: Optional[int] = None) -> FormSpace:
    return oldspace(GroupLabel.GAMMA0_2, k, precision)


def split_with(ambient: FormSpace, old: FormSpace, label: OperatorLabel) -> Optional[List[QExpansion]]:
    """
    Newspace basis from one candidate operator, None if it does not separate

    Args:
        ambient: Full cusp space
        old: Its oldspace
        label: Candidate operator

    Returns:
        Series spanning the kernel of c_new(A), or None when gcd(c_old, c_new) != 1
    """
    full = operator_matrix(ambient, label).matrix
    c_full = charpoly(full)
    c_old = charpoly(operator_matrix(old, label).matrix)
    c_new, remainder = c_full.div(c_old)
    if not remainder.is_zero:
        error_msg = f"Old characteristic polynomial does not divide the full one for {label}"
        logger.error(error_msg)
        raise DimensionMismatch(error_msg)
    if gcd(c_old, c_new).degree() > 0:
        logger.info(f"⚠️ {label} does not separate old and new at weight {ambient.weight}")
        return None
    kernel = evaluate_poly(c_new, full).nullspace()
    rows = []
    for vector in kernel:
        total = QExpansion(ambient.grid, ambient.precision)
        for c, f in zip(vector, ambient.basis):
            if c != 0:
                total = total + from_sympy(c) * f
        rows.append(total)
    return rows


@lru_cache(maxsize=64)
def newspace(group: GroupLabel, k: int, precision: Optional[int] = None) -> FormSpace:
    """
    Hecke-stable complement of the oldspace in S_k(group)

    Raises:
        SeparationFailure: If none of T3, T3 + c T5 (c < bound) separates old from new
    """
    _check_weight(k)
    group = GroupLabel(group)
    _, precision = resolve_precision(group, k, precision)
    ambient = basis_S(group, k, precision)
    old = oldspace(group, k, precision)

    if old.dim == 0:
        return subspace(ambient, SpaceKind.SNEW, list(ambient.basis))
    if old.dim == ambient.dim:
        return subspace(ambient, SpaceKind.SNEW, [])

    for label in separating_operators():
        rows = split_with(ambient, old, label)
        if rows is None:
            continue
        new = subspace(ambient, SpaceKind.SNEW, rows)
        if new.dim + old.dim != ambient.dim:
            error_msg = f"new ({new.dim}) + old ({old.dim}) != dim S_{k}({group.value}) ({ambient.dim})"
            logger.error(error_msg)
            raise DimensionMismatch(error_msg)
        new.meta["separating_operator"] = str(label)
        logger.info(f"✅ Newspace of S_{k}({group.value}) has dimension {new.dim} (separated by {label})")
        return new

    error_msg = f"No separating Hecke combination found for S_{k}({group.value})"
    logger.error(error_msg)
    raise SeparationFailure(error_msg)


def newspace_level4(k: int, precision: Optional[int] = None) -> FormSpace:
    return newspace(GroupLabel.GAMMA0_4, k, precision)


def newspace_level2(k: int, precision: Optional[int] = None) -> FormSpace:
    return newspace(GroupLabel.GAMMA0_2, k, precision)


