"""
Hecke Operators

Coefficient formulas for T_p, U_p, V_d and the half translation on
integer-grid expansions, and exact matrices of these operators on echelon
bases.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Matrix, Rational, isprime

from src.config import Config
from src.exactseries import (
    Grid,
    QExpansion,
    rescale_variable,
    translation_sign_action,
)
from src.generators import FormSpace
from src.utils.errors import GridError, InsufficientPrecision, NotInvariant, PrimeDividesLevel
from src.utils.logging_config import get_logger

# Initialize logger
logger = get_logger(__name__)


def _require_integer_grid(f: QExpansion, what: str) -> None:
    if f.grid is not Grid.INTEGER:
        error_msg = f"{what} acts on integer-grid expansions only"
        logger.error(error_msg)
        raise GridError(error_msg)


def _reduced_precision(f: QExpansion, p: int) -> int:
    precision = f.precision // p
    if precision < 1:
        error_msg = f"Precision {f.precision} leaves no coefficients after dividing by {p}"
        logger.error(error_msg)
        raise InsufficientPrecision(error_msg)
    return precision


def apply_Tp(f: QExpansion, k: int, p: int, level: int) -> QExpansion:
    """
    Hecke operator T_p for trivial character, p not dividing the level

    Args:
        f: Integer-grid expansion sum a_n q^n
        k: Weight
        p: Prime
        level: Level of the ambient group (1, 2 or 4)

    Returns:
        sum (a_{np} + p^{k-1} a_{n/p}) q^n at precision floor(P/p)
    """
    if not isprime(p):
        raise ValueError(f"T_p needs a prime, got {p}")
    if level % p == 0:
        error_msg = f"T_{p} requested at level {level}; use U_{p}"
        logger.error(error_msg)
        raise PrimeDividesLevel(error_msg)
    _require_integer_grid(f, f"T_{p}")
    precision = _reduced_precision(f, p)
    weight_factor = p ** (k - 1)
    coeffs: Dict[int, Fraction] = {}
    for n in range((precision + 1) // 2):
        value = f[2 * n * p]
        if n % p == 0:
            value += weight_factor * f[2 * (n // p)]
        coeffs[2 * n] = value
    return QExpansion(Grid.INTEGER, precision, coeffs)


def apply_Up(f: QExpansion, p: int) -> QExpansion:
    """U_p: a_n -> a_{np}, precision floor(P/p)"""
    _require_integer_grid(f, f"U_{p}")
    precision = _reduced_precision(f, p)
    return QExpansion(Grid.INTEGER, precision, {m // p: c for m, c in f.items() if m % (2 * p) == 0})


def apply_U2(f: QExpansion, k: int) -> QExpansion:
    """U_2 on a weight-k form (the weight does not enter the coefficient formula)"""
    return apply_Up(f, 2)


def apply_Vd(f: QExpansion, d: int) -> QExpansion:
    return rescale_variable(f, d)


def apply_translation_half(f: QExpansion) -> QExpansion:
    """f(tau + 1/2)"""
    return translation_sign_action(f, Fraction(1, 2))


@dataclass(frozen=True)
class OperatorLabel:
    """
    A Hecke-type operator or an integer combination sum c_p T_p

    name is one of "T", "U", "V", "T_half"; for T the terms field carries
    (p, c) pairs so that T3 + 2*T5 is OperatorLabel("T", ((3, 1), (5, 2))).
    """

    name: str
    terms: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def T(cls, p: int) -> "OperatorLabel":
        return cls("T", ((p, 1),))

    @classmethod
    def U(cls, p: int) -> "OperatorLabel":
        return cls("U", ((p, 1),))

    @classmethod
    def V(cls, d: int) -> "OperatorLabel":
        return cls("V", ((d, 1),))

    @classmethod
    def translation_half(cls) -> "OperatorLabel":
        return cls("T_half")

    @property
    def max_prime(self) -> int:
        return max((p for p, _ in self.terms), default=1)

    def __str__(self) -> str:
        if self.name == "T_half":
            return "T_1/2"
        parts = []
        for p, c in self.terms:
            parts.append(f"{self.name}{p}" if c == 1 else f"{c}*{self.name}{p}")
        return " + ".join(parts)


def apply_operator(label: OperatorLabel, f: QExpansion, k: int, level: int) -> QExpansion:
    if label.name == "T":
        total: Optional[QExpansion] = None
        for p, c in label.terms:
            image = apply_Tp(f, k, p, level)
            image = image if c == 1 else c * image
            total = image if total is None else total + image
        return total
    if label.name == "U":
        return apply_Up(f, label.terms[0][0])
    if label.name == "V":
        return apply_Vd(f, label.terms[0][0])
    if label.name == "T_half":
        return apply_translation_half(f)
    raise ValueError(f"Unknown operator {label.name}")


@dataclass(frozen=True)
class OperatorMatrix:
    """Exact matrix of an operator from one echelon basis into another; columns are images"""

    label: OperatorLabel
    matrix: Matrix
    source_dim: int
    target_dim: int

    @property
    def dim(self) -> int:
        return self.source_dim


def to_sympy(values: Sequence[Fraction]) -> List[Rational]:
    return [Rational(v.numerator, v.denominator) for v in values]


def from_sympy(value) -> Fraction:
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


def operator_matrix(space: FormSpace, label: OperatorLabel, target: Optional[FormSpace] = None) -> OperatorMatrix:
    """
    Exact matrix of an operator on an echelon basis

    Args:
        space: Source space
        label: Operator
        target: Target space, defaults to space itself

    Returns:
        OperatorMatrix whose j-th column holds the coordinates of the image of basis[j]

    Raises:
        InsufficientPrecision: If images are not determined at the target's Sturm precision
        NotInvariant: If an image leaves the target span
    """
    target = target or space
    level = space.group.level
    columns = []
    for index, f in enumerate(space.basis):
        image = apply_operator(label, f, space.weight, level)
        if image.precision < target.sturm:
            error_msg = (
                f"{label} on {space.group.value} weight {space.weight}: image precision "
                f"{image.precision} is below the Sturm bound {target.sturm}"
            )
            logger.error(error_msg)
            raise InsufficientPrecision(error_msg)
        coords = target.coordinates(image)
        if coords is None:
            error_msg = f"{label} maps basis vector {index} of {space.kind.value} outside the target span"
            logger.error(error_msg)
            raise NotInvariant(error_msg)
        columns.append(to_sympy(coords))
    matrix = Matrix(target.dim, space.dim, lambda i, j: columns[j][i]) if space.dim and target.dim else Matrix.zeros(target.dim, space.dim)
    return OperatorMatrix(label, matrix, space.dim, target.dim)


def separating_operators(attempts: Optional[int] = None) -> List[OperatorLabel]:
    """T3, T3 + T5, T3 + 2*T5, ... in the order they are tried"""
    attempts = attempts or Config.SEPARATION_ATTEMPTS
    labels = [OperatorLabel.T(3)]
    for c in range(1, attempts):
        labels.append(OperatorLabel("T", ((3, 1), (5, c))))
    return labels
