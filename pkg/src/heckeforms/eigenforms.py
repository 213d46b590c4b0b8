"""
Eigenform Extraction

Splits a Hecke-stable space with a separating operator and returns the
normalized eigenforms for its rational eigenvalues. Eigensystems that are
irrational or repeated are reported as invariant-subspace descriptors.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from sympy import Poly, eye, gcd, primerange

from src.exactseries import QExpansion
from src.generators import FormSpace
from src.heckeforms.newforms import charpoly, x
from src.heckeforms.operators import OperatorLabel, from_sympy, operator_matrix, separating_operators
from src.utils.logging_config import get_logger

# Initialize logger
logger = get_logger(__name__)

# odd primes whose eigenvalues are recorded
EIGENVALUE_BOUND = 13


@dataclass(frozen=True)
class Eigenform:
    """Normalized Hecke eigenform (a_1 = 1)"""

    weight: int
    level: int
    coefficients: QExpansion
    eigenvalues: Dict[int, Fraction] = field(compare=False)

    def a(self, n: int) -> Fraction:
        """Coefficient of q^n"""
        return self.coefficients[2 * n]

    @property
    def a2(self) -> Fraction:
        return self.a(2)

    def to_dict(self) -> Dict[str, object]:
        return {
            "weight": self.weight,
            "level": self.level,
            "a2": str(self.a2),
            "eigenvalues": {str(p): str(v) for p, v in sorted(self.eigenvalues.items())},
            "q_expansion": str(self.coefficients),
        }


@dataclass(frozen=True)
class EigenspaceDescriptor:
    """Invariant subspace of a Hecke operator that does not split over Q into eigenforms"""

    operator: str
    dimension: int
    minimal_polynomial: str

    def to_dict(self) -> Dict[str, object]:
        return {
            "operator": self.operator,
            "dimension": self.dimension,
            "minimal_polynomial": self.minimal_polynomial,
        }


def _squarefree(poly: Poly) -> bool:
    return gcd(poly, poly.diff(x)).degree() == 0


def _choose_operator(space: FormSpace) -> Tuple[OperatorLabel, object]:
    """First candidate with a squarefree characteristic polynomial, else T3"""
    fallback = None
    for label in separating_operators():
        matrix = operator_matrix(space, label).matrix
        if fallback is None:
            fallback = (label, matrix)
        if _squarefree(charpoly(matrix)):
            return label, matrix
    logger.warning(f"⚠️ No candidate operator has a squarefree characteristic polynomial on {space.kind.value}")
    return fallback


def _series(space: FormSpace, vector) -> QExpansion:
    total = QExpansion(space.grid, space.precision)
    for c, f in zip(vector, space.basis):
        if c != 0:
            total = total + from_sympy(c) * f
    return total


def hecke_decomposition(space: FormSpace) -> Tuple[List[Eigenform], List[EigenspaceDescriptor]]:
    """
    Split a Hecke-stable space with a separating operator

    Args:
        space: Hecke-stable integer-grid space (level 1, 2 or 4)

    Returns:
        Normalized eigenforms for the rational eigenvalues and descriptors
        for the remaining invariant subspaces
    """
    eigenforms: List[Eigenform] = []
    descriptors: List[EigenspaceDescriptor] = []
    if space.dim == 0:
        return eigenforms, descriptors

    label, matrix = _choose_operator(space)
    n = matrix.rows
    _, factors = charpoly(matrix).factor_list()
    level = space.group.level
    for poly, multiplicity in factors:
        if poly.degree() == 1 and multiplicity == 1:
            root = -poly.all_coeffs()[1] / poly.all_coeffs()[0]
            kernel = (matrix - root * eye(n)).nullspace()
            f = _series(space, kernel[0])
            a1 = f[2]
            if a1 != 0:
                f = (1 / a1) * f
                eigenvalues = {
                    p: f[2 * p]
                    for p in primerange(3, EIGENVALUE_BOUND + 1)
                    if level % p and 2 * p < f.precision
                }
                eigenforms.append(Eigenform(space.weight, level, f, eigenvalues))
                continue
        descriptors.append(
            EigenspaceDescriptor(str(label), poly.degree() * multiplicity, str(poly.as_expr()))
        )

    eigenforms.sort(key=lambda e: [e.a(p) for p in sorted(e.eigenvalues)])
    logger.info(
        f"✅ {len(eigenforms)} rational eigenforms and {len(descriptors)} descriptors "
        f"on {space.kind.value} weight {space.weight} level {level}"
    )
    return eigenforms, descriptors


def extract_rational_eigenforms(space: FormSpace) -> List[Eigenform]:
    """Normalized eigenforms for the rational eigenvalues of a separating operator"""
    return hecke_decomposition(space)[0]
