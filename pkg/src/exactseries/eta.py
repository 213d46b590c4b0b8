"""
Eta quotients q^{sum(d*e)/24} * prod_{d,e} prod_{n>=1} (1 - q^{d n})^e

Products are expanded with integer lists in the variable x = q^d and only
then moved onto the twice-exponent grid, so the inner loops never touch
Fractions.
"""
from typing import List, Sequence, Tuple

from src.exactseries.qexpansion import Grid, QExpansion
from src.utils.errors import PrefactorNotOnGrid
from src.utils.logging_config import get_logger

# Initialize logger
logger = get_logger(__name__)

EtaSpec = Sequence[Tuple[int, int]]


def euler_power(e: int, length: int) -> List[int]:
    """
    Coefficients of prod_{n>=1} (1 - x^n)^e modulo x^length

    The base product is built factor by factor and is sparse, so positive
    powers are e truncated multiplications by it. Negative exponents invert
    each factor by a truncated geometric series.
    """
    if length == 0:
        return []
    coeffs = [1] + [0] * (length - 1)
    if e >= 0:
        base = list(coeffs)
        for j in range(1, length):
            base[j:] = [x - y for x, y in zip(base[j:], base[:-j])]
        for _ in range(e):
            coeffs = _mul_truncated(coeffs, base, length)
        return coeffs
    for j in range(1, length):
        for _ in range(-e):
            for i in range(j, length):
                coeffs[i] += coeffs[i - j]
    return coeffs


def _dilate(coeffs: List[int], d: int, length: int) -> List[int]:
    out = [0] * length
    for i, c in enumerate(coeffs):
        if i * d >= length:
            break
        out[i * d] = c
    return out


def _mul_truncated(a: List[int], b: List[int], length: int) -> List[int]:
    out = [0] * length
    support = [(j, y) for j, y in enumerate(b) if y]
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in support:
            if i + j >= length:
                break
            out[i + j] += x * y
    return out


def eta_shift(spec: EtaSpec) -> int:
    """
    Twice-exponent of the prefactor q^{sum(d*e)/24}

    Raises:
        PrefactorNotOnGrid: If the prefactor is negative or off the half grid
    """
    total = sum(d * e for d, e in spec)
    if total < 0 or total % 12:
        error_msg = f"Eta quotient {list(spec)} has prefactor q^({total}/24), not on the half grid"
        logger.error(error_msg)
        raise PrefactorNotOnGrid(error_msg)
    return total // 12


def eta_product(spec: EtaSpec, precision: int) -> QExpansion:
    """
    Expand an eta quotient to the given precision

    Args:
        spec: Pairs (d, e) standing for eta(d*tau)^e, d >= 1
        precision: Precision in twice-exponent units

    Returns:
        QExpansion on the half grid iff the prefactor is a half-integer power
    """
    for d, _ in spec:
        if d < 1:
            raise ValueError(f"Eta dilation must be positive, got {d}")
    shift = eta_shift(spec)
    grid = Grid.HALF if shift % 2 else Grid.INTEGER
    # integer exponents n with shift + 2n < precision
    length = max(0, (precision - shift + 1) // 2)

    product = None
    exponents = {}
    for d, e in spec:
        exponents[d] = exponents.get(d, 0) + e
    for d, e in sorted(exponents.items()):
        if e == 0 or length == 0:
            continue
        factor = _dilate(euler_power(e, -(-length // d)), d, length)
        product = factor if product is None else _mul_truncated(product, factor, length)
    if product is None:
        product = [1] + [0] * (length - 1) if length else []

    return QExpansion(grid, precision, {shift + 2 * n: c for n, c in enumerate(product) if c})
