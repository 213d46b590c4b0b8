"""
Generator Series

Classical q-expansions from which every form space is assembled: the
Eisenstein series E2, E4, E6, the fourth power of the Jacobi theta series,
the odd-divisor series F and the level-2 combination X2 = 2E2(2tau) - E2(tau).
Series are memoized per precision.
"""
from functools import lru_cache
from typing import List, NamedTuple

from src.exactseries import (
    Grid,
    QExpansion,
    eta_product,
    mul,
    rescale_variable,
    scale,
    sigma,
    sigma_power,
    truncate,
)
from src.generators.labels import GroupLabel
from src.utils.errors import UnsupportedWeight
from src.utils.logging_config import get_logger

# Initialize logger
logger = get_logger(__name__)

# E_k = 1 + c_k * sum sigma_{k-1}(n) q^n
EISENSTEIN_CONSTANTS = {2: -24, 4: 240, 6: -504}


class RingGenerator(NamedTuple):
    name: str
    weight: int
    series: QExpansion


@lru_cache(maxsize=64)
def eisenstein(k: int, precision: int) -> QExpansion:
    """
    Normalized Eisenstein series of weight k

    E2 is only quasi-modular; it is used inside X2 and never as a form.

    Args:
        k: Weight, one of 2, 4, 6
        precision: Precision in twice-exponent units

    Returns:
        Integer-grid expansion with constant term 1
    """
    if k not in EISENSTEIN_CONSTANTS:
        error_msg = f"No Eisenstein generator of weight {k}"
        logger.error(error_msg)
        raise UnsupportedWeight(error_msg)
    c = EISENSTEIN_CONSTANTS[k]
    coeffs = {0: 1}
    for n in range(1, (precision + 1) // 2):
        coeffs[2 * n] = c * sigma_power(n, k - 1)
    return QExpansion(Grid.INTEGER, precision, coeffs)


@lru_cache(maxsize=16)
def theta_series(precision: int) -> QExpansion:
    """Jacobi theta sum over n in Z of q^{n^2}"""
    coeffs = {0: 1}
    n = 1
    while 2 * n * n < precision:
        coeffs[2 * n * n] = 2
        n += 1
    return QExpansion(Grid.INTEGER, precision, coeffs)


@lru_cache(maxsize=16)
def theta4(precision: int) -> QExpansion:
    theta = theta_series(precision)
    square = mul(theta, theta)
    return mul(square, square)


@lru_cache(maxsize=16)
def odd_divisor_series(precision: int) -> QExpansion:
    """F = sum over odd n of sigma(n) q^n"""
    coeffs = {2 * n: sigma(n) for n in range(1, (precision + 1) // 2, 2)}
    return QExpansion(Grid.INTEGER, precision, coeffs)


@lru_cache(maxsize=16)
def x2_series(precision: int) -> QExpansion:
    """The weight-2 level-2 form 2E2(2tau) - E2(tau) = 1 + 24 sum sigma_odd(n) q^n"""
    e2 = eisenstein(2, precision)
    return truncate(scale(rescale_variable(e2, 2), 2) - e2, precision)


@lru_cache(maxsize=16)
def delta_series(precision: int) -> QExpansion:
    """Discriminant eta(tau)^24"""
    return eta_product([(1, 24)], precision)


def ring_generators(group: GroupLabel, precision: int) -> List[RingGenerator]:
    """
    Generators of the graded ring of forms for a group

    Args:
        group: Group label
        precision: Precision in twice-exponent units

    Returns:
        Two generators with names and weights
    """
    group = GroupLabel(group)
    if group is GroupLabel.SL2Z:
        return [
            RingGenerator("E4", 4, eisenstein(4, precision)),
            RingGenerator("E6", 6, eisenstein(6, precision)),
        ]
    if group is GroupLabel.GAMMA0_2:
        return [
            RingGenerator("X2", 2, x2_series(precision)),
            RingGenerator("E4", 4, eisenstein(4, precision)),
        ]
    return [
        RingGenerator("theta4", 2, theta4(precision)),
        RingGenerator("F", 2, odd_divisor_series(precision)),
    ]


# (eta spec, weight) of the generator of the cusp-form ideal
CUSP_IDEALS = {
    GroupLabel.SL2Z: ([(1, 24)], 12),
    GroupLabel.GAMMA0_2: ([(1, 8), (2, 8)], 8),
    GroupLabel.GAMMA0_4: ([(2, 12)], 6),
}


@lru_cache(maxsize=32)
def cusp_generator(group: GroupLabel, precision: int) -> RingGenerator:
    spec, weight = CUSP_IDEALS[GroupLabel(group)]
    name = "*".join(f"eta({d}t)^{e}" for d, e in spec)
    return RingGenerator(name, weight, eta_product(spec, precision))
