"""
Numerical evaluation of q-expansions on the upper half-plane

A series on either grid is summed in the variable q^{1/2} = exp(pi i tau):
the coefficient stored at twice-exponent m multiplies exp(pi i m tau). The
truncation error is bounded with an empirical envelope |c_m| <= A (m/2)^{k/2}
fitted over the computed range; A is returned so it can be audited.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath as mp

from src.config import Config
from src.exactseries import QExpansion
from src.utils.errors import InsufficientPrecision, NotInUpperHalfPlane
from src.utils.logging_config import get_logger

# Initialize logger
logger = get_logger(__name__)

mp.mp.dps = Config.MP_DPS

# tail sums stop once a term drops below this fraction of the running total
TAIL_CUTOFF = mp.mpf(10) ** (-(Config.MP_DPS + 5))
TAIL_MAX_TERMS = 200000


@dataclass(frozen=True)
class NumericValue:
    """Complex value with a bound on its truncation error"""

    value: complex
    abs_error: float
    envelope_A: float = 0.0

    def __abs__(self) -> float:
        return abs(self.value)


def to_mpf(c: Fraction):
    return mp.mpf(c.numerator) / c.denominator


def check_upper_half_plane(tau) -> None:
    if mp.im(tau) <= 0:
        error_msg = f"Evaluation point {tau} is not in the upper half-plane"
        logger.error(error_msg)
        raise NotInUpperHalfPlane(error_msg)


def envelope(f: QExpansion, weight: int) -> float:
    """A = max over the known coefficients of |c_m| / (m/2)^{k/2}"""
    best = mp.mpf(0)
    for m, c in f.items():
        if m == 0:
            continue
        best = max(best, abs(to_mpf(c)) / mp.power(mp.mpf(m) / 2, mp.mpf(weight) / 2))
    return float(best)


def tail_bound(A: float, weight: int, radius, terms: int):
    """A * sum_{m >= terms} (m/2)^{k/2} r^m for r = |q^{1/2}| < 1"""
    if A == 0:
        return mp.mpf(0)
    total = mp.mpf(0)
    exponent = mp.mpf(weight) / 2
    for m in range(max(terms, 1), terms + TAIL_MAX_TERMS):
        term = mp.power(mp.mpf(m) / 2, exponent) * mp.power(radius, m)
        total += term
        # terms decrease once m exceeds k / (2 |log r|)
        if term < TAIL_CUTOFF * total and m * -mp.log(radius) > exponent:
            break
    return A * total


def eval_series(f: QExpansion, tau, weight: int, terms: Optional[int] = None) -> NumericValue:
    """
    Partial sum of f at tau over twice-exponents below terms, with a tail bound

    Args:
        f: Exact series on either grid
        tau: Point of the upper half-plane
        weight: Weight used for the coefficient envelope
        terms: Twice-exponent cutoff N, at most f.precision (default: f.precision)

    Returns:
        NumericValue with the partial sum, the truncation bound and A

    Raises:
        NotInUpperHalfPlane: If Im tau <= 0
        InsufficientPrecision: If terms exceeds the precision of f
    """
    tau = mp.mpc(tau)
    check_upper_half_plane(tau)
    terms = f.precision if terms is None else terms
    if terms > f.precision:
        error_msg = f"Requested {terms} terms but the series is known only below {f.precision}"
        logger.error(error_msg)
        raise InsufficientPrecision(error_msg)
    if f.is_zero():
        return NumericValue(0j, 0.0, 0.0)

    q_half = mp.expjpi(tau)
    total = mp.mpc(0)
    for m, c in f.items():
        if m >= terms:
            continue
        term = to_mpf(c) * mp.power(q_half, m)
        total += term

    A = envelope(f, weight)
    error = tail_bound(A, weight, abs(q_half), terms)
    return NumericValue(complex(total), float(error), A)
