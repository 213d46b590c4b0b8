"""
Completed L-functions Lambda(s, g) = pi^{-s} Gamma(s) sum_n a_n n^{-s}

Two evaluations are provided. The direct Dirichlet sum only converges for
Re s > k/2 + 3/2 under the coefficient envelope. The incomplete-gamma sum
splits the Mellin integral of g(it/2) at t = 1 and folds the part near 0
back with g|W4 = eps g:

    Lambda(s) = sum_n a_n [(pi n)^{-s} Gamma(s, pi n) + eps i^k (pi n)^{s-k} Gamma(k-s, pi n)]

and is valid for every s.
"""
from typing import Optional

import mpmath as mp

from src.analytic.evaluation import TAIL_CUTOFF, NumericValue, envelope, to_mpf
from src.config import Config
from src.exactseries import Grid, QExpansion
from src.utils.errors import GridError, InsufficientPrecision, OutsideConvergenceRegion
from src.utils.logging_config import get_logger

# Initialize logger
logger = get_logger(__name__)

# margin above k/2 + 1 required by the direct sum
CONVERGENCE_MARGIN = mp.mpf(3) / 2
# first index at which the incomplete-gamma sum may stop
MIN_GAMMA_TERMS = 8


def i_power(k: int) -> int:
    """i^k for even k, as an exact integer"""
    return -1 if (k // 2) % 2 else 1


def _check_series(g: QExpansion, terms: int) -> None:
    if g.grid is not Grid.INTEGER:
        error_msg = "L-functions are defined here for integer-grid series only"
        logger.error(error_msg)
        raise GridError(error_msg)
    if terms > g.precision:
        error_msg = f"Requested {terms} terms but the series is known only below {g.precision}"
        logger.error(error_msg)
        raise InsufficientPrecision(error_msg)


def lambda_direct(g: QExpansion, k: int, s, terms: Optional[int] = None) -> NumericValue:
    """
    pi^{-s} Gamma(s) sum_{n < terms/2} a_n n^{-s}

    Args:
        g: Cusp form on the integer grid
        k: Weight
        s: Complex point with Re s > k/2 + 3/2
        terms: Twice-exponent cutoff (default: min(ANCHOR_TERMS, precision))

    Returns:
        NumericValue whose error is pi^{-s} Gamma(s) times A sum_{n >= N} n^{k/2 - Re s}

    Raises:
        OutsideConvergenceRegion: If Re s is not above k/2 + 3/2
    """
    s = mp.mpc(s)
    if mp.re(s) <= mp.mpf(k) / 2 + CONVERGENCE_MARGIN:
        error_msg = f"Direct Dirichlet sum needs Re(s) > {k / 2 + 1.5}, got s = {complex(s)}"
        logger.error(error_msg)
        raise OutsideConvergenceRegion(error_msg)
    terms = min(Config.ANCHOR_TERMS, g.precision) if terms is None else terms
    _check_series(g, terms)

    total = mp.mpc(0)
    for m, c in g.items():
        if m == 0 or m >= terms:
            continue
        total += to_mpf(c) * mp.power(m // 2, -s)

    prefactor = mp.power(mp.pi, -s) * mp.gamma(s)
    A = envelope(g, k)
    alpha = mp.re(s) - mp.mpf(k) / 2
    first = mp.mpf((terms + 1) // 2)
    tail = A * (mp.power(first, -alpha) + mp.power(first, 1 - alpha) / (alpha - 1))
    return NumericValue(complex(prefactor * total), float(abs(prefactor) * tail), A)


def lambda_incomplete_gamma(g: QExpansion, k: int, s, eps: int = -1, terms: Optional[int] = None) -> NumericValue:
    """
    Lambda(s) through upper incomplete gamma kernels, assuming g|W4 = eps g

    The kernels decay like exp(-pi n), so the sum stops once the envelope
    times the next kernels is negligible against the running total.
    """
    if eps not in (1, -1):
        raise ValueError(f"eps must be +1 or -1, got {eps}")
    s = mp.mpc(s)
    terms = g.precision if terms is None else terms
    _check_series(g, terms)
    sign = eps * i_power(k)
    A = envelope(g, k)

    total = mp.mpc(0)
    remainder = mp.mpf(0)
    for n in range(1, (terms + 1) // 2):
        x = mp.pi * n
        kernel = mp.power(x, -s) * mp.gammainc(s, a=x) + sign * mp.power(x, s - k) * mp.gammainc(k - s, a=x)
        a_n = g[2 * n]
        if a_n:
            total += to_mpf(a_n) * kernel
        remainder = A * mp.power(n, mp.mpf(k) / 2) * abs(kernel)
        if n >= MIN_GAMMA_TERMS and remainder < TAIL_CUTOFF * max(abs(total), mp.mpf(1)):
            break
    else:
        logger.warning(f"⚠️ Incomplete gamma sum used all {terms} terms; last kernel bound {float(remainder):.2e}")
    # the omitted kernels shrink at least geometrically with ratio exp(-pi)
    error = remainder / (1 - mp.exp(-mp.pi))
    return NumericValue(complex(total), float(error), A)
