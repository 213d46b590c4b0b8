"""
Arithmetic functions behind the Eisenstein and generator coefficients
"""
from functools import lru_cache

from sympy import divisor_sigma


def _check_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"Divisor sums need a positive integer, got {n}")


@lru_cache(maxsize=None)
def sigma_power(n: int, r: int) -> int:
    """
    Sum of d^r over the positive divisors d of n

    Args:
        n: Positive integer
        r: Non-negative exponent

    Returns:
        sigma_r(n) as a Python int
    """
    _check_positive(n)
    return int(divisor_sigma(n, r))


def sigma(n: int) -> int:
    """Sum of the positive divisors of n"""
    return sigma_power(n, 1)


def sigma_odd(n: int) -> int:
    """Sum of the odd positive divisors of n"""
    _check_positive(n)
    while n % 2 == 0:
        n //= 2
    return sigma_power(n, 1)
