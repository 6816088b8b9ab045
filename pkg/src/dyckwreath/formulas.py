"""Closed forms for the interval statistic N_k(m, l).

N_k(m, l) is the number of length-``m`` windows holding exactly ``l`` falls,
summed over every Dyck ``k``-path.  :func:`stat` is the public entry point;
the other functions are the individual formulas, kept separate so they can
be checked against each other and against :func:`dyckwreath.dyck.stat_brute`.
"""

from .binomial import binom
from .errors import DomainError


def _check_half(k: int, m: int, l: int) -> None:
    if not (0 <= l and 2 * l <= m <= 2 * k):
        raise DomainError(f"need 0 <= 2l <= m <= 2k, got k={k}, m={m}, l={l}")


def stat_theorem1(k: int, m: int, l: int) -> int:
    """Sum over the height offset ``d`` of the window's start above the diagonal.

    Each term is (upper paths across the window) times (ways to complete the
    path around it).  Requires ``2l <= m``.
    """
    _check_half(k, m, l)
    top = 2 * k - m + 1
    total = 0
    for d in range(k + l - m + 1):
        inside = binom(m, l) - binom(m, l - d - 1)
        outside = binom(top, k - m + l - d) - binom(top, k - m + l - d - 1)
        total += inside * outside
    return total


def stat_alternative(k: int, m: int, l: int) -> int:
    _check_half(k, m, l)
    top = 2 * k - m + 1
    total = binom(m, l) * binom(top, k - m + l)
    for e in range(l):
        total += binom(m, e) * (binom(top, k + 1 - e) - binom(top, k - e))
    return total


def stat_m_eq_k(k: int, l: int) -> int:
    if not 0 <= l <= k:
        raise DomainError(f"need 0 <= l <= k, got k={k}, l={l}")
    return binom(k, l) ** 2


def stat_m_eq_k_plus_1(k: int, l: int) -> int:
    if not (0 <= l and 2 * l <= k + 1):
        raise DomainError(f"need 0 <= 2l <= k+1, got k={k}, l={l}")
    return binom(k, l - 1) * binom(k, l)


def stat_m_eq_k_minus_1(k: int, l: int) -> int:
    if not (k >= 1 and 0 <= l and 2 * l <= k - 1):
        raise DomainError(f"need k >= 1 and 0 <= 2l <= k-1, got k={k}, l={l}")
    return (
        binom(k + 2, l + 1) * binom(k - 1, l)
        - binom(k, l + 1) * binom(k - 1, l - 1)
        - binom(k, l - 1) * binom(k - 1, l)
    )


def stat(k: int, m: int, l: int) -> int:
    """N_k(m, l) for any ``0 <= l <= m <= 2k``.

    Windows with more falls than rises are counted through the mirror image,
    which swaps the two: N_k(m, l) = N_k(m, m - l).
    """
    if not 0 <= l <= m <= 2 * k:
        raise DomainError(f"need 0 <= l <= m <= 2k, got k={k}, m={m}, l={l}")
    if 2 * l > m:
        l = m - l
    return stat_theorem1(k, m, l)


def stat_row(k: int, m: int) -> list[int]:
    return [stat(k, m, l) for l in range(m + 1)]
