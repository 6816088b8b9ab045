"""Exact binomial coefficients with the zero convention used by the counting formulas."""

from math import comb


def binom(n: int, r: int) -> int:
    """Return ``C(n, r)`` for ``n >= 0``, and 0 whenever ``r < 0`` or ``r > n``.

    Closed-form sums step through lower indices that go negative, and the
    vanishing of those terms is what makes them telescope, so every formula in
    the package goes through this helper rather than :func:`math.comb`.
    """
    if n < 0:
        raise ValueError(f"binom: upper index must be non-negative, got {n}")
    if r < 0 or r > n:
        return 0
    return comb(n, r)
