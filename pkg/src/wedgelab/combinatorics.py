"""Exact binomial coefficients and Stirling numbers of the second kind.

Everything here works on Python ints, so there is no overflow at any size.
Two independent routes are provided for Stirling numbers (the triangle
recurrence and the alternating-sum closed form) so they can be checked
against each other.
"""
from __future__ import annotations

import math
from functools import lru_cache

__all__ = ["binomial", "stirling2", "stirling2_closed", "factorial"]

factorial = math.factorial


def binomial(n: int, k: int) -> int:
    """C(n, k), zero when k falls outside [0, n]."""
    if n < 0:
        raise ValueError(f"binomial: n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=None)
def _stirling_row(n: int) -> tuple[int, ...]:
    # S(n, k) for k = 0..n via S(n, k) = k S(n-1, k) + S(n-1, k-1)
    if n == 0:
        return (1,)
    prev = _stirling_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        left = prev[k - 1]
        right = prev[k] if k < n else 0
        row[k] = k * right + left
    return tuple(row)


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into exactly k nonempty blocks."""
    if n < 0 or k < 0:
        raise ValueError(f"stirling2: arguments must be non-negative, got ({n}, {k})")
    if k > n:
        return 0
    # build rows iteratively so deep n never hits the recursion limit
    for m in range(0, n, 256):
        _stirling_row(m)
    return _stirling_row(n)[k]


def stirling2_closed(n: int, k: int) -> int:
    """S(n, k) from the alternating sum (1/k!) sum_j (-1)^(k-j) C(k, j) j^n."""
    if n < 0 or k < 0:
        raise ValueError(f"stirling2_closed: arguments must be non-negative, got ({n}, {k})")
    total = 0
    for j in range(k + 1):
        term = math.comb(k, j) * j**n
        total += -term if (k - j) % 2 else term
    q, r = divmod(total, math.factorial(k))
    if r:
        raise ArithmeticError(
            f"alternating sum {total} for S({n},{k}) is not divisible by {k}!"
        )
    return q
