"""Closed forms and recurrences for Betti numbers and Euler characteristics of D_k(Delta^n).

beta(k, n) is the number of (n-k+1)-spheres in the wedge, chi(k, n) the
Euler characteristic. They are linked by chi = 1 + (-1)^(n-k+1) beta.
"""
from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Callable

from .combinatorics import binomial, stirling2

__all__ = [
    "betti_closed",
    "euler_from_formula",
    "euler_from_cells",
    "ordered_cell_count",
    "unordered_cell_count",
    "y_rank",
    "betti_recurrence",
    "betti_recurrence_lemma",
    "factorial_base",
    "reduced_factorial_base",
]


def _check_range(k: int, n: int) -> None:
    if not 1 <= k <= n + 1:
        raise ValueError(f"need 1 <= k <= n+1, got k={k}, n={n}")


def betti_closed(k: int, n: int) -> int:
    """sum_{i=0}^{k} (-1)^(i+k+1) C(k, i+1) i^(n+1)."""
    _check_range(k, n)
    total = 0
    for i in range(k + 1):
        term = binomial(k, i + 1) * i ** (n + 1)
        total += term if (i + k + 1) % 2 == 0 else -term
    return total


def euler_from_formula(k: int, n: int) -> int:
    _check_range(k, n)
    b = betti_closed(k, n)
    return 1 + b if (n - k + 1) % 2 == 0 else 1 - b


def unordered_cell_count(k: int, n: int, i: int) -> int:
    """Number of i-cells of UD_k(Delta^n): C(n+1, k+i) S(k+i, k)."""
    if k + i < 0 or n + 1 < 0:
        return 0
    return binomial(n + 1, k + i) * stirling2(k + i, k)


def ordered_cell_count(k: int, n: int, i: int) -> int:
    return factorial(k) * unordered_cell_count(k, n, i)


def euler_from_cells(k: int, n: int) -> int:
    """k! sum_i (-1)^i C(n+1, k+i) S(k+i, k).

    Defined for every k >= 0 and n >= -1; out-of-range terms vanish, which
    gives chi(0, n) = 1 and chi(k, -1) = 0 for k >= 1.
    """
    if k < 0 or n < -1:
        raise ValueError(f"need k >= 0 and n >= -1, got k={k}, n={n}")
    s = 0
    for j in range(k, n + 2):
        term = binomial(n + 1, j) * stirling2(j, k)
        s += term if (j - k) % 2 == 0 else -term
    return factorial(k) * s


def y_rank(k: int, n: int) -> int:
    """(k-1)! C(n+1, k-1) - C(n, k-1), the rank of the surviving bottom-row term."""
    if not 3 <= k <= n:
        raise ValueError(f"y_rank needs 3 <= k <= n, got k={k}, n={n}")
    return factorial(k - 1) * binomial(n + 1, k - 1) - binomial(n, k - 1)


def factorial_base(j: int) -> int:
    return factorial(j)


def reduced_factorial_base(j: int) -> int:
    """j! - 1: the top Betti number of the j! point space D_j(Delta^(j-1))."""
    return factorial(j) - 1


def betti_recurrence(k: int, n: int, base: Callable[[int], int] = factorial_base) -> int:
    """beta(k, n) = -C(n, k-1) + sum_{p=0}^{n-k+1} C(n+1, k+p-1) beta(k-1, k+p-2).

    Grounded by beta(2, m) = 1 for m >= 2 and beta(j, j-1) = base(j).
    """
    if not 2 <= k <= n + 1:
        raise ValueError(f"need 2 <= k <= n+1, got k={k}, n={n}")
    return _recur(k, n, base)


@lru_cache(maxsize=None)
def _recur(k: int, n: int, base: Callable[[int], int]) -> int:
    if n == k - 1:
        return base(k)
    if k == 2:
        return 1
    total = -binomial(n, k - 1)
    for p in range(n - k + 2):
        total += binomial(n + 1, k + p - 1) * _recur(k - 1, k + p - 2, base)
    return total


def betti_recurrence_lemma(k: int, n: int, base: Callable[[int], int] = factorial_base) -> int:
    """beta(k, n) = Y(k, n) + sum_{p=0}^{n-k} C(n+1, p+1) beta(k-1, n-p-1).

    Lower values come from ``betti_recurrence`` with the same base.
    """
    y = y_rank(k, n)
    return y + sum(
        binomial(n + 1, p + 1) * betti_recurrence(k - 1, n - p - 1, base) for p in range(n - k + 1)
    )
