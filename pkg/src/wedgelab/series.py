"""Truncated bivariate power series in x, y with exact rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterator

__all__ = ["BivariateSeries", "egf_series", "euler_from_egf", "MAX_EGF_DEGREE"]

MAX_EGF_DEGREE = 24


class BivariateSeries:
    """sum c[i][j] x^i y^j over i + j <= max_degree.

    Products and exponentials drop every term of total degree above
    ``max_degree``, so the truncation is closed under the arithmetic here.
    """

    __slots__ = ("max_degree", "coeffs")

    def __init__(self, max_degree: int, coeffs: dict[tuple[int, int], Fraction] | None = None):
        if max_degree < 0:
            raise ValueError("max_degree must be non-negative")
        self.max_degree = max_degree
        self.coeffs: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in (coeffs or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent ({i}, {j})")
            if i + j <= max_degree and c:
                self.coeffs[i, j] = Fraction(c)

    @classmethod
    def constant(cls, c, max_degree: int) -> BivariateSeries:
        return cls(max_degree, {(0, 0): Fraction(c)})

    @classmethod
    def x(cls, max_degree: int) -> BivariateSeries:
        return cls(max_degree, {(1, 0): Fraction(1)})

    @classmethod
    def y(cls, max_degree: int) -> BivariateSeries:
        return cls(max_degree, {(0, 1): Fraction(1)})

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        return self.coeffs.get(ij, Fraction(0))

    def items(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        return iter(sorted(self.coeffs.items()))

    def _compat(self, other: BivariateSeries) -> int:
        return min(self.max_degree, other.max_degree)

    def __add__(self, other: BivariateSeries) -> BivariateSeries:
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return BivariateSeries(self._compat(other), out)

    def __neg__(self) -> BivariateSeries:
        return BivariateSeries(self.max_degree, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: BivariateSeries) -> BivariateSeries:
        return self + (-other)

    def scale(self, c) -> BivariateSeries:
        c = Fraction(c)
        return BivariateSeries(self.max_degree, {k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other: BivariateSeries) -> BivariateSeries:
        D = self._compat(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), a in self.coeffs.items():
            for (i2, j2), b in other.coeffs.items():
                if i1 + i2 + j1 + j2 <= D:
                    key = (i1 + i2, j1 + j2)
                    out[key] = out.get(key, 0) + a * b
        return BivariateSeries(D, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return self.max_degree == other.max_degree and self.coeffs == other.coeffs

    def exp(self) -> BivariateSeries:
        """exp of a series with zero constant term, by sum f^m / m! up to m = max_degree."""
        if self[0, 0]:
            raise ValueError("exp needs a zero constant term")
        D = self.max_degree
        # Horner: 1 + f(1 + f/2(1 + f/3(...)))
        acc = BivariateSeries.constant(1, D)
        for m in range(D, 0, -1):
            acc = BivariateSeries.constant(1, D) + (self * acc).scale(Fraction(1, m))
        return acc

    def __repr__(self) -> str:
        return f"BivariateSeries(max_degree={self.max_degree}, terms={len(self.coeffs)})"


def egf_series(max_degree: int) -> BivariateSeries:
    """exp(x + y - x e^{-y}) truncated at total degree ``max_degree``."""
    if not 0 <= max_degree <= MAX_EGF_DEGREE:
        raise ValueError(f"max_degree must lie in [0, {MAX_EGF_DEGREE}], got {max_degree}")
    D = max_degree
    exp_neg_y = BivariateSeries(D, {(0, j): Fraction((-1) ** j, factorial(j)) for j in range(D + 1)})
    x, y = BivariateSeries.x(D), BivariateSeries.y(D)
    return (x + y - x * exp_neg_y).exp()


def euler_from_egf(series: BivariateSeries, k: int, n: int) -> int:
    """chi(k, n-1) read off the x^k y^n coefficient; must be an integer."""
    if k + n > series.max_degree:
        raise ValueError(f"x^{k} y^{n} lies beyond the truncation degree {series.max_degree}")
    v = series[k, n] * factorial(k) * factorial(n)
    if v.denominator != 1:
        raise ArithmeticError(f"non-integral Euler characteristic {v} at x^{k} y^{n}")
    return v.numerator
