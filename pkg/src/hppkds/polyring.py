"""Polynomials over F_p and the (x, u_1..u_m) coefficient grids.

Grid convention used throughout the package: ``rows[i][j - 1]`` holds the
coefficient of ``x**i * u_j``, so ``i`` starts at 0 and ``j`` at 1.  Row-major
means all ``j`` for ``i = 0`` first, then ``i = 1``, and so on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch, InvalidRange

__all__ = ["BaseGrid", "CoeffGrid", "FieldPoly", "poly_eval", "product_coeffs"]


@dataclass(frozen=True)
class FieldPoly:
    """Univariate polynomial ``c_0 + c_1 x + ... + c_d x^d`` over F_p.

    The zero polynomial is ``(0,)`` with degree 0.
    """

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) % self.p for c in self.coeffs) or (0,)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        return poly_eval(self, x)

    def __add__(self, other: "FieldPoly") -> "FieldPoly":
        if other.p != self.p:
            raise DimensionMismatch("polynomials over different fields")
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (size - len(self.coeffs))
        b = other.coeffs + (0,) * (size - len(other.coeffs))
        return FieldPoly(self.p, tuple(x + y for x, y in zip(a, b)))

    def scale(self, c: int) -> "FieldPoly":
        return FieldPoly(self.p, tuple(c * v for v in self.coeffs))


def poly_eval(f: FieldPoly, x: int) -> int:
    p = f.p
    acc = 0
    for c in reversed(f.coeffs):
        acc = (acc * x + c) % p
    return acc


class _Grid:
    """Shared behaviour of the (rows x m) coefficient tables."""

    p: int
    rows: tuple[tuple[int, ...], ...]

    def _normalize(self):
        rows = tuple(tuple(int(v) % self.p for v in row) for row in self.rows)
        if not rows or not rows[0]:
            raise DimensionMismatch("grid must have at least one row and column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("ragged grid")
        object.__setattr__(self, "rows", rows)

    @property
    def m(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.m

    def entry(self, i: int, j: int) -> int:
        if j < 1:
            raise InvalidRange("column index j starts at 1")
        return self.rows[i][j - 1]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entry(i, j) for i in range(len(self.rows)))

    def flat(self) -> list[int]:
        return [v for row in self.rows for v in row]


@dataclass(frozen=True)
class BaseGrid(_Grid):
    """Coefficients ``B_tj`` of the base polynomial ``sum_j B_j(x) u_j``."""

    p: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        self._normalize()

    @classmethod
    def from_columns(cls, p: int, columns: Sequence[Sequence[int]]) -> "BaseGrid":
        return cls(p, tuple(zip(*columns)))

    @property
    def n(self) -> int:
        return len(self.rows) - 1


@dataclass(frozen=True)
class CoeffGrid(_Grid):
    """Product-polynomial coefficients ``g_ij``, shape (n + lambda + 1) x m."""

    p: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        self._normalize()

    @classmethod
    def from_columns(cls, p: int, columns: Sequence[Sequence[int]]) -> "CoeffGrid":
        return cls(p, tuple(zip(*columns)))


def product_coeffs(f: FieldPoly, base: BaseGrid) -> CoeffGrid:
    """Coefficients of ``f(x) * B(x, u)``: entry (i, j) is sum_{s+t=i} f_s B_tj."""
    if f.p != base.p:
        raise DimensionMismatch("f and B are over different fields")
    p = f.p
    nrows = f.degree + base.n + 1
    out = [[0] * base.m for _ in range(nrows)]
    for s, fs in enumerate(f.coeffs):
        for t, brow in enumerate(base.rows):
            row = out[s + t]
            for j, b in enumerate(brow):
                row[j] += fs * b
    return CoeffGrid(p, tuple(tuple(v % p for v in row) for row in out))
