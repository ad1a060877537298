"""Dense matrices over an exact scalar ring.

Entries may be Fraction, GaussianRational, or MultiPoly values (one ring
per matrix); the arithmetic is whatever the entries support.  Inversion is
implemented for rational matrices only, by fraction-free (Bareiss-style)
Gauss-Jordan elimination on the denominator-cleared integer matrix, so
every intermediate value is an integer and the result is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Any, Callable, Iterable, Sequence

from .errors import DimensionMismatch, SingularMatrix


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("non-exact division in fraction-free elimination")
    return q


def _bareiss_jordan(b: Sequence[Sequence[int]]) -> tuple[list[list[int]], int]:
    """Return (Q, p) with Q / p the exact inverse of the integer matrix b.

    One-step Gauss-Jordan form of Bareiss elimination on the augmented
    matrix [b | I]: every intermediate entry is a minor of the original
    augmented matrix, so the divisions below are exact over the integers.
    On return the left block has been reduced to p * I and the right block
    holds p * b^-1.
    """
    n = len(b)
    m = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(b)]
    prev = 1
    for k in range(n):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    break
            else:
                raise SingularMatrix("matrix is singular")
        pivot = m[k][k]
        row_k = m[k]
        for i in range(n):
            if i == k:
                continue
            row_i = m[i]
            factor = row_i[k]
            for j in range(2 * n):
                if j == k:
                    continue
                row_i[j] = _exact_div(pivot * row_i[j] - factor * row_k[j], prev)
            row_i[k] = 0
        prev = pivot
    p = m[n - 1][n - 1]
    for k in range(n):
        if m[k][k] != p or any(m[k][j] for j in range(n) if j != k):
            raise ArithmeticError("elimination did not reach diagonal form")
    return [row[n:] for row in m], p


class ExactMatrix:
    """Immutable rectangular matrix; use * for products and ** for powers."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[Any]]):
        data = tuple(tuple(row) for row in rows)
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ValueError("matrix rows must all have the same length")
        self._rows = data

    @classmethod
    def identity(cls, n: int, one: Any = Fraction(1)) -> "ExactMatrix":
        zero = one * 0
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> int:
        return len(self._rows)

    @property
    def cols(self) -> int:
        return len(self._rows[0])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> tuple:
        return self._rows[i]

    def __getitem__(self, key: tuple[int, int]):
        i, j = key
        return self._rows[i][j]

    def tolist(self) -> list[list]:
        return [list(row) for row in self._rows]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(zip(*self._rows))

    def map(self, fn: Callable[[Any], Any]) -> "ExactMatrix":
        return ExactMatrix([[fn(x) for x in row] for row in self._rows])

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactMatrix) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch(
                f"cannot add {self.rows}x{self.cols} and {other.rows}x{other.cols}")
        return ExactMatrix([
            [a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)
        ])

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self + other.map(lambda x: x * -1)

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise DimensionMismatch(
                    f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
            out = []
            for arow in self._rows:
                line = []
                for j in range(other.cols):
                    acc = arow[0] * other._rows[0][j]
                    for k in range(1, self.cols):
                        acc = acc + arow[k] * other._rows[k][j]
                    line.append(acc)
                out.append(line)
            return ExactMatrix(out)
        return self.map(lambda x: x * other)

    def __rmul__(self, other):
        return self.map(lambda x: x * other)

    def __pow__(self, exponent: int) -> "ExactMatrix":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("matrix exponent must be a nonnegative integer")
        if not self.is_square:
            raise DimensionMismatch("matrix power requires a square matrix")
        result = ExactMatrix.identity(self.rows, one=self._rows[0][0] ** 0)
        for _ in range(exponent):
            result = result * self
        return result

    def inverse(self) -> "ExactMatrix":
        """Exact inverse of a nonsingular matrix over the rationals."""
        if not self.is_square:
            raise DimensionMismatch("only square matrices can be inverted")
        try:
            frac = [[Fraction(x) for x in row] for row in self._rows]
        except TypeError as exc:
            raise TypeError("inversion is implemented for rational matrices only") from exc
        scale = lcm(*(x.denominator for row in frac for x in row))
        cleared = [[int(x * scale) for x in row] for row in frac]
        q, p = _bareiss_jordan(cleared)
        return ExactMatrix([[Fraction(q[i][j] * scale, p) for j in range(self.cols)]
                            for i in range(self.rows)])

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(x) for x in row) for row in self._rows)
        return f"ExactMatrix[{body}]"
