"""Exact rational matrices: rank, kernel and column-span intersections.

Forward elimination is fraction-free (Bareiss) on denominator-cleared
integer rows, so intermediate growth stays polynomial and every pivot
decision is exact.  Kernel vectors are recovered from the echelon form by
rational back-substitution.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import InvalidInput

_ZERO = Fraction(0)
_ONE = Fraction(1)


class QMatrix:
    """Immutable dense matrix with Fraction entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable]):
        rows = tuple(tuple(Fraction(x) for x in row) for row in data)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise InvalidInput("ragged rows")
        self.data = rows
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "QMatrix":
        columns = [list(c) for c in columns]
        if not columns:
            if rows is None:
                raise InvalidInput("cannot infer row count of an empty column list")
            return cls([[] for _ in range(rows)])
        height = len(columns[0])
        if any(len(c) != height for c in columns):
            raise InvalidInput("columns of unequal height")
        return cls([[columns[j][i] for j in range(len(columns))] for i in range(height)])

    def entry(self, i: int, j: int) -> Fraction:
        return self.data[i][j]

    def column(self, j: int) -> list[Fraction]:
        return [self.data[i][j] for i in range(self.rows)]

    def columns(self) -> list[list[Fraction]]:
        return [self.column(j) for j in range(self.cols)]

    def hstack(self, other: "QMatrix") -> "QMatrix":
        if self.rows != other.rows:
            raise InvalidInput("row counts differ")
        return QMatrix([list(a) + list(b) for a, b in zip(self.data, other.data)])

    def matmul(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise InvalidInput("inner dimensions differ")
        return QMatrix(
            [
                [
                    sum((self.data[i][k] * other.data[k][j] for k in range(self.cols)), _ZERO)
                    for j in range(other.cols)
                ]
                for i in range(self.rows)
            ]
        )

    __matmul__ = matmul

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        return f"QMatrix({self.rows}x{self.cols})"

    # -- elimination ---------------------------------------------------------

    def _integer_rows(self) -> list[list[int]]:
        out = []
        for row in self.data:
            mult = lcm(*(x.denominator for x in row)) if row else 1
            out.append([int(x * mult) for x in row])
        return out

    def _echelon(self) -> tuple[list[list[int]], list[tuple[int, int]]]:
        """Fraction-free row echelon; returns (matrix, [(pivot_row, pivot_col)])."""
        m = self._integer_rows()
        pivots: list[tuple[int, int]] = []
        r, prev = 0, 1
        for c in range(self.cols):
            if r >= self.rows:
                break
            pr = next((i for i in range(r, self.rows) if m[i][c] != 0), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            for i in range(r + 1, self.rows):
                for j in range(c + 1, self.cols):
                    num = m[r][c] * m[i][j] - m[i][c] * m[r][j]
                    q, rem = divmod(num, prev)
                    assert rem == 0, "fraction-free step must divide exactly"
                    m[i][j] = q
                m[i][c] = 0
            prev = m[r][c]
            pivots.append((r, c))
            r += 1
        return m, pivots

    def rank(self) -> int:
        return len(self._echelon()[1])

    def kernel(self) -> "QMatrix":
        """Matrix whose columns form a basis of the right null space."""
        m, pivots = self._echelon()
        pivot_cols = [c for _, c in pivots]
        free_cols = [c for c in range(self.cols) if c not in pivot_cols]
        basis = []
        for fc in free_cols:
            x = [_ZERO] * self.cols
            x[fc] = _ONE
            for r, c in reversed(pivots):
                s = sum((Fraction(m[r][j]) * x[j] for j in range(c + 1, self.cols)), _ZERO)
                x[c] = -s / m[r][c]
            basis.append(x)
        return QMatrix.from_columns(basis, rows=self.cols)


def rank(a: QMatrix) -> int:
    return a.rank()


def kernel(a: QMatrix) -> QMatrix:
    return a.kernel()


def span_intersection(a: QMatrix, b: QMatrix) -> int:
    """Dimension of (column span of a) intersect (column span of b)."""
    if a.rows != b.rows:
        raise InvalidInput("matrices must share the ambient space")
    return a.rank() + b.rank() - a.hstack(b).rank()


def intersection_basis(a: QMatrix, b: QMatrix) -> QMatrix:
    """Columns spanning the intersection of the two column spans (diagnostic)."""
    if a.rows != b.rows:
        raise InvalidInput("matrices must share the ambient space")
    null = a.hstack(QMatrix([[-x for x in row] for row in b.data])).kernel()
    vectors = []
    for j in range(null.cols):
        u = [null.entry(i, j) for i in range(a.cols)]
        vec = [
            sum((a.entry(i, k) * u[k] for k in range(a.cols)), _ZERO)
            for i in range(a.rows)
        ]
        if any(vec):
            vectors.append(vec)
    result = QMatrix.from_columns(vectors, rows=a.rows)
    return result
