"""Exact dense linear algebra over Q(r)."""
from __future__ import annotations

from typing import Sequence

from .scalar import ParamScalar, scalar


class SingularSystem(ArithmeticError):
    """Elimination found no usable pivot in some column."""

    def __init__(self, message: str, column: int):
        super().__init__(message)
        self.column = column


def _weight(x: ParamScalar) -> int:
    return len(x.num) + len(x.den)


def solve(matrix: Sequence[Sequence], rhs: Sequence[Sequence]) -> list[list[ParamScalar]]:
    """Solve ``matrix @ X = rhs`` for a square matrix and several right-hand sides.

    ``rhs`` is given column-major: one sequence per right-hand side.  Gaussian
    elimination picks, in each column, the nonzero pivot of lowest size, which
    keeps the reduced rational functions small.  Returns the solution columns.
    """
    size = len(matrix)
    ncols = len(rhs)
    rows = []
    for i in range(size):
        if len(matrix[i]) != size:
            raise ValueError("solve needs a square matrix")
        rows.append([scalar(x) for x in matrix[i]] + [scalar(col[i]) for col in rhs])
    for col in range(size):
        best = None
        for i in range(col, size):
            v = rows[i][col]
            if not v.is_zero() and (best is None or _weight(v) < _weight(rows[best][col])):
                best = i
        if best is None:
            raise SingularSystem(f"no nonzero pivot in column {col}", col)
        rows[col], rows[best] = rows[best], rows[col]
        pivot = rows[col]
        inv = pivot[col].inverse()
        pivot = [x * inv if not x.is_zero() else x for x in pivot]
        rows[col] = pivot
        nz = [j for j in range(col + 1, size + ncols) if not pivot[j].is_zero()]
        for i in range(size):
            if i == col:
                continue
            factor = rows[i][col]
            if factor.is_zero():
                continue
            row = rows[i]
            for j in nz:
                row[j] = row[j] - factor * pivot[j]
            row[col] = ParamScalar(0)
    return [[rows[i][size + k] for i in range(size)] for k in range(ncols)]


def determinant(matrix: Sequence[Sequence]) -> ParamScalar:
    size = len(matrix)
    rows = [[scalar(x) for x in row] for row in matrix]
    det = ParamScalar(1)
    for col in range(size):
        best = None
        for i in range(col, size):
            if not rows[i][col].is_zero():
                best = i
                break
        if best is None:
            return ParamScalar(0)
        if best != col:
            rows[col], rows[best] = rows[best], rows[col]
            det = -det
        pivot = rows[col][col]
        det = det * pivot
        inv = pivot.inverse()
        for i in range(col + 1, size):
            factor = rows[i][col] * inv
            if factor.is_zero():
                continue
            for j in range(col, size):
                rows[i][j] = rows[i][j] - factor * rows[col][j]
    return det


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[ParamScalar]]:
    inner = len(b)
    out = []
    for row in a:
        new = []
        for j in range(len(b[0])):
            acc = ParamScalar(0)
            for k in range(inner):
                if not row[k].is_zero() and not b[k][j].is_zero():
                    acc = acc + row[k] * b[k][j]
            new.append(acc)
        out.append(new)
    return out
