"""Immutable arbitrary-precision integer matrices.

Entries are plain Python ints, so no intermediate value can overflow.
Vectors are columns: a homomorphism matrix has one column per domain
generator, and ``m @ v`` applies it to the coordinate tuple ``v``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import sympy

Vector = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class IntegerMatrix:
    """Exact integer matrix with explicit shape.

    Parameters
    ----------
    rows : int
        Number of rows (may be zero)
    cols : int
        Number of columns (may be zero)
    entries : tuple[tuple[int, ...], ...]
        Row-major entries; ``len(entries) == rows`` and every row has ``cols`` entries

    Examples
    --------
    >>> m = IntegerMatrix.from_rows([[2, 4], [6, 8]])
    >>> (m.rows, m.cols)
    (2, 2)
    >>> m.apply((1, 1))
    (6, 14)
    """

    rows: int
    cols: int
    entries: tuple[Vector, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"negative shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise ValueError(f"entries do not match shape {self.rows}x{self.cols}")
        if any(type(x) is not int for row in self.entries for x in row):
            raise TypeError("IntegerMatrix entries must be int")

    # === Constructors ===

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: int | None = None) -> IntegerMatrix:
        """Build a matrix from row iterables; ``cols`` is required when there are no rows."""
        data = tuple(tuple(int(x) for x in row) for row in rows)
        width = cols if cols is not None else (len(data[0]) if data else 0)
        return cls(len(data), width, data)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> IntegerMatrix:
        """Build a matrix whose columns are the given vectors."""
        return cls(rows, len(columns), tuple(tuple(int(col[i]) for col in columns) for i in range(rows)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntegerMatrix:
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> IntegerMatrix:
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def scalar(cls, n: int, k: int) -> IntegerMatrix:
        return cls(n, n, tuple(tuple(k if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def block_diagonal(cls, blocks: Sequence[IntegerMatrix]) -> IntegerMatrix:
        """Direct sum of matrices along the diagonal."""
        total_cols = sum(b.cols for b in blocks)
        out: list[Vector] = []
        offset = 0
        for block in blocks:
            for row in block.entries:
                out.append((0,) * offset + row + (0,) * (total_cols - offset - block.cols))
            offset += block.cols
        return cls(len(out), total_cols, tuple(out))

    @classmethod
    def hstack(cls, blocks: Sequence[IntegerMatrix], rows: int | None = None) -> IntegerMatrix:
        height = blocks[0].rows if blocks else (rows or 0)
        if any(b.rows != height for b in blocks):
            raise ValueError("hstack needs equal row counts")
        data = tuple(sum((b.entries[i] for b in blocks), ()) for i in range(height))
        return cls(height, sum(b.cols for b in blocks), data)

    @classmethod
    def vstack(cls, blocks: Sequence[IntegerMatrix], cols: int | None = None) -> IntegerMatrix:
        width = blocks[0].cols if blocks else (cols or 0)
        if any(b.cols != width for b in blocks):
            raise ValueError("vstack needs equal column counts")
        return cls(sum(b.rows for b in blocks), width, tuple(row for b in blocks for row in b.entries))

    # === Access ===

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def select_rows(self, indices: Sequence[int]) -> IntegerMatrix:
        return IntegerMatrix(len(indices), self.cols, tuple(self.entries[i] for i in indices))

    def select_columns(self, indices: Sequence[int]) -> IntegerMatrix:
        return IntegerMatrix(self.rows, len(indices), tuple(tuple(row[j] for j in indices) for row in self.entries))

    def block(self, row_start: int, row_stop: int, col_start: int, col_stop: int) -> IntegerMatrix:
        data = tuple(row[col_start:col_stop] for row in self.entries[row_start:row_stop])
        return IntegerMatrix(row_stop - row_start, col_stop - col_start, data)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    # === Arithmetic ===

    def transpose(self) -> IntegerMatrix:
        data = tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols))
        return IntegerMatrix(self.cols, self.rows, data)

    @property
    def T(self) -> IntegerMatrix:  # noqa: N802
        return self.transpose()

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        other_cols = [other.column(j) for j in range(other.cols)]
        data = tuple(
            tuple(sum(a * b for a, b in zip(row, col, strict=True)) for col in other_cols) for row in self.entries
        )
        return IntegerMatrix(self.rows, other.cols, data)

    def apply(self, vec: Sequence[int]) -> Vector:
        """Matrix-vector product."""
        if len(vec) != self.cols:
            raise ValueError(f"cannot apply {self.shape} matrix to vector of length {len(vec)}")
        return tuple(sum(a * b for a, b in zip(row, vec, strict=True)) for row in self.entries)

    def __add__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.shape != other.shape:
            raise ValueError(f"cannot add {self.shape} and {other.shape}")
        data = tuple(tuple(a + b for a, b in zip(r, s, strict=True)) for r, s in zip(self.entries, other.entries, strict=True))
        return IntegerMatrix(self.rows, self.cols, data)

    def __neg__(self) -> IntegerMatrix:
        return IntegerMatrix(self.rows, self.cols, tuple(tuple(-x for x in row) for row in self.entries))

    def __sub__(self, other: IntegerMatrix) -> IntegerMatrix:
        return self + (-other)

    def scaled(self, k: int) -> IntegerMatrix:
        return IntegerMatrix(self.rows, self.cols, tuple(tuple(k * x for x in row) for row in self.entries))

    # === sympy bridge ===

    def to_sympy(self) -> sympy.Matrix:
        return sympy.Matrix(self.rows, self.cols, [x for row in self.entries for x in row])

    @classmethod
    def from_sympy(cls, m: sympy.Matrix) -> IntegerMatrix:
        return cls.from_rows(([int(m[i, j]) for j in range(m.cols)] for i in range(m.rows)), cols=m.cols)

    def det(self) -> int:
        """Exact determinant (square matrices only)."""
        if self.rows != self.cols:
            raise ValueError(f"determinant of non-square {self.shape} matrix")
        if self.rows == 0:
            return 1
        return int(self.to_sympy().det(method="bareiss"))

    def is_unimodular(self) -> bool:
        return self.rows == self.cols and abs(self.det()) == 1
