"""Smith and Hermite normal forms, integer kernels and exact solves.

All routines are deterministic: pivots are chosen by smallest nonzero
absolute value, ties broken by lowest (row, column) index.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from shagraph import logger
from shagraph.abelian.matrix import IntegerMatrix, Vector

_Rows = list[list[int]]


def _identity(n: int) -> _Rows:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _freeze(rows: _Rows, cols: int) -> IntegerMatrix:
    return IntegerMatrix(len(rows), cols, tuple(tuple(r) for r in rows))


def _swap_rows(a: _Rows, i: int, j: int) -> None:
    if i != j:
        a[i], a[j] = a[j], a[i]


def _swap_cols(a: _Rows, i: int, j: int) -> None:
    if i != j:
        for row in a:
            row[i], row[j] = row[j], row[i]


def _add_row(a: _Rows, target: int, source: int, k: int) -> None:
    """row[target] += k * row[source]."""
    src = a[source]
    a[target] = [x + k * y for x, y in zip(a[target], src, strict=True)]


def _add_col(a: _Rows, target: int, source: int, k: int) -> None:
    """col[target] += k * col[source]."""
    for row in a:
        row[target] += k * row[source]


@dataclass(frozen=True, slots=True)
class SmithForm:
    """Result of :func:`smith_normal_form`: ``D == U @ m @ V``.

    Parameters
    ----------
    U : IntegerMatrix
        Unimodular row transform
    D : IntegerMatrix
        Diagonal with ``d1 | d2 | ...`` and nonzero entries first
    V : IntegerMatrix
        Unimodular column transform
    """

    U: IntegerMatrix
    D: IntegerMatrix
    V: IntegerMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D.entries[i][i] for i in range(min(self.D.rows, self.D.cols)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    def __iter__(self) -> Iterator[IntegerMatrix]:
        return iter((self.U, self.D, self.V))


def _smallest(a: _Rows, t: int) -> tuple[int, int] | None:
    best: tuple[int, int, int] | None = None
    for i in range(t, len(a)):
        for j in range(t, len(a[i])):
            x = abs(a[i][j])
            if x and (best is None or x < best[0]):
                best = (x, i, j)
    return None if best is None else (best[1], best[2])


def smith_normal_form(m: IntegerMatrix) -> SmithForm:
    """Compute unimodular ``U``, ``V`` with ``U @ m @ V`` in Smith normal form.

    Parameters
    ----------
    m : IntegerMatrix
        Any integer matrix

    Returns
    -------
    SmithForm
        ``(U, D, V)``; the nonzero diagonal entries are positive and form a divisor chain

    Examples
    --------
    >>> smith_normal_form(IntegerMatrix.from_rows([[2, 4], [6, 8]])).diagonal
    (2, 4)
    """
    r, c = m.rows, m.cols
    a = [list(row) for row in m.entries]
    u = _identity(r)
    v = _identity(c)
    t = 0
    while t < min(r, c):
        pivot = _smallest(a, t)
        if pivot is None:
            break
        while True:
            i, j = pivot
            _swap_rows(a, t, i)
            _swap_rows(u, t, i)
            _swap_cols(a, t, j)
            _swap_cols(v, t, j)
            p = a[t][t]
            for i in range(t + 1, r):
                q = a[i][t] // p
                if q:
                    _add_row(a, i, t, -q)
                    _add_row(u, i, t, -q)
            for j in range(t + 1, c):
                q = a[t][j] // p
                if q:
                    _add_col(a, j, t, -q)
                    _add_col(v, j, t, -q)
            leftovers = [(abs(a[i][t]), i, t) for i in range(t + 1, r) if a[i][t]]
            leftovers += [(abs(a[t][j]), t, j) for j in range(t + 1, c) if a[t][j]]
            if leftovers:
                _, i, j = min(leftovers)
                pivot = (i, j)
                continue
            bad = next(
                (i for i in range(t + 1, r) for j in range(t + 1, c) if a[i][j] % p),
                None,
            )
            if bad is not None:
                _add_row(a, t, bad, 1)
                _add_row(u, t, bad, 1)
                pivot = (t, t)
                continue
            break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return SmithForm(_freeze(u, r), _freeze(a, c), _freeze(v, c))


def elementary_divisors(m: IntegerMatrix) -> tuple[int, ...]:
    """Nonzero Smith diagonal of ``m``."""
    return tuple(d for d in smith_normal_form(m).diagonal if d)


@dataclass(frozen=True, slots=True)
class ColumnEchelon:
    """Result of :func:`column_echelon`: ``E == m @ V``, columns ``rank:`` of ``E`` are zero."""

    E: IntegerMatrix
    V: IntegerMatrix
    rank: int
    pivot_rows: tuple[int, ...]


def _column_echelon_rows(a: _Rows, cols: int, track: _Rows) -> tuple[int, list[int]]:
    k = 0
    pivot_rows: list[int] = []
    for i, _ in enumerate(a):
        if k >= cols:
            break
        while True:
            nonzero = [(abs(a[i][j]), j) for j in range(k, cols) if a[i][j]]
            if len(nonzero) <= 1:
                break
            _, js = min(nonzero)
            for _, j in nonzero:
                if j != js:
                    q = a[i][j] // a[i][js]
                    _add_col(a, j, js, -q)
                    _add_col(track, j, js, -q)
        nonzero_cols = [j for j in range(k, cols) if a[i][j]]
        if not nonzero_cols:
            continue
        j = nonzero_cols[0]
        _swap_cols(a, k, j)
        _swap_cols(track, k, j)
        if a[i][k] < 0:
            for row in a:
                row[k] = -row[k]
            for row in track:
                row[k] = -row[k]
        pivot_rows.append(i)
        k += 1
    return k, pivot_rows


def column_echelon(m: IntegerMatrix) -> ColumnEchelon:
    """Unimodular column reduction of ``m`` to lower echelon form with positive pivots.

    Only the column transform is tracked, so tall matrices stay cheap.
    """
    a = [list(row) for row in m.entries]
    v = _identity(m.cols)
    rank, pivot_rows = _column_echelon_rows(a, m.cols, v)
    return ColumnEchelon(_freeze(a, m.cols), _freeze(v, m.cols), rank, tuple(pivot_rows))


def row_hermite(m: IntegerMatrix) -> IntegerMatrix:
    """Canonical basis (row Hermite normal form) of the row span of ``m``.

    Parameters
    ----------
    m : IntegerMatrix
        Generators of a sublattice of ``Z^cols``, one per row

    Returns
    -------
    IntegerMatrix
        Linearly independent rows spanning the same lattice; equal lattices give equal output
    """
    a = [list(row) for row in m.T.entries]
    n = m.rows
    rank, pivot_rows = _column_echelon_rows(a, n, [])
    for k, i in enumerate(pivot_rows):
        p = a[i][k]
        for earlier in range(k):
            q = a[i][earlier] // p
            if q:
                _add_col(a, earlier, k, -q)
    basis = [[a[i][k] for i in range(m.cols)] for k in range(rank)]
    return IntegerMatrix.from_rows(basis, cols=m.cols)


def kernel_basis(m: IntegerMatrix) -> IntegerMatrix:
    """Basis of ``{x : m @ x == 0}`` as columns, in canonical Hermite form.

    The returned lattice is saturated; the basis depends only on the kernel.
    """
    echelon = column_echelon(m)
    free = echelon.V.select_columns(range(echelon.rank, m.cols))
    if free.cols == 0:
        return IntegerMatrix.zeros(m.cols, 0)
    return row_hermite(free.T).T


def solve_columns(m: IntegerMatrix, targets: Sequence[Sequence[int]]) -> list[Vector | None]:
    """Solve ``m @ x == b`` over the integers for each target ``b``.

    One Smith form is shared by all targets. Unsolvable targets give ``None``;
    free coordinates of solutions are set to zero.
    """
    snf = smith_normal_form(m)
    diag = snf.diagonal
    rank = snf.rank
    out: list[Vector | None] = []
    for b in targets:
        if len(b) != m.rows:
            raise ValueError(f"target of length {len(b)} for matrix with {m.rows} rows")
        c = snf.U.apply(b)
        if any(c[i] for i in range(rank, m.rows)) or any(c[i] % diag[i] for i in range(rank)):
            out.append(None)
            continue
        y = [c[i] // diag[i] for i in range(rank)] + [0] * (m.cols - rank)
        out.append(snf.V.apply(y))
    logger.debug("solve_columns %sx%s, %d targets", m.rows, m.cols, len(targets))
    return out


def solve(m: IntegerMatrix, b: Sequence[int]) -> Vector | None:
    """Integer solution of ``m @ x == b``, or ``None``."""
    return solve_columns(m, [b])[0]


def in_row_span(relations: IntegerMatrix, vec: Sequence[int]) -> bool:
    """Whether ``vec`` is an integer combination of the rows of ``relations``."""
    if relations.rows == 0:
        return not any(vec)
    return solve(relations.T, vec) is not None
