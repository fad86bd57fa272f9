"""Exact integer linear algebra: Smith and Hermite normal forms, kernels, solving.

Everything is plain Python ``int`` (arbitrary precision). Matrices are
immutable; the elimination routines copy into nested lists, work in place
on the copy and wrap the result again.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix stored row-major.

    ``0 x n`` and ``n x 0`` matrices are legal and act as the maps to and
    from the zero lattice.
    """

    rows: int
    cols: int
    entries: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        entries = tuple(int(x) for x in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(entries)}"
            )
        object.__setattr__(self, "entries", entries)

    # construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for i, r in enumerate(rows):
            if len(r) != cols:
                raise ValueError(f"row {i} has length {len(r)}, expected {cols}")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> IntMatrix:
        return cls.from_rows([list(c) for c in columns], rows).T if columns else cls.zeros(rows, 0)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diag(cls, values: Sequence[int], rows: int | None = None, cols: int | None = None) -> IntMatrix:
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        data = [[0] * cols for _ in range(rows)]
        for i, v in enumerate(values):
            data[i][i] = v
        return cls.from_rows(data, cols)

    # access -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def row(self, i: int) -> list[int]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int) -> list[int]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def columns(self) -> list[list[int]]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(self.cols, self.rows,
                         tuple(self.entries[i * self.cols + j]
                               for j in range(self.cols) for i in range(self.rows)))

    def is_zero(self) -> bool:
        return not any(self.entries)

    # arithmetic ---------------------------------------------------------

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        a = self.to_rows()
        bt = other.T.to_rows()
        return IntMatrix(self.rows, other.cols,
                         tuple(sum(x * y for x, y in zip(r, c)) for r in a for c in bt))

    def apply(self, v: Sequence[int]) -> list[int]:
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for {self.shape} matrix")
        return [sum(x * y for x, y in zip(r, v)) for r in self.to_rows()]

    def __neg__(self) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def hstack(self, *others: IntMatrix) -> IntMatrix:
        mats = (self,) + others
        if any(m.rows != self.rows for m in mats):
            raise ValueError("hstack needs equal row counts")
        rows = [sum((m.row(i) for m in mats), []) for i in range(self.rows)]
        return IntMatrix.from_rows(rows, sum(m.cols for m in mats))

    def vstack(self, *others: IntMatrix) -> IntMatrix:
        mats = (self,) + others
        if any(m.cols != self.cols for m in mats):
            raise ValueError("vstack needs equal column counts")
        return IntMatrix(sum(m.rows for m in mats), self.cols,
                         sum((m.entries for m in mats), ()))

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> IntMatrix:
        rows, cols = list(rows), list(cols)
        return IntMatrix.from_rows([[self[i, j] for j in cols] for i in rows], len(cols))

    def __repr__(self):
        return f"IntMatrix({self.rows}x{self.cols}, {self.to_rows()})"


def block_diag(*mats: IntMatrix) -> IntMatrix:
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    data = [[0] * cols for _ in range(rows)]
    r0 = c0 = 0
    for m in mats:
        for i, row in enumerate(m.to_rows()):
            data[r0 + i][c0:c0 + m.cols] = row
        r0 += m.rows
        c0 += m.cols
    return IntMatrix.from_rows(data, cols)


def determinant(M: IntMatrix) -> int:
    """Fraction-free (Bareiss) determinant."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    a = M.to_rows()
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


# elementary operations on nested lists -----------------------------------

def _swap_rows(a, i, j):
    a[i], a[j] = a[j], a[i]


def _swap_cols(a, i, j):
    for r in a:
        r[i], r[j] = r[j], r[i]


def _add_row(a, src, dst, q):
    """row[dst] += q * row[src]"""
    rs, rd = a[src], a[dst]
    for k in range(len(rd)):
        rd[k] += q * rs[k]


def _add_col(a, src, dst, q):
    """col[dst] += q * col[src]"""
    for r in a:
        r[dst] += q * r[src]


def _neg_row(a, i):
    a[i] = [-x for x in a[i]]


def _neg_col(a, j):
    for r in a:
        r[j] = -r[j]


def _ident(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def snf(M: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form: returns ``(U, D, V)`` with ``U @ M @ V == D``.

    ``U`` and ``V`` are unimodular and ``D`` is diagonal with non-negative
    entries ``d1 | d2 | ... | dr`` followed by zeros. At each stage the
    pivot is the nonzero entry of least absolute value in the active block
    (ties broken by row, then column), which keeps entries small and makes
    the output deterministic.
    """
    m, n = M.rows, M.cols
    a = M.to_rows()
    u = _ident(m)
    v = _ident(n)
    t = 0
    while t < min(m, n):
        pivot = _min_abs_entry(a, t, m, n)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            _swap_rows(a, t, pi)
            _swap_rows(u, t, pi)
        if pj != t:
            _swap_cols(a, t, pj)
            _swap_cols(v, t, pj)
        p = a[t][t]
        dirty = False
        for i in range(t + 1, m):
            if a[i][t]:
                q = a[i][t] // p
                _add_row(a, t, i, -q)
                _add_row(u, t, i, -q)
                dirty = dirty or a[i][t] != 0
        for j in range(t + 1, n):
            if a[t][j]:
                q = a[t][j] // p
                _add_col(a, t, j, -q)
                _add_col(v, t, j, -q)
                dirty = dirty or a[t][j] != 0
        if dirty:
            # a smaller remainder now sits in row/column t; re-pivot
            continue
        bad = next((i for i in range(t + 1, m)
                    if any(a[i][j] % p for j in range(t + 1, n))), None)
        if bad is not None:
            _add_row(a, bad, t, 1)
            _add_row(u, bad, t, 1)
            continue
        if p < 0:
            _neg_row(a, t)
            _neg_row(u, t)
        t += 1
    return (IntMatrix.from_rows(u, m), IntMatrix.from_rows(a, n), IntMatrix.from_rows(v, n))


def _min_abs_entry(a, t, m, n):
    best = None
    best_val = 0
    for i in range(t, m):
        row = a[i]
        for j in range(t, n):
            x = row[j]
            if x and (best is None or abs(x) < best_val):
                best, best_val = (i, j), abs(x)
    return best


def smith_diagonal(M: IntMatrix) -> list[int]:
    """Nonzero diagonal entries of the Smith form of ``M``."""
    _, d, _ = snf(M)
    out = []
    for k in range(min(d.rows, d.cols)):
        if d[k, k] == 0:
            break
        out.append(d[k, k])
    return out


def rank(M: IntMatrix) -> int:
    return len(smith_diagonal(M))


def hnf_columns(M: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Column Hermite normal form: ``(H, V)`` with ``M @ V == H``, V unimodular.

    ``H`` is in column echelon form: the pivot rows of successive nonzero
    columns strictly increase, pivots are positive, entries of a pivot row
    lying in earlier columns are reduced into ``[0, pivot)``, and zero
    columns come last.
    """
    m, n = M.rows, M.cols
    a = M.to_rows()
    v = _ident(n)
    c = 0
    for r in range(m):
        if c >= n:
            break
        while True:
            live = [j for j in range(c, n) if a[r][j]]
            if not live:
                break
            j0 = min(live, key=lambda j: (abs(a[r][j]), j))
            if j0 != c:
                _swap_cols(a, c, j0)
                _swap_cols(v, c, j0)
            p = a[r][c]
            done = True
            for j in range(c + 1, n):
                if a[r][j]:
                    q = a[r][j] // p
                    _add_col(a, c, j, -q)
                    _add_col(v, c, j, -q)
                    done = done and a[r][j] == 0
            if done:
                break
        if a[r][c] == 0:
            continue
        if a[r][c] < 0:
            _neg_col(a, c)
            _neg_col(v, c)
        p = a[r][c]
        for j in range(c):
            q = a[r][j] // p
            if q:
                _add_col(a, c, j, -q)
                _add_col(v, c, j, -q)
        c += 1
    return IntMatrix.from_rows(a, n), IntMatrix.from_rows(v, n)


def image_basis(M: IntMatrix) -> IntMatrix:
    """Columns forming a basis of the column span of ``M`` (HNF, zero columns dropped)."""
    h, _ = hnf_columns(M)
    keep = [j for j in range(h.cols) if any(h.column(j))]
    return h.submatrix(range(h.rows), keep)


def kernel_basis(M: IntMatrix) -> IntMatrix:
    """Columns forming a Z-basis of ``{x : M x = 0}``.

    The kernel is read off the Smith transform and then put into column
    Hermite form, so the basis returned is canonical.
    """
    _, d, v = snf(M)
    r = len([k for k in range(min(d.rows, d.cols)) if d[k, k]])
    raw = v.submatrix(range(v.rows), range(r, v.cols))
    return image_basis(raw)


def solve(M: IntMatrix, b: Sequence[int]) -> list[int] | None:
    """Some integer ``x`` with ``M x = b``, or ``None`` if there is none."""
    if len(b) != M.rows:
        raise ValueError(f"right-hand side has length {len(b)}, matrix has {M.rows} rows")
    x = solve_matrix(M, IntMatrix(len(b), 1, tuple(b)))
    return None if x is None else x.column(0)


def solve_matrix(M: IntMatrix, B: IntMatrix) -> IntMatrix | None:
    """Integer ``X`` with ``M X = B`` column by column, or ``None``."""
    if B.rows != M.rows:
        raise ValueError("row count mismatch")
    u, d, v = snf(M)
    r = min(d.rows, d.cols)
    cols = []
    for b in B.columns():
        ub = u.apply(b)
        y = [0] * M.cols
        for i, c in enumerate(ub):
            di = d[i, i] if i < r else 0
            if di == 0:
                if c:
                    return None
            elif c % di:
                return None
            else:
                y[i] = c // di
        cols.append(v.apply(y))
    return IntMatrix.from_columns(cols, M.cols)


def in_column_span(M: IntMatrix, B: IntMatrix) -> bool:
    return solve_matrix(M, B) is not None
