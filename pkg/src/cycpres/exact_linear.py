"""Exact integer linear algebra: determinants, Smith normal form, Sylvester matrices.

Everything here runs on Python's arbitrary-precision integers.  Determinants
use fraction-free (Bareiss) elimination, so every intermediate value is itself
a minor of the input and no rational arithmetic is ever needed.  The Smith
normal form routine pivots on the smallest-magnitude nonzero entry, which
keeps coefficient growth tame at the matrix sizes this package works with
(n up to a few dozen).
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["IntMatrix", "SmithForm", "det", "smith_normal_form", "sylvester"]


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix, entries stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix":
        rows = [list(r) for r in rows]
        m = len(rows)
        n = len(rows[0]) if rows else 0
        if any(len(r) != n for r in rows):
            raise ValueError("rows have inconsistent lengths")
        return cls(m, n, tuple(int(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors d_1 | d_2 | ... of an integer matrix.

    Factors are non-negative; trailing zeros record a rank deficit.  For a
    nonsingular square matrix the product of the factors equals |det|.
    """

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        prev = None
        for d in self.invariant_factors:
            if d < 0:
                raise ValueError("invariant factors must be non-negative")
            if prev is not None:
                if prev == 0 and d != 0:
                    raise ValueError("zero factor followed by nonzero factor")
                if prev != 0 and d % prev != 0:
                    raise ValueError("divisibility chain violated")
            prev = d

    def __iter__(self):
        return iter(self.invariant_factors)


def det(M: IntMatrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination.

    Raises ValueError for non-square input.  A zero result is meaningful (it
    signals a singular matrix), never an error.
    """
    if not M.is_square:
        raise ValueError(f"determinant requires a square matrix, got {M.rows}x{M.cols}")
    n = M.rows
    if n == 0:
        return 1
    a = M.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            # Bareiss update: every entry stays an exact minor of M.
            row_i[k + 1 :] = [
                (pivot * row_i[j] - aik * row_k[j]) // prev for j in range(k + 1, n)
            ]
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _locate_min_entry(a, t, rows, cols):
    best = None
    for i in range(t, rows):
        row = a[i]
        for j in range(t, cols):
            v = row[j]
            if v:
                av = abs(v)
                if best is None or av < best[0]:
                    best = (av, i, j)
                    if av == 1:
                        return best
    return best


def smith_normal_form(M: IntMatrix) -> SmithForm:
    """Invariant factors of M under unimodular row/column operations.

    Classic elimination pivoting on the smallest nonzero entry, with the usual
    fix-up pass that folds any entry not divisible by the pivot back into the
    pivot row until the divisibility chain d_1 | d_2 | ... holds.
    """
    rows, cols = M.rows, M.cols
    a = M.to_lists()
    bound = min(rows, cols)
    diag: list[int] = []
    t = 0
    while t < bound:
        best = _locate_min_entry(a, t, rows, cols)
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            a[t], a[bi] = a[bi], a[t]
        if bj != t:
            for row in a:
                row[t], row[bj] = row[bj], row[t]
        # Clear row t and column t; remainders shrink the pivot, so repeat.
        while True:
            pivot = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                v = a[i][t]
                if v:
                    q = v // pivot
                    if q:
                        row_i, row_t = a[i], a[t]
                        for j in range(t, cols):
                            row_i[j] -= q * row_t[j]
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                v = a[t][j]
                if v:
                    q = v // pivot
                    if q:
                        for row in a:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        dirty = True
            if not dirty:
                break
            best = _locate_min_entry(a, t, rows, cols)
            _, bi, bj = best
            if bi != t:
                a[t], a[bi] = a[bi], a[t]
            if bj != t:
                for row in a:
                    row[t], row[bj] = row[bj], row[t]
        pivot = a[t][t]
        fix_row = None
        for i in range(t + 1, rows):
            row_i = a[i]
            if any(row_i[j] % pivot for j in range(t + 1, cols)):
                fix_row = i
                break
        if fix_row is not None:
            row_t, row_f = a[t], a[fix_row]
            for j in range(t, cols):
                row_t[j] += row_f[j]
            continue
        diag.append(abs(pivot))
        t += 1
    diag.extend([0] * (bound - len(diag)))
    return SmithForm(tuple(diag))


def _coeffs_of(f) -> tuple[int, ...]:
    if hasattr(f, "coeffs"):
        return tuple(f.coeffs)
    return tuple(int(x) for x in f)


def sylvester(f, g) -> IntMatrix:
    """Sylvester matrix of f and g; its determinant is Res(f, g).

    With deg f = m and deg g = n the matrix is (m+n)-square: n rows of f's
    coefficients (highest first) followed by m rows of g's, each block shifted
    one column per row.  Under this layout det equals
    lc(f)^deg(g) * prod of g over the roots of f.
    """
    fc = _coeffs_of(f)
    gc = _coeffs_of(g)
    if not fc or not gc:
        raise ValueError("resultant of the zero polynomial is undefined")
    m = len(fc) - 1
    n = len(gc) - 1
    size = m + n
    rows = []
    f_desc = list(reversed(fc))
    g_desc = list(reversed(gc))
    for i in range(n):
        rows.append([0] * i + f_desc + [0] * (size - i - m - 1))
    for i in range(m):
        rows.append([0] * i + g_desc + [0] * (size - i - n - 1))
    if size == 0:
        return IntMatrix(0, 0, ())
    return IntMatrix.from_rows(rows)
