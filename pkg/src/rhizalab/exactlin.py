"""Exact rational vectors and matrices: row reduction, kernels, inverses.

Scalars are ``fractions.Fraction`` throughout; nothing in this package ever
touches floating point.  Row reduction picks the first nonzero entry in
column order as pivot, so every function here is deterministic and safe to
use for golden-file regressions.  All values are immutable after
construction.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionMismatch, ParseError, Singular

Vector = tuple[Fraction, ...]

F0 = Fraction(0)
F1 = Fraction(1)


def rational(text: str | int | Fraction) -> Fraction:
    """Parse "p" or "p/q" into a Fraction.  Decimal notation is rejected."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"bad rational {text!r}; decimal notation is not accepted")
    s = text.strip()
    num, slash, den = s.partition("/")
    try:
        if slash:
            return Fraction(int(num), int(den))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}: {exc}") from None
    try:
        return Fraction(int(num))
    except ValueError:
        raise ParseError(f"bad rational {text!r}; expected 'p' or 'p/q'") from None


def rational_str(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def vec(values) -> Vector:
    return tuple(rational(v) for v in values)


def vec_zero(n: int) -> Vector:
    return (F0,) * n


def basis_vec(n: int, i: int) -> Vector:
    return tuple(F1 if j == i else F0 for j in range(n))


def vec_add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def vec_neg(x: Vector) -> Vector:
    return tuple(-a for a in x)


def vec_scale(c: Fraction, x: Vector) -> Vector:
    return tuple(c * a for a in x)


def vec_is_zero(x: Vector) -> bool:
    return not any(x)


class Matrix:
    """Dense rows x cols grid of Fractions, row-major, immutable."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(rational(e) for e in entries)
        if len(entries) != rows * cols:
            raise DimensionMismatch(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def from_rows(cls, rows_) -> Matrix:
        rows_ = [list(r) for r in rows_]
        n = len(rows_)
        m = len(rows_[0]) if rows_ else 0
        for r in rows_:
            if len(r) != m:
                raise DimensionMismatch("ragged rows")
        return cls(n, m, [e for r in rows_ for e in r])

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, [F1 if i == j else F0 for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, [F0] * (rows * cols))

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> Matrix:
        return Matrix(
            self.cols,
            self.rows,
            [self.at(i, j) for j in range(self.cols) for i in range(self.rows)],
        )

    def apply(self, x: Vector) -> Vector:
        """Matrix-vector product."""
        if len(x) != self.cols:
            raise DimensionMismatch(f"cannot apply {self.rows}x{self.cols} to len-{len(x)} vector")
        out = []
        for i in range(self.rows):
            s = F0
            base = i * self.cols
            for j, xj in enumerate(x):
                if xj:
                    s += self.entries[base + j] * xj
            out.append(s)
        return tuple(out)

    def times(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        ent = []
        for i in range(self.rows):
            for j in range(other.cols):
                s = F0
                for k in range(self.cols):
                    a = self.at(i, k)
                    if a:
                        s += a * other.at(k, j)
                ent.append(s)
        return Matrix(self.rows, other.cols, ent)

    def scale(self, c: Fraction) -> Matrix:
        return Matrix(self.rows, self.cols, [c * e for e in self.entries])

    def add(self, other: Matrix) -> Matrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch in matrix addition")
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def sub(self, other: Matrix) -> Matrix:
        return self.add(other.scale(Fraction(-1)))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(rational_str(e) for e in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: {body})"


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row echelon form and rank.  First-nonzero pivoting."""
    a = m.to_rows()
    n_rows, n_cols = m.rows, m.cols
    piv_row = 0
    for col in range(n_cols):
        pivot = None
        for r in range(piv_row, n_rows):
            if a[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        if pivot != piv_row:
            a[piv_row], a[pivot] = a[pivot], a[piv_row]
        p = a[piv_row][col]
        if p != 1:
            a[piv_row] = [e / p for e in a[piv_row]]
        for r in range(n_rows):
            if r == piv_row:
                continue
            f = a[r][col]
            if f:
                a[r] = [e - f * g for e, g in zip(a[r], a[piv_row])]
        piv_row += 1
        if piv_row == n_rows:
            break
    return Matrix.from_rows(a) if n_rows else m, piv_row


def rank(m: Matrix) -> int:
    return rref(m)[1]


def pivot_columns(reduced: Matrix, rk: int) -> list[int]:
    cols = []
    for r in range(rk):
        for c in range(reduced.cols):
            if reduced.at(r, c):
                cols.append(c)
                break
    return cols


def nullspace_basis(m: Matrix) -> list[Vector]:
    """Deterministic kernel basis: one vector per free column, in column order."""
    reduced, rk = rref(m)
    pivots = pivot_columns(reduced, rk)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [F0] * m.cols
        v[free] = F1
        for r, pc in enumerate(pivots):
            v[pc] = -reduced.at(r, free)
        basis.append(tuple(v))
    return basis


def invert(m: Matrix) -> Matrix:
    """Exact inverse; raises Singular when the matrix has no inverse."""
    if m.rows != m.cols:
        raise DimensionMismatch("only square matrices invert")
    n = m.rows
    a = [list(m.row(i)) + [F1 if j == i else F0 for j in range(n)] for i in range(n)]
    piv_row = 0
    for col in range(n):
        pivot = None
        for r in range(piv_row, n):
            if a[r][col]:
                pivot = r
                break
        if pivot is None:
            raise Singular(f"matrix of rank < {n}")
        if pivot != piv_row:
            a[piv_row], a[pivot] = a[pivot], a[piv_row]
        p = a[piv_row][col]
        if p != 1:
            a[piv_row] = [e / p for e in a[piv_row]]
        for r in range(n):
            if r == piv_row:
                continue
            f = a[r][col]
            if f:
                a[r] = [e - f * g for e, g in zip(a[r], a[piv_row])]
        piv_row += 1
    return Matrix.from_rows([row[n:] for row in a])


def solve(m: Matrix, b: Vector) -> Vector:
    """Solve m x = b for square m; raises Singular otherwise."""
    return invert(m).apply(b)
