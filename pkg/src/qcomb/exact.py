"""Exact scalars and sparse linear algebra over the Gaussian rationals.

Everything downstream is built on three value types: Scalar (a Gaussian
rational, plain rationals being the im == 0 subfield), Matrix (sparse, keyed
by (row, col)) and Tensor3 (sparse, keyed by (k, i, j)).  No floating point
anywhere; every equality test is exact.  Elimination uses a fixed pivot rule
(first nonzero in row-major order) so kernels and solutions are reproducible
bit for bit.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

_RAT = re.compile(r"^[+-]?\d+(/\d+)?$")
_GAUSS = re.compile(r"^(?P<re>[+-]?\d+(?:/\d+)?)(?P<sign>[+-])(?P<im>\d+(?:/\d+)?)\s*i$")


@dataclass(frozen=True)
class Scalar:
    """An element of Q(i), stored as a pair of reduced fractions."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @staticmethod
    def of(value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return Scalar(Fraction(value))
        if isinstance(value, str):
            return Scalar.parse(value)
        raise TypeError(f"cannot make a Scalar out of {value!r}")

    @staticmethod
    def rational(p, q=1) -> "Scalar":
        return Scalar(Fraction(p, q))

    @staticmethod
    def gauss(re, im) -> "Scalar":
        return Scalar(Fraction(re), Fraction(im))

    @staticmethod
    def parse(text: str) -> "Scalar":
        """Parse "p/q" or "p/q+r/s i" (also "p/q-r/s i")."""
        text = text.strip()
        if _RAT.match(text):
            return Scalar(Fraction(text))
        m = _GAUSS.match(text)
        if m is None:
            raise ValueError(f"bad scalar literal: {text!r}")
        im = Fraction(m.group("im"))
        if m.group("sign") == "-":
            im = -im
        return Scalar(Fraction(m.group("re")), im)

    def __str__(self) -> str:
        if self.im == 0:
            return _frac_str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"{_frac_str(self.re)}{sign}{_frac_str(abs(self.im))} i"

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def __add__(self, other: "Scalar") -> "Scalar":
        return Scalar(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "Scalar") -> "Scalar":
        return Scalar(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "Scalar":
        return Scalar(-self.re, -self.im)

    def __mul__(self, other: "Scalar") -> "Scalar":
        if self.im == 0 and other.im == 0:
            return Scalar(self.re * other.re)
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __truediv__(self, other: "Scalar") -> "Scalar":
        if not other:
            raise ZeroDivisionError("division by zero Scalar")
        if self.im == 0 and other.im == 0:
            return Scalar(self.re / other.re)
        n = other.re * other.re + other.im * other.im
        return Scalar(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def abs_squared(self) -> "Scalar":
        """|z|^2 as a (rational) Scalar."""
        return Scalar(self.re * self.re + self.im * self.im)

    def is_rational(self) -> bool:
        return self.im == 0

    def is_nonneg_rational(self) -> bool:
        return self.im == 0 and self.re >= 0


ZERO = Scalar()
ONE = Scalar(Fraction(1))
I = Scalar(Fraction(0), Fraction(1))


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rational_sqrt(x: Fraction):
    """Exact square root of a nonnegative rational, or None if irrational."""
    if x < 0:
        return None
    pn, pd = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if pn * pn == x.numerator and pd * pd == x.denominator:
        return Fraction(pn, pd)
    return None


# -- vectors are plain tuples of Scalar ------------------------------------

Vector = tuple


def vec(values) -> Vector:
    return tuple(Scalar.of(v) for v in values)

def zero_vec(n: int) -> Vector:
    return (ZERO,) * n

def unit_vec(n: int, k: int) -> Vector:
    return tuple(ONE if j == k else ZERO for j in range(n))

def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))

def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))

def vec_scale(c: Scalar, u: Vector) -> Vector:
    return tuple(c * a for a in u)

def vec_dot(u: Vector, v: Vector) -> Scalar:
    total = ZERO
    for a, b in zip(u, v, strict=True):
        if a and b:
            total = total + a * b
    return total

def vec_is_zero(u: Vector) -> bool:
    return not any(u)


class Matrix:
    """Sparse exact matrix; entries maps (row, col) -> nonzero Scalar.

    Treated as immutable after construction: no method mutates self.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries=None):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix shape")
        self.rows = rows
        self.cols = cols
        clean = {}
        for (r, c), v in (entries or {}).items():
            v = Scalar.of(v)
            if not (0 <= r < rows and 0 <= c < cols):
                raise ValueError(f"entry index {(r, c)} out of range for {rows}x{cols}")
            if v:
                clean[(r, c)] = v
        self.entries = clean

    @staticmethod
    def zeros(rows: int, cols: int) -> "Matrix":
        return Matrix(rows, cols)

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, {(i, i): ONE for i in range(n)})

    @staticmethod
    def from_rows(rows_data) -> "Matrix":
        rows_data = [list(r) for r in rows_data]
        nr = len(rows_data)
        nc = len(rows_data[0]) if rows_data else 0
        entries = {}
        for i, row in enumerate(rows_data):
            if len(row) != nc:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                v = Scalar.of(v)
                if v:
                    entries[(i, j)] = v
        return Matrix(nr, nc, entries)

    @staticmethod
    def from_cols(cols_data) -> "Matrix":
        return Matrix.from_rows(list(map(list, zip(*[list(c) for c in cols_data])))) if cols_data else Matrix(0, 0)

    @staticmethod
    def col_vector(v: Vector) -> "Matrix":
        return Matrix(len(v), 1, {(i, 0): x for i, x in enumerate(v) if x})

    @staticmethod
    def row_vector(v: Vector) -> "Matrix":
        return Matrix(1, len(v), {(0, j): x for j, x in enumerate(v) if x})

    def __getitem__(self, rc) -> Scalar:
        return self.entries.get(rc, ZERO)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self.entries.items())))

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols}, nnz={len(self.entries)})"

    def is_zero(self) -> bool:
        return not self.entries

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        entries = dict(self.entries)
        for rc, v in other.entries.items():
            entries[rc] = entries.get(rc, ZERO) + v
        return Matrix(self.rows, self.cols, entries)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        entries = dict(self.entries)
        for rc, v in other.entries.items():
            entries[rc] = entries.get(rc, ZERO) - v
        return Matrix(self.rows, self.cols, entries)

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, {rc: -v for rc, v in self.entries.items()})

    def scale(self, c) -> "Matrix":
        c = Scalar.of(c)
        return Matrix(self.rows, self.cols, {rc: c * v for rc, v in self.entries.items()})

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        by_row = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        entries = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                key = (i, j)
                entries[key] = entries.get(key, ZERO) + a * b
        return Matrix(self.rows, other.cols, entries)

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        out = [ZERO] * self.rows
        for (i, j), a in self.entries.items():
            if v[j]:
                out[i] = out[i] + a * v[j]
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product, row-major block order."""
        entries = {}
        for (i, j), a in self.entries.items():
            for (p, q), b in other.entries.items():
                entries[(i * other.rows + p, j * other.cols + q)] = a * b
        return Matrix(self.rows * other.rows, self.cols * other.cols, entries)

    def col(self, j: int) -> Vector:
        out = [ZERO] * self.rows
        for (r, c), v in self.entries.items():
            if c == j:
                out[r] = v
        return tuple(out)

    def row(self, i: int) -> Vector:
        out = [ZERO] * self.cols
        for (r, c), v in self.entries.items():
            if r == i:
                out[c] = v
        return tuple(out)

    def to_rows(self):
        return [[self[(i, j)] for j in range(self.cols)] for i in range(self.rows)]

    def _same_shape(self, other: "Matrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}")


def _sparse_rows(m: Matrix):
    rows = [dict() for _ in range(m.rows)]
    for (r, c), v in m.entries.items():
        rows[r][c] = v
    return rows


def _eliminate(m: Matrix):
    """Row-reduce; returns (rref rows as dicts, pivot column list).

    Pivot rule: columns scanned left to right, pivot row is the first
    (lowest index) unused row with a nonzero entry; deterministic.
    """
    rows = _sparse_rows(m)
    pivots = []
    pivot_rows = []
    used = [False] * m.rows
    for col in range(m.cols):
        pivot = None
        for r in range(m.rows):
            if not used[r] and rows[r].get(col):
                pivot = r
                break
        if pivot is None:
            continue
        used[pivot] = True
        inv = ONE / rows[pivot][col]
        rows[pivot] = {c: inv * v for c, v in rows[pivot].items()}
        for r in range(m.rows):
            if r != pivot and rows[r].get(col):
                factor = rows[r][col]
                new_row = dict(rows[r])
                for c, v in rows[pivot].items():
                    w = new_row.get(c, ZERO) - factor * v
                    if w:
                        new_row[c] = w
                    else:
                        new_row.pop(c, None)
                rows[r] = new_row
        pivots.append(col)
        pivot_rows.append(pivot)
    return rows, pivots, pivot_rows


def rank(m: Matrix) -> int:
    _, pivots, _ = _eliminate(m)
    return len(pivots)


def kernel(m: Matrix) -> Matrix:
    """Basis of the null space, returned as matrix columns.

    Column count is cols(m) - rank(m); each free variable contributes the
    standard basis vector with 1 in its slot and the negated pivot-row
    coefficients above.
    """
    rows, pivots, pivot_rows = _eliminate(m)
    pivot_of_col = dict(zip(pivots, pivot_rows))
    free_cols = [c for c in range(m.cols) if c not in pivot_of_col]
    entries = {}
    for idx, f in enumerate(free_cols):
        entries[(f, idx)] = ONE
        for pc, pr in pivot_of_col.items():
            v = rows[pr].get(f)
            if v:
                entries[(pc, idx)] = -v
    return Matrix(m.cols, len(free_cols), entries)


def solve(m: Matrix, b: Vector):
    """One exact solution of m.x = b, or None when inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    if len(b) != m.rows:
        raise ValueError("right-hand side length does not match row count")
    aug = Matrix(
        m.rows,
        m.cols + 1,
        {**m.entries, **{(i, m.cols): v for i, v in enumerate(b) if v}},
    )
    rows, pivots, pivot_rows = _eliminate(aug)
    x = [ZERO] * m.cols
    for col, r in zip(pivots, pivot_rows):
        if col == m.cols:
            return None  # pivot in the augmented column: inconsistent
        x[col] = rows[r].get(m.cols, ZERO)
    return tuple(x)


def solve_matrix(m: Matrix, b: Matrix):
    """Columnwise exact solve of m.X = b; None if any column is inconsistent."""
    if b.rows != m.rows:
        raise ValueError("shape mismatch in solve_matrix")
    cols = []
    for j in range(b.cols):
        x = solve(m, b.col(j))
        if x is None:
            return None
        cols.append(x)
    entries = {}
    for j, x in enumerate(cols):
        for i, v in enumerate(x):
            if v:
                entries[(i, j)] = v
    return Matrix(m.cols, b.cols, entries)


class Tensor3:
    """Sparse order-3 tensor; entries maps (k, i, j) -> nonzero Scalar."""

    __slots__ = ("dims", "entries")

    def __init__(self, dims, entries=None):
        d0, d1, d2 = dims
        if min(d0, d1, d2) < 0:
            raise ValueError("negative tensor shape")
        self.dims = (d0, d1, d2)
        clean = {}
        for (k, i, j), v in (entries or {}).items():
            v = Scalar.of(v)
            if not (0 <= k < d0 and 0 <= i < d1 and 0 <= j < d2):
                raise ValueError(f"entry index {(k, i, j)} out of range for {self.dims}")
            if v:
                clean[(k, i, j)] = v
        self.entries = clean

    def __getitem__(self, kij) -> Scalar:
        return self.entries.get(kij, ZERO)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Tensor3)
            and self.dims == other.dims
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.dims, frozenset(self.entries.items())))

    def __repr__(self) -> str:
        return f"Tensor3({self.dims}, nnz={len(self.entries)})"

    def contract(self, axis: int, v: Vector) -> Matrix:
        """Contract the named axis with v; remaining axes keep their order."""
        if axis not in (0, 1, 2):
            raise ValueError(f"axis {axis} out of range")
        if len(v) != self.dims[axis]:
            raise ValueError("vector length does not match contracted axis")
        shape = tuple(d for a, d in enumerate(self.dims) if a != axis)
        entries = {}
        for (k, i, j), t in self.entries.items():
            idx = (k, i, j)
            w = v[idx[axis]]
            if not w:
                continue
            rc = tuple(idx[a] for a in range(3) if a != axis)
            entries[rc] = entries.get(rc, ZERO) + t * w
        return Matrix(shape[0], shape[1], entries)

    def slice0(self, k: int) -> Matrix:
        """The (i, j) matrix at fixed first index k."""
        entries = {}
        for (kk, i, j), v in self.entries.items():
            if kk == k:
                entries[(i, j)] = v
        return Matrix(self.dims[1], self.dims[2], entries)
