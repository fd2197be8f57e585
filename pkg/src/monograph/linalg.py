"""Exact dense linear algebra over the rationals.

Every entry is a ``fractions.Fraction``, so nothing ever rounds: results are
the mathematically exact values.  Matrices are immutable and dense; the graph
instances this package targets have at most a few hundred entries, so sparse
machinery would be pure overhead.

Subspaces are kept in a canonical reduced column echelon form (pivots 1,
pivot rows cleared, pivot rows strictly increasing left to right), which
makes subspace equality plain value equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

Rational = Fraction
Vector = tuple[Fraction, ...]


class DimensionMismatch(ValueError):
    """Operands have incompatible shapes or ambient dimensions."""


def rat(x: int | str | Fraction) -> Fraction:
    """Coerce an exact value to Fraction; floats are rejected outright."""
    if isinstance(x, float):
        raise TypeError("refusing float %r: use an int or a 'p/q' string" % (x,))
    return Fraction(x)


def parse_rational(text: str) -> Fraction:
    """Parse an integer or 'p/q' literal.

    Decimal literals are rejected so that no inexact value can sneak in
    through an input file.
    """
    text = text.strip()
    if "." in text or "e" in text.lower():
        raise ValueError("bad rational literal %r: decimals are not accepted, "
                         "write an integer or p/q" % (text,))
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError("bad rational literal %r: %s" % (text, exc)) from None
    return value


def format_rational(q: Fraction) -> str:
    """Render as 'n' when integral, else 'p/q' in lowest terms."""
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def vec(values: Iterable[int | str | Fraction]) -> Vector:
    return tuple(rat(v) for v in values)


@dataclass(frozen=True)
class Mat:
    """Immutable dense matrix of Fractions, row-major."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count %d does not match %dx%d"
                             % (len(self.entries), self.rows, self.cols))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int | str | Fraction]],
                  cols: int | None = None) -> Mat:
        """Build from an iterable of rows; `cols` disambiguates zero rows."""
        rows = [list(r) for r in rows]
        if rows:
            ncols = len(rows[0])
            if any(len(r) != ncols for r in rows):
                raise ValueError("ragged rows")
        else:
            ncols = 0 if cols is None else cols
        if cols is not None and rows and ncols != cols:
            raise ValueError("rows have %d columns, expected %d" % (ncols, cols))
        return cls(len(rows), ncols, tuple(rat(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int | str | Fraction]],
                     rows: int | None = None) -> Mat:
        cols = [list(c) for c in columns]
        if cols:
            nrows = len(cols[0])
            if any(len(c) != nrows for c in cols):
                raise ValueError("ragged columns")
        else:
            nrows = 0 if rows is None else rows
        if rows is not None and cols and nrows != rows:
            raise ValueError("columns have %d rows, expected %d" % (nrows, rows))
        return cls(nrows, len(cols),
                   tuple(rat(cols[j][i]) for i in range(nrows) for j in range(len(cols))))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Mat:
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> Mat:
        return cls(n, n, tuple(Fraction(1 if i == j else 0)
                               for i in range(n) for j in range(n)))

    @classmethod
    def column(cls, values: Iterable[int | str | Fraction]) -> Mat:
        v = vec(values)
        return cls(len(v), 1, v)

    @classmethod
    def block(cls, grid: Sequence[Sequence[Mat]]) -> Mat:
        """Assemble from a conformable grid of blocks."""
        if not grid or not grid[0]:
            raise ValueError("empty block grid")
        row_heights = [row[0].rows for row in grid]
        col_widths = [b.cols for b in grid[0]]
        for i, row in enumerate(grid):
            if len(row) != len(col_widths):
                raise DimensionMismatch("ragged block grid")
            for j, b in enumerate(row):
                if b.rows != row_heights[i] or b.cols != col_widths[j]:
                    raise DimensionMismatch("block (%d,%d) has shape %dx%d"
                                            % (i, j, b.rows, b.cols))
        entries: list[Fraction] = []
        for i, row in enumerate(grid):
            for r in range(row_heights[i]):
                for b in row:
                    entries.extend(b.row(r))
        return cls(sum(row_heights), sum(col_widths), tuple(entries))

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(key)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column_vector(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_list(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> Mat:
        return Mat(self.cols, self.rows,
                   tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def __add__(self, other: Mat) -> Mat:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("add %dx%d to %dx%d"
                                    % (self.rows, self.cols, other.rows, other.cols))
        return Mat(self.rows, self.cols,
                   tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: Mat) -> Mat:
        return self + (-other)

    def __neg__(self) -> Mat:
        return Mat(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c: int | Fraction) -> Mat:
        c = rat(c)
        return Mat(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __matmul__(self, other: Mat) -> Mat:
        if self.cols != other.rows:
            raise DimensionMismatch("multiply %dx%d by %dx%d"
                                    % (self.rows, self.cols, other.rows, other.cols))
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum((ri[k] * other[k, j] for k in range(self.cols)),
                               Fraction(0)))
        return Mat(self.rows, other.cols, tuple(out))

    def mul_vec(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatch("apply %dx%d to vector of length %d"
                                    % (self.rows, self.cols, len(v)))
        return tuple(sum((self[i, k] * v[k] for k in range(self.cols)), Fraction(0))
                     for i in range(self.rows))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    def __str__(self) -> str:
        grid = [[format_rational(x) for x in self.row(i)] for i in range(self.rows)]
        width = max((len(s) for r in grid for s in r), default=1)
        return "\n".join("[ " + "  ".join(s.rjust(width) for s in r) + " ]"
                         for r in grid)


def rref(m: Mat) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row echelon form and its pivot columns.

    The result is the unique RREF: pivots are 1, pivot columns are cleared
    above and below, pivot columns strictly increase down the rows.
    """
    work = [list(m.row(i)) for i in range(m.rows)]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        pivot_row = next((i for i in range(r, m.rows) if work[i][c] != 0), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = 1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(m.rows):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return Mat.from_rows(work, cols=m.cols), tuple(pivots)


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def det(m: Mat) -> Fraction:
    """Exact determinant.

    Row denominators are cleared first, then a fraction-free Bareiss
    elimination runs over the integers (every interior division is exact),
    and the cleared factors are divided back out at the end.
    """
    if m.rows != m.cols:
        raise DimensionMismatch("determinant of %dx%d matrix" % (m.rows, m.cols))
    n = m.rows
    if n == 0:
        return Fraction(1)
    scale = 1
    work: list[list[int]] = []
    for i in range(n):
        row = m.row(i)
        d = lcm(*(x.denominator for x in row))
        scale *= d
        work.append([int(x * d) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if work[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if work[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            work[k], work[swap] = work[swap], work[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = (work[k][k] * work[i][j]
                              - work[i][k] * work[k][j]) // prev
            work[i][k] = 0
        prev = work[k][k]
    return Fraction(sign * work[n - 1][n - 1], scale)


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^ambient_dim with a canonical basis.

    The basis matrix has one column per dimension, in reduced column
    echelon form, so two Subspace values are equal exactly when they are
    the same subspace.
    """

    ambient_dim: int
    basis: Mat

    def __post_init__(self) -> None:
        if self.basis.rows != self.ambient_dim:
            raise DimensionMismatch("basis has %d rows in ambient dimension %d"
                                    % (self.basis.rows, self.ambient_dim))

    @classmethod
    def zero(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, Mat.zeros(ambient_dim, 0))

    @classmethod
    def full(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, Mat.identity(ambient_dim))

    @classmethod
    def from_vectors(cls, ambient_dim: int,
                     vectors: Iterable[Sequence[int | str | Fraction]]) -> Subspace:
        """Span of the given vectors, canonicalized."""
        rows = [vec(v) for v in vectors]
        for r in rows:
            if len(r) != ambient_dim:
                raise DimensionMismatch("vector of length %d in ambient dimension %d"
                                        % (len(r), ambient_dim))
        if not rows:
            return cls.zero(ambient_dim)
        reduced, pivots = rref(Mat.from_rows(rows, cols=ambient_dim))
        cols = [reduced.row(i) for i in range(len(pivots))]
        return cls(ambient_dim, Mat.from_columns(cols, rows=ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.cols

    def vectors(self) -> tuple[Vector, ...]:
        return tuple(self.basis.column_vector(j) for j in range(self.dim))

    def contains(self, v: Sequence[int | str | Fraction]) -> bool:
        """Membership test by reducing v against the canonical basis."""
        w = list(vec(v))
        if len(w) != self.ambient_dim:
            raise DimensionMismatch("vector of length %d in ambient dimension %d"
                                    % (len(w), self.ambient_dim))
        for j in range(self.dim):
            col = self.basis.column_vector(j)
            p = next(i for i, x in enumerate(col) if x != 0)  # pivot entry is 1
            if w[p] != 0:
                f = w[p]
                w = [a - f * b for a, b in zip(w, col)]
        return all(a == 0 for a in w)

    def intersect(self, other: Subspace) -> Subspace:
        """Intersection, via the kernel of the concatenated bases.

        A coefficient vector (x, y) with A x + B y = 0 means A x = -B y lies
        in both spans; the A x parts of a kernel basis span the intersection.
        """
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("ambient dimensions %d and %d"
                                    % (self.ambient_dim, other.ambient_dim))
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim)
        stacked = Mat.block([[self.basis, other.basis]])
        coeffs = nullspace(stacked)
        vectors = [self.basis.mul_vec(c[:self.dim]) for c in coeffs.vectors()]
        return Subspace.from_vectors(self.ambient_dim, vectors)

    def plus(self, other: Subspace) -> Subspace:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("ambient dimensions %d and %d"
                                    % (self.ambient_dim, other.ambient_dim))
        return Subspace.from_vectors(self.ambient_dim,
                                     self.vectors() + other.vectors())


def nullspace(m: Mat) -> Subspace:
    """Canonical basis of {x : m x = 0}."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    vectors = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -reduced[i, f]
        vectors.append(v)
    return Subspace.from_vectors(m.cols, vectors)


def colspace(m: Mat) -> Subspace:
    """Canonical basis of the column span."""
    return Subspace.from_vectors(
        m.rows, [m.column_vector(j) for j in range(m.cols)])


def intersect(a: Subspace, b: Subspace) -> Subspace:
    return a.intersect(b)
