"""Dense exact matrices over the rationals.

Rank uses fraction-free (Bareiss) elimination over the integers after
clearing row denominators, which keeps coefficient growth polynomial at
the tensor-power sizes this package works at.  Floating point is never
used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class MatrixQ:
    """Row-major dense matrix with Fraction entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        entries = [e if isinstance(e, Fraction) else Fraction(e) for e in entries]
        if len(entries) != rows * cols:
            raise ValueError(f"need {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "MatrixQ":
        return cls(rows, cols, [Fraction(0)] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "MatrixQ":
        return cls(n, n, [Fraction(int(i == j)) for i in range(n) for j in range(n)])

    @classmethod
    def from_rows(cls, rows) -> "MatrixQ":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r])

    def to_rows(self):
        c = self.cols
        return [list(self.entries[i * c : (i + 1) * c]) for i in range(self.rows)]

    def __getitem__(self, key):
        i, j = key
        return self.entries[i * self.cols + j]

    def __eq__(self, other):
        if not isinstance(other, MatrixQ):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __add__(self, other):
        self._same_shape(other)
        return MatrixQ(
            self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)]
        )

    def __sub__(self, other):
        self._same_shape(other)
        return MatrixQ(
            self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)]
        )

    def __neg__(self):
        return MatrixQ(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, s) -> "MatrixQ":
        s = Fraction(s)
        return MatrixQ(self.rows, self.cols, [s * a for a in self.entries])

    def __mul__(self, other):
        if not isinstance(other, MatrixQ):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        n, m, p = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = [Fraction(0)] * (n * p)
        for i in range(n):
            arow = a[i * m : (i + 1) * m]
            for k, aik in enumerate(arow):
                if aik == 0:
                    continue
                boff = k * p
                ooff = i * p
                for j in range(p):
                    bkj = b[boff + j]
                    if bkj:
                        out[ooff + j] += aik * bkj
        return MatrixQ(n, p, out)

    def transpose(self) -> "MatrixQ":
        return MatrixQ(
            self.cols,
            self.rows,
            [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return sum(
            (self.entries[i * self.cols + i] for i in range(self.rows)), Fraction(0)
        )

    def is_idempotent(self) -> bool:
        return self.rows == self.cols and self * self == self

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def rank(self) -> int:
        """Rank over the rationals by integer Bareiss elimination."""
        m = []
        for i in range(self.rows):
            row = self.entries[i * self.cols : (i + 1) * self.cols]
            scale = 1
            for e in row:
                d = e.denominator
                scale = scale * d // gcd(scale, d)
            m.append([int(e * scale) for e in row])
        return _bareiss_rank(m, self.rows, self.cols)

    def rref(self):
        """Reduced row echelon form; returns (pivot column list, row list)."""
        rows = self.to_rows()
        nrows, ncols = self.rows, self.cols
        pivots = []
        r = 0
        for c in range(ncols):
            pivot = None
            for i in range(r, nrows):
                if rows[i][c] != 0:
                    pivot = i
                    break
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            pv = rows[r][c]
            rows[r] = [x / pv for x in rows[r]]
            for i in range(nrows):
                if i != r and rows[i][c] != 0:
                    f = rows[i][c]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == nrows:
                break
        return pivots, rows

    def nullspace(self):
        """Basis of the kernel as a list of column vectors (lists of Fractions)."""
        pivots, rows = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            vec = [Fraction(0)] * self.cols
            vec[fc] = Fraction(1)
            for r, pc in enumerate(pivots):
                vec[pc] = -rows[r][fc]
            basis.append(vec)
        return basis

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def __repr__(self):
        return f"MatrixQ({self.rows}x{self.cols})"


def _bareiss_rank(m, nrows, ncols) -> int:
    prev = 1
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if m[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        mrow = m[r]
        for i in range(r + 1, nrows):
            mic = m[i][c]
            irow = m[i]
            for j in range(c + 1, ncols):
                irow[j] = (pv * irow[j] - mic * mrow[j]) // prev
            irow[c] = 0
        prev = pv
        r += 1
        if r == nrows:
            break
    return r


def rank(matrix: MatrixQ) -> int:
    """Rank over the rationals; for an idempotent P this equals trace(P)."""
    return matrix.rank()


def solve_exact(a: MatrixQ, b: MatrixQ) -> MatrixQ:
    """Solve a * x = b columnwise; raises ValueError when inconsistent.

    When the system is underdetermined the free coordinates are set to 0.
    """
    if a.rows != b.rows:
        raise ValueError("shape mismatch in solve")
    aug = MatrixQ.from_rows(
        [a.to_rows()[i] + b.to_rows()[i] for i in range(a.rows)]
    )
    pivots, rows = aug.rref()
    if any(p >= a.cols for p in pivots):
        raise ValueError("inconsistent linear system")
    out = [[Fraction(0)] * b.cols for _ in range(a.cols)]
    for r, pc in enumerate(pivots):
        for j in range(b.cols):
            out[pc][j] = rows[r][a.cols + j]
    return MatrixQ.from_rows(out)


def from_columns(cols, nrows: int) -> MatrixQ:
    """Assemble a matrix from a list of column vectors."""
    ncols = len(cols)
    entries = []
    for i in range(nrows):
        for c in cols:
            entries.append(c[i])
    return MatrixQ(nrows, ncols, entries)
