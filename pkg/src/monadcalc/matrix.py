"""Dense exact matrices over Q(i) and canonical subspaces.

Everything is immutable by convention; operations return fresh values.
Subspaces are stored in reduced column echelon form so that equality of
subspaces is equality of their basis matrices.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import DimensionMismatch, NonSquareMatrix
from .field import ONE, QI, ZERO, qi


class Matrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[QI]):
        if rows < 0 or cols < 0:
            raise DimensionMismatch("negative matrix dimensions")
        entries = tuple(e if isinstance(e, QI) else qi(e) for e in entries)
        if len(entries) != rows * cols:
            raise DimensionMismatch(
                f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    # -- constructors ---------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [ONE if i == j else ZERO
                          for i in range(n) for j in range(n)])

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        flat = []
        for r in rows:
            if len(r) != nc:
                raise DimensionMismatch("ragged row lengths")
            flat.extend(qi(x) for x in r)
        return cls(nr, nc, flat)

    @classmethod
    def column(cls, values: Sequence) -> "Matrix":
        return cls(len(values), 1, [qi(v) for v in values])

    @classmethod
    def diagonal(cls, values: Sequence) -> "Matrix":
        n = len(values)
        m = [ZERO] * (n * n)
        for j, v in enumerate(values):
            m[j * n + j] = qi(v)
        return cls(n, n, m)

    # -- access ---------------------------------------------------------

    def __getitem__(self, ij: Tuple[int, int]) -> QI:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row_list(self, i: int) -> List[QI]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def col_matrix(self, j: int) -> "Matrix":
        return Matrix(self.rows, 1, [self[i, j] for i in range(self.rows)])

    def to_rows(self) -> List[List[QI]]:
        return [self.row_list(i) for i in range(self.rows)]

    # -- arithmetic -----------------------------------------------------

    def _check_same_shape(self, other: "Matrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch(
                f"shape {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols,
                      [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols,
                      [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, s) -> "Matrix":
        s = qi(s)
        return Matrix(self.rows, self.cols, [s * a for a in self.entries])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        n, m, p = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = [ZERO] * (n * p)
        for i in range(n):
            ia = i * m
            for l in range(m):
                x = a[ia + l]
                if x.is_zero():
                    continue
                ib = l * p
                io = i * p
                for j in range(p):
                    y = b[ib + j]
                    if not y.is_zero():
                        out[io + j] = out[io + j] + x * y
        return Matrix(n, p, out)

    def __pow__(self, n: int) -> "Matrix":
        if self.rows != self.cols:
            raise NonSquareMatrix("matrix power needs a square matrix")
        result = Matrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base if n > 1 else base
            n >>= 1
        return result

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [self[i, j] for j in range(self.cols)
                       for i in range(self.rows)])

    def trace(self) -> QI:
        if self.rows != self.cols:
            raise NonSquareMatrix("trace needs a square matrix")
        t = ZERO
        for i in range(self.rows):
            t = t + self[i, i]
        return t

    # -- predicates -----------------------------------------------------

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_upper_triangular(self) -> bool:
        return all(self[i, j].is_zero()
                   for i in range(self.rows)
                   for j in range(min(i, self.cols)))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) \
            and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(
            ", ".join(repr(e) for e in self.row_list(i))
            for i in range(self.rows))
        return f"Matrix[{self.rows}x{self.cols}: {body}]"


def hstack(mats: Iterable[Matrix]) -> Matrix:
    mats = list(mats)
    if not mats:
        raise DimensionMismatch("hstack of nothing")
    rows = mats[0].rows
    if any(m.rows != rows for m in mats):
        raise DimensionMismatch("hstack with differing row counts")
    out = []
    for i in range(rows):
        for m in mats:
            out.extend(m.row_list(i))
    return Matrix(rows, sum(m.cols for m in mats), out)


def vstack(mats: Iterable[Matrix]) -> Matrix:
    mats = list(mats)
    if not mats:
        raise DimensionMismatch("vstack of nothing")
    cols = mats[0].cols
    if any(m.cols != cols for m in mats):
        raise DimensionMismatch("vstack with differing column counts")
    out = []
    for m in mats:
        out.extend(m.entries)
    return Matrix(sum(m.rows for m in mats), cols, out)


def block(rows_of_blocks: Sequence[Sequence[Matrix]]) -> Matrix:
    return vstack([hstack(row) for row in rows_of_blocks])


# -- elimination --------------------------------------------------------

def rref(M: Matrix) -> Tuple[Matrix, Tuple[int, ...]]:
    """Reduced row echelon form and pivot columns (Gauss-Jordan, exact)."""
    rows = [M.row_list(i) for i in range(M.rows)]
    nr, nc = M.rows, M.cols
    pivots = []
    pr = 0
    for pc in range(nc):
        pivot_row = None
        for i in range(pr, nr):
            if not rows[i][pc].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[pr], rows[pivot_row] = rows[pivot_row], rows[pr]
        inv = rows[pr][pc].inverse()
        rows[pr] = [inv * x for x in rows[pr]]
        for i in range(nr):
            if i == pr:
                continue
            f = rows[i][pc]
            if f.is_zero():
                continue
            rows[i] = [x - f * y for x, y in zip(rows[i], rows[pr])]
        pivots.append(pc)
        pr += 1
        if pr == nr:
            break
    flat = [x for r in rows for x in r]
    return Matrix(nr, nc, flat), tuple(pivots)


def rank(M: Matrix) -> int:
    return len(rref(M)[1])


def solve(A: Matrix, B: Matrix) -> Optional[Matrix]:
    """A particular exact solution X of ``A X = B``, or None if inconsistent."""
    if A.rows != B.rows:
        raise DimensionMismatch("solve with mismatched row counts")
    R, pivots = rref(hstack([A, B]))
    # Any pivot landing in the B-block signals inconsistency.
    if any(p >= A.cols for p in pivots):
        return None
    X = [[ZERO] * B.cols for _ in range(A.cols)]
    for r, p in enumerate(pivots):
        for j in range(B.cols):
            X[p][j] = R[r, A.cols + j]
    return Matrix(A.cols, B.cols, [x for row in X for x in row])


def inverse(A: Matrix) -> Optional[Matrix]:
    if not A.is_square():
        raise NonSquareMatrix("inverse needs a square matrix")
    R, pivots = rref(hstack([A, Matrix.identity(A.rows)]))
    # Singular A pushes pivots into the identity block; require them to
    # be exactly the A-columns.
    if tuple(pivots[:A.rows]) != tuple(range(A.rows)) or len(pivots) != A.rows:
        return None
    return Matrix(A.rows, A.rows,
                  [R[i, A.cols + j] for i in range(A.rows)
                   for j in range(A.rows)])


# -- subspaces ----------------------------------------------------------

class Subspace:
    """A subspace of Q(i)^n held as a reduced-column-echelon basis.

    The echelon form (pivots in increasing row order, pivot entries 1,
    zeros elsewhere in pivot rows) is a canonical representative, so two
    Subspace values are equal iff they are the same subspace.
    """

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: Matrix):
        if basis.rows != ambient_dim:
            raise DimensionMismatch("basis rows must equal ambient dimension")
        self.ambient_dim = ambient_dim
        self.basis = basis

    @classmethod
    def from_span(cls, columns: Matrix) -> "Subspace":
        """Canonicalize the span of the given columns."""
        R, pivots = rref(columns.transpose())
        rows = [R.row_list(i) for i in range(len(pivots))]
        if rows:
            basis = Matrix(len(rows), columns.rows,
                           [x for r in rows for x in r]).transpose()
        else:
            basis = Matrix.zeros(columns.rows, 0)
        return cls(columns.rows, basis)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, Matrix.zeros(n, 0))

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, Matrix.identity(n))

    @property
    def dim(self) -> int:
        return self.basis.cols

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def contains(self, v: Matrix) -> bool:
        if v.rows != self.ambient_dim or v.cols != 1:
            raise DimensionMismatch("vector shape mismatch")
        return solve(self.basis, v) is not None

    def contains_space(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch("ambient dimension mismatch")
        return solve(self.basis, other.basis) is not None

    def sum(self, other: "Subspace") -> "Subspace":
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch("ambient dimension mismatch")
        return Subspace.from_span(hstack([self.basis, other.basis]))

    def annihilator(self) -> "Subspace":
        """All u with u^T v = 0 for every v in the space (bilinear pairing)."""
        return kernel_basis(self.basis.transpose())

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient_dim})"


def kernel_basis(M: Matrix) -> Subspace:
    """Canonical basis of the right kernel of M."""
    R, pivots = rref(M)
    pivset = set(pivots)
    free = [j for j in range(M.cols) if j not in pivset]
    cols = []
    for f in free:
        v = [ZERO] * M.cols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -R[r, f]
        cols.append(v)
    if cols:
        B = Matrix(len(cols), M.cols, [x for c in cols for x in c]).transpose()
    else:
        B = Matrix.zeros(M.cols, 0)
    return Subspace.from_span(B)


def column_space(M: Matrix) -> Subspace:
    return Subspace.from_span(M)
