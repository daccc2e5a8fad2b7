"""
Exact integer linear algebra: matrices, Smith normal forms, kernels and primitivity.

All integers are Python integers, so nothing overflows. Rational elimination is done over
the sympy domain QQ and converted back to fractions.Fraction at the boundary.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form

from .errors import ComputationError, ToricError, ValidationError

IntVector = Tuple[int, ...]
RationalVector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class IntMatrix():
    """An immutable integer matrix stored in row-major order.

    Attributes:
        rows: Number of rows.
        cols: Number of columns.
        entries: All entries in row-major order.
    """

    rows: int
    cols: int
    entries: IntVector

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0 or self.rows * self.cols != len(self.entries):
            raise ValidationError(
                ToricError.Code.SHAPE_MISMATCH,
                '{0}x{1} matrix cannot hold {2} entries'.format(self.rows, self.cols,
                                                                 len(self.entries)))

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> 'IntMatrix':
        """Build a matrix from a list of rows.

        Args:
            rows: The rows.
            cols: The column count, only needed when there is no row.

        Returns:
            The matrix.
        """
        ncols = len(rows[0]) if rows else (cols or 0)
        if any(len(row) != ncols for row in rows):
            raise ValidationError(ToricError.Code.SHAPE_MISMATCH, 'ragged rows')
        return IntMatrix(len(rows), ncols, tuple(int(e) for row in rows for e in row))

    @staticmethod
    def from_columns(columns: Sequence[Sequence[int]], rows: int) -> 'IntMatrix':
        """Build a matrix whose columns are the given vectors.

        Args:
            columns: The column vectors.
            rows: The row count.

        Returns:
            The matrix.
        """
        return IntMatrix.from_rows([[col[i] for col in columns] for i in range(rows)],
                                   len(columns))

    @staticmethod
    def identity(size: int) -> 'IntMatrix':
        """The identity matrix."""
        return IntMatrix.from_rows([[int(i == j) for j in range(size)] for i in range(size)],
                                   size)

    def __getitem__(self, index: Tuple[int, int]) -> int:
        row, col = index
        return self.entries[row * self.cols + col]

    def row(self, idx: int) -> IntVector:
        """Get a row as a tuple."""
        return self.entries[idx * self.cols:(idx + 1) * self.cols]

    def col(self, idx: int) -> IntVector:
        """Get a column as a tuple."""
        return tuple(self.entries[r * self.cols + idx] for r in range(self.rows))

    def to_rows(self) -> List[List[int]]:
        """Get a mutable copy as a list of rows."""
        return [list(self.row(r)) for r in range(self.rows)]

    def transpose(self) -> 'IntMatrix':
        """The transposed matrix."""
        return IntMatrix.from_rows([list(self.col(c)) for c in range(self.cols)], self.rows)

    def __matmul__(self, other: 'IntMatrix') -> 'IntMatrix':
        if self.cols != other.rows:
            raise ValidationError(
                ToricError.Code.SHAPE_MISMATCH,
                'cannot multiply {0}x{1} by {2}x{3}'.format(self.rows, self.cols, other.rows,
                                                           other.cols))
        other_cols = [other.col(c) for c in range(other.cols)]
        return IntMatrix.from_rows(
            [[sum(a * b for a, b in zip(self.row(r), col)) for col in other_cols]
             for r in range(self.rows)], other.cols)

    def apply(self, vec: Sequence[int]) -> IntVector:
        """Multiply the matrix by a column vector."""
        if len(vec) != self.cols:
            raise ValidationError(ToricError.Code.SHAPE_MISMATCH,
                                  'vector of length {0} for {1} columns'.format(
                                      len(vec), self.cols))
        return tuple(sum(a * b for a, b in zip(self.row(r), vec)) for r in range(self.rows))

    def to_domain(self) -> DomainMatrix:
        """Convert to a sympy domain matrix over ZZ."""
        return DomainMatrix([[ZZ(e) for e in self.row(r)] for r in range(self.rows)],
                            (self.rows, self.cols), ZZ)

    def det(self) -> int:
        """The determinant of a square matrix."""
        if self.rows != self.cols:
            raise ValidationError(ToricError.Code.SHAPE_MISMATCH, 'determinant of non-square')
        if self.rows == 0:
            return 1
        return int(self.to_domain().det())

    def rank(self) -> int:
        """The rank over the rationals."""
        if self.rows == 0 or self.cols == 0:
            return 0
        return int(self.to_domain().convert_to(QQ).rank())


@dataclass(frozen=True)
class SNFDecomposition():
    """The Smith normal form U * A * V = S.

    Attributes:
        U: Unimodular row transform (rows x rows).
        S: The diagonal form.
        V: Unimodular column transform (cols x cols).
    """

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> IntVector:
        """The diagonal entries d_1 | d_2 | ... of S."""
        return tuple(self.S[i, i] for i in range(min(self.S.rows, self.S.cols)))

    @property
    def rank(self) -> int:
        """The number of non-zero invariant factors."""
        return sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(mat: IntMatrix) -> SNFDecomposition:
    """Compute the Smith normal form with its unimodular transforms.

    The pivot is always the non-zero entry of smallest absolute value (first in row-major
    order on ties), so the decomposition is deterministic.

    Args:
        mat: A non-empty integer matrix.

    Returns:
        The decomposition with non-negative, successively dividing diagonal entries.
    """
    rows, cols = mat.rows, mat.cols
    if rows == 0 or cols == 0:
        raise ValidationError(ToricError.Code.SHAPE_MISMATCH, 'empty matrix has no SNF')

    smat = mat.to_rows()
    umat = IntMatrix.identity(rows).to_rows()
    vmat = IntMatrix.identity(cols).to_rows()

    def swap_rows(i: int, j: int) -> None:
        if i != j:
            smat[i], smat[j] = smat[j], smat[i]
            umat[i], umat[j] = umat[j], umat[i]

    def swap_cols(i: int, j: int) -> None:
        if i != j:
            for row in smat:
                row[i], row[j] = row[j], row[i]
            for row in vmat:
                row[i], row[j] = row[j], row[i]

    def add_row(dst: int, src: int, factor: int) -> None:
        # row[dst] += factor * row[src]
        for target in (smat, umat):
            target[dst] = [a + factor * b for a, b in zip(target[dst], target[src])]

    def add_col(dst: int, src: int, factor: int) -> None:
        # col[dst] += factor * col[src]
        for target in (smat, vmat):
            for row in target:
                row[dst] += factor * row[src]

    for t in range(min(rows, cols)):
        while True:
            candidates = [(abs(smat[i][j]), i, j) for i in range(t, rows) for j in range(t, cols)
                          if smat[i][j] != 0]
            if not candidates:
                break
            _, pi, pj = min(candidates)
            swap_rows(t, pi)
            swap_cols(t, pj)
            pivot = smat[t][t]

            # Clear the pivot column and row, remainders shrink the next pivot
            cleared = True
            for i in range(t + 1, rows):
                if smat[i][t] != 0:
                    add_row(i, t, -(smat[i][t] // pivot))
                    cleared = cleared and smat[i][t] == 0
            for j in range(t + 1, cols):
                if smat[t][j] != 0:
                    add_col(j, t, -(smat[t][j] // pivot))
                    cleared = cleared and smat[t][j] == 0
            if not cleared:
                continue

            # The pivot must divide the rest of the submatrix
            bad_row = next((i for i in range(t + 1, rows)
                            if any(smat[i][j] % pivot for j in range(t + 1, cols))), None)
            if bad_row is None:
                break
            add_row(t, bad_row, 1)

        if smat[t][t] < 0:
            smat[t] = [-e for e in smat[t]]
            umat[t] = [-e for e in umat[t]]

    return SNFDecomposition(IntMatrix.from_rows(umat, rows), IntMatrix.from_rows(smat, cols),
                            IntMatrix.from_rows(vmat, cols))


def hermite_basis(vectors: Sequence[Sequence[int]], length: int) -> List[IntVector]:
    """Reduce a generating set of a lattice to its Hermite normal form basis.

    The generators become the columns of a matrix over ZZ whose column Hermite normal form
    is taken with sympy. The result only depends on the lattice, not on the generators.

    Args:
        vectors: Generators of the lattice.
        length: The ambient dimension.

    Returns:
        The canonical basis in the column order of the normal form.
    """
    nonzero = [tuple(v) for v in vectors if any(v)]
    if not nonzero:
        return []
    mat = DomainMatrix([[ZZ(v[i]) for v in nonzero] for i in range(length)],
                       (length, len(nonzero)), ZZ)
    hnf = hermite_normal_form(mat)
    entries = hnf.to_list()
    return [tuple(int(entries[i][j]) for i in range(length)) for j in range(hnf.shape[1])]


def kernel_basis(mat: IntMatrix) -> List[IntVector]:
    """Compute a canonical basis of the saturated integer kernel {v : A v = 0}.

    Args:
        mat: A non-empty integer matrix.

    Returns:
        The Hermite basis of the kernel lattice (empty if the kernel is trivial).
    """
    snf = smith_normal_form(mat)
    raw = [snf.V.col(j) for j in range(snf.rank, mat.cols)]
    return hermite_basis(raw, mat.cols)


def is_primitive(vec: Sequence[int]) -> bool:
    """Check if the gcd of the entries is one.

    Args:
        vec: A non-zero integer vector.

    Returns:
        True if the vector is primitive.
    """
    if len(vec) == 0 or not any(vec):
        raise ValidationError(ToricError.Code.ZERO_VECTOR, 'zero vector has no content')
    return reduce(gcd, (abs(e) for e in vec)) == 1


def content(vec: Sequence[int]) -> int:
    """The gcd of the entries (0 for the zero vector)."""
    return reduce(gcd, (abs(e) for e in vec), 0)


def inverse_unimodular(mat: IntMatrix) -> IntMatrix:
    """Invert a unimodular matrix exactly.

    Args:
        mat: A square matrix with determinant +1 or -1.

    Returns:
        The integer inverse.
    """
    if mat.rows != mat.cols or abs(mat.det()) != 1:
        raise ComputationError(ToricError.Code.SHAPE_MISMATCH, 'matrix is not unimodular')
    inverse = mat.to_domain().convert_to(QQ).inv().to_list()
    return IntMatrix.from_rows([[int(to_fraction(e)) for e in row] for row in inverse],
                               mat.cols)


def to_fraction(elem) -> Fraction:
    """Convert a sympy QQ/ZZ domain element to a fraction."""
    return Fraction(int(elem.numerator), int(elem.denominator))


def to_qq(value) -> object:
    """Convert an integer or a fraction to a sympy QQ domain element."""
    frac = Fraction(value)
    return QQ(frac.numerator, frac.denominator)


def solve_rational(columns: Sequence[Sequence[int]],
                   target: Sequence[Fraction]) -> Optional[RationalVector]:
    """Solve sum_j x_j * columns[j] = target for linearly independent columns.

    Args:
        columns: Linearly independent integer vectors.
        target: The right-hand side.

    Returns:
        The unique coefficients, or None if the target is outside the span.
    """
    length = len(target)
    if not columns:
        return () if not any(target) else None

    augmented = DomainMatrix([[to_qq(col[i]) for col in columns] + [to_qq(target[i])]
                              for i in range(length)], (length, len(columns) + 1), QQ)
    reduced, pivots = augmented.rref()
    if len(columns) in pivots:
        return None
    if tuple(pivots) != tuple(range(len(columns))):
        raise ComputationError(ToricError.Code.SHAPE_MISMATCH, 'columns are dependent')
    rows = reduced.to_list()
    return tuple(to_fraction(rows[j][len(columns)]) for j in range(len(columns)))


def rational_rank(vectors: Sequence[Sequence[int]], length: int) -> int:
    """The dimension of the span of the given vectors."""
    if not vectors:
        return 0
    return IntMatrix.from_rows(vectors, length).rank()
