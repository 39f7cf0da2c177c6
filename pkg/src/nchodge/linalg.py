"""Exact linear algebra over the rationals.

Everything downstream reduces to kernels, images and quotients of matrices
with Fraction entries.  Matrices are immutable and dense (row-major tuples);
vectors are tuples of Fractions.  All elimination follows a fixed first-pivot
rule (leftmost available column, topmost available row), so every basis this
module hands out is deterministic for a given input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import CompositionNonzero, DimensionMismatch

Vector = tuple[Fraction, ...]


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot coerce {value!r} to an exact rational")


def vector(entries: Iterable) -> Vector:
    return tuple(_frac(x) for x in entries)


def zero_vector(length: int) -> Vector:
    return (Fraction(0),) * length


def add_vectors(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths {len(u)} and {len(v)} differ")
    return tuple(a + b for a, b in zip(u, v))


def scale_vector(c, v: Vector) -> Vector:
    c = _frac(c)
    return tuple(c * a for a in v)


def is_zero_vector(v: Vector) -> bool:
    return all(a == 0 for a in v)


class RationalMatrix:
    """Immutable dense matrix over Fraction.

    `ncols` must be passed explicitly when there are no rows; otherwise it is
    inferred and checked against every row.
    """

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        data = tuple(tuple(_frac(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            for row in data:
                if len(row) != width:
                    raise DimensionMismatch("ragged rows in matrix literal")
            if ncols is not None and ncols != width:
                raise DimensionMismatch(
                    f"declared {ncols} columns, rows have {width}"
                )
            ncols = width
        elif ncols is None:
            ncols = 0
        object.__setattr__(self, "rows", data)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RationalMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Vector], nrows: int) -> "RationalMatrix":
        for col in columns:
            if len(col) != nrows:
                raise DimensionMismatch("column length disagrees with nrows")
        return cls(
            [[col[i] for col in columns] for i in range(nrows)],
            ncols=len(columns),
        )

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalMatrix)
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.shape, self.rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"RationalMatrix({self.nrows}x{self.ncols}: {body})"

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            ncols=self.nrows,
        )

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> tuple[Vector, ...]:
        return tuple(self.column(j) for j in range(self.ncols))

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.ncols:
            raise DimensionMismatch(
                f"matrix has {self.ncols} columns, vector has {len(v)}"
            )
        v = vector(v)
        return tuple(
            sum((row[i] * v[i] for i in range(self.ncols)), Fraction(0))
            for row in self.rows
        )

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch(
                f"cannot compose {self.shape} with {other.shape}"
            )
        cols = other.ncols
        return RationalMatrix(
            [
                [
                    sum(
                        (self.rows[i][k] * other.rows[k][j] for k in range(self.ncols)),
                        Fraction(0),
                    )
                    for j in range(cols)
                ]
                for i in range(self.nrows)
            ],
            ncols=cols,
        )

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return RationalMatrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ],
            ncols=self.ncols,
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self + other.scale(-1)

    def __neg__(self) -> "RationalMatrix":
        return self.scale(-1)

    def scale(self, c) -> "RationalMatrix":
        c = _frac(c)
        return RationalMatrix(
            [[c * x for x in row] for row in self.rows], ncols=self.ncols
        )

    def hstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.nrows != other.nrows:
            raise DimensionMismatch("hstack needs equal row counts")
        return RationalMatrix(
            [r1 + r2 for r1, r2 in zip(self.rows, other.rows)],
            ncols=self.ncols + other.ncols,
        )


@dataclass(frozen=True)
class ReducedMatrix:
    """Reduced row echelon data of a matrix.

    `image` is the tuple of original matrix columns at the pivot positions,
    `kernel` the standard free-variable basis; both inherit the first-pivot
    determinism of the elimination.
    """

    matrix: RationalMatrix
    rref: RationalMatrix
    rank: int
    pivots: tuple[int, ...]
    kernel: tuple[Vector, ...]
    image: tuple[Vector, ...]


def reduce(matrix: RationalMatrix) -> ReducedMatrix:
    rows = [list(row) for row in matrix.rows]
    nrows, ncols = matrix.nrows, matrix.ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    rank = len(pivots)
    pivot_set = set(pivots)
    kernel = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for i, p in enumerate(pivots):
            vec[p] = -rows[i][free]
        kernel.append(tuple(vec))
    image = tuple(matrix.column(p) for p in pivots)
    return ReducedMatrix(
        matrix=matrix,
        rref=RationalMatrix(rows, ncols=ncols),
        rank=rank,
        pivots=tuple(pivots),
        kernel=tuple(kernel),
        image=image,
    )


def rank(matrix: RationalMatrix) -> int:
    return reduce(matrix).rank


class EchelonSpan:
    """Incremental row-echelon accumulator for span/independence queries."""

    def __init__(self, length: int):
        self.length = length
        self._rows: list[tuple[int, list[Fraction]]] = []

    def _residual(self, v: Sequence) -> list[Fraction]:
        if len(v) != self.length:
            raise DimensionMismatch("vector length disagrees with span arity")
        work = [_frac(x) for x in v]
        for pivot, row in self._rows:
            if work[pivot] != 0:
                factor = work[pivot]
                work = [x - factor * y for x, y in zip(work, row)]
        return work

    def add(self, v: Sequence) -> bool:
        """Add `v` to the span; True iff it was independent of the span."""
        work = self._residual(v)
        for pivot in range(self.length):
            if work[pivot] != 0:
                inv = Fraction(1) / work[pivot]
                normalized = [x * inv for x in work]
                self._rows.append((pivot, normalized))
                self._rows.sort(key=lambda item: item[0])
                return True
        return False

    def contains(self, v: Sequence) -> bool:
        return all(x == 0 for x in self._residual(v))

    @property
    def rank(self) -> int:
        return len(self._rows)


def solve(matrix: RationalMatrix, rhs: Sequence) -> Vector | None:
    """One solution of `matrix @ x = rhs` (free variables zero), or None."""
    if len(rhs) != matrix.nrows:
        raise DimensionMismatch("right-hand side length disagrees with matrix")
    augmented = matrix.hstack(RationalMatrix.from_columns([vector(rhs)], matrix.nrows))
    red = reduce(augmented)
    if matrix.ncols in red.pivots:
        return None
    x = [Fraction(0)] * matrix.ncols
    for i, p in enumerate(red.pivots):
        x[p] = red.rref.rows[i][matrix.ncols]
    return tuple(x)


@dataclass(frozen=True)
class CohomologySpace:
    """ker/im data of one spot in a cochain complex.

    `representatives` extend the boundary space to the cycle space; they are
    actual cycles, chosen deterministically from the kernel basis.
    """

    dim: int
    representatives: tuple[Vector, ...]
    cycles: tuple[Vector, ...]
    boundaries: tuple[Vector, ...]

    def contains_boundary(self, v: Sequence) -> bool:
        span = EchelonSpan(len(v))
        for b in self.boundaries:
            span.add(b)
        return span.contains(v)


def cohomology_at(d_in: RationalMatrix, d_out: RationalMatrix) -> CohomologySpace:
    """Cohomology at the middle of  src --d_in--> here --d_out--> dst."""
    if d_in.nrows != d_out.ncols:
        raise DimensionMismatch(
            f"incoming target {d_in.nrows} disagrees with outgoing source {d_out.ncols}"
        )
    if d_in.ncols > 0 and d_out.nrows > 0:
        if not (d_out @ d_in).is_zero():
            raise CompositionNonzero(
                "consecutive differentials do not compose to zero"
            )
    cycles = reduce(d_out).kernel
    boundaries = reduce(d_in).image
    n = d_in.nrows
    span = EchelonSpan(n)
    for b in boundaries:
        span.add(b)
    representatives = tuple(c for c in cycles if span.add(c))
    return CohomologySpace(
        dim=len(representatives),
        representatives=representatives,
        cycles=cycles,
        boundaries=boundaries,
    )


def pairing_perfect(matrix: RationalMatrix) -> bool:
    """True iff the bilinear pairing encoded by `matrix` is perfect."""
    return matrix.nrows == matrix.ncols and reduce(matrix).rank == matrix.nrows
